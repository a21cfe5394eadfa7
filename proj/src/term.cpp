#include "ordcalc/term.hpp"

#include <cctype>
#include <cstring>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

namespace ord {

namespace {

constexpr std::uint64_t kDecimalCap = 1'000'000;
constexpr int kLevelCap = 10'000;
constexpr std::uint64_t kNatTermCap = 10'000'000;

std::size_t hash_mix(std::size_t h, std::size_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::size_t term_hash(Kind kind, Sys sys, int level, TermPtr arg,
                      const std::vector<TermPtr>& parts) {
  std::size_t h = static_cast<std::size_t>(kind);
  if (kind == Kind::Collapse) {
    h = hash_mix(h, static_cast<std::size_t>(sys));
    h = hash_mix(h, static_cast<std::size_t>(level));
    h = hash_mix(h, reinterpret_cast<std::size_t>(arg));
  } else if (kind == Kind::Sum) {
    for (TermPtr p : parts) h = hash_mix(h, reinterpret_cast<std::size_t>(p));
  }
  return h;
}

struct TermPtrHash {
  std::size_t operator()(TermPtr t) const { return t->hash; }
};

struct TermPtrEq {
  bool operator()(TermPtr a, TermPtr b) const {
    if (a->kind != b->kind) return false;
    switch (a->kind) {
      case Kind::Zero:
        return true;
      case Kind::Collapse:
        return a->sys == b->sys && a->level == b->level && a->arg == b->arg;
      case Kind::Sum:
        return a->parts == b->parts;
    }
    return false;
  }
};

class Interner {
 public:
  TermPtr intern(Kind kind, Sys sys, int level, TermPtr arg, std::vector<TermPtr> parts) {
    auto cand = std::make_unique<Term>();
    cand->kind = kind;
    cand->sys = sys;
    cand->level = level;
    cand->arg = arg;
    cand->parts = std::move(parts);
    cand->hash = term_hash(kind, sys, level, arg, cand->parts);
    fill_derived(*cand);

    std::lock_guard<std::mutex> lock(mu_);
    auto it = table_.find(cand.get());
    if (it != table_.end()) return *it;
    TermPtr stored = cand.get();
    arena_.push_back(std::move(cand));
    table_.insert(stored);
    return stored;
  }

 private:
  static void fill_derived(Term& t) {
    switch (t.kind) {
      case Kind::Zero:
        t.nodes = 1;
        t.top_level = -1;
        t.nat = true;
        t.nat_value = 0;
        break;
      case Kind::Collapse:
        t.nodes = t.arg->nodes + 1;
        t.top_level = std::max(t.level, t.arg->top_level);
        t.nat = (t.level == 0 && t.arg->kind == Kind::Zero);
        t.nat_value = t.nat ? 1 : 0;
        break;
      case Kind::Sum: {
        std::uint64_t n = 1;
        int lv = -1;
        bool nat = true;
        for (TermPtr p : t.parts) {
          n += p->nodes;
          lv = std::max(lv, p->top_level);
          nat = nat && p->nat && p->nat_value == 1;
        }
        t.nodes = static_cast<std::uint32_t>(std::min<std::uint64_t>(n, UINT32_MAX));
        t.top_level = lv;
        t.nat = nat;
        t.nat_value = nat ? t.parts.size() : 0;
        t.sys = t.parts.front()->sys;
        break;
      }
    }
  }

  std::mutex mu_;
  std::vector<std::unique_ptr<Term>> arena_;
  std::unordered_set<TermPtr, TermPtrHash, TermPtrEq> table_;
};

Interner& interner() {
  static Interner* g = new Interner();
  return *g;
}

}  // namespace

TermPtr zero() {
  static TermPtr z = interner().intern(Kind::Zero, Sys::Step, 0, nullptr, {});
  return z;
}

TermPtr collapse(Sys s, int level, TermPtr arg) {
  if (level < 0 || level > kLevelCap) throw DomainError("collapse level out of range");
  if (arg->kind != Kind::Zero) {
    auto as = system_of(arg);
    if (as && *as != s) throw DomainError("collapse argument from the other system");
  }
  return interner().intern(Kind::Collapse, s, level, arg, {});
}

TermPtr one(Sys s) { return collapse(s, 0, zero()); }

TermPtr omega_level(Sys s, int i) { return collapse(s, i, zero()); }

TermPtr sum_of(const std::vector<TermPtr>& parts) {
  if (parts.size() < 2) throw InternalError("sum_of needs at least two parts");
  Sys s = parts.front()->sys;
  for (TermPtr p : parts) {
    if (p->kind != Kind::Collapse) throw DomainError("sum parts must be additively principal");
    if (p->sys != s) throw DomainError("mixed-system sum");
  }
  return interner().intern(Kind::Sum, s, 0, nullptr, parts);
}

TermPtr make_sum(const std::vector<TermPtr>& parts) {
  std::vector<TermPtr> flat;
  for (TermPtr p : parts) {
    switch (p->kind) {
      case Kind::Zero:
        break;
      case Kind::Collapse:
        flat.push_back(p);
        break;
      case Kind::Sum:
        flat.insert(flat.end(), p->parts.begin(), p->parts.end());
        break;
    }
  }
  if (flat.empty()) return zero();
  Sys s = flat.front()->sys;
  for (TermPtr p : flat)
    if (p->sys != s) throw DomainError("mixed-system sum");
  std::vector<TermPtr> out;
  out.reserve(flat.size());
  for (TermPtr p : flat) {
    while (!out.empty() && compare(out.back(), p) == Cmp::LT) out.pop_back();
    out.push_back(p);
  }
  if (out.size() == 1) return out.front();
  return sum_of(out);
}

TermPtr make_sum(TermPtr a, TermPtr b) { return make_sum(std::vector<TermPtr>{a, b}); }

TermPtr make_sum(TermPtr a, TermPtr b, TermPtr c) {
  return make_sum(std::vector<TermPtr>{a, b, c});
}

TermPtr end_part(TermPtr a) {
  switch (a->kind) {
    case Kind::Zero:
    case Kind::Collapse:
      return a;
    case Kind::Sum:
      return a->parts.back();
  }
  return a;
}

TermPtr mc(TermPtr a) {
  switch (a->kind) {
    case Kind::Zero:
    case Kind::Collapse:
      return a;
    case Kind::Sum:
      return a->parts.front();
  }
  return a;
}

NumClass classify(TermPtr a) {
  switch (a->kind) {
    case Kind::Zero:
      return NumClass::Zero;
    case Kind::Collapse:
      return (a->level == 0 && a->arg->kind == Kind::Zero) ? NumClass::Successor
                                                           : NumClass::Limit;
    case Kind::Sum:
      return classify(a->parts.back());
  }
  return NumClass::Zero;
}

TermPtr pred(TermPtr a) {
  if (classify(a) != NumClass::Successor) throw DomainError("predecessor of a non-successor");
  if (a->kind == Kind::Collapse) return zero();
  std::vector<TermPtr> rest(a->parts.begin(), a->parts.end() - 1);
  if (rest.size() == 1) return rest.front();
  return sum_of(rest);
}

TermPtr nat_to_term(std::uint64_t n, Sys s) {
  if (n == 0) return zero();
  if (n > kNatTermCap) throw InternalError("finite term too large to materialize");
  if (n == 1) return one(s);
  thread_local std::unordered_map<std::uint64_t, TermPtr> cache[2];
  auto& slot = cache[s == Sys::Sim ? 1 : 0];
  if (auto it = slot.find(n); it != slot.end()) return it->second;
  std::vector<TermPtr> parts(static_cast<std::size_t>(n), one(s));
  TermPtr t = sum_of(parts);
  slot.emplace(n, t);
  return t;
}

std::optional<std::uint64_t> term_to_nat(TermPtr a) {
  if (a->nat) return a->nat_value;
  return std::nullopt;
}

std::optional<Sys> system_of(TermPtr a) {
  if (a->kind == Kind::Zero) return std::nullopt;
  return a->sys;
}

Sys system_or(TermPtr a, Sys fallback) {
  auto s = system_of(a);
  return s ? *s : fallback;
}

namespace {

template <typename Pred>
TermPtr filter_components(TermPtr t, Pred keep) {
  switch (t->kind) {
    case Kind::Zero:
      return zero();
    case Kind::Collapse:
      return keep(t) ? t : zero();
    case Kind::Sum: {
      std::vector<TermPtr> got;
      for (TermPtr p : t->parts)
        if (keep(p)) got.push_back(p);
      if (got.empty()) return zero();
      if (got.size() == 1) return got.front();
      return sum_of(got);
    }
  }
  return zero();
}

}  // namespace

SplitArg split_arg(TermPtr xi, int j) {
  SplitArg r;
  r.level = j;
  r.xi = filter_components(xi, [&](TermPtr p) { return p->level >= j + 2; });
  r.delta = filter_components(xi, [&](TermPtr p) { return p->level == j + 1; });
  r.eta = filter_components(xi, [&](TermPtr p) { return p->level <= j; });
  return r;
}

TermPtr delta_full(TermPtr arg, int j) {
  return filter_components(arg, [&](TermPtr p) { return p->level >= j + 1; });
}

TermPtr eta_lt(TermPtr arg, int j) {
  return filter_components(arg, [&](TermPtr p) { return p->level <= j; });
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, Sys sys) : text_(text), sys_(sys) {}

  TermPtr run() {
    TermPtr t = parse_term();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_digit() {
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::uint64_t parse_decimal(std::uint64_t cap, const char* what) {
    std::uint64_t v = 0;
    std::size_t start = pos_;
    while (at_digit()) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > cap) throw ParseError(std::string(what) + " overflow", start);
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return v;
  }

  char expected_tag() const { return sys_ == Sys::Step ? 't' : 'b'; }

  TermPtr parse_principal() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c != 't' && c != 'b') fail("expected a collapse tag 't' or 'b'");
    if (c != expected_tag()) fail(std::string("mixed-system input: expected tag '") + expected_tag() + "'");
    ++pos_;
    int level = static_cast<int>(parse_decimal(kLevelCap, "level"));
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != '(') fail("expected '('");
    ++pos_;
    TermPtr inner = parse_term();
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
    ++pos_;
    return collapse(sys_, level, inner);
  }

  TermPtr parse_term() {
    skip_ws();
    if (at_digit()) {
      std::uint64_t n = parse_decimal(kDecimalCap, "decimal sugar");
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '+') fail("decimal sugar cannot be a sum part");
      return nat_to_term(n, sys_);
    }
    std::vector<TermPtr> parts;
    parts.push_back(parse_principal());
    skip_ws();
    while (pos_ < text_.size() && text_[pos_] == '+') {
      ++pos_;
      parts.push_back(parse_principal());
      skip_ws();
    }
    return make_sum(parts);
  }

  std::string_view text_;
  Sys sys_;
  std::size_t pos_ = 0;
};

void print_into(TermPtr a, std::string& out) {
  switch (a->kind) {
    case Kind::Zero:
      out += '0';
      return;
    case Kind::Collapse:
      out += (a->sys == Sys::Step ? 't' : 'b');
      out += std::to_string(a->level);
      out += '(';
      print_into(a->arg, out);
      out += ')';
      return;
    case Kind::Sum:
      for (std::size_t i = 0; i < a->parts.size(); ++i) {
        if (i) out += '+';
        print_into(a->parts[i], out);
      }
      return;
  }
}

void subscript_into(int n, std::string& out) {
  static const char* digits[10] = {"₀", "₁", "₂", "₃", "₄",
                                   "₅", "₆", "₇", "₈", "₉"};
  std::string plain = std::to_string(n);
  for (char c : plain) out += digits[c - '0'];
}

void pretty_into(TermPtr a, std::string& out) {
  if (a->nat) {
    out += std::to_string(a->nat_value);
    return;
  }
  switch (a->kind) {
    case Kind::Zero:
      out += '0';
      return;
    case Kind::Collapse:
      out += "ϑ";
      if (a->sys == Sys::Sim) out += "̄";
      subscript_into(a->level, out);
      out += '(';
      pretty_into(a->arg, out);
      out += ')';
      return;
    case Kind::Sum:
      for (std::size_t i = 0; i < a->parts.size(); ++i) {
        if (i) out += " + ";
        pretty_into(a->parts[i], out);
      }
      return;
  }
}

}  // namespace

TermPtr parse(std::string_view text, Sys s) { return Parser(text, s).run(); }

std::string print(TermPtr a) {
  std::string out;
  print_into(a, out);
  return out;
}

std::string print_pretty(TermPtr a) {
  std::string out;
  pretty_into(a, out);
  return out;
}

TermPtr max_term(TermPtr a, TermPtr b) { return compare(a, b) == Cmp::LT ? b : a; }

}  // namespace ord
