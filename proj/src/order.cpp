#include "ordcalc/order.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "ordcalc/bar.hpp"

namespace ord {
namespace {

struct PtrPairHash {
  std::size_t operator()(const std::pair<TermPtr, TermPtr>& p) const {
    auto a = reinterpret_cast<std::uintptr_t>(p.first);
    auto b = reinterpret_cast<std::uintptr_t>(p.second);
    return std::hash<std::uintptr_t>{}(a * 0x9e3779b97f4a7c15ull ^ b);
  }
};

using CmpMemo = std::unordered_map<std::pair<TermPtr, TermPtr>, Cmp, PtrPairHash>;

CmpMemo& cmp_memo() {
  thread_local CmpMemo memo;
  return memo;
}

Cmp flip(Cmp c) { return static_cast<Cmp>(-static_cast<int>(c)); }

// Both arguments are collapses of the same system.
Cmp compare_principal(TermPtr a, TermPtr b) {
  if (a == b) return Cmp::EQ;
  if (a->level != b->level)
    return a->level < b->level ? Cmp::LT : Cmp::GT;
  int j = a->level;
  Cmp c = compare(a->arg, b->arg);
  if (c == Cmp::EQ) return Cmp::EQ;  // unreachable: interning makes args equal terms
  if (c == Cmp::LT)
    return lt(star_of(a->arg, j, a->sys), b) ? Cmp::LT : Cmp::GT;
  return lt(star_of(b->arg, j, b->sys), a) ? Cmp::GT : Cmp::LT;
}

std::vector<TermPtr> principal_parts(TermPtr a) {
  if (a->kind == Kind::Sum) return a->parts;
  return {a};
}

}  // namespace

Cmp compare(TermPtr a, TermPtr b) {
  if (a == b) return Cmp::EQ;
  if (a->kind == Kind::Zero) return Cmp::LT;
  if (b->kind == Kind::Zero) return Cmp::GT;
  if (a->sys != b->sys)
    throw DomainError("cannot compare terms from different systems");

  auto key = std::make_pair(a, b);
  auto& memo = cmp_memo();
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  Cmp result;
  if (a->kind == Kind::Collapse && b->kind == Kind::Collapse) {
    result = compare_principal(a, b);
  } else {
    auto pa = principal_parts(a);
    auto pb = principal_parts(b);
    std::size_t n = std::min(pa.size(), pb.size());
    result = Cmp::EQ;
    for (std::size_t k = 0; k < n; ++k) {
      Cmp c = compare(pa[k], pb[k]);
      if (c != Cmp::EQ) {
        result = c;
        break;
      }
    }
    if (result == Cmp::EQ && pa.size() != pb.size())
      result = pa.size() < pb.size() ? Cmp::LT : Cmp::GT;
  }

  memo.emplace(key, result);
  memo.emplace(std::make_pair(b, a), flip(result));
  return result;
}

namespace {

bool valid_parts_decreasing(const std::vector<TermPtr>& parts) {
  for (std::size_t k = 0; k + 1 < parts.size(); ++k)
    if (compare(parts[k], parts[k + 1]) == Cmp::LT) return false;
  return true;
}

}  // namespace

bool valid_T(TermPtr a) {
  thread_local std::unordered_set<TermPtr> ok;
  if (a->kind == Kind::Zero) return true;
  if (ok.count(a)) return true;
  bool good = false;
  switch (a->kind) {
    case Kind::Zero:
      good = true;
      break;
    case Kind::Collapse: {
      if (a->sys != Sys::Step) return false;
      if (!valid_T(a->arg)) return false;
      good = true;
      for (TermPtr p : principal_parts(a->arg)) {
        if (p->kind == Kind::Zero) continue;
        if (p->level > a->level + 1) {
          good = false;
          break;
        }
      }
      break;
    }
    case Kind::Sum: {
      if (a->sys != Sys::Step) return false;
      if (a->parts.size() < 2) return false;
      good = true;
      for (TermPtr p : a->parts) {
        if (p->kind != Kind::Collapse || !valid_T(p)) {
          good = false;
          break;
        }
      }
      if (good) good = valid_parts_decreasing(a->parts);
      break;
    }
  }
  if (good) ok.insert(a);
  return good;
}

TermPtr star(TermPtr a, int j) {
  switch (a->kind) {
    case Kind::Zero:
      return zero();
    case Kind::Sum: {
      TermPtr best = zero();
      for (TermPtr p : a->parts) best = max_term(best, star(p, j));
      return best;
    }
    case Kind::Collapse:
      if (a->level < j) return zero();
      if (a->level == j) return a;
      return star(a->arg, j);
  }
  return zero();
}

namespace {

void collect_p(TermPtr a, int i, std::vector<TermPtr>& out) {
  switch (a->kind) {
    case Kind::Zero:
      return;
    case Kind::Sum:
      for (TermPtr p : a->parts) collect_p(p, i, out);
      return;
    case Kind::Collapse:
      if (a->level < i) return;
      if (a->level == i) out.push_back(a);
      collect_p(a->arg, i, out);
      return;
  }
}

}  // namespace

std::vector<TermPtr> P_set(TermPtr a, int i) {
  std::vector<TermPtr> out;
  collect_p(a, i, out);
  std::sort(out.begin(), out.end(),
            [](TermPtr x, TermPtr y) { return lt(x, y); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool fixpoint_F(TermPtr delta, TermPtr eta, int j) {
  if (eta->kind != Kind::Collapse || eta->level != j) return false;
  Sys sys = eta->sys;
  if (auto ds = system_of(delta); ds && *ds != sys)
    throw DomainError("fixed-point test across systems");
  if (sys == Sys::Sim && !in_dom(delta, j)) return false;
  TermPtr gamma = delta_full(eta->arg, j);
  return gt(gamma, delta) && gt(eta, star_of(delta, j, sys));
}

TermPtr alpha_plus(TermPtr a) {
  if (a->kind != Kind::Collapse)
    throw DomainError("successor step needs a collapse term");
  return collapse(a->sys, a->level, make_sum(a->arg, one(a->sys)));
}

LocalizationSeq localization(TermPtr a, int i) {
  if (a->kind != Kind::Collapse || a->level != i)
    throw DomainError("localization needs a collapse term of the given level");
  thread_local std::unordered_map<TermPtr, LocalizationSeq> memo;
  if (auto it = memo.find(a); it != memo.end()) return it->second;

  LocalizationSeq seq;
  seq.level = i;
  TermPtr seed = omega_level(a->sys, i);
  seq.entries.push_back(seed);
  if (a != seed) {
    auto candidates = P_set(a, i);
    TermPtr cur = seed;
    while (cur != a) {
      TermPtr best = nullptr;
      for (TermPtr p : candidates) {
        if (!gt(p, cur)) continue;
        if (!best) {
          best = p;
          continue;
        }
        Cmp c = compare(p->arg, best->arg);
        if (c == Cmp::EQ)
          throw InternalError("localization step is not unique");
        if (c == Cmp::GT) best = p;
      }
      if (!best) throw InternalError("localization climb cannot reach the term");
      seq.entries.push_back(best);
      cur = best;
    }
  }
  memo.emplace(a, seq);
  return seq;
}

}  // namespace ord
