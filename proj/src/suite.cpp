#include "ordcalc/suite.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "json.hpp"

#include "ordcalc/bar.hpp"
#include "ordcalc/fundseq.hpp"
#include "ordcalc/iso.hpp"
#include "ordcalc/norms.hpp"
#include "ordcalc/order.hpp"
#include "ordcalc/term.hpp"

namespace ord {
namespace {

std::string S(TermPtr t) { return print(t); }
std::string SN(std::uint64_t n) { return std::to_string(n); }

std::string join_terms(const std::vector<TermPtr>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += print(v[i]);
  }
  out += ")";
  return out;
}

const char* cmp_name(Cmp c) {
  switch (c) {
    case Cmp::LT: return "<";
    case Cmp::EQ: return "=";
    default: return ">";
  }
}

bool is_limit(TermPtr t) { return classify(t) == NumClass::Limit; }

TermPtr om(Sys s, int i) { return omega_level(s, i); }

std::vector<TermPtr> comps(TermPtr a) {
  if (a->kind == Kind::Zero) return {};
  if (a->kind == Kind::Sum) return a->parts;
  return {a};
}

// First index whose element is >= t.
std::size_t lower_idx(const std::vector<TermPtr>& u, TermPtr t) {
  std::size_t lo = 0, hi = u.size();
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (lt(u[mid], t)) lo = mid + 1; else hi = mid;
  }
  return lo;
}

// First index whose element is > t.
std::size_t upper_idx(const std::vector<TermPtr>& u, TermPtr t) {
  std::size_t lo = 0, hi = u.size();
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (leq(u[mid], t)) lo = mid + 1; else hi = mid;
  }
  return lo;
}

struct Fail {
  std::array<std::uint64_t, 3> key;
  Counterexample ce;
};

class Recorder {
 public:
  explicit Recorder(std::size_t cap) : cap_(cap) {}

  void count(std::uint64_t n = 1) { instances_ += n; }

  void fail(std::uint64_t k0, std::uint64_t k1, std::uint64_t k2,
            std::vector<std::string> inputs, std::string expected,
            std::string actual) {
    if (fails_.size() >= cap_) return;
    fails_.push_back(Fail{{k0, k1, k2},
                          Counterexample{std::move(inputs), std::move(expected),
                                         std::move(actual)}});
  }

  std::uint64_t instances_ = 0;
  std::vector<Fail> fails_;
  std::size_t cap_;
};

struct Ctx {
  const SuiteOptions& opt;
  const std::vector<TermPtr>& U;
  const std::vector<TermPtr>& UB;
  std::uint64_t instances = 0;
  std::vector<Fail> fails;

  std::size_t total() const { return U.size() + UB.size(); }
  TermPtr at(std::size_t i) const { return i < U.size() ? U[i] : UB[i - U.size()]; }
  bool step_side(std::size_t i) const { return i < U.size(); }
  const std::vector<TermPtr>& side(std::size_t i) const { return i < U.size() ? U : UB; }
  std::size_t base(std::size_t i) const { return i < U.size() ? 0 : U.size(); }

  // Runs body over [0, n). Shards are strided so per-thread failure keys come
  // out ascending, which keeps the merged, truncated list deterministic.
  void parallel(std::size_t n, const std::function<void(std::size_t, Recorder&)>& body) {
    if (n == 0) return;
    unsigned want = opt.threads ? opt.threads : std::thread::hardware_concurrency();
    if (want == 0) want = 1;
    std::size_t nt = std::min<std::size_t>(want, n);
    std::vector<Recorder> recs;
    recs.reserve(nt);
    for (std::size_t t = 0; t < nt; ++t) recs.emplace_back(opt.max_counterexamples);
    auto shard = [&](std::size_t t) {
      Recorder& rec = recs[t];
      for (std::size_t i = t; i < n; i += nt) {
        try {
          body(i, rec);
        } catch (const std::exception& e) {
          rec.count();
          rec.fail(i, ~0ull, ~0ull, {"item " + std::to_string(i)},
                   "no exception while checking", e.what());
        }
      }
    };
    if (nt == 1) {
      shard(0);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(nt);
      for (std::size_t t = 0; t < nt; ++t) pool.emplace_back(shard, t);
      for (auto& th : pool) th.join();
    }
    for (auto& rec : recs) {
      instances += rec.instances_;
      for (auto& f : rec.fails_) fails.push_back(std::move(f));
    }
  }
};

// Admissible rewrite parameters for a term: the finite ones up to the cap
// when the degree is zero, otherwise every universe term below the degree's
// uncountable.
std::vector<TermPtr> fs_params(const Ctx& c, Sys s, TermPtr a) {
  std::vector<TermPtr> out;
  int d = dom_ind(a);
  if (d == 0) {
    for (std::uint64_t n = 0; n <= c.opt.n_cap; ++n) out.push_back(nat_to_term(n, s));
  } else {
    const auto& u = s == Sys::Step ? c.U : c.UB;
    std::size_t hi = lower_idx(u, om(s, d));
    out.assign(u.begin(), u.begin() + hi);
  }
  return out;
}

// ---------------------------------------------------------------- term

void prop_term_roundtrip(Ctx& c) {
  c.parallel(c.total(), [&](std::size_t i, Recorder& rec) {
    TermPtr t = c.at(i);
    rec.count();
    if (c.step_side(i) ? !valid_T(t) : !valid_bar(t))
      rec.fail(i, 0, 0, {S(t)}, "well-formed universe element",
               "rejected by the validity check");
    std::string text = print(t);
    TermPtr back = parse(text, system_or(t, Sys::Step));
    rec.count();
    if (back != t)
      rec.fail(i, 1, 0, {text}, "same term after print and parse", S(back));
  });
}

void prop_term_sum_assoc(Ctx& c) {
  c.parallel(c.total(), [&](std::size_t i, Recorder& rec) {
    TermPtr a = c.at(i);
    rec.count();
    if (make_sum(a, zero()) != a || make_sum(zero(), a) != a)
      rec.fail(i, 0, 0, {S(a)}, "zero neutral on both sides",
               S(make_sum(a, zero())) + " / " + S(make_sum(zero(), a)));
    if (a->nodes > 6) return;
    const auto& u = c.side(i);
    TermPtr prev = nullptr;
    for (std::size_t j = 0; j < u.size(); ++j) {
      TermPtr s = make_sum(a, u[j]);
      rec.count();
      if (!(leq(a, s) && leq(u[j], s)))
        rec.fail(i, 1, j, {S(a), S(u[j])}, "sum bounds both arguments", S(s));
      if (prev != nullptr) {
        rec.count();
        if (!lt(prev, s))
          rec.fail(i, 2, j, {S(a), S(u[j - 1]), S(u[j])},
                   "sum strictly monotone in the right argument",
                   S(prev) + " !< " + S(s));
      }
      prev = s;
    }
  });
  std::vector<TermPtr> small;
  for (TermPtr t : c.U)
    if (t->kind != Kind::Zero && cnorm(t) <= 4) small.push_back(t);
  std::size_t off = c.total();
  c.parallel(small.size(), [&](std::size_t i, Recorder& rec) {
    for (std::size_t j = 0; j < small.size(); ++j) {
      TermPtr ab = make_sum(small[i], small[j]);
      for (std::size_t k = 0; k < small.size(); ++k) {
        rec.count();
        TermPtr l = make_sum(ab, small[k]);
        TermPtr r = make_sum(small[i], make_sum(small[j], small[k]));
        if (l != r)
          rec.fail(off + i, j, k, {S(small[i]), S(small[j]), S(small[k])},
                   "associative sum", S(l) + " vs " + S(r));
      }
    }
  });
}

void prop_term_classify(Ctx& c) {
  c.parallel(c.total(), [&](std::size_t i, Recorder& rec) {
    TermPtr t = c.at(i);
    Sys s = system_or(t, Sys::Step);
    NumClass k = classify(t);
    NumClass want = t->kind == Kind::Zero ? NumClass::Zero
                    : end_part(t) == one(s) ? NumClass::Successor
                                            : NumClass::Limit;
    rec.count();
    if (k != want)
      rec.fail(i, 0, 0, {S(t)}, "class from the last component",
               SN(static_cast<int>(k)) + " vs " + SN(static_cast<int>(want)));
    if (k == NumClass::Successor) {
      TermPtr p = pred(t);
      rec.count();
      if (make_sum(p, one(s)) != t || !lt(p, t))
        rec.fail(i, 1, 0, {S(t)}, "predecessor plus one restores the term", S(p));
    }
    auto v = term_to_nat(t);
    TermPtr w = collapse(s, 0, one(s));
    rec.count();
    bool fin = lt(t, w);
    if (fin != v.has_value() || (v.has_value() && nat_to_term(*v, s) != t))
      rec.fail(i, 2, 0, {S(t)}, "numeral exactly when finite",
               v.has_value() ? SN(*v) : std::string("none"));
  });
}

void prop_term_split(Ctx& c) {
  c.parallel(c.total(), [&](std::size_t i, Recorder& rec) {
    TermPtr t = c.at(i);
    Sys s = system_or(t, Sys::Step);
    for (int j = 0; j <= c.opt.max_level + 1; ++j) {
      SplitArg sp = split_arg(t, j);
      bool ok = lt(sp.eta, om(s, j + 1)) &&
                make_sum(sp.xi, sp.delta, sp.eta) == t &&
                delta_full(t, j) == make_sum(sp.xi, sp.delta) &&
                eta_lt(t, j) == sp.eta;
      for (TermPtr p : comps(sp.delta))
        ok = ok && p->kind == Kind::Collapse && p->level == j + 1;
      for (TermPtr p : comps(sp.xi))
        ok = ok && p->kind == Kind::Collapse && p->level >= j + 2;
      rec.count();
      if (!ok)
        rec.fail(i, 0, static_cast<std::uint64_t>(j), {S(t), SN(j)},
                 "clean level split",
                 S(sp.xi) + " | " + S(sp.delta) + " | " + S(sp.eta));
    }
  });
}

// ---------------------------------------------------------------- order

void prop_order_laws(Ctx& c) {
  c.parallel(c.total(), [&](std::size_t i, Recorder& rec) {
    TermPtr a = c.at(i);
    const auto& u = c.side(i);
    std::size_t ia = i - c.base(i);
    for (std::size_t j = 0; j < u.size(); ++j) {
      Cmp got = compare(a, u[j]);
      Cmp want = ia == j ? Cmp::EQ : ia < j ? Cmp::LT : Cmp::GT;
      rec.count();
      if (got != want)
        rec.fail(i, 0, j, {S(a), S(u[j])}, cmp_name(want), cmp_name(got));
    }
  });
}

void prop_order_segments(Ctx& c) {
  c.parallel(c.total(), [&](std::size_t i, Recorder& rec) {
    TermPtr t = c.at(i);
    if (t->kind == Kind::Zero) return;
    Sys s = system_or(t, Sys::Step);
    if (t->kind == Kind::Collapse) {
      rec.count();
      if (!(geq(t, om(s, t->level)) && lt(t, om(s, t->level + 1))))
        rec.fail(i, 0, 0, {S(t)}, "value inside its level segment", S(t));
      return;
    }
    for (std::size_t p = 0; p + 1 < t->parts.size(); ++p) {
      rec.count();
      if (!geq(t->parts[p], t->parts[p + 1]))
        rec.fail(i, 1, p, {S(t)}, "weakly decreasing components", S(t->parts[p + 1]));
    }
    rec.count();
    if (mc(t) != t->parts.front() || end_part(t) != t->parts.back())
      rec.fail(i, 2, 0, {S(t)}, "component accessors agree with the part list",
               S(mc(t)) + " / " + S(end_part(t)));
  });
}

void prop_order_pivotal(Ctx& c) {
  c.parallel(c.total(), [&](std::size_t i, Recorder& rec) {
    TermPtr t = c.at(i);
    if (t->kind != Kind::Collapse) return;
    TermPtr sv = star_of(t->arg, t->level, t->sys);
    rec.count();
    if (!lt(sv, t))
      rec.fail(i, 0, 0, {S(t)}, "argument star below the collapse", S(sv));
  });
}

void prop_order_star_sets(Ctx& c) {
  c.parallel(c.total(), [&](std::size_t i, Recorder& rec) {
    TermPtr t = c.at(i);
    Sys s = system_or(t, Sys::Step);
    for (int j = 0; j <= c.opt.max_level + 1; ++j) {
      if (c.step_side(i)) {
        auto P = P_set(t, j);
        rec.count();
        if (star(t, j) != (P.empty() ? zero() : P.back()))
          rec.fail(i, 0, static_cast<std::uint64_t>(j), {S(t), SN(j)},
                   "star is the maximum of the collected set",
                   S(star(t, j)) + " vs " + join_terms(P));
        for (std::size_t q = 0; q < P.size(); ++q) {
          rec.count();
          bool ok = P[q]->kind == Kind::Collapse && P[q]->level == j &&
                    (q == 0 || lt(P[q - 1], P[q]));
          if (!ok)
            rec.fail(i, 1, static_cast<std::uint64_t>(j) * 64 + q,
                     {S(t), SN(j)}, "sorted level-j collapses", S(P[q]));
        }
        if (t->kind != Kind::Zero && geq(t, om(s, j)) && lt(t, om(s, j + 1))) {
          rec.count();
          if (star(t, j) != mc(t))
            rec.fail(i, 2, static_cast<std::uint64_t>(j), {S(t), SN(j)},
                     "star of a segment term is its leading component",
                     S(star(t, j)));
        }
      } else {
        KSets ks = k_sets(t, j);
        rec.count();
        if (star_bar(t, j) != (ks.ktau.empty() ? zero() : ks.ktau.back()))
          rec.fail(i, 3, static_cast<std::uint64_t>(j), {S(t), SN(j)},
                   "outer star is the maximum of its set", S(star_bar(t, j)));
        rec.count();
        if (kstar_max(t, j) != (ks.kstar.empty() ? zero() : ks.kstar.back()))
          rec.fail(i, 4, static_cast<std::uint64_t>(j), {S(t), SN(j)},
                   "argument star is the maximum of its set", S(kstar_max(t, j)));
      }
    }
    if (!c.step_side(i)) {
      for (int m = 0; m <= c.opt.max_level + 1; ++m) {
        KSets ks = k_sets(t, m + 1);
        bool literal = true;
        for (TermPtr x : ks.kstar)
          if (!lt(x, t)) { literal = false; break; }
        rec.count();
        if (in_dom(t, m) != literal)
          rec.fail(i, 5, static_cast<std::uint64_t>(m), {S(t), SN(m)},
                   literal ? "inside the domain" : "outside the domain",
                   in_dom(t, m) ? "inside" : "outside");
      }
    }
  });
}

void prop_order_compare_lemma(Ctx& c) {
  std::vector<TermPtr> argstar(c.total(), nullptr);
  for (std::size_t i = 0; i < c.total(); ++i) {
    TermPtr t = c.at(i);
    if (t->kind == Kind::Collapse)
      argstar[i] = star_of(t->arg, t->level, t->sys);
  }
  c.parallel(c.total(), [&](std::size_t i, Recorder& rec) {
    TermPtr a = c.at(i);
    if (a->kind != Kind::Collapse) return;
    const auto& u = c.side(i);
    std::size_t base = c.base(i);
    for (std::size_t j = 0; j < u.size(); ++j) {
      TermPtr b = u[j];
      if (b->kind != Kind::Collapse || b->level != a->level || b == a) continue;
      rec.count();
      bool lhs = lt(a, b);
      bool rhs = (lt(a->arg, b->arg) && lt(argstar[i], b)) || leq(a, argstar[base + j]);
      if (lhs != rhs)
        rec.fail(i, 0, j, {S(a), S(b)},
                 "comparison agrees with its two-sided characterization",
                 lhs ? "lt without witness" : "witness without lt");
    }
  });
}

void prop_order_eps_char(Ctx& c) {
  c.parallel(c.total(), [&](std::size_t i, Recorder& rec) {
    TermPtr a = c.at(i);
    if (a->kind != Kind::Collapse || a->arg->kind == Kind::Zero) return;
    int j = a->level;
    Sys s = a->sys;
    const auto& u = c.side(i);
    TermPtr df = delta_full(a->arg, j);
    // A value with an uncountable head is a fixed point of the level-j
    // collapsing map and hence closed under it from below; one with a zero
    // head is the proper sup of that map below itself, and its own countable
    // argument witnesses the failure of closure.
    bool closed = true;
    std::size_t hi = std::min(i - c.base(i), lower_idx(u, om(s, j + 1)));
    for (std::size_t b = 0; b < hi && closed; ++b) {
      TermPtr sg = u[b];
      if (s == Sys::Sim && !in_dom(sg, j)) continue;
      if (!lt(collapse(s, j, sg), a)) closed = false;
    }
    rec.count();
    if ((df->kind != Kind::Zero) != closed)
      rec.fail(i, 0, 0, {S(a)},
               "closed under the level collapse below iff the head is uncountable",
               closed ? "closed with empty head" : "open with nonempty head");
  });
}

void prop_order_loc_lex(Ctx& c) {
  std::vector<std::array<TermPtr, 2>> jobs;
  for (int side = 0; side < 2; ++side) {
    const auto& u = side ? c.UB : c.U;
    for (int lv = 0; lv <= c.opt.max_level; ++lv) {
      TermPtr prev = nullptr;
      for (TermPtr t : u) {
        if (t->kind != Kind::Collapse || t->level != lv) continue;
        if (prev != nullptr) jobs.push_back({prev, t});
        prev = t;
      }
    }
  }
  c.parallel(jobs.size(), [&](std::size_t i, Recorder& rec) {
    TermPtr a = jobs[i][0], b = jobs[i][1];
    const auto& la = localization(a, a->level).entries;
    const auto& lb = localization(b, b->level).entries;
    std::size_t n = std::min(la.size(), lb.size());
    Cmp c0 = Cmp::EQ;
    for (std::size_t k = 1; k < n; ++k) {
      c0 = compare(la[k], lb[k]);
      if (c0 != Cmp::EQ) break;
    }
    rec.count();
    if (!(c0 == Cmp::LT || (c0 == Cmp::EQ && la.size() < lb.size())))
      rec.fail(i, 0, 0, {S(a), S(b)}, "localizations ordered lexicographically",
               join_terms(la) + " !< " + join_terms(lb));
  });
}

void prop_order_loc_prefix(Ctx& c) {
  c.parallel(c.total(), [&](std::size_t i, Recorder& rec) {
    TermPtr t = c.at(i);
    if (t->kind != Kind::Collapse) return;
    int lv = t->level;
    const auto& u = c.side(i);
    auto P = P_set(t->arg, lv);
    if (P.empty()) return;
    auto loc_t = localization(t, lv);
    for (std::size_t pi = 0; pi < P.size(); ++pi) {
      TermPtr beta = P[pi];
      auto pb = P_set(beta, lv);
      for (std::size_t j = 0; j < loc_t.entries.size(); ++j) {
        if (std::find(pb.begin(), pb.end(), loc_t.entries[j]) == pb.end()) continue;
        std::size_t hi = upper_idx(u, t);
        for (std::size_t g = lower_idx(u, beta); g < hi; ++g) {
          TermPtr gma = u[g];
          if (gma->kind != Kind::Collapse || gma->level != lv) continue;
          const auto& lg = localization(gma, lv).entries;
          rec.count();
          bool ok = lg.size() > j;
          for (std::size_t q = 0; ok && q <= j; ++q) ok = lg[q] == loc_t.entries[q];
          if (!ok)
            rec.fail(i, pi, g, {S(t), S(beta), S(gma)},
                     "localization prefix shared through the interval",
                     join_terms(lg));
        }
      }
    }
  });
}

void prop_order_loc_structure(Ctx& c) {
  c.parallel(c.total(), [&](std::size_t i, Recorder& rec) {
    TermPtr t = c.at(i);
    if (t->kind != Kind::Collapse || t->arg->kind == Kind::Zero) return;
    int lv = t->level;
    Sys s = t->sys;
    const auto& u = c.side(i);
    auto loc = localization(t, lv);
    const auto& E = loc.entries;
    std::size_t m = E.size();
    rec.count();
    if (m < 2 || E.front() != om(s, lv) || E.back() != t) {
      rec.fail(i, 0, 0, {S(t)}, "climb from the seed to the term", join_terms(E));
      return;
    }
    for (std::size_t j = 0; j + 1 < m; ++j) {
      rec.count();
      if (!lt(E[j], E[j + 1]))
        rec.fail(i, 1, j, {S(t)}, "strictly increasing entries", join_terms(E));
    }
    for (std::size_t j = 1; j < m; ++j) {
      rec.count();
      if (!(E[j]->kind == Kind::Collapse && E[j]->level == lv))
        rec.fail(i, 2, j, {S(t)}, "entries are collapses of the same level", S(E[j]));
    }
    for (std::size_t j = 1; j + 1 < m; ++j) {
      rec.count();
      if (!gt(delta_full(E[j]->arg, lv), delta_full(E[j + 1]->arg, lv)))
        rec.fail(i, 3, j, {S(t)}, "strictly descending uncountable heads",
                 S(E[j]) + " then " + S(E[j + 1]));
    }
    for (std::size_t j = 1; j + 1 < m; ++j) {
      const auto& lj = localization(E[j], lv).entries;
      rec.count();
      bool ok = lj.size() == j + 1;
      for (std::size_t q = 0; ok && q <= j; ++q) ok = lj[q] == E[q];
      if (!ok)
        rec.fail(i, 4, j, {S(t), S(E[j])}, "prefix is the entry's own localization",
                 join_terms(lj));
    }
    for (std::size_t j = 0; j + 1 < m; ++j) {
      std::size_t hi = lower_idx(u, E[j + 1]);
      for (std::size_t b = upper_idx(u, E[j]); b < hi; ++b) {
        TermPtr beta = u[b];
        if (beta->kind != Kind::Collapse || beta->level != lv) continue;
        rec.count();
        if (!lt(beta->arg, E[j + 1]->arg))
          rec.fail(i, 5, b, {S(t), S(beta)},
                   "arguments between entries stay below the next argument",
                   S(beta->arg) + " !< " + S(E[j + 1]->arg));
      }
    }
    TermPtr tp = alpha_plus(t);
    TermPtr dfa = delta_full(t->arg, lv);
    std::size_t hi2 = lower_idx(u, tp);
    for (std::size_t b = upper_idx(u, t); b < hi2; ++b) {
      TermPtr beta = u[b];
      if (beta->kind != Kind::Collapse || beta->level != lv) continue;
      rec.count();
      if (!lt(delta_full(beta->arg, lv), dfa))
        rec.fail(i, 6, b, {S(t), S(beta)},
                 "terms before the successor carry a smaller head", S(beta->arg));
      const auto& lb2 = localization(beta, lv).entries;
      rec.count();
      bool ok = lb2.size() > m;
      for (std::size_t q = 0; ok && q < m; ++q) ok = lb2[q] == E[q];
      if (!ok)
        rec.fail(i, 7, b, {S(t), S(beta)},
                 "localization extends the whole sequence properly", join_terms(lb2));
    }
    TermPtr sv = star_of(t->arg, lv, s);
    if (sv->kind == Kind::Collapse && sv->level == lv && geq(sv, om(s, lv))) {
      const auto& ls = localization(sv, lv).entries;
      rec.count();
      bool ok = ls.size() >= m - 1;
      for (std::size_t q = 0; ok && q + 1 < m; ++q) ok = ls[q] == E[q];
      if (!ok)
        rec.fail(i, 8, 0, {S(t), S(sv)},
                 "entries below the term prefix the star's localization",
                 join_terms(ls));
      std::vector<TermPtr> kept;
      for (std::size_t q = 1; q < ls.size(); ++q)
        if (gt(delta_full(ls[q]->arg, lv), dfa)) kept.push_back(ls[q]);
      std::vector<TermPtr> wantv(E.begin() + 1, E.end() - 1);
      rec.count();
      if (kept != wantv)
        rec.fail(i, 9, 0, {S(t), S(sv)},
                 "erasing small heads from the star's localization recovers the prefix",
                 join_terms(kept) + " vs " + join_terms(wantv));
    }
  });
}

// ---------------------------------------------------------------- fundseq

void prop_fs_closure(Ctx& c) {
  c.parallel(c.total(), [&](std::size_t i, Recorder& rec) {
    TermPtr t = c.at(i);
    if (!is_limit(t)) return;
    auto ps = fs_params(c, system_or(t, Sys::Step), t);
    for (std::size_t z = 0; z < ps.size(); ++z) {
      TermPtr r = fundseq(t, ps[z]);
      rec.count();
      if (!(lt(r, t) && (c.step_side(i) ? valid_T(r) : valid_bar(r))))
        rec.fail(i, 0, z, {S(t), S(ps[z])}, "well-formed value below the term", S(r));
    }
  });
}

void cantorian_over(Ctx& c, bool bar_side) {
  const auto& u = bar_side ? c.UB : c.U;
  std::size_t off = bar_side ? c.U.size() : 0;
  c.parallel(u.size(), [&](std::size_t ii, Recorder& rec) {
    std::size_t i = off + ii;
    TermPtr t = u[ii];
    Sys s = system_or(t, Sys::Step);
    if (t->kind == Kind::Zero) {
      for (std::uint64_t n = 0; n <= c.opt.n_cap; ++n) {
        rec.count();
        if (fundseq_nat(t, n) != zero())
          rec.fail(i, 0, n, {"0", SN(n)}, "0", S(fundseq_nat(t, n)));
      }
      return;
    }
    if (classify(t) == NumClass::Successor) {
      TermPtr p = pred(t);
      for (std::uint64_t n = 0; n <= c.opt.n_cap; ++n) {
        rec.count();
        if (fundseq_nat(t, n) != p)
          rec.fail(i, 1, n, {S(t), SN(n)}, S(p), S(fundseq_nat(t, n)));
      }
      return;
    }
    auto ps = fs_params(c, s, t);
    if (t->kind == Kind::Sum) {
      std::vector<TermPtr> pre(t->parts.begin(), t->parts.end() - 1);
      for (std::size_t z = 0; z < ps.size(); ++z) {
        std::vector<TermPtr> cp = pre;
        cp.push_back(fundseq(t->parts.back(), ps[z]));
        rec.count();
        if (fundseq(t, ps[z]) != make_sum(cp))
          rec.fail(i, 2, z, {S(t), S(ps[z])}, S(make_sum(cp)), S(fundseq(t, ps[z])));
      }
      return;
    }
    int lv = t->level;
    TermPtr df = delta_full(t->arg, lv), et = eta_lt(t->arg, lv);
    if (df->kind == Kind::Zero && classify(et) == NumClass::Successor) {
      TermPtr ab = collapse(s, lv, pred(et));
      for (std::uint64_t n = 0; n <= c.opt.n_cap; ++n) {
        std::vector<TermPtr> copies(n + 1, ab);
        rec.count();
        if (fundseq_nat(t, n) != make_sum(copies))
          rec.fail(i, 3, n, {S(t), SN(n)}, S(make_sum(copies)), S(fundseq_nat(t, n)));
      }
    }
    if (t->arg->kind != Kind::Zero) {
      TermPtr r0 = fundseq(t, zero());
      rec.count();
      if (r0->kind != Kind::Collapse)
        rec.fail(i, 4, 0, {S(t)}, "indecomposable first value", S(r0));
    }
  });
}

void prop_fs_cantorian(Ctx& c) { cantorian_over(c, false); }
void prop_bar_cantorian(Ctx& c) { cantorian_over(c, true); }

void prop_fs_monotone(Ctx& c) {
  c.parallel(c.total(), [&](std::size_t i, Recorder& rec) {
    TermPtr t = c.at(i);
    if (!is_limit(t)) return;
    auto ps = fs_params(c, system_or(t, Sys::Step), t);
    TermPtr prev = nullptr;
    for (std::size_t z = 0; z < ps.size(); ++z) {
      TermPtr r = fundseq(t, ps[z]);
      rec.count();
      if (!lt(r, t))
        rec.fail(i, 0, z, {S(t), S(ps[z])}, "value below the term", S(r));
      if (prev != nullptr) {
        rec.count();
        if (!lt(prev, r))
          rec.fail(i, 1, z, {S(t), S(ps[z - 1]), S(ps[z])},
                   "strictly increasing in the parameter", S(prev) + " !< " + S(r));
      }
      prev = r;
    }
  });
}

void prop_fs_star_monotone(Ctx& c) {
  c.parallel(c.total(), [&](std::size_t i, Recorder& rec) {
    TermPtr t = c.at(i);
    if (!is_limit(t)) return;
    Sys s = system_or(t, Sys::Step);
    int d = dom_ind(t);
    int kmax = c.opt.max_level + 1;
    auto ps = fs_params(c, s, t);
    for (int k = d; k <= kmax; ++k) {
      TermPtr bound = star_of(t, k, s);
      TermPtr prevs = nullptr;
      for (std::size_t z = 0; z < ps.size(); ++z) {
        TermPtr sv = star_of(fundseq(t, ps[z]), k, s);
        rec.count();
        if (!(leq(sv, bound) && (prevs == nullptr || leq(prevs, sv))))
          rec.fail(i, static_cast<std::uint64_t>(k), z, {S(t), S(ps[z]), SN(k)},
                   "weakly increasing stars bounded by the term's star", S(sv));
        prevs = sv;
      }
    }
    if (d > 0) {
      for (int k = 0; k <= d - 1; ++k) {
        TermPtr tv = star_of(t, k, s);
        for (std::size_t z = 0; z < ps.size(); ++z) {
          TermPtr zs = star_of(ps[z], k, s);
          TermPtr av = star_of(fundseq(t, ps[z]), k, s);
          rec.count();
          bool ok = leq(zs, av) && leq(av, max_term(tv, zs)) &&
                    leq(tv, max_term(av, one(s)));
          if (!ok)
            rec.fail(i, static_cast<std::uint64_t>(kmax + 1 + k), z,
                     {S(t), S(ps[z]), SN(k)},
                     "low stars pinned between the parameter and the term",
                     S(av));
        }
      }
    }
  });
}

void prop_fs_support_control(Ctx& c) {
  c.parallel(c.total(), [&](std::size_t i, Recorder& rec) {
    TermPtr t = c.at(i);
    if (t->kind != Kind::Collapse) return;
    int lv = t->level;
    Sys s = t->sys;
    TermPtr ab = support_term(t);
    if (ab->kind == Kind::Zero) return;
    TermPtr df = delta_full(t->arg, lv);
    if (chi(lv, df) != 0) return;
    // zeta ranges over the index domain of the whole term, clipped to the
    // domain of df so the descent below is defined.
    auto ps = fs_params(c, s, dom_ind(t) <= dom_ind(df) ? t : df);
    for (std::size_t z = 0; z < ps.size(); ++z) {
      TermPtr sv = star_of(fundseq(df, ps[z]), lv, s);
      rec.count();
      if (!lt(sv, ab))
        rec.fail(i, 0, z, {S(t), S(ps[z])},
                 "rewritten head keeps its star below the support",
                 S(sv) + " !< " + S(ab));
    }
  });
}

void prop_fs_loc_floor(Ctx& c) {
  c.parallel(c.total(), [&](std::size_t i, Recorder& rec) {
    TermPtr t = c.at(i);
    if (t->kind != Kind::Collapse || t->arg->kind == Kind::Zero) return;
    const auto& E = localization(t, t->level).entries;
    TermPtr r0 = fundseq(t, zero());
    rec.count();
    if (!leq(E[E.size() - 2], r0))
      rec.fail(i, 0, 0, {S(t)}, "zero value at least the previous entry",
               S(E[E.size() - 2]) + " !<= " + S(r0));
  });
}

void prop_fs_sandwich(Ctx& c) {
  int kmax = c.opt.max_level + 1;
  std::vector<std::vector<TermPtr>> stars(static_cast<std::size_t>(kmax) + 1,
                                          std::vector<TermPtr>(c.total()));
  for (std::size_t i = 0; i < c.total(); ++i) {
    TermPtr t = c.at(i);
    Sys s = system_or(t, Sys::Step);
    for (int k = 0; k <= kmax; ++k) stars[static_cast<std::size_t>(k)][i] = star_of(t, k, s);
  }
  c.parallel(c.total(), [&](std::size_t i, Recorder& rec) {
    TermPtr t = c.at(i);
    if (!is_limit(t)) return;
    const auto& u = c.side(i);
    std::size_t base = c.base(i);
    std::size_t ti = i - base;
    Sys s = system_or(t, Sys::Step);
    int d = dom_ind(t);
    auto ps = fs_params(c, s, t);
    std::vector<TermPtr> as(static_cast<std::size_t>(kmax) + 1);
    for (std::size_t z = 0; z < ps.size(); ++z) {
      TermPtr a = fundseq(t, ps[z]);
      int kmin = ps[z]->kind == Kind::Zero ? 0 : (d > 0 ? d - 1 : 0);
      for (int k = kmin; k <= kmax; ++k) as[static_cast<std::size_t>(k)] = star_of(a, k, s);
      for (std::size_t b = lower_idx(u, a); b < ti; ++b) {
        for (int k = kmin; k <= kmax; ++k) {
          rec.count();
          if (lt(stars[static_cast<std::size_t>(k)][base + b], as[static_cast<std::size_t>(k)]))
            rec.fail(i, z, b * 8 + static_cast<std::size_t>(k),
                     {S(t), S(ps[z]), S(u[b]), SN(k)},
                     "terms of the sandwiched interval dominate the value's star",
                     S(stars[static_cast<std::size_t>(k)][base + b]));
        }
      }
    }
  });
}

void prop_fs_case_table(Ctx& c) {
  c.parallel(c.total(), [&](std::size_t i, Recorder& rec) {
    TermPtr t = c.at(i);
    if (t->kind != Kind::Collapse || t->arg->kind == Kind::Zero) return;
    int lv = t->level;
    Sys s = t->sys;
    TermPtr df = delta_full(t->arg, lv), et = eta_lt(t->arg, lv);
    auto loc = localization(t, lv);
    std::vector<TermPtr> prefix(loc.entries.begin(), loc.entries.end() - 1);
    auto ps = fs_params(c, s, t);
    for (std::size_t z = 0; z < ps.size(); ++z) {
      FsInfo info;
      TermPtr r = fundseq(t, ps[z], info);
      bool zzero = ps[z]->kind == Kind::Zero;
      if (info.clause == FsClause::PrincipalMultiple) {
        if (!zzero) {
          rec.count();
          if (r->kind == Kind::Collapse)
            rec.fail(i, 0, z, {S(t), S(ps[z])}, "decomposable later values", S(r));
          continue;
        }
        std::vector<TermPtr> wantv = prefix;
        if (classify(et) == NumClass::Successor && pred(et)->kind != Kind::Zero)
          wantv.push_back(info.support);
        rec.count();
        if (localization(r, lv).entries != wantv)
          rec.fail(i, 1, z, {S(t), S(ps[z])}, join_terms(wantv),
                   join_terms(localization(r, lv).entries));
        continue;
      }
      if (info.clause == FsClause::ChiOne && info.chi_level != lv) continue;
      std::vector<TermPtr> wantv;
      if (info.clause == FsClause::Continuity) {
        bool seedcase = zzero && df->kind == Kind::Zero &&
                        et->kind == Kind::Collapse && et->arg->kind == Kind::Zero &&
                        et->level >= 1 && et->level <= lv;
        if (seedcase) {
          wantv = {om(s, lv)};
        } else {
          wantv = prefix;
          wantv.push_back(r);
        }
      } else if (info.clause == FsClause::ChiOne) {
        if (classify(et) == NumClass::Successor) {
          wantv = prefix;
          wantv.push_back(info.support);
          wantv.push_back(r);
        } else if (zzero && df == om(s, lv + 1) && et->kind == Kind::Zero) {
          wantv = {om(s, lv)};
        } else {
          wantv = prefix;
          wantv.push_back(r);
        }
      } else {
        wantv = prefix;
        if (classify(et) == NumClass::Successor) wantv.push_back(info.support);
        wantv.push_back(r);
      }
      rec.count();
      if (r->kind != Kind::Collapse || r->level != lv) {
        rec.fail(i, 2, z, {S(t), S(ps[z])}, "level collapse value", S(r));
        continue;
      }
      if (localization(r, lv).entries != wantv)
        rec.fail(i, 3, z, {S(t), S(ps[z]), fs_clause_name(info.clause)},
                 join_terms(wantv), join_terms(localization(r, lv).entries));
    }
  });
}

void prop_fs_dom_equiv(Ctx& c) {
  c.parallel(c.total(), [&](std::size_t i, Recorder& rec) {
    TermPtr t = c.at(i);
    int d = dom_ind(t);
    int flag = -1;
    bool multi = false;
    for (int k = 0; k <= c.opt.max_level + 2; ++k) {
      if (chi(k, t) == 1) {
        if (flag >= 0) multi = true;
        flag = k;
      }
    }
    rec.count();
    if (multi || (d == 0 ? flag != -1 : flag != d - 1))
      rec.fail(i, 0, 0, {S(t)}, "degree matches the unique cofinality flag",
               "degree " + SN(d) + ", flag " + SN(flag));
    if (t->kind == Kind::Collapse) {
      TermPtr df = delta_full(t->arg, t->level), et = eta_lt(t->arg, t->level);
      if (df->kind != Kind::Zero &&
          !(classify(et) == NumClass::Limit && !fixpoint_F(df, et, t->level))) {
        FsInfo info = fs_case(t);
        int dd = dom_ind(df);
        bool high = dd >= t->level + 1;
        rec.count();
        if (high != (info.clause == FsClause::ChiOne) ||
            (high && (info.chi_level != dd - 1 || chi(info.chi_level, df) != 1)))
          rec.fail(i, 1, 0, {S(t)}, "clause choice matches the head's degree",
                   fs_clause_name(info.clause));
      }
    }
  });
}

void bachmann_over(Ctx& c, bool bar_side) {
  const auto& u = bar_side ? c.UB : c.U;
  std::size_t off = bar_side ? c.U.size() : 0;
  c.parallel(u.size(), [&](std::size_t ii, Recorder& rec) {
    TermPtr t = u[ii];
    if (!is_limit(t) || dom_ind(t) != 0) return;
    for (std::uint64_t n = 0; n <= c.opt.n_cap; ++n) {
      TermPtr a = fundseq_nat(t, n);
      for (std::size_t b = upper_idx(u, a); b < ii; ++b) {
        TermPtr b0 = fundseq(u[b], zero());
        rec.count();
        if (!leq(a, b0))
          rec.fail(off + ii, n, b, {S(t), SN(n), S(u[b])},
                   "value at most the zero value of anything in between",
                   S(a) + " !<= " + S(b0));
      }
    }
  });
}

void prop_fs_bachmann(Ctx& c) { bachmann_over(c, false); }
void prop_bar_bachmann(Ctx& c) { bachmann_over(c, true); }

// ---------------------------------------------------------------- bar

void prop_bar_valid(Ctx& c) {
  c.parallel(c.UB.size(), [&](std::size_t ii, Recorder& rec) {
    TermPtr t = c.UB[ii];
    rec.count();
    bool ok = valid_bar(t) && t->top_level <= c.opt.max_level &&
              (t->kind == Kind::Zero || norm_bar(t) <= c.opt.max_norm);
    if (t->kind == Kind::Collapse) ok = ok && in_dom(t->arg, t->level);
    if (!ok)
      rec.fail(ii, 0, 0, {S(t)}, "well-formed image element inside bounds", S(t));
  });
}

void prop_bar_dom_monotone(Ctx& c) {
  c.parallel(c.UB.size(), [&](std::size_t ii, Recorder& rec) {
    TermPtr t = c.UB[ii];
    for (int m = 0; m <= c.opt.max_level + 1; ++m) {
      rec.count();
      if (in_dom(t, m) && !in_dom(t, m + 1))
        rec.fail(ii, 0, static_cast<std::uint64_t>(m), {S(t), SN(m)},
                 "domain membership upward closed in the level",
                 "drops at " + SN(m + 1));
    }
  });
}

void prop_bar_commute(Ctx& c) {
  c.parallel(c.UB.size(), [&](std::size_t ii, Recorder& rec) {
    TermPtr t = c.UB[ii];
    if (!is_limit(t)) return;
    TermPtr g = to_step(t);
    auto ps = fs_params(c, Sys::Sim, t);
    for (std::size_t z = 0; z < ps.size(); ++z) {
      TermPtr lhs = fundseq(t, ps[z]);
      TermPtr rhs = to_bar(fundseq(g, to_step(ps[z])));
      rec.count();
      if (lhs != rhs)
        rec.fail(c.U.size() + ii, 0, z, {S(t), S(ps[z])}, S(rhs), S(lhs));
    }
  });
}

// ---------------------------------------------------------------- iso

void prop_iso_roundtrip(Ctx& c) {
  c.parallel(c.total(), [&](std::size_t i, Recorder& rec) {
    TermPtr t = c.at(i);
    if (c.step_side(i)) {
      TermPtr b = to_bar(t);
      rec.count();
      if (to_step(b) != t || !valid_bar(b))
        rec.fail(i, 0, 0, {S(t)}, "identical after the round trip", S(to_step(b)));
    } else {
      TermPtr g = to_step(t);
      rec.count();
      if (to_bar(g) != t || !valid_T(g))
        rec.fail(i, 1, 0, {S(t)}, "identical after the round trip", S(to_bar(g)));
    }
  });
}

void prop_iso_order(Ctx& c) {
  c.parallel(c.total(), [&](std::size_t i, Recorder& rec) {
    std::size_t ia = i - c.base(i);
    const auto& u = c.side(i);
    if (ia + 1 >= u.size()) return;
    rec.count();
    if (c.step_side(i)) {
      if (!lt(to_bar(u[ia]), to_bar(u[ia + 1])))
        rec.fail(i, 0, 0, {S(u[ia]), S(u[ia + 1])},
                 "translation preserves strict order", "image order broken");
    } else {
      if (!lt(to_step(u[ia]), to_step(u[ia + 1])))
        rec.fail(i, 1, 0, {S(u[ia]), S(u[ia + 1])},
                 "translation preserves strict order", "image order broken");
    }
  });
}

void prop_iso_star(Ctx& c) {
  c.parallel(c.UB.size(), [&](std::size_t ii, Recorder& rec) {
    TermPtr t = c.UB[ii];
    TermPtr g = to_step(t);
    for (int k = 0; k <= c.opt.max_level + 1; ++k) {
      rec.count();
      if (to_step(star_bar(t, k)) != star(g, k))
        rec.fail(ii, 0, static_cast<std::uint64_t>(k), {S(t), SN(k)},
                 S(star(g, k)), S(to_step(star_bar(t, k))));
    }
  });
}

void prop_iso_fixp(Ctx& c) {
  c.parallel(c.UB.size(), [&](std::size_t ii, Recorder& rec) {
    TermPtr t = c.UB[ii];
    if (t->kind != Kind::Collapse) return;
    int lv = t->level;
    TermPtr df = delta_full(t->arg, lv), et = eta_lt(t->arg, lv);
    bool here = fixpoint_F(df, et, lv);
    TermPtr g = to_step(t);
    rec.count();
    if (here != fixpoint_F(delta_full(g->arg, lv), eta_lt(g->arg, lv), lv))
      rec.fail(ii, 0, 0, {S(t)}, "condition agrees with the translated term",
               here ? "holds only here" : "holds only there");
    rec.count();
    if (here != fixpoint_F(rt_level(lv, df), to_step(et), lv))
      rec.fail(ii, 1, 0, {S(t)}, "condition agrees after the level translation",
               here ? "holds only here" : "holds only there");
  });
}

void prop_iso_chi_d(Ctx& c) {
  c.parallel(c.UB.size(), [&](std::size_t ii, Recorder& rec) {
    TermPtr t = c.UB[ii];
    TermPtr g = to_step(t);
    for (int k = 0; k <= c.opt.max_level + 1; ++k) {
      rec.count();
      if (chi(k, t) != chi(k, g))
        rec.fail(ii, 0, static_cast<std::uint64_t>(k), {S(t), SN(k)},
                 SN(chi(k, g)), SN(chi(k, t)));
    }
    int d = dom_ind(t);
    rec.count();
    if (d != dom_ind(g))
      rec.fail(ii, 1, 0, {S(t)}, SN(dom_ind(g)), SN(d));
    for (int j = 0; j <= c.opt.max_level + 1; ++j) {
      if (!in_dom(t, j)) continue;
      TermPtr r = rt_level(j, t);
      for (int k = 0; k <= j; ++k) {
        rec.count();
        if (chi(k, t) != chi(k, r))
          rec.fail(ii, 2 + static_cast<std::uint64_t>(j), static_cast<std::uint64_t>(k),
                   {S(t), SN(j), SN(k)}, SN(chi(k, t)), SN(chi(k, r)));
      }
      if (j + 1 >= d) {
        rec.count();
        if (dom_ind(r) != d)
          rec.fail(ii, 16 + static_cast<std::uint64_t>(j), 0, {S(t), SN(j)},
                   SN(d), SN(dom_ind(r)));
      }
    }
  });
}

void prop_iso_localization(Ctx& c) {
  c.parallel(c.U.size(), [&](std::size_t i, Recorder& rec) {
    TermPtr t = c.U[i];
    if (t->kind != Kind::Collapse) return;
    int lv = t->level;
    const auto& la = localization(t, lv).entries;
    const auto& lb = localization(to_bar(t), lv).entries;
    rec.count();
    bool ok = la.size() == lb.size();
    for (std::size_t q = 0; ok && q < la.size(); ++q) ok = to_bar(la[q]) == lb[q];
    if (!ok)
      rec.fail(i, 0, 0, {S(t)}, "localization maps pointwise",
               join_terms(la) + " vs " + join_terms(lb));
  });
}

// ---------------------------------------------------------------- norms

void prop_norms_regularity(Ctx& c) {
  std::vector<std::uint64_t> cn(c.U.size());
  for (std::size_t i = 0; i < c.U.size(); ++i) cn[i] = cnorm(c.U[i]);
  c.parallel(c.U.size(), [&](std::size_t i, Recorder& rec) {
    TermPtr t = c.U[i];
    if (!is_limit(t) || dom_ind(t) != 0) return;
    for (std::size_t b = 0; b < i; ++b) {
      TermPtr beta = c.U[b];
      rec.count();
      if (!leq(beta, fundseq_nat(t, cn[b])))
        rec.fail(i, 0, b, {S(t), S(beta)},
                 "reachable at the symbol-count index",
                 S(beta) + " !<= " + S(fundseq_nat(t, cn[b])));
      rec.count();
      if (!leq(beta, fundseq_nat(t, gnorm(beta))))
        rec.fail(i, 1, b, {S(t), S(beta)},
                 "reachable at the descent-count index",
                 S(beta) + " !<= " + S(fundseq_nat(t, gnorm(beta))));
    }
  });
}

void prop_norms_greg(Ctx& c) {
  c.parallel(c.total(), [&](std::size_t i, Recorder& rec) {
    TermPtr t = c.at(i);
    if (t->kind == Kind::Zero) return;
    rec.count();
    if (gnorm(t) != gnorm(fundseq(t, zero())) + 1)
      rec.fail(i, 0, 0, {S(t)}, "descent count steps down by one",
               SN(gnorm(t)) + " vs " + SN(gnorm(fundseq(t, zero()))) + "+1");
  });
  std::size_t off = c.total();
  c.parallel(c.U.size(), [&](std::size_t i, Recorder& rec) {
    TermPtr t = c.U[i];
    if (!is_limit(t) || dom_ind(t) != 0) return;
    for (std::uint64_t n = 0; n <= c.opt.n_cap; ++n) {
      TermPtr a = fundseq_nat(t, n);
      std::uint64_t ga = gnorm(a);
      for (std::size_t b = upper_idx(c.U, a); b < i; ++b) {
        rec.count();
        if (ga >= gnorm(c.U[b]))
          rec.fail(off + i, n, b, {S(t), SN(n), S(c.U[b])},
                   "strictly smaller descent count than anything in between",
                   SN(ga) + " >= " + SN(gnorm(c.U[b])));
      }
    }
  });
}

void prop_norms_gadd(Ctx& c) {
  std::vector<std::uint64_t> cn(c.U.size());
  for (std::size_t i = 0; i < c.U.size(); ++i) cn[i] = cnorm(c.U[i]);
  c.parallel(c.U.size(), [&](std::size_t i, Recorder& rec) {
    TermPtr a = c.U[i];
    if (a->kind == Kind::Zero) return;
    for (std::size_t j = 0; j < c.U.size(); ++j) {
      TermPtr b = c.U[j];
      if (b->kind == Kind::Zero) continue;
      if (cn[i] + cn[j] + 1 > c.opt.max_norm + 2) continue;
      if (!nf_predicate(a, b)) continue;
      rec.count();
      if (gnorm(make_sum(a, b)) != gnorm(a) + gnorm(b))
        rec.fail(i, 0, j, {S(a), S(b)}, SN(gnorm(a) + gnorm(b)),
                 SN(gnorm(make_sum(a, b))));
    }
  });
}

void prop_norms_gparam(Ctx& c) {
  c.parallel(c.U.size(), [&](std::size_t i, Recorder& rec) {
    TermPtr t = c.U[i];
    if (!is_limit(t) || dom_ind(t) == 0) return;
    auto ps = fs_params(c, Sys::Step, t);
    std::uint64_t g0 = gnorm(fundseq(t, zero()));
    std::size_t stride = std::max<std::size_t>(1, ps.size() / 64);
    for (std::size_t z = 0; z < ps.size(); z += stride) {
      rec.count();
      if (gnorm(fundseq(t, ps[z])) < g0 + gnorm(ps[z]))
        rec.fail(i, 0, z, {S(t), S(ps[z])},
                 "descent count grows at least by the parameter's",
                 SN(gnorm(fundseq(t, ps[z]))) + " < " + SN(g0) + "+" + SN(gnorm(ps[z])));
    }
  });
}

void prop_norms_gcollapse(Ctx& c) {
  c.parallel(c.U.size(), [&](std::size_t i, Recorder& rec) {
    TermPtr t = c.U[i];
    if (t->kind != Kind::Collapse) return;
    rec.count();
    std::uint64_t lo = gnorm(delta_full(t->arg, t->level)) +
                       gnorm(eta_lt(t->arg, t->level)) + 1;
    if (gnorm(t) < lo)
      rec.fail(i, 0, 0, {S(t)}, "descent count at least the split's total",
               SN(gnorm(t)) + " < " + SN(lo));
  });
}

void prop_norms_bound(Ctx& c) {
  c.parallel(c.total(), [&](std::size_t i, Recorder& rec) {
    TermPtr t = c.at(i);
    if (c.step_side(i)) {
      std::uint64_t g = gnorm(t);
      rec.count();
      if (cnorm(t) > (g + 1) * (g + 1))
        rec.fail(i, 0, 0, {S(t)}, "symbol count at most the squared bound",
                 SN(cnorm(t)) + " > (" + SN(g) + "+1)^2");
    } else {
      rec.count();
      if (gnorm(t) != gnorm(to_step(t)))
        rec.fail(i, 1, 0, {S(t)}, "descent count agrees with the translation",
                 SN(gnorm(t)) + " vs " + SN(gnorm(to_step(t))));
    }
  });
}

// ---------------------------------------------------------------- hardy

std::optional<std::uint64_t> try_hardy(TermPtr a, std::uint64_t n) {
  HardyBudget hb;
  hb.max_steps = 2000000;
  hb.max_value = 1000000;
  try {
    return hardy(a, n, hb);
  } catch (const BudgetError&) {
    return std::nullopt;
  }
}

std::vector<TermPtr> hardy_universe(const Ctx& c) {
  UniverseSpec spec;
  spec.sys = Sys::Step;
  spec.max_norm = std::min<unsigned>(c.opt.max_norm, 5);
  spec.max_level = std::min(c.opt.max_level, 1);
  spec.upper_bound = omega_level(Sys::Step, 1);
  return enumerate_universe(spec);
}

void prop_norms_hardy_mono(Ctx& c) {
  auto H = hardy_universe(c);
  c.parallel(H.size(), [&](std::size_t i, Recorder& rec) {
    TermPtr a = H[i];
    for (std::uint64_t n = 0; n + 1 <= c.opt.n_cap; ++n) {
      auto h1 = try_hardy(a, n), h2 = try_hardy(a, n + 1);
      if (h1 && h2) {
        rec.count();
        if (!(*h1 < *h2))
          rec.fail(i, 0, n, {S(a), SN(n)}, "strictly increasing in the start",
                   SN(*h1) + " !< " + SN(*h2));
      }
    }
    if (a->kind == Kind::Zero) return;
    for (std::uint64_t mm = 0; mm <= c.opt.n_cap; ++mm)
      for (std::uint64_t nn = mm; nn <= c.opt.n_cap; ++nn) {
        auto hm = try_hardy(fundseq_nat(a, mm), nn + 1);
        auto ha = try_hardy(a, nn);
        if (hm && ha) {
          rec.count();
          if (!(*hm <= *ha))
            rec.fail(i, 1, mm * 8 + nn, {S(a), SN(mm), SN(nn)},
                     "descent value bounded by the direct value",
                     SN(*hm) + " !<= " + SN(*ha));
        }
      }
    for (std::size_t b = 0; b < i; ++b) {
      std::uint64_t gb = gnorm(H[b]);
      for (std::uint64_t nn = gb; nn <= c.opt.n_cap; ++nn) {
        auto hb2 = try_hardy(H[b], nn + 1);
        auto ha = try_hardy(a, nn);
        if (hb2 && ha) {
          rec.count();
          if (!(*hb2 <= *ha))
            rec.fail(i, 2, b * 8 + nn, {S(a), S(H[b]), SN(nn)},
                     "small terms evaluate below larger ones",
                     SN(*hb2) + " !<= " + SN(*ha));
        }
      }
    }
    if (is_limit(a)) {
      for (std::uint64_t mm = 0; mm <= c.opt.n_cap; ++mm) {
        TermPtr bm = fundseq_nat(a, mm);
        for (std::size_t x = upper_idx(H, bm); x < i; ++x)
          for (std::uint64_t nn = 0; nn <= c.opt.n_cap; ++nn) {
            auto l = try_hardy(bm, nn);
            auto r = try_hardy(H[x], nn);
            if (l && r) {
              rec.count();
              if (!(*l <= *r))
                rec.fail(i, 3, x * 8 + nn, {S(a), SN(mm), S(H[x]), SN(nn)},
                         "descent value bounded through the interval",
                         SN(*l) + " !<= " + SN(*r));
            }
          }
      }
    }
  });
}

void prop_norms_hardy_compose(Ctx& c) {
  auto H = hardy_universe(c);
  // Walks started at a large parameter materialize one support copy per
  // unit of the parameter in every multiple stage, so this property runs
  // its evaluations under a tighter work budget than the other ones.
  auto try_small = [](TermPtr t, std::uint64_t n) -> std::optional<std::uint64_t> {
    HardyBudget hb;
    hb.max_steps = 200000;
    hb.max_value = 1000000;
    try {
      return hardy(t, n, hb);
    } catch (const BudgetError&) {
      return std::nullopt;
    }
  };
  c.parallel(H.size(), [&](std::size_t i, Recorder& rec) {
    TermPtr a = H[i];
    if (a->kind == Kind::Zero) return;
    for (std::size_t j = 0; j < H.size(); ++j) {
      TermPtr b = H[j];
      if (b->kind == Kind::Zero) continue;
      if (!nf_predicate(a, b)) continue;
      for (std::uint64_t n = 0; n <= c.opt.n_cap; ++n) {
        auto hb = try_small(b, n);
        if (!hb) continue;
        auto ho = try_small(a, *hb);
        auto hs = try_small(make_sum(a, b), n);
        if (ho && hs) {
          rec.count();
          if (!(*ho <= *hs))
            rec.fail(i, j, n, {S(a), S(b), SN(n)},
                     "composition bounded by the evaluation of the sum",
                     SN(*ho) + " !<= " + SN(*hs));
        }
      }
    }
  });
}

void prop_norms_prf2(Ctx& c) {
  std::uint64_t ncap = std::min<std::uint64_t>(c.opt.n_cap, 3);
  c.parallel(3 * (ncap + 1), [&](std::size_t idx, Recorder& rec) {
    std::uint64_t m = idx / (ncap + 1), n = idx % (ncap + 1);
    TermPtr wm = collapse(Sys::Step, 0, nat_to_term(m, Sys::Step));
    TermPtr wm1 = collapse(Sys::Step, 0, nat_to_term(m + 1, Sys::Step));
    std::optional<std::uint64_t> x = n + 1;
    for (std::uint64_t r = 0; x && r <= n; ++r) x = try_hardy(wm, *x);
    auto rhs = try_hardy(wm1, n);
    if (x && rhs) {
      rec.count();
      if (!(*x <= *rhs))
        rec.fail(idx, 0, 0, {S(wm), SN(n)},
                 "iterated value bounded by the next power's value",
                 SN(*x) + " !<= " + SN(*rhs));
    }
  });
}

void prop_norms_walk(Ctx& c) {
  auto H = hardy_universe(c);
  c.parallel(H.size(), [&](std::size_t i, Recorder& rec) {
    TermPtr a = H[i];
    for (std::uint64_t n = 0; n <= c.opt.n_cap; ++n) {
      // Every checked instance is re-walked one descent at a time below,
      // materializing each stage, so only values with short walks are
      // admitted; larger ones are skipped like any other budget miss.
      HardyBudget hb;
      hb.max_steps = 1000000;
      hb.max_value = n + 4096;
      std::optional<std::uint64_t> h;
      try {
        h = hardy(a, n, hb);
      } catch (const BudgetError&) {
        continue;
      }
      if (!h) continue;
      rec.count();
      if (*h < n) {
        rec.fail(i, 0, n, {S(a), SN(n)}, "value at least the start", SN(*h));
        continue;
      }
      std::uint64_t steps = *h - n;
      TermPtr cur = a;
      std::uint64_t j = n;
      bool early = false;
      for (std::uint64_t s2 = 0; s2 < steps; ++s2) {
        if (cur->kind == Kind::Zero) { early = true; break; }
        cur = fundseq_nat(cur, j);
        ++j;
      }
      rec.count();
      if (early || cur->kind != Kind::Zero)
        rec.fail(i, 1, n, {S(a), SN(n)}, "walk empties exactly at the value",
                 early ? "zero before the value" : "nonzero at the value");
      if (steps <= 256) {
        rec.count();
        bool atv = bracket_walk(a, n, *h)->kind == Kind::Zero;
        bool before = *h > n && bracket_walk(a, n, *h - 1)->kind == Kind::Zero;
        if (!atv || before)
          rec.fail(i, 2, n, {S(a), SN(n)}, "two-index walk agrees",
                   std::string(atv ? "" : "nonzero at the value ") +
                       (before ? "zero before the value" : ""));
      }
    }
  });
}

// ---------------------------------------------------------------- negative

// Same assignment except that collapses whose countable tail is empty and
// whose head has small cofinality rewrite to one fixed alternative shape.
TermPtr fs_variant_nat(TermPtr a, std::uint64_t n) {
  if (a->kind == Kind::Sum) {
    std::vector<TermPtr> ps(a->parts.begin(), a->parts.end() - 1);
    ps.push_back(fs_variant_nat(a->parts.back(), n));
    return make_sum(ps);
  }
  if (a->kind == Kind::Collapse) {
    FsInfo info = fs_case(a);
    if (info.clause == FsClause::ChiZero) {
      TermPtr et = eta_lt(a->arg, a->level);
      if (et->kind == Kind::Zero) {
        TermPtr df = delta_full(a->arg, a->level);
        return collapse(a->sys, a->level,
                        make_sum(fundseq_nat(df, n), star(df, a->level)));
      }
    }
  }
  return fundseq_nat(a, n);
}

void prop_negative_bracket_variant(Ctx& c) {
  c.parallel(c.U.size(), [&](std::size_t i, Recorder& rec) {
    TermPtr t = c.U[i];
    if (!is_limit(t) || dom_ind(t) != 0) return;
    for (std::uint64_t n = 0; n <= c.opt.n_cap; ++n) {
      TermPtr a = fs_variant_nat(t, n);
      if (!lt(a, t)) continue;
      for (std::size_t b = upper_idx(c.U, a); b < i; ++b) {
        rec.count();
        TermPtr v0 = fs_variant_nat(c.U[b], 0);
        if (gt(a, v0))
          rec.fail(i, n, b, {S(t), SN(n), S(c.U[b])},
                   "order compatibility of the simplified assignment",
                   S(a) + " > " + S(v0));
      }
    }
  });
}

// ---------------------------------------------------------------- registry

struct PropDef {
  const char* id;
  bool expects;
  void (*fn)(Ctx&);
};

const PropDef kProps[] = {
    {"term.roundtrip", false, prop_term_roundtrip},
    {"term.sum_assoc", false, prop_term_sum_assoc},
    {"term.classify", false, prop_term_classify},
    {"term.split", false, prop_term_split},
    {"order.laws", false, prop_order_laws},
    {"order.segments", false, prop_order_segments},
    {"order.pivotal", false, prop_order_pivotal},
    {"order.star_sets", false, prop_order_star_sets},
    {"order.compare_lemma", false, prop_order_compare_lemma},
    {"order.eps_char", false, prop_order_eps_char},
    {"order.loc_lex", false, prop_order_loc_lex},
    {"order.loc_prefix", false, prop_order_loc_prefix},
    {"order.loc_structure", false, prop_order_loc_structure},
    {"fs.closure", false, prop_fs_closure},
    {"fs.cantorian", false, prop_fs_cantorian},
    {"fs.monotone", false, prop_fs_monotone},
    {"fs.star_monotone", false, prop_fs_star_monotone},
    {"fs.support_control", false, prop_fs_support_control},
    {"fs.loc_floor", false, prop_fs_loc_floor},
    {"fs.sandwich", false, prop_fs_sandwich},
    {"fs.case_table", false, prop_fs_case_table},
    {"fs.dom_equiv", false, prop_fs_dom_equiv},
    {"fs.bachmann", false, prop_fs_bachmann},
    {"bar.valid", false, prop_bar_valid},
    {"bar.dom_monotone", false, prop_bar_dom_monotone},
    {"bar.commute", false, prop_bar_commute},
    {"bar.cantorian", false, prop_bar_cantorian},
    {"bar.bachmann", false, prop_bar_bachmann},
    {"iso.roundtrip", false, prop_iso_roundtrip},
    {"iso.order", false, prop_iso_order},
    {"iso.star", false, prop_iso_star},
    {"iso.fixp", false, prop_iso_fixp},
    {"iso.chi_d", false, prop_iso_chi_d},
    {"iso.localization", false, prop_iso_localization},
    {"norms.regularity", false, prop_norms_regularity},
    {"norms.greg", false, prop_norms_greg},
    {"norms.gadd", false, prop_norms_gadd},
    {"norms.gparam", false, prop_norms_gparam},
    {"norms.gcollapse", false, prop_norms_gcollapse},
    {"norms.bound", false, prop_norms_bound},
    {"norms.hardy_mono", false, prop_norms_hardy_mono},
    {"norms.hardy_compose", false, prop_norms_hardy_compose},
    {"norms.prf2", false, prop_norms_prf2},
    {"norms.walk", false, prop_norms_walk},
    {"negative.bracket_variant", true, prop_negative_bracket_variant},
};

UniverseSpec spec_from(const SuiteOptions& opt) {
  UniverseSpec spec;
  spec.sys = Sys::Step;
  spec.max_norm = opt.max_norm;
  spec.max_level = opt.max_level;
  return spec;
}

PropertyReport run_one(const PropDef& def, const SuiteOptions& opt,
                       const std::vector<TermPtr>& U,
                       const std::vector<TermPtr>& UB,
                       const std::string& label) {
  PropertyReport rep;
  rep.id = def.id;
  rep.universe = label;
  rep.expects_counterexamples = def.expects;
  Ctx ctx{opt, U, UB, 0, {}};
  auto t0 = std::chrono::steady_clock::now();
  def.fn(ctx);
  auto t1 = std::chrono::steady_clock::now();
  rep.seconds = std::chrono::duration<double>(t1 - t0).count();
  rep.instances = ctx.instances;
  std::sort(ctx.fails.begin(), ctx.fails.end(),
            [](const Fail& a, const Fail& b) { return a.key < b.key; });
  if (ctx.fails.size() > opt.max_counterexamples)
    ctx.fails.resize(opt.max_counterexamples);
  rep.counterexamples.reserve(ctx.fails.size());
  for (auto& f : ctx.fails) rep.counterexamples.push_back(std::move(f.ce));
  return rep;
}

const PropDef* find_prop(const std::string& id) {
  for (const auto& def : kProps)
    if (id == def.id) return &def;
  return nullptr;
}

}  // namespace

std::vector<std::string> all_property_ids() {
  std::vector<std::string> out;
  for (const auto& def : kProps) out.emplace_back(def.id);
  return out;
}

PropertyReport run_property(const std::string& id, const SuiteOptions& opt) {
  const PropDef* def = find_prop(id);
  if (def == nullptr) throw DomainError("unknown property id: " + id);
  std::vector<TermPtr> U = enumerate_universe(spec_from(opt));
  std::vector<TermPtr> UB;
  UB.reserve(U.size());
  for (TermPtr t : U) UB.push_back(to_bar(t));
  return run_one(*def, opt, U, UB, universe_label(spec_from(opt)) + "+image");
}

std::vector<PropertyReport> run_suite(const std::vector<std::string>& ids,
                                      const SuiteOptions& opt) {
  std::vector<TermPtr> U = enumerate_universe(spec_from(opt));
  std::vector<TermPtr> UB;
  UB.reserve(U.size());
  for (TermPtr t : U) UB.push_back(to_bar(t));
  std::string label = universe_label(spec_from(opt)) + "+image";
  std::vector<PropertyReport> out;
  out.reserve(ids.size());
  for (const auto& id : ids) {
    const PropDef* def = find_prop(id);
    if (def == nullptr) throw DomainError("unknown property id: " + id);
    out.push_back(run_one(*def, opt, U, UB, label));
  }
  return out;
}

std::string report_json(const PropertyReport& r) {
  nlohmann::json j;
  j["property_id"] = r.id;
  j["universe"] = r.universe;
  j["instances_checked"] = r.instances;
  j["elapsed_seconds"] = r.seconds;
  j["expects_counterexamples"] = r.expects_counterexamples;
  j["pass"] = r.passed();
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& ce : r.counterexamples) {
    nlohmann::json o;
    o["inputs"] = ce.inputs;
    o["expected"] = ce.expected;
    o["actual"] = ce.actual;
    arr.push_back(o);
  }
  j["counterexamples"] = arr;
  return j.dump();
}

}  // namespace ord
