#include "ordcalc/fundseq.hpp"

#include <unordered_map>
#include <utility>
#include <vector>

#include "ordcalc/bar.hpp"
#include "ordcalc/iso.hpp"
#include "ordcalc/order.hpp"

namespace ord {
namespace {

struct IntPtrHash {
  std::size_t operator()(const std::pair<int, TermPtr>& p) const {
    auto a = static_cast<std::uintptr_t>(p.first);
    auto b = reinterpret_cast<std::uintptr_t>(p.second);
    return std::hash<std::uintptr_t>{}(b * 0x9e3779b97f4a7c15ull ^ a);
  }
};

struct PtrPairHash {
  std::size_t operator()(const std::pair<TermPtr, TermPtr>& p) const {
    auto a = reinterpret_cast<std::uintptr_t>(p.first);
    auto b = reinterpret_cast<std::uintptr_t>(p.second);
    return std::hash<std::uintptr_t>{}(a * 0x9e3779b97f4a7c15ull ^ b);
  }
};

struct FsEntry {
  TermPtr result;
  FsClause clause;
  TermPtr support;
  int chi_level;
};

std::unordered_map<std::pair<TermPtr, TermPtr>, FsEntry, PtrPairHash>& fs_memo() {
  thread_local std::unordered_map<std::pair<TermPtr, TermPtr>, FsEntry, PtrPairHash> m;
  return m;
}

// Cached iterates of the ChiOne clause, per term.
std::unordered_map<TermPtr, std::vector<TermPtr>>& iterate_memo() {
  thread_local std::unordered_map<TermPtr, std::vector<TermPtr>> m;
  return m;
}

TermPtr canonical_zeta(TermPtr zeta, int d, Sys sys) {
  if (d == 0) {
    auto n = term_to_nat(zeta);
    if (!n) throw DomainError("parameter must be finite for countable cofinality");
    return nat_to_term(*n, sys);
  }
  if (zeta->kind == Kind::Zero) return zeta;
  if (zeta->nat) return nat_to_term(zeta->nat_value, sys);
  if (system_or(zeta, sys) != sys)
    throw DomainError("parameter from the other system");
  if (!lt(zeta, omega_level(sys, d)))
    throw DomainError("parameter too large for this cofinality");
  return zeta;
}

TermPtr eval(TermPtr a, TermPtr zeta, FsEntry& out);

// Descent of a collapse argument df (every part >= Omega_{i+1}) at parameter
// x. In argument position the descent of df is not the standalone one: each
// stage must renormalize the boundary between the zones of df, absorbing a
// leading part that collapses its own tail exactly. The stepwise image of df
// under the argument translation has those boundaries flattened away, so the
// argument descent is the round trip: translate df down, take the stepwise
// descent there, and translate the stage back up.
TermPtr arg_descent(TermPtr df, int i, TermPtr x, Sys sys) {
  FsEntry sub;
  if (sys == Sys::Step) return eval(df, x, sub);
  return it_level(i, eval(rt_level(i, df), to_step(x), sub));
}

TermPtr eval_raw(TermPtr a, TermPtr zeta, Sys sys, FsEntry& out) {
  out.support = zero();
  out.chi_level = -1;

  if (a->kind == Kind::Zero || a == one(sys)) {
    out.clause = FsClause::Base;
    return zero();
  }
  if (a->kind == Kind::Sum) {
    out.clause = FsClause::SumTail;
    FsEntry tail;
    TermPtr last = eval(a->parts.back(), zeta, tail);
    std::vector<TermPtr> parts(a->parts.begin(), a->parts.end() - 1);
    parts.push_back(last);
    return make_sum(parts);
  }

  int i = a->level;
  TermPtr df = delta_full(a->arg, i);
  TermPtr et = eta_lt(a->arg, i);
  bool fp = fixpoint_F(df, et, i);

  if (classify(et) == NumClass::Limit && !fp) {
    out.clause = FsClause::Continuity;
    FsEntry sub;
    return collapse(sys, i, make_sum(df, eval(et, zeta, sub)));
  }

  TermPtr ab = support_term(a);
  out.support = ab;

  if (df->kind == Kind::Zero) {
    out.clause = FsClause::PrincipalMultiple;
    if (et->kind == Kind::Zero) {
      // a = t_i(0); its descent runs through everything below level i.
      return zeta;
    }
    std::uint64_t n = *term_to_nat(zeta);
    if (n == 0) return ab;
    std::vector<TermPtr> copies(static_cast<std::size_t>(n) + 1, ab);
    return sum_of(copies);
  }

  int dd = dom_ind(df);
  if (dd >= i + 1) {
    out.clause = FsClause::ChiOne;
    int j = dd - 1;
    out.chi_level = j;
    std::uint64_t n = *term_to_nat(zeta);
    if (j == i) {
      auto& iter = iterate_memo()[a];
      while (iter.size() <= n) {
        TermPtr param = iter.empty() ? ab : iter.back();
        iter.push_back(collapse(sys, i, arg_descent(df, i, param, sys)));
      }
      return iter[static_cast<std::size_t>(n)];
    }
    if (sys == Sys::Step)
      throw InternalError("stepwise argument with cofinality above its level");
    // Descent through an intermediate level: the stage-n argument is the
    // n-th descent of df in argument position, which threads the collapse
    // iterates of the levels between j and i on the stepwise side.
    return collapse(sys, i, make_sum(arg_descent(df, i, zeta, sys), ab));
  }

  out.clause = FsClause::ChiZero;
  return collapse(sys, i, make_sum(arg_descent(df, i, zeta, sys), ab));
}

TermPtr eval(TermPtr a, TermPtr zeta, FsEntry& out) {
  Sys sys = system_or(a, system_or(zeta, Sys::Step));
  int d = dom_ind(a);
  TermPtr zc = canonical_zeta(zeta, d, sys);

  auto key = std::make_pair(a, zc);
  auto& memo = fs_memo();
  if (auto it = memo.find(key); it != memo.end()) {
    out = it->second;
    return out.result;
  }
  TermPtr r = eval_raw(a, zc, sys, out);
  out.result = r;
  memo.emplace(key, out);
  return r;
}

}  // namespace

const char* fs_clause_name(FsClause c) {
  switch (c) {
    case FsClause::Base:
      return "base";
    case FsClause::SumTail:
      return "sum-tail";
    case FsClause::Continuity:
      return "continuity";
    case FsClause::PrincipalMultiple:
      return "principal-multiple";
    case FsClause::ChiOne:
      return "chi-one";
    case FsClause::ChiZero:
      return "chi-zero";
  }
  return "?";
}

int chi(int i, TermPtr a) {
  thread_local std::unordered_map<std::pair<int, TermPtr>, int, IntPtrHash> memo;
  auto key = std::make_pair(i, a);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  int r;
  Sys sys = system_or(a, Sys::Step);
  Cmp c = compare(a, omega_level(sys, i + 1));
  if (c == Cmp::LT) {
    r = 0;
  } else if (c == Cmp::EQ) {
    r = 1;
  } else if (a->kind == Kind::Sum) {
    r = chi(i, a->parts.back());
  } else {
    int j = a->level;
    TermPtr df = delta_full(a->arg, j);
    TermPtr et = eta_lt(a->arg, j);
    if (classify(et) != NumClass::Limit || fixpoint_F(df, et, j))
      r = chi(i, df);
    else
      r = chi(i, et);
  }
  memo.emplace(key, r);
  return r;
}

int dom_ind(TermPtr a) {
  thread_local std::unordered_map<TermPtr, int> memo;
  if (auto it = memo.find(a); it != memo.end()) return it->second;

  int r;
  switch (a->kind) {
    case Kind::Zero:
      r = 0;
      break;
    case Kind::Sum:
      r = dom_ind(a->parts.back());
      break;
    case Kind::Collapse: {
      int i = a->level;
      TermPtr df = delta_full(a->arg, i);
      TermPtr et = eta_lt(a->arg, i);
      if (classify(et) == NumClass::Limit && !fixpoint_F(df, et, i)) {
        r = dom_ind(et);
      } else if (df->kind == Kind::Zero) {
        r = et->kind == Kind::Zero ? i : 0;
      } else {
        int dd = dom_ind(df);
        r = dd >= i + 1 ? 0 : dd;
      }
      break;
    }
    default:
      r = 0;
      break;
  }
  memo.emplace(a, r);
  return r;
}

TermPtr support_term(TermPtr a) {
  if (a->kind != Kind::Collapse)
    throw DomainError("support is defined for collapse terms");
  Sys sys = a->sys;
  int i = a->level;
  TermPtr df = delta_full(a->arg, i);
  TermPtr et = eta_lt(a->arg, i);

  if (fixpoint_F(df, et, i)) {
    auto loc = localization(a, i);
    std::size_t m = loc.entries.size() - 1;
    if (m < 1)
      throw InternalError("fixed point without a localization predecessor");
    TermPtr prev = loc.entries[m - 1];
    if (prev != et)
      throw InternalError("fixed-point support differs from the countable part");
    return prev;
  }
  if (et->kind == Kind::Zero && df->kind != Kind::Zero) {
    auto loc = localization(a, i);
    std::size_t m = loc.entries.size() - 1;
    if (m > 1) {
      TermPtr prev = loc.entries[m - 1];
      TermPtr dstar = star_of(df, i, sys);
      if (prev == dstar) {
        TermPtr d0 = fundseq(df, zero());
        if (lt(star_of(d0, i, sys), prev)) return prev;
      }
    }
    return zero();
  }
  if (classify(et) == NumClass::Successor)
    return collapse(sys, i, make_sum(df, pred(et)));
  return zero();
}

FsInfo fs_case(TermPtr a) {
  FsInfo info;
  info.support = zero();
  Sys sys = system_or(a, Sys::Step);
  if (a->kind == Kind::Zero || a == one(sys)) {
    info.clause = FsClause::Base;
    return info;
  }
  if (a->kind == Kind::Sum) {
    info.clause = FsClause::SumTail;
    return info;
  }
  int i = a->level;
  TermPtr df = delta_full(a->arg, i);
  TermPtr et = eta_lt(a->arg, i);
  if (classify(et) == NumClass::Limit && !fixpoint_F(df, et, i)) {
    info.clause = FsClause::Continuity;
    return info;
  }
  info.support = support_term(a);
  if (df->kind == Kind::Zero) {
    info.clause = FsClause::PrincipalMultiple;
    return info;
  }
  int dd = dom_ind(df);
  if (dd >= i + 1) {
    info.clause = FsClause::ChiOne;
    info.chi_level = dd - 1;
  } else {
    info.clause = FsClause::ChiZero;
  }
  return info;
}

TermPtr fundseq(TermPtr a, TermPtr zeta) {
  FsEntry e;
  return eval(a, zeta, e);
}

TermPtr fundseq(TermPtr a, TermPtr zeta, FsInfo& info) {
  FsEntry e;
  TermPtr r = eval(a, zeta, e);
  info.clause = e.clause;
  info.support = e.support;
  info.chi_level = e.chi_level;
  return r;
}

TermPtr fundseq_nat(TermPtr a, std::uint64_t n) {
  return fundseq(a, nat_to_term(n, system_or(a, Sys::Step)));
}

TermPtr fundseq_nat(TermPtr a, std::uint64_t n, FsInfo& info) {
  return fundseq(a, nat_to_term(n, system_or(a, Sys::Step)), info);
}

}  // namespace ord
