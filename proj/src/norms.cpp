#include "ordcalc/norms.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "ordcalc/fundseq.hpp"
#include "ordcalc/iso.hpp"
#include "ordcalc/order.hpp"

namespace ord {

std::uint64_t cnorm(TermPtr a) {
  switch (a->kind) {
    case Kind::Zero:
      return 1;
    case Kind::Collapse:
      if (a->sys != Sys::Step)
        throw DomainError("symbol count is defined on stepwise terms");
      return cnorm(a->arg) + 1;
    case Kind::Sum: {
      std::uint64_t total = a->parts.size() - 1;
      for (TermPtr p : a->parts) total += cnorm(p);
      return total;
    }
  }
  return 0;
}

std::uint64_t norm_bar(TermPtr a) {
  if (a->kind == Kind::Zero) return 1;
  if (system_or(a, Sys::Sim) != Sys::Sim)
    throw DomainError("this norm is defined on simultaneous terms");
  return cnorm(to_step(a));
}

namespace {

constexpr std::uint64_t kGnormCap = 1'000'000;

}  // namespace

std::uint64_t gnorm(TermPtr a) {
  thread_local std::unordered_map<TermPtr, std::uint64_t> memo;
  std::vector<TermPtr> path;
  TermPtr cur = a;
  std::uint64_t base = 0;
  while (cur->kind != Kind::Zero) {
    if (auto it = memo.find(cur); it != memo.end()) {
      base = it->second;
      break;
    }
    path.push_back(cur);
    if (path.size() > kGnormCap)
      throw InternalError("descent norm exceeds the iteration cap");
    cur = fundseq(cur, zero());
  }
  for (auto it = path.rbegin(); it != path.rend(); ++it)
    memo.emplace(*it, ++base);
  return path.empty() ? (a->kind == Kind::Zero ? 0 : base)
                      : memo.at(a);
}

bool nf_predicate(TermPtr a, TermPtr b) {
  if (a->kind == Kind::Zero || b->kind == Kind::Zero)
    throw DomainError("normal-form test needs nonzero terms");
  return geq(end_part(a), mc(b));
}

namespace {

// One limit resolution whose value is a plain number: a term with the
// principal-multiple clause and support 1 descends to n+1 ones.
bool steps_to_number(TermPtr limit_end) {
  if (limit_end->kind != Kind::Collapse) return false;
  FsInfo info = fs_case(limit_end);
  return info.clause == FsClause::PrincipalMultiple &&
         info.support == one(limit_end->sys);
}

[[noreturn]] void out_of_budget(std::uint64_t steps, TermPtr cur, std::uint64_t n) {
  throw BudgetError("descent budget exceeded", steps, print(cur), n);
}

// Symbol count of a, but never more than cap: the walk stops counting once
// the cap is reached, so the cost of the count is itself bounded by the cap.
std::uint64_t norm_at_most(TermPtr a, std::uint64_t cap) {
  if (cap == 0) return 0;
  switch (a->kind) {
    case Kind::Zero:
      return 1;
    case Kind::Collapse:
      return std::min(cap, norm_at_most(a->arg, cap) + 1);
    case Kind::Sum: {
      std::uint64_t total = a->parts.size() - 1;
      for (TermPtr p : a->parts) {
        if (total >= cap) return cap;
        total += norm_at_most(p, cap - total);
      }
      return std::min(cap, total);
    }
  }
  return 1;
}

}  // namespace

std::uint64_t hardy(TermPtr a, std::uint64_t n, HardyBudget budget) {
  if (dom_ind(a) != 0 || !lt(a, omega_level(system_or(a, Sys::Step), 1)))
    throw DomainError("descent requires a countable term of countable cofinality");

  TermPtr cur = a;
  std::uint64_t steps = 0;
  while (cur->kind != Kind::Zero) {
    if (cur->nat) {
      std::uint64_t k = cur->nat_value;
      if (steps + k > budget.max_steps || n + k > budget.max_value)
        out_of_budget(steps, cur, n);
      return n + k;
    }
    TermPtr end = end_part(cur);
    Sys sys = cur->sys;
    if (end == one(sys)) {
      // Strip the finite tail in one batch.
      const auto& parts = cur->parts;
      std::size_t t = 0;
      while (t < parts.size() && parts[parts.size() - 1 - t] == one(sys)) ++t;
      if (steps + t > budget.max_steps || n + t > budget.max_value)
        out_of_budget(steps, cur, n);
      steps += t;
      n += t;
      std::vector<TermPtr> rest(parts.begin(), parts.end() - t);
      cur = rest.size() == 1 ? rest.front() : sum_of(rest);
      continue;
    }
    if (steps_to_number(end)) {
      // The end part resolves to the number n+1; consume it without
      // materializing the ones.
      std::uint64_t k = n + 2;  // one limit step plus n+1 unit steps
      if (steps + k > budget.max_steps || n + 1 + (n + 1) > budget.max_value)
        out_of_budget(steps, cur, n);
      steps += k;
      n = 2 * n + 2;
      if (cur->kind == Kind::Collapse) {
        cur = zero();
      } else {
        std::vector<TermPtr> rest(cur->parts.begin(), cur->parts.end() - 1);
        cur = rest.size() == 1 ? rest.front() : sum_of(rest);
      }
      continue;
    }
    // Resolving one limit stage recurses through the whole written term, so
    // a stage costs as many steps as the term has symbols. Charging the true
    // cost makes the step budget bound the work (and the size of any stage
    // the walk materializes), not just the number of stages.
    std::uint64_t remaining = budget.max_steps - steps;
    std::uint64_t w = norm_at_most(cur, remaining < UINT64_MAX ? remaining + 1 : remaining);
    if (w > remaining || n + 1 > budget.max_value)
      out_of_budget(steps, cur, n);
    cur = fundseq_nat(cur, n);
    n += 1;
    steps += w;
  }
  return n;
}

TermPtr bracket_walk(TermPtr a, std::uint64_t n, std::uint64_t k) {
  if (k <= n) return make_sum(a, nat_to_term(n - k, system_or(a, Sys::Step)));
  TermPtr cur = a;
  for (std::uint64_t j = n; j < k; ++j) {
    if (cur->kind == Kind::Zero) return cur;
    cur = fundseq_nat(cur, j);
  }
  return cur;
}

}  // namespace ord
