#pragma once

#include <cstdint>

#include "ordcalc/term.hpp"

namespace ord {

// Symbol count of a stepwise term: zeros plus pluses plus collapses.
std::uint64_t cnorm(TermPtr a);

// Norm of a simultaneous term: symbol count of its stepwise image.
std::uint64_t norm_bar(TermPtr a);

// Number of descents along first elements until 0 is reached. Both systems.
std::uint64_t gnorm(TermPtr a);

// Whether a + b is already in normal form: the last part of a dominates the
// first part of b. Requires both nonzero.
bool nf_predicate(TermPtr a, TermPtr b);

struct HardyBudget {
  std::uint64_t max_steps = 10'000'000;
  std::uint64_t max_value = 1'000'000'000;
};

// Hardy value: iterate n -> n+1 along descent until the term empties.
// Requires a countable term of countable cofinality. Throws BudgetError with
// the partial state when a bound is exceeded.
std::uint64_t hardy(TermPtr a, std::uint64_t n, HardyBudget budget = {});

// Two-index descent walk: pads with n - k while k <= n, afterwards descends
// once per increment of k.
TermPtr bracket_walk(TermPtr a, std::uint64_t n, std::uint64_t k);

}  // namespace ord
