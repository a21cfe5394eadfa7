#pragma once

#include "ordcalc/term.hpp"

namespace ord {

// Structural validity of a stepwise term: collapse arguments stay below the
// second-next uncountable, sums are weakly decreasing principal parts.
bool valid_T(TermPtr a);

// Value of the largest level-j collapse subterm that is not inside a
// lower-level collapse; 0 when there is none. Stepwise terms.
TermPtr star(TermPtr a, int j);

// All level-i collapse subterms not inside a collapse of level < i,
// ascending and duplicate-free. Works for both systems.
std::vector<TermPtr> P_set(TermPtr a, int i);

// Fixed-point condition: eta is a level-j collapse whose own uncountable part
// exceeds delta while eta exceeds the level-j star of delta. For simultaneous
// terms delta must additionally lie in the level-j collapsing domain.
bool fixpoint_F(TermPtr delta, TermPtr eta, int j);

// Next level-i collapse with the same uncountable part: t_i(arg + 1).
TermPtr alpha_plus(TermPtr a);

struct LocalizationSeq {
  int level;
  std::vector<TermPtr> entries;  // entries.front() = t_i(0), entries.back() = the term
};

// Strictly increasing climb through P_set(a, i), each step taking the element
// of maximal argument above the previous one. Requires a level-i collapse.
LocalizationSeq localization(TermPtr a, int i);

}  // namespace ord
