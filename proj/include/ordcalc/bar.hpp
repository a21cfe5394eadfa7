#pragma once

#include "ordcalc/order.hpp"
#include "ordcalc/term.hpp"

namespace ord {

// Coefficient sets of a simultaneous term at level i. `ktau` holds the values
// of level-i collapse subterms reachable without entering a lower level
// (no descent through a level-i collapse); `kstar` holds the arguments of
// every collapse of level >= i reachable the same way. Both ascending.
struct KSets {
  int level = 0;
  std::vector<TermPtr> ktau;
  std::vector<TermPtr> kstar;
};

KSets k_sets(TermPtr a, int i);

// max(ktau | {0}) and max(kstar | {0}) computed directly.
TermPtr star_bar(TermPtr a, int i);
TermPtr kstar_max(TermPtr a, int i);

// Whether a may serve as the argument of a level-m simultaneous collapse:
// every level-(m+1) coefficient argument lies strictly below a.
bool in_dom(TermPtr a, int m);

// Structural validity of a simultaneous term: every collapse argument lies in
// the collapsing domain of its level, sums are weakly decreasing principals.
bool valid_bar(TermPtr a);

// One more than the largest collapse level occurring anywhere; 0 for terms
// without a collapse.
int ht(TermPtr a);

// Star dispatch on the system tag.
inline TermPtr star_of(TermPtr a, int j, Sys sys) {
  return sys == Sys::Step ? star(a, j) : star_bar(a, j);
}

}  // namespace ord
