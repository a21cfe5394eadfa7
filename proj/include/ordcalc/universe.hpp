#pragma once

#include <string>
#include <vector>

#include "ordcalc/term.hpp"

namespace ord {

struct UniverseSpec {
  Sys sys = Sys::Step;
  unsigned max_norm = 8;
  int max_level = 2;
  TermPtr upper_bound = nullptr;  // strict bound; nullptr for none
};

// Every valid term of the requested system with norm <= max_norm and all
// collapse levels <= max_level, sorted ascending.
std::vector<TermPtr> enumerate_universe(const UniverseSpec& spec);

std::string universe_label(const UniverseSpec& spec);

}  // namespace ord
