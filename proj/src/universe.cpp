#include "ordcalc/universe.hpp"

#include <algorithm>
#include <unordered_map>

#include "ordcalc/iso.hpp"
#include "ordcalc/norms.hpp"
#include "ordcalc/order.hpp"

namespace ord {
namespace {

std::vector<TermPtr> components(TermPtr a) {
  if (a->kind == Kind::Sum) return a->parts;
  if (a->kind == Kind::Zero) return {};
  return {a};
}

// All weakly decreasing part sequences over `prins` (sorted descending by
// value) whose symbol count, parts plus separating pluses, fits the budget.
void grow_sums(const std::vector<TermPtr>& prins,
               const std::vector<std::uint64_t>& norms, unsigned budget,
               std::size_t start, std::uint64_t used,
               std::vector<TermPtr>& chosen, std::vector<TermPtr>& out) {
  for (std::size_t idx = start; idx < prins.size(); ++idx) {
    std::uint64_t next = used + norms[idx] + (chosen.empty() ? 0 : 1);
    if (next > budget) continue;
    chosen.push_back(prins[idx]);
    if (chosen.size() >= 2) out.push_back(sum_of(chosen));
    grow_sums(prins, norms, budget, idx, next, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<TermPtr> enumerate_universe(const UniverseSpec& spec) {
  unsigned N = spec.max_norm;
  int L = spec.max_level;
  std::vector<TermPtr> out;
  if (N >= 1) out.push_back(zero());

  // Terms of each exact symbol count, in the stepwise system first.
  std::vector<std::vector<TermPtr>> terms(N + 1);
  std::vector<TermPtr> prins;
  if (N >= 1) terms[1].push_back(zero());

  for (unsigned n = 2; n <= N; ++n) {
    std::vector<TermPtr> collapses;
    for (TermPtr x : terms[n - 1]) {
      for (int i = 0; i <= L; ++i) {
        bool fits = true;
        for (TermPtr p : components(x)) {
          if (p->level > i + 1) {
            fits = false;
            break;
          }
        }
        if (fits) collapses.push_back(collapse(Sys::Step, i, x));
      }
    }
    for (TermPtr c : collapses) {
      terms[n].push_back(c);
      prins.push_back(c);
    }
    // Sums of total count n are assembled below from smaller principals; they
    // feed collapses of count n+1, so collect them into terms[n] too.
    if (n >= 5) {
      std::vector<std::uint64_t> norms_of;
      norms_of.reserve(prins.size());
      for (TermPtr p : prins) norms_of.push_back(cnorm(p));
      std::vector<TermPtr> desc = prins;
      std::sort(desc.begin(), desc.end(),
                [](TermPtr a, TermPtr b) { return gt(a, b); });
      std::vector<std::uint64_t> desc_norms;
      desc_norms.reserve(desc.size());
      for (TermPtr p : desc) desc_norms.push_back(cnorm(p));
      std::vector<TermPtr> chosen, sums;
      grow_sums(desc, desc_norms, n, 0, 0, chosen, sums);
      for (TermPtr s : sums)
        if (cnorm(s) == n) terms[n].push_back(s);
    }
  }

  for (unsigned n = 2; n <= N; ++n)
    for (TermPtr t : terms[n]) out.push_back(t);

  if (spec.sys == Sys::Sim) {
    std::vector<TermPtr> mapped;
    mapped.reserve(out.size());
    for (TermPtr t : out) mapped.push_back(to_bar(t));
    out = std::move(mapped);
  }

  std::sort(out.begin(), out.end(),
            [](TermPtr a, TermPtr b) { return lt(a, b); });
  out.erase(std::unique(out.begin(), out.end()), out.end());

  if (spec.upper_bound) {
    auto cut = std::lower_bound(
        out.begin(), out.end(), spec.upper_bound,
        [](TermPtr a, TermPtr b) { return lt(a, b); });
    out.erase(cut, out.end());
  }
  return out;
}

std::string universe_label(const UniverseSpec& spec) {
  std::string s = spec.sys == Sys::Step ? "T" : "B";
  s += ":norm<=" + std::to_string(spec.max_norm);
  s += ":level<=" + std::to_string(spec.max_level);
  if (spec.upper_bound) s += ":below " + print(spec.upper_bound);
  return s;
}

}  // namespace ord
