#include "ordcalc/bar.hpp"

#include <algorithm>
#include <unordered_set>

#include "ordcalc/order.hpp"

namespace ord {
namespace {

void collect_ktau(TermPtr a, int i, std::vector<TermPtr>& out) {
  switch (a->kind) {
    case Kind::Zero:
      return;
    case Kind::Sum:
      for (TermPtr p : a->parts) collect_ktau(p, i, out);
      return;
    case Kind::Collapse:
      if (a->level < i) return;
      if (a->level == i) {
        out.push_back(a);
        return;
      }
      collect_ktau(a->arg, i, out);
      return;
  }
}

void collect_kstar(TermPtr a, int i, std::vector<TermPtr>& out) {
  switch (a->kind) {
    case Kind::Zero:
      return;
    case Kind::Sum:
      for (TermPtr p : a->parts) collect_kstar(p, i, out);
      return;
    case Kind::Collapse:
      if (a->level < i) return;
      out.push_back(a->arg);
      collect_kstar(a->arg, i, out);
      return;
  }
}

void sort_unique(std::vector<TermPtr>& v) {
  std::sort(v.begin(), v.end(), [](TermPtr x, TermPtr y) { return lt(x, y); });
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

KSets k_sets(TermPtr a, int i) {
  KSets k;
  k.level = i;
  collect_ktau(a, i, k.ktau);
  collect_kstar(a, i, k.kstar);
  sort_unique(k.ktau);
  sort_unique(k.kstar);
  return k;
}

TermPtr star_bar(TermPtr a, int i) {
  switch (a->kind) {
    case Kind::Zero:
      return zero();
    case Kind::Sum: {
      TermPtr best = zero();
      for (TermPtr p : a->parts) best = max_term(best, star_bar(p, i));
      return best;
    }
    case Kind::Collapse:
      if (a->level < i) return zero();
      if (a->level == i) return a;
      return star_bar(a->arg, i);
  }
  return zero();
}

TermPtr kstar_max(TermPtr a, int i) {
  switch (a->kind) {
    case Kind::Zero:
      return zero();
    case Kind::Sum: {
      TermPtr best = zero();
      for (TermPtr p : a->parts) best = max_term(best, kstar_max(p, i));
      return best;
    }
    case Kind::Collapse:
      if (a->level < i) return zero();
      return max_term(a->arg, kstar_max(a->arg, i));
  }
  return zero();
}

bool in_dom(TermPtr a, int m) {
  if (a->kind == Kind::Zero) return true;
  return lt(kstar_max(a, m + 1), a);
}

bool valid_bar(TermPtr a) {
  thread_local std::unordered_set<TermPtr> ok;
  if (a->kind == Kind::Zero) return true;
  if (ok.count(a)) return true;
  bool good = false;
  switch (a->kind) {
    case Kind::Zero:
      good = true;
      break;
    case Kind::Collapse:
      good = a->sys == Sys::Sim && valid_bar(a->arg) && in_dom(a->arg, a->level);
      break;
    case Kind::Sum: {
      if (a->sys != Sys::Sim || a->parts.size() < 2) return false;
      good = true;
      for (TermPtr p : a->parts) {
        if (p->kind != Kind::Collapse || !valid_bar(p)) {
          good = false;
          break;
        }
      }
      for (std::size_t k = 0; good && k + 1 < a->parts.size(); ++k)
        if (compare(a->parts[k], a->parts[k + 1]) == Cmp::LT) good = false;
      break;
    }
  }
  if (good) ok.insert(a);
  return good;
}

int ht(TermPtr a) { return a->top_level < 0 ? 0 : a->top_level + 1; }

}  // namespace ord
