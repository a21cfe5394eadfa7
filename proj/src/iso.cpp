#include "ordcalc/iso.hpp"

#include <unordered_map>
#include <utility>
#include <vector>

#include "ordcalc/bar.hpp"
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

using LevelMemo = std::unordered_map<std::pair<int, TermPtr>, TermPtr, IntPtrHash>;

LevelMemo& it_memo() {
  thread_local LevelMemo m;
  return m;
}

LevelMemo& rt_memo() {
  thread_local LevelMemo m;
  return m;
}

std::vector<TermPtr> principal_parts(TermPtr a) {
  if (a->kind == Kind::Sum) return a->parts;
  if (a->kind == Kind::Zero) return {};
  return {a};
}

}  // namespace

TermPtr it_level(int m, TermPtr a) {
  if (a->kind == Kind::Zero) return a;
  if (system_or(a, Sys::Step) != Sys::Step)
    throw DomainError("argument translation expects a stepwise term");

  auto key = std::make_pair(m, a);
  auto& memo = it_memo();
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  SplitArg sp = split_arg(a, m);
  if (sp.xi->kind != Kind::Zero)
    throw DomainError("argument exceeds the collapse level by two or more");

  TermPtr result;
  if (sp.delta->kind == Kind::Zero) {
    result = to_bar(sp.eta);
  } else {
    auto dparts = principal_parts(sp.delta);
    TermPtr d1 = dparts.front();
    TermPtr xi = zero();
    if (d1 != omega_level(Sys::Step, m + 1)) {
      auto loc = localization(d1, m + 1);
      TermPtr e = loc.entries.at(1);
      xi = delta_full(e->arg, m + 1);
    }
    bool keep_first =
        xi->kind == Kind::Zero || lt(collapse(Sys::Step, m + 1, xi), d1);
    std::vector<TermPtr> out;
    if (xi->kind != Kind::Zero) out.push_back(it_level(m + 1, xi));
    for (std::size_t l = 0; l < dparts.size(); ++l) {
      if (l == 0 && !keep_first) continue;
      out.push_back(collapse(Sys::Sim, m + 1, it_level(m + 1, dparts[l]->arg)));
    }
    out.push_back(to_bar(sp.eta));
    result = make_sum(out);
  }
  memo.emplace(key, result);
  return result;
}

TermPtr rt_level(int m, TermPtr a) {
  if (a->kind == Kind::Zero) return a;
  if (system_or(a, Sys::Sim) != Sys::Sim)
    throw DomainError("argument translation expects a simultaneous term");

  auto key = std::make_pair(m, a);
  auto& memo = rt_memo();
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  if (!in_dom(a, m))
    throw DomainError("argument outside the collapsing domain of this level");

  SplitArg sp = split_arg(a, m);
  std::vector<TermPtr> out;
  if (sp.xi->kind != Kind::Zero) {
    if (sp.xi == a && ht(a) <= m + 1)
      throw InternalError("translation recursion is not decreasing");
    out.push_back(collapse(Sys::Step, m + 1, rt_level(m + 1, sp.xi)));
  }
  for (TermPtr p : principal_parts(sp.delta))
    out.push_back(collapse(Sys::Step, m + 1, rt_level(m + 1, p->arg)));
  out.push_back(to_step(sp.eta));
  TermPtr result = make_sum(out);
  memo.emplace(key, result);
  return result;
}

TermPtr to_bar(TermPtr a) {
  switch (a->kind) {
    case Kind::Zero:
      return a;
    case Kind::Sum: {
      std::vector<TermPtr> out;
      out.reserve(a->parts.size());
      for (TermPtr p : a->parts) out.push_back(to_bar(p));
      return make_sum(out);
    }
    case Kind::Collapse:
      if (a->sys != Sys::Step)
        throw DomainError("term is already simultaneous");
      return collapse(Sys::Sim, a->level, it_level(a->level, a->arg));
  }
  return a;
}

TermPtr to_step(TermPtr a) {
  switch (a->kind) {
    case Kind::Zero:
      return a;
    case Kind::Sum: {
      std::vector<TermPtr> out;
      out.reserve(a->parts.size());
      for (TermPtr p : a->parts) out.push_back(to_step(p));
      return make_sum(out);
    }
    case Kind::Collapse:
      if (a->sys != Sys::Sim)
        throw DomainError("term is already stepwise");
      return collapse(Sys::Step, a->level, rt_level(a->level, a->arg));
  }
  return a;
}

}  // namespace ord
