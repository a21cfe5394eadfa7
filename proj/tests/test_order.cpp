#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

#include "ordcalc/order.hpp"
#include "ordcalc/term.hpp"

using namespace ord;

namespace {

TermPtr T(const std::string& s) { return parse(s, Sys::Step); }
TermPtr B(const std::string& s) { return parse(s, Sys::Sim); }

// Independent restatement of the subterm-collection rule: a level-i collapse
// counts unless it sits inside a collapse of some lower level, and the search
// never enters such a lower-level collapse.
void brute_p(TermPtr a, int i, std::vector<TermPtr>& out) {
  switch (a->kind) {
    case Kind::Zero:
      return;
    case Kind::Sum:
      for (TermPtr p : a->parts) brute_p(p, i, out);
      return;
    case Kind::Collapse:
      if (a->level < i) return;
      if (a->level == i) out.push_back(a);
      brute_p(a->arg, i, out);
      return;
  }
}

std::vector<TermPtr> brute_p_sorted(TermPtr a, int i) {
  std::vector<TermPtr> out;
  brute_p(a, i, out);
  std::sort(out.begin(), out.end(), [](TermPtr x, TermPtr y) { return lt(x, y); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

TEST_CASE("a hand-ordered chain compares consistently") {
  const std::vector<std::string> chain = {
      "0",
      "t0(0)",
      "2",
      "t0(t0(0))",
      "t0(t0(0))+t0(0)",
      "t0(t0(0))+t0(t0(0))",
      "t0(t0(0)+t0(0))",
      "t0(t0(t0(0)))",
      "t0(t1(0))",
      "t0(t1(0)+t0(0))",
      "t0(t1(0)+t1(0))",
      "t0(t1(1))",
      "t0(t1(t1(0)))",
      "t1(0)",
      "t1(1)",
      "t2(0)",
  };
  for (std::size_t i = 0; i < chain.size(); ++i) {
    for (std::size_t j = 0; j < chain.size(); ++j) {
      TermPtr a = T(chain[i]);
      TermPtr b = T(chain[j]);
      Cmp want = i < j ? Cmp::LT : (i == j ? Cmp::EQ : Cmp::GT);
      INFO(chain[i], " vs ", chain[j]);
      CHECK(compare(a, b) == want);
    }
  }
}

TEST_CASE("collapse subterm sets match the brute-force rule") {
  const std::vector<std::string> samples = {
      "0",
      "t0(0)",
      "t1(0)",
      "t0(t1(0))",
      "t0(t1(t1(0)))",
      "t1(t2(t2(t1(0))))",
      "t0(t1(t2(0)+t0(0)))",
      "t1(0)+t0(t1(0))+t0(0)",
      "t2(t1(0)+t0(0))",
      "t0(t1(0)+t0(t1(0)))",
  };
  for (const auto& s : samples) {
    TermPtr a = T(s);
    for (int i = 0; i <= 3; ++i) {
      INFO(s, " at level ", i);
      auto want = brute_p_sorted(a, i);
      auto got = P_set(a, i);
      CHECK(got == want);
      TermPtr expected_star = want.empty() ? zero() : want.back();
      CHECK(star(a, i) == expected_star);
    }
  }
}

TEST_CASE("star spot checks") {
  CHECK(star(zero(), 0) == zero());
  CHECK(star(zero(), 2) == zero());
  TermPtr eps0 = T("t0(t1(0))");
  CHECK(star(eps0, 0) == eps0);
  CHECK(star(eps0, 1) == zero());
  TermPtr gamma0 = T("t0(t1(t1(0)))");
  CHECK(star(gamma0, 0) == gamma0);
  CHECK(star(gamma0, 1) == zero());
  CHECK(star(T("t1(0)+t0(0)"), 0) == T("t0(0)"));
  CHECK(star(T("t1(0)+t0(0)"), 1) == T("t1(0)"));
  // A higher-level collapse does not seal lower ones off; only a strictly
  // lower level does.
  CHECK(star(T("t1(t0(t1(0)))"), 0) == T("t0(t1(0))"));
  CHECK(star(T("t1(t0(t1(0)))"), 1) == T("t1(t0(t1(0)))"));
  CHECK(star(T("t0(t1(t0(t1(0)))+t0(0))"), 1) == zero());
}

TEST_CASE("localization climbs through maximal arguments") {
  {
    LocalizationSeq loc = localization(T("t0(1)"), 0);
    CHECK(loc.level == 0);
    REQUIRE(loc.entries.size() == 2);
    CHECK(loc.entries[0] == T("t0(0)"));
    CHECK(loc.entries[1] == T("t0(t0(0))"));
  }
  {
    LocalizationSeq loc = localization(T("t1(1)"), 1);
    REQUIRE(loc.entries.size() == 2);
    CHECK(loc.entries[0] == T("t1(0)"));
    CHECK(loc.entries[1] == T("t1(1)"));
  }
  {
    TermPtr gamma0 = T("t0(t1(t1(0)))");
    TermPtr a = collapse(Sys::Step, 0, gamma0);
    LocalizationSeq loc = localization(a, 0);
    REQUIRE(loc.entries.size() == 3);
    CHECK(loc.entries[0] == T("t0(0)"));
    CHECK(loc.entries[1] == gamma0);
    CHECK(loc.entries[2] == a);
  }
  {
    TermPtr tau = T("t0(t1(t2(0)))");
    TermPtr a = collapse(Sys::Step, 0, make_sum(T("t1(0)"), tau));
    LocalizationSeq loc = localization(a, 0);
    REQUIRE(loc.entries.size() == 3);
    CHECK(loc.entries[0] == T("t0(0)"));
    CHECK(loc.entries[1] == tau);
    CHECK(loc.entries[2] == a);
  }
  {
    TermPtr nu = T("t1(t2(t2(t1(0))))");
    TermPtr a = collapse(Sys::Step, 1, collapse(Sys::Step, 2, nu));
    LocalizationSeq loc = localization(a, 1);
    REQUIRE(loc.entries.size() == 3);
    CHECK(loc.entries[0] == T("t1(0)"));
    CHECK(loc.entries[1] == nu);
    CHECK(loc.entries[2] == a);
  }
  // Every entry is an eligible collapse subterm, strictly ascending.
  for (const char* s : {"t0(t1(t1(0)))", "t0(t1(t2(0)+t0(0)))", "t1(t2(t1(0)))"}) {
    TermPtr a = T(s);
    LocalizationSeq loc = localization(a, a->level);
    auto p = P_set(a, a->level);
    CHECK(loc.entries.back() == a);
    for (std::size_t k = 0; k + 1 < loc.entries.size(); ++k) {
      CHECK(lt(loc.entries[k], loc.entries[k + 1]));
    }
    for (std::size_t k = 1; k < loc.entries.size(); ++k) {
      CHECK(std::find(p.begin(), p.end(), loc.entries[k]) != p.end());
    }
  }
  CHECK_THROWS_AS((void)localization(zero(), 0), DomainError);
  CHECK_THROWS_AS((void)localization(T("t1(0)+t0(0)"), 0), DomainError);
}

TEST_CASE("alpha_plus bumps the argument by one") {
  CHECK(alpha_plus(T("t0(t1(0))")) == T("t0(t1(0)+t0(0))"));
  CHECK(alpha_plus(T("t1(0)")) == T("t1(1)"));
  CHECK(alpha_plus(B("b1(b2(0))")) == B("b1(b2(0)+b0(0))"));
  CHECK_THROWS_AS((void)alpha_plus(zero()), DomainError);
}

TEST_CASE("fixed-point condition") {
  TermPtr gamma0 = T("t0(t1(t1(0)))");
  CHECK(fixpoint_F(T("t1(0)"), gamma0, 0));
  CHECK(!fixpoint_F(T("t1(t1(0))"), gamma0, 0));
  CHECK(!fixpoint_F(T("t1(0)"), zero(), 0));
  CHECK(!fixpoint_F(T("t1(0)"), T("t0(0)"), 0));
  CHECK(!fixpoint_F(T("t1(0)"), T("t0(t0(0))+t0(0)"), 0));
  CHECK(!fixpoint_F(T("t1(0)"), gamma0, 1));
  // Level 1 instance: the argument's uncountable part must exceed delta.
  TermPtr nu = T("t1(t2(t2(t1(0))))");
  CHECK(fixpoint_F(T("t2(t1(0))"), nu, 1));
  CHECK(!fixpoint_F(T("t2(t2(t1(0)))"), nu, 1));
}

TEST_CASE("stepwise validity") {
  CHECK(valid_T(zero()));
  CHECK(valid_T(T("t0(t1(0)+t0(0))")));
  CHECK(valid_T(T("t0(t1(t2(0)+t0(0)))")));
  // A level-j argument must stay below the second-next uncountable.
  CHECK(!valid_T(collapse(Sys::Step, 0, T("t2(0)"))));
  CHECK(!valid_T(collapse(Sys::Step, 0, T("t3(t0(0))"))));
  CHECK(valid_T(T("t0(t1(t2(t3(0))))")));
  // Raw sums with ascending parts are out of shape.
  CHECK(!valid_T(sum_of({T("t0(0)"), T("t0(t0(0))")})));
  CHECK(valid_T(sum_of({T("t0(t0(0))"), T("t0(0)")})));
  CHECK(!valid_T(B("b0(0)")));
}
