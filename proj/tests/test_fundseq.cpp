#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "ordcalc/fundseq.hpp"
#include "ordcalc/order.hpp"
#include "ordcalc/term.hpp"

using namespace ord;

namespace {

TermPtr T(const std::string& s) { return parse(s, Sys::Step); }

TermPtr times(TermPtr p, std::uint64_t k) {
  std::vector<TermPtr> parts(k, p);
  return make_sum(parts);
}

}  // namespace

TEST_CASE("cofinality indicator") {
  CHECK(chi(0, zero()) == 0);
  CHECK(chi(0, T("t0(t0(0))")) == 0);
  CHECK(chi(0, T("t1(0)")) == 1);
  CHECK(chi(1, T("t1(0)")) == 0);
  CHECK(chi(0, T("t1(0)+t1(0)")) == 1);
  CHECK(chi(0, T("t1(t1(0))")) == 1);
  CHECK(chi(0, T("t1(1)")) == 0);
  CHECK(chi(1, T("t2(t1(0))")) == 0);
  CHECK(chi(0, T("t2(t1(0))")) == 1);
  CHECK(chi(1, T("t2(0)")) == 1);
  CHECK(chi(0, T("t1(t2(t1(0)))")) == 1);
}

TEST_CASE("cofinality degree") {
  CHECK(dom_ind(zero()) == 0);
  CHECK(dom_ind(T("t0(0)")) == 0);
  CHECK(dom_ind(T("t0(t0(0))")) == 0);
  CHECK(dom_ind(T("t1(0)")) == 1);
  CHECK(dom_ind(T("t2(0)")) == 2);
  CHECK(dom_ind(T("t1(1)")) == 0);
  CHECK(dom_ind(T("t0(t1(0))")) == 0);
  CHECK(dom_ind(T("t2(t1(0))")) == 1);
  CHECK(dom_ind(T("t1(t2(t1(0)))")) == 1);
  CHECK(dom_ind(T("t2(0)+t1(0)")) == 1);
  CHECK(dom_ind(T("t1(0)+t0(0)")) == 0);
}

TEST_CASE("finite multiples of the support") {
  TermPtr gamma0 = T("t0(t1(t1(0)))");
  TermPtr a = collapse(Sys::Step, 0, gamma0);
  FsInfo info;
  for (std::uint64_t n = 0; n <= 4; ++n) {
    CHECK(fundseq_nat(a, n, info) == times(gamma0, n + 1));
    CHECK(info.clause == FsClause::PrincipalMultiple);
    CHECK(info.support == gamma0);
  }
  // An uncountable with empty argument hands the parameter back.
  CHECK(fundseq(T("t1(0)"), T("t0(t1(0))")) == T("t0(t1(0))"));
  // The first limit numeral steps through the numerals.
  CHECK(fundseq_nat(T("t0(t0(0))"), 0) == T("1"));
  CHECK(fundseq_nat(T("t0(t0(0))"), 4) == T("5"));
}

TEST_CASE("tower below the next fixed point") {
  TermPtr gamma0 = T("t0(t1(t1(0)))");
  TermPtr a = collapse(Sys::Step, 0, make_sum(T("t1(0)"), gamma0));
  FsInfo info;
  TermPtr prev = fundseq_nat(a, 0, info);
  CHECK(prev == collapse(Sys::Step, 0, gamma0));
  CHECK(info.clause == FsClause::ChiOne);
  CHECK(info.chi_level == 0);
  CHECK(info.support == gamma0);
  for (std::uint64_t n = 1; n <= 4; ++n) {
    TermPtr cur = fundseq_nat(a, n);
    CHECK(cur == collapse(Sys::Step, 0, prev));
    prev = cur;
  }
}

TEST_CASE("diagonal climb at the first strongly critical term") {
  TermPtr gamma0 = T("t0(t1(t1(0)))");
  FsInfo info;
  TermPtr prev = fundseq_nat(gamma0, 0, info);
  CHECK(prev == T("t0(t1(0))"));
  CHECK(info.clause == FsClause::ChiOne);
  CHECK(info.chi_level == 0);
  for (std::uint64_t n = 1; n <= 3; ++n) {
    TermPtr cur = fundseq_nat(gamma0, n);
    CHECK(cur == collapse(Sys::Step, 0, collapse(Sys::Step, 1, prev)));
    prev = cur;
  }
}

TEST_CASE("fixed levels pass the parameter into the argument") {
  TermPtr a = T("t0(t1(1))");
  FsInfo info;
  for (std::uint64_t n = 0; n <= 5; ++n) {
    CHECK(fundseq_nat(a, n, info) == collapse(Sys::Step, 0, times(T("t1(0)"), n + 1)));
    CHECK(info.clause == FsClause::ChiZero);
    CHECK(info.support == zero());
  }
}

TEST_CASE("nested rewriting of an uncountably cofinal argument") {
  TermPtr eta = T("t0(t1(t2(t1(0))))");
  FsInfo info;
  TermPtr prev = fundseq_nat(eta, 0, info);
  CHECK(prev == T("t0(t1(t2(0)))"));
  CHECK(info.clause == FsClause::ChiOne);
  CHECK(info.chi_level == 0);
  CHECK(info.support == zero());
  for (std::uint64_t n = 1; n <= 3; ++n) {
    TermPtr cur = fundseq_nat(eta, n);
    CHECK(cur == collapse(Sys::Step, 0, collapse(Sys::Step, 1, collapse(Sys::Step, 2, prev))));
    prev = cur;
  }

  TermPtr delta = T("t1(t2(t1(0)))");
  CHECK(dom_ind(delta) == 1);
  CHECK(chi(0, delta) == 1);
  CHECK(fundseq(delta, zero()) == T("t1(t2(0))"));
  CHECK(fundseq_nat(delta, 5) == collapse(Sys::Step, 1, collapse(Sys::Step, 2, T("5"))));
  CHECK(fundseq(delta, T("t0(t0(0))")) == T("t1(t2(t0(t0(0))))"));
}

TEST_CASE("countable continuity rewrites the tail") {
  TermPtr inner = T("t1(0)+t0(t1(0))");
  REQUIRE(classify(T("t0(t1(0))")) == NumClass::Limit);
  FsInfo info;
  TermPtr r = fundseq_nat(collapse(Sys::Step, 0, inner), 0, info);
  CHECK(info.clause == FsClause::Continuity);
  CHECK(r == T("t0(t1(0)+t0(0))"));
}

TEST_CASE("deep example with an inner continuity step") {
  TermPtr gamma0 = T("t0(t1(t1(0)))");
  TermPtr eps = collapse(Sys::Step, 0, make_sum(T("t1(0)"), gamma0));
  TermPtr delta = collapse(Sys::Step, 0, collapse(Sys::Step, 1, eps));
  FsInfo info;
  std::vector<TermPtr> eps_seq = {fundseq_nat(eps, 0)};
  for (std::uint64_t n = 1; n <= 3; ++n) eps_seq.push_back(fundseq_nat(eps, n));
  for (std::uint64_t n = 0; n <= 3; ++n) {
    TermPtr dn = fundseq_nat(delta, n, info);
    CHECK(info.clause == FsClause::ChiZero);
    CHECK(info.support == zero());
    CHECK(dn == collapse(Sys::Step, 0, collapse(Sys::Step, 1, eps_seq[n])));
  }
}

TEST_CASE("simultaneous stages renormalize the argument boundary") {
  // In argument position each stage must re-merge a leading part that
  // collapses its own tail exactly; the stage value therefore differs from
  // pasting the standalone rewrite of the argument back in. These values are
  // pinned to catch regressions in that renormalization.
  auto B = [](const std::string& s) { return parse(s, Sys::Sim); };

  // Standalone, the inner term steps through principal multiples.
  TermPtr beta = B("b1(b1(b2(0)))");
  CHECK(fundseq_nat(beta, 0) == B("b1(b2(0))"));
  CHECK(fundseq_nat(beta, 1) == B("b1(b2(0))+b1(b2(0))"));
  CHECK(fundseq_nat(beta, 2) == B("b1(b2(0))+b1(b2(0))+b1(b2(0))"));

  // In argument position the multiplier is absorbed into the head: stage n
  // carries n copies, not n+1.
  TermPtr a1 = B("b0(b2(0)+b1(b1(b2(0))))");
  CHECK(fundseq_nat(a1, 0) == B("b0(b2(0))"));
  CHECK(fundseq_nat(a1, 1) == B("b0(b2(0)+b1(b2(0)))"));
  CHECK(fundseq_nat(a1, 2) == B("b0(b2(0)+b1(b2(0))+b1(b2(0)))"));

  // The same absorption after a continuity rewrite inside a stage.
  TermPtr a2 = B("b0(b2(0)+b1(b2(0)+b1(0)))");
  CHECK(fundseq_nat(a2, 0) == B("b0(b2(0))"));
  CHECK(fundseq_nat(a2, 1) == B("b0(b2(0)+b1(b2(0)+b0(b2(0))))"));
  CHECK(fundseq_nat(a2, 2) == B("b0(b2(0)+b1(b2(0)+b0(b2(0)+b1(b2(0)+b0(b2(0))))))"));

  // Descent through an intermediate level, parameter as a summand.
  TermPtr a3 = B("b0(b2(0)+b2(0))");
  CHECK(fundseq_nat(a3, 0) == B("b0(b2(0))"));
  CHECK(fundseq_nat(a3, 1) == B("b0(b2(0)+b1(b2(0)+b1(b2(0))))"));
  CHECK(fundseq_nat(a3, 2) == B("b0(b2(0)+b1(b2(0)+b1(b2(0)+b1(b2(0)))))"));

  // Descent through an intermediate level, parameter inside a collapse.
  TermPtr a4 = B("b0(b2(b2(0)))");
  CHECK(fundseq_nat(a4, 0) == B("b0(b2(0))"));
  CHECK(fundseq_nat(a4, 1) == B("b0(b2(b1(b2(0))))"));
  CHECK(fundseq_nat(a4, 2) == B("b0(b2(b1(b2(b1(b2(0))))))"));

  // The seed of both: the level-1 iterates thread through the argument.
  TermPtr a5 = B("b0(b2(0))");
  CHECK(fundseq_nat(a5, 0) == B("b0(b1(0))"));
  CHECK(fundseq_nat(a5, 1) == B("b0(b1(b1(0)))"));
  CHECK(fundseq_nat(a5, 2) == B("b0(b1(b1(b1(0))))"));
}

TEST_CASE("sum rewriting keeps the prefix") {
  TermPtr omega = T("t0(t0(0))");
  TermPtr a = make_sum(T("t1(0)"), omega);
  FsInfo info;
  CHECK(fundseq_nat(a, 2, info) == make_sum(T("t1(0)"), T("3")));
  CHECK(info.clause == FsClause::SumTail);
  CHECK(fundseq_nat(make_sum(omega, omega), 1) == make_sum(omega, T("2")));
}

TEST_CASE("base cases") {
  FsInfo info;
  CHECK(fundseq_nat(zero(), 3, info) == zero());
  CHECK(info.clause == FsClause::Base);
  CHECK(fundseq_nat(T("t0(0)"), 3) == zero());
  CHECK(fundseq_nat(T("t0(t0(0))+t0(0)"), 2) == T("t0(t0(0))"));
}

TEST_CASE("support terms") {
  CHECK(support_term(T("t0(t1(t1(0)))")) == zero());
  CHECK(support_term(collapse(Sys::Step, 0, make_sum(T("t1(0)"), T("t0(t1(t1(0)))")))) ==
        T("t0(t1(t1(0)))"));
  CHECK(support_term(T("t0(t1(1))")) == zero());
  CHECK(support_term(T("t0(t1(0)+t0(0))")) == T("t0(t1(0))"));
  CHECK(support_term(T("t0(0)")) == zero());
}

TEST_CASE("parameter validation") {
  TermPtr omega = T("t0(t0(0))");
  // Countable cofinality requires a finite parameter.
  CHECK_THROWS_AS((void)fundseq(omega, T("t1(0)")), DomainError);
  CHECK_THROWS_AS((void)fundseq(omega, omega), DomainError);
  // Degree-1 terms accept anything countable, nothing at the bound.
  TermPtr om1 = T("t1(0)");
  CHECK_THROWS_AS((void)fundseq(om1, om1), DomainError);
  CHECK(fundseq(om1, omega) == omega);
  // Finite parameters are retagged across systems.
  CHECK(fundseq(omega, parse("2", Sys::Sim)) == T("3"));
  CHECK(fundseq_nat(parse("b1(0)", Sys::Sim), 4) == parse("4", Sys::Sim));
}

TEST_CASE("clause names are distinct and stable") {
  CHECK(std::string(fs_clause_name(FsClause::Base)) != fs_clause_name(FsClause::SumTail));
  CHECK(std::string(fs_clause_name(FsClause::ChiOne)) != fs_clause_name(FsClause::ChiZero));
  CHECK(fs_clause_name(FsClause::Continuity) != nullptr);
  CHECK(fs_clause_name(FsClause::PrincipalMultiple) != nullptr);
}
