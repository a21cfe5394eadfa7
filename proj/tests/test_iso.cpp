#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "ordcalc/bar.hpp"
#include "ordcalc/iso.hpp"
#include "ordcalc/order.hpp"
#include "ordcalc/term.hpp"

using namespace ord;

namespace {

TermPtr T(const std::string& s) { return parse(s, Sys::Step); }
TermPtr B(const std::string& s) { return parse(s, Sys::Sim); }

}  // namespace

TEST_CASE("worked translation") {
  TermPtr a = T("t0(t1(t2(0)+t0(0)))");
  TermPtr b = B("b0(b2(0)+b1(b2(0)+b0(0)))");
  CHECK(to_bar(a) == b);
  CHECK(to_step(b) == a);
  CHECK(it_level(0, T("t1(t2(0)+t0(0))")) == B("b2(0)+b1(b2(0)+b0(0))"));
  CHECK(rt_level(0, B("b2(0)+b1(b2(0)+b0(0))")) == T("t1(t2(0)+t0(0))"));
}

TEST_CASE("simple translations") {
  CHECK(to_bar(zero()) == zero());
  CHECK(to_bar(T("t0(0)")) == B("b0(0)"));
  CHECK(to_bar(T("3")) == B("3"));
  CHECK(to_step(B("3")) == T("3"));
  CHECK(to_bar(T("t1(0)")) == B("b1(0)"));
  CHECK(to_bar(T("t2(0)")) == B("b2(0)"));
  CHECK(to_bar(T("t0(t0(0))")) == B("b0(b0(0))"));
  CHECK(to_bar(T("t0(t1(0))")) == B("b0(b1(0))"));
  CHECK(it_level(1, T("t2(0)")) == B("b2(0)"));
  CHECK(rt_level(1, B("b2(0)")) == T("t2(0)"));
  CHECK(it_level(0, zero()) == zero());
}

TEST_CASE("round trips") {
  const std::vector<std::string> samples = {
      "0",
      "t0(0)",
      "4",
      "t0(t0(0))",
      "t0(t0(0)+t0(0))",
      "t0(t1(0))",
      "t0(t1(0)+t0(0))",
      "t0(t1(1))",
      "t0(t1(t1(0)))",
      "t0(t1(t2(0)))",
      "t0(t1(t2(0)+t0(0)))",
      "t0(t1(t2(t1(0))))",
      "t1(t2(0))",
      "t1(t2(t1(0)))",
      "t1(0)+t0(t1(0))+t0(0)",
      "t2(t1(0))",
  };
  for (const auto& s : samples) {
    TermPtr a = T(s);
    TermPtr img = to_bar(a);
    INFO(s);
    CHECK(valid_bar(img));
    CHECK(to_step(img) == a);
    CHECK(ht(img) == ht(a));
  }
}

TEST_CASE("order is preserved") {
  const std::vector<std::string> chain = {
      "0",       "t0(0)",          "t0(t0(0))",      "t0(t1(0))",
      "t0(t1(1))", "t0(t1(t1(0)))", "t0(t1(t2(0)))", "t1(0)",
      "t1(t2(0))", "t2(0)",
  };
  std::vector<TermPtr> imgs;
  for (const auto& s : chain) imgs.push_back(to_bar(T(s)));
  for (std::size_t i = 0; i < imgs.size(); ++i) {
    for (std::size_t j = 0; j < imgs.size(); ++j) {
      Cmp want = i < j ? Cmp::LT : (i == j ? Cmp::EQ : Cmp::GT);
      INFO(chain[i], " vs ", chain[j]);
      CHECK(compare(imgs[i], imgs[j]) == want);
    }
  }
}

TEST_CASE("argument translations are mutually inverse") {
  const std::vector<std::string> args = {
      "0", "t0(0)", "t1(0)", "t1(t2(0))", "t1(t2(0)+t0(0))", "t1(0)+t0(0)", "t1(t2(t1(0)))",
  };
  for (const auto& s : args) {
    TermPtr x = T(s);
    INFO(s);
    TermPtr y = it_level(0, x);
    CHECK(rt_level(0, y) == x);
  }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS((void)rt_level(0, B("b1(b2(0))")), DomainError);
  CHECK_THROWS_AS((void)to_bar(B("b0(0)")), DomainError);
  CHECK_THROWS_AS((void)to_step(T("t0(0)")), DomainError);
}
