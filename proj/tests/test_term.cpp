#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "ordcalc/term.hpp"

using namespace ord;

namespace {

TermPtr T(const std::string& s) { return parse(s, Sys::Step); }
TermPtr B(const std::string& s) { return parse(s, Sys::Sim); }

}  // namespace

TEST_CASE("basic constructors and interning") {
  CHECK(zero()->kind == Kind::Zero);
  CHECK(zero() == zero());

  TermPtr w0 = omega_level(Sys::Step, 0);
  CHECK(w0->kind == Kind::Collapse);
  CHECK(w0->level == 0);
  CHECK(w0->arg == zero());
  CHECK(w0 == collapse(Sys::Step, 0, zero()));
  CHECK(w0 == T("t0(0)"));
  CHECK(w0 == one(Sys::Step));

  TermPtr wb1 = omega_level(Sys::Sim, 1);
  CHECK(wb1 == B("b1(0)"));
  CHECK(wb1 != omega_level(Sys::Step, 1));

  // Structural equality is pointer equality.
  TermPtr a = T("t0(t1(0)+t0(0))");
  TermPtr b = collapse(Sys::Step, 0, make_sum(omega_level(Sys::Step, 1), one(Sys::Step)));
  CHECK(a == b);
}

TEST_CASE("sum normalization: absorption, flattening, zero") {
  TermPtr one_t = one(Sys::Step);
  TermPtr omega = T("t0(t0(0))");

  // Left absorption: 1 + w == w, but w + 1 stays a two-part sum.
  CHECK(make_sum(one_t, omega) == omega);
  TermPtr wp1 = make_sum(omega, one_t);
  CHECK(wp1->kind == Kind::Sum);
  CHECK(print(wp1) == "t0(t0(0))+t0(0)");

  // Zero is neutral on both sides.
  CHECK(make_sum(zero(), omega) == omega);
  CHECK(make_sum(omega, zero()) == omega);
  CHECK(make_sum(zero(), zero()) == zero());

  // Nested sums flatten.
  TermPtr two = make_sum(one_t, one_t);
  TermPtr nested = make_sum(two, make_sum(omega, two));
  CHECK(nested == make_sum(omega, two));
  CHECK(nested->parts.size() == 3);

  // Associativity through the normalizer.
  TermPtr x = T("t1(0)");
  CHECK(make_sum(make_sum(x, omega), one_t) == make_sum(x, make_sum(omega, one_t)));

  // sum_of keeps the raw shape.
  TermPtr raw = sum_of({omega, one_t});
  CHECK(raw == wp1);
}

TEST_CASE("end_part and mc") {
  TermPtr s = T("t1(0)+t0(t0(0))+t0(0)");
  CHECK(mc(s) == T("t1(0)"));
  CHECK(end_part(s) == T("t0(0)"));
  CHECK(mc(zero()) == zero());
  CHECK(end_part(zero()) == zero());
  TermPtr p = T("t0(t0(0))");
  CHECK(mc(p) == p);
  CHECK(end_part(p) == p);
}

TEST_CASE("numerals") {
  CHECK(nat_to_term(0, Sys::Step) == zero());
  CHECK(nat_to_term(1, Sys::Step) == one(Sys::Step));
  TermPtr three = nat_to_term(3, Sys::Step);
  CHECK(three->nat);
  CHECK(three->nat_value == 3);
  CHECK(three->parts.size() == 3);
  CHECK(term_to_nat(three) == 3);
  CHECK(term_to_nat(zero()) == 0);
  CHECK(!term_to_nat(T("t0(t0(0))")).has_value());
  CHECK(T("42") == nat_to_term(42, Sys::Step));
  CHECK(B("7") == nat_to_term(7, Sys::Sim));
  for (std::uint64_t n = 0; n <= 9; ++n) {
    CHECK(term_to_nat(nat_to_term(n, Sys::Sim)) == n);
  }
}

TEST_CASE("classify and pred") {
  CHECK(classify(zero()) == NumClass::Zero);
  CHECK(classify(one(Sys::Step)) == NumClass::Successor);
  CHECK(pred(one(Sys::Step)) == zero());
  CHECK(classify(T("3")) == NumClass::Successor);
  CHECK(pred(T("3")) == T("2"));

  TermPtr omega = T("t0(t0(0))");
  CHECK(classify(omega) == NumClass::Limit);
  TermPtr wp1 = make_sum(omega, one(Sys::Step));
  CHECK(classify(wp1) == NumClass::Successor);
  CHECK(pred(wp1) == omega);
  CHECK(classify(T("t1(0)")) == NumClass::Limit);
  CHECK(classify(B("b0(b1(0))")) == NumClass::Limit);
}

TEST_CASE("system_of") {
  CHECK(!system_of(zero()).has_value());
  CHECK(system_of(T("t0(0)")) == Sys::Step);
  CHECK(system_of(B("b2(0)")) == Sys::Sim);
  CHECK(system_or(zero(), Sys::Sim) == Sys::Sim);
  CHECK(system_or(T("t0(0)"), Sys::Sim) == Sys::Step);
}

TEST_CASE("split_arg partitions components by level") {
  TermPtr xi = T("t2(0)+t1(0)+t0(0)");

  SplitArg s0 = split_arg(xi, 0);
  CHECK(s0.level == 0);
  CHECK(s0.xi == T("t2(0)"));
  CHECK(s0.delta == T("t1(0)"));
  CHECK(s0.eta == T("t0(0)"));

  SplitArg s1 = split_arg(xi, 1);
  CHECK(s1.xi == zero());
  CHECK(s1.delta == T("t2(0)"));
  CHECK(s1.eta == T("t1(0)+t0(0)"));

  SplitArg s2 = split_arg(xi, 2);
  CHECK(s2.xi == zero());
  CHECK(s2.delta == zero());
  CHECK(s2.eta == xi);

  CHECK(delta_full(xi, 0) == T("t2(0)+t1(0)"));
  CHECK(eta_lt(xi, 0) == T("t0(0)"));
  CHECK(delta_full(xi, 1) == T("t2(0)"));
  CHECK(delta_full(zero(), 0) == zero());
  CHECK(eta_lt(zero(), 3) == zero());

  SplitArg sz = split_arg(zero(), 1);
  CHECK(sz.xi == zero());
  CHECK(sz.delta == zero());
  CHECK(sz.eta == zero());
}

TEST_CASE("print and parse round trips") {
  const std::vector<std::string> step = {
      "0",
      "t0(0)",
      "t0(t0(0))",
      "t0(t0(0))+t0(0)",
      "t1(0)",
      "t0(t1(0))",
      "t0(t1(0)+t0(0))",
      "t2(t1(0))",
      "t0(t1(t2(0)+t0(0)))",
      "t1(0)+t0(t1(0))+t0(0)+t0(0)",
  };
  for (const auto& s : step) {
    TermPtr a = T(s);
    CHECK(print(a) == s);
    CHECK(parse(print(a), Sys::Step) == a);
  }

  const std::vector<std::string> sim = {
      "0",
      "b0(0)",
      "b1(b2(0))",
      "b0(b2(0)+b1(b2(0)+b0(0)))",
  };
  for (const auto& s : sim) {
    TermPtr a = B(s);
    CHECK(print(a) == s);
    CHECK(parse(print(a), Sys::Sim) == a);
  }

  // Whitespace is tolerated anywhere between tokens.
  CHECK(parse("  t0( t1(0) + t0(0) ) ", Sys::Step) == T("t0(t1(0)+t0(0))"));
  CHECK(parse(" 3 ", Sys::Step) == T("3"));

  // Decimal sugar expands to the numeral term.
  CHECK(print(T("3")) == "t0(0)+t0(0)+t0(0)");
}

TEST_CASE("pretty printer") {
  CHECK(print_pretty(zero()) == "0");
  CHECK(print_pretty(T("3")) == "3");
  std::string w = print_pretty(T("t0(t0(0))"));
  CHECK(w == "ϑ₀(1)");
  CHECK(print_pretty(T("t1(t2(0)+t0(0))")) == "ϑ₁(ϑ₂(0) + 1)");
  std::string bar = print_pretty(B("b1(0)"));
  CHECK(bar != print_pretty(T("t1(0)")));
}

TEST_CASE("parse errors carry positions") {
  auto pos_of = [](const std::string& text, Sys s) -> std::size_t {
    try {
      parse(text, s);
    } catch (const ParseError& e) {
      return e.pos;
    }
    return static_cast<std::size_t>(-1);
  };

  CHECK(pos_of("", Sys::Step) == 0);
  CHECK(pos_of("x", Sys::Step) == 0);
  CHECK(pos_of("t0(0", Sys::Step) == 4);
  CHECK(pos_of("t0(0))", Sys::Step) == 5);
  CHECK(pos_of("2+1", Sys::Step) == 1);
  CHECK(pos_of("b0(0)", Sys::Step) == 0);
  CHECK(pos_of("t0(0)", Sys::Sim) == 0);
  CHECK(pos_of("t10001(0)", Sys::Step) != static_cast<std::size_t>(-1));
  CHECK(pos_of("1000001", Sys::Step) != static_cast<std::size_t>(-1));
  CHECK(pos_of("t0()", Sys::Step) == 3);

  try {
    parse("b0(0)", Sys::Step);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("mixed-system") != std::string::npos);
  }
}

TEST_CASE("cross-system comparison is rejected, zero compares to all") {
  CHECK_THROWS_AS((void)compare(T("t0(0)"), B("b0(0)")), DomainError);
  CHECK(compare(zero(), B("b0(0)")) == Cmp::LT);
  CHECK(compare(T("t0(0)"), zero()) == Cmp::GT);
  CHECK(compare(zero(), zero()) == Cmp::EQ);
}

TEST_CASE("node counts and top level") {
  CHECK(zero()->nodes == 1);
  CHECK(T("t0(0)")->nodes == 2);
  CHECK(zero()->top_level == -1);
  CHECK(T("t0(0)")->top_level == 0);
  CHECK(T("t0(t1(t2(0)+t0(0)))")->top_level == 2);
  CHECK(B("b1(b2(0))")->top_level == 2);
}
