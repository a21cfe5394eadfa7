#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ord {

enum class Sys : std::uint8_t { Step, Sim };
enum class Kind : std::uint8_t { Zero, Sum, Collapse };
enum class Cmp : std::int8_t { LT = -1, EQ = 0, GT = 1 };
enum class NumClass : std::uint8_t { Zero, Successor, Limit };

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  std::size_t pos;
  ParseError(const std::string& what, std::size_t p) : Error(what), pos(p) {}
};

struct DomainError : Error {
  using Error::Error;
};

struct BudgetError : Error {
  std::uint64_t steps_used;
  std::string partial_term;
  std::uint64_t partial_n;
  BudgetError(const std::string& what, std::uint64_t steps, std::string term, std::uint64_t n)
      : Error(what), steps_used(steps), partial_term(std::move(term)), partial_n(n) {}
};

struct InternalError : Error {
  using Error::Error;
};

class Term;
using TermPtr = const Term*;

// Interned immutable term node. Pointer equality coincides with structural
// equality, which in turn coincides with ordinal equality (representations
// are unique).
class Term {
 public:
  Kind kind;
  Sys sys;                     // collapse tag; for Zero it carries no meaning
  int level;                   // Collapse only
  TermPtr arg;                 // Collapse only
  std::vector<TermPtr> parts;  // Sum only, size >= 2, weakly decreasing principals
  std::size_t hash;
  std::uint32_t nodes;     // structural size (recursion measures)
  int top_level;           // max collapse level anywhere in the term, -1 if none
  bool nat;                // term is a finite sum of Collapse(.,0,Zero) or Zero
  std::uint64_t nat_value; // meaningful only when nat

  Term() = default;
  Term(const Term&) = delete;
  Term& operator=(const Term&) = delete;
};

TermPtr zero();
TermPtr one(Sys s);
TermPtr omega_level(Sys s, int i);  // the term t_i(0) / b_i(0)
TermPtr collapse(Sys s, int level, TermPtr arg);

// Raw sum constructor: interns the given part sequence as-is.
// Requires >= 2 parts, each a Collapse of the same system.
TermPtr sum_of(const std::vector<TermPtr>& parts);

// Normalizing sum: flattens nested sums, drops zeros, and left-absorbs so the
// result equals the ordinal sum of the inputs in the given order.
TermPtr make_sum(const std::vector<TermPtr>& parts);
TermPtr make_sum(TermPtr a, TermPtr b);
TermPtr make_sum(TermPtr a, TermPtr b, TermPtr c);

TermPtr end_part(TermPtr a);  // last additive component; 0 for Zero
TermPtr mc(TermPtr a);        // maximal (first) additive component; 0 for Zero

NumClass classify(TermPtr a);
TermPtr pred(TermPtr a);  // predecessor of a Successor term

TermPtr nat_to_term(std::uint64_t n, Sys s);
std::optional<std::uint64_t> term_to_nat(TermPtr a);

std::optional<Sys> system_of(TermPtr a);  // nullopt for Zero
Sys system_or(TermPtr a, Sys fallback);

struct SplitArg {
  TermPtr xi;     // components of level >= j+2
  TermPtr delta;  // components of level exactly j+1
  TermPtr eta;    // components of level <= j
  int level;      // the j this split was taken at
};

// Partition the ANF components of xi by collapse level relative to j.
SplitArg split_arg(TermPtr xi, int j);

// Components of level >= j+1 (the whole uncountable part of a level-j
// collapse argument) and the rest.
TermPtr delta_full(TermPtr arg, int j);
TermPtr eta_lt(TermPtr arg, int j);

TermPtr parse(std::string_view text, Sys s);
std::string print(TermPtr a);
std::string print_pretty(TermPtr a);

// Total order on terms of one system; defined in order.cpp and injected here
// so sum normalization can use it without a module cycle.
Cmp compare(TermPtr a, TermPtr b);

inline bool lt(TermPtr a, TermPtr b) { return compare(a, b) == Cmp::LT; }
inline bool leq(TermPtr a, TermPtr b) { return compare(a, b) != Cmp::GT; }
inline bool gt(TermPtr a, TermPtr b) { return compare(a, b) == Cmp::GT; }
inline bool geq(TermPtr a, TermPtr b) { return compare(a, b) != Cmp::LT; }

TermPtr max_term(TermPtr a, TermPtr b);

}  // namespace ord
