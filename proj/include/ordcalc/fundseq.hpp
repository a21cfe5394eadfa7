#pragma once

#include <cstdint>

#include "ordcalc/term.hpp"

namespace ord {

// Which clause of the assignment applies to a term.
enum class FsClause : std::uint8_t {
  Base,                // 0 and 1
  SumTail,             // sums: rewrite the last part
  Continuity,          // limit countable part without the fixed-point condition
  PrincipalMultiple,   // no uncountable part: finite multiples of the support
  ChiOne,              // uncountable part of cofinality above the own level
  ChiZero,             // uncountable part of smaller cofinality
};

const char* fs_clause_name(FsClause c);

struct FsInfo {
  FsClause clause = FsClause::Base;
  TermPtr support = nullptr;  // the term glued below rewritten arguments; 0 when unused
  int chi_level = -1;         // collapsing level consumed in the ChiOne clause
};

// Cofinality indicator of a relative to the level-(i+1) uncountable:
// 1 when a has that exact cofinality, 0 below. Both systems.
int chi(int i, TermPtr a);

// Cofinality degree: 0 for 0, successors and countably cofinal limits,
// otherwise the level d with a of cofinality t_d(0).
int dom_ind(TermPtr a);

// Support term of a collapse (the value reused by the descent clauses).
TermPtr support_term(TermPtr a);

// Clause selection and support without evaluating the assignment.
FsInfo fs_case(TermPtr a);

// The assignment itself. zeta must be below t_d(0) for d = dom_ind(a) when
// d > 0, and a finite term when d = 0; finite parameters are accepted from
// either system and retagged. Throws DomainError on inadmissible parameters.
TermPtr fundseq(TermPtr a, TermPtr zeta);
TermPtr fundseq(TermPtr a, TermPtr zeta, FsInfo& info);

// Convenience wrappers for finite parameters.
TermPtr fundseq_nat(TermPtr a, std::uint64_t n);
TermPtr fundseq_nat(TermPtr a, std::uint64_t n, FsInfo& info);

}  // namespace ord
