#pragma once

#include <cstddef>
#include <optional>

#include "refinery/algebra.hpp"
#include "refinery/partition.hpp"
#include "refinery/term.hpp"

namespace refinery {

inline constexpr std::size_t kDefaultCloneLimit = 200000;

enum class TermKind { maltsev, majority };
enum class TermSearch { found, absent, cap_exhausted };

struct TermSearchResult {
  TermSearch status = TermSearch::absent;
  std::optional<Term> term;             // present iff status == found
  std::size_t functions_explored = 0;   // distinct ternary functions generated

  explicit operator bool() const { return status == TermSearch::found; }
};

// BFS over the ternary clone of a: start from the projections, close under
// composition with the basic operations, cap at max_ops distinct functions.
// "absent" is reported only when the clone closed under the cap;
// "cap_exhausted" means the search was inconclusive.
TermSearchResult find_term(const FiniteAlgebra& a, TermKind kind,
                           std::size_t max_ops = kDefaultCloneLimit);

// Commutator of two congruences.  Authoritative when a has a Mal'tsev term
// (congruence-permutable setting); advisory otherwise.
Partition commutator(const FiniteAlgebra& a, const Partition& alpha, const Partition& beta);

// Join of all principal congruences that centralize the coarsest congruence.
Partition center_congruence(const FiniteAlgebra& a);

bool is_centerless(const FiniteAlgebra& a);

}  // namespace refinery
