#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "refinery/algebra.hpp"
#include "refinery/congruence_lattice.hpp"

namespace refinery {

// Recursive record of binary direct-product factorizations down to directly
// indecomposable (or one-element) leaves.
struct DecompositionTree {
  FiniteAlgebra algebra;
  std::optional<std::pair<Partition, Partition>> factor_pair;  // absent at leaves
  std::optional<ElementMap> iso;  // algebra -> A/F x A/F' under the pair encoding
  std::vector<DecompositionTree> children;

  bool is_leaf() const { return !factor_pair.has_value(); }
  std::vector<const DecompositionTree*> leaves() const;  // pre-order
};

// |A| >= 2 and the only factor pairs are the trivial ones.
bool is_directly_indecomposable(const FiniteAlgebra& a,
                                std::size_t con_limit = kDefaultConLimit);

// Splits along the first nontrivial factor pair under the deterministic
// order (fewest quotient classes, then lexicographic).
DecompositionTree decompose(const FiniteAlgebra& a,
                            std::size_t con_limit = kDefaultConLimit);

// Same recursion with the split chosen by a seeded generator.
DecompositionTree decompose_randomized(const FiniteAlgebra& a, std::uint64_t seed,
                                       std::size_t con_limit = kDefaultConLimit);

struct LeafMatch {
  int left = 0;      // leaf index in the first tree (one-element leaves pruned)
  int right = 0;     // matched leaf index in the second tree
  ElementMap iso;
};

// Bijection between the leaf multisets with isomorphism certificates, if one
// exists.  Both trees must decompose the given algebra.
std::optional<std::vector<LeafMatch>> verify_unique_decomposition(
    const FiniteAlgebra& a, const DecompositionTree& t1, const DecompositionTree& t2);

}  // namespace refinery
