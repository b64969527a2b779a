#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "refinery/algebra.hpp"
#include "refinery/binrel.hpp"
#include "refinery/partition.hpp"

namespace refinery {

BinRel to_relation(const Partition& p);

// (x,z) in compose(R,S)  <=>  exists y with (x,y) in R and (y,z) in S.
BinRel compose(const BinRel& r, const BinRel& s);
BinRel intersect(const BinRel& r, const BinRel& s);
BinRel unite(const BinRel& r, const BinRel& s);

// Reflexive-symmetric-transitive closure: the least partition containing r.
Partition union_closure(const BinRel& r);

// Raw direct image {(f x, f y) : (x,y) in r}; no closure is applied.
BinRel image(const ElementMap& f, const BinRel& r);
// {(x,y) : (f x, f y) in r}.
BinRel preimage(const ElementMap& f, const BinRel& r);

// Partition of the source by equal f-values.
Partition kernel(const ElementMap& f);

// Meet in the equivalence lattice (class intersection); the meet of two
// congruences is again a congruence.
Partition meet(const Partition& a, const Partition& b);

// Join in the equivalence lattice (transitive closure of the union).  For
// congruences of the same algebra this equals the congruence join.
Partition join_equivalences(const Partition& a, const Partition& b);

// Least congruence of a containing the seed pairs, computed by union-find
// closure under one-variable translations of the basic operations.
Partition generated_congruence(const FiniteAlgebra& a,
                               std::span<const std::pair<int, int>> seed);

// Congruence join; validates that both arguments are congruences.
Partition join(const FiniteAlgebra& a, const Partition& theta, const Partition& phi);

struct CongruenceViolation {
  std::size_t op = 0;
  int coordinate = 0;
  std::pair<int, int> pair{0, 0};  // related elements whose translation separates
  std::vector<int> args;           // full argument tuple with pair.first at coordinate
};

std::optional<CongruenceViolation> congruence_violation(const FiniteAlgebra& a,
                                                        const Partition& theta);
bool is_congruence(const FiniteAlgebra& a, const Partition& theta);

}  // namespace refinery
