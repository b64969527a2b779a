#pragma once

#include <cstdint>
#include <vector>

#include "refinery/algebra.hpp"

namespace refinery {

// splitmix64; fixed forever so that seeded corpora stay reproducible across
// platforms and standard-library versions.
struct Rng {
  std::uint64_t state = 0;

  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next();
  std::uint64_t below(std::uint64_t bound);  // bound > 0
};

FiniteAlgebra cyclic_group(int n);  // additive table, symbol "+", name "Z<n>"
FiniteAlgebra klein_four();
FiniteAlgebra symmetric3();         // 0 = id, 1..3 transpositions, 4..5 3-cycles
FiniteAlgebra two_element_lattice();
FiniteAlgebra boolean_lattice4();
FiniteAlgebra one_element_algebra();

// {Z2, Z3, Z4, Z6, Z12, KleinFour, S3, two-element lattice, Boolean lattice,
//  one-element algebra}, in this order.
std::vector<FiniteAlgebra> pinned_corpus();

// Uniform random tables: size 2..max_size, 1..max_ops operations of arity
// <= 2.
FiniteAlgebra random_algebra(Rng& rng, int max_size, int max_ops = 2);

// Multiplication tables (symbol "*") for groups of order <= 12.
FiniteAlgebra dihedral_group(int n);   // order 2n, n >= 2
FiniteAlgebra dicyclic_group(int m);   // order 4m; m = 2 is the quaternion group
FiniteAlgebra alternating4();
std::vector<FiniteAlgebra> group_zoo();  // all groups of order 2..12 up to isomorphism

// Relabels the universe along a permutation: t'(p(a)..) = p(t(a..)).
FiniteAlgebra relabeled(const FiniteAlgebra& a, const std::vector<int>& perm);

// Seeded choices from the zoo with random relabelings.
std::vector<FiniteAlgebra> random_groups(Rng& rng, int count);

}  // namespace refinery
