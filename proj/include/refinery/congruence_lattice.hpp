#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "refinery/algebra.hpp"
#include "refinery/partition.hpp"

namespace refinery {

inline constexpr std::size_t kDefaultConLimit = 10000;

// The full congruence lattice, listed in the lattice order (class count
// descending, then lexicographic).  Contains the finest and coarsest
// partitions and is closed under join and meet.
struct CongruenceLattice {
  std::vector<Partition> elements;

  int index_of(const Partition& p) const;  // -1 when absent
};

// Join-closure of all principal congruences.  Throws CapExceeded when more
// than con_limit distinct congruences are found, NoGlobalSupport on the
// empty algebra.
CongruenceLattice all_congruences(const FiniteAlgebra& a,
                                  std::size_t con_limit = kDefaultConLimit);

struct FactorPairCheck {
  bool ok = false;
  std::string failed;              // "meet" or "compose" when !ok
  std::pair<int, int> witness{-1, -1};

  explicit operator bool() const { return ok; }
};

// F and G are complementary factor congruences iff meet(F,G) is the finest
// partition and their relational composite is the full relation.
FactorPairCheck is_factor_pair(const FiniteAlgebra& a, const Partition& f,
                               const Partition& g);

struct FactorLattice {
  std::vector<Partition> elements;            // factor congruences, lattice order
  std::vector<std::vector<int>> complements;  // per element, indices of all complements
  bool is_sublattice_of_con = false;
  bool is_distributive = false;
  bool is_boolean = false;
  bool complement_unique = false;

  int index_of(const Partition& p) const;
};

FactorLattice factor_congruences(const FiniteAlgebra& a,
                                 std::size_t con_limit = kDefaultConLimit);
FactorLattice factor_congruences(const FiniteAlgebra& a, const CongruenceLattice& con);

// Deterministic DOT digraph of the covering relation; nodes are labeled by
// the partition serialization and listed in the lattice order.
std::string hasse_dot(const std::vector<Partition>& elements, const std::string& graph_name);

}  // namespace refinery
