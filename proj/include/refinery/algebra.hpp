#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "refinery/partition.hpp"
#include "refinery/signature.hpp"

namespace refinery {

// Total map {0..source-1} -> {0..target-1}.
class ElementMap {
 public:
  ElementMap() = default;
  ElementMap(int source_size, int target_size, std::vector<int> values);

  static ElementMap identity(int n);

  int source_size() const { return source_; }
  int target_size() const { return target_; }
  int operator()(int x) const { return values_[x]; }
  const std::vector<int>& values() const { return values_; }

  bool is_surjective() const;
  bool is_injective() const;
  bool is_bijective() const { return source_ == target_ && is_injective(); }

  friend bool operator==(const ElementMap&, const ElementMap&) = default;

 private:
  int source_ = 0;
  int target_ = 0;
  std::vector<int> values_;
};

// Finite algebra: universe {0..n-1} plus one flat row-major operation table
// per symbol.  For arity k the tuple (a1..ak) lives at index
// a1*n^(k-1) + a2*n^(k-2) + ... + ak.  Constants are single entries.
class FiniteAlgebra {
 public:
  FiniteAlgebra(Signature sig, int size, std::vector<std::vector<int>> tables,
                std::string name = "");

  const std::string& name() const { return name_; }
  const Signature& signature() const { return sig_; }
  int size() const { return size_; }
  std::size_t num_ops() const { return sig_.size(); }
  const std::vector<int>& table(std::size_t op) const { return tables_[op]; }

  int apply(std::size_t op, std::span<const int> args) const {
    std::size_t idx = 0;
    for (int a : args) idx = idx * static_cast<std::size_t>(size_) + static_cast<std::size_t>(a);
    return tables_[op][idx];
  }

  bool same_signature(const FiniteAlgebra& other) const { return sig_ == other.sig_; }
  // Equality of universe, signature and tables; names are metadata.
  bool structurally_equal(const FiniteAlgebra& other) const {
    return size_ == other.size_ && sig_ == other.sig_ && tables_ == other.tables_;
  }

 private:
  Signature sig_;
  int size_ = 0;
  std::vector<std::vector<int>> tables_;
  std::string name_;
};

struct ProductDiagram {
  FiniteAlgebra algebra;
  ElementMap onto_first;
  ElementMap onto_second;
};

// Componentwise product; the pair (a,b) is encoded as a*|B| + b, which fixes
// both projections.
ProductDiagram product(const FiniteAlgebra& a, const FiniteAlgebra& b);

struct QuotientResult {
  FiniteAlgebra algebra;
  ElementMap map;  // surjective canonical projection
};

// Quotient by a congruence; classes are numbered by least member, ascending.
// Throws Error when theta is not compatible with some operation.
QuotientResult quotient(const FiniteAlgebra& a, const Partition& theta);

// Deterministic backtracking search (images tried in element order, first
// solution returned).  Empty result means no bijective homomorphism exists.
std::optional<ElementMap> find_isomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b);

struct HomomorphismCheck {
  bool ok = false;
  std::size_t op = 0;      // witness when !ok
  std::vector<int> args;

  explicit operator bool() const { return ok; }
};

HomomorphismCheck is_homomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b,
                                  const ElementMap& f);

}  // namespace refinery
