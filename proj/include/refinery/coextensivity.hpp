#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "refinery/algebra.hpp"
#include "refinery/commutator.hpp"
#include "refinery/congruence_lattice.hpp"

namespace refinery {

using Json = nlohmann::ordered_json;

struct Caps {
  std::size_t con_limit = kDefaultConLimit;
  std::size_t clone_limit = kDefaultCloneLimit;
};

// Outcome of a property check.  A false verdict always carries a witness
// that can be re-checked with the relations module alone.
struct Verdict {
  std::string property;
  bool holds = false;
  Json witness;  // null when holds
  std::vector<std::string> notes;

  Json to_json() const;
  explicit operator bool() const { return holds; }
};

// True iff the universe is non-empty.
bool has_global_support(const FiniteAlgebra& a);

struct PushoutResult {
  FiniteAlgebra algebra;       // quotient by join(theta, phi)
  ElementMap from_first;       // A/theta -> A/(theta v phi)
  ElementMap from_second;      // A/phi   -> A/(theta v phi)
};

// Pushout of the two quotient maps, realized as the quotient by the join.
PushoutResult pushout_along(const FiniteAlgebra& a, const Partition& theta,
                            const Partition& phi);

Verdict check_projection_coextensive(const FiniteAlgebra& a, const Caps& caps = {});
Verdict check_srp_definition(const FiniteAlgebra& a, const Caps& caps = {});
Verdict check_condition_vi(const FiniteAlgebra& a, const Caps& caps = {});
Verdict check_boolean_sublattice(const FiniteAlgebra& a, const Caps& caps = {});
Verdict check_factorable(const FiniteAlgebra& a, const Caps& caps = {});
Verdict check_regularly_coextensive(const FiniteAlgebra& a, const Caps& caps = {});
Verdict check_factor_permutable(const FiniteAlgebra& a, const Caps& caps = {});
Verdict check_majority_laws(const FiniteAlgebra& a, const Caps& caps = {});
Verdict check_centerless(const FiniteAlgebra& a, const Caps& caps = {});

// CLI property names, in the documented order.
const std::vector<std::string>& property_names();
Verdict run_check(const FiniteAlgebra& a, const std::string& property, const Caps& caps = {});

// The six characterization verdicts computed over one shared enumeration.
struct CharacterizationReport {
  Verdict srp;
  Verdict proj_coext;
  Verdict boolean_sublattice;
  Verdict condition_vi;
  Verdict factorable;
  Verdict regularly_coext;
};

CharacterizationReport characterize(const FiniteAlgebra& a, const Caps& caps = {});

}  // namespace refinery
