#pragma once

#include <cstddef>
#include <vector>

#include "rw/graph.hpp"
#include "rw/group.hpp"
#include "rw/named_maps.hpp"

namespace rw {

/// How an automorphism group is obtained.
enum class AutMethod {
  Generic,       // backtracking stabilizer-chain search over all automorphisms
  Distinguished, // closure of the named explicit generators (selected forms)
};

std::string aut_method_name(AutMethod m);

struct AutGroupResult {
  PermutationGroup group;
  AutMethod method = AutMethod::Generic;
};

/// Computes (a subgroup of) the automorphism group of g.
///
/// Generic: finds generators for the full automorphism group by a
/// point-stabilizer descent (at each level, search for one automorphism
/// fixing 0..k−1 and moving k to each unreached vertex). Works for any
/// graph here; throws CapacityError above 200 vertices.
///
/// Distinguished: returns the closure of the named explicit generators for
/// the forms that have them — ⟨rho, mu, gamma⟩ when n ≡ 0 (mod 4),
/// a = n/2 and r² + n/2 ≡ ±1; ⟨rho, mu, epsilon_0..epsilon_{m−1}⟩ for the
/// R_{2m}(m−2, m−1) class; ⟨rho, mu, sigma_f4⟩ (plus omega_f4 when
/// m ≡ 2 mod 4) for the R_{12m}(3d+2, 9d+1) classes — built on the
/// canonical member and transported to the given labelling. Throws
/// ApplicabilityError for parameters outside these forms. The closure is
/// known to be the full automorphism group only for specific instances
/// (cross-checked in the test suite); elsewhere it may be a proper
/// subgroup.
AutGroupResult automorphism_group(const RWGraph& g, AutMethod method = AutMethod::Generic);

/// Conjugates an automorphism of the graph on `canonical` into an
/// automorphism of the flip-equivalent graph on `p` (the a-flip is realized
/// by the map X_i -> X_{−i}; the r-flip leaves the labelled graph
/// unchanged). ParameterError if the two are not flip-equivalent.
Permutation transport_from_canonical(const Permutation& g, const RoseWindowParams& canonical,
                                     const RoseWindowParams& p);

/// Orbit partition of the edge set under a group of automorphisms.
struct EdgeOrbits {
  int count = 0;
  std::vector<int> orbit_index;          // orbit id per graph.edges() position
  std::vector<unsigned> orbit_kind_mask; // union of edge kind masks per orbit
  bool rim_hub_merged = false;           // some orbit contains both rim and hub edges
};

EdgeOrbits edge_orbits(const RWGraph& g, const PermutationGroup& aut);

/// Arithmetic test for the existence of an automorphism exchanging the rim
/// edge set with the hub edge set. True iff one of:
///   (1) a ≠ n/2, r² ≡ 1 and r·a ≡ ±a (mod n);
///   (2) a = n/2, r² ≡ ±1 and r·a ≡ ±a (mod n);
///   (3) n ≡ 0 (mod 4), gcd(n, r) = 1, a = n/2 and r² + n/2 ≡ ±1 (mod n).
bool rim_hub_swap_arithmetic(const RoseWindowParams& p);

/// Computational counterpart: true iff some element of `aut` maps the rim
/// edge set exactly onto the hub edge set (breadth-first search over edge-
/// set images under the generators; throws CapacityError if more than
/// `cap` distinct images appear).
bool rim_hub_swap_computational(const RWGraph& g, const PermutationGroup& aut,
                                std::size_t cap = 100000);

} // namespace rw
