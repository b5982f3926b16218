#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rw/params.hpp"
#include "rw/perm.hpp"

namespace rw {

/// Which recipe produced a regular-subgroup witness.
enum class WitnessCase {
  F1Plus,      // r² ≡ +1, r·a ≡ ±a: ⟨rho, delta⟩
  F1Minus,     // r² ≡ −1 (forces n = 2a, a odd): ⟨rho², rho·tau, mu·delta⟩
  F2Plus,      // a = n/2, r odd, r² + n/2 ≡ +1: ⟨rho²·shift, rho·tau, gamma⟩
  F3Even,      // R_{2m}(m−2, m−1) class with m even (delegates to ⟨rho, delta⟩)
  F3Mult3,     // R_{2m}(m−2, m−1) class, m an odd multiple of 3: ⟨rho², Sigma_0, Sigma_1⟩
  F4Odd,       // R_{12m}(3d+2, 9d+1) class, m odd, m ≠ 3: search in ⟨rho, mu, sigma_f4⟩
  F4TwoMod4,   // same class, m ≡ 2 (mod 4): ⟨(rho·sigma)^{4m}, rho^{3m/2}, gamma-element⟩
  SearchFound, // produced by the exhaustive regular-subgroup search
};

std::string witness_case_name(WitnessCase c);
WitnessCase parse_witness_case(const std::string& name);

/// A verified certificate that the graph on `params` is a Cayley graph:
/// `generators` generate a group of automorphisms of order exactly 2n
/// acting regularly on the vertices. `relations_checked` records the
/// instantiated defining relations that were verified for constructive
/// cases (empty for search-produced witnesses).
struct RegularWitness {
  WitnessCase kind = WitnessCase::SearchFound;
  RoseWindowParams params;
  std::vector<Permutation> generators;
  std::uint64_t order = 0;
  std::vector<std::string> relations_checked;
};

/// Builds and fully verifies the witness for one constructive case:
/// checks the case's arithmetic preconditions (ApplicabilityError if they
/// fail for p), then verifies that the generators are automorphisms, that
/// every listed relation holds, and that the generated group has order
/// exactly 2n and acts regularly (InternalConsistencyError otherwise —
/// an applicable recipe that fails verification is a defect, not bad
/// input). Cases defined on a canonical labelling are transported to p.
RegularWitness regular_subgroup_generators(WitnessCase c, const RoseWindowParams& p);

/// Tries the constructive cases in a fixed order (F1Plus, F1Minus, F2Plus,
/// F3Even, F3Mult3, F4TwoMod4, F4Odd) and returns the first that applies
/// and verifies; nullopt if none applies.
std::optional<RegularWitness> constructive_witness(const RoseWindowParams& p);

/// Re-verification used for cached witnesses: true iff the generators are
/// automorphisms of the graph on w.params and generate a group of order
/// exactly 2n acting regularly. Never throws on ordinary failure.
bool verify_witness(const RegularWitness& w);

/// One-line JSON: {"case", "n", "a", "r", "order", "generators" (image
/// lists), "relations_checked"}.
std::string witness_to_json(const RegularWitness& w);
RegularWitness witness_from_json(const std::string& text);

} // namespace rw
