#pragma once

#include <functional>
#include <string>

#include "rw/graph.hpp"
#include "rw/params.hpp"
#include "rw/perm.hpp"

namespace rw {

/// The catalogue of named explicit maps on rose window graphs. Epsilon and
/// SigmaCapF3 are indexed families; the others are single maps.
enum class AutomorphismKind {
  Rho,        // rotation: A_i -> A_{i+1}, B_i -> B_{i+1}
  Mu,         // reflection: A_i -> A_{-i}, B_i -> B_{-a-i} (swaps in/outspokes)
  Tau,        // reflection: A_i -> A_{-i}, B_i -> B_{-i} (needs 2a ≡ 0 mod n)
  Zeta,       // relabeling by r^{-1}: X_i -> other-side_{-i·r^{-1}}
  Delta,      // rim/hub exchange: A_i -> B_{r_eff·i}, B_i -> A_{r_eff·i}
  GammaF2,    // A_i -> B_{r·i}, B_i -> A_{(r+a)·i} (n ≡ 0 mod 4, a = n/2)
  SigmaF2,    // the GammaF2 map, restricted to the +1 sign case
  Epsilon,    // indexed local spoke swap on R_{2m}(m-2, m-1)
  SigmaCapF3, // product of Epsilons with j mod 3 != index mod 3 (3 | m)
  SigmaF4,    // order-mixing map on R_{12m}(3d+2, 9d+1), d = ±m
  OmegaF4,    // companion map on the same family when m ≡ 2 (mod 4)
};

std::string automorphism_kind_name(AutomorphismKind k);

/// Builds a permutation of 0..2n−1 from index maps: image of A_i is fa(i)
/// and image of B_i is fb(i) (values are encoded vertex ids).
Permutation perm_from_index_maps(int n, const std::function<int(int)>& fa,
                                 const std::function<int(int)>& fb);

// --- raw builders (formula only; no adjacency verification) ---

Permutation perm_rho(int n);
Permutation perm_mu(int n, int a);
Permutation perm_tau(int n);

/// A_i -> A_{i+n/2}, B_i -> B_i. Requires n even.
Permutation perm_rim_half_shift(int n);

/// Selects r_eff as the first of {r mod n, n−r} with r_eff·a ≡ −a and
/// r_eff² ≡ ±1 (mod n); throws ApplicabilityError if neither qualifies.
/// The chosen r_eff is written to *r_eff_out when non-null.
Permutation perm_delta(const RoseWindowParams& p, int* r_eff_out = nullptr);

/// Requires n ≡ 0 (mod 4), a = n/2, r odd, r² + n/2 ≡ ±1 (mod n).
Permutation perm_gamma_f2(const RoseWindowParams& p);

/// Requires gcd(n, r) = 1. Always an isomorphism onto the graph with
/// parameters zeta_image_params(p); an automorphism only if those match.
Permutation perm_zeta(const RoseWindowParams& p);

/// (n, a·r^{-1} mod n, r^{-1} mod n) — the image parameters of perm_zeta.
RoseWindowParams zeta_image_params(const RoseWindowParams& p);

/// Local spoke swap on the graph R_{2m}(m−2, m−1); the index is taken mod
/// m. Exchanges (A_{i+1},B_{i+2}), (A_{i+1+m},B_{i+2+m}), (A_i,B_{i+1+m}),
/// (A_{i+m},B_{i+1}) and fixes everything else.
Permutation perm_epsilon(int n, int i);

/// Product of perm_epsilon(n, j) over 0 ≤ j < m with j mod 3 ≠ i mod 3.
/// Requires 3 | m where m = n/2.
Permutation perm_sigma_cap_f3(int n, int i);

/// On R_{12m}(3d+2, 9d+1) with d = ±m. With t = i mod 3:
///   A_i -> A_i (t=0), B_{i−1} (t=1), B_{i−1−3d} (t=2)
///   B_i -> A_{i+1} (t=0), A_{i+3d+1} (t=1), B_{i+6d} (t=2)
Permutation perm_sigma_f4(int n, int d);

/// Companion map for m ≡ 2 (mod 4), built from four anchored residue
/// classes (A_i for i ≡ 0,1 and B_i for i ≡ 0,2 mod 3, with b = d+1):
///   A_i -> A_{b·i} (i≡0), B_{b·i−b} (i≡1); B_i -> A_{b·i+1} (i≡0),
///   B_{b·i+b−1} (i≡2). The remaining classes are filled in by the unique
/// adjacency-preserving completion; throws InternalConsistencyError if the
/// completion is missing or ambiguous.
Permutation perm_omega_f4(int n, int d);

/// Closed-form version of perm_omega_f4 (all six residue classes given by
/// explicit formulas); used to cross-check the completion.
Permutation omega_f4_closed_form(int n, int d);

// --- applicability-checked, adjacency-verified constructor ---

/// Builds the named map for the given parameters after checking the
/// kind-specific applicability conditions (ApplicabilityError otherwise),
/// then verifies it preserves adjacency (InternalConsistencyError if some
/// formula is wrong for admissible parameters). `index` selects the member
/// for Epsilon / SigmaCapF3 and is ignored otherwise.
Permutation explicit_automorphism(AutomorphismKind kind, const RoseWindowParams& p, int index = 0);

/// True iff p is exactly R_{2m}(m−2, m−1) for some m ≥ 3 (the form on
/// which the Epsilon maps are defined). Writes m when m_out is non-null.
bool matches_epsilon_form(const RoseWindowParams& p, int* m_out = nullptr);

/// True iff p is exactly R_{12m}(3d+2 mod n, 9d+1 mod n) with d = +m or
/// d = −m. Writes the signed d when d_out is non-null.
bool matches_sigma_f4_form(const RoseWindowParams& p, int* d_out = nullptr);

/// True iff p maps every edge of g to an edge (hence is an automorphism of
/// the underlying simple graph).
bool is_graph_automorphism(const RWGraph& g, const Permutation& p);

} // namespace rw
