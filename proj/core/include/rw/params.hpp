#pragma once

#include <array>
#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "rw/perm.hpp"

namespace rw {

/// Parameters (n, a, r) of a rose window graph: 2n vertices A_0..A_{n−1}
/// (rim, encoded 0..n−1) and B_0..B_{n−1} (hub, encoded n..2n−1), with
/// edges A_i–A_{i+1} (rim), A_i–B_i (inspoke), A_{i+a}–B_i (outspoke) and
/// B_i–B_{i+r} (hub), all indices mod n.
struct RoseWindowParams {
  int n = 0;
  int a = 0;
  int r = 0;

  friend auto operator<=>(const RoseWindowParams&, const RoseWindowParams&) = default;
};

/// Throws ParameterError unless n ≥ 3 and 1 ≤ a, r ≤ n−1.
void validate(const RoseWindowParams& p);

/// True iff 2r ≡ 0 (mod n): each hub vertex then has a single hub
/// neighbour, the graph is not 4-regular, and the parameters are excluded
/// from classification sweeps and searches.
bool is_degenerate(const RoseWindowParams& p);

/// Which parameter substitutions normalize applied.
struct NormalizeProvenance {
  bool a_flipped = false; // a -> n−a, realized by the vertex map X_i -> X_{−i}
  bool r_flipped = false; // r -> n−r, realized by the identity (same edge set)
};

/// The lexicographically least (a', r') among {a, n−a} × {r, n−r}, with a
/// record of which substitutions were applied.
std::pair<RoseWindowParams, NormalizeProvenance> normalize(const RoseWindowParams& p);

/// The permutation realizing the recorded substitutions as a graph
/// isomorphism from the graph on `from` to the graph on the normalized
/// parameters (X_i -> X_{−i} when the a-substitution was applied, identity
/// otherwise; the r-substitution does not change the edge set).
Permutation provenance_isomorphism(const RoseWindowParams& from, const NormalizeProvenance& prov);

/// All four representatives (±a, ±r) of the parameter equivalence class,
/// reduced to [1, n−1]; duplicates removed, deterministic order.
std::vector<RoseWindowParams> representatives(const RoseWindowParams& p);

/// Encoded vertex ids.
int vertex_A(int n, int i); // rim vertex A_{i mod n}
int vertex_B(int n, int i); // hub vertex B_{i mod n}

/// "A<i>" / "B<i>" label of an encoded vertex.
std::string vertex_label(int n, int v);

/// Short display form "R_n(a,r)".
std::string to_string(const RoseWindowParams& p);

} // namespace rw
