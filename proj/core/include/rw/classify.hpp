#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rw/cayley.hpp"
#include "rw/params.hpp"
#include "rw/witness.hpp"

namespace rw {

/// Arithmetic family labels for the vertex-transitivity / Cayley-ness
/// characterization. Membership is always evaluated over all four sign
/// representatives (±a, ±r) of the parameters.
enum class Family { F1, F2, F3, F4, F5 };

std::string family_name(Family f); // "F1".."F5"

/// One family membership with its resolved derived parameters. Field use
/// by family:
///   F1: sign (r² ≡ ±1), sign2 (ra ≡ ±a); m/b/d/l unset.
///   F2: m = n/4, sign (r² + 2m ≡ ±1 mod n).
///   F3: m = n/2, sign (a ≡ m ± 2), sign2 (r ≡ m ± 1).
///   F4: m = n/12, d = ±m (a ≡ 3d+2, r ≡ 9d+1 up to representative flips),
///       l = m / 12 (subcase scale).
///   F5: m = n/2, b = a'/2 on the matched representative,
///       sign (b² ≡ ±1 mod m), sign2 (r ≡ 1 vs r ≡ m−1).
/// `representative` is the (a', r') sign representative that matched.
struct FamilyDetail {
  Family family = Family::F1;
  std::optional<int> m;
  std::optional<int> b;
  std::optional<int> d;
  std::optional<int> l;
  std::optional<int> sign;
  std::optional<int> sign2;
  std::pair<int, int> representative{0, 0};
};

/// Individual membership predicates (union over the four representatives).
bool family1_member(const RoseWindowParams& p);
/// +1 / −1 when the Family-2 congruences hold with that sign; nullopt when
/// not a member (includes n not divisible by 4).
std::optional<int> family2_sign(const RoseWindowParams& p);
bool family3_member(const RoseWindowParams& p);
bool family4_member(const RoseWindowParams& p);
bool family5_member(const RoseWindowParams& p);

std::vector<FamilyDetail> family_memberships(const RoseWindowParams& p);

/// Arithmetic characterizations (pure, no graph search).
bool vt_by_theorem(const RoseWindowParams& p);
bool et_by_theorem(const RoseWindowParams& p);
bool cayley_by_theorem(const RoseWindowParams& p);

/// Full report. Search fields are filled only by classify_with_search and
/// stay empty for degenerate parameters (2r ≡ 0 mod n), which the
/// characterizations do not cover.
struct Classification {
  RoseWindowParams params{0, 0, 0};
  RoseWindowParams normalized{0, 0, 0};
  bool degenerate = false;
  std::vector<FamilyDetail> families;
  std::optional<int> f2_sign;
  bool et_theorem = false;
  bool vt_theorem = false;
  bool cayley_theorem = false;

  std::optional<bool> et_search;
  std::optional<bool> vt_search;
  std::optional<bool> cayley_search;
  std::optional<std::uint64_t> aut_order;
  std::optional<int> edge_orbits;
  std::optional<RegularWitness> witness;
  std::optional<std::string> search_error; // capacity problems, recorded not thrown

  /// True when any *_theorem / *_search pair is present and differs.
  bool disagreement() const;
};

/// Arithmetic-only report (theorem fields).
Classification classify(const RoseWindowParams& p);

/// Report with computed verdicts: automorphism group order, vertex- and
/// edge-transitivity by search, edge orbit count, Cayley search verdict and
/// witness. CapacityError from the search is recorded in search_error
/// rather than thrown; other errors propagate.
Classification classify_with_search(const RoseWindowParams& p, const CayleyOptions& options = {});

/// Single-line JSON rendering with a stable key order (byte-identical for
/// equal reports).
std::string classification_to_json(const Classification& c);

/// Multi-line human-readable rendering.
std::string classification_to_text(const Classification& c);

} // namespace rw
