#pragma once

#include <cstdint>
#include <vector>

#include "rw/perm.hpp"

namespace rw {

/// A finite permutation group with a base and strong generating set
/// (Schreier–Sims). Construction is deterministic: the base is chosen in
/// ascending point order with redundant points pruned, and the stored
/// generator list is canonicalized (identity removed, duplicates removed,
/// sorted lexicographically by image array). Immutable after construction
/// and safe to share between threads.
class PermutationGroup {
public:
  /// The trivial group of the given degree.
  static PermutationGroup trivial(int degree);

  /// Builds a BSGS from the generators. All generators must share `degree`
  /// (DegreeMismatchError otherwise). An empty generator list yields the
  /// trivial group of the supplied degree.
  PermutationGroup(std::vector<Permutation> generators, int degree);

  int degree() const noexcept { return degree_; }

  /// Canonicalized generator list (see class comment).
  const std::vector<Permutation>& generators() const noexcept { return gens_; }

  /// Base points with nontrivial fundamental orbits, in chain order
  /// (ascending by construction).
  const std::vector<int>& base() const noexcept { return base_; }

  /// Group order = product of fundamental orbit lengths.
  std::uint64_t order() const noexcept { return order_; }

  /// True iff p sifts to the identity through the chain.
  bool contains(const Permutation& p) const;

  /// The orbit of v under the group, sorted ascending.
  std::vector<int> orbit_of(int v) const;

  /// All vertex orbits as a partition of {0..degree−1}; each orbit sorted,
  /// orbits ordered by smallest element.
  std::vector<std::vector<int>> orbits() const;

  bool is_transitive() const;

  /// The stabilizer of v, as a group in its own right (fresh BSGS).
  PermutationGroup stabilizer_of(int v) const;

  /// Explicit element list. Deterministic order (transversal product order).
  /// Throws CapacityError when order() exceeds enum_cap().
  std::vector<Permutation> elements() const;

private:
  PermutationGroup() = default;

  /// Builds the stabilizer chain. `priority` maps rank -> point: new base
  /// points are taken in this order (used by stabilizer_of to front-load a
  /// vertex). `forced_first`, when ≥ 0, is installed as the first base point
  /// unconditionally. Does not prune trivial levels.
  void build(std::vector<Permutation> raw_gens, const std::vector<int>& priority,
             int forced_first = -1);
  void prune_trivial_levels();

  // One level of the stabilizer chain.
  struct Level {
    int point = -1;
    std::vector<Permutation> gens;     // strong generators fixing all earlier base points
    std::vector<int> orbit;            // fundamental orbit, BFS discovery order
    std::vector<int> where;            // point -> index into orbit, or −1
    std::vector<Permutation> transversal; // transversal[i] maps `point` to orbit[i]
  };

  void recompute_orbit(Level& lv) const;
  // Sifts h through levels [from..end); returns the residue and the level
  // index at which sifting stopped (== levels_.size() if fully sifted).
  std::pair<Permutation, size_t> strip(Permutation h, size_t from) const;

  int degree_ = 0;
  std::uint64_t order_ = 1;
  std::vector<Permutation> gens_;
  std::vector<int> base_;
  std::vector<Level> levels_;
};

// ---- free-function interface ----

/// Deterministic Schreier–Sims; empty generator list requires the degree.
PermutationGroup schreier_sims(std::vector<Permutation> generators, int degree);

bool membership(const PermutationGroup& G, const Permutation& p);

std::vector<int> orbit(const PermutationGroup& G, int v);

PermutationGroup point_stabilizer(const PermutationGroup& G, int v);

/// True iff G is transitive and |G| = degree; additionally asserts that the
/// stabilizer of point 0 is trivial (a redundant guard).
bool is_regular_action(const PermutationGroup& G);

} // namespace rw
