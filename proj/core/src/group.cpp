#include "rw/group.hpp"

#include <algorithm>
#include <numeric>

#include "rw/config.hpp"
#include "rw/errors.hpp"

namespace rw {

namespace {

std::vector<Permutation> canonicalize(std::vector<Permutation> gens) {
  std::erase_if(gens, [](const Permutation& g) { return g.is_identity(); });
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

} // namespace

PermutationGroup PermutationGroup::trivial(int degree) {
  return PermutationGroup({}, degree);
}

PermutationGroup::PermutationGroup(std::vector<Permutation> generators, int degree) {
  if (degree < 0) throw ParameterError("negative group degree");
  degree_ = degree;
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw DegreeMismatchError("generator degree disagrees with group degree");
  std::vector<int> priority(static_cast<size_t>(degree));
  std::iota(priority.begin(), priority.end(), 0);
  build(std::move(generators), priority);
  prune_trivial_levels();
}

void PermutationGroup::recompute_orbit(Level& lv) const {
  lv.orbit.clear();
  lv.where.assign(static_cast<size_t>(degree_), -1);
  lv.transversal.clear();
  lv.orbit.push_back(lv.point);
  lv.where[static_cast<size_t>(lv.point)] = 0;
  lv.transversal.push_back(Permutation::identity(degree_));
  for (size_t i = 0; i < lv.orbit.size(); ++i) {
    const int w = lv.orbit[i];
    for (const auto& g : lv.gens) {
      const int img = g(w);
      if (lv.where[static_cast<size_t>(img)] < 0) {
        lv.where[static_cast<size_t>(img)] = static_cast<int>(lv.orbit.size());
        lv.orbit.push_back(img);
        lv.transversal.push_back(compose(g, lv.transversal[i]));
      }
    }
  }
}

std::pair<Permutation, size_t> PermutationGroup::strip(Permutation h, size_t from) const {
  for (size_t l = from; l < levels_.size(); ++l) {
    const Level& lv = levels_[l];
    const int w = h(lv.point);
    const int idx = lv.where[static_cast<size_t>(w)];
    if (idx < 0) return {std::move(h), l};
    h = compose(inverse(lv.transversal[static_cast<size_t>(idx)]), h);
  }
  return {std::move(h), levels_.size()};
}

void PermutationGroup::build(std::vector<Permutation> raw_gens, const std::vector<int>& priority,
                             int forced_first) {
  gens_ = canonicalize(std::move(raw_gens));
  base_.clear();
  levels_.clear();
  order_ = 1;
  if (gens_.empty()) {
    if (forced_first >= 0) {
      Level lv;
      lv.point = forced_first;
      base_.push_back(forced_first);
      levels_.push_back(std::move(lv));
      recompute_orbit(levels_.back());
    }
    return;
  }

  auto first_moved_in_priority = [&](const Permutation& g) -> int {
    for (int p : priority)
      if (g(p) != p) return p;
    return -1;
  };

  auto fixes_all_base = [&](const Permutation& g) {
    for (int b : base_)
      if (g(b) != b) return false;
    return true;
  };

  auto append_base_point = [&](int pt) {
    Level lv;
    lv.point = pt;
    base_.push_back(pt);
    levels_.push_back(std::move(lv));
  };

  if (forced_first >= 0) append_base_point(forced_first);

  // Every generator must move some base point.
  for (const auto& g : gens_) {
    if (fixes_all_base(g)) {
      const int pt = first_moved_in_priority(g);
      if (pt >= 0) append_base_point(pt);
    }
  }

  // Distribute generators to levels: level l holds the strong generators
  // fixing base_[0..l-1]. Then compute fundamental orbits.
  auto add_to_levels = [&](const Permutation& g) {
    for (size_t l = 0; l < levels_.size(); ++l) {
      levels_[l].gens.push_back(g);
      if (g(levels_[l].point) != levels_[l].point) break;
    }
  };
  for (const auto& g : gens_) add_to_levels(g);
  for (auto& lv : levels_) recompute_orbit(lv);

  // Deterministic Schreier–Sims verification, deepest level first. A level
  // is "strong" when every Schreier generator of its orbit sifts to the
  // identity through the deeper levels.
  size_t i = levels_.empty() ? 0 : levels_.size() - 1;
  bool done = levels_.empty();
  while (!done) {
    bool added = false;
    Level& lv = levels_[i];
    for (size_t oi = 0; oi < lv.orbit.size() && !added; ++oi) {
      const int w = lv.orbit[oi];
      const Permutation& u_w = lv.transversal[oi];
      for (const auto& s : lv.gens) {
        const int sw = s(w);
        const Permutation g = compose(s, u_w);
        const Permutation& u_sw = lv.transversal[static_cast<size_t>(lv.where[static_cast<size_t>(sw)])];
        if (g == u_sw) continue;
        Permutation schreier = compose(inverse(u_sw), g);
        if (schreier.is_identity()) continue;
        auto [residue, j] = strip(std::move(schreier), i + 1);
        if (residue.is_identity()) continue;
        // New strong generator fixing base_[0..j-1]; extend the base if it
        // fixes every current base point.
        if (j == levels_.size()) {
          const int pt = first_moved_in_priority(residue);
          append_base_point(pt);
          levels_[j].where.assign(static_cast<size_t>(degree_), -1);
          recompute_orbit(levels_[j]);
        }
        for (size_t l = i + 1; l <= j; ++l) levels_[l].gens.push_back(residue);
        for (size_t l = i + 1; l <= j; ++l) recompute_orbit(levels_[l]);
        i = j;
        added = true;
        break;
      }
    }
    if (!added) {
      if (i == 0)
        done = true;
      else
        --i;
    }
  }

  order_ = 1;
  for (const auto& lv : levels_) order_ *= static_cast<std::uint64_t>(lv.orbit.size());
}

void PermutationGroup::prune_trivial_levels() {
  // A base point whose fundamental orbit is a singleton is redundant: all
  // strong generators at that level fix it, so sifting is unaffected.
  std::vector<Level> kept;
  std::vector<int> kept_base;
  for (auto& lv : levels_) {
    if (lv.orbit.size() > 1) {
      kept_base.push_back(lv.point);
      kept.push_back(std::move(lv));
    }
  }
  levels_ = std::move(kept);
  base_ = std::move(kept_base);
}

bool PermutationGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_)
    throw DegreeMismatchError("membership: degree mismatch");
  auto [residue, level] = strip(p, 0);
  (void)level;
  return residue.is_identity();
}

std::vector<int> PermutationGroup::orbit_of(int v) const {
  if (v < 0 || v >= degree_) throw ParameterError("orbit point out of range");
  std::vector<int> orb{v};
  std::vector<char> seen(static_cast<size_t>(degree_), 0);
  seen[static_cast<size_t>(v)] = 1;
  for (size_t i = 0; i < orb.size(); ++i)
    for (const auto& g : gens_) {
      const int img = g(orb[i]);
      if (!seen[static_cast<size_t>(img)]) {
        seen[static_cast<size_t>(img)] = 1;
        orb.push_back(img);
      }
    }
  std::sort(orb.begin(), orb.end());
  return orb;
}

std::vector<std::vector<int>> PermutationGroup::orbits() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(static_cast<size_t>(degree_), 0);
  for (int v = 0; v < degree_; ++v) {
    if (seen[static_cast<size_t>(v)]) continue;
    auto orb = orbit_of(v);
    for (int w : orb) seen[static_cast<size_t>(w)] = 1;
    out.push_back(std::move(orb));
  }
  return out;
}

bool PermutationGroup::is_transitive() const {
  if (degree_ == 0) return true;
  return static_cast<int>(orbit_of(0).size()) == degree_;
}

PermutationGroup PermutationGroup::stabilizer_of(int v) const {
  if (v < 0 || v >= degree_) throw ParameterError("stabilizer point out of range");
  // Rebuild the chain with v forced as the first base point; the strong
  // generators at the deeper levels then generate the stabilizer of v.
  PermutationGroup tmp;
  tmp.degree_ = degree_;
  std::vector<int> priority;
  priority.reserve(static_cast<size_t>(degree_));
  priority.push_back(v);
  for (int p = 0; p < degree_; ++p)
    if (p != v) priority.push_back(p);
  tmp.build(gens_, priority, v);

  std::vector<Permutation> stab_gens;
  for (size_t l = 1; l < tmp.levels_.size(); ++l)
    for (const auto& g : tmp.levels_[l].gens)
      stab_gens.push_back(g);
  return PermutationGroup(std::move(stab_gens), degree_);
}

std::vector<Permutation> PermutationGroup::elements() const {
  const std::uint64_t cap = enum_cap();
  if (order_ > cap)
    throw CapacityError("group order " + std::to_string(order_) +
                        " exceeds enumeration cap " + std::to_string(cap));
  std::vector<Permutation> out;
  out.reserve(static_cast<size_t>(order_));
  out.push_back(Permutation::identity(degree_));
  // Cartesian product over transversals, deepest level composed first.
  for (size_t l = levels_.size(); l-- > 0;) {
    const Level& lv = levels_[l];
    std::vector<Permutation> next;
    next.reserve(out.size() * lv.transversal.size());
    for (const auto& t : lv.transversal)
      for (const auto& e : out) next.push_back(compose(t, e));
    out = std::move(next);
  }
  return out;
}

PermutationGroup schreier_sims(std::vector<Permutation> generators, int degree) {
  return PermutationGroup(std::move(generators), degree);
}

bool membership(const PermutationGroup& G, const Permutation& p) { return G.contains(p); }

std::vector<int> orbit(const PermutationGroup& G, int v) { return G.orbit_of(v); }

PermutationGroup point_stabilizer(const PermutationGroup& G, int v) { return G.stabilizer_of(v); }

bool is_regular_action(const PermutationGroup& G) {
  if (G.degree() == 0) return false;
  if (!G.is_transitive()) return false;
  if (G.order() != static_cast<std::uint64_t>(G.degree())) return false;
  // Redundant guard: a transitive group of order = degree must have a
  // trivial point stabilizer.
  if (G.stabilizer_of(0).order() != 1)
    throw InternalConsistencyError("regular action with nontrivial stabilizer of 0");
  return true;
}

} // namespace rw
