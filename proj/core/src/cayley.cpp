#include "rw/cayley.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "rw/autgroup.hpp"
#include "rw/config.hpp"
#include "rw/errors.hpp"
#include "rw/graph.hpp"
#include "rw/named_maps.hpp"

namespace rw {
namespace {

/// Backtracking state for the sharply-transitive assignment search.
class RegularSubgroupSearch {
 public:
  RegularSubgroupSearch(const PermutationGroup& group, SearchStats* stats,
                        std::optional<unsigned> shuffle_seed)
      : degree_(group.degree()), stats_(stats) {
    const auto elements = group.elements(); // CapacityError above enum_cap
    buckets_.assign(static_cast<std::size_t>(degree_), {});
    for (const auto& e : elements) {
      if (is_derangement(e)) {
        if (stats_ != nullptr) ++stats_->derangements;
        buckets_[static_cast<std::size_t>(e(0))].push_back(e);
      }
    }
    for (int v = 1; v < degree_; ++v) {
      auto& bucket = buckets_[static_cast<std::size_t>(v)];
      std::sort(bucket.begin(), bucket.end());
      if (shuffle_seed) {
        std::mt19937 rng(*shuffle_seed + static_cast<unsigned>(v));
        std::shuffle(bucket.begin(), bucket.end(), rng);
      }
    }
  }

  /// Runs the search; nullopt when no regular subgroup exists.
  std::optional<std::vector<Permutation>> run() {
    for (int v = 1; v < degree_; ++v) {
      if (buckets_[static_cast<std::size_t>(v)].empty()) return std::nullopt;
    }
    assigned_.assign(static_cast<std::size_t>(degree_), std::nullopt);
    assigned_[0] = Permutation::identity(degree_);
    branch_gens_.clear();
    if (descend()) {
      return branch_gens_;
    }
    return std::nullopt;
  }

 private:
  /// Assigns h_v := e and forces every product with already-assigned
  /// elements; records assignments on the trail. False on contradiction.
  bool assign_and_propagate(int v, const Permutation& e, std::vector<int>& trail) {
    assigned_[static_cast<std::size_t>(v)] = e;
    trail.push_back(v);
    std::vector<int> queue{v};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int w = queue[head];
      const Permutation hw = *assigned_[static_cast<std::size_t>(w)]; // copy: container mutates
      for (int u = 0; u < degree_; ++u) {
        if (!assigned_[static_cast<std::size_t>(u)]) continue;
        const Permutation hu = *assigned_[static_cast<std::size_t>(u)];
        for (const Permutation* lhs : {&hw, &hu}) {
          const Permutation& rhs = (lhs == &hw) ? hu : hw;
          Permutation product = compose(*lhs, rhs);
          const int target = product(0);
          auto& slot = assigned_[static_cast<std::size_t>(target)];
          if (slot) {
            if (*slot != product) return false;
          } else {
            if (target != 0 && !is_derangement(product)) return false;
            if (target == 0 && !product.is_identity()) return false;
            slot = std::move(product);
            trail.push_back(target);
            queue.push_back(target);
          }
        }
      }
    }
    return true;
  }

  void undo(std::vector<int>& trail) {
    for (int v : trail) assigned_[static_cast<std::size_t>(v)] = std::nullopt;
    trail.clear();
  }

  bool descend() {
    int v = -1;
    for (int u = 1; u < degree_; ++u) {
      if (!assigned_[static_cast<std::size_t>(u)]) {
        v = u;
        break;
      }
    }
    if (v == -1) return true; // complete sharply-transitive assignment
    for (const auto& candidate : buckets_[static_cast<std::size_t>(v)]) {
      if (stats_ != nullptr) ++stats_->nodes;
      std::vector<int> trail;
      if (assign_and_propagate(v, candidate, trail)) {
        branch_gens_.push_back(candidate);
        if (descend()) return true;
        branch_gens_.pop_back();
      }
      undo(trail);
    }
    return false;
  }

  int degree_;
  SearchStats* stats_;
  std::vector<std::vector<Permutation>> buckets_;
  std::vector<std::optional<Permutation>> assigned_;
  std::vector<Permutation> branch_gens_;
};

std::filesystem::path cache_path(const RoseWindowParams& normalized) {
  return std::filesystem::path(cache_dir()) /
         ("rw-witness-" + std::to_string(normalized.n) + "-" + std::to_string(normalized.a) + "-" +
          std::to_string(normalized.r) + ".json");
}

/// Conjugates an automorphism across the flip isomorphism phi: from the
/// graph on `from` to the graph on its normalized parameters (or back).
Permutation conjugate_by(const Permutation& g, const Permutation& phi, bool towards_normalized) {
  // towards normalized: phi ∘ g ∘ phi⁻¹; back: phi⁻¹ ∘ g ∘ phi.
  if (towards_normalized) {
    return compose(phi, compose(g, inverse(phi)));
  }
  return compose(inverse(phi), compose(g, phi));
}

std::optional<CayleyVerdict> try_cache(const RoseWindowParams& p,
                                       const RoseWindowParams& normalized,
                                       const Permutation& phi) {
  std::ifstream in(cache_path(normalized));
  if (!in) return std::nullopt;
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    const nlohmann::json j = nlohmann::json::parse(buffer.str());
    CayleyVerdict verdict;
    verdict.stats.cache_hit = true;
    verdict.is_cayley = j.at("verdict").get<bool>();
    if (!verdict.is_cayley) {
      return verdict; // cached none-verdicts are trusted
    }
    RegularWitness w = witness_from_json(j.at("witness").dump());
    if (w.params != normalized || !verify_witness(w)) {
      return std::nullopt; // stale or corrupt: recompute
    }
    for (auto& s : w.generators) s = conjugate_by(s, phi, /*towards_normalized=*/false);
    w.params = p;
    if (!verify_witness(w)) {
      return std::nullopt;
    }
    verdict.witness = std::move(w);
    return verdict;
  } catch (const std::exception&) {
    return std::nullopt; // unreadable cache entry: recompute
  }
}

void write_cache(const RoseWindowParams& normalized, const Permutation& phi,
                 const CayleyVerdict& verdict) {
  try {
    std::filesystem::create_directories(cache_dir());
    nlohmann::json j;
    j["verdict"] = verdict.is_cayley;
    if (verdict.is_cayley && verdict.witness) {
      RegularWitness w = *verdict.witness;
      for (auto& s : w.generators) s = conjugate_by(s, phi, /*towards_normalized=*/true);
      w.params = normalized;
      j["witness"] = nlohmann::json::parse(witness_to_json(w));
    }
    std::ofstream out(cache_path(normalized));
    out << j.dump() << "\n";
  } catch (const std::exception&) {
    // The cache is an optimization; failure to persist is not an error.
  }
}

/// Wraps search generators as a verified SearchFound witness.
RegularWitness search_witness(const RoseWindowParams& p, std::vector<Permutation> gens, int nv) {
  RegularWitness w;
  w.kind = WitnessCase::SearchFound;
  w.params = p;
  w.generators = std::move(gens);
  w.order = static_cast<std::uint64_t>(nv);
  if (!verify_witness(w)) {
    throw InternalConsistencyError("regular-subgroup search returned an invalid witness for " +
                                   to_string(p));
  }
  return w;
}

} // namespace

std::optional<std::vector<Permutation>> find_regular_subgroup(
    const PermutationGroup& group, SearchStats* stats, std::optional<unsigned> shuffle_seed) {
  const auto t0 = std::chrono::steady_clock::now();
  if (stats != nullptr) stats->group_order = group.order();
  std::optional<std::vector<Permutation>> result;
  if (group.degree() > 0 && group.order() >= static_cast<std::uint64_t>(group.degree())) {
    RegularSubgroupSearch search(group, stats, shuffle_seed);
    result = search.run();
  }
  if (stats != nullptr) {
    stats->seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
  return result;
}

CayleyVerdict is_cayley_search(const RoseWindowParams& p, const CayleyOptions& options) {
  validate(p);
  if (is_degenerate(p)) {
    throw ApplicabilityError("degenerate parameters (2r = 0 mod n) are outside the Cayley "
                             "decision scope: " + to_string(p));
  }
  const auto t0 = std::chrono::steady_clock::now();
  const auto [normalized, prov] = normalize(p);
  const Permutation phi = provenance_isomorphism(p, prov);

  if (options.use_cache) {
    if (auto cached = try_cache(p, normalized, phi)) {
      return *cached;
    }
  }

  CayleyVerdict verdict;
  const RWGraph g(p);
  const auto aut = automorphism_group(g);
  verdict.stats.group_order = aut.group.order();
  const auto nv = static_cast<std::uint64_t>(g.vertex_count());

  const auto finish = [&](CayleyVerdict v) {
    v.stats.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (options.use_cache) write_cache(normalized, phi, v);
    return v;
  };

  if (!aut.group.is_transitive()) {
    verdict.is_cayley = false;
    verdict.stats.transitivity_shortcut = true;
    return finish(std::move(verdict));
  }

  constexpr std::uint64_t kExhaustiveThreshold = 50000;

  const auto run_exhaustive = [&]() {
    verdict.stats.exhaustive = true;
    auto found = find_regular_subgroup(aut.group, &verdict.stats, options.shuffle_seed);
    if (found) {
      verdict.is_cayley = true;
      verdict.witness = search_witness(p, std::move(*found), g.vertex_count());
    } else {
      verdict.is_cayley = false;
    }
  };

  if (aut.group.order() <= kExhaustiveThreshold) {
    run_exhaustive();
    return finish(std::move(verdict));
  }

  if (auto w = constructive_witness(p)) {
    verdict.is_cayley = true;
    verdict.witness = std::move(w);
    verdict.stats.witness_first = true;
    return finish(std::move(verdict));
  }

  if (aut.group.order() <= enum_cap()) {
    run_exhaustive();
    return finish(std::move(verdict));
  }

  throw CapacityError("|Aut| = " + std::to_string(aut.group.order()) + " exceeds the enumeration "
                      "cap " + std::to_string(enum_cap()) + " for " + to_string(p) +
                      " and no constructive witness applies");
  (void)nv;
}

bool small_instance_is_cayley(const RoseWindowParams& p) {
  validate(p);
  if (is_degenerate(p)) {
    throw ApplicabilityError("degenerate parameters (2r = 0 mod n) are outside the Cayley "
                             "decision scope: " + to_string(p));
  }
  const RWGraph g(p);
  const int nv = g.vertex_count();
  const auto aut = automorphism_group(g);
  if (!aut.group.is_transitive()) return false;

  // Candidate elements: derangements whose order divides 2n and whose
  // non-identity powers are all derangements.
  std::vector<Permutation> candidates;
  for (const auto& e : aut.group.elements()) {
    if (!is_derangement(e)) continue;
    const auto ord = element_order(e);
    if (static_cast<std::uint64_t>(nv) % ord != 0) continue;
    bool all_derangements = true;
    Permutation pw = e;
    for (std::uint64_t k = 2; k < ord; ++k) {
      pw = compose(pw, e);
      if (!is_derangement(pw)) {
        all_derangements = false;
        break;
      }
    }
    if (all_derangements) candidates.push_back(e);
  }
  std::sort(candidates.begin(), candidates.end());

  // Closure of a candidate set, aborting above nv elements or on a
  // non-derangement non-identity product.
  const auto closes_regularly = [nv](const std::vector<const Permutation*>& gens) {
    std::set<Permutation> closure{Permutation::identity(nv)};
    std::vector<Permutation> queue{Permutation::identity(nv)};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const Permutation* s : gens) {
        Permutation next = compose(*s, queue[head]);
        if (closure.count(next)) continue;
        if (!next.is_identity() && !is_derangement(next)) return false;
        if (closure.size() + 1 > static_cast<std::size_t>(nv)) return false;
        closure.insert(next);
        queue.push_back(std::move(next));
      }
    }
    return closure.size() == static_cast<std::size_t>(nv);
  };

  const std::size_t count = candidates.size();
  for (std::size_t i = 0; i < count; ++i) {
    if (element_order(candidates[i]) == static_cast<std::uint64_t>(nv)) return true;
  }
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      if (closes_regularly({&candidates[i], &candidates[j]})) return true;
    }
  }
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      for (std::size_t k = j + 1; k < count; ++k) {
        if (closes_regularly({&candidates[i], &candidates[j], &candidates[k]})) return true;
      }
    }
  }
  if (nv == 16) {
    // The elementary-abelian group of order 16 needs four generators.
    std::vector<std::size_t> involutions;
    for (std::size_t i = 0; i < count; ++i) {
      if (element_order(candidates[i]) == 2) involutions.push_back(i);
    }
    const std::size_t ni = involutions.size();
    for (std::size_t i = 0; i < ni; ++i) {
      for (std::size_t j = i + 1; j < ni; ++j) {
        for (std::size_t k = j + 1; k < ni; ++k) {
          for (std::size_t l = k + 1; l < ni; ++l) {
            if (closes_regularly({&candidates[involutions[i]], &candidates[involutions[j]],
                                  &candidates[involutions[k]], &candidates[involutions[l]]})) {
              return true;
            }
          }
        }
      }
    }
  }
  return false;
}

} // namespace rw
