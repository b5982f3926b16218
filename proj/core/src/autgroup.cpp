#include "rw/autgroup.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "rw/config.hpp"
#include "rw/errors.hpp"

namespace rw {
namespace {

long long mod(long long x, long long n) { return ((x % n) + n) % n; }

bool pm1(long long x, int n) { return mod(x, n) == mod(1, n) || mod(x, n) == mod(-1, n); }

/// Backtracking search for a single automorphism extending a fixed partial
/// map (identity on 0..k−1, k -> w).
class OneAutomorphismSearch {
 public:
  explicit OneAutomorphismSearch(const RWGraph& g) : g_(g), nv_(g.vertex_count()) {}

  std::optional<Permutation> find(int k, int w) {
    if (g_.degree(k) != g_.degree(w)) return std::nullopt;
    img_.assign(static_cast<std::size_t>(nv_), -1);
    used_.assign(static_cast<std::size_t>(nv_), 0);
    for (int j = 0; j < k; ++j) {
      img_[static_cast<std::size_t>(j)] = j;
      used_[static_cast<std::size_t>(j)] = 1;
    }
    if (!compatible(k, w)) return std::nullopt;
    img_[static_cast<std::size_t>(k)] = w;
    used_[static_cast<std::size_t>(w)] = 1;
    mapped_ = k + 1;
    if (extend()) {
      return Permutation(img_);
    }
    return std::nullopt;
  }

 private:
  /// True iff mapping v -> c preserves (non-)adjacency against every
  /// already-mapped vertex.
  bool compatible(int v, int c) const {
    for (int u = 0; u < nv_; ++u) {
      const int iu = img_[static_cast<std::size_t>(u)];
      if (iu != -1 && g_.adjacent(v, u) != g_.adjacent(c, iu)) return false;
    }
    return true;
  }

  bool extend() {
    if (mapped_ == nv_) return true;
    // Most-constrained unmapped vertex: maximal mapped-neighbour count,
    // ties broken towards the lowest index.
    int v = -1;
    int best = -1;
    for (int u = 0; u < nv_; ++u) {
      if (img_[static_cast<std::size_t>(u)] != -1) continue;
      int cnt = 0;
      for (int x : g_.adjacency()[static_cast<std::size_t>(u)]) {
        if (img_[static_cast<std::size_t>(x)] != -1) ++cnt;
      }
      if (cnt > best) {
        best = cnt;
        v = u;
      }
    }
    for (int c = 0; c < nv_; ++c) {
      if (used_[static_cast<std::size_t>(c)] || g_.degree(c) != g_.degree(v)) continue;
      if (!compatible(v, c)) continue;
      img_[static_cast<std::size_t>(v)] = c;
      used_[static_cast<std::size_t>(c)] = 1;
      ++mapped_;
      if (extend()) return true;
      img_[static_cast<std::size_t>(v)] = -1;
      used_[static_cast<std::size_t>(c)] = 0;
      --mapped_;
    }
    return false;
  }

  const RWGraph& g_;
  int nv_;
  int mapped_ = 0;
  std::vector<int> img_;
  std::vector<char> used_;
};

std::vector<int> orbit_under(int start, const std::vector<Permutation>& gens, int nv) {
  std::vector<char> seen(static_cast<std::size_t>(nv), 0);
  std::vector<int> queue{start};
  seen[static_cast<std::size_t>(start)] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& s : gens) {
      const int y = s(queue[head]);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        queue.push_back(y);
      }
    }
  }
  return queue;
}

PermutationGroup generic_automorphism_group(const RWGraph& g) {
  const int nv = g.vertex_count();
  if (nv > 200) {
    throw CapacityError("generic automorphism search is limited to 200 vertices, got " +
                        std::to_string(nv));
  }
  OneAutomorphismSearch searcher(g);
  std::vector<Permutation> gens;
  for (int k = nv - 2; k >= 0; --k) {
    std::vector<int> orb = orbit_under(k, gens, nv);
    std::vector<char> in_orbit(static_cast<std::size_t>(nv), 0);
    for (int x : orb) in_orbit[static_cast<std::size_t>(x)] = 1;
    for (int w = k + 1; w < nv; ++w) {
      if (in_orbit[static_cast<std::size_t>(w)]) continue;
      if (auto found = searcher.find(k, w)) {
        gens.push_back(std::move(*found));
        orb = orbit_under(k, gens, nv);
        for (int x : orb) in_orbit[static_cast<std::size_t>(x)] = 1;
      }
    }
  }
  return PermutationGroup(gens, nv);
}

bool contains_rep(const RoseWindowParams& p, const RoseWindowParams& q) {
  const auto reps = representatives(p);
  return std::find(reps.begin(), reps.end(), q) != reps.end();
}

PermutationGroup distinguished_closure(const RWGraph& g) {
  const RoseWindowParams& p = g.params();
  const int n = p.n;

  // R_{2m}(m−2, m−1) class: rho, mu and all epsilon_i.
  if (n % 2 == 0 && n >= 6) {
    const RoseWindowParams canon{n, n / 2 - 2, n / 2 - 1};
    if (contains_rep(p, canon)) {
      std::vector<Permutation> gens{perm_rho(n), perm_mu(n, canon.a)};
      for (int i = 0; i < n / 2; ++i) gens.push_back(perm_epsilon(n, i));
      for (auto& s : gens) s = transport_from_canonical(s, canon, p);
      return PermutationGroup(gens, 2 * n);
    }
  }

  // R_{12m}(3d+2, 9d+1) classes: rho, mu, sigma_f4 (omega_f4 when m ≡ 2 mod 4).
  if (n % 12 == 0) {
    const int m = n / 12;
    for (int d : {m, -m}) {
      const RoseWindowParams canon{n, static_cast<int>(mod(3LL * d + 2, n)),
                                   static_cast<int>(mod(9LL * d + 1, n))};
      if (!contains_rep(p, canon)) continue;
      std::vector<Permutation> gens{perm_rho(n), perm_mu(n, canon.a), perm_sigma_f4(n, d)};
      if (m % 4 == 2) gens.push_back(perm_omega_f4(n, d));
      for (auto& s : gens) s = transport_from_canonical(s, canon, p);
      return PermutationGroup(gens, 2 * n);
    }
  }

  // a = n/2 with r² + n/2 ≡ ±1: rho, mu, gamma (r is odd whenever the sign
  // condition holds, so gamma applies to the given parameters directly).
  if (n % 4 == 0 && 2 * p.a == n && pm1(static_cast<long long>(p.r) * p.r + n / 2, n)) {
    return PermutationGroup({perm_rho(n), perm_mu(n, p.a), perm_gamma_f2(p)}, 2 * n);
  }

  throw ApplicabilityError("no distinguished generating set is defined for " + to_string(p));
}

} // namespace

std::string aut_method_name(AutMethod m) {
  switch (m) {
    case AutMethod::Generic: return "generic";
    case AutMethod::Distinguished: return "paper";
  }
  throw ParameterError("unknown automorphism method");
}

AutGroupResult automorphism_group(const RWGraph& g, AutMethod method) {
  if (method == AutMethod::Generic) {
    return AutGroupResult{generic_automorphism_group(g), method};
  }
  return AutGroupResult{distinguished_closure(g), method};
}

Permutation transport_from_canonical(const Permutation& g, const RoseWindowParams& canonical,
                                     const RoseWindowParams& p) {
  if (canonical.n != p.n || !contains_rep(p, canonical)) {
    throw ParameterError("transport requires flip-equivalent parameters, got " +
                         to_string(canonical) + " vs " + to_string(p));
  }
  if (canonical.a == p.a) {
    return g;
  }
  const Permutation flip = perm_tau(p.n); // self-inverse X_i -> X_{−i}
  return compose(flip, compose(g, flip));
}

EdgeOrbits edge_orbits(const RWGraph& g, const PermutationGroup& aut) {
  const auto& edges = g.edges();
  const int ne = static_cast<int>(edges.size());
  const int nv = g.vertex_count();
  if (aut.degree() != nv) {
    throw DegreeMismatchError("edge orbit computation needs a group acting on the vertex set");
  }

  std::vector<int> edge_id(static_cast<std::size_t>(nv) * static_cast<std::size_t>(nv), -1);
  const auto id_at = [nv](int u, int v) {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(nv) + static_cast<std::size_t>(v);
  };
  for (int i = 0; i < ne; ++i) {
    edge_id[id_at(edges[static_cast<std::size_t>(i)].u, edges[static_cast<std::size_t>(i)].v)] = i;
    edge_id[id_at(edges[static_cast<std::size_t>(i)].v, edges[static_cast<std::size_t>(i)].u)] = i;
  }

  std::vector<int> parent(static_cast<std::size_t>(ne));
  std::iota(parent.begin(), parent.end(), 0);
  const std::function<int(int)> find_root = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };

  for (int i = 0; i < ne; ++i) {
    for (const auto& s : aut.generators()) {
      const int j = edge_id[id_at(s(edges[static_cast<std::size_t>(i)].u),
                                  s(edges[static_cast<std::size_t>(i)].v))];
      if (j < 0) {
        throw InternalConsistencyError("a supplied generator is not an automorphism of " +
                                       to_string(g.params()));
      }
      const int ri = find_root(i);
      const int rj = find_root(j);
      if (ri != rj) parent[static_cast<std::size_t>(rj)] = ri;
    }
  }

  EdgeOrbits out;
  out.orbit_index.assign(static_cast<std::size_t>(ne), -1);
  std::map<int, int> root_to_orbit;
  for (int i = 0; i < ne; ++i) {
    const int root = find_root(i);
    auto [it, inserted] = root_to_orbit.try_emplace(root, out.count);
    if (inserted) {
      ++out.count;
      out.orbit_kind_mask.push_back(0);
    }
    out.orbit_index[static_cast<std::size_t>(i)] = it->second;
    out.orbit_kind_mask[static_cast<std::size_t>(it->second)] |= edges[static_cast<std::size_t>(i)].kinds;
  }
  for (unsigned mask : out.orbit_kind_mask) {
    if ((mask & static_cast<unsigned>(EdgeKind::Rim)) != 0 &&
        (mask & static_cast<unsigned>(EdgeKind::Hub)) != 0) {
      out.rim_hub_merged = true;
    }
  }
  return out;
}

bool rim_hub_swap_arithmetic(const RoseWindowParams& p) {
  validate(p);
  const int n = p.n;
  const long long a = p.a;
  const long long r = p.r;
  const bool ra_pm = mod(r * a - a, n) == 0 || mod(r * a + a, n) == 0;
  if (2 * a != n && mod(r * r, n) == mod(1, n) && ra_pm) return true;
  if (2 * a == n && pm1(r * r, n) && ra_pm) return true;
  if (n % 4 == 0 && std::gcd(n, p.r) == 1 && 2 * a == n && pm1(r * r + n / 2, n)) return true;
  return false;
}

bool rim_hub_swap_computational(const RWGraph& g, const PermutationGroup& aut, std::size_t cap) {
  const auto& edges = g.edges();
  const int nv = g.vertex_count();
  std::vector<int> edge_id(static_cast<std::size_t>(nv) * static_cast<std::size_t>(nv), -1);
  const auto id_at = [nv](int u, int v) {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(nv) + static_cast<std::size_t>(v);
  };
  for (std::size_t i = 0; i < edges.size(); ++i) {
    edge_id[id_at(edges[i].u, edges[i].v)] = static_cast<int>(i);
    edge_id[id_at(edges[i].v, edges[i].u)] = static_cast<int>(i);
  }

  std::vector<int> rim;
  std::vector<int> hub;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if ((edges[i].kinds & static_cast<unsigned>(EdgeKind::Rim)) != 0) rim.push_back(static_cast<int>(i));
    if ((edges[i].kinds & static_cast<unsigned>(EdgeKind::Hub)) != 0) hub.push_back(static_cast<int>(i));
  }
  if (rim.size() != hub.size()) return false;
  if (rim == hub) return true;

  std::set<std::vector<int>> visited;
  std::vector<std::vector<int>> queue{rim};
  visited.insert(rim);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::vector<int> current = queue[head];
    for (const auto& s : aut.generators()) {
      std::vector<int> image;
      image.reserve(current.size());
      for (int ei : current) {
        const int j = edge_id[id_at(s(edges[static_cast<std::size_t>(ei)].u),
                                    s(edges[static_cast<std::size_t>(ei)].v))];
        if (j < 0) {
          throw InternalConsistencyError("a supplied generator is not an automorphism of " +
                                         to_string(g.params()));
        }
        image.push_back(j);
      }
      std::sort(image.begin(), image.end());
      if (image == hub) return true;
      if (visited.insert(image).second) {
        if (visited.size() > cap) {
          throw CapacityError("edge-set image search exceeded " + std::to_string(cap) +
                              " distinct sets");
        }
        queue.push_back(std::move(image));
      }
    }
  }
  return false;
}

} // namespace rw
