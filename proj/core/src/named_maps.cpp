#include "rw/named_maps.hpp"

#include <numeric>

#include "rw/errors.hpp"

namespace rw {
namespace {

long long mod(long long x, long long n) { return ((x % n) + n) % n; }

int modi(long long x, int n) { return static_cast<int>(mod(x, n)); }

/// x ≡ ±1 (mod n)?
bool pm1(long long x, int n) { return mod(x, n) == mod(1, n) || mod(x, n) == mod(-1, n); }

/// Multiplicative inverse of r mod n; requires gcd(n, r) = 1.
int mod_inverse(int r, int n) {
  long long t = 0, new_t = 1;
  long long s = n, new_s = mod(r, n);
  while (new_s != 0) {
    const long long q = s / new_s;
    const long long tmp_t = t - q * new_t;
    t = new_t;
    new_t = tmp_t;
    const long long tmp_s = s - q * new_s;
    s = new_s;
    new_s = tmp_s;
  }
  if (s != 1) {
    throw ApplicabilityError("no inverse of " + std::to_string(r) + " modulo " + std::to_string(n));
  }
  return modi(t, n);
}

} // namespace

std::string automorphism_kind_name(AutomorphismKind k) {
  switch (k) {
    case AutomorphismKind::Rho: return "rho";
    case AutomorphismKind::Mu: return "mu";
    case AutomorphismKind::Tau: return "tau";
    case AutomorphismKind::Zeta: return "zeta";
    case AutomorphismKind::Delta: return "delta";
    case AutomorphismKind::GammaF2: return "gamma";
    case AutomorphismKind::SigmaF2: return "sigma";
    case AutomorphismKind::Epsilon: return "epsilon";
    case AutomorphismKind::SigmaCapF3: return "sigma_cap";
    case AutomorphismKind::SigmaF4: return "sigma_f4";
    case AutomorphismKind::OmegaF4: return "omega_f4";
  }
  throw ParameterError("unknown automorphism kind");
}

Permutation perm_from_index_maps(int n, const std::function<int(int)>& fa,
                                 const std::function<int(int)>& fb) {
  std::vector<int> img(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    img[static_cast<std::size_t>(i)] = fa(i);
    img[static_cast<std::size_t>(n + i)] = fb(i);
  }
  return Permutation(std::move(img));
}

Permutation perm_rho(int n) {
  return perm_from_index_maps(
      n, [n](int i) { return vertex_A(n, i + 1); }, [n](int i) { return vertex_B(n, i + 1); });
}

Permutation perm_mu(int n, int a) {
  return perm_from_index_maps(
      n, [n](int i) { return vertex_A(n, -i); }, [n, a](int i) { return vertex_B(n, -a - i); });
}

Permutation perm_tau(int n) {
  return perm_from_index_maps(
      n, [n](int i) { return vertex_A(n, -i); }, [n](int i) { return vertex_B(n, -i); });
}

Permutation perm_rim_half_shift(int n) {
  if (n % 2 != 0) {
    throw ApplicabilityError("rim half shift requires even n, got n=" + std::to_string(n));
  }
  const int h = n / 2;
  return perm_from_index_maps(
      n, [n, h](int i) { return vertex_A(n, i + h); }, [n](int i) { return vertex_B(n, i); });
}

Permutation perm_delta(const RoseWindowParams& p, int* r_eff_out) {
  validate(p);
  const int n = p.n;
  for (int re : {modi(p.r, n), modi(-p.r, n)}) {
    if (mod(static_cast<long long>(re) * p.a + p.a, n) == 0 &&
        pm1(static_cast<long long>(re) * re, n)) {
      if (r_eff_out != nullptr) *r_eff_out = re;
      return perm_from_index_maps(
          n, [n, re](int i) { return vertex_B(n, modi(static_cast<long long>(re) * i, n)); },
          [n, re](int i) { return vertex_A(n, modi(static_cast<long long>(re) * i, n)); });
    }
  }
  throw ApplicabilityError("no r_eff in {r, n-r} with r_eff*a = -a and r_eff^2 = +-1 for " +
                           to_string(p));
}

Permutation perm_gamma_f2(const RoseWindowParams& p) {
  validate(p);
  const int n = p.n;
  if (n % 4 != 0 || p.a != n / 2 || p.r % 2 == 0 ||
      !pm1(static_cast<long long>(p.r) * p.r + n / 2, n)) {
    throw ApplicabilityError("gamma requires n = 0 (mod 4), a = n/2, r odd, r^2 + n/2 = +-1; " +
                             to_string(p) + " fails");
  }
  const int a = p.a;
  const int r = p.r;
  return perm_from_index_maps(
      n, [n, r](int i) { return vertex_B(n, modi(static_cast<long long>(r) * i, n)); },
      [n, r, a](int i) { return vertex_A(n, modi(static_cast<long long>(r + a) * i, n)); });
}

RoseWindowParams zeta_image_params(const RoseWindowParams& p) {
  validate(p);
  if (std::gcd(p.n, p.r) != 1) {
    throw ApplicabilityError("zeta requires gcd(n, r) = 1; " + to_string(p) + " fails");
  }
  const int rinv = mod_inverse(p.r, p.n);
  return RoseWindowParams{p.n, modi(static_cast<long long>(p.a) * rinv, p.n), rinv};
}

Permutation perm_zeta(const RoseWindowParams& p) {
  validate(p);
  if (std::gcd(p.n, p.r) != 1) {
    throw ApplicabilityError("zeta requires gcd(n, r) = 1; " + to_string(p) + " fails");
  }
  const int n = p.n;
  const int rinv = mod_inverse(p.r, n);
  return perm_from_index_maps(
      n, [n, rinv](int i) { return vertex_B(n, modi(-static_cast<long long>(i) * rinv, n)); },
      [n, rinv](int i) { return vertex_A(n, modi(-static_cast<long long>(i) * rinv, n)); });
}

bool matches_epsilon_form(const RoseWindowParams& p, int* m_out) {
  validate(p);
  if (p.n % 2 != 0) return false;
  const int m = p.n / 2;
  if (m < 3) return false;
  if (p.a != m - 2 || p.r != m - 1) return false;
  if (m_out != nullptr) *m_out = m;
  return true;
}

Permutation perm_epsilon(int n, int i) {
  if (n % 2 != 0 || n < 6) {
    throw ApplicabilityError("epsilon is defined on R_{2m}(m-2, m-1) with m >= 3; n=" +
                             std::to_string(n) + " fails");
  }
  const int m = n / 2;
  i = modi(i, m);
  std::vector<int> img(static_cast<std::size_t>(2 * n));
  for (int v = 0; v < 2 * n; ++v) img[static_cast<std::size_t>(v)] = v;
  const auto swap_pair = [&img](int u, int v) {
    img[static_cast<std::size_t>(u)] = v;
    img[static_cast<std::size_t>(v)] = u;
  };
  swap_pair(vertex_A(n, i + 1), vertex_B(n, i + 2));
  swap_pair(vertex_A(n, i + 1 + m), vertex_B(n, i + 2 + m));
  swap_pair(vertex_A(n, i), vertex_B(n, i + 1 + m));
  swap_pair(vertex_A(n, i + m), vertex_B(n, i + 1));
  return Permutation(std::move(img));
}

Permutation perm_sigma_cap_f3(int n, int i) {
  if (n % 2 != 0 || n < 6 || (n / 2) % 3 != 0) {
    throw ApplicabilityError(
        "sigma_cap is defined on R_{2m}(m-2, m-1) with 3 | m; n=" + std::to_string(n) + " fails");
  }
  const int m = n / 2;
  const int cls = modi(i, 3);
  Permutation out = Permutation::identity(2 * n);
  for (int j = 0; j < m; ++j) {
    if (j % 3 != cls) {
      out = compose(out, perm_epsilon(n, j)); // epsilons commute; order immaterial
    }
  }
  return out;
}

bool matches_sigma_f4_form(const RoseWindowParams& p, int* d_out) {
  validate(p);
  if (p.n % 12 != 0) return false;
  const int n = p.n;
  const int m = n / 12;
  for (int d : {m, -m}) {
    if (p.a == modi(3LL * d + 2, n) && p.r == modi(9LL * d + 1, n)) {
      if (d_out != nullptr) *d_out = d;
      return true;
    }
  }
  return false;
}

Permutation perm_sigma_f4(int n, int d) {
  if (n % 12 != 0) {
    throw ApplicabilityError("sigma_f4 requires 12 | n, got n=" + std::to_string(n));
  }
  const auto fa = [n, d](int i) {
    switch (i % 3) {
      case 0: return vertex_A(n, i);
      case 1: return vertex_B(n, modi(i - 1, n));
      default: return vertex_B(n, modi(i - 1 - 3LL * d, n));
    }
  };
  const auto fb = [n, d](int i) {
    switch (i % 3) {
      case 0: return vertex_A(n, i + 1);
      case 1: return vertex_A(n, modi(i + 3LL * d + 1, n));
      default: return vertex_B(n, modi(i + 6LL * d, n));
    }
  };
  return perm_from_index_maps(n, fa, fb);
}

Permutation omega_f4_closed_form(int n, int d) {
  if (n % 12 != 0) {
    throw ApplicabilityError("omega_f4 requires 12 | n, got n=" + std::to_string(n));
  }
  const long long b = mod(static_cast<long long>(d) + 1, n);
  const auto fa = [n, d, b](int i) {
    switch (i % 3) {
      case 0: return vertex_A(n, modi(b * i, n));
      case 1: return vertex_B(n, modi(b * i - b, n));
      default: return vertex_A(n, modi(b * i + d, n));
    }
  };
  const auto fb = [n, d, b](int i) {
    switch (i % 3) {
      case 0: return vertex_A(n, modi(b * i + 1, n));
      case 1: return vertex_B(n, modi(b * i - 4LL * d, n));
      default: return vertex_B(n, modi(b * i + b - 1, n));
    }
  };
  return perm_from_index_maps(n, fa, fb);
}

Permutation perm_omega_f4(int n, int d) {
  if (n % 12 != 0) {
    throw ApplicabilityError("omega_f4 requires 12 | n, got n=" + std::to_string(n));
  }
  const RoseWindowParams params{n, modi(3LL * d + 2, n), modi(9LL * d + 1, n)};
  const RWGraph g(params);
  const int nv = 2 * n;
  const long long b = mod(static_cast<long long>(d) + 1, n);

  std::vector<int> img(static_cast<std::size_t>(nv), -1);
  std::vector<char> used(static_cast<std::size_t>(nv), 0);
  const auto assign = [&](int v, int w) {
    if (img[static_cast<std::size_t>(v)] != -1 || used[static_cast<std::size_t>(w)]) {
      throw InternalConsistencyError("omega_f4 anchor classes collide on " + to_string(params));
    }
    img[static_cast<std::size_t>(v)] = w;
    used[static_cast<std::size_t>(w)] = 1;
  };
  for (int i = 0; i < n; ++i) {
    switch (i % 3) {
      case 0:
        assign(vertex_A(n, i), vertex_A(n, modi(b * i, n)));
        assign(vertex_B(n, i), vertex_A(n, modi(b * i + 1, n)));
        break;
      case 1:
        assign(vertex_A(n, i), vertex_B(n, modi(b * i - b, n)));
        break;
      default:
        assign(vertex_B(n, i), vertex_B(n, modi(b * i + b - 1, n)));
        break;
    }
  }

  // Complete by propagation: an unassigned vertex whose admissible images
  // (common neighbours of the images of its assigned neighbours, not yet
  // used) narrow to exactly one gets that image. Anything else is a defect
  // in the anchor formulas.
  int remaining = 0;
  for (int v = 0; v < nv; ++v) {
    if (img[static_cast<std::size_t>(v)] == -1) ++remaining;
  }
  while (remaining > 0) {
    bool progress = false;
    for (int v = 0; v < nv; ++v) {
      if (img[static_cast<std::size_t>(v)] != -1) continue;
      int candidate = -1;
      int count = 0;
      for (int w = 0; w < nv; ++w) {
        if (used[static_cast<std::size_t>(w)]) continue;
        bool ok = true;
        for (int u : g.adjacency()[static_cast<std::size_t>(v)]) {
          const int iu = img[static_cast<std::size_t>(u)];
          if (iu != -1 && !g.adjacent(w, iu)) {
            ok = false;
            break;
          }
        }
        if (ok) {
          candidate = w;
          if (++count > 1) break;
        }
      }
      if (count == 0) {
        throw InternalConsistencyError("omega_f4 completion impossible at vertex " +
                                       vertex_label(n, v) + " on " + to_string(params));
      }
      if (count == 1) {
        img[static_cast<std::size_t>(v)] = candidate;
        used[static_cast<std::size_t>(candidate)] = 1;
        --remaining;
        progress = true;
      }
    }
    if (!progress) {
      throw InternalConsistencyError("omega_f4 completion ambiguous on " + to_string(params));
    }
  }

  Permutation result{std::move(img)};
  if (!is_graph_automorphism(g, result)) {
    throw InternalConsistencyError("omega_f4 completion is not an automorphism of " +
                                   to_string(params));
  }
  return result;
}

bool is_graph_automorphism(const RWGraph& g, const Permutation& p) {
  if (p.degree() != g.vertex_count()) return false;
  for (const auto& e : g.edges()) {
    if (!g.adjacent(p(e.u), p(e.v))) return false;
  }
  return true;
}

Permutation explicit_automorphism(AutomorphismKind kind, const RoseWindowParams& p, int index) {
  validate(p);
  const int n = p.n;
  Permutation result;
  switch (kind) {
    case AutomorphismKind::Rho:
      result = perm_rho(n);
      break;
    case AutomorphismKind::Mu:
      result = perm_mu(n, p.a);
      break;
    case AutomorphismKind::Tau:
      if ((2 * p.a) % n != 0) {
        throw ApplicabilityError("tau preserves adjacency only when 2a = 0 (mod n); " +
                                 to_string(p) + " fails");
      }
      result = perm_tau(n);
      break;
    case AutomorphismKind::Zeta: {
      const RoseWindowParams q = zeta_image_params(p); // checks gcd(n, r) = 1
      const bool a_ok = q.a == modi(p.a, n) || q.a == modi(-p.a, n);
      const bool r_ok = q.r == modi(p.r, n) || q.r == modi(-p.r, n);
      if (!a_ok || !r_ok) {
        throw ApplicabilityError("zeta maps " + to_string(p) + " onto " + to_string(q) +
                                 ", which is a different labelled graph");
      }
      result = perm_zeta(p);
      break;
    }
    case AutomorphismKind::Delta:
      result = perm_delta(p);
      break;
    case AutomorphismKind::GammaF2:
      result = perm_gamma_f2(p);
      break;
    case AutomorphismKind::SigmaF2:
      if (n % 4 != 0 || p.a != n / 2 || p.r % 2 == 0 ||
          mod(static_cast<long long>(p.r) * p.r + n / 2, n) != mod(1, n)) {
        throw ApplicabilityError("sigma requires n = 0 (mod 4), a = n/2, r odd, r^2 + n/2 = +1; " +
                                 to_string(p) + " fails");
      }
      result = perm_gamma_f2(p);
      break;
    case AutomorphismKind::Epsilon:
      if (!matches_epsilon_form(p)) {
        throw ApplicabilityError("epsilon requires the form R_{2m}(m-2, m-1); " + to_string(p) +
                                 " fails");
      }
      result = perm_epsilon(n, index);
      break;
    case AutomorphismKind::SigmaCapF3: {
      int m = 0;
      if (!matches_epsilon_form(p, &m) || m % 3 != 0) {
        throw ApplicabilityError("sigma_cap requires the form R_{2m}(m-2, m-1) with 3 | m; " +
                                 to_string(p) + " fails");
      }
      result = perm_sigma_cap_f3(n, index);
      break;
    }
    case AutomorphismKind::SigmaF4: {
      int d = 0;
      if (!matches_sigma_f4_form(p, &d)) {
        throw ApplicabilityError("sigma_f4 requires the form R_{12m}(3d+2, 9d+1), d = +-m; " +
                                 to_string(p) + " fails");
      }
      result = perm_sigma_f4(n, d);
      break;
    }
    case AutomorphismKind::OmegaF4: {
      int d = 0;
      if (!matches_sigma_f4_form(p, &d) || (n / 12) % 4 != 2) {
        throw ApplicabilityError(
            "omega_f4 requires the form R_{12m}(3d+2, 9d+1) with m = 2 (mod 4); " + to_string(p) +
            " fails");
      }
      result = perm_omega_f4(n, d);
      break;
    }
  }
  const RWGraph g(p);
  if (!is_graph_automorphism(g, result)) {
    throw InternalConsistencyError("constructed " + automorphism_kind_name(kind) +
                                   " does not preserve adjacency on " + to_string(p));
  }
  return result;
}

} // namespace rw
