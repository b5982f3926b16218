#include "rw/params.hpp"

#include <algorithm>

#include "rw/errors.hpp"

namespace rw {
namespace {

int mod(int x, int n) { return ((x % n) + n) % n; }

} // namespace

void validate(const RoseWindowParams& p) {
  if (p.n < 3) {
    throw ParameterError("rose window parameters require n >= 3, got n=" + std::to_string(p.n));
  }
  if (p.a < 1 || p.a > p.n - 1) {
    throw ParameterError("rose window parameters require 1 <= a <= n-1, got a=" +
                         std::to_string(p.a) + " with n=" + std::to_string(p.n));
  }
  if (p.r < 1 || p.r > p.n - 1) {
    throw ParameterError("rose window parameters require 1 <= r <= n-1, got r=" +
                         std::to_string(p.r) + " with n=" + std::to_string(p.n));
  }
}

bool is_degenerate(const RoseWindowParams& p) {
  validate(p);
  return (2 * p.r) % p.n == 0;
}

std::pair<RoseWindowParams, NormalizeProvenance> normalize(const RoseWindowParams& p) {
  validate(p);
  const int a2 = std::min(p.a, p.n - p.a);
  const int r2 = std::min(p.r, p.n - p.r);
  NormalizeProvenance prov;
  prov.a_flipped = (a2 != p.a);
  prov.r_flipped = (r2 != p.r);
  return {RoseWindowParams{p.n, a2, r2}, prov};
}

Permutation provenance_isomorphism(const RoseWindowParams& from, const NormalizeProvenance& prov) {
  validate(from);
  const int n = from.n;
  std::vector<int> img(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    if (prov.a_flipped) {
      img[static_cast<std::size_t>(i)] = mod(-i, n);
      img[static_cast<std::size_t>(n + i)] = n + mod(-i, n);
    } else {
      img[static_cast<std::size_t>(i)] = i;
      img[static_cast<std::size_t>(n + i)] = n + i;
    }
  }
  return Permutation(std::move(img));
}

std::vector<RoseWindowParams> representatives(const RoseWindowParams& p) {
  validate(p);
  const int n = p.n;
  std::vector<RoseWindowParams> out;
  for (int a2 : {mod(p.a, n), mod(-p.a, n)}) {
    for (int r2 : {mod(p.r, n), mod(-p.r, n)}) {
      RoseWindowParams q{n, a2, r2};
      if (std::find(out.begin(), out.end(), q) == out.end()) {
        out.push_back(q);
      }
    }
  }
  return out;
}

int vertex_A(int n, int i) { return mod(i, n); }

int vertex_B(int n, int i) { return n + mod(i, n); }

std::string vertex_label(int n, int v) {
  if (v < 0 || v >= 2 * n) {
    throw ParameterError("vertex id " + std::to_string(v) + " out of range for 2n=" +
                         std::to_string(2 * n));
  }
  if (v < n) {
    return "A" + std::to_string(v);
  }
  return "B" + std::to_string(v - n);
}

std::string to_string(const RoseWindowParams& p) {
  return "R_" + std::to_string(p.n) + "(" + std::to_string(p.a) + "," + std::to_string(p.r) + ")";
}

} // namespace rw
