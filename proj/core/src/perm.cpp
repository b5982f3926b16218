#include "rw/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "rw/errors.hpp"

namespace rw {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int v : images_) {
    if (v < 0 || v >= n || seen[static_cast<size_t>(v)])
      throw ParameterError("permutation image array is not a bijection on {0..…}");
    seen[static_cast<size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  if (degree < 0) throw ParameterError("negative permutation degree");
  std::vector<int> img(static_cast<size_t>(degree));
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const noexcept {
  for (int i = 0; i < degree(); ++i)
    if (images_[static_cast<size_t>(i)] != i) return false;
  return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw DegreeMismatchError("compose: degree mismatch");
  std::vector<int> img(static_cast<size_t>(p.degree()));
  for (int x = 0; x < p.degree(); ++x) img[static_cast<size_t>(x)] = p(q(x));
  return Permutation(std::move(img));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> img(static_cast<size_t>(p.degree()));
  for (int x = 0; x < p.degree(); ++x) img[static_cast<size_t>(p(x))] = x;
  return Permutation(std::move(img));
}

Permutation power(const Permutation& p, long long k) {
  Permutation base = p;
  if (k < 0) {
    base = inverse(p);
    k = -k;
  }
  Permutation acc = Permutation::identity(p.degree());
  while (k > 0) {
    if (k & 1) acc = compose(acc, base);
    base = compose(base, base);
    k >>= 1;
  }
  return acc;
}

std::uint64_t element_order(const Permutation& p) {
  const int n = p.degree();
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::uint64_t order = 1;
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<size_t>(i)]) continue;
    std::uint64_t len = 0;
    int j = i;
    while (!seen[static_cast<size_t>(j)]) {
      seen[static_cast<size_t>(j)] = 1;
      j = p(j);
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

bool is_derangement(const Permutation& p) {
  for (int x = 0; x < p.degree(); ++x)
    if (p(x) == x) return false;
  return p.degree() > 0;
}

std::string to_image_string(const Permutation& p) {
  std::ostringstream os;
  os << '[';
  for (int x = 0; x < p.degree(); ++x) {
    if (x) os << ',';
    os << p(x);
  }
  os << ']';
  return os.str();
}

std::string to_cycle_string(const Permutation& p) {
  const int n = p.degree();
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::ostringstream os;
  bool any = false;
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<size_t>(i)] || p(i) == i) {
      seen[static_cast<size_t>(i)] = 1;
      continue;
    }
    os << '(';
    int j = i;
    bool first = true;
    while (!seen[static_cast<size_t>(j)]) {
      seen[static_cast<size_t>(j)] = 1;
      if (!first) os << ' ';
      os << j;
      first = false;
      j = p(j);
    }
    os << ')';
    any = true;
  }
  if (!any) return "()";
  return os.str();
}

namespace {

void skip_ws(const std::string& s, size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

int parse_int(const std::string& s, size_t& i) {
  skip_ws(s, i);
  size_t start = i;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == start) throw ParameterError("expected integer in permutation text");
  return std::stoi(s.substr(start, i - start));
}

} // namespace

Permutation parse_permutation(const std::string& text, int degree) {
  size_t i = 0;
  skip_ws(text, i);
  if (i >= text.size()) throw ParameterError("empty permutation text");

  auto check_point = [degree](int v) {
    if (v < 0 || v >= degree)
      throw ParameterError("permutation point out of range for degree " + std::to_string(degree));
    return v;
  };

  if (text[i] == '[') {
    ++i;
    std::vector<int> img;
    skip_ws(text, i);
    if (i < text.size() && text[i] == ']') {
      ++i;
    } else {
      while (true) {
        img.push_back(check_point(parse_int(text, i)));
        skip_ws(text, i);
        if (i < text.size() && text[i] == ',') {
          ++i;
          continue;
        }
        if (i < text.size() && text[i] == ']') {
          ++i;
          break;
        }
        throw ParameterError("malformed image list");
      }
    }
    skip_ws(text, i);
    if (i != text.size()) throw ParameterError("trailing characters after image list");
    if (static_cast<int>(img.size()) != degree)
      throw ParameterError("image list length disagrees with requested degree");
    return Permutation(std::move(img));
  }

  // Cycle notation.
  std::vector<int> img(static_cast<size_t>(degree));
  std::iota(img.begin(), img.end(), 0);
  bool saw_cycle = false;
  while (i < text.size()) {
    skip_ws(text, i);
    if (i >= text.size()) break;
    if (text[i] != '(') throw ParameterError("expected '(' in cycle notation");
    ++i;
    std::vector<int> cyc;
    skip_ws(text, i);
    while (i < text.size() && text[i] != ')') {
      cyc.push_back(check_point(parse_int(text, i)));
      skip_ws(text, i);
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws(text, i);
      }
    }
    if (i >= text.size()) throw ParameterError("unterminated cycle");
    ++i; // ')'
    saw_cycle = true;
    for (size_t k = 0; k < cyc.size(); ++k) {
      int from = cyc[k];
      int to = cyc[(k + 1) % cyc.size()];
      if (img[static_cast<size_t>(from)] != from)
        throw ParameterError("point repeated across cycles");
      img[static_cast<size_t>(from)] = to;
    }
    // A 1-cycle "(x)" maps x to itself; the loop above handles it.
  }
  if (!saw_cycle) throw ParameterError("no cycles found in permutation text");
  return Permutation(std::move(img));
}

} // namespace rw
