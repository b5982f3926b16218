#include "rw/classify.hpp"

#include <sstream>

#include <json.hpp>

#include "rw/autgroup.hpp"
#include "rw/errors.hpp"
#include "rw/graph.hpp"

namespace rw {
namespace {

/// x ≡ ±1 (mod n).
bool pm1(long long x, long long n) {
  const long long v = ((x % n) + n) % n;
  return v == 1 % n || v == (n - 1) % n;
}

long long modn(long long x, long long n) { return ((x % n) + n) % n; }

std::optional<FamilyDetail> match_family1(const RoseWindowParams& p) {
  const long long n = p.n;
  for (const auto& rep : representatives(p)) {
    const int a2 = rep.a;
    const int r2 = rep.r;
    for (int s1 : {+1, -1}) {
      if (modn(static_cast<long long>(r2) * r2, n) != modn(s1, n)) continue;
      for (int s2 : {+1, -1}) {
        if (modn(static_cast<long long>(r2) * a2 - static_cast<long long>(s2) * a2, n) != 0) {
          continue;
        }
        FamilyDetail d;
        d.family = Family::F1;
        d.sign = s1;
        d.sign2 = s2;
        d.representative = {a2, r2};
        return d;
      }
    }
  }
  return std::nullopt;
}

std::optional<FamilyDetail> match_family2(const RoseWindowParams& p) {
  const long long n = p.n;
  if (n % 4 != 0) return std::nullopt;
  const long long m = n / 4;
  for (const auto& rep : representatives(p)) {
    const int a2 = rep.a;
    const int r2 = rep.r;
    if (a2 != 2 * m || r2 % 2 != 1) continue;
    const long long v = modn(static_cast<long long>(r2) * r2 + 2 * m, n);
    int sign = 0;
    if (v == 1 % n) {
      sign = +1;
    } else if (v == (n - 1) % n) {
      sign = -1;
    } else {
      continue;
    }
    FamilyDetail d;
    d.family = Family::F2;
    d.m = static_cast<int>(m);
    d.sign = sign;
    d.representative = {a2, r2};
    return d;
  }
  return std::nullopt;
}

std::optional<FamilyDetail> match_family3(const RoseWindowParams& p) {
  const long long n = p.n;
  if (n % 2 != 0 || n < 6) return std::nullopt;
  const long long m = n / 2;
  for (const auto& rep : representatives(p)) {
    const int a2 = rep.a;
    const int r2 = rep.r;
    if (a2 != modn(m - 2, n) && a2 != modn(m + 2, n)) continue;
    if (r2 != modn(m - 1, n) && r2 != modn(m + 1, n)) continue;
    FamilyDetail d;
    d.family = Family::F3;
    d.m = static_cast<int>(m);
    d.sign = (a2 == modn(m + 2, n)) ? +1 : -1;
    d.sign2 = (r2 == modn(m + 1, n)) ? +1 : -1;
    d.representative = {a2, r2};
    return d;
  }
  return std::nullopt;
}

std::optional<FamilyDetail> match_family4(const RoseWindowParams& p) {
  const long long n = p.n;
  if (n % 12 != 0) return std::nullopt;
  const long long m = n / 12;
  for (const auto& rep : representatives(p)) {
    const int a2 = rep.a;
    const int r2 = rep.r;
    int dsign = 0;
    if (a2 == modn(3 * m + 2, n) && r2 == modn(3 * m - 1, n)) {
      dsign = +1;
    } else if (a2 == modn(3 * m - 2, n) && r2 == modn(3 * m + 1, n)) {
      dsign = -1;
    } else {
      continue;
    }
    FamilyDetail d;
    d.family = Family::F4;
    d.m = static_cast<int>(m);
    d.d = static_cast<int>(dsign * m);
    d.l = static_cast<int>(m / 12);
    d.representative = {a2, r2};
    return d;
  }
  return std::nullopt;
}

std::optional<FamilyDetail> match_family5(const RoseWindowParams& p) {
  const long long n = p.n;
  if (n % 2 != 0) return std::nullopt;
  const long long m = n / 2;
  for (const auto& rep : representatives(p)) {
    const int a2 = rep.a;
    const int r2 = rep.r;
    if (a2 % 2 != 0 || a2 < 2 || a2 > m) continue;
    const long long b = a2 / 2;
    if (!pm1(b * b, m)) continue;
    if (r2 != 1 % n && r2 != modn(m - 1, n)) continue;
    if (r2 % 2 != 1) continue;
    FamilyDetail d;
    d.family = Family::F5;
    d.m = static_cast<int>(m);
    d.b = static_cast<int>(b);
    d.sign = (modn(b * b, m) == 1 % m) ? +1 : -1;
    d.sign2 = (r2 == 1 % n) ? +1 : -1;
    d.representative = {a2, r2};
    return d;
  }
  return std::nullopt;
}

bool has_21_representative(const RoseWindowParams& p) {
  for (const auto& rep : representatives(p)) {
    if (rep.a == 2 % p.n && rep.r == 1 % p.n) return true;
  }
  return false;
}

nlohmann::ordered_json family_to_json(const FamilyDetail& d) {
  nlohmann::ordered_json j;
  j["family"] = family_name(d.family);
  if (d.m) j["m"] = *d.m;
  if (d.b) j["b"] = *d.b;
  if (d.d) j["d"] = *d.d;
  if (d.l) j["l"] = *d.l;
  if (d.sign) j["sign"] = *d.sign;
  if (d.sign2) j["sign2"] = *d.sign2;
  j["representative"] = {d.representative.first, d.representative.second};
  return j;
}

} // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::F1: return "F1";
    case Family::F2: return "F2";
    case Family::F3: return "F3";
    case Family::F4: return "F4";
    case Family::F5: return "F5";
  }
  throw InternalConsistencyError("unknown family tag");
}

bool family1_member(const RoseWindowParams& p) { return match_family1(p).has_value(); }

std::optional<int> family2_sign(const RoseWindowParams& p) {
  const auto d = match_family2(p);
  if (!d) return std::nullopt;
  return d->sign;
}

bool family3_member(const RoseWindowParams& p) { return match_family3(p).has_value(); }
bool family4_member(const RoseWindowParams& p) { return match_family4(p).has_value(); }
bool family5_member(const RoseWindowParams& p) { return match_family5(p).has_value(); }

std::vector<FamilyDetail> family_memberships(const RoseWindowParams& p) {
  validate(p);
  std::vector<FamilyDetail> out;
  if (auto d = match_family1(p)) out.push_back(*d);
  if (auto d = match_family2(p)) out.push_back(*d);
  if (auto d = match_family3(p)) out.push_back(*d);
  if (auto d = match_family4(p)) out.push_back(*d);
  if (auto d = match_family5(p)) out.push_back(*d);
  return out;
}

bool vt_by_theorem(const RoseWindowParams& p) {
  validate(p);
  return family1_member(p) || family2_sign(p).has_value() || family3_member(p) ||
         family4_member(p) || family5_member(p);
}

bool et_by_theorem(const RoseWindowParams& p) {
  validate(p);
  return has_21_representative(p) || family3_member(p) || family4_member(p) || family5_member(p);
}

bool cayley_by_theorem(const RoseWindowParams& p) {
  validate(p);
  if (family1_member(p)) return true;
  if (family2_sign(p) == +1) return true;
  if (family5_member(p)) return true;
  if (family3_member(p)) {
    const int m = p.n / 2;
    if (m % 2 == 0 || m % 3 == 0) return true;
  }
  if (family4_member(p)) {
    const int m = p.n / 12;
    if (m % 4 != 0) return true;
  }
  return false;
}

bool Classification::disagreement() const {
  if (et_search && *et_search != et_theorem) return true;
  if (vt_search && *vt_search != vt_theorem) return true;
  if (cayley_search && *cayley_search != cayley_theorem) return true;
  return false;
}

Classification classify(const RoseWindowParams& p) {
  validate(p);
  Classification c;
  c.params = p;
  c.normalized = normalize(p).first;
  c.degenerate = is_degenerate(p);
  c.families = family_memberships(p);
  c.f2_sign = family2_sign(p);
  c.et_theorem = et_by_theorem(p);
  c.vt_theorem = vt_by_theorem(p);
  c.cayley_theorem = cayley_by_theorem(p);
  return c;
}

Classification classify_with_search(const RoseWindowParams& p, const CayleyOptions& options) {
  Classification c = classify(p);
  if (c.degenerate) {
    return c; // the search-side verdicts are defined for simple 4-regular instances only
  }
  const RWGraph g(p);
  const auto aut = automorphism_group(g);
  c.aut_order = aut.group.order();
  c.vt_search = aut.group.is_transitive();
  const auto orbits = edge_orbits(g, aut.group);
  c.edge_orbits = orbits.count;
  c.et_search = (orbits.count == 1);
  try {
    auto verdict = is_cayley_search(p, options);
    c.cayley_search = verdict.is_cayley;
    c.witness = std::move(verdict.witness);
  } catch (const CapacityError& e) {
    c.search_error = e.what();
  }
  return c;
}

std::string classification_to_json(const Classification& c) {
  nlohmann::ordered_json j;
  j["n"] = c.params.n;
  j["a"] = c.params.a;
  j["r"] = c.params.r;
  j["degenerate"] = c.degenerate;
  j["normalized"] = {{"a", c.normalized.a}, {"r", c.normalized.r}};
  auto fams = nlohmann::ordered_json::array();
  for (const auto& d : c.families) fams.push_back(family_to_json(d));
  j["families"] = std::move(fams);
  if (c.f2_sign) j["f2_sign"] = *c.f2_sign;
  j["et_theorem"] = c.et_theorem;
  j["vt_theorem"] = c.vt_theorem;
  j["cayley_theorem"] = c.cayley_theorem;
  const bool any_search = c.et_search || c.vt_search || c.cayley_search;
  if (c.vt_search) j["vt_search"] = *c.vt_search;
  if (c.et_search) j["et_search"] = *c.et_search;
  if (c.cayley_search) j["cayley_search"] = *c.cayley_search;
  if (c.aut_order) j["aut_order"] = *c.aut_order;
  if (c.edge_orbits) j["edge_orbits"] = *c.edge_orbits;
  if (c.witness) {
    nlohmann::ordered_json w;
    w["case"] = witness_case_name(c.witness->kind);
    w["order"] = c.witness->order;
    j["witness"] = std::move(w);
  }
  if (c.search_error) j["search_error"] = *c.search_error;
  if (any_search) j["disagreement"] = c.disagreement();
  return j.dump();
}

std::string classification_to_text(const Classification& c) {
  std::ostringstream out;
  out << to_string(c.params) << "\n";
  out << "  normalized: " << to_string(c.normalized) << "\n";
  if (c.degenerate) {
    out << "  degenerate: yes (2r = 0 mod n; hub edges collapse)\n";
  }
  out << "  families:";
  if (c.families.empty()) {
    out << " none";
  } else {
    for (const auto& d : c.families) {
      out << " " << family_name(d.family) << "(";
      bool first = true;
      const auto item = [&](const std::string& k, int v) {
        if (!first) out << ", ";
        out << k << "=" << v;
        first = false;
      };
      if (d.m) item("m", *d.m);
      if (d.b) item("b", *d.b);
      if (d.d) item("d", *d.d);
      if (d.sign) item("sign", *d.sign);
      if (d.sign2) item("sign2", *d.sign2);
      if (!first) out << ", ";
      out << "rep=" << d.representative.first << "," << d.representative.second << ")";
    }
  }
  out << "\n";
  const auto yn = [](bool b) { return b ? "yes" : "no"; };
  out << "  vertex-transitive (arithmetic): " << yn(c.vt_theorem) << "\n";
  out << "  edge-transitive (arithmetic): " << yn(c.et_theorem) << "\n";
  out << "  cayley (arithmetic): " << yn(c.cayley_theorem) << "\n";
  if (c.aut_order) out << "  automorphism group order: " << *c.aut_order << "\n";
  if (c.vt_search) out << "  vertex-transitive (search): " << yn(*c.vt_search) << "\n";
  if (c.edge_orbits) {
    out << "  edge orbits: " << *c.edge_orbits << " (edge-transitive (search): "
        << yn(c.et_search.value_or(false)) << ")\n";
  }
  if (c.cayley_search) out << "  cayley (search): " << yn(*c.cayley_search) << "\n";
  if (c.witness) {
    out << "  witness: " << witness_case_name(c.witness->kind) << ", order " << c.witness->order
        << "\n";
  }
  if (c.search_error) out << "  search error: " << *c.search_error << "\n";
  if ((c.et_search || c.vt_search || c.cayley_search) && c.disagreement()) {
    out << "  DISAGREEMENT between arithmetic and search verdicts\n";
  }
  return out.str();
}

} // namespace rw
