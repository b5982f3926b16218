#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <random>
#include <set>
#include <sstream>
#include <unistd.h>

#include "rw/autgroup.hpp"
#include "rw/cayley.hpp"
#include "rw/classify.hpp"
#include "rw/config.hpp"
#include "rw/errors.hpp"
#include "rw/graph.hpp"
#include "rw/group.hpp"
#include "rw/named_maps.hpp"
#include "rw/params.hpp"
#include "rw/perm.hpp"
#include "rw/relations.hpp"
#include "rw/survey.hpp"
#include "rw/witness.hpp"

using namespace rw;

namespace {

/// True iff phi maps every edge of `from` onto an edge of `to`.
bool is_isomorphism_onto(const RWGraph& from, const RWGraph& to, const Permutation& phi) {
  if (phi.degree() != from.vertex_count() || from.vertex_count() != to.vertex_count())
    return false;
  for (const auto& e : from.edges())
    if (!to.adjacent(phi(e.u), phi(e.v))) return false;
  return true;
}

CayleyOptions no_cache() {
  CayleyOptions o;
  o.use_cache = false;
  return o;
}

} // namespace

TEST_CASE("permutation construction and serialization") {
  const Permutation p({1, 2, 0, 4, 3});
  CHECK(p.degree() == 5);
  CHECK(p(0) == 1);
  CHECK(to_cycle_string(p) == "(0 1 2)(3 4)");
  CHECK(parse_permutation("(0 1 2)(3 4)", 5) == p);
  CHECK(parse_permutation(to_image_string(p), 5) == p);
  CHECK(parse_permutation(to_cycle_string(p), 5) == p);
  CHECK(to_cycle_string(Permutation::identity(4)) == "()");
  CHECK(parse_permutation("()", 4) == Permutation::identity(4));

  CHECK_THROWS_AS(Permutation({0, 0, 1}), ParameterError);
  CHECK_THROWS_AS(parse_permutation("(0 1", 3), ParameterError);
  CHECK_THROWS_AS(parse_permutation("[1,1,0]", 3), ParameterError);
  CHECK_THROWS_AS(parse_permutation("(0 9)", 3), ParameterError);
}

TEST_CASE("composition applies the right factor first") {
  const Permutation p({1, 0, 2});
  const Permutation q({0, 2, 1});
  const auto pq = compose(p, q);
  for (int x = 0; x < 3; ++x) CHECK(pq(x) == p(q(x)));
  CHECK(pq != compose(q, p)); // these two do not commute

  const auto rho = perm_rho(6);
  CHECK(compose(rho, inverse(rho)) == Permutation::identity(12));
  CHECK(power(rho, -1) == inverse(rho));
  CHECK(power(rho, 6) == Permutation::identity(12));
  CHECK(element_order(rho) == 6);
  CHECK(is_derangement(rho));
  CHECK_FALSE(is_derangement(Permutation({0, 2, 1})));
  CHECK_THROWS_AS(compose(rho, Permutation::identity(3)), DegreeMismatchError);
}

TEST_CASE("group axioms hold on random words over Aut generators") {
  const RWGraph g({8, 2, 3});
  const auto aut = automorphism_group(g).group;
  std::mt19937 rng(12345);
  const auto& gens = aut.generators();
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  for (int trial = 0; trial < 50; ++trial) {
    auto w = Permutation::identity(aut.degree());
    for (int k = 0; k < 6; ++k) w = compose(w, gens[pick(rng)]);
    CHECK(membership(aut, w));
    CHECK(membership(aut, inverse(w)));
    CHECK(compose(w, inverse(w)) == Permutation::identity(aut.degree()));
    CHECK(is_graph_automorphism(g, w));
  }
}

TEST_CASE("named map identities") {
  // mu rho mu = rho^-1 on R_6(1, r)
  const auto rho = perm_rho(6);
  const auto mu = perm_mu(6, 1);
  CHECK(compose(mu, compose(rho, mu)) == inverse(rho));

  // tau is an involution
  for (int n : {3, 4, 7}) {
    const auto tau = perm_tau(n);
    CHECK(compose(tau, tau) == Permutation::identity(2 * n));
  }

  // delta conjugates rho to rho^r_eff on R_8(2,3)
  int r_eff = 0;
  const auto delta = perm_delta({8, 2, 3}, &r_eff);
  CHECK(compose(delta, compose(perm_rho(8), delta)) == power(perm_rho(8), r_eff));
  CHECK(is_graph_automorphism(RWGraph({8, 2, 3}), delta));
}

TEST_CASE("relation words evaluate with the rightmost factor acting first") {
  SymbolAssignment sym{{"rho", perm_rho(6)}, {"mu", perm_mu(6, 1)}};
  CHECK(evaluate_word("rho^2", sym) == power(perm_rho(6), 2));
  CHECK(evaluate_word("mu rho mu", sym) == compose(perm_mu(6, 1), compose(perm_rho(6), perm_mu(6, 1))));
  CHECK(evaluate_word("(rho mu)^2", sym) ==
        power(compose(perm_rho(6), perm_mu(6, 1)), 2));
  CHECK(evaluate_word("1", sym) == Permutation::identity(12));
  CHECK(evaluate_word("rho^-1", sym) == inverse(perm_rho(6)));
  CHECK(check_relation("mu rho mu = rho^-1", sym));
  CHECK(check_relation("mu^2 = 1", sym));
  CHECK_FALSE(check_relation("rho mu = mu rho", sym));

  CHECK_THROWS_AS(evaluate_word("nu", sym), WordError);
  CHECK_THROWS_AS(evaluate_word("rho^", sym), WordError);
  CHECK_THROWS_AS(evaluate_word("(rho", sym), WordError);
  CHECK_THROWS_AS(evaluate_word("rho", SymbolAssignment{}), WordError);
  CHECK_THROWS_AS(check_relation("rho = mu = 1", sym), WordError);
}

TEST_CASE("schreier-sims: order, membership, orbits") {
  CHECK(schreier_sims({}, 5).order() == 1);
  CHECK(PermutationGroup::trivial(5).degree() == 5);

  // Dihedral group on the rim of R_7: order 14; brute enumeration agrees.
  const PermutationGroup dih({perm_rho(7), perm_mu(7, 2)}, 14);
  CHECK(dih.order() == 14);
  CHECK(dih.elements().size() == 14);
  for (const auto& e : dih.elements()) CHECK(membership(dih, e));
  CHECK_FALSE(membership(dih, parse_permutation("(0 1)", 14)));

  // Larger examples: BSGS order equals exhaustive element count.
  for (auto params : {RoseWindowParams{6, 1, 2}, RoseWindowParams{8, 2, 3}}) {
    const auto aut = automorphism_group(RWGraph(params)).group;
    std::set<Permutation> all;
    for (const auto& e : aut.elements()) all.insert(e);
    CHECK(all.size() == aut.order());
  }
}

TEST_CASE("orbit-stabilizer identity") {
  const auto aut = automorphism_group(RWGraph({8, 2, 3})).group;
  CHECK(aut.order() == 384);
  for (int v : {0, 5, 8, 15}) {
    const auto orb = orbit(aut, v);
    const auto stab = point_stabilizer(aut, v);
    CHECK(orb.size() * stab.order() == aut.order());
    for (const auto& s : stab.generators()) CHECK(s(v) == v);
  }
}

TEST_CASE("regular action detection") {
  const RWGraph g({8, 2, 3});
  const auto rho = perm_rho(8);
  const auto delta = perm_delta({8, 2, 3});
  CHECK(is_regular_action(PermutationGroup({rho, delta}, 16)));
  CHECK_FALSE(is_regular_action(PermutationGroup({rho}, 16)));             // too small
  CHECK_FALSE(is_regular_action(PermutationGroup({rho, perm_mu(8, 2)}, 16))); // point stabilizer
  // Every non-identity element of a regular group is a derangement.
  for (const auto& e : PermutationGroup({rho, delta}, 16).elements())
    CHECK((e.is_identity() || is_derangement(e)));
}

TEST_CASE("parameter validation and normalization") {
  CHECK_THROWS_AS(validate({2, 1, 1}), ParameterError);
  CHECK_THROWS_AS(validate({6, 0, 1}), ParameterError);
  CHECK_THROWS_AS(validate({6, 1, 6}), ParameterError);
  CHECK_NOTHROW(validate({3, 1, 1}));

  CHECK(is_degenerate({8, 2, 4}));
  CHECK(is_degenerate({6, 1, 3}));
  CHECK_FALSE(is_degenerate({8, 2, 3}));

  const auto [norm, prov] = normalize({20, 17, 13});
  CHECK(norm == RoseWindowParams{20, 3, 7});
  CHECK(prov.a_flipped);
  CHECK(prov.r_flipped);

  // The provenance permutation is an isomorphism onto the normalized graph.
  const RWGraph from({20, 17, 13}), to(norm);
  CHECK(is_isomorphism_onto(from, to, provenance_isomorphism({20, 17, 13}, prov)));

  // All four sign representatives, deduplicated.
  const auto reps = representatives({8, 2, 3});
  REQUIRE(reps.size() == 4);
  CHECK(reps[0] == RoseWindowParams{8, 2, 3});
  CHECK(reps[1] == RoseWindowParams{8, 2, 5});
  CHECK(reps[2] == RoseWindowParams{8, 6, 3});
  CHECK(reps[3] == RoseWindowParams{8, 6, 5});
  CHECK(representatives({8, 4, 1}).size() == 2); // a = n - a collapses
}

TEST_CASE("graph construction") {
  const RWGraph g({6, 1, 2});
  CHECK(g.vertex_count() == 12);
  CHECK(g.edges().size() == 24);
  CHECK_FALSE(g.degenerate());
  CHECK(g.connected());
  for (int v = 0; v < 12; ++v) CHECK(g.degree(v) == 4);
  CHECK(g.adjacent(0, 1));       // rim
  CHECK(g.adjacent(0, 6));       // inspoke A_0 - B_0
  CHECK(g.adjacent(1, 6));       // outspoke A_{0+1} - B_0
  CHECK(g.adjacent(6, 8));       // hub B_0 - B_2
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.edge_kinds(0, 1) == static_cast<unsigned>(EdgeKind::Rim));
  CHECK_THROWS_AS(g.edge_kinds(0, 2), ParameterError);

  // The octahedron: R_3(1,1) is 4-regular on 6 vertices with 12 edges.
  const RWGraph oct({3, 1, 1});
  CHECK(oct.edges().size() == 12);
  CHECK(automorphism_group(oct).group.order() == 48);

  // Degenerate parameters: hub edges collapse, not 4-regular.
  const RWGraph deg({8, 2, 4});
  CHECK(deg.degenerate());
  CHECK(deg.edges().size() < 32);
  CHECK(deg.export_json().find("\"degenerate\":true") != std::string::npos);

  // Exports are byte-stable.
  CHECK(g.export_dot() == RWGraph({6, 1, 2}).export_dot());
  CHECK(g.export_json() == RWGraph({6, 1, 2}).export_json());
}

TEST_CASE("automorphism group orders match independently frozen values") {
  const std::vector<std::pair<RoseWindowParams, std::uint64_t>> expected{
      {{6, 1, 2}, 48},   {{8, 2, 3}, 384},   {{10, 3, 4}, 320},
      {{12, 4, 5}, 768}, {{16, 8, 3}, 128},  {{20, 10, 3}, 160},
      {{7, 2, 2}, 14},    {{9, 2, 1}, 9216},  {{12, 5, 10}, 96},
  };
  for (const auto& [params, order] : expected) {
    CAPTURE(to_string(params));
    CHECK(automorphism_group(RWGraph(params)).group.order() == order);
  }
}

TEST_CASE("distinguished-generator closures") {
  // Where the closure is the full group, the two methods agree.
  for (auto params : {RoseWindowParams{16, 8, 3}, RoseWindowParams{10, 3, 4}}) {
    const RWGraph g(params);
    CHECK(automorphism_group(g, AutMethod::Distinguished).group.order() ==
          automorphism_group(g, AutMethod::Generic).group.order());
  }
  // R_8(2,3) (the 4-cube) is the known exception: proper subgroup.
  const RWGraph q4({8, 2, 3});
  CHECK(automorphism_group(q4, AutMethod::Distinguished).group.order() == 128);
  CHECK(automorphism_group(q4, AutMethod::Generic).group.order() == 384);
  // No distinguished form applies to R_7(2,2).
  CHECK_THROWS_AS(automorphism_group(RWGraph({7, 2, 2}), AutMethod::Distinguished),
                  ApplicabilityError);
  CHECK(aut_method_name(AutMethod::Generic) == "generic");
  CHECK(aut_method_name(AutMethod::Distinguished) == "paper");
}

TEST_CASE("edge orbits") {
  const RWGraph g({20, 10, 3});
  const auto aut = automorphism_group(g).group;
  const auto orbits = edge_orbits(g, aut);
  CHECK(orbits.count == 2);
  CHECK(orbits.rim_hub_merged);

  const RWGraph h({9, 2, 1});
  CHECK(edge_orbits(h, automorphism_group(h).group).count == 1);
}

TEST_CASE("omega completion equals its closed form at both signs") {
  for (int d : {2, -2}) {
    CAPTURE(d);
    CHECK(perm_omega_f4(24, d) == omega_f4_closed_form(24, d));
  }
}

TEST_CASE("constructive witnesses") {
  // F1: <rho, delta> on R_12(2,1).
  const auto w = constructive_witness({12, 2, 1});
  REQUIRE(w.has_value());
  CHECK(w->kind == WitnessCase::F1Plus);
  CHECK(w->order == 24);
  CHECK(is_regular_action(PermutationGroup(w->generators, 24)));

  // No constructive case applies to R_7(2,2).
  CHECK_FALSE(constructive_witness({7, 2, 2}).has_value());

  // The 2m(m-2, m-1) recipe with Sigma maps needs m an odd multiple of 3.
  const auto w15 = regular_subgroup_generators(WitnessCase::F3Mult3, {30, 13, 14});
  CHECK(w15.order == 60);
  CHECK(is_regular_action(PermutationGroup(w15.generators, 60)));
  CHECK_THROWS_AS(regular_subgroup_generators(WitnessCase::F3Mult3, {12, 4, 5}),
                  ApplicabilityError);

  // JSON round trip.
  const auto back = witness_from_json(witness_to_json(*w));
  CHECK(back.kind == w->kind);
  CHECK(back.params == w->params);
  CHECK(back.order == w->order);
  CHECK(back.generators == w->generators);
  CHECK(back.relations_checked == w->relations_checked);
}

TEST_CASE("regular subgroup search") {
  const auto aut = automorphism_group(RWGraph({10, 3, 4})).group;
  SearchStats stats;
  CHECK_FALSE(find_regular_subgroup(aut, &stats).has_value());
  CHECK(stats.group_order == 320);

  const auto cay = automorphism_group(RWGraph({16, 8, 3})).group;
  const auto found = find_regular_subgroup(cay);
  REQUIRE(found.has_value());
  CHECK(is_regular_action(schreier_sims(*found, 32)));
}

TEST_CASE("cayley pipeline verdicts and seed independence") {
  CHECK(is_cayley_search({5, 1, 4}, no_cache()).is_cayley);
  CHECK_FALSE(is_cayley_search({10, 3, 4}, no_cache()).is_cayley);
  CHECK_FALSE(is_cayley_search({7, 2, 2}, no_cache()).stats.group_order == 0);
  CHECK(is_cayley_search({7, 2, 2}, no_cache()).stats.transitivity_shortcut);
  CHECK_THROWS_AS(is_cayley_search({8, 2, 4}, no_cache()), ApplicabilityError);

  for (unsigned seed : {1u, 2u, 3u}) {
    CayleyOptions o = no_cache();
    o.shuffle_seed = seed;
    CHECK(is_cayley_search({16, 8, 3}, o).is_cayley);
    CHECK_FALSE(is_cayley_search({10, 3, 4}, o).is_cayley);
  }
}

TEST_CASE("witness cache round trip") {
  namespace fs = std::filesystem;
  const fs::path dir =
      fs::temp_directory_path() / ("rw-unit-cache-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  ::setenv("RW_CACHE_DIR", dir.c_str(), 1);

  CayleyOptions with_cache; // use_cache = true
  const auto first = is_cayley_search({16, 8, 3}, with_cache);
  CHECK(first.is_cayley);
  CHECK_FALSE(first.stats.cache_hit);
  const auto second = is_cayley_search({16, 8, 3}, with_cache);
  CHECK(second.is_cayley);
  CHECK(second.stats.cache_hit);
  REQUIRE(second.witness.has_value());
  CHECK(second.witness->order == 32);
  CHECK(is_regular_action(PermutationGroup(second.witness->generators, 32)));

  // Flip-equivalent parameters share the cache entry; the witness is
  // transported to the requested labelling.
  const auto flipped = is_cayley_search({16, 8, 13}, with_cache);
  CHECK(flipped.stats.cache_hit);
  REQUIRE(flipped.witness.has_value());
  CHECK(flipped.witness->params == RoseWindowParams{16, 8, 13});
  CHECK(is_regular_action(PermutationGroup(flipped.witness->generators, 32)));

  // Negative verdicts are cached too.
  const auto neg1 = is_cayley_search({10, 3, 4}, with_cache);
  CHECK_FALSE(neg1.stats.cache_hit);
  const auto neg2 = is_cayley_search({10, 3, 4}, with_cache);
  CHECK_FALSE(neg2.is_cayley);
  CHECK(neg2.stats.cache_hit);

  fs::remove_all(dir);
  ::unsetenv("RW_CACHE_DIR");
}

TEST_CASE("small-instance decider agrees with the pipeline") {
  for (int n = 3; n <= 6; ++n)
    for (int a = 1; a < n; ++a)
      for (int r = 1; r < n; ++r) {
        const RoseWindowParams p{n, a, r};
        if (is_degenerate(p)) continue;
        CAPTURE(to_string(p));
        CHECK(small_instance_is_cayley(p) == is_cayley_search(p, no_cache()).is_cayley);
      }
}

TEST_CASE("classification: families and verdicts") {
  const auto c1 = classify({20, 10, 3});
  CHECK(c1.vt_theorem);
  CHECK_FALSE(c1.cayley_theorem);
  REQUIRE(c1.f2_sign.has_value());
  CHECK(*c1.f2_sign == -1);
  REQUIRE(c1.families.size() == 1);
  CHECK(c1.families[0].family == Family::F2);

  const auto c2 = classify({7, 2, 2});
  CHECK_FALSE(c2.vt_theorem);
  CHECK(c2.families.empty());

  // R_8(2,3) lies in three families at once.
  const auto c3 = classify({8, 2, 3});
  CHECK(c3.families.size() == 3);
  CHECK(c3.vt_theorem);
  CHECK(c3.et_theorem);
  CHECK(c3.cayley_theorem);

  const auto c4 = classify_with_search({36, 11, 28}, no_cache());
  CHECK(c4.cayley_theorem);
  REQUIRE(c4.cayley_search.has_value());
  CHECK(*c4.cayley_search);
  CHECK(c4.witness.has_value());
  CHECK(c4.aut_order == 288);
  CHECK_FALSE(c4.disagreement());

  // Degenerate parameters get theorem fields only.
  const auto c5 = classify_with_search({8, 2, 4}, no_cache());
  CHECK(c5.degenerate);
  CHECK_FALSE(c5.aut_order.has_value());
  CHECK_FALSE(c5.cayley_search.has_value());

  // JSON form is byte-stable.
  CHECK(classification_to_json(c1) == classification_to_json(classify({20, 10, 3})));
  CHECK(classification_to_json(c1).find("\"family\":\"F2\"") != std::string::npos);
}

TEST_CASE("survey determinism across thread counts") {
  std::ostringstream serial, parallel;
  const auto rs = run_survey(10, serial, 1);
  const auto rp = run_survey(10, parallel, 4);
  CHECK(serial.str() == parallel.str());
  CHECK(rs.records == rp.records);
  CHECK(rs.disagreements == 0);
  CHECK(rs.capacity_errors == 0);
  CHECK_THROWS_AS(survey_representatives(2), ParameterError);
}

TEST_CASE("configuration") {
  CHECK(std::string(version()) == "0.1.0");
  CHECK(enum_cap() > 0);
  CHECK_FALSE(cache_dir().empty());
}
