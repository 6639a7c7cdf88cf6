#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <string>
#include <vector>

#include "cwb/pd.hpp"

using namespace cwb;

namespace {

using Poly = std::vector<long long>;

// relabel every arc id through a cyclic shift; the result is the same
// diagram with a different arc 0
LinkDiagram shift_arcs(const LinkDiagram& d, int shift) {
  int n = arc_count(d);
  LinkDiagram out = d;
  for (auto& c : out.crossings)
    for (int& a : c.arcs) a = (a + shift) % n;
  return out;
}

}  // namespace

TEST_CASE("builtin diagrams validate with the expected shapes") {
  struct Row {
    const char* name;
    int crossings, components;
  };
  const Row rows[] = {
      {"unknot", 0, 1},    {"trefoil-r", 3, 1}, {"trefoil-l", 3, 1},
      {"figure8", 4, 1},   {"hopf-p", 2, 2},    {"hopf-n", 2, 2},
      {"borromean", 6, 3}, {"granny", 6, 1},    {"square", 6, 1},
  };
  for (const Row& r : rows) {
    CAPTURE(r.name);
    LinkDiagram d = builtin_link(r.name);
    CHECK(validate_pd(d).ok);
    CHECK(static_cast<int>(d.crossings.size()) == r.crossings);
    CHECK(component_count(d) == r.components);
    CHECK(singular_count(d) == 0);
  }
  CHECK(builtin_names().size() == 9);
  CHECK_THROWS_AS(builtin_link("nosuch"), std::invalid_argument);
}

TEST_CASE("validation rejects malformed diagrams") {
  LinkDiagram d = builtin_link("trefoil-r");
  d.crossings[0].arcs[0] = d.crossings[0].arcs[2];
  PdReport rep = validate_pd(d);
  CHECK(!rep.ok);
  CHECK(!rep.problems.empty());

  LinkDiagram s = builtin_link("trefoil-l");
  s.crossings[0].singular = true;  // sign is -1: wrong stored form
  CHECK(!validate_pd(s).ok);

  LinkDiagram f;
  f.free_loops = -1;
  CHECK(!validate_pd(f).ok);
}

TEST_CASE("determinant-free polynomial oracles") {
  const std::map<std::string, Poly> want = {
      {"unknot", {1}},         {"trefoil-r", {1, 0, 1}},
      {"trefoil-l", {1, 0, 1}}, {"figure8", {1, 0, -1}},
      {"hopf-p", {0, 1}},       {"hopf-n", {0, -1}},
      {"granny", {1, 0, 2, 0, 1}}, {"square", {1, 0, 2, 0, 1}},
  };
  for (const auto& [name, poly] : want) {
    CAPTURE(name);
    CHECK(conway_polynomial(builtin_link(name)) == poly);
  }

  // multiplicativity under the join of two knots
  LinkDiagram sum = connected_sum(builtin_link("trefoil-r"),
                                  builtin_link("figure8"));
  CHECK(validate_pd(sum).ok);
  CHECK(component_count(sum) == 1);
  CHECK(conway_polynomial(sum) == Poly{1, 0, 0, 0, -1});

  // joining with an unknot changes nothing
  LinkDiagram triv = connected_sum(builtin_link("trefoil-r"),
                                   builtin_link("unknot"));
  CHECK(conway_polynomial(triv) == Poly{1, 0, 1});

  CHECK_THROWS_AS(
      connected_sum(builtin_link("hopf-p"), builtin_link("unknot")),
      std::invalid_argument);
}

TEST_CASE("the exact recursion refuses oversized diagrams") {
  BraidWord big = make_braid(2, std::vector<int>(27, 1));
  LinkDiagram d = braid_closure(big);
  CHECK(validate_pd(d).ok);
  CHECK_THROWS_AS(conway_polynomial(d), std::domain_error);
}

TEST_CASE("both degree-2 coefficient routes agree and ignore the basepoint") {
  const std::map<std::string, long long> want = {
      {"unknot", 0}, {"trefoil-r", 1}, {"trefoil-l", 1},
      {"figure8", -1}, {"granny", 2},  {"square", 2},
  };
  bool some_variant_differs = false;
  for (const auto& [name, a2] : want) {
    CAPTURE(name);
    LinkDiagram d = builtin_link(name);
    CHECK(a2_skein(d) == a2);
    CHECK(a2_gauss(d) == a2);
    int n = arc_count(d);
    for (int s = 0; s < n; ++s) {
      CHECK(a2_gauss(shift_arcs(d, s)) == a2);
      for (int v = 0; v < 4; ++v)
        if (a2_gauss_from(d, s, v) != a2) some_variant_differs = true;
    }
  }
  // the counting pattern is not arbitrary: other patterns get these wrong
  CHECK(some_variant_differs);

  CHECK_THROWS_AS(a2_gauss(builtin_link("hopf-p")), std::invalid_argument);
}

TEST_CASE("switching and smoothing crossings") {
  LinkDiagram t = builtin_link("trefoil-r");
  for (int i = 0; i < 3; ++i) {
    CAPTURE(i);
    LinkDiagram u = crossing_change(t, i);
    CHECK(validate_pd(u).ok);
    CHECK(conway_polynomial(u) == Poly{1});  // unknotted
    LinkDiagram back = crossing_change(u, i);
    CHECK(back.crossings[i].arcs == t.crossings[i].arcs);
    CHECK(back.crossings[i].sign == t.crossings[i].sign);
  }
  CHECK_THROWS_AS(crossing_change(t, 3), std::invalid_argument);

  LinkDiagram h = smooth_crossing(t, 0);
  CHECK(validate_pd(h).ok);
  CHECK(component_count(h) == 2);
  CHECK(conway_polynomial(h) == Poly{0, 1});  // the positive clasp survives

  LinkDiagram k = smooth_crossing(builtin_link("hopf-p"), 0);
  CHECK(component_count(k) == 1);
  CHECK(conway_polynomial(k) == Poly{1});
}

TEST_CASE("twisted-band grafts: guards and the degree-1 case") {
  LinkDiagram t = builtin_link("trefoil-r");
  CHECK_THROWS_AS(apply_ck_template(t, {0, 1}, 0), std::invalid_argument);
  CHECK_THROWS_AS(apply_ck_template(t, {0, 1, 2}, 1), std::invalid_argument);
  CHECK_THROWS_AS(apply_ck_template(t, {0, 0}, 1), std::invalid_argument);
  CHECK_THROWS_AS(apply_ck_template(t, {0, 99}, 1), std::invalid_argument);

  // a degree-1 graft across a positive crossing is the crossing switch
  for (const char* name : {"trefoil-r", "figure8", "granny"}) {
    CAPTURE(name);
    LinkDiagram d = builtin_link(name);
    for (size_t i = 0; i < d.crossings.size(); ++i) {
      const Crossing& c = d.crossings[i];
      if (c.sign < 0 || c.arcs[0] == c.arcs[3]) continue;
      CAPTURE(i);
      LinkDiagram grafted =
          apply_ck_template(d, {c.arcs[0], c.arcs[3]}, 1);
      CHECK(validate_pd(grafted).ok);
      LinkDiagram switched = crossing_change(d, static_cast<int>(i));
      CHECK(conway_polynomial(grafted) == conway_polynomial(switched));
    }
  }
}

TEST_CASE("alternating sums over switch subsets") {
  LinkDiagram t = builtin_link("trefoil-r");
  CHECK(bracket_sum(t, {}) == 1);
  // one switch site: a2 of the unknotted form minus a2 of the original
  CHECK(bracket_sum(t, {0}) == -1);
  CHECK_THROWS_AS(bracket_sum(t, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(bracket_sum(t, {5}), std::invalid_argument);
}

TEST_CASE("singular crossings and their resolutions") {
  LinkDiagram t = builtin_link("trefoil-r");
  t.crossings[0].singular = true;
  CHECK(validate_pd(t).ok);
  CHECK(singular_count(t) == 1);
  // positive resolution is the trefoil (a2 = 1), switched one the unknot
  CHECK(singular_eval(t) == 1);
  CHECK_THROWS_AS(conway_polynomial(t), std::invalid_argument);
  CHECK_THROWS_AS(a2_gauss(t), std::invalid_argument);
  CHECK_THROWS_AS(crossing_change(t, 0), std::invalid_argument);
  CHECK_THROWS_AS(smooth_crossing(t, 0), std::invalid_argument);

  LinkDiagram plain = builtin_link("unknot");
  CHECK(singular_eval(plain) == 0);
}

TEST_CASE("move-equivalence decisions by degree") {
  LinkDiagram u = builtin_link("unknot");
  LinkDiagram tr = builtin_link("trefoil-r");
  LinkDiagram tl = builtin_link("trefoil-l");
  CHECK(decide_ck_knots(1, u, tr));
  CHECK(decide_ck_knots(2, u, tr));
  CHECK(!decide_ck_knots(3, u, tr));
  CHECK(decide_ck_knots(3, tr, tl));
  CHECK(decide_ck_knots(3, builtin_link("granny"), builtin_link("square")));
  CHECK(!decide_ck_knots(3, builtin_link("figure8"), tr));
  CHECK_THROWS_AS(decide_ck_knots(4, u, tr), std::domain_error);
  CHECK_THROWS_AS(decide_ck_knots(0, u, tr), std::invalid_argument);
  CHECK_THROWS_AS(decide_ck_knots(3, builtin_link("hopf-p"), u),
                  std::invalid_argument);
}
