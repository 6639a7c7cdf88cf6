#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "cwb/clasper.hpp"

using namespace cwb;

namespace {

Constituent disk(std::vector<int> strands) {
  Constituent c;
  c.kind = CKind::DiskLeaf;
  c.strands = std::move(strands);
  return c;
}

Constituent node() { return Constituent{.kind = CKind::Node}; }

Constituent box(uint8_t output_mask) {
  Constituent c;
  c.kind = CKind::Box;
  c.output_mask = output_mask;
  return c;
}

// degree-2 strict tree: one node with three disk-leaves
ClasperGraph y_tree() {
  ClasperGraph g;
  g.constituents = {node(), disk({1}), disk({1}), disk({2})};
  g.edges = {{{0, 0}, {1, 0}, 0}, {{0, 1}, {2, 0}, 0}, {{0, 2}, {3, 0}, 0}};
  return g;
}

}  // namespace

TEST_CASE("validation catches the local rules") {
  ClasperGraph g = y_tree();
  CHECK(validate_clasper(g).ok);

  SUBCASE("box output mask must have exactly one slot") {
    g.constituents.push_back(box(0b011));
    CHECK(!validate_clasper(g).ok);
  }
  SUBCASE("disk-leaves need strand data, leaves must not carry it") {
    g.constituents[1].strands.clear();
    CHECK(!validate_clasper(g).ok);
    ClasperGraph h = y_tree();
    h.constituents[1] = Constituent{};  // leaf
    h.constituents[1].strands = {1};
    CHECK(!validate_clasper(h).ok);
  }
  SUBCASE("every slot hosts exactly one edge end") {
    g.edges.pop_back();
    CHECK(!validate_clasper(g).ok);
    ClasperGraph h = y_tree();
    h.edges.push_back({{0, 0}, {1, 0}, 0});
    CHECK(!validate_clasper(h).ok);
  }
}

TEST_CASE("tree classification and degrees") {
  ClasperGraph g = y_tree();
  TreeClass t = classify_component(g, 0);
  CHECK(t.is_tree);
  CHECK(t.is_admissible);
  CHECK(t.is_strict);
  CHECK(t.is_simple);
  REQUIRE(t.degree.has_value());
  CHECK(*t.degree == 2);

  GraphDegrees d = graph_degrees(g);
  CHECK(d.a_degree == 4);
  CHECK(d.s_twice == 4);
  REQUIRE(d.strict_degree.has_value());
  CHECK(*d.strict_degree == 2);

  SUBCASE("multi-strand disk-leaf is strict but not simple") {
    g.constituents[3] = disk({1, 2});
    TreeClass t2 = classify_component(g, 0);
    CHECK(t2.is_strict);
    CHECK(!t2.is_simple);
  }
  SUBCASE("a plain leaf breaks strictness but not admissibility") {
    g.constituents[3] = Constituent{};
    TreeClass t2 = classify_component(g, 0);
    CHECK(t2.is_admissible);
    CHECK(!t2.is_strict);
    CHECK(!t2.degree.has_value());
    GraphDegrees d2 = graph_degrees(g);
    CHECK(d2.a_degree == 3);
    CHECK(d2.s_twice == 2);
    CHECK(!d2.strict_degree.has_value());
  }
  SUBCASE("degree-1 tree is a pair of disk-leaves") {
    ClasperGraph h;
    h.constituents = {disk({1}), disk({1})};
    h.edges = {{{0, 0}, {1, 0}, 1}};
    TreeClass t1 = classify_component(h, 0);
    CHECK(t1.is_strict);
    CHECK(*t1.degree == 1);
  }
  SUBCASE("a cycle is not a tree") {
    ClasperGraph h;
    h.constituents = {node(), node(), disk({1}), disk({1})};
    h.edges = {{{0, 0}, {1, 0}, 0},
               {{0, 1}, {1, 1}, 0},
               {{0, 2}, {2, 0}, 0},
               {{1, 2}, {3, 0}, 0}};
    CHECK(validate_clasper(h).ok);
    CHECK(!classify_component(h, 0).is_tree);
  }
}

TEST_CASE("forest degree is the minimum over strict components") {
  ClasperGraph g = y_tree();
  int base = static_cast<int>(g.constituents.size());
  g.constituents.push_back(disk({2}));
  g.constituents.push_back(disk({3}));
  g.edges.push_back({{base, 0}, {base + 1, 0}, 0});
  ForestClass f = classify_forest(g);
  REQUIRE(f.components.size() == 2);
  REQUIRE(f.forest_degree.has_value());
  CHECK(*f.forest_degree == 1);

  // a leaf--disk pair is admissible but not strict: no forest degree
  g.constituents.push_back(Constituent{});
  g.constituents.push_back(disk({1}));
  g.edges.push_back({{base + 2, 0}, {base + 3, 0}, 0});
  ForestClass f2 = classify_forest(g);
  REQUIRE(f2.components.size() == 3);
  CHECK(!f2.forest_degree.has_value());
}

TEST_CASE("graph degrees reject boxes") {
  ClasperGraph g;
  g.constituents = {disk({1}), box(0b001), disk({1}), disk({2})};
  g.edges = {{{1, 0}, {0, 0}, 0}, {{1, 1}, {2, 0}, 0}, {{1, 2}, {3, 0}, 0}};
  CHECK(validate_clasper(g).ok);
  CHECK_THROWS_AS(graph_degrees(g), std::domain_error);
}

TEST_CASE("box split of a strict tree leaves one good input subtree") {
  // split the first edge of the Y tree with a box; spare input gets a leaf
  ClasperGraph g = y_tree();
  g.constituents.push_back(box(0b001));  // id 4
  g.constituents.push_back(Constituent{});  // id 5, leaf
  g.edges[0] = {{0, 0}, {4, 0}, 0};  // node side faces the output
  g.edges.push_back({{4, 1}, {1, 0}, 0});
  g.edges.push_back({{4, 2}, {5, 0}, 0});
  REQUIRE(validate_clasper(g).ok);

  SubtreeReport rep = find_subtrees(g);
  REQUIRE(rep.output_subtrees.count(4));
  const Subtree& out = rep.output_subtrees.at(4);
  CHECK(out.diskleaf_count == 2);
  CHECK(out.node_count == 1);
  CHECK(out.leaf_count == 0);

  REQUIRE(rep.good_input_subtrees.size() == 1);
  const Subtree& in = rep.good_input_subtrees[0];
  CHECK(in.diskleaf_count == 1);
  CHECK(in.node_count == 0);
  CHECK(e_degree(g, in) == 2);

  // a subtree that is not good is rejected
  Subtree bogus = in;
  bogus.constituents = {5};
  CHECK_THROWS_AS(e_degree(g, bogus), std::domain_error);
}

TEST_CASE("markings are checked against the graph") {
  ClasperGraph g = y_tree();
  g.constituents.push_back(box(0b001));
  g.constituents.push_back(Constituent{});
  g.edges[0] = {{0, 0}, {4, 0}, 0};
  g.edges.push_back({{4, 1}, {1, 0}, 0});
  g.edges.push_back({{4, 2}, {5, 0}, 0});

  CHECK(check_marking(g, {{4, 1}}).empty());
  CHECK(check_marking(g, {{4, 2}}).empty());
  CHECK(!check_marking(g, {{4, 0}}).empty());      // output slot
  CHECK(!check_marking(g, {{0, 1}}).empty());      // not a box
  CHECK(!check_marking(g, {{4, 1}, {4, 2}}).empty());  // double mark
  CHECK(!check_marking(g, {{9, 1}}).empty());      // unknown id

  // a box facing another box has no output subtree and cannot be marked
  ClasperGraph h;
  h.constituents = {disk({1}), disk({1}), box(0b001), box(0b001),
                    Constituent{}, Constituent{}};
  h.edges = {{{2, 0}, {3, 1}, 0},  // output into an input
             {{2, 1}, {0, 0}, 0},
             {{2, 2}, {4, 0}, 0},
             {{3, 0}, {1, 0}, 0},
             {{3, 2}, {5, 0}, 0}};
  REQUIRE(validate_clasper(h).ok);
  CHECK(!check_marking(h, {{2, 1}}).empty());
  CHECK(check_marking(h, {{3, 2}}).empty());
}

TEST_CASE("smoothing the complement fuses single-input boxes") {
  ClasperGraph g;
  g.constituents = {disk({1}), box(0b001), Constituent{}, disk({2})};
  g.edges = {{{0, 0}, {1, 1}, 1},   // disk-leaf into input 1
             {{1, 2}, {2, 0}, 5},   // leaf into input 2
             {{1, 0}, {3, 0}, 2}};  // output to the far disk-leaf
  REQUIRE(validate_clasper(g).ok);

  ClasperSubset discard;
  discard.constituents = {2};
  discard.edges = {1};
  ClasperGraph s = smooth_complement(g, discard);
  CHECK(validate_clasper(s).ok);
  REQUIRE(s.constituents.size() == 2);
  CHECK(s.constituents[0].kind == CKind::DiskLeaf);
  CHECK(s.constituents[1].kind == CKind::DiskLeaf);
  REQUIRE(s.edges.size() == 1);
  CHECK(s.edges[0].half_twists == 3);  // input twist + output twist

  // dropping an edge while keeping its endpoint is rejected
  ClasperSubset bad;
  bad.edges = {1};
  CHECK_THROWS_AS(smooth_complement(g, bad), std::domain_error);
}

TEST_CASE("certificates respect isomorphism, twists, and box outputs") {
  ClasperGraph g = y_tree();

  // relabel constituents: same certificate
  ClasperGraph h;
  h.constituents = {disk({1}), disk({2}), node(), disk({1})};
  h.edges = {{{2, 2}, {3, 0}, 0}, {{2, 0}, {1, 0}, 0}, {{2, 1}, {0, 0}, 0}};
  REQUIRE(validate_clasper(h).ok);
  CHECK(clasper_certificate(g) == clasper_certificate(h));
  CHECK(clasper_label(g) == clasper_label(h));

  // a twist breaks the match
  ClasperGraph t = y_tree();
  t.edges[1].half_twists = 1;
  CHECK(clasper_certificate(g) != clasper_certificate(t));

  // different disk-leaf strand data breaks the match
  ClasperGraph s = y_tree();
  s.constituents[3] = disk({3});
  CHECK(clasper_certificate(g) != clasper_certificate(s));

  // moving a box's output designation onto a different neighbour breaks it
  ClasperGraph b1, b2;
  b1.constituents = {box(0b001), disk({1}), disk({2}), disk({2})};
  b1.edges = {{{0, 0}, {1, 0}, 0}, {{0, 1}, {2, 0}, 0}, {{0, 2}, {3, 0}, 0}};
  b2 = b1;
  b2.constituents[0] = box(0b010);
  REQUIRE(validate_clasper(b1).ok);
  REQUIRE(validate_clasper(b2).ok);
  CHECK(clasper_certificate(b1) != clasper_certificate(b2));
}
