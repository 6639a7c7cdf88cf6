#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

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

// box whose output faces a leaf: one resolution step splits it in two
ClasperGraph leaf_gadget() {
  ClasperGraph g;
  g.constituents = {disk({1}), disk({2}), box(0b001), Constituent{}};
  g.edges = {{{0, 0}, {2, 1}, 1},
             {{1, 0}, {2, 2}, 0},
             {{2, 0}, {3, 0}, 2}};
  return g;
}

}  // namespace

TEST_CASE("resolving a box against a leaf copies the leaf onto both inputs") {
  ClasperGraph g = leaf_gadget();
  REQUIRE(check_marking(g, {{2, 1}}).empty());

  ZipResult r = zip(g, {{2, 1}});
  CHECK(r.steps == 1);
  CHECK(validate_clasper(r.graph).ok);

  // two components, each a disk-leaf joined to a fresh leaf; the output
  // edge's twists were absorbed into both input edges
  ClasperGraph want;
  want.constituents = {disk({1}), Constituent{}, disk({2}), Constituent{}};
  want.edges = {{{0, 0}, {1, 0}, 3}, {{2, 0}, {3, 0}, 2}};
  CHECK(clasper_certificate(r.graph) == clasper_certificate(want));

  // which input carries the mark makes no difference
  ZipResult r2 = zip(g, {{2, 2}});
  CHECK(r2.steps == 1);
  CHECK(clasper_certificate(r2.graph) == clasper_certificate(r.graph));
}

TEST_CASE("resolving a box against a node cascades and duplicates the branches") {
  ClasperGraph g;
  g.constituents = {disk({1}), disk({2}), node(), disk({3}), disk({4}),
                    box(0b001)};
  g.edges = {{{0, 0}, {5, 1}, 0},
             {{1, 0}, {5, 2}, 0},
             {{5, 0}, {2, 0}, 1},
             {{2, 1}, {3, 0}, 0},
             {{2, 2}, {4, 0}, 0}};
  REQUIRE(validate_clasper(g).ok);

  ZipResult r = zip(g, {{5, 1}});
  // one node move, then one leaf move per descendant box
  CHECK(r.steps == 3);
  CHECK(validate_clasper(r.graph).ok);

  // the branch pair {3},{4} is copied onto both inputs, and the output
  // edge's twist lands on the edges toward {1} and {2}
  ClasperGraph want;
  want.constituents = {node(), disk({1}), disk({3}), disk({4}),
                       node(), disk({2}), disk({3}), disk({4})};
  want.edges = {{{0, 0}, {1, 0}, 1}, {{0, 1}, {2, 0}, 0}, {{0, 2}, {3, 0}, 0},
                {{4, 0}, {5, 0}, 1}, {{4, 1}, {6, 0}, 0}, {{4, 2}, {7, 0}, 0}};
  CHECK(clasper_certificate(r.graph) == clasper_certificate(want));

  ForestClass f = classify_forest(r.graph);
  REQUIRE(f.forest_degree.has_value());
  CHECK(*f.forest_degree == 2);
}

TEST_CASE("an empty marking is the identity") {
  ClasperGraph g = leaf_gadget();
  ZipResult r = zip(g, {});
  CHECK(r.steps == 0);
  CHECK(clasper_certificate(r.graph) == clasper_certificate(g));
}

TEST_CASE("marks are resolved independently of their order") {
  // two disjoint gadgets, one mark each
  ClasperGraph g = leaf_gadget();
  int base = static_cast<int>(g.constituents.size());
  ClasperGraph h = leaf_gadget();
  h.edges[0].half_twists = -1;  // make the copies distinguishable
  for (auto c : h.constituents) g.constituents.push_back(c);
  for (auto e : h.edges) {
    e.a.c += base;
    e.b.c += base;
    g.edges.push_back(e);
  }
  REQUIRE(validate_clasper(g).ok);

  ZipResult ab = zip(g, {{2, 1}, {base + 2, 1}});
  ZipResult ba = zip(g, {{base + 2, 1}, {2, 1}});
  CHECK(ab.steps == 2);
  CHECK(ba.steps == 2);
  CHECK(clasper_certificate(ab.graph) == clasper_certificate(ba.graph));
}

TEST_CASE("invalid markings are refused") {
  ClasperGraph g = leaf_gadget();
  CHECK_THROWS_AS(zip(g, {{2, 0}}), std::domain_error);  // output slot
  CHECK_THROWS_AS(zip(g, {{0, 0}}), std::domain_error);  // not a box

  // a box staring at another box cannot be resolved
  ClasperGraph h;
  h.constituents = {disk({1}), disk({1}), box(0b001), box(0b001),
                    Constituent{}, Constituent{}};
  h.edges = {{{2, 0}, {3, 1}, 0},
             {{2, 1}, {0, 0}, 0},
             {{2, 2}, {4, 0}, 0},
             {{3, 0}, {1, 0}, 0},
             {{3, 2}, {5, 0}, 0}};
  REQUIRE(validate_clasper(h).ok);
  CHECK_THROWS_AS(zip(h, {{2, 1}}), std::domain_error);
}
