#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cwb/diagram.hpp"

using namespace cwb;

namespace {

UTD chords_on(SkelKind k, int legs, std::vector<int> mate) {
  UTD d;
  d.skel = {k};
  d.legs_per_comp = {legs};
  d.mate = std::move(mate);
  return d;
}

// single leg feeding an internal vertex whose other two branches close up
UTD tadpole() {
  UTD d;
  d.skel = {SkelKind::Circle};
  d.legs_per_comp = {1};
  d.internal = 1;
  d.mate = {1, 0, 3, 2};
  return d;
}

// three legs joined to one internal vertex
UTD mercedes() {
  UTD d;
  d.skel = {SkelKind::Circle};
  d.legs_per_comp = {3};
  d.internal = 1;
  d.mate = {3, 4, 5, 0, 1, 2};
  return d;
}

// two internal vertices joined by one internal edge, four legs
UTD h_diagram() {
  UTD d;
  d.skel = {SkelKind::Circle};
  d.legs_per_comp = {4};
  d.internal = 2;
  d.mate = {4, 5, 8, 9, 0, 1, 7, 6, 2, 3};
  return d;
}

}  // namespace

TEST_CASE("validity and strictness") {
  CHECK(utd_valid(tadpole()));
  CHECK(utd_strict(tadpole()));
  CHECK(utd_valid(mercedes()));
  CHECK(utd_valid(h_diagram()));
  CHECK(h_diagram().degree() == 3);

  std::string why;
  UTD bad = chords_on(SkelKind::Circle, 2, {0, 1});  // fixed points
  CHECK(!utd_valid(bad, &why));
  CHECK(!why.empty());
  UTD short_mate = chords_on(SkelKind::Circle, 2, {1});
  CHECK(!utd_valid(short_mate));

  // a closed dashed component never touching the skeleton is not strict
  UTD theta;
  theta.skel = {SkelKind::Circle};
  theta.legs_per_comp = {0};
  theta.internal = 2;
  theta.mate = {3, 4, 5, 0, 1, 2};
  CHECK(utd_valid(theta));
  CHECK(!utd_strict(theta));
}

TEST_CASE("isolated chords, with and without wrap-around") {
  CHECK(has_isolated_chord(chords_on(SkelKind::Circle, 2, {1, 0})));
  CHECK(!has_isolated_chord(chords_on(SkelKind::Circle, 4, {2, 3, 0, 1})));
  CHECK(has_isolated_chord(chords_on(SkelKind::Circle, 4, {1, 0, 3, 2})));
  // first and last leg are adjacent on a circle but not on an interval
  CHECK(has_isolated_chord(chords_on(SkelKind::Circle, 4, {3, 2, 1, 0})));
  UTD nested = chords_on(SkelKind::Interval, 4, {3, 2, 1, 0});
  CHECK(has_isolated_chord(nested));  // the inner chord is still adjacent
  CHECK(!has_isolated_chord(chords_on(SkelKind::Interval, 4, {2, 3, 0, 1})));
  CHECK(!has_isolated_chord(tadpole()));
}

TEST_CASE("certificates see rotations of a circle but not of an interval") {
  UTD p1 = chords_on(SkelKind::Circle, 4, {1, 0, 3, 2});
  UTD p2 = chords_on(SkelKind::Circle, 4, {3, 2, 1, 0});  // rotated by one
  CHECK(utd_certificate(p1) == utd_certificate(p2));
  UTD x = chords_on(SkelKind::Circle, 4, {2, 3, 0, 1});
  CHECK(utd_certificate(p1) != utd_certificate(x));

  UTD i1 = chords_on(SkelKind::Interval, 4, {1, 0, 3, 2});
  UTD i2 = chords_on(SkelKind::Interval, 4, {3, 2, 1, 0});
  CHECK(utd_certificate(i1) != utd_certificate(i2));
}

TEST_CASE("orientation flips") {
  UTD m = mercedes();
  UTD f = orientation_flip(m, 0);
  CHECK(utd_valid(f));
  // reversing a vertex is not an isomorphism on an oriented circle...
  CHECK(utd_certificate(f) != utd_certificate(m));
  // ...but flipping twice is the identity
  CHECK(orientation_flip(f, 0).mate == m.mate);
  // the tadpole's loop makes its flip literally equal
  CHECK(orientation_flip(tadpole(), 0).mate == tadpole().mate);
}

TEST_CASE("resolving a leg edge of the three-pronged vertex") {
  auto [t, u] = stu_resolutions(mercedes(), 0);
  CHECK(utd_valid(t));
  CHECK(utd_valid(u));
  CHECK(t.internal == 0);
  CHECK(u.internal == 0);
  CHECK(t.degree() == 2);
  CHECK(u.degree() == 2);
  // one resolution crosses, the other nests
  CHECK(utd_certificate(t) != utd_certificate(u));
  std::vector<uint64_t> xc =
      utd_certificate(chords_on(SkelKind::Circle, 4, {2, 3, 0, 1}));
  std::vector<uint64_t> pc =
      utd_certificate(chords_on(SkelKind::Circle, 4, {1, 0, 3, 2}));
  bool tx = utd_certificate(t) == xc && utd_certificate(u) == pc;
  bool tp = utd_certificate(t) == pc && utd_certificate(u) == xc;
  CHECK((tx || tp));

  // both branches of a loop give the same resolution
  auto [lt, lu] = stu_resolutions(tadpole(), 0);
  CHECK(lt.mate == lu.mate);

  CHECK_THROWS_AS(
      stu_resolutions(chords_on(SkelKind::Circle, 2, {1, 0}), 0),
      std::invalid_argument);
}

TEST_CASE("rewiring an internal edge") {
  UTD d = h_diagram();
  auto [h, x] = ihx_terms(d, 6);
  CHECK(utd_valid(h));
  CHECK(utd_valid(x));
  CHECK(h.internal == 2);
  CHECK(x.internal == 2);
  CHECK(h.degree() == 3);
  CHECK(utd_certificate(h) != utd_certificate(d));

  CHECK_THROWS_AS(ihx_terms(d, 0), std::invalid_argument);
  CHECK_THROWS_AS(ihx_terms(tadpole(), 2), std::invalid_argument);  // loop
}

TEST_CASE("enumeration at low degree") {
  DiagramSet k1 = enumerate_diagrams({SkelKind::Circle}, 1, false);
  CHECK(k1.reps.size() == 2);  // one chord, one looped vertex
  DiagramSet k1c = enumerate_diagrams({SkelKind::Circle}, 1, true);
  CHECK(k1c.reps.size() == 1);
  DiagramSet k2c = enumerate_diagrams({SkelKind::Circle}, 2, true);
  CHECK(k2c.reps.size() == 2);  // crossing and parallel
  CHECK(enumerate_diagrams({SkelKind::Circle}, 0, false).reps.size() == 1);

  CHECK(enumerate_one_internal({SkelKind::Circle}, 2).size() == 2);

  for (int k = 1; k <= 3; ++k) {
    DiagramSet ds = enumerate_diagrams({SkelKind::Circle}, k, false);
    CHECK(ds.index.size() == ds.reps.size());
    for (const UTD& d : ds.reps) {
      CHECK(utd_valid(d));
      CHECK(utd_strict(d));
      CHECK(d.degree() == k);
    }
    // the chord diagrams are a subset of the full list
    DiagramSet dc = enumerate_diagrams({SkelKind::Circle}, k, true);
    for (const UTD& d : dc.reps) {
      CHECK(d.internal == 0);
      CHECK(ds.index.count(utd_certificate(d)) == 1);
    }
  }
}

TEST_CASE("dimensions agree across presentations") {
  const int want[4] = {1, 0, 1, 1};
  for (int k = 0; k <= 3; ++k) {
    int du = space_dimension({SkelKind::Circle}, k, Presentation::Unitrivalent);
    int dc = space_dimension({SkelKind::Circle}, k, Presentation::ChordOnly);
    CHECK(du == want[k]);
    CHECK(dc == want[k]);
  }
  for (int k = 0; k <= 2; ++k) {
    int iu =
        space_dimension({SkelKind::Interval}, k, Presentation::Unitrivalent);
    int ic = space_dimension({SkelKind::Interval}, k, Presentation::ChordOnly);
    CHECK(iu == want[k]);
    CHECK(ic == want[k]);
  }
}
