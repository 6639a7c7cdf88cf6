#include <map>
#include <stdexcept>

#include "cwb/diagram.hpp"

namespace cwb {

namespace {

int idx_of(const DiagramSet& ds, const UTD& d) {
  auto it = ds.index.find(utd_certificate(d));
  if (it == ds.index.end())
    throw std::logic_error("relation image missing from diagram basis");
  return it->second;
}

void add_term(std::map<int, Rational>& row, int idx, int coef) {
  auto [it, fresh] = row.emplace(idx, coef);
  if (!fresh) {
    it->second += coef;
    if (it->second == 0) row.erase(it);
  }
}

void push(std::vector<SparseRow>& rows, const std::map<int, Rational>& m) {
  if (!m.empty()) rows.emplace_back(m.begin(), m.end());
}

}  // namespace

std::vector<SparseRow> relation_rows(const DiagramSet& ds, Presentation p,
                                     const std::vector<SkelKind>& skel,
                                     int degree) {
  std::vector<SparseRow> rows;

  // isolated chords vanish, in either presentation
  for (size_t i = 0; i < ds.reps.size(); ++i)
    if (has_isolated_chord(ds.reps[i]))
      rows.push_back({{static_cast<int>(i), Rational(1)}});

  if (p == Presentation::Unitrivalent) {
    for (size_t i = 0; i < ds.reps.size(); ++i) {
      const UTD& d = ds.reps[i];
      int self = static_cast<int>(i);
      int L = d.total_legs();
      // reversing a vertex's cyclic order negates the diagram
      for (int j = 0; j < d.internal; ++j) {
        std::map<int, Rational> row;
        add_term(row, self, 1);
        add_term(row, idx_of(ds, orientation_flip(d, j)), 1);
        push(rows, row);
      }
      // resolving a leg edge
      for (int leg = 0; leg < L; ++leg) {
        if (d.mate[leg] < L) continue;
        auto [t, u] = stu_resolutions(d, leg);
        std::map<int, Rational> row;
        add_term(row, self, 1);
        add_term(row, idx_of(ds, t), -1);
        add_term(row, idx_of(ds, u), 1);
        push(rows, row);
      }
      // rewiring an internal edge
      for (int h = L; h < d.slot_count(); ++h) {
        int m = d.mate[h];
        if (m < L || (h - L) / 3 == (m - L) / 3) continue;
        auto [hh, xx] = ihx_terms(d, h);
        std::map<int, Rational> row;
        add_term(row, self, 1);
        add_term(row, idx_of(ds, hh), -1);
        add_term(row, idx_of(ds, xx), 1);
        push(rows, row);
      }
    }
  } else {
    // chord presentation: resolving the same one-vertex diagram through two
    // different legs must agree
    for (const UTD& e : enumerate_one_internal(skel, degree)) {
      int L = e.total_legs();
      int legs[3] = {e.mate[L], e.mate[L + 1], e.mate[L + 2]};
      for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) {
          auto [ta, ua] = stu_resolutions(e, legs[a]);
          auto [tb, ub] = stu_resolutions(e, legs[b]);
          std::map<int, Rational> row;
          add_term(row, idx_of(ds, ta), 1);
          add_term(row, idx_of(ds, ua), -1);
          add_term(row, idx_of(ds, tb), -1);
          add_term(row, idx_of(ds, ub), 1);
          push(rows, row);
        }
    }
  }
  return rows;
}

int space_dimension(const std::vector<SkelKind>& skel, int degree,
                    Presentation p) {
  DiagramSet ds =
      enumerate_diagrams(skel, degree, p == Presentation::ChordOnly);
  auto rows = relation_rows(ds, p, skel, degree);
  return static_cast<int>(ds.reps.size()) - sparse_rank(std::move(rows));
}

}  // namespace cwb
