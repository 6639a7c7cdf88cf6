#pragma once

#include <array>
#include <string>
#include <vector>

#include "cwb/braid.hpp"

namespace cwb {

// One crossing of an oriented link diagram.  `arcs` lists the four arc ids
// counterclockwise, starting at the incoming strand that passes underneath;
// the under strand runs arcs[0] -> arcs[2].  sign +1 means the over strand
// runs arcs[3] -> arcs[1], sign -1 means arcs[1] -> arcs[3].  A singular
// crossing is a marked double point whose two resolutions are the crossing
// itself with sign +1 and its switched form.
struct Crossing {
  std::array<int, 4> arcs{};
  int sign = 1;
  bool singular = false;
};

struct LinkDiagram {
  std::vector<Crossing> crossings;
  int free_loops = 0;  // unknotted circles not meeting any crossing
};

struct PdReport {
  bool ok = true;
  std::vector<std::string> problems;
};
PdReport validate_pd(const LinkDiagram& d);

int arc_count(const LinkDiagram& d);
int component_count(const LinkDiagram& d);
int singular_count(const LinkDiagram& d);

// Closure of a braid, strands oriented in parallel.  Arcs 0..strands-1 are
// the closure arcs of positions 1..strands.
LinkDiagram braid_closure(const BraidWord& b);

LinkDiagram builtin_link(const std::string& name);
std::vector<std::string> builtin_names();

LinkDiagram crossing_change(const LinkDiagram& d, int crossing);
// oriented smoothing; may create free loops
LinkDiagram smooth_crossing(const LinkDiagram& d, int crossing);
// join two knots along their arc 0; both must be one-component
LinkDiagram connected_sum(const LinkDiagram& a, const LinkDiagram& b);

// Conway polynomial coefficients by power of z, exact skein recursion.
// Exponential in crossing count; guarded against large inputs.
std::vector<long long> conway_polynomial(const LinkDiagram& d);
long long a2_skein(const LinkDiagram& d);

// z^2 coefficient by counting interleaved passage pairs along the Gauss
// sequence; knots only, quadratic time
long long a2_gauss(const LinkDiagram& d);
// counting variant with explicit basepoint, used by calibration tests
long long a2_gauss_from(const LinkDiagram& d, int start_arc, int variant);

// Graft a twisted-band region over the given arcs: the degree-k surgery
// template on k+1 pairwise distinct sites.
LinkDiagram apply_ck_template(const LinkDiagram& d, const std::vector<int>& sites,
                              int k);

// sum over subsets S' of the switch sites of (-1)^(|S|-|S'|) a2(switched)
long long bracket_sum(const LinkDiagram& d, const std::vector<int>& switch_sites);

// alternating-sign sum of a2 over the 2^m resolutions of the m singular
// crossings
long long singular_eval(const LinkDiagram& d);

// equivalence of knots under the degree-k move family; k >= 4 is out of
// scope and throws
bool decide_ck_knots(int k, const LinkDiagram& a, const LinkDiagram& b);

}  // namespace cwb
