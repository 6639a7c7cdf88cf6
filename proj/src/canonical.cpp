#include "cwb/canonical.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

namespace cwb {

namespace {

struct Ctx {
  int n = 0;
  std::vector<int64_t> vcolor;                    // dense initial colors
  std::vector<std::vector<std::pair<int, int64_t>>> out, in;  // (nbr, ecolor)
  std::vector<uint64_t> best;
  bool have_best = false;
};

// one pass of color refinement; colors are dense ints
std::vector<int> refine(const Ctx& ctx, std::vector<int> color) {
  int n = ctx.n;
  while (true) {
    // signature: (color, sorted out-(ecolor,nbrcolor), sorted in-...)
    std::vector<std::pair<std::vector<int64_t>, int>> sigs(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int64_t> sig;
      sig.push_back(color[v]);
      std::vector<std::pair<int64_t, int64_t>> outs, ins;
      outs.reserve(ctx.out[v].size());
      for (auto& [w, c] : ctx.out[v]) outs.push_back({c, color[w]});
      std::sort(outs.begin(), outs.end());
      sig.push_back(-1);
      for (auto& [c, wc] : outs) {
        sig.push_back(c);
        sig.push_back(wc);
      }
      ins.reserve(ctx.in[v].size());
      for (auto& [w, c] : ctx.in[v]) ins.push_back({c, color[w]});
      std::sort(ins.begin(), ins.end());
      sig.push_back(-2);
      for (auto& [c, wc] : ins) {
        sig.push_back(c);
        sig.push_back(wc);
      }
      sigs[v] = {std::move(sig), v};
    }
    std::vector<std::pair<std::vector<int64_t>, int>> sorted = sigs;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> next(n);
    int classes = 0;
    for (int t = 0; t < n; ++t) {
      if (t > 0 && sorted[t].first != sorted[t - 1].first) ++classes;
      next[sorted[t].second] = classes;
    }
    bool same = true;
    // stable iff the partition size didn't grow
    int old_classes = 0;
    {
      std::vector<int> seen;
      for (int v = 0; v < n; ++v) seen.push_back(color[v]);
      std::sort(seen.begin(), seen.end());
      seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
      old_classes = static_cast<int>(seen.size());
    }
    if (classes + 1 == old_classes) same = true; else same = false;
    color = std::move(next);
    if (same) return color;
  }
}

std::vector<uint64_t> certificate_for(const Ctx& ctx,
                                      const std::vector<int>& order) {
  // order[v] = rank of vertex v
  std::vector<uint64_t> cert;
  int n = ctx.n;
  cert.push_back(static_cast<uint64_t>(n));
  std::vector<int> by_rank(n);
  for (int v = 0; v < n; ++v) by_rank[order[v]] = v;
  for (int r = 0; r < n; ++r)
    cert.push_back(static_cast<uint64_t>(ctx.vcolor[by_rank[r]]));
  std::vector<std::array<uint64_t, 3>> arcs;
  for (int v = 0; v < n; ++v)
    for (auto& [w, c] : ctx.out[v])
      arcs.push_back({static_cast<uint64_t>(order[v]),
                      static_cast<uint64_t>(order[w]),
                      static_cast<uint64_t>(c)});
  std::sort(arcs.begin(), arcs.end());
  for (auto& a : arcs) {
    cert.push_back(a[0]);
    cert.push_back(a[1]);
    cert.push_back(a[2]);
  }
  return cert;
}

void search(Ctx& ctx, std::vector<int> color) {
  color = refine(ctx, color);
  int n = ctx.n;
  // find the first non-singleton class (by color value)
  std::vector<std::vector<int>> cells;
  {
    int classes = 0;
    for (int v = 0; v < n; ++v) classes = std::max(classes, color[v] + 1);
    cells.assign(classes, {});
    for (int v = 0; v < n; ++v) cells[color[v]].push_back(v);
  }
  int target = -1;
  for (size_t c = 0; c < cells.size(); ++c)
    if (cells[c].size() > 1) {
      target = static_cast<int>(c);
      break;
    }
  if (target < 0) {
    // discrete: color[v] is a full ordering
    auto cert = certificate_for(ctx, color);
    if (!ctx.have_best || cert < ctx.best) {
      ctx.best = std::move(cert);
      ctx.have_best = true;
    }
    return;
  }
  for (int v : cells[target]) {
    std::vector<int> next = color;
    // individualize v: split it below its cell
    for (int w = 0; w < n; ++w)
      if (next[w] > next[v] || (next[w] == next[v] && w != v)) ++next[w];
    search(ctx, next);
  }
}

}  // namespace

std::vector<uint64_t> canonical_certificate(const ColoredGraph& g) {
  Ctx ctx;
  ctx.n = static_cast<int>(g.vertex_colors.size());
  ctx.out.assign(ctx.n, {});
  ctx.in.assign(ctx.n, {});
  for (const auto& e : g.edges) {
    if (e.u < 0 || e.u >= ctx.n || e.v < 0 || e.v >= ctx.n)
      throw std::invalid_argument("edge endpoint out of range");
    ctx.out[e.u].push_back({e.v, e.color});
    ctx.in[e.v].push_back({e.u, e.color});
  }
  // compress initial colors to dense ranks, but keep the raw values in the
  // certificate so labels are comparable across graphs
  ctx.vcolor = g.vertex_colors;
  std::vector<int64_t> distinct = g.vertex_colors;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()),
                 distinct.end());
  std::vector<int> init(ctx.n);
  for (int v = 0; v < ctx.n; ++v)
    init[v] = static_cast<int>(
        std::lower_bound(distinct.begin(), distinct.end(),
                         g.vertex_colors[v]) -
        distinct.begin());
  if (ctx.n == 0) return {0};
  search(ctx, init);
  return ctx.best;
}

}  // namespace cwb
