#pragma once

#include <cassert>
#include <span>
#include <vector>

#include "cmclab/linalg.hpp"

namespace cmclab {

/// One axis of a tensor-product parameter grid.
///
/// Interval axes carry cells+1 nodes. An offset end shifts the node line half
/// a cell into the interior; this is how polar-type coordinate degeneracies
/// (disk centers, sphere poles) are kept off the grid while the opposite end
/// still lands exactly on the boundary value.
struct GridAxis {
  double a = 0.0;
  double b = 1.0;
  int cells = 128;
  bool periodic = false;
  bool offset_low = false;
  bool offset_high = false;

  int nodes() const { return periodic ? cells : cells + 1; }

  double step() const {
    if (periodic) return (b - a) / cells;
    double denom = cells + (offset_low ? 0.5 : 0.0) + (offset_high ? 0.5 : 0.0);
    return (b - a) / denom;
  }

  double node(int i) const {
    if (periodic) return a + i * step();
    return a + (i + (offset_low ? 0.5 : 0.0)) * step();
  }
};

struct Grid {
  std::vector<GridAxis> axes;

  int dim() const { return static_cast<int>(axes.size()); }

  long node_count() const {
    long n = 1;
    for (const auto& ax : axes) n *= ax.nodes();
    return n;
  }

  long flat_index(std::span<const int> idx) const {
    long f = 0;
    for (int d = 0; d < dim(); ++d) f = f * axes[d].nodes() + idx[d];
    return f;
  }

  void unflatten(long flat, std::span<int> idx) const {
    for (int d = dim() - 1; d >= 0; --d) {
      idx[d] = static_cast<int>(flat % axes[d].nodes());
      flat /= axes[d].nodes();
    }
  }

  ParamVec point(std::span<const int> idx) const {
    ParamVec u(dim());
    for (int d = 0; d < dim(); ++d) u(d) = axes[d].node(idx[d]);
    return u;
  }
};

/// Scalar samples over every node of a Grid, stored flat (row-major over axes).
struct GridScalar {
  const Grid* grid = nullptr;
  std::vector<double> v;

  explicit GridScalar(const Grid& g) : grid(&g), v(g.node_count(), 0.0) {}
  GridScalar() = default;

  double& at(std::span<const int> idx) { return v[grid->flat_index(idx)]; }
  double at(std::span<const int> idx) const { return v[grid->flat_index(idx)]; }
};

/// Visit every node: f(flat_index, multi_index, u).
template <class F>
void for_each_node(const Grid& g, F&& f) {
  const int n = g.dim();
  std::vector<int> idx(n, 0);
  const long total = g.node_count();
  for (long flat = 0; flat < total; ++flat) {
    f(flat, std::span<const int>(idx), g.point(idx));
    for (int d = n - 1; d >= 0; --d) {
      if (++idx[d] < g.axes[d].nodes()) break;
      idx[d] = 0;
    }
  }
}

}  // namespace cmclab
