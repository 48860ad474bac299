// SPDX-License-Identifier: Apache-2.0
#include "affino/geometry.hpp"

#include "affino/errors.hpp"

#include <algorithm>
#include <string>

namespace affino {

Arrangement::Arrangement(int dimension, std::span<const Hyperplane> hyperplanes)
    : dimension_(dimension) {
  if (dimension < 0) throw InvalidInput("dimension must be nonnegative");
  for (Hyperplane h : hyperplanes) {
    if (h.i == h.j) throw InvalidInput("hyperplane x_j - x_i = g needs i != j");
    if (h.i < 1 || h.i > dimension || h.j < 1 || h.j > dimension) {
      throw InvalidInput("hyperplane coordinate out of range 1.." + std::to_string(dimension));
    }
    if (h.i > h.j) h = {h.j, h.i, -h.g};
    hyperplanes_.push_back(h);
  }
  std::sort(hyperplanes_.begin(), hyperplanes_.end());
  hyperplanes_.erase(std::unique(hyperplanes_.begin(), hyperplanes_.end()), hyperplanes_.end());
}

GainGraph arrangement_to_gain_graph(const Arrangement& arrangement) {
  std::vector<Edge> edges;
  edges.reserve(arrangement.hyperplanes().size());
  for (const Hyperplane& h : arrangement.hyperplanes()) edges.push_back({h.i, h.j, h.g});
  return GainGraph(arrangement.dimension(), edges);
}

Arrangement gain_graph_to_arrangement(const GainGraph& graph) {
  std::vector<Hyperplane> hs;
  hs.reserve(graph.size());
  for (const Edge& e : graph.edges()) {
    if (e.is_loop()) throw InvalidInput("a loop has no hyperplane");
    hs.push_back({e.tail, e.head, e.gain});
  }
  return Arrangement(graph.order(), hs);
}

namespace {

std::uint64_t box_points(std::span<const Gain> sizes, std::uint64_t budget) {
  std::uint64_t points = 1;
  for (Gain s : sizes) {
    if (s <= 0) return 0;
  }
  for (Gain s : sizes) {
    const auto size = static_cast<std::uint64_t>(s);
    if (points >= budget || size >= budget || points > budget / size) return budget;
    points *= size;
  }
  return points;
}

// Odometer over prod_i [lo_i, lo_i + size_i); `proper` sees each full point.
template <typename Proper>
BigInt enumerate_box(std::span<const Gain> lows, std::span<const Gain> sizes,
                     const OracleOptions& options, Proper proper) {
  const std::uint64_t points = box_points(sizes, options.max_points);
  if (points >= options.max_points) {
    throw OracleBudgetExceeded("oracle box has at least " + std::to_string(options.max_points) +
                               " points");
  }
  if (points == 0) return 0;
  std::vector<Gain> x(lows.begin(), lows.end());
  std::uint64_t count = 0;
  for (;;) {
    if (proper(x)) ++count;
    std::size_t k = 0;
    for (; k < x.size(); ++k) {
      if (++x[k] < lows[k] + sizes[k]) break;
      x[k] = lows[k];
    }
    if (k == x.size()) break;
  }
  return BigInt(count);
}

}  // namespace

BigInt oracle_integral(const GainGraph& graph, Gain m, const OracleOptions& options) {
  return oracle_interval(graph, std::vector<Gain>(static_cast<std::size_t>(graph.order()), 0), m,
                         options);
}

BigInt oracle_interval(const GainGraph& graph, std::span<const Gain> bounds, Gain m,
                       const OracleOptions& options) {
  if (bounds.size() != static_cast<std::size_t>(graph.order())) {
    throw InvalidInput("one bound per vertex is required");
  }
  std::vector<Gain> lows;
  std::vector<Gain> sizes;
  for (Gain h : bounds) {
    lows.push_back(h + 1);
    sizes.push_back(m - h);
  }
  const auto& edges = graph.edges();
  return enumerate_box(lows, sizes, options, [&edges](const std::vector<Gain>& x) {
    return std::none_of(edges.begin(), edges.end(), [&x](const Edge& e) {
      return x[e.head - 1] == x[e.tail - 1] + e.gain;
    });
  });
}

BigInt oracle_rooted(const RootedGainGraph& rooted, Gain m, const OracleOptions& options) {
  return oracle_interval(rooted.graph(), rooted.bounds(), m, options);
}

BigInt oracle_modular(const GainGraph& graph, Gain m, const OracleOptions& options) {
  if (m < 1) throw InvalidInput("modulus must be positive");
  const auto n = static_cast<std::size_t>(graph.order());
  const std::vector<Gain> lows(n, 0);
  const std::vector<Gain> sizes(n, m);
  const auto& edges = graph.edges();
  return enumerate_box(lows, sizes, options, [&edges, m](const std::vector<Gain>& x) {
    return std::none_of(edges.begin(), edges.end(), [&x, m](const Edge& e) {
      return floor_mod(x[e.head - 1] - x[e.tail - 1] - e.gain, m) == 0;
    });
  });
}

bool Cone::contains(std::span<const Gain> point) const {
  for (auto [v, bound] : top_bounds) {
    if (point[v - 1] <= bound) return false;
  }
  for (const ConeEquation& eq : equations) {
    if (point[eq.absorbed - 1] != point[eq.top - 1] - eq.offset) return false;
  }
  return true;
}

std::vector<Cone> cone_decomposition(const GainGraph& graph, const FlatOptions& options) {
  return cone_decomposition(rooting(graph), options);
}

std::vector<Cone> cone_decomposition(const RootedGainGraph& rooted, const FlatOptions& options) {
  FlatOptions integral = options;
  integral.modulus = 0;
  const FlatSemilattice lattice = enumerate_flats(rooted.graph(), integral);
  std::vector<Cone> cones;
  cones.reserve(lattice.size());
  for (std::size_t k = 0; k < lattice.size(); ++k) {
    const BalancedFlat& flat = lattice[k];
    const std::vector<Gain> heights = rooted_heights(rooted, flat);
    Cone cone;
    cone.weight = lattice.mobius(k);
    for (std::size_t b = 0; b < flat.blocks.size(); ++b) {
      const Vertex top = flat.top_vertex(b);
      cone.top_bounds.emplace_back(top, heights[b]);
      for (Vertex v : flat.blocks[b]) {
        if (v != top) cone.equations.push_back({v, top, flat.eta(v)});
      }
    }
    cones.push_back(std::move(cone));
  }
  return cones;
}

std::int64_t point_total_weight(std::span<const Cone> cones, std::span<const Gain> point) {
  for (Gain c : point) {
    if (c <= 0) throw InvalidInput("point must lie in the open positive orthant");
  }
  std::int64_t total = 0;
  for (const Cone& cone : cones) {
    if (cone.contains(point)) total += cone.weight;
  }
  return total;
}

}  // namespace affino
