// SPDX-License-Identifier: Apache-2.0
#include "affino/gain_graph.hpp"

#include "affino/errors.hpp"
#include "labeling.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

namespace affino {

Edge canonical(Edge e) noexcept {
  if (e.tail > e.head) {
    std::swap(e.tail, e.head);
    e.gain = -e.gain;
  }
  if (e.is_loop() && e.gain < 0) e.gain = -e.gain;
  return e;
}

Gain floor_mod(Gain value, Gain modulus) noexcept {
  Gain r = value % modulus;
  return r < 0 ? r + modulus : r;
}

GainGraph::GainGraph(int order) : order_(order) {
  if (order < 0) throw InvalidInput("graph order must be nonnegative");
}

GainGraph::GainGraph(int order, std::span<const Edge> edges) : GainGraph(order) {
  std::vector<Edge> raw;
  raw.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.tail < 1 || e.tail > order || e.head < 1 || e.head > order) {
      throw InvalidInput("edge endpoint out of range 1.." + std::to_string(order) + ": (" +
                         std::to_string(e.tail) + ", " + std::to_string(e.head) + ")");
    }
    raw.push_back(canonical(e));
  }
  std::sort(raw.begin(), raw.end());
  for (const Edge& e : raw) {
    if (!edges_.empty() && edges_.back() == e) {
      ++multiplicity_.back();
    } else {
      edges_.push_back(e);
      multiplicity_.push_back(1);
    }
  }
}

GainGraph::GainGraph(int order, std::initializer_list<Edge> edges)
    : GainGraph(order, std::span<const Edge>(edges.begin(), edges.size())) {}

const Edge& GainGraph::edge(EdgeId id) const {
  if (id >= edges_.size()) throw InvalidInput("unknown edge id " + std::to_string(id));
  return edges_[id];
}

int GainGraph::multiplicity(EdgeId id) const {
  if (id >= edges_.size()) throw InvalidInput("unknown edge id " + std::to_string(id));
  return multiplicity_[id];
}

std::optional<EdgeId> GainGraph::find(Edge e) const {
  e = canonical(e);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

bool GainGraph::has_zero_loop() const noexcept {
  return std::any_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.is_loop() && e.gain == 0; });
}

bool GainGraph::all_gains_zero() const noexcept {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.gain == 0; });
}

RootedGainGraph::RootedGainGraph(GainGraph graph, std::vector<Gain> bounds)
    : graph_(std::move(graph)), bounds_(std::move(bounds)) {
  if (bounds_.size() != static_cast<std::size_t>(graph_.order())) {
    throw InvalidInput("rooted graph needs one bound per vertex");
  }
}

namespace detail {

void check_ids(const GainGraph& graph, std::span<const EdgeId> subset) {
  for (EdgeId id : subset) {
    if (id >= graph.size()) throw InvalidInput("unknown edge id " + std::to_string(id));
  }
}

std::optional<Labeling> propagate(int order, const std::vector<Edge>& edges,
                                  std::span<const EdgeId> subset, Gain modulus) {
  const auto n = static_cast<std::size_t>(order);
  auto reduce = [modulus](Gain g) { return modulus == 0 ? g : floor_mod(g, modulus); };

  // adjacency: (neighbor, gain read from this vertex towards neighbor)
  std::vector<std::vector<std::pair<Vertex, Gain>>> adj(n);
  for (EdgeId id : subset) {
    const Edge& e = edges[id];
    if (e.is_loop()) {
      if (reduce(e.gain) != 0) return std::nullopt;
      continue;
    }
    adj[e.tail - 1].emplace_back(e.head, e.gain);
    adj[e.head - 1].emplace_back(e.tail, -e.gain);
  }

  Labeling lab{std::vector<Vertex>(n, 0), std::vector<Gain>(n, 0)};
  std::queue<Vertex> pending;
  for (Vertex start = 1; start <= order; ++start) {
    if (lab.rep[start - 1] != 0) continue;
    lab.rep[start - 1] = start;
    pending.push(start);
    while (!pending.empty()) {
      Vertex v = pending.front();
      pending.pop();
      for (auto [w, g] : adj[v - 1]) {
        Gain expected = reduce(lab.theta[v - 1] + g);
        if (lab.rep[w - 1] == 0) {
          lab.rep[w - 1] = start;
          lab.theta[w - 1] = expected;
          pending.push(w);
        } else if (lab.theta[w - 1] != expected) {
          return std::nullopt;
        }
      }
    }
  }
  return lab;
}

namespace {

template <typename Pick>
void normalize_by(Labeling& lab, Gain init, Pick pick) {
  const std::size_t n = lab.rep.size();
  std::vector<Gain> anchor(n, init);
  for (std::size_t i = 0; i < n; ++i) {
    auto& a = anchor[lab.rep[i] - 1];
    a = pick(a, lab.theta[i]);
  }
  for (std::size_t i = 0; i < n; ++i) lab.theta[i] -= anchor[lab.rep[i] - 1];
}

}  // namespace

void normalize_top_zero(Labeling& lab) {
  normalize_by(lab, std::numeric_limits<Gain>::min(),
               [](Gain a, Gain b) { return std::max(a, b); });
}

void normalize_bottom_zero(Labeling& lab) {
  normalize_by(lab, std::numeric_limits<Gain>::max(),
               [](Gain a, Gain b) { return std::min(a, b); });
}

}  // namespace detail

std::optional<Potential> is_balanced(const GainGraph& graph, std::span<const EdgeId> subset) {
  detail::check_ids(graph, subset);
  auto lab = detail::propagate(graph.order(), graph.edges(), subset, 0);
  if (!lab) return std::nullopt;
  detail::normalize_bottom_zero(*lab);
  return Potential{std::move(lab->theta)};
}

std::vector<std::vector<Vertex>> partition(const GainGraph& graph, std::span<const EdgeId> subset) {
  detail::check_ids(graph, subset);
  // Gains are irrelevant for connectivity; propagate with a gain-free view.
  std::vector<Edge> plain(graph.edges());
  for (Edge& e : plain) e.gain = 0;
  auto lab = detail::propagate(graph.order(), plain, subset, 0);
  std::vector<std::vector<Vertex>> blocks;
  std::vector<int> slot(static_cast<std::size_t>(graph.order()) + 1, -1);
  for (Vertex v = 1; v <= graph.order(); ++v) {
    Vertex r = lab->rep[v - 1];
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[slot[r]].push_back(v);
  }
  return blocks;
}

GainGraph switched(const GainGraph& graph, const SwitchingFunction& eta) {
  if (eta.values.size() != static_cast<std::size_t>(graph.order())) {
    throw InvalidInput("switching function must be defined on every vertex");
  }
  std::vector<Edge> out;
  out.reserve(graph.size());
  for (EdgeId id = 0; id < graph.size(); ++id) {
    Edge e = graph.edges()[id];
    if (!e.is_loop()) e.gain += eta(e.head) - eta(e.tail);
    for (int k = 0; k < graph.multiplicity(id); ++k) out.push_back(e);
  }
  return GainGraph(graph.order(), out);
}

RootedGainGraph switched(const RootedGainGraph& rooted, const SwitchingFunction& eta) {
  GainGraph g = switched(rooted.graph(), eta);
  std::vector<Gain> bounds(rooted.bounds());
  for (std::size_t i = 0; i < bounds.size(); ++i) bounds[i] += eta.values[i];
  return RootedGainGraph(std::move(g), std::move(bounds));
}

SwitchingFunction top_vertex_switching(const GainGraph& graph, std::span<const EdgeId> balanced) {
  detail::check_ids(graph, balanced);
  auto lab = detail::propagate(graph.order(), graph.edges(), balanced, 0);
  if (!lab) throw InvalidInput("top-vertex switching needs a balanced edge set");
  detail::normalize_top_zero(*lab);
  SwitchingFunction eta{std::move(lab->theta)};
  for (Gain& v : eta.values) v = -v;
  return eta;
}

namespace {

struct Contraction {
  GainGraph graph;
  std::vector<Gain> merged_bounds;
};

Contraction contract_impl(const GainGraph& graph, std::span<const Gain> bounds,
                          std::span<const EdgeId> balanced) {
  detail::check_ids(graph, balanced);
  auto lab = detail::propagate(graph.order(), graph.edges(), balanced, 0);
  if (!lab) throw InvalidInput("contraction needs a balanced edge set");
  detail::normalize_top_zero(*lab);

  const auto n = static_cast<std::size_t>(graph.order());
  std::vector<Gain> eta(n);
  for (std::size_t i = 0; i < n; ++i) eta[i] = -lab->theta[i];

  // Representative of each block: its lowest-indexed top vertex.
  std::vector<Vertex> top(n + 1, 0);
  for (Vertex v = 1; v <= graph.order(); ++v) {
    Vertex r = lab->rep[v - 1];
    if (eta[v - 1] == 0 && top[r] == 0) top[r] = v;
  }
  std::vector<Vertex> reps;
  for (Vertex v = 1; v <= graph.order(); ++v) {
    if (top[lab->rep[v - 1]] == v) reps.push_back(v);
  }
  std::vector<Vertex> new_index(n + 1, 0);
  for (std::size_t k = 0; k < reps.size(); ++k) new_index[reps[k]] = static_cast<Vertex>(k + 1);
  auto image = [&](Vertex v) { return new_index[top[lab->rep[v - 1]]]; };

  std::vector<char> in_b(graph.size(), 0);
  for (EdgeId id : balanced) in_b[id] = 1;

  std::vector<Edge> edges;
  for (EdgeId id = 0; id < graph.size(); ++id) {
    if (in_b[id]) continue;
    const Edge& e = graph.edges()[id];
    Gain g = e.is_loop() ? e.gain : e.gain + eta[e.head - 1] - eta[e.tail - 1];
    for (int k = 0; k < graph.multiplicity(id); ++k) edges.push_back({image(e.tail), image(e.head), g});
  }

  std::vector<Gain> merged;
  if (!bounds.empty()) {
    merged.assign(reps.size(), std::numeric_limits<Gain>::min());
    for (Vertex v = 1; v <= graph.order(); ++v) {
      auto& slot = merged[image(v) - 1];
      slot = std::max(slot, bounds[v - 1] + eta[v - 1]);
    }
  }
  return {GainGraph(static_cast<int>(reps.size()), edges), std::move(merged)};
}

}  // namespace

GainGraph contract(const GainGraph& graph, std::span<const EdgeId> balanced) {
  return contract_impl(graph, {}, balanced).graph;
}

RootedGainGraph contract(const RootedGainGraph& rooted, std::span<const EdgeId> balanced) {
  if (rooted.order() == 0) return rooted;
  auto c = contract_impl(rooted.graph(), rooted.bounds(), balanced);
  return RootedGainGraph(std::move(c.graph), std::move(c.merged_bounds));
}

GainGraph delete_edge(const GainGraph& graph, EdgeId id) {
  (void)graph.edge(id);
  std::vector<Edge> edges;
  edges.reserve(graph.size());
  for (EdgeId k = 0; k < graph.size(); ++k) {
    if (k == id) continue;
    for (int c = 0; c < graph.multiplicity(k); ++c) edges.push_back(graph.edges()[k]);
  }
  return GainGraph(graph.order(), edges);
}

RootedGainGraph delete_edge(const RootedGainGraph& rooted, EdgeId id) {
  return RootedGainGraph(delete_edge(rooted.graph(), id), rooted.bounds());
}

RootedGainGraph rooting(const GainGraph& graph) {
  return RootedGainGraph(graph, std::vector<Gain>(static_cast<std::size_t>(graph.order()), 0));
}

std::vector<EdgeId> improper_edges(const GainGraph& graph, std::span<const Gain> coloring) {
  if (coloring.size() != static_cast<std::size_t>(graph.order())) {
    throw InvalidInput("coloration must assign a color to every vertex");
  }
  std::vector<EdgeId> out;
  for (EdgeId id = 0; id < graph.size(); ++id) {
    const Edge& e = graph.edges()[id];
    if (coloring[e.head - 1] == coloring[e.tail - 1] + e.gain) out.push_back(id);
  }
  return out;
}

GainGraph reduce_modulo(const GainGraph& graph, Gain modulus) {
  if (modulus < 1) throw InvalidInput("modulus must be positive");
  std::vector<Edge> edges;
  edges.reserve(graph.size());
  for (const Edge& e : graph.edges()) {
    Gain r = floor_mod(e.gain, modulus);
    if (e.is_loop()) r = std::min(r, floor_mod(-r, modulus));
    edges.push_back({e.tail, e.head, r});
  }
  return GainGraph(graph.order(), edges);
}

}  // namespace affino
