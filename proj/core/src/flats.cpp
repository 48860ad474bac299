// SPDX-License-Identifier: Apache-2.0
#include "affino/flats.hpp"

#include "affino/errors.hpp"
#include "labeling.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace affino {

namespace {

// A flat is identified by its partition (each vertex labelled with the lowest
// vertex of its block) and its normalized potential.
struct State {
  std::vector<Vertex> rep;
  std::vector<Gain> theta;
};

using Key = std::vector<Gain>;

struct KeyHash {
  std::size_t operator()(const Key& key) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Gain v : key) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

Key key_of(const State& s) {
  Key key;
  key.reserve(s.rep.size() * 2);
  key.insert(key.end(), s.rep.begin(), s.rep.end());
  key.insert(key.end(), s.theta.begin(), s.theta.end());
  return key;
}

Gain reduce(Gain g, Gain modulus) { return modulus == 0 ? g : floor_mod(g, modulus); }

int block_count(const State& s) {
  int count = 0;
  for (std::size_t i = 0; i < s.rep.size(); ++i) {
    if (s.rep[i] == static_cast<Vertex>(i + 1)) ++count;
  }
  return count;
}

State initial_state(int order) {
  State s{std::vector<Vertex>(static_cast<std::size_t>(order)),
          std::vector<Gain>(static_cast<std::size_t>(order), 0)};
  std::iota(s.rep.begin(), s.rep.end(), 1);
  return s;
}

void normalize_block(State& s, Vertex r, Gain modulus) {
  Gain anchor;
  if (modulus == 0) {
    anchor = std::numeric_limits<Gain>::min();
    for (std::size_t i = 0; i < s.rep.size(); ++i) {
      if (s.rep[i] == r) anchor = std::max(anchor, s.theta[i]);
    }
  } else {
    anchor = s.theta[r - 1];
  }
  for (std::size_t i = 0; i < s.rep.size(); ++i) {
    if (s.rep[i] == r) s.theta[i] = reduce(s.theta[i] - anchor, modulus);
  }
}

// Closure of B + e for a link e joining two different blocks of B.
bool augment(const State& s, const Edge& e, Gain modulus, State& out) {
  if (e.is_loop()) return false;
  const Vertex rt = s.rep[e.tail - 1];
  const Vertex rh = s.rep[e.head - 1];
  if (rt == rh) return false;
  const Gain delta = reduce(s.theta[e.tail - 1] + e.gain - s.theta[e.head - 1], modulus);
  const Vertex merged = std::min(rt, rh);
  out = s;
  for (std::size_t i = 0; i < out.rep.size(); ++i) {
    if (out.rep[i] == rh) {
      out.theta[i] = reduce(out.theta[i] + delta, modulus);
      out.rep[i] = merged;
    } else if (out.rep[i] == rt) {
      out.rep[i] = merged;
    }
  }
  normalize_block(out, merged, modulus);
  return true;
}

BalancedFlat materialize(const GainGraph& graph, const State& s, Gain modulus) {
  BalancedFlat flat;
  const auto n = s.rep.size();
  flat.potential = s.theta;
  flat.block_of.assign(n, 0);
  std::vector<std::size_t> slot(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (s.rep[i] == static_cast<Vertex>(i + 1)) {
      slot[i + 1] = flat.blocks.size();
      flat.blocks.emplace_back();
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t b = slot[s.rep[i]];
    flat.block_of[i] = b;
    flat.blocks[b].push_back(static_cast<Vertex>(i + 1));
  }

  for (EdgeId id = 0; id < graph.size(); ++id) {
    const Edge& e = graph.edges()[id];
    if (s.rep[e.tail - 1] != s.rep[e.head - 1]) continue;
    if (reduce(s.theta[e.head - 1] - s.theta[e.tail - 1] - e.gain, modulus) == 0) {
      flat.edges.push_back(id);
    }
  }

  if (modulus == 0) {
    flat.heights.assign(flat.blocks.size(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      auto& h = flat.heights[flat.block_of[i]];
      h = std::max(h, -s.theta[i]);
    }
    std::size_t cursor = 0;
    for (EdgeId id = 0; id < graph.size(); ++id) {
      const Edge& e = graph.edges()[id];
      if (s.rep[e.tail - 1] != s.rep[e.head - 1]) continue;
      const bool in_flat = cursor < flat.edges.size() && flat.edges[cursor] == id;
      if (in_flat) ++cursor;
      if (e.is_loop()) {
        flat.loop_gains.push_back(e.gain);
      } else if (!in_flat) {
        flat.loop_gains.push_back(std::abs(e.gain - s.theta[e.head - 1] + s.theta[e.tail - 1]));
      }
    }
    std::sort(flat.loop_gains.begin(), flat.loop_gains.end());
  }
  return flat;
}

}  // namespace

Vertex BalancedFlat::top_vertex(std::size_t b) const {
  for (Vertex v : blocks.at(b)) {
    if (potential[v - 1] == 0) return v;
  }
  return blocks[b].front();
}

BalancedFlat closure(const GainGraph& graph, std::span<const EdgeId> subset, Gain modulus) {
  const GainGraph reduced = modulus == 0 ? graph : reduce_modulo(graph, modulus);
  detail::check_ids(reduced, subset);
  auto lab = detail::propagate(reduced.order(), reduced.edges(), subset, modulus);
  if (!lab) throw InvalidInput("closure needs a balanced edge set");
  if (modulus == 0) detail::normalize_top_zero(*lab);
  return materialize(reduced, State{std::move(lab->rep), std::move(lab->theta)}, modulus);
}

FlatSemilattice::FlatSemilattice(GainGraph graph, Gain modulus, std::vector<BalancedFlat> flats,
                                 std::vector<std::int64_t> mobius)
    : graph_(std::move(graph)),
      modulus_(modulus),
      flats_(std::move(flats)),
      mobius_(std::move(mobius)) {}

bool FlatSemilattice::leq(std::size_t lower, std::size_t upper) const {
  const auto& a = flats_.at(lower).edges;
  const auto& b = flats_.at(upper).edges;
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

FlatSemilattice enumerate_flats(const GainGraph& graph, const FlatOptions& options) {
  if (options.modulus < 0) throw InvalidInput("modulus must be nonnegative");
  const Gain modulus = options.modulus;
  GainGraph g = modulus == 0 ? graph : reduce_modulo(graph, modulus);

  std::vector<EdgeId> links;
  for (EdgeId id = 0; id < g.size(); ++id) {
    if (!g.edges()[id].is_loop()) links.push_back(id);
  }

  // Breadth-first closure of single-edge augmentations.
  std::vector<State> states{initial_state(g.order())};
  std::unordered_map<Key, std::size_t, KeyHash> seen{{key_of(states.front()), 0}};
  State next;
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (EdgeId id : links) {
      if (!augment(states[i], g.edges()[id], modulus, next)) continue;
      auto [it, inserted] = seen.try_emplace(key_of(next), states.size());
      if (!inserted) continue;
      if (states.size() >= options.max_flats) {
        throw FlatLimitExceeded("more than " + std::to_string(options.max_flats) +
                                " balanced flats");
      }
      states.push_back(next);
    }
  }

  // Deterministic order: rank first (a linear extension of inclusion), then key.
  std::vector<std::pair<std::pair<int, Key>, std::size_t>> order;
  order.reserve(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    order.push_back({{g.order() - block_count(states[i]), key_of(states[i])}, i});
  }
  std::sort(order.begin(), order.end());

  std::vector<BalancedFlat> flats;
  flats.reserve(states.size());
  std::unordered_map<Key, std::size_t, KeyHash> position;
  for (std::size_t k = 0; k < order.size(); ++k) {
    flats.push_back(materialize(g, states[order[k].second], modulus));
    position.emplace(order[k].first.second, k);
  }

  // mu(bottom, B) = -sum of mu over the proper lower interval of B. The lower
  // interval is regenerated from the bottom using only B's own links.
  std::vector<std::int64_t> mobius(flats.size(), 0);
  mobius[0] = 1;
  std::vector<State> frontier;
  std::unordered_set<Key, KeyHash> below;
  for (std::size_t k = 1; k < flats.size(); ++k) {
    std::vector<EdgeId> own;
    for (EdgeId id : flats[k].edges) {
      if (!g.edges()[id].is_loop()) own.push_back(id);
    }
    frontier.assign(1, initial_state(g.order()));
    below.clear();
    below.insert(key_of(frontier.front()));
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      for (EdgeId id : own) {
        if (!augment(frontier[i], g.edges()[id], modulus, next)) continue;
        if (below.insert(key_of(next)).second) frontier.push_back(next);
      }
    }
    std::int64_t sum = 0;
    for (const Key& key : below) {
      const std::size_t j = position.at(key);
      if (j != k) sum += mobius[j];
    }
    mobius[k] = -sum;
  }

  return FlatSemilattice(std::move(g), modulus, std::move(flats), std::move(mobius));
}

std::vector<Gain> rooted_heights(const RootedGainGraph& rooted, const BalancedFlat& flat) {
  if (flat.block_of.size() != static_cast<std::size_t>(rooted.order())) {
    throw InvalidInput("flat and rooted graph have different orders");
  }
  std::vector<Gain> heights(flat.blocks.size(), std::numeric_limits<Gain>::min());
  for (std::size_t i = 0; i < flat.block_of.size(); ++i) {
    auto& h = heights[flat.block_of[i]];
    h = std::max(h, rooted.bounds()[i] - flat.potential[i]);
  }
  return heights;
}

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n) + 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

std::uint64_t nbc_forest_count(const GainGraph& graph, const BalancedFlat& flat,
                               std::span<const EdgeId> ordering) {
  if (ordering.size() != graph.size()) throw InvalidInput("ordering must list every edge once");
  std::vector<std::size_t> position(graph.size(), graph.size());
  for (std::size_t k = 0; k < ordering.size(); ++k) {
    if (ordering[k] >= graph.size() || position[ordering[k]] != graph.size()) {
      throw InvalidInput("ordering must be a permutation of the edge ids");
    }
    position[ordering[k]] = k;
  }
  const std::size_t size = flat.edges.size();
  if (size > 24) throw ResourceLimit("nbc_forest_count is limited to flats with 24 edges");

  const auto& edges = graph.edges();
  auto edge_at = [&](std::size_t bit) -> const Edge& { return edges[flat.edges[bit]]; };

  // Circles inside a balanced set are balanced, and a broken balanced circle
  // sitting inside F has its missing edge in the flat by closure, so circles
  // of the flat are all that matter.
  std::vector<std::uint32_t> broken;
  const std::uint32_t full = size == 0 ? 0u : static_cast<std::uint32_t>((1ull << size) - 1);
  for (std::uint32_t c = 1; c <= full && c != 0; ++c) {
    std::vector<int> degree(static_cast<std::size_t>(graph.order()) + 1, 0);
    DisjointSets ds(graph.order());
    int components = 0;
    for (std::size_t bit = 0; bit < size; ++bit) {
      if (!(c >> bit & 1u)) continue;
      const Edge& e = edge_at(bit);
      degree[e.tail] += 1;
      degree[e.head] += 1;
      ds.unite(e.tail, e.head);
    }
    bool ok = true;
    int touched_root = -1;
    for (Vertex v = 1; v <= graph.order() && ok; ++v) {
      if (degree[v] == 0) continue;
      if (degree[v] != 2) ok = false;
      int r = ds.find(v);
      if (touched_root < 0) {
        touched_root = r;
        ++components;
      } else if (r != touched_root) {
        ok = false;
      }
    }
    if (!ok || components != 1) continue;
    std::size_t last = size;
    for (std::size_t bit = 0; bit < size; ++bit) {
      if ((c >> bit & 1u) && (last == size || position[flat.edges[bit]] > position[flat.edges[last]])) {
        last = bit;
      }
    }
    broken.push_back(c & ~(1u << last));
  }

  const int rank = flat.rank();
  std::uint64_t count = 0;
  for (std::uint32_t f = 0; f <= full; ++f) {
    if (std::popcount(f) != rank) {
      if (f == full) break;
      continue;
    }
    DisjointSets ds(graph.order());
    bool forest = true;
    for (std::size_t bit = 0; bit < size && forest; ++bit) {
      if (f >> bit & 1u) forest = ds.unite(edge_at(bit).tail, edge_at(bit).head);
    }
    const bool clean = forest && std::none_of(broken.begin(), broken.end(),
                                              [f](std::uint32_t b) { return (b & f) == b; });
    if (clean) ++count;
    if (f == full) break;
  }
  return count;
}

}  // namespace affino
