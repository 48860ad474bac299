// SPDX-License-Identifier: Apache-2.0
#include "affino/chromatic.hpp"

#include "affino/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>

namespace affino {

namespace {

BigInt positive_part_product(std::span<const Gain> roots, Gain m) {
  BigInt product = 1;
  for (Gain r : roots) {
    if (m <= r) return 0;
    product *= m - r;
  }
  return product;
}

BigInt power(Gain base, std::size_t exp) {
  BigInt out = 1;
  for (std::size_t k = 0; k < exp; ++k) out *= base;
  return out;
}

}  // namespace

TermSum integral_terms(const RootedGainGraph& rooted, const FlatOptions& options) {
  TermSum out{rooted.order(), {}};
  if (rooted.graph().has_zero_loop()) return out;

  FlatOptions integral = options;
  integral.modulus = 0;
  const FlatSemilattice lattice = enumerate_flats(rooted.graph(), integral);

  std::map<std::vector<Gain>, std::int64_t> merged;
  for (std::size_t k = 0; k < lattice.size(); ++k) {
    std::vector<Gain> roots = rooted_heights(rooted, lattice[k]);
    std::sort(roots.begin(), roots.end(), std::greater<>());
    merged[std::move(roots)] += lattice.mobius(k);
  }
  for (auto& [roots, mu] : merged) {
    if (mu == 0) continue;
    out.terms.push_back({mu > 0 ? 1 : -1, mu > 0 ? mu : -mu, roots});
  }
  std::stable_sort(out.terms.begin(), out.terms.end(),
                   [](const Term& a, const Term& b) { return a.degree() > b.degree(); });
  return out;
}

BigInt eval_terms(const TermSum& terms, Gain m) {
  BigInt total = 0;
  for (const Term& t : terms.terms) {
    BigInt p = positive_part_product(t.roots, m);
    if (p == 0) continue;
    p *= t.mu;
    if (t.sign < 0) total -= p;
    else total += p;
  }
  return total;
}

Polynomial collapsed_polynomial(const TermSum& terms) {
  Polynomial total;
  for (const Term& t : terms.terms) {
    Polynomial p = Polynomial::constant(BigInt(t.mu) * t.sign);
    for (Gain r : t.roots) p = p * Polynomial::linear(r);
    total += p;
  }
  return total;
}

BigInt integral_chromatic(const GainGraph& graph, Gain m, const FlatOptions& options) {
  return integral_chromatic(rooting(graph), m, options);
}

BigInt integral_chromatic(const RootedGainGraph& rooted, Gain m, const FlatOptions& options) {
  return eval_terms(integral_terms(rooted, options), m);
}

namespace {

using DcKey = std::vector<Gain>;

struct DcKeyHash {
  std::size_t operator()(const DcKey& key) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (Gain v : key) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ull;
    return h;
  }
};

class DeletionContraction {
 public:
  explicit DeletionContraction(Gain m) : m_(m) {}

  BigInt count(const RootedGainGraph& rooted) {
    if (rooted.graph().has_zero_loop()) return 0;

    // Nonzero loops never become improper in Z; drop them so equal minors share a key.
    std::vector<Edge> links;
    for (const Edge& e : rooted.graph().edges()) {
      if (!e.is_loop()) links.push_back(e);
    }
    if (links.empty()) {
      BigInt product = 1;
      for (Gain h : rooted.bounds()) {
        if (m_ <= h) return 0;
        product *= m_ - h;
      }
      return product;
    }
    RootedGainGraph g = links.size() == rooted.graph().size()
                            ? rooted
                            : RootedGainGraph(GainGraph(rooted.order(), links), rooted.bounds());

    DcKey key;
    key.reserve(1 + g.bounds().size() + 3 * g.graph().size());
    key.push_back(g.order());
    key.insert(key.end(), g.bounds().begin(), g.bounds().end());
    for (const Edge& e : g.graph().edges()) {
      key.insert(key.end(), {e.tail, e.head, e.gain});
    }
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const EdgeId e = 0;  // edges are sorted and loop-free here, so id 0 is a link
    const EdgeId single[] = {e};
    BigInt value = count(delete_edge(g, e)) - count(contract(g, single));
    memo_.emplace(std::move(key), value);
    return value;
  }

 private:
  Gain m_;
  std::unordered_map<DcKey, BigInt, DcKeyHash> memo_;
};

}  // namespace

BigInt integral_chromatic_dc(const RootedGainGraph& rooted, Gain m) {
  DeletionContraction dc(m);
  return dc.count(rooted);
}

Polynomial balanced_chromatic_polynomial(const GainGraph& graph, const FlatOptions& options) {
  if (graph.has_zero_loop()) return {};
  FlatOptions integral = options;
  integral.modulus = 0;
  const FlatSemilattice lattice = enumerate_flats(graph, integral);
  Polynomial p;
  for (std::size_t k = 0; k < lattice.size(); ++k) {
    p += Polynomial::monomial(static_cast<unsigned>(lattice[k].block_count()), lattice.mobius(k));
  }
  return p;
}

BigInt region_count(const GainGraph& graph, const FlatOptions& options) {
  BigInt value = balanced_chromatic_polynomial(graph, options)(BigInt(-1));
  return graph.order() % 2 == 0 ? value : BigInt(-value);
}

BigInt interval_chromatic(const GainGraph& graph, std::span<const Gain> bounds, Gain m,
                          const FlatOptions& options) {
  if (!graph.all_gains_zero()) throw InvalidInput("interval coloring needs an all-zero-gain graph");
  RootedGainGraph rooted(graph, std::vector<Gain>(bounds.begin(), bounds.end()));
  return integral_chromatic(rooted, m, options);
}

BigInt modular_chromatic(const GainGraph& graph, Gain m, FlatOptions options) {
  if (m < 1) throw InvalidInput("modulus must be positive");
  options.modulus = m;
  if (reduce_modulo(graph, m).has_zero_loop()) return 0;
  const FlatSemilattice lattice = enumerate_flats(graph, options);
  BigInt total = 0;
  for (std::size_t k = 0; k < lattice.size(); ++k) {
    total += lattice.mobius(k) * power(m, lattice[k].block_count());
  }
  return total;
}

BigInt modular_paper_rule(const GainGraph& graph, Gain m, const FlatOptions& options) {
  if (m < 1) throw InvalidInput("modulus must be positive");
  FlatOptions integral = options;
  integral.modulus = 0;
  const FlatSemilattice lattice = enumerate_flats(graph, integral);
  BigInt total = 0;
  for (std::size_t k = 0; k < lattice.size(); ++k) {
    const auto& loops = lattice[k].loop_gains;
    const bool killed = std::any_of(loops.begin(), loops.end(), [m](Gain g) { return g % m == 0; });
    if (!killed) total += lattice.mobius(k) * power(m, lattice[k].block_count());
  }
  return total;
}

bool modular_rule_applies(const FlatSemilattice& lattice, Gain m) {
  if (m < 1) throw InvalidInput("modulus must be positive");
  for (const BalancedFlat& flat : lattice.flats()) {
    for (Gain g : flat.loop_gains) {
      if (g != 0 && g % m == 0) return false;
    }
  }
  return true;
}

std::pair<BigInt, BigInt> modular_dc_check(const GainGraph& graph, EdgeId link, Gain m,
                                           const FlatOptions& options) {
  if (graph.edge(link).is_loop()) throw InvalidInput("deletion-contraction needs a link");
  const EdgeId single[] = {link};
  BigInt whole = modular_chromatic(graph, m, options);
  BigInt deleted = modular_chromatic(delete_edge(graph, link), m, options);
  BigInt contracted = modular_chromatic(contract(graph, single), m, options);
  return {whole, deleted - contracted};
}

}  // namespace affino
