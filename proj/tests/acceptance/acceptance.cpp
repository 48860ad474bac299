// One line per acceptance criterion; exits nonzero if any fails.
#include "affino/app.hpp"
#include "affino/chromatic.hpp"
#include "affino/document.hpp"
#include "affino/errors.hpp"
#include "affino/families.hpp"
#include "affino/geometry.hpp"

#include "corpus.hpp"

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

namespace {

using namespace affino;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

std::string str(const BigInt& v) { return to_decimal(v); }

const std::vector<testing::NamedGraph>& corpus() {
  static const auto graphs = testing::standard_corpus();
  return graphs;
}

Outcome shi_counts() {
  Outcome o;
  for (int n = 2; n <= 4; ++n) {
    auto g = interval_complete_graph(n, 0, 1);
    for (Gain m = 0; m <= 10; ++m) {
      BigInt expected = 0;
      if (m >= n) {
        expected = 1;
        for (int k = 0; k < n; ++k) expected *= m - n + 1;
      }
      auto engine = integral_chromatic(g, m);
      auto oracle = oracle_integral(g, m);
      o.expect(engine == expected && oracle == expected,
               "n=" + std::to_string(n) + " m=" + std::to_string(m) + " engine=" + str(engine) +
                   " oracle=" + str(oracle));
    }
  }
  return o;
}

Outcome extended_shi() {
  Outcome o;
  const int n = 3;
  const Gain s = 2;
  auto g = interval_complete_graph(n, 1 - s, s);
  for (Gain m = 0; m <= 12; ++m) {
    auto engine = integral_chromatic(g, m);
    auto closed = shi_closed_form(n, s, m);
    auto oracle = oracle_integral(g, m);
    BigInt direct = 0;
    if (m >= n + (s - 1) * (n - 1)) {
      direct = 1;
      for (int k = 0; k < n; ++k) direct *= m - s * (n - 1);
    }
    o.expect(engine == closed && closed == oracle && oracle == direct, "m=" + std::to_string(m));
  }
  return o;
}

Outcome linial_polynomials() {
  Outcome o;
  const std::vector<Polynomial> expected{
      Polynomial({0, 1}),
      Polynomial({1, -1, 1}),
      Polynomial::linear(1) * Polynomial({4, -2, 1}),
  };
  for (int n = 1; n <= 3; ++n) {
    auto p = collapsed_polynomial(integral_terms(rooting(interval_complete_graph(n, 1, 1))));
    o.expect(p == expected[n - 1], "n=" + std::to_string(n) + " got " + p.to_string("m"));
  }
  return o;
}

Outcome eulerian_formula() {
  Outcome o;
  for (int n = 1; n <= 4; ++n) {
    for (Gain b = 1; b <= 3; ++b) {
      auto g = interval_complete_graph(n, 0, b);
      for (Gain m = 0; m <= 10; ++m) {
        auto closed = zero_b_closed_form(n, b, m);
        o.expect(closed == integral_chromatic(g, m) && closed == oracle_integral(g, m),
                 "n=" + std::to_string(n) + " b=" + std::to_string(b) + " m=" + std::to_string(m));
      }
    }
  }
  return o;
}

Outcome characteristic_polynomials() {
  Outcome o;
  const std::vector<int> regions{3, 16, 125, 1296};
  for (int n = 1; n <= 5; ++n) {
    auto g = interval_complete_graph(n, 0, 1);
    Polynomial expected = Polynomial::monomial(1);
    for (int k = 1; k < n; ++k) expected = expected * Polynomial::linear(n);
    auto p = balanced_chromatic_polynomial(g);
    o.expect(p == expected, "n=" + std::to_string(n) + " got " + p.to_string("x"));
    if (n >= 2) {
      auto r = region_count(g);
      BigInt formula = 1;
      for (int k = 1; k < n; ++k) formula *= n + 1;
      o.expect(r == formula && r == regions[n - 2], "regions n=" + std::to_string(n) + " got " + str(r));
    }
  }
  return o;
}

Outcome method_equivalence() {
  Outcome o;
  std::size_t random = 0;
  for (const auto& [name, g] : corpus()) {
    random += name.rfind("random", 0) == 0;
    auto rooted = rooting(g);
    auto terms = integral_terms(rooted);
    for (Gain m = 0; m <= 8; ++m) {
      auto oracle = oracle_integral(g, m);
      o.expect(eval_terms(terms, m) == oracle && integral_chromatic_dc(rooted, m) == oracle,
               name + " m=" + std::to_string(m));
    }
  }
  o.expect(random >= 200, "corpus too small");
  return o;
}

Outcome modular_ground_truth() {
  Outcome o;
  for (const auto& [name, g] : corpus()) {
    for (Gain m = 1; m <= 10; ++m) {
      o.expect(modular_chromatic(g, m) == oracle_modular(g, m), name + " oracle m=" + std::to_string(m));
      for (EdgeId e = 0; e < g.size(); ++e) {
        if (g.edge(e).is_loop()) continue;
        auto [whole, split] = modular_dc_check(g, e, m);
        o.expect(whole == split, name + " deletion-contraction m=" + std::to_string(m));
      }
    }
    auto p = balanced_chromatic_polynomial(g);
    const Gain top = testing::max_abs_circle_gain(g);
    for (Gain m = top + 1; m <= top + 8; ++m) {
      o.expect(modular_chromatic(g, m) == p(m), name + " large m=" + std::to_string(m));
    }
  }
  return o;
}

Outcome paper_rule_caveat() {
  Outcome o;
  auto shi = interval_complete_graph(2, 0, 1);
  auto rule = modular_paper_rule(shi, 1);
  auto oracle = oracle_modular(shi, 1);
  o.expect(rule == 1 && oracle == 0, "[0,1]K2 m=1 rule=" + str(rule) + " oracle=" + str(oracle));
  std::size_t checked = 0;
  for (const auto& [name, g] : corpus()) {
    auto lat = enumerate_flats(g);
    for (Gain m = 1; m <= 10; ++m) {
      if (!modular_rule_applies(lat, m)) continue;
      ++checked;
      o.expect(modular_paper_rule(g, m) == oracle_modular(g, m), name + " m=" + std::to_string(m));
    }
  }
  o.expect(checked > 0, "no instance in the rule's domain");
  return o;
}

Outcome cone_decomposition_check() {
  Outcome o;
  for (int n = 2; n <= 3; ++n) {
    for (Gain a : {0, 1}) {
      auto g = interval_complete_graph(n, a, 1);
      auto cones = cone_decomposition(g);
      std::vector<Gain> x(static_cast<std::size_t>(n), 1);
      while (true) {
        const std::int64_t expected = improper_edges(g, x).empty() ? 1 : 0;
        o.expect(point_total_weight(cones, x) == expected, "n=" + std::to_string(n) + " a=" + std::to_string(a));
        std::size_t k = 0;
        while (k < x.size() && x[k] == 8) x[k++] = 1;
        if (k == x.size()) break;
        ++x[k];
      }
    }
  }
  return o;
}

Outcome nbc_cross_check() {
  Outcome o;
  std::mt19937_64 rng(31337);
  for (const auto& [name, g] : corpus()) {
    auto lat = enumerate_flats(g);
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<EdgeId> order(g.size());
      std::iota(order.begin(), order.end(), EdgeId{0});
      std::shuffle(order.begin(), order.end(), rng);
      for (std::size_t i = 0; i < lat.size(); ++i) {
        const auto count = static_cast<std::int64_t>(nbc_forest_count(g, lat[i], order));
        o.expect(count == std::abs(lat.mobius(i)), name + " flat " + std::to_string(i));
      }
    }
  }
  return o;
}

Outcome interval_coloring() {
  Outcome o;
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<Gain> bound(0, 3);
  std::size_t checked = 0;
  for (const auto& [name, g] : corpus()) {
    if (!g.all_gains_zero() || g.has_zero_loop()) continue;
    ++checked;
    std::vector<Gain> h;
    for (int i = 0; i < g.order(); ++i) h.push_back(bound(rng));
    for (Gain m = 0; m <= 8; ++m) {
      o.expect(interval_chromatic(g, h, m) == oracle_interval(g, h, m), name + " m=" + std::to_string(m));
    }
  }
  // The zero-gain shadows of the random graphs widen the sample.
  for (const auto& [name, g] : corpus()) {
    auto zero = testing::zero_gain_shadow(g);
    ++checked;
    std::vector<Gain> h;
    for (int i = 0; i < zero.order(); ++i) h.push_back(bound(rng));
    for (Gain m = 0; m <= 8; ++m) {
      o.expect(interval_chromatic(zero, h, m) == oracle_interval(zero, h, m),
               name + " shadow m=" + std::to_string(m));
    }
  }
  o.expect(checked > 0, "no zero-gain graphs");
  return o;
}

Outcome term_normal_form() {
  Outcome o;
  for (const auto& [name, g] : corpus()) {
    auto t = integral_terms(rooting(g));
    if (g.has_zero_loop()) {
      o.expect(t.terms.empty(), name + " zero loop");
      continue;
    }
    const int n = g.order();
    if (t.terms.empty()) {
      o.fail(name + " empty");
      continue;
    }
    o.expect(t.terms.front() == Term{1, 1, std::vector<Gain>(static_cast<std::size_t>(n), 0)},
             name + " leading term");
    Gain top = 0;
    for (const Term& term : t.terms) {
      o.expect(term.mu > 0, name + " mu");
      o.expect(term.sign == ((n - term.degree()) % 2 ? -1 : 1), name + " sign");
      o.expect(std::is_sorted(term.roots.rbegin(), term.roots.rend()), name + " order");
      for (Gain r : term.roots) o.expect(r >= 0, name + " root");
      if (!term.roots.empty()) top = std::max(top, term.roots.front());
    }
    // Each term switches on exactly when m passes its largest root.
    for (const Term& term : t.terms) {
      if (term.roots.empty()) continue;
      TermSum single{n, {term}};
      const Gain r = term.roots.front();
      o.expect(eval_terms(single, r) == 0 && eval_terms(single, r + 1) != 0, name + " activation");
    }
    auto poly = collapsed_polynomial(t);
    for (Gain m = top; m <= top + 4; ++m) o.expect(eval_terms(t, m) == poly(m), name + " threshold");
  }
  return o;
}

Outcome performance() {
  Outcome o;
  auto k5 = interval_complete_graph(5, 0, 1);
  const auto start = Clock::now();
  auto lat = enumerate_flats(k5);
  auto terms = integral_terms(rooting(k5));
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  o.expect(seconds < 10.0, "K5 took " + std::to_string(seconds) + " s");
  o.expect(eval_terms(terms, 10) == 7776, "K5 count at m=10");
  (void)lat;

  const std::string doc = cli::document_text(interval_complete_graph(8, 0, 1));
  std::istringstream in(doc);
  std::ostringstream out, err;
  const auto guard_start = Clock::now();
  const int code = cli::run({"eval", "--method", "oracle", "--m", "10"}, in, out, err);
  const double guard = std::chrono::duration<double>(Clock::now() - guard_start).count();
  o.expect(code == cli::kResourceLimit, "K8 oracle exit code " + std::to_string(code));
  o.expect(guard < 10.0, "K8 guard took " + std::to_string(guard) + " s");
  return o;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> check;
  double limit_seconds;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Shi counts match (m-n+1)^n and the oracle", shi_counts, 60},
      {2, "extended Shi closed form, engine and oracle agree", extended_shi, 0},
      {3, "Linial large-m polynomials", linial_polynomials, 0},
      {4, "Eulerian formula for [0,b]K_n", eulerian_formula, 0},
      {5, "Shi characteristic polynomial and region counts", characteristic_polynomials, 0},
      {6, "Moebius, deletion-contraction and oracle agree on the corpus", method_equivalence, 300},
      {7, "modular count equals the oracle, chi^b above circle gains, and its recursion", modular_ground_truth, 0},
      {8, "loop-substitution rule: m=1 counterexample and agreement on its domain", paper_rule_caveat, 0},
      {9, "cone decomposition has total weight 1 exactly on proper points", cone_decomposition_check, 0},
      {10, "|mu| equals the NBC forest count under random orderings", nbc_cross_check, 0},
      {11, "interval coloring equals the oracle", interval_coloring, 0},
      {12, "term lists are in normal form", term_normal_form, 0},
      {13, "K5 flats in under 10 s, K8 oracle guard exits 3", performance, 0},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      o.fail("took " + std::to_string(seconds) + " s, limit " + std::to_string(c.limit_seconds) + " s");
    }
    std::printf("AC%-2d %s  %s  (%.2f s)%s%s\n", c.id, o.ok ? "PASS" : "FAIL", c.title, seconds,
                o.ok ? "" : "  first failure: ", o.detail.c_str());
    failures += !o.ok;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
