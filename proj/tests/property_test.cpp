// Corpus-wide agreement between the counting routes and the oracles.
#include "affino/chromatic.hpp"
#include "affino/geometry.hpp"

#include "corpus.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

namespace affino {
namespace {

class Corpus : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { graphs_ = new std::vector<testing::NamedGraph>(testing::standard_corpus()); }
  static void TearDownTestSuite() {
    delete graphs_;
    graphs_ = nullptr;
  }
  static const std::vector<testing::NamedGraph>& graphs() { return *graphs_; }

 private:
  static inline std::vector<testing::NamedGraph>* graphs_ = nullptr;
};

TEST_F(Corpus, HasEnoughRandomGraphs) {
  std::size_t random = 0;
  for (const auto& g : graphs()) random += g.name.rfind("random", 0) == 0;
  EXPECT_GE(random, 200u);
}

TEST_F(Corpus, IntegralRoutesAgree) {
  for (const auto& [name, g] : graphs()) {
    auto rooted = rooting(g);
    auto terms = integral_terms(rooted);
    for (Gain m = 0; m <= 8; ++m) {
      const BigInt oracle = oracle_integral(g, m);
      ASSERT_EQ(eval_terms(terms, m), oracle) << name << " m=" << m;
      ASSERT_EQ(integral_chromatic_dc(rooted, m), oracle) << name << " m=" << m;
    }
  }
}

TEST_F(Corpus, RootedRoutesAgree) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<Gain> bound(-1, 3);
  for (const auto& [name, g] : graphs()) {
    std::vector<Gain> h;
    for (int i = 0; i < g.order(); ++i) h.push_back(bound(rng));
    RootedGainGraph rooted(g, h);
    auto terms = integral_terms(rooted);
    for (Gain m = 0; m <= 8; ++m) {
      const BigInt oracle = oracle_rooted(rooted, m);
      ASSERT_EQ(eval_terms(terms, m), oracle) << name << " m=" << m;
      ASSERT_EQ(integral_chromatic_dc(rooted, m), oracle) << name << " m=" << m;
    }
  }
}

TEST_F(Corpus, TermSumNormalForm) {
  for (const auto& [name, g] : graphs()) {
    auto t = integral_terms(rooting(g));
    if (g.has_zero_loop()) {
      EXPECT_TRUE(t.terms.empty()) << name;
      continue;
    }
    ASSERT_FALSE(t.terms.empty()) << name;
    const int n = g.order();
    EXPECT_EQ(t.terms.front(), (Term{1, 1, std::vector<Gain>(static_cast<std::size_t>(n), 0)})) << name;
    for (const Term& term : t.terms) {
      EXPECT_GT(term.mu, 0) << name;
      EXPECT_EQ(term.sign, (n - term.degree()) % 2 ? -1 : 1) << name;
      EXPECT_TRUE(std::is_sorted(term.roots.rbegin(), term.roots.rend())) << name;
      for (Gain r : term.roots) EXPECT_GE(r, 0) << name;
    }
    // Above every root the piecewise sum is one polynomial.
    Gain top = 0;
    for (const Term& term : t.terms) {
      if (!term.roots.empty()) top = std::max(top, term.roots.front());
    }
    auto poly = collapsed_polynomial(t);
    for (Gain m = top; m <= top + 6; ++m) EXPECT_EQ(eval_terms(t, m), poly(m)) << name;
  }
}

TEST_F(Corpus, ModularMatchesOracle) {
  for (const auto& [name, g] : graphs()) {
    for (Gain m = 1; m <= 10; ++m) {
      ASSERT_EQ(modular_chromatic(g, m), oracle_modular(g, m)) << name << " m=" << m;
    }
  }
}

TEST_F(Corpus, ModularMatchesCharacteristicPolynomialForLargeM) {
  for (const auto& [name, g] : graphs()) {
    auto p = balanced_chromatic_polynomial(g);
    const Gain top = testing::max_abs_circle_gain(g);
    for (Gain m = top + 1; m <= top + 6; ++m) EXPECT_EQ(modular_chromatic(g, m), p(m)) << name;
  }
}

TEST_F(Corpus, ModularDeletionContraction) {
  for (const auto& [name, g] : graphs()) {
    for (EdgeId e = 0; e < g.size(); ++e) {
      if (g.edge(e).is_loop()) continue;
      for (Gain m = 1; m <= 10; ++m) {
        auto [whole, split] = modular_dc_check(g, e, m);
        ASSERT_EQ(whole, split) << name << " edge " << e << " m=" << m;
      }
    }
  }
}

TEST_F(Corpus, PaperRuleOnItsDomain) {
  for (const auto& [name, g] : graphs()) {
    auto lat = enumerate_flats(g);
    for (Gain m = 1; m <= 10; ++m) {
      if (!modular_rule_applies(lat, m)) continue;
      EXPECT_EQ(modular_paper_rule(g, m), oracle_modular(g, m)) << name << " m=" << m;
    }
  }
}

TEST_F(Corpus, CharacteristicPolynomialIsMonic) {
  for (const auto& [name, g] : graphs()) {
    if (g.has_zero_loop()) continue;
    auto p = balanced_chromatic_polynomial(g);
    EXPECT_EQ(p.degree(), g.order()) << name;
    EXPECT_EQ(p.coefficient(static_cast<unsigned>(g.order())), 1) << name;
    EXPECT_EQ(region_count(g), (g.order() % 2 ? -p(-1) : p(-1))) << name;
  }
}

TEST_F(Corpus, IntervalColoring) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Gain> bound(0, 3);
  for (const auto& [name, g] : graphs()) {
    auto zero = testing::zero_gain_shadow(g);
    std::vector<Gain> h;
    for (int i = 0; i < zero.order(); ++i) h.push_back(bound(rng));
    std::vector<Gain> flat(h.size(), 0);
    for (Gain m = 0; m <= 8; ++m) {
      EXPECT_EQ(interval_chromatic(zero, h, m), oracle_interval(zero, h, m)) << name;
      // h = 0 gives the ordinary chromatic polynomial.
      EXPECT_EQ(interval_chromatic(zero, flat, m), testing::subset_expansion(zero, m)) << name;
    }
  }
}

TEST_F(Corpus, LatticePointsMatchArrangement) {
  for (const auto& [name, g] : graphs()) {
    bool loopless = true;
    for (const Edge& e : g.edges()) loopless = loopless && !e.is_loop();
    if (!loopless) continue;
    auto back = arrangement_to_gain_graph(gain_graph_to_arrangement(g));
    for (Gain m = 0; m <= 8; ++m) EXPECT_EQ(oracle_integral(back, m), integral_chromatic(g, m)) << name;
  }
}

}  // namespace
}  // namespace affino
