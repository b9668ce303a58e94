#include <doctest.h>

#include "support.hpp"

using namespace pdual;
using namespace pdual::testing;

namespace {

/// (Σ a_g⟦g⟧)(Σ b_h⟦h⟧) = Σ a_g (g·b_h)⟦gh⟧ computed entrywise.
Vec<Rational> reference_product(const SkewGroupRing<Rational>& s, const Vec<Rational>& x, const Vec<Rational>& y) {
  const auto& pa = s.action();
  const auto& G = pa.group();
  const auto& A = pa.algebra();
  std::vector<Vec<Rational>> entries(G.order(), A.zero());
  for (GroupElement g = 0; g < G.order(); ++g) {
    for (GroupElement h = 0; h < G.order(); ++h) {
      entries[G.mul(g, h)] += A.mul(s.entry(x, g), pa.dot(g, s.entry(y, h)));
    }
  }
  Vec<Rational> out = Vec<Rational>::Zero(s.dim());
  for (GroupElement g = 0; g < G.order(); ++g) out += s.element(g, entries[g]);
  return out;
}

Vec<Rational> random_vector(std::mt19937& rng, Index n) { return random_matrix(rng, n, 1).col(0); }

}  // namespace

TEST_SUITE("skew") {

TEST_CASE("products in the two-point example") {
  auto skew = build_skew(s1<Rational>());
  REQUIRE(skew.dim() == 3);
  const auto e0 = vec<Rational>(kQ, {1, 0});
  const auto e1 = vec<Rational>(kQ, {0, 1});
  // e0⟦g⟧ e0⟦g⟧ = e0 (g·e0)⟦e⟧ = e0⟦e⟧.
  CHECK(skew.mul(skew.element(1, e0), skew.element(1, e0)) == skew.element(0, e0));
  // e0⟦g⟧ e1⟦e⟧ = e0 (g·e1)⟦g⟧ = 0, while e1⟦e⟧ e0⟦g⟧ = (e1 e0)⟦g⟧ = 0 too.
  CHECK(skew.mul(skew.element(1, e0), skew.element(0, e1)) == Vec<Rational>::Zero(3));
  CHECK(skew.mul(skew.element(0, e1), skew.element(1, e0)) == Vec<Rational>::Zero(3));
  CHECK(skew.mul(skew.element(0, e0), skew.element(1, e0)) == skew.element(1, e0));
  CHECK(skew.algebra().unit() == skew.element(0, vec<Rational>(kQ, {1, 1})));
  CHECK_THROWS_AS(skew.element(1, e1), Error);
  for (const auto& c : grading_check(skew).checks) CHECK(c.passed());
}

TEST_CASE("skew products agree with the entrywise formula") {
  std::mt19937 rng(404);
  std::vector<PartialAction<Rational>> actions{s1<Rational>(), global_swap<Rational>(), z3_restriction<Rational>(),
                                               regular_restriction<Rational>(FiniteGroup::symmetric(3), {0, 1, 3}),
                                               trivial_from_split(full_matrix_algebra<Rational>(kQ, 2),
                                                                  base_field<Rational>(kQ), FiniteGroup::cyclic(2))};
  for (const auto& pa : actions) {
    auto skew = build_skew(pa);
    for (int trial = 0; trial < 8; ++trial) {
      Vec<Rational> x = random_vector(rng, skew.dim());
      Vec<Rational> y = random_vector(rng, skew.dim());
      CHECK(skew_mul(skew, x, y) == reference_product(skew, x, y));
    }
  }
}

TEST_CASE("skew ring dimension is the sum of the ideal dimensions") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = FiniteGroup::cyclic(static_cast<std::size_t>(2 + trial % 4));
    auto subset = random_subset_with_zero(rng, g.order());
    auto skew = build_skew(regular_restriction<Rational>(g, subset));
    CAPTURE(trial);
    // Σ_g |E ∩ gE| counts pairs (x, g) with x, g⁻¹x ∈ E, which is |E|².
    CHECK(skew.dim() == static_cast<Index>(subset.size() * subset.size()));
    for (const auto& c : grading_check(skew).checks) CHECK(c.passed());
  }
}

TEST_CASE("strongly graded exactly when global") {
  std::mt19937 rng(1234);
  std::vector<FiniteGroup> groups{FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::cyclic(4),
                                  FiniteGroup::symmetric(3)};
  int global_seen = 0;
  int partial_seen = 0;
  for (int trial = 0; trial < 24; ++trial) {
    const auto& g = groups[static_cast<std::size_t>(trial) % groups.size()];
    auto subset = random_subset_with_zero(rng, g.order());
    if (trial % 6 == 0) {
      subset.clear();
      for (std::size_t i = 0; i < g.order(); ++i) subset.insert(i);
    }
    auto skew = build_skew(regular_restriction<Rational>(g, subset));
    auto result = strong_grading_test(skew);
    CAPTURE(trial);
    CHECK(result.agree);
    CHECK(result.global == (subset.size() == g.order()));
    (result.global ? global_seen : partial_seen)++;
  }
  CHECK(global_seen > 0);
  CHECK(partial_seen > 0);
  CHECK_FALSE(strong_grading_test(build_skew(s1<Rational>())).strong);
  CHECK(strong_grading_test(build_skew(global_swap<Rational>())).strong);
}

}  // TEST_SUITE
