#include <doctest.h>

#include "support.hpp"

using namespace pdual;
using namespace pdual::testing;

namespace {

/// Sweedler's four-dimensional algebra on g^a x^b (index a + 2b):
/// g² = 1, x² = 0, xg = -gx, Δx = x ⊗ 1 + g ⊗ x, S(x) = -gx.
HopfAlgebra<Rational> sweedler() {
  const Index n = 4;
  ProductTable<Rational> t = empty_table<Rational>(n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const Index a = i % 2, b = i / 2, c = j % 2, d = j / 2;
      if (b + d > 1) continue;
      t((a + c) % 2 + 2 * (b + d), i * n + j) = (b * c) % 2 ? -1 : 1;
    }
  }
  auto algebra = Algebra<Rational>::make(kQ, t, vec<Rational>(kQ, {1, 0, 0, 0}), {"1", "g", "x", "gx"});
  Mat<Rational> delta = Mat<Rational>::Zero(n * n, n);
  delta(0 * n + 0, 0) = 1;
  delta(1 * n + 1, 1) = 1;
  delta(2 * n + 0, 2) = 1;
  delta(1 * n + 2, 2) = 1;
  delta(3 * n + 1, 3) = 1;
  delta(0 * n + 3, 3) = 1;
  Mat<Rational> antipode = Mat<Rational>::Zero(n, n);
  antipode(0, 0) = 1;
  antipode(1, 1) = 1;
  antipode(3, 2) = -1;
  antipode(2, 3) = 1;
  return HopfAlgebra<Rational>::make(algebra, delta, vec<Rational>(kQ, {1, 1, 0, 0}), antipode);
}

/// H acting on the base field by the scalars λ(b_i).
ActionMatrices<Rational> scalar_action(const std::vector<Rational>& values) {
  ActionMatrices<Rational> act;
  for (const auto& v : values) {
    Mat<Rational> m(1, 1);
    m(0, 0) = v;
    act.push_back(m);
  }
  return act;
}

ErrorKind hopf_action_error(const std::vector<Rational>& values) {
  try {
    make_partial_hopf_action(sweedler(), base_field<Rational>(kQ), scalar_action(values));
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InternalFailure;
}

void require_all_pass(const Report& report) {
  for (const auto& c : report.checks) {
    CAPTURE(c.name);
    CHECK(c.status == Status::pass);
  }
}

std::int64_t measured(const Report& report, const std::string& check, const std::string& key) {
  const auto* c = report.find(check);
  REQUIRE(c);
  return c->measured.at(key);
}

}  // namespace

TEST_SUITE("hopf") {

TEST_CASE("group algebras and their duals") {
  auto g = FiniteGroup::symmetric(3);
  auto kg = group_hopf<Rational>(kQ, g);
  auto dual_kg = dual(kg);
  CHECK(dual_kg.algebra().unit() == Vec<Rational>::Constant(6, Rational(1)));
  CHECK(center_basis(dual_kg.algebra()).dim() == 6);
  // p_h ⇀ g = δ_{h,g} g and g ↼ p_h = δ_{h,g} g.
  for (GroupElement h = 0; h < 6; ++h) {
    for (GroupElement x = 0; x < 6; ++x) {
      Vec<Rational> expected = x == h ? kg.basis(x) : Vec<Rational>(Vec<Rational>::Zero(6));
      CHECK(left_harpoon(kg, dual_kg.basis(h), kg.basis(x)) == expected);
      CHECK(right_harpoon(kg, kg.basis(x), dual_kg.basis(h)) == expected);
      CHECK(harpoon(kg, HarpoonSide::left, dual_kg.basis(h), kg.basis(x)) == expected);
    }
  }
  auto twice = dual(dual_kg);
  CHECK(twice.algebra().table() == kg.algebra().table());
  CHECK(twice.coproduct() == kg.coproduct());
  CHECK(twice.antipode() == kg.antipode());
}

TEST_CASE("Sweedler's algebra") {
  auto h = sweedler();
  CHECK(center_basis(h.algebra()).dim() == 1);
  CHECK(h.antipode_inverse() * h.antipode() == identity_matrix<Rational>(kQ, 4));
  // S has order 4: S² is conjugation by g.
  Mat<Rational> s2 = h.antipode() * h.antipode();
  CHECK(s2 != identity_matrix<Rational>(kQ, 4));
  CHECK(s2 * s2 == identity_matrix<Rational>(kQ, 4));
  auto hd = dual(h);
  CHECK(center_basis(hd.algebra()).dim() == 1);
}

TEST_CASE("malformed Hopf data is rejected") {
  auto h = sweedler();
  Mat<Rational> delta = h.coproduct();
  delta(1 * 4 + 2, 2) = 0;  // Δx = x ⊗ 1 is not an algebra map.
  CHECK_THROWS_AS(HopfAlgebra<Rational>::make(h.algebra(), delta, h.counit(), h.antipode()), Error);
  try {
    HopfAlgebra<Rational>::make(h.algebra(), h.coproduct(), h.counit(), Mat<Rational>(h.antipode() * 2));
    FAIL("accepted a wrong antipode");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::HopfAxiomFails);
  }
  try {
    HopfAlgebra<Rational>::make(h.algebra(), h.coproduct(), vec<Rational>(kQ, {1, 1, 1, 0}), h.antipode());
    FAIL("accepted a wrong counit");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::HopfAxiomFails);
  }
  CHECK_THROWS_AS(HopfAlgebra<Rational>::make(h.algebra(), h.coproduct(), vec<Rational>(kQ, {1, 1}), h.antipode()),
                  Error);
}

TEST_CASE("λ and ρ are bijective onto End(H)") {
  for (const auto& h : {sweedler(), group_hopf<Rational>(kQ, FiniteGroup::cyclic(3))}) {
    auto r = heisenberg(h);
    const Index n2 = h.dim() * h.dim();
    CHECK(rank(r.lambda_matrix()) == n2);
    CHECK(rank(r.rho_matrix()) == n2);
    require_all_pass(reps_check(r));
    // λ(1 # ε) and ρ(ε # 1) are the identity of H.
    CHECK(r.lambda(h.unit(), r.dual.unit()) == r.end.unit());
    CHECK(r.rho(r.dual.unit(), h.unit()) == r.end.unit());
  }
}

TEST_CASE("the partial actions of Sweedler's algebra on the base field") {
  // λ(g) = 0 and λ(x) = λ(gx) = α give a partial action for every α; ε is the global one.
  for (const Rational& alpha : {Rational(0), Rational(1), Rational(3) / 2, Rational(-2)}) {
    auto p = make_partial_hopf_action(sweedler(), base_field<Rational>(kQ), scalar_action({1, 0, alpha, alpha}));
    auto report = hopf_suite(p);
    CAPTURE(alpha);
    require_all_pass(report);
    CHECK(measured(report, "partial_smash.span", "dim_sub") == 2);
    CHECK(measured(report, "partial_smash.span", "dim_ambient") == 4);
    CHECK(measured(report, "coaction.weak_coassociativity", "strict_coassociativity_failures") == 1);
  }
  auto global = make_partial_hopf_action(sweedler(), base_field<Rational>(kQ), scalar_action({1, 1, 0, 0}));
  auto report = hopf_suite(global);
  require_all_pass(report);
  CHECK(measured(report, "partial_smash.span", "dim_sub") == 4);
  CHECK(measured(report, "coaction.weak_coassociativity", "strict_coassociativity_failures") == 0);
}

TEST_CASE("non-actions are rejected with the failed axiom") {
  CHECK(hopf_action_error({2, 1, 0, 0}) == ErrorKind::Axiom1Fails);
  CHECK(hopf_action_error({1, Rational(1) / 2, 0, 0}) == ErrorKind::Axiom1Fails);
  CHECK(hopf_action_error({1, 0, 1, 2}) == ErrorKind::Axiom3Fails);
  CHECK(hopf_action_error({1, 0, 0}) == ErrorKind::DimensionMismatch);
  // On k × k, 1_H acting as the projection onto the first factor is multiplicative but not the identity.
  auto k2 = product_of_fields<Rational>(kQ, 2);
  Mat<Rational> proj = Mat<Rational>::Zero(2, 2);
  proj(0, 0) = 1;
  try {
    make_partial_hopf_action(group_hopf<Rational>(kQ, FiniteGroup::cyclic(1)), k2, {proj});
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Axiom2Fails);
  }
}

TEST_CASE("lifts of group partial actions") {
  for (const auto& pa : {s1<Rational>(), z3_restriction<Rational>(), global_swap<Rational>()}) {
    auto p = lift_group_partial_action(pa);
    for (GroupElement g = 0; g < pa.order(); ++g) {
      for (Index i = 0; i < pa.algebra().dim(); ++i) {
        CHECK(p.act_basis(static_cast<Index>(g), pa.algebra().basis(i)) == pa.dot(g, pa.algebra().basis(i)));
      }
    }
    auto report = hopf_suite(p);
    require_all_pass(report);
    auto skew = build_skew(pa);
    require_all_pass(grouplike_iso_check(pa, skew, partial_smash(p)));
    CHECK(measured(report, "partial_smash.span", "dim_sub") == skew.dim());
  }
  auto s1_report = hopf_suite(lift_group_partial_action(s1<Rational>()));
  CHECK(measured(s1_report, "coaction.weak_coassociativity", "strict_coassociativity_failures") == 1);
  auto z3_report = hopf_suite(lift_group_partial_action(z3_restriction<Rational>()));
  CHECK(measured(z3_report, "coaction.weak_coassociativity", "strict_coassociativity_failures") == 2);
}

TEST_CASE("lifts over F_7") {
  require_all_pass(hopf_suite(lift_group_partial_action(s1<Zp>(kF7))));
}

}  // TEST_SUITE
