// B = (A *_α G) # k[G]*, where p_h acts on A *_α G by projecting onto the
// h-component.
#ifndef PDUAL_SMASH_HPP
#define PDUAL_SMASH_HPP

#include <optional>
#include <utility>
#include <vector>

#include "pdual/hopf_algebra.hpp"
#include "pdual/skew.hpp"

namespace pdual {

/// Basis x_s # p_h at index s n + h, x_s running over the basis of A *_α G.
template <class S>
class SmashAlgebra {
 public:
  explicit SmashAlgebra(SkewGroupRing<S> skew)
      : skew_(std::move(skew)),
        dual_group_(dual(group_hopf<S>(skew_.algebra().field(), skew_.action().group()))) {
    const auto& G = skew_.action().group();
    const Index ds = skew_.dim();
    for (GroupElement h = 0; h < G.order(); ++h) {
      Mat<S> projection = Mat<S>::Zero(ds, ds);
      const Index off = skew_.offset(h);
      for (Index i = 0; i < skew_.component(h).dim(); ++i) projection(off + i, off + i) = skew_.algebra().scalar(1);
      action_.push_back(std::move(projection));
    }
    module_check_ = module_algebra_check("smash.module_algebra", skew_.algebra(), dual_group_, action_);
    if (!module_check_.passed()) {
      throw Error(ErrorKind::InternalFailure, "projection action is not a module-algebra action: " +
                                                  module_check_.witnesses.front());
    }
    try {
      algebra_ = smash_product(skew_.algebra(), dual_group_, action_);
    } catch (const Error& err) {
      throw Error(ErrorKind::InternalFailure, std::string("smash product failed validation: ") + err.what(),
                  err.witness());
    }
    const Index n = static_cast<Index>(G.order());
    embedding_ = Mat<S>::Zero(algebra_->dim(), ds);
    for (Index s = 0; s < ds; ++s) {
      for (Index h = 0; h < n; ++h) embedding_(s * n + h, s) = skew_.algebra().scalar(1);
    }
  }

  const SkewGroupRing<S>& skew() const { return skew_; }
  const HopfAlgebra<S>& dual_group() const { return dual_group_; }
  const ActionMatrices<S>& action() const { return action_; }
  const Algebra<S>& algebra() const { return *algebra_; }
  Index dim() const { return algebra_->dim(); }
  Index group_order() const { return static_cast<Index>(skew_.action().order()); }
  Index index(Index s, GroupElement h) const { return s * group_order() + static_cast<Index>(h); }
  /// x ↦ Σ_h x # p_h.
  const Mat<S>& embedding() const { return embedding_; }
  const Check& module_check() const { return module_check_; }

  Vec<S> mul(const Vec<S>& x, const Vec<S>& y) const { return algebra_->mul(x, y); }

 private:
  SkewGroupRing<S> skew_;
  HopfAlgebra<S> dual_group_;
  ActionMatrices<S> action_;
  Check module_check_;
  std::optional<Algebra<S>> algebra_;
  Mat<S> embedding_;
};

template <class S>
SmashAlgebra<S> build_smash(const SkewGroupRing<S>& skew) {
  return SmashAlgebra<S>(skew);
}

template <class S>
Vec<S> smash_mul(const SmashAlgebra<S>& b, const Vec<S>& x, const Vec<S>& y) {
  return b.mul(x, y);
}

template <class S>
AlgebraMap<S> embed_skew(const SmashAlgebra<S>& b) {
  return AlgebraMap<S>(b.skew().algebra(), b.algebra(), b.embedding());
}

/// Compares the generic smash product with the closed form
/// (a⟦g⟧ # p_h)(b⟦k⟧ # p_l) = a(g·b)⟦gk⟧ # δ_{h,kl} p_l on every basis pair,
/// checks dimension and unit, and that the embedding of A *_α G is an
/// injective unital algebra map.
template <class S>
Report smash_check(const SmashAlgebra<S>& b) {
  const auto& skew = b.skew();
  const auto& pa = skew.action();
  const auto& G = pa.group();
  const auto& A = pa.algebra();
  const Index n = b.group_order();
  Report report;
  report.subject = "smash product";

  Check closed("smash.closed_form");
  for (Index s = 0; s < skew.dim(); ++s) {
    const auto [g, i] = skew.locate(s);
    const Vec<S> a = pa.ideal(g).basis_vector(i);
    for (Index t = 0; t < skew.dim(); ++t) {
      const auto [k, j] = skew.locate(t);
      const Vec<S> bb = pa.ideal(k).basis_vector(j);
      const Vec<S> prod = skew.element(G.mul(g, k), A.mul(a, pa.dot(g, bb)));
      for (GroupElement h = 0; h < G.order(); ++h) {
        for (GroupElement l = 0; l < G.order(); ++l) {
          Vec<S> expected = Vec<S>::Zero(b.dim());
          if (h == G.mul(k, l)) {
            for (Index r = 0; r < skew.dim(); ++r) expected(b.index(r, l)) = prod(r);
          }
          const Vec<S> got = b.mul(b.algebra().basis(b.index(s, h)), b.algebra().basis(b.index(t, l)));
          closed.expect(got == expected, [&] {
            return b.algebra().label(b.index(s, h)) + " * " + b.algebra().label(b.index(t, l));
          });
        }
      }
    }
  }
  report.add(std::move(closed));

  Check unit("smash.unit");
  Vec<S> expected_unit = Vec<S>::Zero(b.dim());
  for (GroupElement h = 0; h < G.order(); ++h) {
    expected_unit += b.algebra().scalar(1) *
                     kron<S>(skew.element(G.identity(), A.unit()), b.dual_group().basis(static_cast<Index>(h)));
  }
  unit.measure("dim_smash", b.dim());
  unit.expect(b.algebra().unit() == expected_unit, [] { return std::string("unit differs from Σ_h 1⟦e⟧#p_h"); });
  unit.expect(b.dim() == skew.dim() * n, [] { return std::string("dimension differs from dim(skew)·|G|"); });
  report.add(std::move(unit));

  report.add(b.module_check());

  Check embed("smash.embedding");
  auto map = embed_skew(b);
  auto w = map.multiplicativity_witness();
  embed.expect(!w, [&] { return skew.algebra().label(w->first) + " * " + skew.algebra().label(w->second); });
  embed.expect(map.is_unital(), [] { return std::string("1 does not map to 1_B"); });
  embed.expect(map.is_injective(), [] { return std::string("embedding has a kernel"); });
  report.add(std::move(embed));

  report.sort();
  return report;
}

}  // namespace pdual

#endif  // PDUAL_SMASH_HPP
