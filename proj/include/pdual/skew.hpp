// The partial skew group ring A *_α G = ⊕_g D_g⟦g⟧ with
// (a⟦g⟧)(b⟦h⟧) = a (g·b)⟦gh⟧, materialised as a structure-constant algebra.
#ifndef PDUAL_SKEW_HPP
#define PDUAL_SKEW_HPP

#include <string>
#include <utility>
#include <vector>

#include "pdual/partial_action.hpp"

namespace pdual {

template <class S>
std::string vector_label(const Vec<S>& v) {
  std::string out = "(";
  for (Index i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string<S>(v(i));
  return out + ")";
}

/// Basis vector (g, i) is the i-th echelon basis vector of D_g tagged by g;
/// its index is offset(g) + i.
template <class S>
class SkewGroupRing {
 public:
  explicit SkewGroupRing(PartialAction<S> pa) : pa_(std::move(pa)) {
    const std::size_t n = pa_.order();
    const Algebra<S>& a = pa_.algebra();
    Index total = 0;
    for (GroupElement g = 0; g < n; ++g) {
      offsets_.push_back(total);
      total += pa_.ideal(g).dim();
    }
    ProductTable<S> t = empty_table<S>(total);
    std::vector<std::string> labels;
    for (GroupElement g = 0; g < n; ++g) {
      const auto& dg = pa_.ideal(g);
      for (Index i = 0; i < dg.dim(); ++i) {
        labels.push_back(vector_label<S>(dg.basis_vector(i)) + "⟦" + pa_.group().label(g) + "⟧");
        for (GroupElement h = 0; h < n; ++h) {
          const auto& dh = pa_.ideal(h);
          for (Index j = 0; j < dh.dim(); ++j) {
            const GroupElement gh = pa_.group().mul(g, h);
            Vec<S> product = a.mul(dg.basis_vector(i), pa_.dot(g, dh.basis_vector(j)));
            auto coords = pa_.ideal(gh).coordinates(product);
            if (!coords) {
              throw Error(ErrorKind::InternalFailure, "a(g·b) outside D_gh", {g, h, static_cast<std::size_t>(i),
                                                                            static_cast<std::size_t>(j)});
            }
            t.col((offsets_[g] + i) * total + offsets_[h] + j).segment(offsets_[gh], coords->size()) = *coords;
          }
        }
      }
    }
    Vec<S> unit = Vec<S>::Zero(total);
    const GroupElement e = pa_.group().identity();
    unit.segment(offsets_[e], a.dim()) = *pa_.ideal(e).coordinates(a.unit());
    try {
      algebra_ = Algebra<S>::make(a.field(), std::move(t), std::move(unit), std::move(labels));
    } catch (const Error& err) {
      throw Error(ErrorKind::InternalFailure, std::string("skew group ring failed validation: ") + err.what(),
                  err.witness());
    }
    for (GroupElement g = 0; g < n; ++g) {
      Mat<S> rows = Mat<S>::Zero(pa_.ideal(g).dim(), total);
      for (Index i = 0; i < rows.rows(); ++i) rows(i, offsets_[g] + i) = a.scalar(1);
      components_.push_back(Subspace<S>::span_rows(total, rows));
    }
    embedding_ = Mat<S>::Zero(total, a.dim());
    for (Index i = 0; i < a.dim(); ++i) embedding_.col(i) = element(e, a.basis(i));
  }

  const PartialAction<S>& action() const { return pa_; }
  const Algebra<S>& algebra() const { return *algebra_; }
  Index dim() const { return algebra_->dim(); }
  Index offset(GroupElement g) const { return offsets_[g]; }
  /// The g-th homogeneous component D_g⟦g⟧.
  const Subspace<S>& component(GroupElement g) const { return components_[g]; }
  /// A → A *_α G, a ↦ a⟦e⟧.
  const Mat<S>& embedding() const { return embedding_; }

  /// Coordinates of a⟦g⟧; a must lie in D_g.
  Vec<S> element(GroupElement g, const Vec<S>& a) const {
    auto coords = pa_.ideal(g).coordinates(a);
    if (!coords) throw Error(ErrorKind::DimensionMismatch, "element outside D_" + pa_.group().label(g), {g});
    Vec<S> out = Vec<S>::Zero(dim());
    out.segment(offsets_[g], coords->size()) = *coords;
    return out;
  }

  /// The D_g entry of x, as an element of A.
  Vec<S> entry(const Vec<S>& x, GroupElement g) const {
    return pa_.ideal(g).from_coordinates(x.segment(offsets_[g], pa_.ideal(g).dim()));
  }

  /// Group element and position within D_g of basis index s.
  std::pair<GroupElement, Index> locate(Index s) const {
    GroupElement g = 0;
    while (g + 1 < offsets_.size() && offsets_[g + 1] <= s) ++g;
    return {g, s - offsets_[g]};
  }

  Vec<S> mul(const Vec<S>& x, const Vec<S>& y) const { return algebra_->mul(x, y); }

 private:
  PartialAction<S> pa_;
  std::optional<Algebra<S>> algebra_;
  std::vector<Index> offsets_;
  std::vector<Subspace<S>> components_;
  Mat<S> embedding_;
};

template <class S>
SkewGroupRing<S> build_skew(const PartialAction<S>& pa) {
  return SkewGroupRing<S>(pa);
}

template <class S>
Vec<S> skew_mul(const SkewGroupRing<S>& s, const Vec<S>& x, const Vec<S>& y) {
  return s.mul(x, y);
}

/// span{xy : x ∈ component_g, y ∈ component_h}.
template <class S>
Subspace<S> component_product(const SkewGroupRing<S>& s, GroupElement g, GroupElement h) {
  SpanBuilder<S> builder(s.dim());
  const auto& cg = s.component(g);
  const auto& ch = s.component(h);
  for (Index i = 0; i < cg.dim(); ++i) {
    for (Index j = 0; j < ch.dim(); ++j) builder.insert(s.mul(cg.basis_vector(i), ch.basis_vector(j)));
  }
  return builder.build();
}

/// Inclusion component_g component_h ⊆ component_gh, directness of the sum,
/// and that a ↦ a⟦e⟧ is a unital algebra embedding.
template <class S>
Report grading_check(const SkewGroupRing<S>& s) {
  const auto& G = s.action().group();
  Report report;
  report.subject = "grading";

  Check inclusion("grading.inclusion");
  for (GroupElement g = 0; g < G.order(); ++g) {
    for (GroupElement h = 0; h < G.order(); ++h) {
      inclusion.expect(contains(s.component(G.mul(g, h)), component_product(s, g, h)),
                       [&] { return "g=" + G.label(g) + " h=" + G.label(h); });
    }
  }
  report.add(std::move(inclusion));

  Check direct("grading.direct_sum");
  Index total = 0;
  SpanBuilder<S> builder(s.dim());
  for (GroupElement g = 0; g < G.order(); ++g) {
    total += s.component(g).dim();
    builder.insert_rows(s.component(g).basis());
  }
  direct.measure("dim_skew", s.dim());
  direct.expect(total == s.dim() && builder.dim() == s.dim(), [&] {
    return "component dimensions sum to " + std::to_string(total) + ", span has dimension " +
           std::to_string(builder.dim()) + ", algebra has dimension " + std::to_string(s.dim());
  });
  report.add(std::move(direct));

  Check identity("grading.identity_component");
  AlgebraMap<S> embed(s.action().algebra(), s.algebra(), s.embedding());
  auto w = embed.multiplicativity_witness();
  identity.expect(!w, [&] { return "a=" + s.action().algebra().label(w->first) + " b=" +
                                   s.action().algebra().label(w->second); });
  identity.expect(embed.is_unital(), [] { return std::string("1 ↦ 1⟦e⟧ fails"); });
  identity.expect(embed.is_injective() && image_basis(s.embedding()) == s.component(G.identity()),
                  [] { return std::string("embedding is not onto the identity component"); });
  report.add(std::move(identity));

  report.sort();
  return report;
}

struct StrongGrading {
  bool strong = false;
  bool global = false;
  bool agree = false;
};

/// strong: component_g component_h = component_gh for all g, h;
/// global: every 1_g = 1. The two must agree.
template <class S>
StrongGrading strong_grading_test(const SkewGroupRing<S>& s) {
  const auto& G = s.action().group();
  StrongGrading out;
  out.strong = true;
  for (GroupElement g = 0; g < G.order() && out.strong; ++g) {
    for (GroupElement h = 0; h < G.order() && out.strong; ++h) {
      out.strong = component_product(s, g, h) == s.component(G.mul(g, h));
    }
  }
  out.global = s.action().is_global();
  out.agree = out.strong == out.global;
  return out;
}

}  // namespace pdual

#endif  // PDUAL_SKEW_HPP
