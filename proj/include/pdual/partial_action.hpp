// Partial actions of a finite group on an algebra, encoded by central
// idempotents 1_g and total endomorphisms β_g with β_g(a) = α_g(a 1_{g⁻¹}).
#ifndef PDUAL_PARTIAL_ACTION_HPP
#define PDUAL_PARTIAL_ACTION_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "pdual/algebra.hpp"
#include "pdual/report.hpp"

namespace pdual {

template <class S>
class PartialAction {
 public:
  /// Validates, in order: central idempotents, the identity axiom, that each
  /// β_g is an isomorphism D_{g⁻¹} → D_g vanishing off D_{g⁻¹}, then the
  /// intersection and composition axioms.
  static PartialAction make(FiniteGroup group, Algebra<S> algebra, std::vector<Vec<S>> idempotents,
                            std::vector<Mat<S>> beta) {
    Data data{std::move(group), std::move(algebra), std::move(idempotents), std::move(beta), {}, {}};
    validate(data);
    return PartialAction(std::make_shared<const Data>(std::move(data)));
  }

  const FiniteGroup& group() const { return data_->group; }
  const Algebra<S>& algebra() const { return data_->algebra; }
  std::size_t order() const { return data_->group.order(); }
  const Vec<S>& idempotent(GroupElement g) const { return data_->idempotents[g]; }
  const Mat<S>& beta(GroupElement g) const { return data_->beta[g]; }
  /// D_g = A 1_g.
  const Subspace<S>& ideal(GroupElement g) const { return data_->ideals[g]; }
  /// A (1 - 1_g).
  const Subspace<S>& coideal(GroupElement g) const { return data_->coideals[g]; }

  /// g·a = β_g(a).
  Vec<S> dot(GroupElement g, const Vec<S>& a) const { return apply<S>(beta(g), a); }

  bool is_global() const {
    for (GroupElement g = 0; g < order(); ++g) {
      if (idempotent(g) != algebra().unit()) return false;
    }
    return true;
  }

  std::string element_name(GroupElement g) const { return group().label(g); }

 private:
  struct Data {
    FiniteGroup group;
    Algebra<S> algebra;
    std::vector<Vec<S>> idempotents;
    std::vector<Mat<S>> beta;
    std::vector<Subspace<S>> ideals;
    std::vector<Subspace<S>> coideals;
  };

  explicit PartialAction(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  static void validate(Data& d) {
    const Algebra<S>& a = d.algebra;
    const std::size_t n = d.group.order();
    const Index dim = a.dim();
    if (d.idempotents.size() != n || d.beta.size() != n) {
      throw Error(ErrorKind::DimensionMismatch, "need one idempotent and one map per group element");
    }
    for (GroupElement g = 0; g < n; ++g) {
      if (d.idempotents[g].size() != dim || d.beta[g].rows() != dim || d.beta[g].cols() != dim) {
        throw Error(ErrorKind::DimensionMismatch, "idempotent or map shape differs from algebra dimension", {g});
      }
    }
    for (GroupElement g = 0; g < n; ++g) {
      if (auto w = central_idempotent_witness(a, d.idempotents[g])) {
        throw Error(ErrorKind::NotCentralIdempotent,
                    "1_" + d.group.label(g) +
                        (*w < 0 ? " is not idempotent" : " does not commute with " + a.label(*w)),
                    {g});
      }
      d.ideals.push_back(ideal_basis(a, d.idempotents[g]));
      d.coideals.push_back(ideal_basis(a, Vec<S>(a.unit() - d.idempotents[g])));
    }

    const GroupElement e = d.group.identity();
    if (d.idempotents[e] != a.unit()) throw Error(ErrorKind::AxiomIFails, "1_e is not the unit", {e});
    if (d.beta[e] != Mat<S>::Identity(dim, dim)) throw Error(ErrorKind::AxiomIFails, "β_e is not the identity", {e});

    for (GroupElement g = 0; g < n; ++g) check_iso(d, g);

    for (GroupElement g = 0; g < n; ++g) {
      for (GroupElement h = 0; h < n; ++h) {
        const GroupElement gi = d.group.inverse(g);
        const GroupElement gh = d.group.mul(g, h);
        auto lhs = image_of(d.beta[g], intersect(d.ideals[gi], d.ideals[h]));
        auto rhs = intersect(d.ideals[g], d.ideals[gh]);
        if (lhs != rhs) {
          throw Error(ErrorKind::AxiomIIFails,
                      "β_" + d.group.label(g) + "(D_" + d.group.label(gi) + " ∩ D_" + d.group.label(h) +
                          ") has dimension " + std::to_string(lhs.dim()) + " but D_" + d.group.label(g) + " ∩ D_" +
                          d.group.label(gh) + " has dimension " + std::to_string(rhs.dim()) +
                          (lhs.dim() == rhs.dim() ? " and they differ" : ""),
                      {g, h});
        }
      }
    }

    for (GroupElement g = 0; g < n; ++g) {
      for (GroupElement h = 0; h < n; ++h) {
        const GroupElement gh = d.group.mul(g, h);
        auto domain = intersect(d.ideals[d.group.inverse(h)], d.ideals[d.group.inverse(gh)]);
        for (Index i = 0; i < domain.dim(); ++i) {
          Vec<S> v = domain.basis_vector(i);
          if (apply<S>(d.beta[g], apply<S>(d.beta[h], v)) != apply<S>(d.beta[gh], v)) {
            throw Error(ErrorKind::AxiomIIIFails,
                        "β_" + d.group.label(g) + " β_" + d.group.label(h) + " differs from β_" + d.group.label(gh) +
                            " on basis vector " + std::to_string(i) + " of D_" +
                            d.group.label(d.group.inverse(h)) + " ∩ D_" + d.group.label(d.group.inverse(gh)),
                        {g, h, static_cast<std::size_t>(i)});
          }
        }
      }
    }
  }

  static void check_iso(const Data& d, GroupElement g) {
    const Algebra<S>& a = d.algebra;
    const GroupElement gi = d.group.inverse(g);
    const Mat<S>& b = d.beta[g];
    const std::string name = "β_" + d.group.label(g);
    const auto& off = d.coideals[gi];
    for (Index i = 0; i < off.dim(); ++i) {
      if (!is_zero_vector<S>(apply<S>(b, off.basis_vector(i)))) {
        throw Error(ErrorKind::NotIsoOnIdeal, name + " does not vanish on A(1 - 1_" + d.group.label(gi) + ")", {g});
      }
    }
    const auto& src = d.ideals[gi];
    if (src.dim() != d.ideals[g].dim() || image_of(b, src) != d.ideals[g]) {
      throw Error(ErrorKind::NotIsoOnIdeal, name + " does not map D_" + d.group.label(gi) + " onto D_" + d.group.label(g),
                  {g});
    }
    for (Index i = 0; i < src.dim(); ++i) {
      Vec<S> x = src.basis_vector(i);
      for (Index j = 0; j < src.dim(); ++j) {
        Vec<S> y = src.basis_vector(j);
        if (apply<S>(b, a.mul(x, y)) != a.mul(apply<S>(b, x), apply<S>(b, y))) {
          throw Error(ErrorKind::NotIsoOnIdeal, name + " is not multiplicative on D_" + d.group.label(gi), {g});
        }
      }
    }
  }

  std::shared_ptr<const Data> data_;
};

template <class S>
Vec<S> dot(const PartialAction<S>& pa, GroupElement g, const Vec<S>& a) {
  return pa.dot(g, a);
}

/// The dot-action identities on every group pair and basis pair:
/// g·(ab) = (g·a)(g·b), g·(h·a) = ((gh)·a)1_g, (g·a)b = g·(a(g⁻¹·b)),
/// g·1 = 1_g, g·(g⁻¹·a) = a 1_g, and ker β_g = A(1 - 1_{g⁻¹}).
template <class S>
Report verify_dot_identities(const PartialAction<S>& pa) {
  const Algebra<S>& a = pa.algebra();
  const FiniteGroup& G = pa.group();
  const std::size_t n = pa.order();
  const Index d = a.dim();
  auto gl = [&](GroupElement g) { return G.label(g); };
  auto bl = [&](Index i) { return a.label(i); };

  Report report;
  report.subject = "dot action";

  Check mult("dot.multiplicative");
  Check comp("dot.composition");
  Check twisted("dot.twisted_product");
  Check unit("dot.unit_image");
  Check inv("dot.inverse_composition");
  Check kernel("dot.kernel");

  std::vector<std::vector<Vec<S>>> dots(n, std::vector<Vec<S>>(static_cast<std::size_t>(d)));
  for (GroupElement g = 0; g < n; ++g) {
    for (Index i = 0; i < d; ++i) dots[g][static_cast<std::size_t>(i)] = pa.beta(g).col(i);
  }
  auto dt = [&](GroupElement g, Index i) -> const Vec<S>& { return dots[g][static_cast<std::size_t>(i)]; };

  std::int64_t literal_mismatch = 0;
  for (GroupElement g = 0; g < n; ++g) {
    const GroupElement gi = G.inverse(g);
    for (Index i = 0; i < d; ++i) {
      for (Index j = 0; j < d; ++j) {
        Vec<S> ab = a.mul(a.basis(i), a.basis(j));
        mult.expect(pa.dot(g, ab) == a.mul(dt(g, i), dt(g, j)),
                    [&] { return "g=" + gl(g) + " a=" + bl(i) + " b=" + bl(j); });
        twisted.expect(a.mul(dt(g, i), a.basis(j)) == pa.dot(g, a.mul(a.basis(i), dt(gi, j))),
                       [&] { return "g=" + gl(g) + " a=" + bl(i) + " b=" + bl(j); });
      }
      for (GroupElement h = 0; h < n; ++h) {
        comp.expect(pa.dot(g, dt(h, i)) == a.mul(dt(G.mul(g, h), i), pa.idempotent(g)),
                    [&] { return "g=" + gl(g) + " h=" + gl(h) + " a=" + bl(i); });
      }
      inv.expect(pa.dot(g, dt(gi, i)) == a.mul(a.basis(i), pa.idempotent(g)),
                 [&] { return "g=" + gl(g) + " a=" + bl(i); });
    }
    unit.expect(pa.dot(g, a.unit()) == pa.idempotent(g), [&] { return "g=" + gl(g); });
    auto ker = kernel_basis(pa.beta(g));
    kernel.expect(ker == pa.coideal(gi), [&] {
      return "g=" + gl(g) + " dim ker=" + std::to_string(ker.dim()) + " dim A(1-1_g⁻¹)=" +
             std::to_string(pa.coideal(gi).dim());
    });
    if (ker != pa.coideal(g)) ++literal_mismatch;
  }
  // How often the kernel differs from A(1 - 1_g) with g in place of g⁻¹;
  // nonzero exactly when some 1_g differs from 1_{g⁻¹}.
  kernel.measure("kernel_vs_A(1-1_g)_mismatches", literal_mismatch);

  for (auto* c : {&mult, &comp, &twisted, &unit, &inv, &kernel}) report.add(std::move(*c));
  report.sort();
  return report;
}

/// All 1_g = 1 and β_g = σ_g for a family of algebra automorphisms.
template <class S>
PartialAction<S> global_action(const FiniteGroup& group, const Algebra<S>& algebra, std::vector<Mat<S>> automorphisms) {
  std::vector<Vec<S>> ones(group.order(), algebra.unit());
  return PartialAction<S>::make(group, algebra, std::move(ones), std::move(automorphisms));
}

/// The restriction of a global action on B to the ideal A = B e:
/// 1_g = e σ_g(e), β_g(a) = e σ_g(a). A carries the echelon basis of B e.
template <class S>
struct RestrictedAction {
  PartialAction<S> action;
  /// Column i is the i-th basis vector of A inside B.
  Mat<S> inclusion;
};

template <class S>
RestrictedAction<S> restrict_global(const PartialAction<S>& global, const Vec<S>& e) {
  if (!global.is_global()) throw Error(ErrorKind::NotGlobal, "restriction needs a global action");
  const Algebra<S>& b = global.algebra();
  auto ideal = ideal_algebra(b, e);
  const Algebra<S>& a = ideal.algebra;
  const std::size_t n = global.order();
  std::vector<Vec<S>> idempotents;
  std::vector<Mat<S>> beta;
  for (GroupElement g = 0; g < n; ++g) {
    auto one_g = ideal.ideal.coordinates(b.mul(e, global.dot(g, e)));
    if (!one_g) throw Error(ErrorKind::InternalFailure, "e σ_g(e) outside B e");
    idempotents.push_back(*one_g);
    Mat<S> m(a.dim(), a.dim());
    for (Index i = 0; i < a.dim(); ++i) {
      auto image = ideal.ideal.coordinates(b.mul(e, global.dot(g, ideal.ideal.basis_vector(i))));
      if (!image) throw Error(ErrorKind::InternalFailure, "e σ_g(a) outside B e");
      m.col(i) = *image;
    }
    beta.push_back(std::move(m));
  }
  return {PartialAction<S>::make(global.group(), a, std::move(idempotents), std::move(beta)), ideal.inclusion};
}

/// On A = R × S: 1_g = (1_R, 0) and β_g projects onto R for g ≠ e.
template <class S>
PartialAction<S> trivial_from_split(const Algebra<S>& r, const Algebra<S>& s, const FiniteGroup& group) {
  auto product = direct_product(r, s);
  const Algebra<S>& a = product.algebra;
  Vec<S> one_r = Vec<S>::Zero(a.dim());
  one_r.head(r.dim()) = r.unit();
  Mat<S> project = Mat<S>::Zero(a.dim(), a.dim());
  for (Index i = 0; i < r.dim(); ++i) project(i, i) = a.scalar(1);
  std::vector<Vec<S>> idempotents;
  std::vector<Mat<S>> beta;
  for (GroupElement g = 0; g < group.order(); ++g) {
    const bool identity = g == group.identity();
    idempotents.push_back(identity ? a.unit() : one_r);
    beta.push_back(identity ? Mat<S>(Mat<S>::Identity(a.dim(), a.dim())) : project);
  }
  return PartialAction<S>::make(group, a, std::move(idempotents), std::move(beta));
}

}  // namespace pdual

#endif  // PDUAL_PARTIAL_ACTION_HPP
