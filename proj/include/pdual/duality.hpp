// The map Φ: B → M_n(A), a⟦g⟧ # p_h ↦ h⁻¹·(g⁻¹·a) E_{gh,h}, with its kernel,
// its image (the corner e M_n(A) e), the splitting B = I × Ker Φ, and the
// separability idempotent of B over A *_α G.
#ifndef PDUAL_DUALITY_HPP
#define PDUAL_DUALITY_HPP

#include <string>
#include <utility>
#include <vector>

#include "pdual/smash.hpp"

namespace pdual {

template <class S>
struct DualityData {
  SmashAlgebra<S> smash;
  Algebra<S> matrices;
  MatrixIndex at;
  /// Column x is Φ of the x-th basis element of B.
  Mat<S> phi;
  /// Σ_g 1_{g⁻¹} E_{g,g}.
  Vec<S> bold_e;
  Subspace<S> kernel;
  Subspace<S> image;
  Subspace<S> ideal_i;

  const PartialAction<S>& action() const { return smash.skew().action(); }
  AlgebraMap<S> map() const { return AlgebraMap<S>(smash.algebra(), matrices, phi); }
};

namespace detail {

/// Σ_{g,h} (A c_{g,h})⟦g⟧ # p_h inside B, for c_{g,h} ∈ D_g.
template <class S, class F>
Subspace<S> graded_ideal_sum(const SmashAlgebra<S>& b, F&& generator) {
  const auto& skew = b.skew();
  const auto& pa = skew.action();
  const auto& A = pa.algebra();
  const auto& G = pa.group();
  SpanBuilder<S> builder(b.dim());
  for (GroupElement g = 0; g < G.order(); ++g) {
    for (GroupElement h = 0; h < G.order(); ++h) {
      const Vec<S> c = generator(g, h);
      for (Index i = 0; i < A.dim(); ++i) {
        Vec<S> x = skew.element(g, A.mul(A.basis(i), c));
        Vec<S> v = Vec<S>::Zero(b.dim());
        for (Index s = 0; s < skew.dim(); ++s) v(b.index(s, h)) = x(s);
        builder.insert(v);
      }
    }
  }
  return builder.build();
}

}  // namespace detail

template <class S>
DualityData<S> build_phi(const SmashAlgebra<S>& b) {
  const auto& skew = b.skew();
  const auto& pa = skew.action();
  const auto& A = pa.algebra();
  const auto& G = pa.group();
  const Index n = b.group_order();
  const Index d = A.dim();
  auto matrices = matrix_algebra(A, G);
  const MatrixIndex at{n, d};

  Mat<S> phi = Mat<S>::Zero(matrices.dim(), b.dim());
  for (Index s = 0; s < skew.dim(); ++s) {
    const auto [g, i] = skew.locate(s);
    const Vec<S> a = pa.ideal(g).basis_vector(i);
    const Vec<S> ga = pa.dot(G.inverse(g), a);
    for (GroupElement h = 0; h < G.order(); ++h) {
      const Vec<S> v = pa.dot(G.inverse(h), ga);
      phi.col(b.index(s, h)).segment(at(static_cast<Index>(G.mul(g, h)), static_cast<Index>(h), 0), d) = v;
    }
  }

  Vec<S> bold_e = Vec<S>::Zero(matrices.dim());
  for (GroupElement g = 0; g < G.order(); ++g) {
    bold_e.segment(at(static_cast<Index>(g), static_cast<Index>(g), 0), d) = pa.idempotent(G.inverse(g));
  }

  auto kernel = kernel_basis(phi);
  auto image = image_basis(phi);
  auto ideal_i = detail::graded_ideal_sum(b, [&](GroupElement g, GroupElement h) {
    return A.mul(pa.idempotent(G.mul(g, h)), pa.idempotent(g));
  });
  return DualityData<S>{b, std::move(matrices), at, std::move(phi), std::move(bold_e),
                        std::move(kernel), std::move(image), std::move(ideal_i)};
}

/// Φ multiplicative on all basis pairs of B, the composition identity
/// k⁻¹·((gh)⁻¹·(a(g·b))) = ((hk)⁻¹·(g⁻¹·a))(k⁻¹·(h⁻¹·b)) for all g, h, k and
/// basis vectors a ∈ D_g, b ∈ D_h, Φ(1_B) = e, and e² = e.
template <class S>
Report phi_check(const DualityData<S>& d) {
  const auto& pa = d.action();
  const auto& A = pa.algebra();
  const auto& G = pa.group();
  const auto& B = d.smash.algebra();
  Report report;
  report.subject = "duality map";

  Check mult("phi.multiplicative");
  auto map = d.map();
  for (Index x = 0; x < B.dim(); ++x) {
    for (Index y = 0; y < B.dim(); ++y) {
      mult.expect(map(B.mul(B.basis(x), B.basis(y))) == d.matrices.mul(d.phi.col(x), d.phi.col(y)),
                  [&] { return B.label(x) + " * " + B.label(y); });
    }
  }
  mult.measure("pairs", B.dim() * B.dim());
  report.add(std::move(mult));

  Check eq("phi.composition_identity");
  for (GroupElement g = 0; g < G.order(); ++g) {
    const auto& dg = pa.ideal(g);
    for (GroupElement h = 0; h < G.order(); ++h) {
      const auto& dh = pa.ideal(h);
      for (GroupElement k = 0; k < G.order(); ++k) {
        const GroupElement ki = G.inverse(k);
        for (Index i = 0; i < dg.dim(); ++i) {
          const Vec<S> a = dg.basis_vector(i);
          for (Index j = 0; j < dh.dim(); ++j) {
            const Vec<S> bb = dh.basis_vector(j);
            Vec<S> lhs = pa.dot(ki, pa.dot(G.inverse(G.mul(g, h)), A.mul(a, pa.dot(g, bb))));
            Vec<S> rhs = A.mul(pa.dot(G.inverse(G.mul(h, k)), pa.dot(G.inverse(g), a)),
                               pa.dot(ki, pa.dot(G.inverse(h), bb)));
            eq.expect(lhs == rhs, [&] {
              return "g=" + G.label(g) + " h=" + G.label(h) + " k=" + G.label(k) + " a=D_g[" + std::to_string(i) +
                     "] b=D_h[" + std::to_string(j) + "]";
            });
          }
        }
      }
    }
  }
  report.add(std::move(eq));

  Check unit("phi.unit_image");
  unit.expect(map(B.unit()) == d.bold_e, [] { return std::string("Φ(1_B) differs from e"); });
  report.add(std::move(unit));

  Check idem("phi.bold_e_idempotent");
  idem.expect(d.matrices.mul(d.bold_e, d.bold_e) == d.bold_e, [] { return std::string("e² ≠ e"); });
  report.add(std::move(idem));

  report.sort();
  return report;
}

/// Ker Φ by linear algebra against Σ_{g,h} A(1 - 1_{gh})1_g⟦g⟧ # p_h.
template <class S>
Subspace<S> kernel_formula(const DualityData<S>& d) {
  const auto& pa = d.action();
  const auto& A = pa.algebra();
  const auto& G = pa.group();
  return detail::graded_ideal_sum(d.smash, [&](GroupElement g, GroupElement h) {
    return A.mul(Vec<S>(A.unit() - pa.idempotent(G.mul(g, h))), pa.idempotent(g));
  });
}

template <class S>
Report kernel_check(const DualityData<S>& d) {
  Report report;
  report.subject = "kernel";
  Check check("kernel.formula");
  auto formula = kernel_formula(d);
  check.measure("dim_kernel", d.kernel.dim());
  check.measure("dim_formula", formula.dim());
  check.measure("rank_phi", d.image.dim());
  check.expect(formula == d.kernel, [&] {
    return "kernel dimension " + std::to_string(d.kernel.dim()) + ", formula dimension " +
           std::to_string(formula.dim()) + (formula.dim() == d.kernel.dim() ? ", subspaces differ" : "");
  });
  report.add(std::move(check));
  return report;
}

/// Matrices whose (g,h) entry lies in A 1_{g⁻¹} 1_{h⁻¹}.
template <class S>
Subspace<S> entry_constrained_subspace(const DualityData<S>& d) {
  const auto& pa = d.action();
  const auto& A = pa.algebra();
  const auto& G = pa.group();
  SpanBuilder<S> builder(d.matrices.dim());
  for (GroupElement g = 0; g < G.order(); ++g) {
    for (GroupElement h = 0; h < G.order(); ++h) {
      const Vec<S> c = A.mul(pa.idempotent(G.inverse(g)), pa.idempotent(G.inverse(h)));
      for (Index i = 0; i < A.dim(); ++i) {
        Vec<S> v = Vec<S>::Zero(d.matrices.dim());
        v.segment(d.at(static_cast<Index>(g), static_cast<Index>(h), 0), A.dim()) = A.mul(A.basis(i), c);
        builder.insert(v);
      }
    }
  }
  return builder.build();
}

/// span{e x e : x a basis element of M_n(A)}.
template <class S>
Subspace<S> pierce_corner(const Algebra<S>& m, const Vec<S>& e) {
  SpanBuilder<S> builder(m.dim());
  for (Index x = 0; x < m.dim(); ++x) builder.insert(m.mul(e, m.basis(x), e));
  return builder.build();
}

template <class S>
Report corner_check(const DualityData<S>& d) {
  Report report;
  report.subject = "image";
  Check check("image.corner");
  auto entries = entry_constrained_subspace(d);
  auto corner = pierce_corner(d.matrices, d.bold_e);
  check.measure("dim_image", d.image.dim());
  check.measure("dim_entrywise", entries.dim());
  check.measure("dim_corner", corner.dim());
  check.expect(d.image == entries, [&] { return std::string("image differs from entry-constrained subspace"); });
  check.expect(d.image == corner, [&] { return std::string("image differs from e M_n(A) e"); });
  check.expect(d.map()(d.smash.algebra().unit()) == d.bold_e, [] { return std::string("Φ(1_B) differs from e"); });
  report.add(std::move(check));
  return report;
}

/// B = I × Ker Φ with I = Σ_{g,h} A 1_{gh} 1_g⟦g⟧ # p_h, and Φ|_I a bijection
/// onto the corner. Also records which Kronecker delta describes left
/// multiplication of I by B.
template <class S>
Report decomposition_check(const DualityData<S>& d) {
  const auto& b = d.smash;
  const auto& B = b.algebra();
  const auto& skew = b.skew();
  const auto& pa = d.action();
  const auto& A = pa.algebra();
  const auto& G = pa.group();
  Report report;
  report.subject = "decomposition";

  Check ideals("decomposition.ideals");
  ideals.measure("dim_I", d.ideal_i.dim());
  ideals.measure("dim_kernel", d.kernel.dim());
  ideals.expect(is_two_sided_ideal(B, d.ideal_i), [] { return std::string("I is not a two-sided ideal"); });
  ideals.expect(is_two_sided_ideal(B, d.kernel), [] { return std::string("Ker Φ is not a two-sided ideal"); });
  report.add(std::move(ideals));

  Check direct("decomposition.direct_sum");
  direct.expect(sum(d.ideal_i, d.kernel).is_full(), [] { return std::string("I + Ker Φ ≠ B"); });
  direct.expect(intersect(d.ideal_i, d.kernel).is_zero_space(), [] { return std::string("I ∩ Ker Φ ≠ 0"); });
  report.add(std::move(direct));

  Check bij("decomposition.corner_bijection");
  auto image_i = image_of(d.phi, d.ideal_i);
  bij.expect(image_i == d.image, [] { return std::string("Φ(I) differs from the corner"); });
  bij.expect(image_i.dim() == d.ideal_i.dim(), [] { return std::string("Φ is not injective on I"); });
  report.add(std::move(bij));

  Check cross("decomposition.cross_products");
  for (Index i = 0; i < d.ideal_i.dim(); ++i) {
    const Vec<S> x = d.ideal_i.basis_vector(i);
    for (Index k = 0; k < d.kernel.dim(); ++k) {
      const Vec<S> y = d.kernel.basis_vector(k);
      cross.expect(is_zero_vector<S>(B.mul(x, y)) && is_zero_vector<S>(B.mul(y, x)),
                   [&] { return "I[" + std::to_string(i) + "] and Ker[" + std::to_string(k) + "]"; });
    }
  }
  report.add(std::move(cross));

  // (b⟦k⟧ # p_l)(a 1_{gh} 1_g⟦g⟧ # p_h) = b(k·(a 1_{gh} 1_g))⟦kg⟧ # δ p_h for
  // three candidate deltas; count the basis products each one gets wrong.
  Check delta("decomposition.left_multiplication_delta");
  std::int64_t wrong_l_gh = 0;
  std::int64_t wrong_k_gh = 0;
  std::int64_t wrong_h_kl = 0;
  for (GroupElement g = 0; g < G.order(); ++g) {
    for (GroupElement h = 0; h < G.order(); ++h) {
      const Vec<S> c = A.mul(pa.idempotent(G.mul(g, h)), pa.idempotent(g));
      for (Index i = 0; i < A.dim(); ++i) {
        const Vec<S> a = A.mul(A.basis(i), c);
        if (is_zero_vector<S>(a)) continue;
        const Vec<S> xa = skew.element(g, a);
        Vec<S> x = Vec<S>::Zero(b.dim());
        for (Index s = 0; s < skew.dim(); ++s) x(b.index(s, h)) = xa(s);
        for (Index t = 0; t < skew.dim(); ++t) {
          const auto [k, j] = skew.locate(t);
          const Vec<S> bb = pa.ideal(k).basis_vector(j);
          const Vec<S> prod = skew.element(G.mul(k, g), A.mul(bb, pa.dot(k, a)));
          Vec<S> placed = Vec<S>::Zero(b.dim());
          for (Index s = 0; s < skew.dim(); ++s) placed(b.index(s, h)) = prod(s);
          for (GroupElement l = 0; l < G.order(); ++l) {
            const Vec<S> actual = B.mul(B.basis(b.index(t, l)), x);
            auto predicted = [&](bool on) { return on ? placed : Vec<S>(Vec<S>::Zero(b.dim())); };
            if (actual != predicted(l == G.mul(g, h))) ++wrong_l_gh;
            if (actual != predicted(k == G.mul(g, h))) ++wrong_k_gh;
            if (actual != predicted(h == G.mul(k, l))) ++wrong_h_kl;
          }
        }
      }
    }
  }
  delta.measure("mismatches_delta_l_gh", wrong_l_gh);
  delta.measure("mismatches_delta_k_gh", wrong_k_gh);
  delta.measure("mismatches_delta_h_kl", wrong_h_kl);
  delta.expect(wrong_l_gh == 0, [] { return std::string("δ_{l,gh} does not describe B·I"); });
  report.add(std::move(delta));

  report.sort();
  return report;
}

/// Φ restricted to the embedded A *_α G has zero kernel; and for each g the
/// elements a ∈ D_g with Σ_h a⟦g⟧ # p_h in the kernel formula, already those
/// in A(1 - 1_g)1_g, are zero.
template <class S>
Report injectivity_on_skew(const DualityData<S>& d) {
  const auto& pa = d.action();
  const auto& A = pa.algebra();
  const auto& G = pa.group();
  Report report;
  report.subject = "injectivity";

  Check composite("injectivity.composite_kernel");
  auto ker = kernel_basis(Mat<S>(compose<S>(d.phi, d.smash.embedding())));
  composite.measure("dim_kernel", ker.dim());
  composite.expect(ker.is_zero_space(), [&] { return "kernel dimension " + std::to_string(ker.dim()); });
  report.add(std::move(composite));

  Check argument("injectivity.identity_component_argument");
  for (GroupElement g = 0; g < G.order(); ++g) {
    const Vec<S> c = A.mul(Vec<S>(A.unit() - pa.idempotent(g)), pa.idempotent(g));
    argument.expect(is_zero_vector<S>(c), [&] { return "(1 - 1_g)1_g ≠ 0 for g=" + G.label(g); });
    Subspace<S> common = Subspace<S>::full(A.dim());
    for (GroupElement h = 0; h < G.order(); ++h) {
      const Vec<S> ch = A.mul(Vec<S>(A.unit() - pa.idempotent(G.mul(g, h))), pa.idempotent(g));
      SpanBuilder<S> builder(A.dim());
      for (Index i = 0; i < A.dim(); ++i) builder.insert(A.mul(A.basis(i), ch));
      common = intersect(common, builder.build());
    }
    argument.expect(common.is_zero_space(), [&] { return "∩_h A(1 - 1_gh)1_g ≠ 0 for g=" + G.label(g); });
  }
  report.add(std::move(argument));
  return report;
}

/// B ⊗_R B for R = A *_α G embedded in B: the quotient of B ⊗ B (basis
/// x_i ⊗ x_j at i dim(B) + j) by the span of x r ⊗ y - x ⊗ r y.
template <class S>
class TensorOverSubring {
 public:
  TensorOverSubring(const Algebra<S>& b, const Mat<S>& subring) : b_(b), relations_(b.dim() * b.dim()) {
    const Index m = b.dim();
    for (Index r = 0; r < subring.cols(); ++r) {
      const Vec<S> rv = subring.col(r);
      std::vector<Vec<S>> right(static_cast<std::size_t>(m));
      std::vector<Vec<S>> left(static_cast<std::size_t>(m));
      for (Index x = 0; x < m; ++x) {
        right[static_cast<std::size_t>(x)] = b.mul(b.basis(x), rv);
        left[static_cast<std::size_t>(x)] = b.mul(rv, b.basis(x));
      }
      for (Index x = 0; x < m; ++x) {
        for (Index y = 0; y < m; ++y) {
          relations_.insert(Vec<S>(kron<S>(right[static_cast<std::size_t>(x)], b.basis(y)) -
                                   kron<S>(b.basis(x), left[static_cast<std::size_t>(y)])));
        }
      }
    }
  }

  Index ambient() const { return relations_.ambient(); }
  Index relations_dim() const { return relations_.dim(); }
  bool equal(const Vec<S>& u, const Vec<S>& v) const { return relations_.contains(Vec<S>(u - v)); }

  /// b (x ⊗ y) = (b x) ⊗ y.
  Vec<S> left_multiply(const Vec<S>& b, const Vec<S>& t) const { return transform(t, b, true); }
  /// (x ⊗ y) b = x ⊗ (y b).
  Vec<S> right_multiply(const Vec<S>& t, const Vec<S>& b) const { return transform(t, b, false); }
  /// μ(x ⊗ y) = x y.
  Vec<S> multiply_out(const Vec<S>& t) const {
    const Index m = b_.dim();
    Vec<S> out = Vec<S>::Zero(m);
    for (Index i = 0; i < m; ++i) {
      for (Index j = 0; j < m; ++j) {
        if (!is_zero(t(i * m + j))) out += t(i * m + j) * b_.mul(b_.basis(i), b_.basis(j));
      }
    }
    return out;
  }

 private:
  Vec<S> transform(const Vec<S>& t, const Vec<S>& b, bool left) const {
    const Index m = b_.dim();
    Vec<S> out = Vec<S>::Zero(m * m);
    for (Index i = 0; i < m; ++i) {
      for (Index j = 0; j < m; ++j) {
        if (is_zero(t(i * m + j))) continue;
        out += t(i * m + j) * (left ? kron<S>(b_.mul(b, b_.basis(i)), b_.basis(j))
                                    : kron<S>(b_.basis(i), b_.mul(b_.basis(j), b)));
      }
    }
    return out;
  }

  Algebra<S> b_;
  SpanBuilder<S> relations_;
};

/// f = Σ_g (1⟦e⟧ # p_g) ⊗ (1⟦e⟧ # p_g) commutes with every embedded a⟦h⟧ in
/// B ⊗_{A *_α G} B, and μ(f) = 1_B.
template <class S>
Report separability_check(const DualityData<S>& d) {
  const auto& b = d.smash;
  const auto& B = b.algebra();
  const auto& skew = b.skew();
  const auto& G = d.action().group();
  Report report;
  report.subject = "separability";

  TensorOverSubring<S> tensor(B, b.embedding());
  const Vec<S> one_e = skew.element(G.identity(), d.action().algebra().unit());
  Vec<S> f = Vec<S>::Zero(tensor.ambient());
  for (GroupElement g = 0; g < G.order(); ++g) {
    Vec<S> u = Vec<S>::Zero(B.dim());
    for (Index s = 0; s < skew.dim(); ++s) u(b.index(s, g)) = one_e(s);
    f += kron<S>(u, u);
  }

  Check central("separability.centralizes");
  central.measure("ambient_dim", tensor.ambient());
  central.measure("relations_dim", tensor.relations_dim());
  for (Index s = 0; s < skew.dim(); ++s) {
    const Vec<S> r = b.embedding().col(s);
    central.expect(tensor.equal(tensor.right_multiply(f, r), tensor.left_multiply(r, f)),
                   [&] { return "f · " + skew.algebra().label(s) + " ≠ " + skew.algebra().label(s) + " · f"; });
  }
  report.add(std::move(central));

  Check mu("separability.multiplication");
  mu.expect(tensor.multiply_out(f) == B.unit(), [] { return std::string("μ(f) ≠ 1_B"); });
  report.add(std::move(mu));

  report.sort();
  return report;
}

}  // namespace pdual

#endif  // PDUAL_DUALITY_HPP
