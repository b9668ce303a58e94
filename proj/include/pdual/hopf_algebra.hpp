// Finite-dimensional Hopf algebras by structure constants, their duals, the
// harpoon actions of H* on H, and smash products A # H for an H-action on A.
#ifndef PDUAL_HOPF_ALGEBRA_HPP
#define PDUAL_HOPF_ALGEBRA_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pdual/algebra.hpp"
#include "pdual/report.hpp"

namespace pdual {

/// Δ(b_i) = Σ c^i_{kl} b_k ⊗ b_l is stored as column i of an n² × n matrix,
/// row k n + l. The counit is the vector of ε(b_i).
template <class S>
class HopfAlgebra {
 public:
  struct CoTerm {
    Index left;
    Index right;
    S coeff;
  };

  /// Checks coassociativity, the counit laws, that Δ and ε are unital algebra
  /// maps, the antipode law, and that S is invertible.
  static HopfAlgebra make(Algebra<S> algebra, Mat<S> coproduct, Vec<S> counit, Mat<S> antipode) {
    const Index n = algebra.dim();
    if (coproduct.rows() != n * n || coproduct.cols() != n || counit.size() != n || antipode.rows() != n ||
        antipode.cols() != n) {
      throw Error(ErrorKind::DimensionMismatch, "Hopf structure constants have inconsistent shapes");
    }
    HopfAlgebra h(std::move(algebra), std::move(coproduct), std::move(counit), std::move(antipode));
    h.validate();
    return h;
  }

  const Algebra<S>& algebra() const { return algebra_; }
  Index dim() const { return algebra_.dim(); }
  const Field& field() const { return algebra_.field(); }
  const Mat<S>& coproduct() const { return coproduct_; }
  const Vec<S>& counit() const { return counit_; }
  const Mat<S>& antipode() const { return antipode_; }
  const Mat<S>& antipode_inverse() const { return antipode_inverse_; }
  const std::vector<CoTerm>& coproduct_terms(Index i) const { return coterms_[static_cast<std::size_t>(i)]; }
  const Vec<S>& unit() const { return algebra_.unit(); }
  Vec<S> basis(Index i) const { return algebra_.basis(i); }
  Vec<S> mul(const Vec<S>& x, const Vec<S>& y) const { return algebra_.mul(x, y); }

  /// Δ(x) in coordinates k n + l.
  Vec<S> delta(const Vec<S>& x) const { return apply<S>(coproduct_, x); }
  S epsilon(const Vec<S>& x) const {
    S out = algebra_.scalar(0);
    for (Index i = 0; i < dim(); ++i) {
      if (!is_zero(x(i))) out += x(i) * counit_(i);
    }
    return out;
  }

 private:
  HopfAlgebra(Algebra<S> algebra, Mat<S> coproduct, Vec<S> counit, Mat<S> antipode)
      : algebra_(std::move(algebra)),
        coproduct_(std::move(coproduct)),
        counit_(std::move(counit)),
        antipode_(std::move(antipode)) {
    const Index n = dim();
    coterms_.resize(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) {
      for (Index r = 0; r < n * n; ++r) {
        if (!is_zero(coproduct_(r, i))) coterms_[static_cast<std::size_t>(i)].push_back({r / n, r % n, coproduct_(r, i)});
      }
    }
  }

  static Error axiom(const std::string& law, Index i) {
    return Error(ErrorKind::HopfAxiomFails, law + " fails on basis element " + std::to_string(i),
                 {static_cast<std::size_t>(i)});
  }

  void validate() {
    const Index n = dim();
    if (!algebra_.has_unit()) throw Error(ErrorKind::HopfAxiomFails, "underlying algebra has no unit");
    auto tensor = tensor_product(algebra_, algebra_);
    for (Index i = 0; i < n; ++i) {
      // (Δ ⊗ 1)Δ and (1 ⊗ Δ)Δ in coordinates (k n + l) n + m.
      Vec<S> left = Vec<S>::Zero(n * n * n);
      Vec<S> right = Vec<S>::Zero(n * n * n);
      for (const auto& t : coproduct_terms(i)) {
        for (const auto& u : coproduct_terms(t.left)) left((u.left * n + u.right) * n + t.right) += t.coeff * u.coeff;
        for (const auto& u : coproduct_terms(t.right)) right((t.left * n + u.left) * n + u.right) += t.coeff * u.coeff;
      }
      if (left != right) throw axiom("coassociativity", i);

      Vec<S> counit_left = Vec<S>::Zero(n);
      Vec<S> counit_right = Vec<S>::Zero(n);
      for (const auto& t : coproduct_terms(i)) {
        counit_left(t.right) += counit_(t.left) * t.coeff;
        counit_right(t.left) += counit_(t.right) * t.coeff;
      }
      if (counit_left != basis(i) || counit_right != basis(i)) throw axiom("counit law", i);

      for (Index j = 0; j < n; ++j) {
        Vec<S> bij = mul(basis(i), basis(j));
        if (delta(bij) != tensor.mul(delta(basis(i)), delta(basis(j)))) {
          throw Error(ErrorKind::HopfAxiomFails, "Δ is not multiplicative on (" + std::to_string(i) + "," +
                                                     std::to_string(j) + ")",
                      {static_cast<std::size_t>(i), static_cast<std::size_t>(j)});
        }
        if (epsilon(bij) != counit_(i) * counit_(j)) {
          throw Error(ErrorKind::HopfAxiomFails, "ε is not multiplicative on (" + std::to_string(i) + "," +
                                                     std::to_string(j) + ")",
                      {static_cast<std::size_t>(i), static_cast<std::size_t>(j)});
        }
      }

      Vec<S> s_left = Vec<S>::Zero(n);
      Vec<S> s_right = Vec<S>::Zero(n);
      for (const auto& t : coproduct_terms(i)) {
        s_left += t.coeff * mul(antipode_.col(t.left), basis(t.right));
        s_right += t.coeff * mul(basis(t.left), antipode_.col(t.right));
      }
      Vec<S> target = counit_(i) * unit();
      if (s_left != target || s_right != target) throw axiom("antipode law", i);
    }
    if (delta(unit()) != kron<S>(unit(), unit())) throw Error(ErrorKind::HopfAxiomFails, "Δ(1) differs from 1 ⊗ 1");
    if (epsilon(unit()) != algebra_.scalar(1)) throw Error(ErrorKind::HopfAxiomFails, "ε(1) differs from 1");

    Mat<S> augmented(n, 2 * n);
    augmented.leftCols(n) = antipode_;
    augmented.rightCols(n) = Mat<S>::Identity(n, n);
    auto pivots = rref_in_place(augmented);
    if (static_cast<Index>(pivots.size()) < n || pivots[static_cast<std::size_t>(n - 1)] != n - 1) {
      throw Error(ErrorKind::AntipodeNotInvertible, "antipode matrix is singular");
    }
    antipode_inverse_ = augmented.rightCols(n);
  }

  Algebra<S> algebra_;
  Mat<S> coproduct_;
  Vec<S> counit_;
  Mat<S> antipode_;
  Mat<S> antipode_inverse_;
  std::vector<std::vector<CoTerm>> coterms_;
};

/// k[G] with grouplike coproduct Δ(g) = g ⊗ g, ε(g) = 1, S(g) = g⁻¹.
template <class S>
HopfAlgebra<S> group_hopf(const Field& field, const FiniteGroup& g) {
  auto algebra = group_algebra<S>(field, g);
  const auto n = static_cast<Index>(g.order());
  Mat<S> coproduct = Mat<S>::Zero(n * n, n);
  Vec<S> counit(n);
  Mat<S> antipode = Mat<S>::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    coproduct(i * n + i, i) = algebra.scalar(1);
    counit(i) = algebra.scalar(1);
    antipode(static_cast<Index>(g.inverse(static_cast<GroupElement>(i))), i) = algebra.scalar(1);
  }
  return HopfAlgebra<S>::make(std::move(algebra), std::move(coproduct), std::move(counit), std::move(antipode));
}

/// H* on the dual basis p_i: p_k p_l = Σ c^i_{kl} p_i, Δ(p_i) = Σ m^i_{kl} p_k ⊗ p_l,
/// unit ε_H, counit f ↦ f(1), antipode S^T.
template <class S>
HopfAlgebra<S> dual(const HopfAlgebra<S>& h) {
  const Algebra<S>& a = h.algebra();
  std::vector<std::string> labels;
  for (Index i = 0; i < h.dim(); ++i) labels.push_back("p_" + a.label(i));
  auto algebra = Algebra<S>::make(a.field(), h.coproduct().transpose(), h.counit(), std::move(labels));
  return HopfAlgebra<S>::make(std::move(algebra), a.table().transpose(), a.unit(), h.antipode().transpose());
}

/// f ⇀ x = Σ x_1 f(x_2), with f given on the dual basis.
template <class S>
Vec<S> left_harpoon(const HopfAlgebra<S>& h, const Vec<S>& f, const Vec<S>& x) {
  Vec<S> out = Vec<S>::Zero(h.dim());
  for (Index i = 0; i < h.dim(); ++i) {
    if (is_zero(x(i))) continue;
    for (const auto& t : h.coproduct_terms(i)) {
      if (!is_zero(f(t.right))) out(t.left) += x(i) * t.coeff * f(t.right);
    }
  }
  return out;
}

/// x ↼ f = Σ f(x_1) x_2.
template <class S>
Vec<S> right_harpoon(const HopfAlgebra<S>& h, const Vec<S>& x, const Vec<S>& f) {
  Vec<S> out = Vec<S>::Zero(h.dim());
  for (Index i = 0; i < h.dim(); ++i) {
    if (is_zero(x(i))) continue;
    for (const auto& t : h.coproduct_terms(i)) {
      if (!is_zero(f(t.left))) out(t.right) += x(i) * t.coeff * f(t.left);
    }
  }
  return out;
}

enum class HarpoonSide { left, right };

template <class S>
Vec<S> harpoon(const HopfAlgebra<S>& h, HarpoonSide side, const Vec<S>& f, const Vec<S>& x) {
  return side == HarpoonSide::left ? left_harpoon(h, f, x) : right_harpoon(h, x, f);
}

/// A linear H-action on an algebra: act[i] is the matrix of a ↦ b_i · a.
template <class S>
using ActionMatrices = std::vector<Mat<S>>;

template <class S>
Vec<S> act_on(const ActionMatrices<S>& act, const Vec<S>& h, const Vec<S>& a) {
  Vec<S> out = Vec<S>::Zero(a.size());
  for (Index i = 0; i < h.size(); ++i) {
    if (!is_zero(h(i))) out += h(i) * apply<S>(act[static_cast<std::size_t>(i)], a);
  }
  return out;
}

/// Structure constants of (a # h)(b # k) = Σ a(h_1 · b) # h_2 k on A ⊗ H,
/// basis a_i # b_j at index i dim(H) + j.
template <class S>
ProductTable<S> smash_table(const Algebra<S>& a, const HopfAlgebra<S>& h, const ActionMatrices<S>& act) {
  const Index da = a.dim();
  const Index dh = h.dim();
  const Index d = da * dh;
  ProductTable<S> t = empty_table<S>(d);
  for (Index i = 0; i < da; ++i) {
    for (Index x = 0; x < dh; ++x) {
      for (Index j = 0; j < da; ++j) {
        for (const auto& co : h.coproduct_terms(x)) {
          Vec<S> left = a.mul(a.basis(i), act[static_cast<std::size_t>(co.left)].col(j));
          if (is_zero_vector<S>(left)) continue;
          for (Index y = 0; y < dh; ++y) {
            for (const auto& m : h.algebra().product_terms(co.right, y)) {
              const S c = co.coeff * m.coeff;
              for (Index r = 0; r < da; ++r) {
                if (!is_zero(left(r))) t(r * dh + m.basis, (i * dh + x) * d + j * dh + y) += c * left(r);
              }
            }
          }
        }
      }
    }
  }
  return t;
}

/// Labels a_i#h_j for a smash or tensor basis.
template <class S>
std::vector<std::string> smash_labels(const Algebra<S>& a, const Algebra<S>& h) {
  std::vector<std::string> labels;
  for (Index i = 0; i < a.dim(); ++i) {
    for (Index j = 0; j < h.dim(); ++j) labels.push_back(a.label(i) + "#" + h.label(j));
  }
  return labels;
}

/// The module-algebra laws for an H-action on A: h·(ab) = Σ (h_1·a)(h_2·b),
/// h·1 = ε(h)1, 1_H·a = a and (hk)·a = h·(k·a), on all basis elements.
template <class S>
Check module_algebra_check(const std::string& name, const Algebra<S>& a, const HopfAlgebra<S>& h,
                           const ActionMatrices<S>& act) {
  Check check(name);
  const auto& hl = h.algebra();
  for (Index x = 0; x < h.dim(); ++x) {
    const Mat<S>& m = act[static_cast<std::size_t>(x)];
    for (Index i = 0; i < a.dim(); ++i) {
      for (Index j = 0; j < a.dim(); ++j) {
        Vec<S> lhs = apply<S>(m, a.mul(a.basis(i), a.basis(j)));
        Vec<S> rhs = Vec<S>::Zero(a.dim());
        for (const auto& t : h.coproduct_terms(x)) {
          rhs += t.coeff * a.mul(act[static_cast<std::size_t>(t.left)].col(i),
                                 act[static_cast<std::size_t>(t.right)].col(j));
        }
        check.expect(lhs == rhs, [&] { return "h=" + hl.label(x) + " a=" + a.label(i) + " b=" + a.label(j); });
      }
      for (Index y = 0; y < h.dim(); ++y) {
        Vec<S> lhs = act_on(act, hl.mul(h.basis(x), h.basis(y)), a.basis(i));
        Vec<S> rhs = apply<S>(m, act[static_cast<std::size_t>(y)].col(i));
        check.expect(lhs == rhs, [&] { return "(hk)·a: h=" + hl.label(x) + " k=" + hl.label(y) + " a=" + a.label(i); });
      }
    }
    check.expect(apply<S>(m, a.unit()) == h.counit()(x) * a.unit(), [&] { return "h·1: h=" + hl.label(x); });
  }
  for (Index i = 0; i < a.dim(); ++i) {
    check.expect(act_on(act, h.unit(), a.basis(i)) == a.basis(i), [&] { return "1·a: a=" + a.label(i); });
  }
  return check;
}

/// A # H for a genuine module algebra; unit 1_A # 1_H.
template <class S>
Algebra<S> smash_product(const Algebra<S>& a, const HopfAlgebra<S>& h, const ActionMatrices<S>& act) {
  return Algebra<S>::make(a.field(), smash_table(a, h, act), kron<S>(a.unit(), h.unit()),
                          smash_labels(a, h.algebra()));
}

}  // namespace pdual

#endif  // PDUAL_HOPF_ALGEBRA_HPP
