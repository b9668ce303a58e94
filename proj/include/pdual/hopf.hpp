// Partial Hopf actions: the action axioms, the representations λ and ρ of
// H # H* and H* # H on H, the partial coaction, the maps φ and ψ into
// A ⊗ End(H), the partial smash product and the map Φ on (A ⊗ H) # H*.
#ifndef PDUAL_HOPF_HPP
#define PDUAL_HOPF_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pdual/duality.hpp"
#include "pdual/hopf_algebra.hpp"
#include "pdual/partial_action.hpp"

namespace pdual {

/// A linear map H ⊗ A → A, given by the matrices of a ↦ b_i · a, satisfying
/// h·(ab) = Σ (h_1·a)(h_2·b), 1_H·a = a and h·(g·a) = Σ (h_1·1)((h_2 g)·a).
template <class S>
class PartialHopfAction {
 public:
  static PartialHopfAction make(HopfAlgebra<S> h, Algebra<S> a, ActionMatrices<S> act) {
    require_same_field(h.algebra(), a);
    if (static_cast<Index>(act.size()) != h.dim()) {
      throw Error(ErrorKind::DimensionMismatch, "need one action matrix per basis element of H");
    }
    for (const auto& m : act) {
      if (m.rows() != a.dim() || m.cols() != a.dim()) throw Error(ErrorKind::DimensionMismatch, "action matrix shape");
    }
    PartialHopfAction p(std::move(h), std::move(a), std::move(act));
    p.validate();
    return p;
  }

  const HopfAlgebra<S>& hopf() const { return h_; }
  const Algebra<S>& algebra() const { return a_; }
  const ActionMatrices<S>& action() const { return act_; }
  /// x · a for arbitrary x ∈ H.
  Vec<S> act(const Vec<S>& x, const Vec<S>& a) const { return act_on(act_, x, a); }
  /// b_i · a.
  Vec<S> act_basis(Index i, const Vec<S>& a) const { return apply<S>(act_[static_cast<std::size_t>(i)], a); }

 private:
  PartialHopfAction(HopfAlgebra<S> h, Algebra<S> a, ActionMatrices<S> act)
      : h_(std::move(h)), a_(std::move(a)), act_(std::move(act)) {}

  void validate() const {
    const Index n = h_.dim();
    const Index d = a_.dim();
    auto idx = [](Index i) { return static_cast<std::size_t>(i); };
    for (Index x = 0; x < n; ++x) {
      for (Index i = 0; i < d; ++i) {
        for (Index j = 0; j < d; ++j) {
          Vec<S> lhs = act_basis(x, a_.mul(a_.basis(i), a_.basis(j)));
          Vec<S> rhs = Vec<S>::Zero(d);
          for (const auto& t : h_.coproduct_terms(x)) {
            rhs += t.coeff * a_.mul(act_basis(t.left, a_.basis(i)), act_basis(t.right, a_.basis(j)));
          }
          if (lhs != rhs) {
            throw Error(ErrorKind::Axiom1Fails,
                        "h·(ab) ≠ Σ (h_1·a)(h_2·b) for h=" + h_.algebra().label(x) + " a=" + a_.label(i) +
                            " b=" + a_.label(j),
                        {idx(x), idx(i), idx(j)});
          }
        }
      }
    }
    for (Index i = 0; i < d; ++i) {
      if (act(h_.unit(), a_.basis(i)) != a_.basis(i)) {
        throw Error(ErrorKind::Axiom2Fails, "1_H·a ≠ a for a=" + a_.label(i), {idx(i)});
      }
    }
    std::vector<Vec<S>> on_one;
    for (Index x = 0; x < n; ++x) on_one.push_back(act_basis(x, a_.unit()));
    for (Index x = 0; x < n; ++x) {
      for (Index y = 0; y < n; ++y) {
        for (Index i = 0; i < d; ++i) {
          Vec<S> lhs = act_basis(x, act_basis(y, a_.basis(i)));
          Vec<S> rhs = Vec<S>::Zero(d);
          for (const auto& t : h_.coproduct_terms(x)) {
            rhs += t.coeff * a_.mul(on_one[idx(t.left)], act(h_.mul(h_.basis(t.right), h_.basis(y)), a_.basis(i)));
          }
          if (lhs != rhs) {
            throw Error(ErrorKind::Axiom3Fails,
                        "h·(g·a) ≠ Σ (h_1·1)((h_2 g)·a) for h=" + h_.algebra().label(x) +
                            " g=" + h_.algebra().label(y) + " a=" + a_.label(i),
                        {idx(x), idx(y), idx(i)});
          }
        }
      }
    }
  }

  HopfAlgebra<S> h_;
  Algebra<S> a_;
  ActionMatrices<S> act_;
};

template <class S>
PartialHopfAction<S> make_partial_hopf_action(HopfAlgebra<S> h, Algebra<S> a, ActionMatrices<S> act) {
  return PartialHopfAction<S>::make(std::move(h), std::move(a), std::move(act));
}

/// k[G] acting by b_g · a = g · a.
template <class S>
PartialHopfAction<S> lift_group_partial_action(const PartialAction<S>& pa) {
  ActionMatrices<S> act;
  for (GroupElement g = 0; g < pa.order(); ++g) act.push_back(pa.beta(g));
  return PartialHopfAction<S>::make(group_hopf<S>(pa.algebra().field(), pa.group()), pa.algebra(), std::move(act));
}

/// H, H*, End(H) (row-major matrix units E_{r,c} at r n + c, product =
/// composition) and the two smash products acting on H.
template <class S>
struct HeisenbergData {
  HopfAlgebra<S> h;
  HopfAlgebra<S> dual;
  Algebra<S> end;
  /// H # H*, basis h_i # p_j at i n + j.
  Algebra<S> left_smash;
  /// H* # H with (f # h)(g # k) = Σ f g_1 # (h ↼ g_2) k, basis p_i # h_j at i n + j.
  Algebra<S> right_smash;

  Index n() const { return h.dim(); }

  /// λ(x # f): k ↦ x (f ⇀ k), flattened row-major.
  Vec<S> lambda(const Vec<S>& x, const Vec<S>& f) const {
    Vec<S> out(n() * n());
    for (Index k = 0; k < n(); ++k) {
      Vec<S> col = h.mul(x, left_harpoon(h, f, h.basis(k)));
      for (Index r = 0; r < n(); ++r) out(r * n() + k) = col(r);
    }
    return out;
  }
  /// ρ(f # x): k ↦ (k ↼ f) x, flattened row-major.
  Vec<S> rho(const Vec<S>& f, const Vec<S>& x) const {
    Vec<S> out(n() * n());
    for (Index k = 0; k < n(); ++k) {
      Vec<S> col = h.mul(right_harpoon(h, h.basis(k), f), x);
      for (Index r = 0; r < n(); ++r) out(r * n() + k) = col(r);
    }
    return out;
  }
  /// Matrix of λ on the basis of H # H*.
  Mat<S> lambda_matrix() const {
    Mat<S> m(n() * n(), n() * n());
    for (Index i = 0; i < n(); ++i) {
      for (Index j = 0; j < n(); ++j) m.col(i * n() + j) = lambda(h.basis(i), dual.basis(j));
    }
    return m;
  }
  /// Matrix of ρ on the basis of H* # H.
  Mat<S> rho_matrix() const {
    Mat<S> m(n() * n(), n() * n());
    for (Index i = 0; i < n(); ++i) {
      for (Index j = 0; j < n(); ++j) m.col(i * n() + j) = rho(dual.basis(i), h.basis(j));
    }
    return m;
  }
};

template <class S>
HeisenbergData<S> heisenberg(const HopfAlgebra<S>& h) {
  auto hs = dual(h);
  const Index n = h.dim();
  ActionMatrices<S> harpoons;
  for (Index f = 0; f < n; ++f) {
    Mat<S> m(n, n);
    for (Index k = 0; k < n; ++k) m.col(k) = left_harpoon(h, hs.basis(f), h.basis(k));
    harpoons.push_back(std::move(m));
  }
  auto left = smash_product(h.algebra(), hs, harpoons);

  const Index d = n * n;
  ProductTable<S> t = empty_table<S>(d);
  for (Index f = 0; f < n; ++f) {
    for (Index x = 0; x < n; ++x) {
      for (Index g = 0; g < n; ++g) {
        for (const auto& co : hs.coproduct_terms(g)) {
          Vec<S> fg = hs.mul(hs.basis(f), hs.basis(co.left));
          Vec<S> xg = right_harpoon(h, h.basis(x), hs.basis(co.right));
          for (Index k = 0; k < n; ++k) {
            Vec<S> right = h.mul(xg, h.basis(k));
            for (Index r = 0; r < n; ++r) {
              if (is_zero(fg(r))) continue;
              for (Index s = 0; s < n; ++s) {
                if (!is_zero(right(s))) t(r * n + s, (f * n + x) * d + g * n + k) += co.coeff * fg(r) * right(s);
              }
            }
          }
        }
      }
    }
  }
  auto right = Algebra<S>::make(h.field(), std::move(t), kron<S>(hs.unit(), h.unit()),
                                smash_labels(hs.algebra(), h.algebra()));
  return HeisenbergData<S>{h, std::move(hs), full_matrix_algebra<S>(h.field(), n), std::move(left), std::move(right)};
}

/// λ multiplicative and unital, ρ anti-multiplicative, and
/// λ(h # f) ρ(g # 1) = Σ ρ(g_2 # 1) λ((h ↼ S(g_1)) # f) on all basis triples.
template <class S>
Report reps_check(const HeisenbergData<S>& r) {
  const Index n = r.n();
  const auto& E = r.end;
  Report report;
  report.subject = "heisenberg";

  Check lam("hopf.lambda_multiplicative");
  AlgebraMap<S> lmap(r.left_smash, E, r.lambda_matrix());
  auto lw = lmap.multiplicativity_witness();
  lam.expect(!lw, [&] { return r.left_smash.label(lw->first) + " * " + r.left_smash.label(lw->second); });
  lam.expect(lmap.is_unital(), [] { return std::string("λ(1 # ε) is not the identity"); });
  report.add(std::move(lam));

  Check rho("hopf.rho_antimultiplicative");
  const Mat<S> rm = r.rho_matrix();
  const auto& R = r.right_smash;
  for (Index x = 0; x < R.dim(); ++x) {
    for (Index y = 0; y < R.dim(); ++y) {
      rho.expect(apply<S>(rm, R.mul(R.basis(x), R.basis(y))) == E.mul(rm.col(y), rm.col(x)),
                 [&] { return R.label(x) + " * " + R.label(y); });
    }
  }
  rho.expect(apply<S>(rm, R.unit()) == E.unit(), [] { return std::string("ρ(ε # 1) is not the identity"); });
  report.add(std::move(rho));

  Check comm("hopf.lambda_rho_commutation");
  for (Index x = 0; x < n; ++x) {
    for (Index f = 0; f < n; ++f) {
      const Vec<S> lhf = r.lambda(r.h.basis(x), r.dual.basis(f));
      for (Index g = 0; g < n; ++g) {
        Vec<S> lhs = E.mul(lhf, r.rho(r.dual.basis(g), r.h.unit()));
        Vec<S> rhs = Vec<S>::Zero(n * n);
        for (const auto& co : r.dual.coproduct_terms(g)) {
          Vec<S> shifted = right_harpoon(r.h, r.h.basis(x), Vec<S>(r.dual.antipode().col(co.left)));
          rhs += co.coeff * E.mul(r.rho(r.dual.basis(co.right), r.h.unit()), r.lambda(shifted, r.dual.basis(f)));
        }
        comm.expect(lhs == rhs, [&] {
          return "h=" + r.h.algebra().label(x) + " f=" + r.dual.algebra().label(f) + " g=" +
                 r.dual.algebra().label(g);
        });
      }
    }
  }
  report.add(std::move(comm));
  report.sort();
  return report;
}

/// Δ_A(a) = Σ (b_i·a) ⊗ p_i: multiplicative, counital, and coassociative up to
/// the factor Δ_A(1) ⊗ 1. Strict coassociativity is only measured.
template <class S>
Report partial_coaction_check(const PartialHopfAction<S>& p) {
  const auto& A = p.algebra();
  const auto& H = p.hopf();
  auto hs = dual(H);
  const Index n = H.dim();
  const Index d = A.dim();
  auto ahs = tensor_product(A, hs.algebra());
  auto ahhs = tensor_product(ahs, hs.algebra());
  auto coact = [&](const Vec<S>& a) {
    Vec<S> out = Vec<S>::Zero(d * n);
    for (Index i = 0; i < n; ++i) out += kron<S>(p.act_basis(i, a), hs.basis(i));
    return out;
  };
  Report report;
  report.subject = "partial coaction";

  Check mult("coaction.multiplicative");
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      mult.expect(coact(A.mul(A.basis(i), A.basis(j))) == ahs.mul(coact(A.basis(i)), coact(A.basis(j))),
                  [&] { return "a=" + A.label(i) + " b=" + A.label(j); });
    }
  }
  report.add(std::move(mult));

  Check counit("coaction.counit");
  for (Index i = 0; i < d; ++i) {
    Vec<S> c = coact(A.basis(i));
    Vec<S> out = Vec<S>::Zero(d);
    for (Index a = 0; a < d; ++a) {
      for (Index k = 0; k < n; ++k) {
        if (!is_zero(c(a * n + k))) out(a) += c(a * n + k) * hs.counit()(k);
      }
    }
    counit.expect(out == A.basis(i), [&] { return "a=" + A.label(i); });
  }
  report.add(std::move(counit));

  Check weak("coaction.weak_coassociativity");
  const Vec<S> left_factor = kron<S>(coact(A.unit()), hs.unit());
  std::int64_t strict_failures = 0;
  for (Index i = 0; i < d; ++i) {
    Vec<S> c = coact(A.basis(i));
    // (Δ_A ⊗ 1)Δ_A(a) = Σ_i Δ_A(b_i·a) ⊗ p_i.
    Vec<S> lhs = Vec<S>::Zero(d * n * n);
    for (Index k = 0; k < n; ++k) lhs += kron<S>(coact(p.act_basis(k, A.basis(i))), hs.basis(k));
    // (1 ⊗ Δ_{H*})Δ_A(a) = Σ_r (b_r·a) ⊗ Δ(p_r).
    Vec<S> middle = Vec<S>::Zero(d * n * n);
    for (Index r = 0; r < n; ++r) middle += kron<S>(p.act_basis(r, A.basis(i)), hs.delta(hs.basis(r)));
    weak.expect(lhs == ahhs.mul(left_factor, middle), [&] { return "a=" + A.label(i); });
    if (lhs != middle) ++strict_failures;
  }
  weak.measure("strict_coassociativity_failures", strict_failures);
  report.add(std::move(weak));

  report.sort();
  return report;
}

/// φ: A → A ⊗ End(H), φ(a) = Σ (b_i·a) ⊗ ρ(S⁻¹(p_i) # 1), and
/// ψ: H # H* → A ⊗ End(H), ψ(h # f) = 1 ⊗ λ(h # f).
template <class S>
struct PhiPsi {
  HeisenbergData<S> reps;
  /// A ⊗ End(H), basis a_i ⊗ E_{r,c} at i n² + r n + c.
  Algebra<S> target;
  Mat<S> phi;
  Mat<S> psi;
};

template <class S>
PhiPsi<S> phi_psi_maps(const PartialHopfAction<S>& p) {
  auto reps = heisenberg(p.hopf());
  const auto& A = p.algebra();
  const Index n = reps.n();
  auto target = tensor_product(A, reps.end);
  Mat<S> phi = Mat<S>::Zero(target.dim(), A.dim());
  std::vector<Vec<S>> rho_terms;
  for (Index i = 0; i < n; ++i) {
    rho_terms.push_back(reps.rho(Vec<S>(reps.dual.antipode_inverse().col(i)), reps.h.unit()));
  }
  for (Index a = 0; a < A.dim(); ++a) {
    Vec<S> col = Vec<S>::Zero(target.dim());
    for (Index i = 0; i < n; ++i) col += kron<S>(p.act_basis(i, A.basis(a)), rho_terms[static_cast<std::size_t>(i)]);
    phi.col(a) = col;
  }
  Mat<S> lam = reps.lambda_matrix();
  Mat<S> psi(target.dim(), n * n);
  for (Index x = 0; x < n * n; ++x) psi.col(x) = kron<S>(A.unit(), Vec<S>(lam.col(x)));
  return PhiPsi<S>{std::move(reps), std::move(target), std::move(phi), std::move(psi)};
}

/// φ multiplicative and φ(1)ψ(h # f)φ(a) = Σ φ(h_1·a)ψ(h_2 # f) on all basis triples.
template <class S>
Report phi_psi_check(const PartialHopfAction<S>& p, const PhiPsi<S>& m) {
  const auto& A = p.algebra();
  const auto& H = p.hopf();
  const auto& T = m.target;
  const Index n = H.dim();
  Report report;
  report.subject = "phi psi";

  Check mult("hopf.phi_multiplicative");
  AlgebraMap<S> phi(A, T, m.phi);
  auto w = phi.multiplicativity_witness();
  mult.expect(!w, [&] { return "a=" + A.label(w->first) + " b=" + A.label(w->second); });
  const Vec<S> phi_one = phi(A.unit());
  mult.measure("phi_one_idempotent", T.mul(phi_one, phi_one) == phi_one ? 1 : 0);
  report.add(std::move(mult));

  Check identity("hopf.phi_psi_identity");
  for (Index x = 0; x < n; ++x) {
    for (Index f = 0; f < n; ++f) {
      const Vec<S> left = T.mul(phi_one, m.psi.col(x * n + f));
      for (Index a = 0; a < A.dim(); ++a) {
        Vec<S> lhs = T.mul(left, m.phi.col(a));
        Vec<S> rhs = Vec<S>::Zero(T.dim());
        for (const auto& t : H.coproduct_terms(x)) {
          rhs += t.coeff * T.mul(phi(p.act_basis(t.left, A.basis(a))), m.psi.col(t.right * n + f));
        }
        identity.expect(lhs == rhs, [&] {
          return "h=" + H.algebra().label(x) + " f=" + m.reps.dual.algebra().label(f) + " a=" + A.label(a);
        });
      }
    }
  }
  report.add(std::move(identity));
  report.sort();
  return report;
}

/// A ⊗ H with (a ⊗ h)(b ⊗ g) = Σ a(h_1·b) ⊗ h_2 g (basis a_i ⊗ h_j at i n + j),
/// and the subspace (A ⊗ H)(1 ⊗ 1) spanned by Σ a(h_1·1) ⊗ h_2.
template <class S>
struct PartialSmash {
  Algebra<S> ambient;
  Subspace<S> sub;
  Vec<S> unit;
};

template <class S>
PartialSmash<S> partial_smash(const PartialHopfAction<S>& p) {
  const auto& A = p.algebra();
  const auto& H = p.hopf();
  auto labels = smash_labels(A, H.algebra());
  std::optional<Algebra<S>> ambient;
  try {
    ambient = Algebra<S>::make_nonunital(A.field(), smash_table(A, H, p.action()), std::move(labels));
  } catch (const Error& err) {
    throw Error(ErrorKind::InternalFailure, std::string("A ⊗ H product failed validation: ") + err.what(),
                err.witness());
  }
  const Vec<S> one = kron<S>(A.unit(), H.unit());
  SpanBuilder<S> builder(ambient->dim());
  for (Index x = 0; x < ambient->dim(); ++x) builder.insert(ambient->mul(ambient->basis(x), one));
  return PartialSmash<S>{*ambient, builder.build(), one};
}

/// The partial smash product: agreement of (A ⊗ H)1_A with the spanning
/// formula, closure and unit, the comodule-algebra structure 1 ⊗ Δ and the
/// H*-module-algebra structure f ▷ (a ⊗ h) = a ⊗ (f ⇀ h).
template <class S>
Report partial_smash_check(const PartialHopfAction<S>& p, const PartialSmash<S>& ps) {
  const auto& A = p.algebra();
  const auto& H = p.hopf();
  const auto hs = dual(H);
  const Index n = H.dim();
  const Index d = A.dim();
  const auto& M = ps.ambient;
  const auto& sub = ps.sub;
  Report report;
  report.subject = "partial smash";

  Check span("partial_smash.span");
  SpanBuilder<S> formula(M.dim());
  std::vector<Vec<S>> on_one;
  for (Index x = 0; x < n; ++x) on_one.push_back(p.act_basis(x, A.unit()));
  for (Index a = 0; a < d; ++a) {
    for (Index x = 0; x < n; ++x) {
      Vec<S> v = Vec<S>::Zero(M.dim());
      for (const auto& t : H.coproduct_terms(x)) {
        v += t.coeff * kron<S>(A.mul(A.basis(a), on_one[static_cast<std::size_t>(t.left)]), H.basis(t.right));
      }
      formula.insert(v);
    }
  }
  span.measure("dim_ambient", M.dim());
  span.measure("dim_sub", sub.dim());
  span.expect(formula.build() == sub, [] { return std::string("(A ⊗ H)1_A differs from span Σ a(h_1·1) ⊗ h_2"); });
  report.add(std::move(span));

  Check closure("partial_smash.subalgebra");
  closure.expect(sub.contains(ps.unit), [] { return std::string("1 ⊗ 1 not in the subspace"); });
  for (Index i = 0; i < sub.dim(); ++i) {
    const Vec<S> x = sub.basis_vector(i);
    closure.expect(M.mul(ps.unit, x) == x && M.mul(x, ps.unit) == x,
                   [&] { return "1 ⊗ 1 is not a unit for basis vector " + std::to_string(i); });
    for (Index j = 0; j < sub.dim(); ++j) {
      closure.expect(sub.contains(M.mul(x, sub.basis_vector(j))),
                     [&] { return "product of basis vectors " + std::to_string(i) + "," + std::to_string(j); });
    }
  }
  report.add(std::move(closure));

  Check comodule("partial_smash.comodule_algebra");
  auto mh = tensor_product(M, H.algebra());
  auto coact = [&](const Vec<S>& v) {
    Vec<S> out = Vec<S>::Zero(M.dim() * n);
    for (Index a = 0; a < d; ++a) {
      for (Index x = 0; x < n; ++x) {
        if (is_zero(v(a * n + x))) continue;
        for (const auto& t : H.coproduct_terms(x)) {
          out((a * n + t.left) * n + t.right) += v(a * n + x) * t.coeff;
        }
      }
    }
    return out;
  };
  for (Index i = 0; i < sub.dim(); ++i) {
    const Vec<S> x = sub.basis_vector(i);
    const Vec<S> cx = coact(x);
    // ρ(x) lies in sub ⊗ H.
    for (Index k = 0; k < n; ++k) {
      Vec<S> slice(M.dim());
      for (Index r = 0; r < M.dim(); ++r) slice(r) = cx(r * n + k);
      comodule.expect(sub.contains(slice), [&] { return "ρ(basis " + std::to_string(i) + ") leaves sub ⊗ H"; });
    }
    for (Index j = 0; j < sub.dim(); ++j) {
      const Vec<S> y = sub.basis_vector(j);
      comodule.expect(coact(M.mul(x, y)) == mh.mul(cx, coact(y)),
                      [&] { return "ρ(xy) ≠ ρ(x)ρ(y) for " + std::to_string(i) + "," + std::to_string(j); });
    }
  }
  comodule.expect(coact(ps.unit) == kron<S>(ps.unit, H.unit()), [] { return std::string("ρ(1) ≠ 1 ⊗ 1"); });
  report.add(std::move(comodule));

  Check module("partial_smash.module_algebra");
  auto triangle = [&](const Vec<S>& f, const Vec<S>& v) {
    Vec<S> out = Vec<S>::Zero(M.dim());
    for (Index a = 0; a < d; ++a) {
      Vec<S> hpart = v.segment(a * n, n);
      if (is_zero_vector<S>(hpart)) continue;
      out.segment(a * n, n) = left_harpoon(H, f, hpart);
    }
    return out;
  };
  for (Index f = 0; f < n; ++f) {
    const Vec<S> pf = hs.basis(f);
    for (Index x = 0; x < M.dim(); ++x) {
      module.expect(M.mul(triangle(pf, M.basis(x)), ps.unit) == triangle(pf, M.mul(M.basis(x), ps.unit)),
                    [&] { return "f ▷ ((a ⊗ h)1_A) ≠ (a ⊗ (f ⇀ h))1_A for f=" + hs.algebra().label(f) + " " +
                                 M.label(x); });
    }
    for (Index i = 0; i < sub.dim(); ++i) {
      const Vec<S> x = sub.basis_vector(i);
      module.expect(sub.contains(triangle(pf, x)), [&] { return "sub not stable under " + hs.algebra().label(f); });
      for (Index j = 0; j < sub.dim(); ++j) {
        const Vec<S> y = sub.basis_vector(j);
        Vec<S> rhs = Vec<S>::Zero(M.dim());
        for (const auto& t : hs.coproduct_terms(f)) {
          rhs += t.coeff * M.mul(triangle(hs.basis(t.left), x), triangle(hs.basis(t.right), y));
        }
        module.expect(triangle(pf, M.mul(x, y)) == rhs, [&] {
          return "f ▷ (xy) for f=" + hs.algebra().label(f) + " basis " + std::to_string(i) + "," + std::to_string(j);
        });
      }
    }
  }
  for (Index i = 0; i < sub.dim(); ++i) {
    module.expect(triangle(hs.unit(), sub.basis_vector(i)) == sub.basis_vector(i),
                  [&] { return "ε ▷ x ≠ x for basis " + std::to_string(i); });
  }
  report.add(std::move(module));

  report.sort();
  return report;
}

/// For the lift of a group partial action: a ⊗ g ↦ (a 1_g)⟦g⟧ restricted to
/// the partial smash product is a unital algebra isomorphism onto A *_α G.
template <class S>
Report grouplike_iso_check(const PartialAction<S>& pa, const SkewGroupRing<S>& skew, const PartialSmash<S>& ps) {
  const auto& A = pa.algebra();
  const Index n = static_cast<Index>(pa.order());
  Mat<S> map = Mat<S>::Zero(skew.dim(), ps.ambient.dim());
  for (Index a = 0; a < A.dim(); ++a) {
    for (Index g = 0; g < n; ++g) {
      const auto ge = static_cast<GroupElement>(g);
      map.col(a * n + g) = skew.element(ge, A.mul(A.basis(a), pa.idempotent(ge)));
    }
  }
  Report report;
  report.subject = "grouplike partial smash";
  Check iso("partial_smash.skew_isomorphism");
  const auto& sub = ps.sub;
  Mat<S> restricted(skew.dim(), sub.dim());
  for (Index i = 0; i < sub.dim(); ++i) restricted.col(i) = apply<S>(map, sub.basis_vector(i));
  iso.measure("dim_sub", sub.dim());
  iso.measure("dim_skew", skew.dim());
  iso.expect(sub.dim() == skew.dim() && kernel_basis(restricted).is_zero_space(),
             [] { return std::string("map is not bijective"); });
  for (Index i = 0; i < sub.dim(); ++i) {
    for (Index j = 0; j < sub.dim(); ++j) {
      const Vec<S> xy = ps.ambient.mul(sub.basis_vector(i), sub.basis_vector(j));
      iso.expect(apply<S>(map, xy) == skew.mul(restricted.col(i), restricted.col(j)),
                 [&] { return "not multiplicative on basis " + std::to_string(i) + "," + std::to_string(j); });
    }
  }
  iso.expect(apply<S>(map, ps.unit) == skew.algebra().unit(), [] { return std::string("1 ⊗ 1 ↦ 1⟦e⟧ fails"); });
  report.add(std::move(iso));
  return report;
}

/// (A ⊗ H) # H* with (a ⊗ h # f)(b ⊗ k # g) = Σ a(h_1·b) ⊗ h_2(f_1 ⇀ k) # f_2 g,
/// basis index (i n + j) n + l, and Φ(a ⊗ h # f) = φ(a)ψ(h # f).
template <class S>
Report triple_product_check(const PartialHopfAction<S>& p, const PartialSmash<S>& ps, const PhiPsi<S>& m) {
  const auto& A = p.algebra();
  const auto& H = p.hopf();
  const auto& hs = m.reps.dual;
  const auto& T = m.target;
  const Index n = H.dim();
  const Index d = A.dim();
  Report report;
  report.subject = "triple product";

  ActionMatrices<S> act;
  for (Index f = 0; f < n; ++f) {
    Mat<S> harp(n, n);
    for (Index k = 0; k < n; ++k) harp.col(k) = left_harpoon(H, hs.basis(f), H.basis(k));
    Mat<S> full = Mat<S>::Zero(d * n, d * n);
    for (Index a = 0; a < d; ++a) full.block(a * n, a * n, n, n) = harp;
    act.push_back(std::move(full));
  }
  auto triple = Algebra<S>::make_nonunital(A.field(), smash_table(ps.ambient, hs, act));

  Mat<S> big_phi(T.dim(), triple.dim());
  for (Index a = 0; a < d; ++a) {
    for (Index x = 0; x < n; ++x) {
      for (Index f = 0; f < n; ++f) big_phi.col((a * n + x) * n + f) = T.mul(m.phi.col(a), m.psi.col(x * n + f));
    }
  }

  Check mult("triple.phi_multiplicative");
  for (Index x = 0; x < triple.dim(); ++x) {
    for (Index y = 0; y < triple.dim(); ++y) {
      mult.expect(apply<S>(big_phi, triple.mul(triple.basis(x), triple.basis(y))) ==
                      T.mul(big_phi.col(x), big_phi.col(y)),
                  [&] { return "basis " + std::to_string(x) + " * " + std::to_string(y); });
    }
  }
  mult.measure("pairs", triple.dim() * triple.dim());
  report.add(std::move(mult));

  Check idem("triple.bold_e");
  Vec<S> bold_e = apply<S>(m.phi, A.unit());
  idem.expect(apply<S>(big_phi, kron<S>(kron<S>(A.unit(), H.unit()), hs.unit())) == bold_e,
              [] { return std::string("Φ(1 ⊗ 1 # ε) differs from e"); });
  idem.expect(T.mul(bold_e, bold_e) == bold_e, [] { return std::string("e² ≠ e"); });
  report.add(std::move(idem));

  Check corner("triple.corner_membership");
  auto pierce = pierce_corner(T, bold_e);
  corner.measure("dim_corner", pierce.dim());
  Index count = 0;
  for (Index i = 0; i < ps.sub.dim(); ++i) {
    for (Index f = 0; f < n; ++f) {
      ++count;
      Vec<S> gamma = kron<S>(ps.sub.basis_vector(i), hs.basis(f));
      corner.expect(pierce.contains(apply<S>(big_phi, gamma)),
                    [&] { return "sub basis " + std::to_string(i) + " # " + hs.algebra().label(f); });
    }
  }
  corner.measure("elements_checked", count);
  report.add(std::move(corner));

  report.sort();
  return report;
}

/// Every verification of the partial-Hopf layer for one action.
template <class S>
Report hopf_suite(const PartialHopfAction<S>& p) {
  Report report;
  report.subject = "partial hopf action";
  Check axioms("hopf.axioms");
  axioms.measure("dim_H", p.hopf().dim());
  report.add(std::move(axioms));
  auto m = phi_psi_maps(p);
  auto ps = partial_smash(p);
  report.merge(reps_check(m.reps));
  report.merge(partial_coaction_check(p));
  report.merge(phi_psi_check(p, m));
  report.merge(partial_smash_check(p, ps));
  report.merge(triple_product_check(p, ps, m));
  report.sort();
  return report;
}

}  // namespace pdual

#endif  // PDUAL_HOPF_HPP
