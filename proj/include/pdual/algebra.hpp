// Finite-dimensional associative algebras given by structure constants, with
// elements, linear maps, and the standard builders (matrix, group, dual group,
// direct and tensor products, centers, ideals generated by idempotents).
#ifndef PDUAL_ALGEBRA_HPP
#define PDUAL_ALGEBRA_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pdual/error.hpp"
#include "pdual/group.hpp"
#include "pdual/linalg.hpp"
#include "pdual/scalar.hpp"

namespace pdual {

/// Multiplication table in column form: column i * d + j holds the
/// coordinates of b_i b_j.
template <class S>
using ProductTable = Mat<S>;

template <class S>
ProductTable<S> empty_table(Index dim) {
  return ProductTable<S>::Zero(dim, dim * dim);
}

/// Structure-constant algebra. Copies share the same immutable data, and two
/// algebras are the same algebra exactly when they share it.
template <class S>
class Algebra {
 public:
  struct Term {
    Index basis;
    S coeff;
  };

  /// Validates associativity on all basis triples and the two-sided unit law.
  static Algebra make(const Field& field, ProductTable<S> table, Vec<S> unit, std::vector<std::string> labels = {}) {
    Algebra a(field, std::move(table), std::move(labels), std::move(unit));
    a.check_associative();
    a.check_unit();
    return a;
  }

  /// Associative but possibly without unit (e.g. the twisted product on A ⊗ H
  /// under a partial Hopf action).
  static Algebra make_nonunital(const Field& field, ProductTable<S> table, std::vector<std::string> labels = {}) {
    Algebra a(field, std::move(table), std::move(labels), std::nullopt);
    a.check_associative();
    return a;
  }

  Index dim() const { return data_->dim; }
  const Field& field() const { return data_->field; }
  const std::string& label(Index i) const { return data_->labels[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& labels() const { return data_->labels; }
  bool has_unit() const { return data_->unit.has_value(); }
  const Vec<S>& unit() const {
    if (!data_->unit) throw Error(ErrorKind::UnitFails, "algebra has no unit");
    return *data_->unit;
  }
  const ProductTable<S>& table() const { return data_->table; }
  const std::vector<Term>& product_terms(Index i, Index j) const {
    return data_->terms[static_cast<std::size_t>(i * dim() + j)];
  }
  Vec<S> basis(Index i) const { return unit_vector<S>(dim(), i); }
  Vec<S> zero() const { return Vec<S>::Zero(dim()); }
  S scalar(long n) const { return pdual::scalar<S>(field(), n); }

  bool same_as(const Algebra& other) const { return data_ == other.data_; }

  Vec<S> mul(const Vec<S>& x, const Vec<S>& y) const {
    if (x.size() != dim() || y.size() != dim()) throw Error(ErrorKind::DimensionMismatch, "element length");
    Vec<S> out = zero();
    for (Index i = 0; i < dim(); ++i) {
      if (is_zero(x(i))) continue;
      for (Index j = 0; j < dim(); ++j) {
        if (is_zero(y(j))) continue;
        const auto& terms = product_terms(i, j);
        if (terms.empty()) continue;
        S xy = x(i) * y(j);
        for (const auto& t : terms) out(t.basis) += xy * t.coeff;
      }
    }
    return out;
  }

  Vec<S> mul(const Vec<S>& x, const Vec<S>& y, const Vec<S>& z) const { return mul(mul(x, y), z); }

  /// Column j is x b_j.
  Mat<S> left_matrix(const Vec<S>& x) const {
    Mat<S> m(dim(), dim());
    for (Index j = 0; j < dim(); ++j) m.col(j) = mul(x, basis(j));
    return m;
  }
  /// Column j is b_j x.
  Mat<S> right_matrix(const Vec<S>& x) const {
    Mat<S> m(dim(), dim());
    for (Index j = 0; j < dim(); ++j) m.col(j) = mul(basis(j), x);
    return m;
  }

  /// First basis triple (i, j, k) with (b_i b_j) b_k != b_i (b_j b_k).
  std::optional<std::vector<std::size_t>> associativity_witness() const {
    const Index d = dim();
    Vec<S> lhs(d);
    Vec<S> rhs(d);
    for (Index i = 0; i < d; ++i) {
      for (Index j = 0; j < d; ++j) {
        for (Index k = 0; k < d; ++k) {
          lhs.setZero();
          rhs.setZero();
          for (const auto& t : product_terms(i, j)) {
            for (const auto& u : product_terms(t.basis, k)) lhs(u.basis) += t.coeff * u.coeff;
          }
          for (const auto& t : product_terms(j, k)) {
            for (const auto& u : product_terms(i, t.basis)) rhs(u.basis) += t.coeff * u.coeff;
          }
          if (lhs != rhs) {
            return std::vector<std::size_t>{static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                                            static_cast<std::size_t>(k)};
          }
        }
      }
    }
    return std::nullopt;
  }

 private:
  struct Data {
    Field field;
    Index dim = 0;
    std::vector<std::string> labels;
    ProductTable<S> table;
    std::vector<std::vector<Term>> terms;
    std::optional<Vec<S>> unit;
  };

  Algebra(const Field& field, ProductTable<S> table, std::vector<std::string> labels, std::optional<Vec<S>> unit) {
    auto data = std::make_shared<Data>();
    if (unit && unit->size() != table.rows()) {
      throw Error(ErrorKind::DimensionMismatch, "unit length differs from dimension");
    }
    data->unit = std::move(unit);
    data->field = field;
    data->dim = table.rows();
    if (table.cols() != data->dim * data->dim) {
      throw Error(ErrorKind::DimensionMismatch, "structure constants must have shape d x d x d");
    }
    if (labels.empty()) {
      for (Index i = 0; i < data->dim; ++i) labels.push_back("b" + std::to_string(i));
    } else if (static_cast<Index>(labels.size()) != data->dim) {
      throw Error(ErrorKind::DimensionMismatch, "label count differs from dimension");
    }
    data->labels = std::move(labels);
    data->terms.resize(static_cast<std::size_t>(data->dim * data->dim));
    for (Index c = 0; c < table.cols(); ++c) {
      for (Index k = 0; k < data->dim; ++k) {
        if (!is_zero(table(k, c))) data->terms[static_cast<std::size_t>(c)].push_back({k, table(k, c)});
      }
    }
    data->table = std::move(table);
    data_ = std::move(data);
  }

  void check_associative() const {
    if (auto w = associativity_witness()) {
      throw Error(ErrorKind::NotAssociative,
                  "(b" + std::to_string((*w)[0]) + " b" + std::to_string((*w)[1]) + ") b" +
                      std::to_string((*w)[2]) + " differs from the other bracketing",
                  *w);
    }
  }

  void check_unit() const {
    for (Index i = 0; i < dim(); ++i) {
      Vec<S> b = basis(i);
      if (mul(unit(), b) != b || mul(b, unit()) != b) {
        throw Error(ErrorKind::UnitFails, "unit law fails on b" + std::to_string(i),
                    {static_cast<std::size_t>(i)});
      }
    }
  }

  std::shared_ptr<const Data> data_;
};

/// An element bound to its algebra; products across algebras are rejected.
template <class S>
class Element {
 public:
  Element(Algebra<S> algebra, Vec<S> coords) : algebra_(std::move(algebra)), coords_(std::move(coords)) {
    if (coords_.size() != algebra_.dim()) throw Error(ErrorKind::DimensionMismatch, "element length");
  }

  const Algebra<S>& algebra() const { return algebra_; }
  const Vec<S>& coords() const { return coords_; }

  friend Element operator*(const Element& a, const Element& b) {
    a.require_same(b);
    return Element(a.algebra_, a.algebra_.mul(a.coords_, b.coords_));
  }
  friend Element operator+(const Element& a, const Element& b) {
    a.require_same(b);
    return Element(a.algebra_, a.coords_ + b.coords_);
  }
  friend Element operator-(const Element& a, const Element& b) {
    a.require_same(b);
    return Element(a.algebra_, a.coords_ - b.coords_);
  }
  friend bool operator==(const Element& a, const Element& b) {
    return a.algebra_.same_as(b.algebra_) && a.coords_ == b.coords_;
  }

 private:
  void require_same(const Element& other) const {
    if (!algebra_.same_as(other.algebra_)) throw Error(ErrorKind::AlgebraMismatch, "elements of different algebras");
  }

  Algebra<S> algebra_;
  Vec<S> coords_;
};

template <class S>
Element<S> mul(const Element<S>& a, const Element<S>& b) {
  return a * b;
}

/// A linear map between algebras; multiplicativity and unitality are
/// predicates to check, not assumptions.
template <class S>
class AlgebraMap {
 public:
  AlgebraMap(Algebra<S> domain, Algebra<S> codomain, Mat<S> matrix)
      : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != codomain_.dim() || matrix_.cols() != domain_.dim()) {
      throw Error(ErrorKind::DimensionMismatch, "map matrix shape");
    }
  }

  const Algebra<S>& domain() const { return domain_; }
  const Algebra<S>& codomain() const { return codomain_; }
  const Mat<S>& matrix() const { return matrix_; }
  Vec<S> operator()(const Vec<S>& x) const { return apply<S>(matrix_, x); }

  /// First basis pair (i, j) with f(b_i b_j) != f(b_i) f(b_j).
  std::optional<std::pair<Index, Index>> multiplicativity_witness() const {
    for (Index i = 0; i < domain_.dim(); ++i) {
      Vec<S> fi = matrix_.col(i);
      for (Index j = 0; j < domain_.dim(); ++j) {
        Vec<S> fj = matrix_.col(j);
        if ((*this)(domain_.mul(domain_.basis(i), domain_.basis(j))) != codomain_.mul(fi, fj)) {
          return std::make_pair(i, j);
        }
      }
    }
    return std::nullopt;
  }
  bool is_multiplicative() const { return !multiplicativity_witness(); }
  bool is_unital() const { return (*this)(domain_.unit()) == codomain_.unit(); }
  bool is_injective() const { return kernel_basis(matrix_).is_zero_space(); }

 private:
  Algebra<S> domain_;
  Algebra<S> codomain_;
  Mat<S> matrix_;
};

/// Basis index of x with x e != e x, -1 when e is not idempotent, nothing when
/// e is a central idempotent.
template <class S>
std::optional<Index> central_idempotent_witness(const Algebra<S>& a, const Vec<S>& e) {
  if (a.mul(e, e) != e) return Index{-1};
  for (Index i = 0; i < a.dim(); ++i) {
    Vec<S> b = a.basis(i);
    if (a.mul(e, b) != a.mul(b, e)) return i;
  }
  return std::nullopt;
}

template <class S>
bool is_central_idempotent(const Algebra<S>& a, const Vec<S>& e) {
  return !central_idempotent_witness(a, e);
}

template <class S>
bool is_central_idempotent(const Element<S>& e) {
  return is_central_idempotent(e.algebra(), e.coords());
}

/// True iff every left and right basis multiple of every vector of `u` stays in `u`.
template <class S>
bool is_two_sided_ideal(const Algebra<S>& a, const Subspace<S>& u) {
  for (Index v = 0; v < u.dim(); ++v) {
    Vec<S> x = u.basis_vector(v);
    for (Index i = 0; i < a.dim(); ++i) {
      if (!u.contains(a.mul(a.basis(i), x)) || !u.contains(a.mul(x, a.basis(i)))) return false;
    }
  }
  return true;
}

/// The ideal A e generated by a central idempotent, closure verified.
template <class S>
Subspace<S> ideal_basis(const Algebra<S>& a, const Vec<S>& e) {
  if (auto w = central_idempotent_witness(a, e)) {
    std::vector<std::size_t> witness;
    if (*w >= 0) witness.push_back(static_cast<std::size_t>(*w));
    throw Error(ErrorKind::NotCentralIdempotent,
                *w < 0 ? "element is not idempotent" : "idempotent does not commute with b" + std::to_string(*w),
                witness);
  }
  SpanBuilder<S> builder(a.dim());
  for (Index i = 0; i < a.dim(); ++i) builder.insert(a.mul(a.basis(i), e));
  auto ideal = builder.build();
  if (!is_two_sided_ideal(a, ideal)) throw Error(ErrorKind::InternalFailure, "A e is not a two-sided ideal");
  return ideal;
}

template <class S>
Subspace<S> ideal_basis(const Element<S>& e) {
  return ideal_basis(e.algebra(), e.coords());
}

/// {x : x b_i = b_i x for all i}.
template <class S>
Subspace<S> center_basis(const Algebra<S>& a) {
  const Index d = a.dim();
  Mat<S> system = Mat<S>::Zero(d * d, d);
  for (Index i = 0; i < d; ++i) {
    // Column x of block i is [b_x, b_i] = b_x b_i - b_i b_x.
    for (Index x = 0; x < d; ++x) {
      for (const auto& t : a.product_terms(x, i)) system(i * d + t.basis, x) += t.coeff;
      for (const auto& t : a.product_terms(i, x)) system(i * d + t.basis, x) -= t.coeff;
    }
  }
  auto center = kernel_basis(system);
  for (Index v = 0; v < center.dim(); ++v) {
    Vec<S> z = center.basis_vector(v);
    for (Index i = 0; i < d; ++i) {
      if (a.mul(z, a.basis(i)) != a.mul(a.basis(i), z)) {
        throw Error(ErrorKind::InternalFailure, "center basis vector fails to commute");
      }
    }
  }
  return center;
}

template <class S>
Algebra<S> base_field(const Field& field) {
  ProductTable<S> t(1, 1);
  t(0, 0) = scalar<S>(field, 1);
  Vec<S> u(1);
  u(0) = scalar<S>(field, 1);
  return Algebra<S>::make(field, std::move(t), std::move(u), {"1"});
}

/// k^m with orthogonal idempotents e_i e_j = δ_ij e_i.
template <class S>
Algebra<S> product_of_fields(const Field& field, Index m) {
  ProductTable<S> t = empty_table<S>(m);
  Vec<S> u(m);
  std::vector<std::string> labels;
  for (Index i = 0; i < m; ++i) {
    t(i, i * m + i) = scalar<S>(field, 1);
    u(i) = scalar<S>(field, 1);
    labels.push_back("e" + std::to_string(i));
  }
  return Algebra<S>::make(field, std::move(t), std::move(u), std::move(labels));
}

/// Index of E_{r,c} a_i in M_n(A).
struct MatrixIndex {
  Index size;
  Index inner;
  Index operator()(Index row, Index col, Index i) const { return (row * size + col) * inner + i; }
};

/// M_n(A) with basis E_{r,c} a_i and (E_{r,c} x)(E_{r',c'} y) = δ_{c,r'} E_{r,c'} (xy).
template <class S>
Algebra<S> matrix_algebra(const Algebra<S>& a, Index n, const std::vector<std::string>& index_labels = {}) {
  const Index d = a.dim();
  const MatrixIndex at{n, d};
  const Index dim = n * n * d;
  ProductTable<S> t = empty_table<S>(dim);
  for (Index r = 0; r < n; ++r) {
    for (Index c = 0; c < n; ++c) {
      for (Index c2 = 0; c2 < n; ++c2) {
        for (Index i = 0; i < d; ++i) {
          for (Index j = 0; j < d; ++j) {
            for (const auto& term : a.product_terms(i, j)) {
              t(at(r, c2, term.basis), at(r, c, i) * dim + at(c, c2, j)) = term.coeff;
            }
          }
        }
      }
    }
  }
  Vec<S> u = Vec<S>::Zero(dim);
  for (Index g = 0; g < n; ++g) u.segment(at(g, g, 0), d) = a.unit();
  std::vector<std::string> labels;
  for (Index r = 0; r < n; ++r) {
    for (Index c = 0; c < n; ++c) {
      std::string rl = index_labels.empty() ? std::to_string(r) : index_labels[static_cast<std::size_t>(r)];
      std::string cl = index_labels.empty() ? std::to_string(c) : index_labels[static_cast<std::size_t>(c)];
      for (Index i = 0; i < d; ++i) labels.push_back("E[" + rl + "," + cl + "]" + a.label(i));
    }
  }
  return Algebra<S>::make(a.field(), std::move(t), std::move(u), std::move(labels));
}

/// Matrices over A indexed by the elements of a group.
template <class S>
Algebra<S> matrix_algebra(const Algebra<S>& a, const FiniteGroup& index_set) {
  std::vector<std::string> labels;
  for (GroupElement g = 0; g < index_set.order(); ++g) labels.push_back(index_set.label(g));
  return matrix_algebra(a, static_cast<Index>(index_set.order()), labels);
}

template <class S>
Algebra<S> full_matrix_algebra(const Field& field, Index n) {
  return matrix_algebra(base_field<S>(field), n);
}

template <class S>
Algebra<S> group_algebra(const Field& field, const FiniteGroup& g) {
  const auto n = static_cast<Index>(g.order());
  ProductTable<S> t = empty_table<S>(n);
  std::vector<std::string> labels;
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      t(static_cast<Index>(g.mul(static_cast<GroupElement>(a), static_cast<GroupElement>(b))), a * n + b) =
          scalar<S>(field, 1);
    }
    labels.push_back(g.label(static_cast<GroupElement>(a)));
  }
  Vec<S> u = Vec<S>::Zero(n);
  u(static_cast<Index>(g.identity())) = scalar<S>(field, 1);
  return Algebra<S>::make(field, std::move(t), std::move(u), std::move(labels));
}

/// k[G]^* on the dual basis p_g: p_g p_h = δ_{g,h} p_g, unit Σ_h p_h.
template <class S>
Algebra<S> dual_group_algebra(const Field& field, const FiniteGroup& g) {
  const auto n = static_cast<Index>(g.order());
  ProductTable<S> t = empty_table<S>(n);
  Vec<S> u(n);
  std::vector<std::string> labels;
  for (Index a = 0; a < n; ++a) {
    t(a, a * n + a) = scalar<S>(field, 1);
    u(a) = scalar<S>(field, 1);
    labels.push_back("p_" + g.label(static_cast<GroupElement>(a)));
  }
  return Algebra<S>::make(field, std::move(t), std::move(u), std::move(labels));
}

template <class S>
void require_same_field(const Algebra<S>& a, const Algebra<S>& b) {
  if (a.field() != b.field()) {
    throw Error(ErrorKind::FieldMismatch, "algebras over " + a.field().name() + " and " + b.field().name());
  }
}

/// A × B together with the (non-unital) embeddings of its factors.
template <class S>
struct ProductAlgebra {
  Algebra<S> algebra;
  Mat<S> first;
  Mat<S> second;
};

template <class S>
ProductAlgebra<S> direct_product(const Algebra<S>& a, const Algebra<S>& b) {
  require_same_field(a, b);
  const Index da = a.dim();
  const Index db = b.dim();
  const Index d = da + db;
  ProductTable<S> t = empty_table<S>(d);
  for (Index i = 0; i < da; ++i) {
    for (Index j = 0; j < da; ++j) {
      for (const auto& term : a.product_terms(i, j)) t(term.basis, i * d + j) = term.coeff;
    }
  }
  for (Index i = 0; i < db; ++i) {
    for (Index j = 0; j < db; ++j) {
      for (const auto& term : b.product_terms(i, j)) t(da + term.basis, (da + i) * d + da + j) = term.coeff;
    }
  }
  Vec<S> u(d);
  u << a.unit(), b.unit();
  std::vector<std::string> labels;
  for (Index i = 0; i < da; ++i) labels.push_back("(" + a.label(i) + ",0)");
  for (Index i = 0; i < db; ++i) labels.push_back("(0," + b.label(i) + ")");
  Mat<S> first = Mat<S>::Zero(d, da);
  Mat<S> second = Mat<S>::Zero(d, db);
  for (Index i = 0; i < da; ++i) first(i, i) = S(1);
  for (Index i = 0; i < db; ++i) second(da + i, i) = S(1);
  return {Algebra<S>::make(a.field(), std::move(t), std::move(u), std::move(labels)), std::move(first),
          std::move(second)};
}

/// Products of tensor coordinates: pure tensors multiply factorwise.
template <class S>
ProductTable<S> tensor_table(const Algebra<S>& a, const Algebra<S>& b) {
  const Index da = a.dim();
  const Index db = b.dim();
  const Index d = da * db;
  ProductTable<S> t = empty_table<S>(d);
  for (Index i = 0; i < da; ++i) {
    for (Index j = 0; j < db; ++j) {
      for (Index k = 0; k < da; ++k) {
        for (Index l = 0; l < db; ++l) {
          for (const auto& x : a.product_terms(i, k)) {
            for (const auto& y : b.product_terms(j, l)) {
              t(x.basis * db + y.basis, (i * db + j) * d + k * db + l) += x.coeff * y.coeff;
            }
          }
        }
      }
    }
  }
  return t;
}

/// A ⊗ B with basis a_i ⊗ b_j at index i * dim(B) + j.
template <class S>
Algebra<S> tensor_product(const Algebra<S>& a, const Algebra<S>& b) {
  require_same_field(a, b);
  std::vector<std::string> labels;
  for (Index i = 0; i < a.dim(); ++i) {
    for (Index j = 0; j < b.dim(); ++j) labels.push_back(a.label(i) + "⊗" + b.label(j));
  }
  if (a.has_unit() && b.has_unit()) {
    return Algebra<S>::make(a.field(), tensor_table(a, b), kron<S>(a.unit(), b.unit()), std::move(labels));
  }
  return Algebra<S>::make_nonunital(a.field(), tensor_table(a, b), std::move(labels));
}

/// The unital algebra B e for a central idempotent e, on the echelon basis of
/// the ideal; `inclusion` maps its coordinates back into B.
template <class S>
struct IdealAlgebra {
  Algebra<S> algebra;
  Subspace<S> ideal;
  Mat<S> inclusion;
};

template <class S>
IdealAlgebra<S> ideal_algebra(const Algebra<S>& b, const Vec<S>& e) {
  auto ideal = ideal_basis(b, e);
  const Index d = ideal.dim();
  ProductTable<S> t = empty_table<S>(d);
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      auto coords = ideal.coordinates(b.mul(ideal.basis_vector(i), ideal.basis_vector(j)));
      if (!coords) throw Error(ErrorKind::InternalFailure, "ideal not closed under products");
      t.col(i * d + j) = *coords;
    }
  }
  auto unit = ideal.coordinates(e);
  Mat<S> inclusion = ideal.basis().transpose();
  return {Algebra<S>::make(b.field(), std::move(t), *unit), ideal, std::move(inclusion)};
}

}  // namespace pdual

#endif  // PDUAL_ALGEBRA_HPP
