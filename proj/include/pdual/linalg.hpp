// Dense exact linear algebra over Rational or Zp: reduced row echelon form,
// kernels, images, solving, and canonical subspaces.
#ifndef PDUAL_LINALG_HPP
#define PDUAL_LINALG_HPP

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "pdual/error.hpp"
#include "pdual/scalar.hpp"

namespace pdual {

using Index = Eigen::Index;

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

template <class S>
Vec<S> unit_vector(Index n, Index i) {
  Vec<S> v = Vec<S>::Zero(n);
  v(i) = S(1);
  return v;
}

template <class S, class Derived>
bool is_zero_vector(const Eigen::MatrixBase<Derived>& v) {
  for (Index i = 0; i < v.size(); ++i) {
    if (!is_zero(v(i))) return false;
  }
  return true;
}

/// Kronecker product of coordinate vectors: index i * b.size() + j.
template <class S>
Vec<S> kron(const Vec<S>& a, const Vec<S>& b) {
  Vec<S> out = Vec<S>::Zero(a.size() * b.size());
  for (Index i = 0; i < a.size(); ++i) {
    if (is_zero(a(i))) continue;
    for (Index j = 0; j < b.size(); ++j) {
      if (!is_zero(b(j))) out(i * b.size() + j) = a(i) * b(j);
    }
  }
  return out;
}

/// Matrix-vector product that skips zero coordinates; exact scalars make
/// multiplications by zero far from free.
template <class S>
Vec<S> apply(const Mat<S>& m, const Vec<S>& x) {
  if (m.cols() != x.size()) throw Error(ErrorKind::DimensionMismatch, "matrix/vector shape");
  Vec<S> out = Vec<S>::Zero(m.rows());
  for (Index j = 0; j < x.size(); ++j) {
    if (is_zero(x(j))) continue;
    for (Index i = 0; i < m.rows(); ++i) {
      if (!is_zero(m(i, j))) out(i) += m(i, j) * x(j);
    }
  }
  return out;
}

template <class S>
Mat<S> compose(const Mat<S>& outer, const Mat<S>& inner) {
  Mat<S> out(outer.rows(), inner.cols());
  for (Index j = 0; j < inner.cols(); ++j) out.col(j) = apply<S>(outer, inner.col(j));
  return out;
}

/// Brings `m` into reduced row echelon form in place and returns the pivot
/// columns in increasing order. Pivots are normalised to 1.
template <class S>
std::vector<Index> rref_in_place(Mat<S>& m) {
  std::vector<Index> pivots;
  Index row = 0;
  std::vector<Index> support;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index found = -1;
    for (Index r = row; r < m.rows(); ++r) {
      if (!is_zero(m(r, col))) {
        found = r;
        break;
      }
    }
    if (found < 0) continue;
    if (found != row) m.row(found).swap(m.row(row));
    S scale = inverse(m(row, col));
    support.clear();
    for (Index c = col; c < m.cols(); ++c) {
      if (!is_zero(m(row, c))) {
        m(row, c) *= scale;
        support.push_back(c);
      }
    }
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      S factor = m(r, col);
      for (Index c : support) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class S>
Index rank(Mat<S> m) {
  return static_cast<Index>(rref_in_place(m).size());
}

template <class S>
class Subspace;

/// Incrementally maintained reduced echelon basis. Inserting a vector costs
/// one reduction against the current pivots.
template <class S>
class SpanBuilder {
 public:
  explicit SpanBuilder(Index ambient) : ambient_(ambient) {}

  Index ambient() const { return ambient_; }
  Index dim() const { return static_cast<Index>(rows_.size()); }

  /// Reduces `v` against the current basis; the result is zero iff v is in the span.
  Vec<S> reduce(Vec<S> v) const {
    if (v.size() != ambient_) throw Error(ErrorKind::DimensionMismatch, "vector length vs ambient dimension");
    for (const auto& [pivot, row] : rows_) {
      if (is_zero(v(pivot))) continue;
      S factor = v(pivot);
      for (Index c : row.support) v(c) -= factor * row.values(c);
    }
    return v;
  }

  bool contains(const Vec<S>& v) const { return is_zero_vector<S>(reduce(v)); }

  /// Returns true if the span grew.
  bool insert(const Vec<S>& v) {
    Vec<S> r = reduce(v);
    Index pivot = -1;
    for (Index i = 0; i < r.size(); ++i) {
      if (!is_zero(r(i))) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return false;
    S scale = inverse(r(pivot));
    Row fresh;
    for (Index c = pivot; c < r.size(); ++c) {
      if (!is_zero(r(c))) {
        r(c) *= scale;
        fresh.support.push_back(c);
      }
    }
    fresh.values = std::move(r);
    for (auto& [p, row] : rows_) {
      if (is_zero(row.values(pivot))) continue;
      S factor = row.values(pivot);
      for (Index c : fresh.support) row.values(c) -= factor * fresh.values(c);
      row.refresh_support(p);
    }
    auto at = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                               [](const auto& entry, Index key) { return entry.first < key; });
    rows_.insert(at, {pivot, std::move(fresh)});
    return true;
  }

  template <class Derived>
  void insert_rows(const Eigen::MatrixBase<Derived>& rows) {
    for (Index i = 0; i < rows.rows(); ++i) insert(rows.row(i).transpose());
  }

  Subspace<S> build() const;

 private:
  struct Row {
    Vec<S> values;
    std::vector<Index> support;
    void refresh_support(Index from) {
      support.clear();
      for (Index c = from; c < values.size(); ++c) {
        if (!is_zero(values(c))) support.push_back(c);
      }
    }
  };

  Index ambient_;
  std::vector<std::pair<Index, Row>> rows_;
};

/// A subspace of S^n held by its reduced row echelon basis, so two subspaces
/// are equal exactly when their stored bases are identical.
template <class S>
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(Index ambient) { return Subspace(ambient, Mat<S>(0, ambient), {}); }
  static Subspace full(Index ambient) {
    std::vector<Index> pivots(static_cast<std::size_t>(ambient));
    for (Index i = 0; i < ambient; ++i) pivots[static_cast<std::size_t>(i)] = i;
    return Subspace(ambient, Mat<S>::Identity(ambient, ambient), std::move(pivots));
  }
  /// Span of the rows of `generators`.
  static Subspace span_rows(Index ambient, const Mat<S>& generators) {
    if (generators.rows() > 0 && generators.cols() != ambient) {
      throw Error(ErrorKind::DimensionMismatch, "generator length vs ambient dimension");
    }
    Mat<S> m = generators;
    auto pivots = rref_in_place(m);
    const auto rank = static_cast<Index>(pivots.size());
    return Subspace(ambient, m.topRows(rank), std::move(pivots));
  }
  static Subspace span(Index ambient, const std::vector<Vec<S>>& generators) {
    SpanBuilder<S> builder(ambient);
    for (const auto& v : generators) builder.insert(v);
    return builder.build();
  }

  Index ambient() const { return ambient_; }
  Index dim() const { return basis_.rows(); }
  bool is_zero_space() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }
  /// Rows form the canonical echelon basis.
  const Mat<S>& basis() const { return basis_; }
  Vec<S> basis_vector(Index i) const { return basis_.row(i).transpose(); }
  const std::vector<Index>& pivots() const { return pivots_; }

  bool contains(const Vec<S>& v) const { return coordinates(v).has_value(); }

  /// Coordinates of v in the echelon basis, or nothing if v lies outside.
  /// With a reduced echelon basis these are just v's pivot entries.
  std::optional<Vec<S>> coordinates(const Vec<S>& v) const {
    if (v.size() != ambient_) throw Error(ErrorKind::DimensionMismatch, "vector length vs ambient dimension");
    Vec<S> coords(dim());
    Vec<S> rebuilt = Vec<S>::Zero(ambient_);
    for (Index i = 0; i < dim(); ++i) {
      coords(i) = v(pivots_[static_cast<std::size_t>(i)]);
      if (is_zero(coords(i))) continue;
      for (Index c = 0; c < ambient_; ++c) {
        if (!is_zero(basis_(i, c))) rebuilt(c) += coords(i) * basis_(i, c);
      }
    }
    if (rebuilt != v) return std::nullopt;
    return coords;
  }

  Vec<S> from_coordinates(const Vec<S>& coords) const {
    Vec<S> out = Vec<S>::Zero(ambient_);
    for (Index i = 0; i < dim(); ++i) {
      if (is_zero(coords(i))) continue;
      for (Index c = 0; c < ambient_; ++c) {
        if (!is_zero(basis_(i, c))) out(c) += coords(i) * basis_(i, c);
      }
    }
    return out;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_.rows() == b.basis_.rows() && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  friend class SpanBuilder<S>;
  Subspace(Index ambient, Mat<S> basis, std::vector<Index> pivots)
      : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  Index ambient_ = 0;
  Mat<S> basis_;
  std::vector<Index> pivots_;
};

template <class S>
Subspace<S> SpanBuilder<S>::build() const {
  Mat<S> basis(static_cast<Index>(rows_.size()), ambient_);
  std::vector<Index> pivots;
  Index i = 0;
  for (const auto& [pivot, row] : rows_) {
    basis.row(i++) = row.values.transpose();
    pivots.push_back(pivot);
  }
  return Subspace<S>(ambient_, std::move(basis), std::move(pivots));
}

/// Solution space of m x = 0.
template <class S>
Subspace<S> kernel_basis(const Mat<S>& m) {
  Mat<S> r = m;
  auto pivots = rref_in_place(r);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (Index p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  Mat<S> generators(m.cols() - static_cast<Index>(pivots.size()), m.cols());
  generators.setZero();
  Index k = 0;
  for (Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    generators(k, free) = S(1);
    for (std::size_t row = 0; row < pivots.size(); ++row) {
      generators(k, pivots[row]) = -r(static_cast<Index>(row), free);
    }
    ++k;
  }
  return Subspace<S>::span_rows(m.cols(), generators);
}

/// Column space of m.
template <class S>
Subspace<S> image_basis(const Mat<S>& m) {
  return Subspace<S>::span_rows(m.rows(), m.transpose());
}

/// Image of a subspace under a linear map.
template <class S>
Subspace<S> image_of(const Mat<S>& m, const Subspace<S>& u) {
  if (m.cols() != u.ambient()) throw Error(ErrorKind::DimensionMismatch, "map domain vs subspace ambient");
  SpanBuilder<S> builder(m.rows());
  for (Index i = 0; i < u.dim(); ++i) builder.insert(apply<S>(m, u.basis_vector(i)));
  return builder.build();
}

/// Some x with m x = b, or nothing when the system is inconsistent.
template <class S>
std::optional<Vec<S>> solve(const Mat<S>& m, const Vec<S>& b) {
  if (m.rows() != b.size()) throw Error(ErrorKind::DimensionMismatch, "right-hand side length");
  Mat<S> aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = b;
  auto pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vec<S> x = Vec<S>::Zero(m.cols());
  for (std::size_t row = 0; row < pivots.size(); ++row) x(pivots[row]) = aug(static_cast<Index>(row), m.cols());
  return x;
}

template <class S>
void require_same_ambient(const Subspace<S>& u, const Subspace<S>& v) {
  if (u.ambient() != v.ambient()) {
    throw Error(ErrorKind::DimensionMismatch, "subspaces of different ambient dimension");
  }
}

template <class S>
bool equal(const Subspace<S>& u, const Subspace<S>& v) {
  require_same_ambient(u, v);
  return u == v;
}

template <class S>
Subspace<S> sum(const Subspace<S>& u, const Subspace<S>& v) {
  require_same_ambient(u, v);
  SpanBuilder<S> builder(u.ambient());
  builder.insert_rows(u.basis());
  builder.insert_rows(v.basis());
  return builder.build();
}

/// u ∩ v as the image of the kernel of [U^T | -V^T] under [U^T | 0].
template <class S>
Subspace<S> intersect(const Subspace<S>& u, const Subspace<S>& v) {
  require_same_ambient(u, v);
  if (u.is_zero_space() || v.is_zero_space()) return Subspace<S>::zero(u.ambient());
  Mat<S> system(u.ambient(), u.dim() + v.dim());
  system.leftCols(u.dim()) = u.basis().transpose();
  system.rightCols(v.dim()) = -v.basis().transpose();
  auto relations = kernel_basis(system);
  SpanBuilder<S> builder(u.ambient());
  for (Index i = 0; i < relations.dim(); ++i) {
    Vec<S> coeffs = relations.basis_vector(i).head(u.dim());
    builder.insert(u.from_coordinates(coeffs));
  }
  return builder.build();
}

/// True iff `inner` ⊆ `outer`.
template <class S>
bool contains(const Subspace<S>& outer, const Subspace<S>& inner) {
  require_same_ambient(outer, inner);
  for (Index i = 0; i < inner.dim(); ++i) {
    if (!outer.contains(inner.basis_vector(i))) return false;
  }
  return true;
}

}  // namespace pdual

#endif  // PDUAL_LINALG_HPP
