// Shared fixtures, random generators and brute-force oracles for the tests.
#ifndef PDUAL_TESTS_SUPPORT_HPP
#define PDUAL_TESTS_SUPPORT_HPP

#include <algorithm>
#include <filesystem>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "pdual/hopf.hpp"

namespace pdual::testing {

inline const Field kQ = Field::rationals();
inline const Field kF7 = Field::prime(7);

template <class S>
Mat<S> identity_matrix(const Field& f, Index n) {
  Mat<S> m = Mat<S>::Zero(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = scalar<S>(f, 1);
  return m;
}

/// Matrix sending e_j to e_{image[j]}.
template <class S>
Mat<S> permutation_matrix(const Field& f, const std::vector<std::size_t>& image) {
  const auto n = static_cast<Index>(image.size());
  Mat<S> m = Mat<S>::Zero(n, n);
  for (Index j = 0; j < n; ++j) m(static_cast<Index>(image[static_cast<std::size_t>(j)]), j) = scalar<S>(f, 1);
  return m;
}

template <class S>
Vec<S> vec(const Field& f, std::initializer_list<long> entries) {
  Vec<S> v(static_cast<Index>(entries.size()));
  Index i = 0;
  for (long x : entries) v(i++) = scalar<S>(f, x);
  return v;
}

/// Z2 on k × k with D_g = k × 0 and g·(a1, a2) = (a1, 0).
template <class S>
PartialAction<S> s1(const Field& f = kQ) {
  auto a = product_of_fields<S>(f, 2);
  Mat<S> proj = Mat<S>::Zero(2, 2);
  proj(0, 0) = scalar<S>(f, 1);
  return PartialAction<S>::make(FiniteGroup::cyclic(2), a, {a.unit(), vec<S>(f, {1, 0})},
                                {identity_matrix<S>(f, 2), proj});
}

template <class S>
PartialAction<S> global_swap(const Field& f = kQ) {
  return global_action(FiniteGroup::cyclic(2), product_of_fields<S>(f, 2),
                       {identity_matrix<S>(f, 2), permutation_matrix<S>(f, {1, 0})});
}

/// G acting on k^|G| = k[G]^* by σ_g e_h = e_{gh}.
template <class S>
PartialAction<S> regular_action(const FiniteGroup& g, const Field& f = kQ) {
  std::vector<Mat<S>> sigma;
  for (GroupElement x = 0; x < g.order(); ++x) {
    std::vector<std::size_t> image;
    for (GroupElement h = 0; h < g.order(); ++h) image.push_back(g.mul(x, h));
    sigma.push_back(permutation_matrix<S>(f, image));
  }
  return global_action(g, product_of_fields<S>(f, static_cast<Index>(g.order())), std::move(sigma));
}

/// The regular action restricted to the coordinates in `subset`.
template <class S>
PartialAction<S> regular_restriction(const FiniteGroup& g, const std::set<std::size_t>& subset, const Field& f = kQ) {
  Vec<S> e = Vec<S>::Zero(static_cast<Index>(g.order()));
  for (auto i : subset) e(static_cast<Index>(i)) = scalar<S>(f, 1);
  return restrict_global(regular_action<S>(g, f), e).action;
}

/// Z3 cyclically permuting k^3, restricted to (1, 1, 0).
template <class S>
PartialAction<S> z3_restriction(const Field& f = kQ) {
  return regular_restriction<S>(FiniteGroup::cyclic(3), {0, 1}, f);
}

/// Random integer matrix with entries in [-bound, bound], biased towards zeros.
inline Mat<Rational> random_matrix(std::mt19937& rng, Index rows, Index cols, int bound = 3) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  std::bernoulli_distribution zero(0.35);
  Mat<Rational> m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c) m(r, c) = zero(rng) ? Rational(0) : Rational(entry(rng));
  }
  return m;
}

/// Random matrix of given rank as a product of random full-rank factors.
inline Mat<Rational> random_matrix_of_rank(std::mt19937& rng, Index rows, Index cols, Index r) {
  for (;;) {
    Mat<Rational> left = random_matrix(rng, rows, r);
    Mat<Rational> right = random_matrix(rng, r, cols);
    Mat<Rational> m = left * right;
    Mat<Rational> copy = m;
    if (static_cast<Index>(rref_in_place(copy).size()) == r) return m;
  }
}

/// Determinant by cofactor expansion along the first row.
inline Rational determinant(const Mat<Rational>& m) {
  const Index n = m.rows();
  if (n == 0) return Rational(1);
  if (n == 1) return m(0, 0);
  Rational out(0);
  for (Index c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    Mat<Rational> minor(n - 1, n - 1);
    for (Index r = 1; r < n; ++r) {
      for (Index k = 0, kk = 0; k < n; ++k) {
        if (k != c) minor(r - 1, kk++) = m(r, k);
      }
    }
    Rational term = m(0, c) * determinant(minor);
    out += (c % 2 == 0) ? term : Rational(-term);
  }
  return out;
}

/// Largest k with a non-vanishing k × k minor. Exponential; small matrices only.
inline Index rank_by_minors(const Mat<Rational>& m) {
  const Index maxk = std::min(m.rows(), m.cols());
  for (Index k = maxk; k > 0; --k) {
    std::vector<bool> rsel(static_cast<std::size_t>(m.rows()), false);
    std::fill(rsel.begin(), rsel.begin() + k, true);
    do {
      std::vector<bool> csel(static_cast<std::size_t>(m.cols()), false);
      std::fill(csel.begin(), csel.begin() + k, true);
      do {
        Mat<Rational> sub(k, k);
        for (Index r = 0, rr = 0; r < m.rows(); ++r) {
          if (!rsel[static_cast<std::size_t>(r)]) continue;
          for (Index c = 0, cc = 0; c < m.cols(); ++c) {
            if (csel[static_cast<std::size_t>(c)]) sub(rr, cc++) = m(r, c);
          }
          ++rr;
        }
        if (determinant(sub) != 0) return k;
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
  }
  return 0;
}

/// A random subset of {0, ..., n-1} that contains 0.
inline std::set<std::size_t> random_subset_with_zero(std::mt19937& rng, std::size_t n) {
  std::set<std::size_t> out{0};
  std::bernoulli_distribution keep(0.5);
  for (std::size_t i = 1; i < n; ++i) {
    if (keep(rng)) out.insert(i);
  }
  return out;
}

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(PDUAL_FIXTURE_DIR) / (name + ".json");
}

}  // namespace pdual::testing

#endif  // PDUAL_TESTS_SUPPORT_HPP
