#include "pdual/group.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "pdual/error.hpp"

namespace pdual {

FiniteGroup FiniteGroup::from_table(Table cayley, std::vector<std::string> labels) {
  const std::size_t n = cayley.size();
  if (n == 0) throw Error(ErrorKind::DimensionMismatch, "empty Cayley table");
  for (std::size_t g = 0; g < n; ++g) {
    if (cayley[g].size() != n) throw Error(ErrorKind::DimensionMismatch, "Cayley table is not square", {g});
    for (GroupElement x : cayley[g]) {
      if (x >= n) throw Error(ErrorKind::DimensionMismatch, "Cayley entry out of range", {g, x});
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]]) {
          throw Error(ErrorKind::NotAssociative, "(ab)c != a(bc)", {a, b, c});
        }
      }
    }
  }
  std::optional<GroupElement> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < n && ok; ++g) ok = cayley[e][g] == g && cayley[g][e] == g;
    if (ok) identity = e;
  }
  if (!identity) throw Error(ErrorKind::NoIdentity, "no two-sided identity");
  std::vector<GroupElement> inverse(n);
  for (std::size_t g = 0; g < n; ++g) {
    std::optional<GroupElement> inv;
    for (std::size_t h = 0; h < n && !inv; ++h) {
      if (cayley[g][h] == *identity && cayley[h][g] == *identity) inv = h;
    }
    if (!inv) throw Error(ErrorKind::NoInverse, "element has no two-sided inverse", {g});
    inverse[g] = *inv;
  }
  if (labels.empty()) {
    for (std::size_t g = 0; g < n; ++g) labels.push_back("g" + std::to_string(g));
  } else if (labels.size() != n) {
    throw Error(ErrorKind::DimensionMismatch, "label count differs from group order");
  }
  FiniteGroup group;
  group.table_ = std::move(cayley);
  group.labels_ = std::move(labels);
  group.inverse_ = std::move(inverse);
  group.identity_ = *identity;
  return group;
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  Table t(n, std::vector<GroupElement>(n));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    labels.push_back(a == 0 ? "e" : (a == 1 ? "x" : "x^" + std::to_string(a)));
  }
  return from_table(std::move(t), std::move(labels));
}

FiniteGroup FiniteGroup::symmetric(std::size_t m) {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(m);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const std::size_t n = perms.size();
  Table t(n, std::vector<GroupElement>(n));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<std::size_t> c(m);
      for (std::size_t i = 0; i < m; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = static_cast<GroupElement>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
    std::string label = "[";
    for (std::size_t i = 0; i < m; ++i) label += (i ? " " : "") + std::to_string(perms[a][i]);
    labels.push_back(label + "]");
  }
  return from_table(std::move(t), std::move(labels));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t n = g.order() * h.order();
  Table t(n, std::vector<GroupElement>(n));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      t[a][b] = g.mul(a / h.order(), b / h.order()) * h.order() + h.mul(a % h.order(), b % h.order());
    }
    labels.push_back("(" + g.label(a / h.order()) + "," + h.label(a % h.order()) + ")");
  }
  return from_table(std::move(t), std::move(labels));
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

}  // namespace pdual
