#include <doctest.h>

#include "support.hpp"

using namespace pdual;
using namespace pdual::testing;

namespace {

void check_group_axioms(const FiniteGroup& g) {
  const auto n = g.order();
  const auto e = g.identity();
  for (GroupElement a = 0; a < n; ++a) {
    CHECK(g.mul(e, a) == a);
    CHECK(g.mul(a, e) == a);
    CHECK(g.mul(a, g.inverse(a)) == e);
    CHECK(g.mul(g.inverse(a), a) == e);
    CHECK(g.inverse(g.inverse(a)) == a);
    for (GroupElement b = 0; b < n; ++b) {
      for (GroupElement c = 0; c < n; ++c) CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
    }
  }
}

}  // namespace

TEST_SUITE("group") {

TEST_CASE("trivial and cyclic groups") {
  auto trivial = FiniteGroup::from_table({{0}});
  CHECK(trivial.order() == 1);
  CHECK(FiniteGroup::cyclic(1).order() == 1);
  auto z2 = FiniteGroup::from_table({{0, 1}, {1, 0}});
  CHECK(z2.inverse(1) == 1);
  for (std::size_t n = 1; n <= 7; ++n) {
    auto c = FiniteGroup::cyclic(n);
    CAPTURE(n);
    check_group_axioms(c);
    CHECK(c.is_abelian());
    // Brute-force inverse scan: in Z_n only 0 and n/2 are self-inverse.
    for (GroupElement a = 0; a < n; ++a) CHECK((c.inverse(a) == a) == (2 * a % n == 0));
  }
}

TEST_CASE("symmetric group matches permutation composition") {
  for (std::size_t m = 1; m <= 4; ++m) {
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(m);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    auto g = FiniteGroup::symmetric(m);
    CAPTURE(m);
    REQUIRE(g.order() == perms.size());
    CHECK(g.identity() == 0);
    for (std::size_t s = 0; s < perms.size(); ++s) {
      for (std::size_t t = 0; t < perms.size(); ++t) {
        std::vector<std::size_t> st(m);
        for (std::size_t i = 0; i < m; ++i) st[i] = perms[s][perms[t][i]];
        const auto idx = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), st) - perms.begin());
        CHECK(g.mul(s, t) == idx);
      }
    }
    check_group_axioms(g);
  }
  auto s3 = FiniteGroup::symmetric(3);
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());
}

TEST_CASE("direct products") {
  auto g = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3));
  CHECK(g.order() == 6);
  CHECK(g.is_abelian());
  check_group_axioms(g);
  // (1, 1) has order 6.
  GroupElement x = 1 * 3 + 1;
  GroupElement p = x;
  int order = 1;
  while (p != g.identity()) {
    p = g.mul(p, x);
    ++order;
  }
  CHECK(order == 6);
}

TEST_CASE("invalid tables are rejected with witnesses") {
  auto kind_of = [](const FiniteGroup::Table& t) {
    try {
      FiniteGroup::from_table(t);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InternalFailure;
  };
  CHECK(kind_of({{0, 1}, {1, 1}}) == ErrorKind::NoInverse);
  CHECK(kind_of({{0, 0}, {0, 0}}) == ErrorKind::NoIdentity);
  // (1 1) 2 = 2 but 1 (1 2) = 1.
  CHECK(kind_of({{0, 1, 2}, {1, 0, 0}, {2, 1, 0}}) == ErrorKind::NotAssociative);
  CHECK(kind_of({{0, 1}, {1}}) == ErrorKind::DimensionMismatch);
  CHECK(kind_of({{0, 2}, {1, 0}}) == ErrorKind::DimensionMismatch);
}

}  // TEST_SUITE
