// Declarative scenario files: a field, a group, an algebra, a partial action
// (or an explicit Hopf action), the suites to run and optional expected values.
#ifndef PDUAL_SCENARIO_HPP
#define PDUAL_SCENARIO_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pdual/hopf.hpp"

namespace pdual {

using RationalVector = std::vector<Rational>;
/// Row-major.
using RationalMatrix = std::vector<RationalVector>;

struct AlgebraSpec {
  enum class Kind { product_of_fields, matrix, structure };
  Kind kind = Kind::product_of_fields;
  /// Number of factors, or the matrix size.
  Index size = 1;
  /// For explicit structure constants: products[i][j] are the coordinates of b_i b_j.
  std::vector<std::vector<RationalVector>> products;
  RationalVector unit;
  std::vector<std::string> labels;
};

struct GroupSpec {
  enum class Kind { cyclic, symmetric, table };
  Kind kind = Kind::cyclic;
  std::size_t size = 1;
  FiniteGroup::Table table;
  std::vector<std::string> labels;
};

struct ActionSpec {
  enum class Kind { explicit_data, global, trivial_split, restrict_global };
  Kind kind = Kind::explicit_data;
  /// 1_g per group element (explicit data).
  std::vector<RationalVector> idempotents;
  /// β_g or σ_g per group element.
  std::vector<RationalMatrix> matrices;
  /// R and S for a split; the ambient algebra for a restriction.
  std::shared_ptr<AlgebraSpec> first;
  std::shared_ptr<AlgebraSpec> second;
  /// The central idempotent a global action is restricted to.
  RationalVector idempotent;
};

struct HopfSpec {
  /// Linearize the scenario's partial group action over k[G].
  bool lift = false;
  AlgebraSpec algebra;
  /// Δ(b_i) in coordinates k n + l, one vector per basis element.
  std::vector<RationalVector> coproduct;
  RationalVector counit;
  RationalMatrix antipode;
  /// Matrix of a ↦ b_i · a, one per basis element of H.
  std::vector<RationalMatrix> action;
};

struct ScenarioSpec {
  std::string name;
  Field field;
  std::optional<GroupSpec> group;
  std::optional<AlgebraSpec> algebra;
  std::optional<ActionSpec> action;
  std::optional<HopfSpec> hopf;
  std::vector<std::string> suites;
  std::map<std::string, std::int64_t> expected;
  std::optional<std::string> expected_error;
};

/// Suite names in the order they run.
const std::vector<std::string>& suite_names();

/// Keys accepted under "expected", besides "validation_error".
const std::vector<std::string>& expectation_keys();

/// Throws ParseError naming the offending location.
ScenarioSpec parse_scenario(std::string_view text, const std::string& source = "<scenario>");
ScenarioSpec load_scenario(const std::filesystem::path& path);

FiniteGroup build_group(const GroupSpec& spec);

template <class S>
Vec<S> build_vector(const Field& f, const RationalVector& v) {
  Vec<S> out(static_cast<Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Index>(i)) = scalar<S>(f, v[i]);
  return out;
}

template <class S>
Mat<S> build_matrix(const Field& f, const RationalMatrix& m, Index rows, Index cols, const std::string& what) {
  if (static_cast<Index>(m.size()) != rows) {
    throw Error(ErrorKind::DimensionMismatch, what + ": expected " + std::to_string(rows) + " rows");
  }
  Mat<S> out(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const auto& row = m[static_cast<std::size_t>(r)];
    if (static_cast<Index>(row.size()) != cols) {
      throw Error(ErrorKind::DimensionMismatch, what + ": expected " + std::to_string(cols) + " columns");
    }
    for (Index c = 0; c < cols; ++c) out(r, c) = scalar<S>(f, row[static_cast<std::size_t>(c)]);
  }
  return out;
}

template <class S>
Algebra<S> build_algebra(const AlgebraSpec& spec, const Field& f) {
  switch (spec.kind) {
    case AlgebraSpec::Kind::product_of_fields:
      return product_of_fields<S>(f, spec.size);
    case AlgebraSpec::Kind::matrix:
      return full_matrix_algebra<S>(f, spec.size);
    case AlgebraSpec::Kind::structure:
      break;
  }
  const auto d = static_cast<Index>(spec.products.size());
  ProductTable<S> table = empty_table<S>(d);
  for (Index i = 0; i < d; ++i) {
    const auto& row = spec.products[static_cast<std::size_t>(i)];
    if (static_cast<Index>(row.size()) != d) throw Error(ErrorKind::DimensionMismatch, "products must be d × d");
    for (Index j = 0; j < d; ++j) {
      const auto& v = row[static_cast<std::size_t>(j)];
      if (static_cast<Index>(v.size()) != d) throw Error(ErrorKind::DimensionMismatch, "product vectors need d entries");
      table.col(i * d + j) = build_vector<S>(f, v);
    }
  }
  if (static_cast<Index>(spec.unit.size()) != d) throw Error(ErrorKind::DimensionMismatch, "unit needs d entries");
  return Algebra<S>::make(f, std::move(table), build_vector<S>(f, spec.unit), spec.labels);
}

template <class S>
std::vector<Mat<S>> build_matrices(const Field& f, const std::vector<RationalMatrix>& ms, Index d,
                                   const std::string& what) {
  std::vector<Mat<S>> out;
  for (std::size_t i = 0; i < ms.size(); ++i) out.push_back(build_matrix<S>(f, ms[i], d, d, what + "[" + std::to_string(i) + "]"));
  return out;
}

template <class S>
PartialAction<S> build_action(const ScenarioSpec& spec, const Field& f) {
  if (!spec.group || !spec.action) throw Error(ErrorKind::ParseError, spec.name + ": no partial action given");
  auto G = build_group(*spec.group);
  const auto& a = *spec.action;
  switch (a.kind) {
    case ActionSpec::Kind::trivial_split:
      return trivial_from_split(build_algebra<S>(*a.first, f), build_algebra<S>(*a.second, f), G);
    case ActionSpec::Kind::restrict_global: {
      auto b = build_algebra<S>(*a.first, f);
      auto global = global_action(G, b, build_matrices<S>(f, a.matrices, b.dim(), "automorphisms"));
      return restrict_global(global, build_vector<S>(f, a.idempotent)).action;
    }
    case ActionSpec::Kind::global: {
      if (!spec.algebra) throw Error(ErrorKind::ParseError, spec.name + ": global action needs an algebra");
      auto alg = build_algebra<S>(*spec.algebra, f);
      return global_action(G, alg, build_matrices<S>(f, a.matrices, alg.dim(), "automorphisms"));
    }
    case ActionSpec::Kind::explicit_data:
      break;
  }
  if (!spec.algebra) throw Error(ErrorKind::ParseError, spec.name + ": partial action needs an algebra");
  auto alg = build_algebra<S>(*spec.algebra, f);
  std::vector<Vec<S>> idempotents;
  for (const auto& v : a.idempotents) idempotents.push_back(build_vector<S>(f, v));
  auto beta = build_matrices<S>(f, a.matrices, alg.dim(), "beta");
  return PartialAction<S>::make(std::move(G), std::move(alg), std::move(idempotents), std::move(beta));
}

/// The explicit Hopf action of a scenario.
template <class S>
PartialHopfAction<S> build_hopf_action(const ScenarioSpec& spec, const Field& f) {
  if (!spec.hopf || spec.hopf->lift || !spec.algebra) {
    throw Error(ErrorKind::ParseError, spec.name + ": no explicit Hopf action given");
  }
  const auto& h = *spec.hopf;
  auto halg = build_algebra<S>(h.algebra, f);
  const Index n = halg.dim();
  if (static_cast<Index>(h.coproduct.size()) != n) throw Error(ErrorKind::DimensionMismatch, "coproduct needs n vectors");
  Mat<S> coproduct(n * n, n);
  for (Index i = 0; i < n; ++i) {
    const auto& v = h.coproduct[static_cast<std::size_t>(i)];
    if (static_cast<Index>(v.size()) != n * n) throw Error(ErrorKind::DimensionMismatch, "coproduct vectors need n² entries");
    coproduct.col(i) = build_vector<S>(f, v);
  }
  if (static_cast<Index>(h.counit.size()) != n) throw Error(ErrorKind::DimensionMismatch, "counit needs n entries");
  auto hopf = HopfAlgebra<S>::make(std::move(halg), std::move(coproduct), build_vector<S>(f, h.counit),
                                   build_matrix<S>(f, h.antipode, n, n, "antipode"));
  auto alg = build_algebra<S>(*spec.algebra, f);
  if (static_cast<Index>(h.action.size()) != n) throw Error(ErrorKind::DimensionMismatch, "action needs n matrices");
  auto act = build_matrices<S>(f, h.action, alg.dim(), "action");
  return make_partial_hopf_action(std::move(hopf), std::move(alg), std::move(act));
}

}  // namespace pdual

#endif  // PDUAL_SCENARIO_HPP
