#include "pdual/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace pdual {

namespace {

using nlohmann::json;

const std::set<std::string>& suite_set() {
  static const std::set<std::string> names(suite_names().begin(), suite_names().end());
  return names;
}

const std::set<std::string>& error_names() {
  static const std::set<std::string> names = [] {
    std::set<std::string> out;
    for (int k = 0; k <= static_cast<int>(ErrorKind::ParseError); ++k) {
      out.emplace(kind_name(static_cast<ErrorKind>(k)));
    }
    return out;
  }();
  return names;
}

/// Parser state: the source name and a JSON-pointer-like path for messages.
class Reader {
 public:
  explicit Reader(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(const std::string& path, const std::string& message) const {
    throw Error(ErrorKind::ParseError, source_ + ": " + (path.empty() ? "/" : path) + ": " + message);
  }

  const json& field(const json& j, const std::string& path, const std::string& key) const {
    auto it = j.find(key);
    if (it == j.end()) fail(path, "missing key '" + key + "'");
    return *it;
  }

  void only_keys(const json& j, const std::string& path, std::initializer_list<std::string_view> allowed) const {
    if (!j.is_object()) fail(path, "expected an object");
    for (const auto& [key, value] : j.items()) {
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) fail(path, "unknown key '" + key + "'");
    }
  }

  std::size_t count(const json& j, const std::string& path, std::size_t minimum = 1) const {
    if (!j.is_number_integer() || j.get<std::int64_t>() < static_cast<std::int64_t>(minimum)) {
      fail(path, "expected an integer ≥ " + std::to_string(minimum));
    }
    return j.get<std::size_t>();
  }

  std::string text(const json& j, const std::string& path) const {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
  }

  Rational rational(const json& j, const std::string& path) const {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (!j.is_string()) fail(path, "expected an exact rational as a string or integer");
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& err) {
      fail(path, err.what());
    }
  }

  RationalVector vector(const json& j, const std::string& path) const {
    if (!j.is_array()) fail(path, "expected an array");
    RationalVector out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rational(j[i], path + "/" + std::to_string(i)));
    return out;
  }

  RationalMatrix matrix(const json& j, const std::string& path) const {
    if (!j.is_array()) fail(path, "expected an array of rows");
    RationalMatrix out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(vector(j[i], path + "/" + std::to_string(i)));
    return out;
  }

  std::vector<RationalVector> vectors(const json& j, const std::string& path) const { return matrix(j, path); }

  std::vector<RationalMatrix> matrices(const json& j, const std::string& path) const {
    if (!j.is_array()) fail(path, "expected an array of matrices");
    std::vector<RationalMatrix> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(matrix(j[i], path + "/" + std::to_string(i)));
    return out;
  }

  std::vector<std::string> labels(const json& j, const std::string& path) const {
    if (!j.is_array()) fail(path, "expected an array of labels");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(text(j[i], path + "/" + std::to_string(i)));
    return out;
  }

  AlgebraSpec algebra(const json& j, const std::string& path) const {
    only_keys(j, path, {"product_of_fields", "matrix", "structure"});
    if (j.size() != 1) fail(path, "an algebra is one of product_of_fields, matrix or structure");
    AlgebraSpec spec;
    if (j.contains("product_of_fields")) {
      spec.kind = AlgebraSpec::Kind::product_of_fields;
      spec.size = static_cast<Index>(count(j["product_of_fields"], path + "/product_of_fields"));
    } else if (j.contains("matrix")) {
      const auto p = path + "/matrix";
      only_keys(j["matrix"], p, {"size"});
      spec.kind = AlgebraSpec::Kind::matrix;
      spec.size = static_cast<Index>(count(field(j["matrix"], p, "size"), p + "/size"));
    } else {
      const auto p = path + "/structure";
      const auto& s = j["structure"];
      only_keys(s, p, {"products", "unit", "labels"});
      spec.kind = AlgebraSpec::Kind::structure;
      const auto& products = field(s, p, "products");
      if (!products.is_array() || products.empty()) fail(p + "/products", "expected a non-empty d × d array");
      for (std::size_t i = 0; i < products.size(); ++i) {
        spec.products.push_back(vectors(products[i], p + "/products/" + std::to_string(i)));
      }
      spec.unit = vector(field(s, p, "unit"), p + "/unit");
      if (s.contains("labels")) spec.labels = labels(s["labels"], p + "/labels");
      spec.size = static_cast<Index>(spec.products.size());
    }
    return spec;
  }

  GroupSpec group(const json& j, const std::string& path) const {
    only_keys(j, path, {"cyclic", "symmetric", "table", "labels"});
    GroupSpec spec;
    if (j.contains("cyclic")) {
      spec.kind = GroupSpec::Kind::cyclic;
      spec.size = count(j["cyclic"], path + "/cyclic");
    } else if (j.contains("symmetric")) {
      spec.kind = GroupSpec::Kind::symmetric;
      spec.size = count(j["symmetric"], path + "/symmetric");
    } else if (j.contains("table")) {
      spec.kind = GroupSpec::Kind::table;
      const auto& t = j["table"];
      if (!t.is_array()) fail(path + "/table", "expected a square array");
      for (std::size_t r = 0; r < t.size(); ++r) {
        const auto rp = path + "/table/" + std::to_string(r);
        if (!t[r].is_array()) fail(rp, "expected a row");
        std::vector<GroupElement> row;
        for (std::size_t c = 0; c < t[r].size(); ++c) row.push_back(count(t[r][c], rp + "/" + std::to_string(c), 0));
        spec.table.push_back(std::move(row));
      }
      spec.size = spec.table.size();
    } else {
      fail(path, "a group is one of cyclic, symmetric or table");
    }
    if (j.contains("labels")) {
      if (spec.kind != GroupSpec::Kind::table) fail(path + "/labels", "labels only apply to an explicit table");
      spec.labels = labels(j["labels"], path + "/labels");
    }
    return spec;
  }

  ActionSpec action(const json& j, const std::string& path) const {
    only_keys(j, path, {"explicit", "global", "trivial_split", "restrict_global"});
    if (j.size() != 1) fail(path, "a partial action is one of explicit, global, trivial_split or restrict_global");
    ActionSpec spec;
    if (j.contains("explicit")) {
      const auto p = path + "/explicit";
      only_keys(j["explicit"], p, {"idempotents", "beta"});
      spec.kind = ActionSpec::Kind::explicit_data;
      spec.idempotents = vectors(field(j["explicit"], p, "idempotents"), p + "/idempotents");
      spec.matrices = matrices(field(j["explicit"], p, "beta"), p + "/beta");
    } else if (j.contains("global")) {
      const auto p = path + "/global";
      only_keys(j["global"], p, {"automorphisms"});
      spec.kind = ActionSpec::Kind::global;
      spec.matrices = matrices(field(j["global"], p, "automorphisms"), p + "/automorphisms");
    } else if (j.contains("trivial_split")) {
      const auto p = path + "/trivial_split";
      only_keys(j["trivial_split"], p, {"r", "s"});
      spec.kind = ActionSpec::Kind::trivial_split;
      spec.first = std::make_shared<AlgebraSpec>(algebra(field(j["trivial_split"], p, "r"), p + "/r"));
      spec.second = std::make_shared<AlgebraSpec>(algebra(field(j["trivial_split"], p, "s"), p + "/s"));
    } else {
      const auto p = path + "/restrict_global";
      const auto& r = j["restrict_global"];
      only_keys(r, p, {"algebra", "automorphisms", "idempotent"});
      spec.kind = ActionSpec::Kind::restrict_global;
      spec.first = std::make_shared<AlgebraSpec>(algebra(field(r, p, "algebra"), p + "/algebra"));
      spec.matrices = matrices(field(r, p, "automorphisms"), p + "/automorphisms");
      spec.idempotent = vector(field(r, p, "idempotent"), p + "/idempotent");
    }
    return spec;
  }

  HopfSpec hopf(const json& j, const std::string& path) const {
    only_keys(j, path, {"lift", "algebra", "coproduct", "counit", "antipode", "action"});
    HopfSpec spec;
    if (j.contains("lift")) {
      if (!j["lift"].is_boolean() || !j["lift"].get<bool>() || j.size() != 1) {
        fail(path + "/lift", "a lift is requested with {\"lift\": true} and nothing else");
      }
      spec.lift = true;
      return spec;
    }
    spec.algebra = algebra(field(j, path, "algebra"), path + "/algebra");
    spec.coproduct = vectors(field(j, path, "coproduct"), path + "/coproduct");
    spec.counit = vector(field(j, path, "counit"), path + "/counit");
    spec.antipode = matrix(field(j, path, "antipode"), path + "/antipode");
    spec.action = matrices(field(j, path, "action"), path + "/action");
    return spec;
  }

  ScenarioSpec scenario(const json& j) const {
    only_keys(j, "", {"name", "description", "field", "group", "algebra", "partial_action", "hopf", "hopf_lift",
                      "suites", "expected"});
    ScenarioSpec spec;
    spec.name = text(field(j, "", "name"), "/name");
    if (j.contains("description")) text(j["description"], "/description");
    if (j.contains("field")) {
      try {
        spec.field = Field::parse(text(j["field"], "/field"));
      } catch (const Error& err) {
        fail("/field", err.what());
      }
    }
    if (j.contains("group")) spec.group = group(j["group"], "/group");
    if (j.contains("algebra")) spec.algebra = algebra(j["algebra"], "/algebra");
    if (j.contains("partial_action")) {
      spec.action = action(j["partial_action"], "/partial_action");
      if (!spec.group) fail("/partial_action", "a partial action needs a group");
      const auto kind = spec.action->kind;
      const bool needs_algebra = kind == ActionSpec::Kind::explicit_data || kind == ActionSpec::Kind::global;
      if (needs_algebra && !spec.algebra) fail("/partial_action", "this partial action needs a top-level algebra");
      if (!needs_algebra && spec.algebra) fail("/algebra", "the algebra is determined by the partial action");
    }
    if (j.contains("hopf")) spec.hopf = hopf(j["hopf"], "/hopf");
    if (j.contains("hopf_lift")) {
      if (!j["hopf_lift"].is_boolean()) fail("/hopf_lift", "expected a boolean");
      if (j["hopf_lift"].get<bool>()) {
        if (spec.hopf) fail("/hopf_lift", "give either hopf or hopf_lift");
        spec.hopf = HopfSpec{};
        spec.hopf->lift = true;
      }
    }
    if (spec.hopf && spec.hopf->lift && !spec.action) fail("/hopf", "a lift needs a partial group action");
    if (spec.hopf && !spec.hopf->lift && !spec.algebra) fail("/hopf", "an explicit Hopf action needs an algebra");
    if (!spec.action && !spec.hopf) fail("", "nothing to verify: give a partial_action or a hopf action");
    if (j.contains("suites")) {
      const auto& s = j["suites"];
      if (!s.is_array()) fail("/suites", "expected an array of suite names");
      for (std::size_t i = 0; i < s.size(); ++i) {
        auto name = text(s[i], "/suites/" + std::to_string(i));
        if (!suite_set().count(name)) fail("/suites/" + std::to_string(i), "unknown suite '" + name + "'");
        spec.suites.push_back(std::move(name));
      }
    }
    if (j.contains("expected")) {
      const auto& e = j["expected"];
      if (!e.is_object()) fail("/expected", "expected an object");
      const auto& keys = expectation_keys();
      for (const auto& [key, value] : e.items()) {
        const auto p = "/expected/" + key;
        if (key == "validation_error") {
          auto name = text(value, p);
          if (!error_names().count(name)) fail(p, "unknown error kind '" + name + "'");
          spec.expected_error = std::move(name);
        } else if (std::find(keys.begin(), keys.end(), key) != keys.end()) {
          if (!value.is_number_integer()) fail(p, "expected an integer");
          spec.expected[key] = value.get<std::int64_t>();
        } else {
          fail(p, "unknown expectation");
        }
      }
    }
    return spec;
  }

 private:
  std::string source_;
};

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"axioms", "dot_identities", "grading", "smash",
                                                 "duality", "separability", "centers", "hopf"};
  return names;
}

const std::vector<std::string>& expectation_keys() {
  static const std::vector<std::string> keys = {"center_dim_smash", "dim_corner",        "dim_kernel",
                                                "dim_partial_smash", "dim_skew",         "dim_smash"};
  return keys;
}

ScenarioSpec parse_scenario(std::string_view text, const std::string& source) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& err) {
    throw Error(ErrorKind::ParseError, source + ": byte " + std::to_string(err.byte) + ": malformed document");
  }
  return Reader(source).scenario(j);
}

ScenarioSpec load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, path.string() + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str(), path.string());
}

FiniteGroup build_group(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::cyclic:
      return FiniteGroup::cyclic(spec.size);
    case GroupSpec::Kind::symmetric:
      return FiniteGroup::symmetric(spec.size);
    case GroupSpec::Kind::table:
      break;
  }
  return FiniteGroup::from_table(spec.table, spec.labels);
}

}  // namespace pdual
