// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "pdual/runner.hpp"
#include "support.hpp"

using namespace pdual;
using namespace pdual::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

const std::vector<std::string> kCorpus{"s1",
                                       "s1_fp7",
                                       "global_z2_swap",
                                       "z3_restriction",
                                       "s3_restriction",
                                       "trivial_split_field_z2",
                                       "trivial_split_field2_z3",
                                       "trivial_split_matrix_z2"};

Report run(const std::string& name, std::vector<std::string> suites) {
  RunOptions options;
  options.suites = std::move(suites);
  return run_scenario_file(fixture(name), options);
}

/// Every named check is present and passes.
void require_checks(Outcome& out, const std::string& scenario, const Report& report,
                    const std::vector<std::string>& names) {
  for (const auto& name : names) {
    const auto* c = report.find(name);
    out.require(c != nullptr, scenario + ": missing " + name);
    if (c) out.require(c->passed(), scenario + ": " + name + " failed");
  }
}

std::int64_t measured(const Report& report, const std::string& check, const std::string& key) {
  const auto* c = report.find(check);
  if (!c || !c->measured.count(key)) return -1;
  return c->measured.at(key);
}

template <class S>
DualityData<S> duality(const PartialAction<S>& pa) {
  return build_phi(build_smash(build_skew(pa)));
}

Outcome axiom_gate() {
  Outcome out;
  for (const auto& name : kCorpus) require_checks(out, name, run(name, {"axioms"}), {"axioms.partial_action"});
  const std::vector<std::pair<std::string, ErrorKind>> corrupted{{"bad_not_central", ErrorKind::NotCentralIdempotent},
                                                                 {"bad_axiom_i", ErrorKind::AxiomIFails},
                                                                 {"bad_iso", ErrorKind::NotIsoOnIdeal},
                                                                 {"bad_axiom_ii", ErrorKind::AxiomIIFails},
                                                                 {"bad_axiom_iii", ErrorKind::AxiomIIIFails}};
  for (const auto& [name, kind] : corrupted) {
    auto spec = load_scenario(fixture(name));
    spec.expected_error.reset();
    try {
      build_action<Rational>(spec, spec.field);
      out.require(false, name + " accepted");
    } catch (const Error& e) {
      out.require(e.kind() == kind, name + " rejected with " + std::string(kind_name(e.kind())));
    }
  }
  if (out.pass) {
    out.detail = std::to_string(kCorpus.size()) + " scenarios accepted, " + std::to_string(corrupted.size()) +
                 " corruptions rejected by the named axiom";
  }
  return out;
}

Outcome dot_identities() {
  Outcome out;
  for (const auto& name : kCorpus) {
    require_checks(out, name, run(name, {"dot_identities"}),
                   {"dot.multiplicative", "dot.composition", "dot.twisted_product", "dot.unit_image",
                    "dot.inverse_composition", "dot.kernel"});
  }
  if (out.pass) out.detail = "six identities exhaustively on every scenario";
  return out;
}

Outcome grading() {
  Outcome out;
  for (const auto& name : kCorpus) {
    require_checks(out, name, run(name, {"grading"}), {"grading.associativity", "grading.strong_iff_global"});
  }
  if (out.pass) out.detail = "associative on all basis triples; strong exactly when global";
  return out;
}

Outcome phi_multiplicative() {
  Outcome out;
  for (const auto& name : kCorpus) {
    require_checks(out, name, run(name, {"duality"}), {"phi.multiplicative", "phi.composition_identity"});
  }
  if (out.pass) out.detail = "Φ multiplicative and the composition identity on every scenario";
  return out;
}

Outcome kernel_matches_formula() {
  Outcome out;
  for (const auto& name : kCorpus) require_checks(out, name, run(name, {"duality"}), {"kernel.formula"});
  auto s1_report = run("s1", {"duality"});
  out.require(measured(s1_report, "kernel.formula", "dim_kernel") == 1, "S1 kernel dimension");
  out.require(measured(s1_report, "kernel.formula", "dim_formula") == 1, "S1 formula dimension");
  auto d = duality(s1<Rational>());
  out.require(d.phi.rows() == 8 && d.phi.cols() == 6, "S1 Φ is not 8×6");
  out.require(rank_by_minors(d.phi) == 5, "S1 Φ rank by minors differs from 5");
  if (out.pass) out.detail = "kernel equals the formula everywhere; S1: dim 1, rank of Φ by minors 5";
  return out;
}

Outcome image_corner() {
  Outcome out;
  for (const auto& name : kCorpus) require_checks(out, name, run(name, {"duality"}), {"image.corner"});
  auto s1_report = run("s1", {"duality"});
  for (const auto* key : {"dim_image", "dim_entrywise", "dim_corner"}) {
    out.require(measured(s1_report, "image.corner", key) == 5, std::string("S1 ") + key);
  }
  // Entry (g, h) ranges over A 1_{g⁻¹} 1_{h⁻¹}.
  auto pa = s1<Rational>();
  const auto& G = pa.group();
  Index count = 0;
  for (GroupElement g = 0; g < G.order(); ++g) {
    for (GroupElement h = 0; h < G.order(); ++h) {
      count += ideal_basis(pa.algebra(), pa.algebra().mul(pa.idempotent(G.inverse(g)), pa.idempotent(G.inverse(h))))
                   .dim();
    }
  }
  out.require(count == 5, "S1 entrywise count " + std::to_string(count));
  if (out.pass) out.detail = "image = entry-constrained = corner everywhere; S1: 2+1+1+1 = 5";
  return out;
}

Outcome decomposition() {
  Outcome out;
  for (const auto& name : kCorpus) {
    require_checks(out, name, run(name, {"duality"}),
                   {"decomposition.ideals", "decomposition.direct_sum", "decomposition.cross_products",
                    "decomposition.corner_bijection"});
  }
  if (out.pass) out.detail = "B = I ⊕ Ker Φ with Φ|_I onto the corner on every scenario";
  return out;
}

Outcome global_isomorphism() {
  Outcome out;
  auto d = duality(global_swap<Rational>());
  out.require(d.kernel.is_zero_space(), "kernel is nonzero");
  out.require(d.bold_e == d.matrices.unit(), "e is not the identity");
  out.require(d.smash.dim() == 8 && d.matrices.dim() == 8, "dimensions differ from 8");
  out.require(rank(d.phi) == 8 && d.map().is_multiplicative() && d.map().is_unital(), "Φ is not an isomorphism");
  require_checks(out, "global_z2_swap", run("global_z2_swap", {"duality"}), {"duality.global_isomorphism"});
  if (out.pass) out.detail = "Z2 swap: Ker Φ = 0, e = 1, Φ bijective B → M_2(A), dim 8";
  return out;
}

Outcome separability() {
  Outcome out;
  for (const auto* name : {"s1", "global_z2_swap"}) {
    auto report = run(name, {"separability"});
    require_checks(out, name, report, {"separability.centralizes", "separability.multiplication"});
  }
  out.require(measured(run("s1", {"separability"}), "separability.centralizes", "ambient_dim") == 36,
              "S1 tensor ambient dimension differs from 36");
  if (out.pass) out.detail = "f centralizes A *_α G and μ(f) = 1 on S1 (ambient 36) and the global swap";
  return out;
}

Outcome centers() {
  Outcome out;
  auto split = run("trivial_split_field_z2", {"centers"});
  require_checks(out, "trivial_split_field_z2", split, {"centers.smash"});
  out.require(measured(split, "centers.smash", "dim_smash") == 6, "trivial split dim B");
  out.require(measured(split, "centers.smash", "center_dim_smash") == 3, "trivial split center");
  auto d = duality(trivial_from_split(base_field<Rational>(kQ), base_field<Rational>(kQ), FiniteGroup::cyclic(2)));
  out.require(center_basis(d.smash.algebra()).dim() == 3, "direct trivial split center");
  auto global = global_swap<Rational>();
  auto b = build_smash(build_skew(global));
  const auto global_center = center_basis(b.algebra()).dim();
  out.require(global_center == center_basis(matrix_algebra(global.algebra(), 2)).dim(), "global center differs");
  require_checks(out, "global_z2_swap", run("global_z2_swap", {"centers"}), {"centers.smash"});
  if (out.pass) {
    out.detail = "trivial split: dim B 6, center 3; global: center " + std::to_string(global_center) + " = Z(M_2(A))";
  }
  return out;
}

Outcome hopf_layer() {
  Outcome out;
  const std::vector<std::pair<std::string, PartialAction<Rational>>> lifts{
      {"S1", s1<Rational>()},
      {"Z3 restriction", z3_restriction<Rational>()},
      {"Z3 regular", regular_action<Rational>(FiniteGroup::cyclic(3))}};
  for (const auto& [name, pa] : lifts) {
    try {
      auto report = hopf_suite(lift_group_partial_action(pa));
      out.require(report.all_passed(), name + ": a check failed");
      require_checks(out, name, report,
                     {"hopf.axioms", "hopf.lambda_multiplicative", "hopf.rho_antimultiplicative",
                      "hopf.lambda_rho_commutation", "coaction.multiplicative", "coaction.counit",
                      "coaction.weak_coassociativity", "hopf.phi_multiplicative", "hopf.phi_psi_identity",
                      "triple.phi_multiplicative", "triple.bold_e", "triple.corner_membership"});
    } catch (const Error& e) {
      out.require(false, name + ": " + e.what());
    }
  }
  if (out.pass) out.detail = "S1 and Q[Z3] lifts: every partial Hopf check passes";
  return out;
}

Outcome grouplike_iso() {
  Outcome out;
  for (const auto& name : kCorpus) {
    const auto spec = load_scenario(fixture(name));
    if (spec.hopf && spec.hopf->lift) {
      const auto report = run(name, {"hopf"});
      require_checks(out, name, report, {"partial_smash.skew_isomorphism"});
    }
  }
  auto s3 = regular_restriction<Rational>(FiniteGroup::symmetric(3), {0, 1, 3});
  auto lifted = lift_group_partial_action(s3);
  auto report = grouplike_iso_check(s3, build_skew(s3), partial_smash(lifted));
  require_checks(out, "s3 restriction", report, {"partial_smash.skew_isomorphism"});
  if (out.pass) out.detail = "a ⊗ g ↦ (a 1_g)⟦g⟧ is an isomorphism on every group scenario";
  return out;
}

int run_cli(const std::string& args, const std::string& output) {
  const std::string command = std::string("\"") + PDUAL_CLI_PATH + "\" " + args + " > \"" + output + "\" 2>/dev/null";
  return std::system(command.c_str());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Outcome determinism() {
  Outcome out;
  const auto dir = std::filesystem::temp_directory_path();
  const auto first = (dir / "pdual_acceptance_1.json").string();
  const auto second = (dir / "pdual_acceptance_2.json").string();
  for (const auto& name : {"s1", "sweedler_partial"}) {
    const auto args = "verify \"" + fixture(name).string() + "\" --format structured";
    out.require(run_cli(args, first) == 0 && run_cli(args, second) == 0, std::string(name) + ": verify failed");
    const auto a = read_file(first);
    out.require(!a.empty() && a == read_file(second), std::string(name) + ": outputs differ");
  }
  std::filesystem::remove(first);
  std::filesystem::remove(second);
  if (out.pass) out.detail = "two structured runs are byte-identical";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"axiom gate", axiom_gate},
      {"dot-action identities", dot_identities},
      {"skew grading", grading},
      {"Φ multiplicativity", phi_multiplicative},
      {"kernel of Φ", kernel_matches_formula},
      {"image of Φ", image_corner},
      {"ideal decomposition", decomposition},
      {"global degeneration", global_isomorphism},
      {"separability idempotent", separability},
      {"centers", centers},
      {"partial Hopf layer", hopf_layer},
      {"grouplike partial smash", grouplike_iso},
      {"determinism", determinism}};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failures;
    std::cout << "criterion " << i + 1 << ": " << (outcome.pass ? "PASS" : "FAIL") << "  " << criteria[i].first
              << " - " << outcome.detail << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria pass"
            << std::endl;
  return failures == 0 ? 0 : 1;
}
