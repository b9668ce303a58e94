#include "pdual/runner.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "pdual/duality.hpp"
#include "pdual/hopf.hpp"

namespace pdual {

namespace {

bool is_construction_error(ErrorKind kind) {
  return kind != ErrorKind::ParseError && kind != ErrorKind::InternalFailure;
}

template <class S>
class Runner {
 public:
  Runner(const ScenarioSpec& spec, Field field, std::vector<std::string> suites)
      : spec_(spec), field_(std::move(field)), suites_(suites.begin(), suites.end()) {
    report_.subject = spec.name;
  }

  Report run() {
    if (!construct()) return finish();
    if (selected("axioms")) axioms();
    if (selected("dot_identities")) requires_action("dot_identities", [&] { report_.merge(verify_dot_identities(*pa_)); });
    if (selected("grading")) requires_action("grading", [&] { grading(); });
    if (selected("smash")) requires_action("smash", [&] { report_.merge(smash_check(smash())); });
    if (selected("duality")) requires_action("duality", [&] { duality_suite(); });
    if (selected("separability")) requires_action("separability", [&] { report_.merge(separability_check(duality())); });
    if (selected("centers")) requires_action("centers", [&] { centers(); });
    if (selected("hopf")) hopf();
    expectations();
    return finish();
  }

 private:
  bool selected(const std::string& suite) const { return suites_.count(suite) > 0; }

  template <class F>
  void requires_action(const std::string& suite, F&& body) {
    if (pa_) {
      body();
    } else {
      Check c(suite);
      c.skip("scenario has no partial group action");
      report_.add(std::move(c));
    }
  }

  /// False when construction failed with the expected error.
  bool construct() {
    try {
      if (spec_.action) pa_ = build_action<S>(spec_, field_);
      if (spec_.hopf && !spec_.hopf->lift) explicit_hopf_ = build_hopf_action<S>(spec_, field_);
    } catch (const Error& err) {
      if (!spec_.expected_error || !is_construction_error(err.kind())) throw;
      Check c("expected.validation_error");
      c.expect(kind_name(err.kind()) == *spec_.expected_error, [&] {
        return "ExpectationMismatch: expected " + *spec_.expected_error + ", got " + err.what();
      });
      report_.add(std::move(c));
      return false;
    }
    if (spec_.expected_error) {
      Check c("expected.validation_error");
      c.fail("ExpectationMismatch: expected " + *spec_.expected_error + ", construction succeeded");
      report_.add(std::move(c));
    }
    return true;
  }

  Report finish() {
    report_.sort();
    return std::move(report_);
  }

  const SkewGroupRing<S>& skew() {
    if (!skew_) skew_ = build_skew(*pa_);
    return *skew_;
  }
  const SmashAlgebra<S>& smash() {
    if (!smash_) smash_ = build_smash(skew());
    return *smash_;
  }
  const DualityData<S>& duality() {
    if (!duality_) duality_ = build_phi(smash());
    return *duality_;
  }
  const Subspace<S>& center() {
    if (!center_) center_ = center_basis(smash().algebra());
    return *center_;
  }

  void axioms() {
    if (pa_) {
      Check c("axioms.partial_action");
      c.measure("group_order", static_cast<std::int64_t>(pa_->order()));
      c.measure("dim_algebra", pa_->algebra().dim());
      c.measure("global", pa_->is_global() ? 1 : 0);
      report_.add(std::move(c));
    }
    if (explicit_hopf_) {
      Check c("axioms.hopf_action");
      c.measure("dim_hopf", explicit_hopf_->hopf().dim());
      c.measure("dim_algebra", explicit_hopf_->algebra().dim());
      report_.add(std::move(c));
    }
  }

  void grading() {
    const auto& s = skew();
    report_.merge(grading_check(s));
    Check assoc("grading.associativity");
    auto w = s.algebra().associativity_witness();
    assoc.measure("triples", s.dim() * s.dim() * s.dim());
    assoc.expect(!w, [&] {
      return "(x" + std::to_string((*w)[0]) + " x" + std::to_string((*w)[1]) + ") x" + std::to_string((*w)[2]);
    });
    report_.add(std::move(assoc));
    Check strong("grading.strong_iff_global");
    auto sg = strong_grading_test(s);
    strong.measure("strong", sg.strong ? 1 : 0);
    strong.measure("global", sg.global ? 1 : 0);
    strong.expect(sg.agree, [] { return std::string("strong grading and globality disagree"); });
    report_.add(std::move(strong));
  }

  void duality_suite() {
    const auto& d = duality();
    report_.merge(phi_check(d));
    report_.merge(kernel_check(d));
    report_.merge(corner_check(d));
    report_.merge(decomposition_check(d));
    report_.merge(injectivity_on_skew(d));
    Check iso("duality.global_isomorphism");
    if (!pa_->is_global()) {
      iso.skip("action is not global");
    } else {
      iso.measure("dim_smash", d.smash.dim());
      iso.measure("dim_matrices", d.matrices.dim());
      iso.expect(d.kernel.is_zero_space(), [] { return std::string("Ker Φ ≠ 0"); });
      iso.expect(d.bold_e == d.matrices.unit(), [] { return std::string("e is not the identity matrix"); });
      iso.expect(d.image.is_full() && d.smash.dim() == d.matrices.dim(),
                 [] { return std::string("Φ is not onto M_n(A)"); });
    }
    report_.add(std::move(iso));
  }

  void centers() {
    const auto& b = smash().algebra();
    const auto& z = center();
    const Index n = static_cast<Index>(pa_->order());

    Check commute("centers.commute");
    for (Index i = 0; i < z.dim(); ++i) {
      const Vec<S> c = z.basis_vector(i);
      for (Index x = 0; x < b.dim(); ++x) {
        commute.expect(b.mul(c, b.basis(x)) == b.mul(b.basis(x), c),
                       [&] { return "center basis " + std::to_string(i) + " and " + b.label(x); });
      }
    }
    report_.add(std::move(commute));

    Check dims("centers.smash");
    dims.measure("center_dim_smash", z.dim());
    dims.measure("dim_smash", b.dim());
    if (pa_->is_global()) {
      const auto zm = center_basis(matrix_algebra(pa_->algebra(), pa_->group())).dim();
      dims.measure("center_dim_matrices", zm);
      dims.expect(z.dim() == zm, [] { return std::string("center dimensions of B and M_n(A) differ"); });
    }
    if (spec_.action->kind == ActionSpec::Kind::trivial_split) {
      // B ≅ M_n(R) × S^n, so Z(B) ≅ Z(R) × Z(S)^n.
      auto r = build_algebra<S>(*spec_.action->first, field_);
      auto s = build_algebra<S>(*spec_.action->second, field_);
      const Index zr = center_basis(r).dim();
      const Index zs = center_basis(s).dim();
      dims.measure("split_formula_center", zr + n * zs);
      dims.measure("split_formula_dim", n * n * r.dim() + n * s.dim());
      dims.expect(z.dim() == zr + n * zs, [] { return std::string("center dimension differs from dim Z(R) + n dim Z(S)"); });
      dims.expect(b.dim() == n * n * r.dim() + n * s.dim(), [] { return std::string("dim B differs from n² dim R + n dim S"); });
    }
    report_.add(std::move(dims));
  }

  void hopf() {
    if (explicit_hopf_) {
      report_.merge(hopf_suite(*explicit_hopf_));
      partial_smash_dim_ = partial_smash(*explicit_hopf_).sub.dim();
      return;
    }
    if (!spec_.hopf || !pa_) {
      Check c("hopf");
      c.skip("scenario has no Hopf action");
      report_.add(std::move(c));
      return;
    }
    auto lifted = lift_group_partial_action(*pa_);
    Check dot("hopf.lift_matches_dot");
    for (GroupElement g = 0; g < pa_->order(); ++g) {
      for (Index i = 0; i < pa_->algebra().dim(); ++i) {
        const Vec<S> a = pa_->algebra().basis(i);
        dot.expect(lifted.act_basis(static_cast<Index>(g), a) == pa_->dot(g, a),
                   [&] { return "g=" + pa_->group().label(g) + " a=" + pa_->algebra().label(i); });
      }
    }
    report_.add(std::move(dot));
    report_.merge(hopf_suite(lifted));
    auto ps = partial_smash(lifted);
    partial_smash_dim_ = ps.sub.dim();
    report_.merge(grouplike_iso_check(*pa_, skew(), ps));
  }

  std::optional<std::int64_t> measure(const std::string& key) {
    if (key == "dim_partial_smash") {
      if (!partial_smash_dim_) {
        if (explicit_hopf_) {
          partial_smash_dim_ = partial_smash(*explicit_hopf_).sub.dim();
        } else if (pa_) {
          partial_smash_dim_ = partial_smash(lift_group_partial_action(*pa_)).sub.dim();
        }
      }
      return partial_smash_dim_;
    }
    if (!pa_) return std::nullopt;
    if (key == "dim_skew") return skew().dim();
    if (key == "dim_smash") return smash().dim();
    if (key == "dim_kernel") return duality().kernel.dim();
    if (key == "dim_corner") return pierce_corner(duality().matrices, duality().bold_e).dim();
    if (key == "center_dim_smash") return center().dim();
    return std::nullopt;
  }

  void expectations() {
    for (const auto& [key, value] : spec_.expected) {
      Check c("expected." + key);
      auto got = measure(key);
      c.measure("expected", value);
      if (!got) {
        c.fail("ExpectationMismatch: " + key + " is not measurable for this scenario");
        report_.add(std::move(c));
        continue;
      }
      c.measure("measured", *got);
      c.expect(*got == value, [&] {
        return "ExpectationMismatch: expected " + std::to_string(value) + ", measured " + std::to_string(*got);
      });
      report_.add(std::move(c));
    }
  }

  const ScenarioSpec& spec_;
  Field field_;
  std::set<std::string> suites_;
  Report report_;
  std::optional<PartialAction<S>> pa_;
  std::optional<PartialHopfAction<S>> explicit_hopf_;
  std::optional<SkewGroupRing<S>> skew_;
  std::optional<SmashAlgebra<S>> smash_;
  std::optional<DualityData<S>> duality_;
  std::optional<Subspace<S>> center_;
  std::optional<std::int64_t> partial_smash_dim_;
};

}  // namespace

std::vector<std::string> default_suites(const ScenarioSpec& spec) {
  std::vector<std::string> out;
  for (const auto& name : suite_names()) {
    if (name == "hopf" ? spec.hopf.has_value() : (name == "axioms" || spec.action.has_value())) out.push_back(name);
  }
  return out;
}

Report run_scenario(const ScenarioSpec& spec, const RunOptions& options) {
  auto suites = !options.suites.empty() ? options.suites : !spec.suites.empty() ? spec.suites : default_suites(spec);
  for (const auto& s : suites) {
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end()) {
      throw Error(ErrorKind::ParseError, "unknown suite '" + s + "'");
    }
  }
  const Field field = options.field.value_or(spec.field);
  const auto start = std::chrono::steady_clock::now();
  Report report = field.is_rational() ? Runner<Rational>(spec, field, suites).run()
                                      : Runner<Zp>(spec, field, suites).run();
  if (options.timing) {
    report.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return report;
}

Report run_scenario_file(const std::filesystem::path& path, const RunOptions& options) {
  return run_scenario(load_scenario(path), options);
}

std::vector<std::filesystem::path> fixture_files(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pdual
