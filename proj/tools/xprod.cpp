// xprod: crossed products by partial actions, Landstad round trips and symbolic suites.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "crossprod/cuntz.hpp"
#include "crossprod/io.hpp"
#include "crossprod/landstad.hpp"
#include "crossprod/representation.hpp"
#include "crossprod/wiener_hopf.hpp"

using namespace crossprod;
using io::Json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInvalid = 2;

struct Common {
  double eps = 1e-9;
  std::uint64_t seed = 42;
  int attempts = 10;
  int threads = 1;
  std::string json;
  bool timings = false;
  bool quiet = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--eps", c.eps, "numerical tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", c.seed, "seed for certificate search");
  cmd->add_option("--attempts", c.attempts, "random attempts per degree")->check(CLI::PositiveNumber);
  cmd->add_option("--threads", c.threads, "worker cap")->check(CLI::PositiveNumber);
  cmd->add_option("--json", c.json, "write the JSON report to this path");
  cmd->add_flag("--timings", c.timings, "record stage timings in reports");
  cmd->add_flag("-q,--quiet", c.quiet, "suppress the text report");
}

/// Runs one stage, stamping its entries with the elapsed time when timings are on.
template <class F>
Report stage(const Common& c, F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  Report r = f();
  if (c.timings) {
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    for (auto& e : r.checks()) e.timingMs = ms;
  }
  return r;
}

int finish(const Report& r, const Json& spec, const Common& c) {
  if (!c.quiet) std::cout << r.to_text();
  if (!c.json.empty()) io::write_file(c.json, io::report_to_json(r, spec).dump(2));
  return r.passed() ? kExitPass : kExitFail;
}

void apply_options(const io::Options& o, Common& c, const CLI::App* cmd) {
  // command-line flags win over spec options
  if (o.eps && cmd->count("--eps") == 0) c.eps = *o.eps;
  if (o.seed && cmd->count("--seed") == 0) c.seed = *o.seed;
  if (o.attempts && cmd->count("--attempts") == 0) c.attempts = *o.attempts;
}

Report cuntz_suite(int n, int depth, const Common& c) {
  if (n < 1) throw PreconditionError("--n must be >= 1");
  if (depth < 2 || depth > io::kMaxDepth)
    throw PreconditionError("--depth must lie in 2.." + std::to_string(io::kMaxDepth));
  Report r("Toeplitz-Cuntz suite");
  r.append(stage(c, [&] { return projection_product_check(n, depth); }), "projections: ");
  r.append(stage(c, [&] { return cuntz_characterization_check(n, depth); }), "characterization: ");
  r.append(stage(c, [&] { return gauge_nonexample_check(n, depth).report; }), "gauge: ");
  const int window = std::min(depth, 3);
  r.append(stage(c,
                 [&] {
                   const CuntzGradedModel model(n, window, depth);
                   return graded::elementary_duality_check(model, model.generator_certificates());
                 }),
           "duality: ");
  r.note("n = " + std::to_string(n) + ", depth " + std::to_string(depth) + ", duality window " +
         std::to_string(window));
  return r;
}

Report wh_suite_cli(const std::string& qlo, int window, const Common& c) {
  if (window < 1 || window > io::kMaxWindow)
    throw PreconditionError("--window must lie in 1.." + std::to_string(io::kMaxWindow));
  std::shared_ptr<const QuasiLatticeOrder> q = make_qlo(qlo);
  return stage(c, [&] { return wh_suite(q, window); });
}

Report landstad_report(GradedMatrixAlgebra g, const std::vector<std::string>& drops, const Common& c,
                       const std::string& out) {
  const Tolerance tol(c.eps);
  for (const auto& d : drops) {
    const auto s = g.group.parse(d);
    g.grading.at(s).clear();
  }
  Report r("Landstad");
  if (!drops.empty()) r.note("dropped degrees: " + std::to_string(drops.size()));
  if (g.group.is_finite()) {
    RoundTrip rt;
    r.append(stage(c, [&] {
      rt = landstad_roundtrip(g, c.attempts, c.seed, tol);
      return rt.report;
    }));
    if (rt.reconstructed && !out.empty()) io::write_file(out, io::system_to_json(*rt.reconstructed).dump(2));
    return r;
  }
  // windows: the truncated regular representation is not multiplicative, so only duality is checked
  const auto& G = g.group;
  std::vector<ComplexMatrix> certs;
  Failures missing;
  for (int i = 1; i <= G.rank(); ++i) {
    const auto s = *G.find(make_word({i}, G.rank()));
    auto m = find_certificate(g, s, c.attempts, c.seed, tol);
    if (!m) missing.add("g" + std::to_string(i));
    certs.push_back(m ? *m : ComplexMatrix::Zero(static_cast<Eigen::Index>(g.dim), static_cast<Eigen::Index>(g.dim)));
  }
  r.add("generator certificates found", "m_{g_i} in M(B_{g_i}) with m m^* = p_{g_i}", missing.ok(), missing.text());
  const MatrixGradedModel model(g, tol);
  r.append(stage(c, [&] { return graded::elementary_duality_check(model, certs, tol); }));
  r.note("window group: elementary duality only");
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"crossed products by partial actions and Landstad duality"};
  app.require_subcommand(1);
  app.set_version_flag("--version", io::tool_version());
  Common c;

  auto* validate = app.add_subcommand("validate", "validate a spec");
  std::string spec_path, check = "axioms";
  validate->add_option("spec", spec_path, "spec file")->required();
  validate->add_option("--check", check, "axioms, multiplicative or all")
      ->check(CLI::IsMember({"axioms", "multiplicative", "all"}));
  add_common(validate, c);

  auto* build = app.add_subcommand("build", "build the crossed product and write its grading");
  std::string out;
  build->add_option("spec", spec_path, "partial-action spec")->required();
  build->add_option("--out", out, "graded-algebra artifact path");
  add_common(build, c);

  auto* landstad = app.add_subcommand("landstad", "recover a partial action from a grading");
  std::vector<std::string> drops;
  landstad->add_option("spec", spec_path, "graded-algebra spec")->required();
  landstad->add_option("--out", out, "reconstructed partial-action path");
  landstad->add_option("--drop", drops, "remove a degree before the analysis");
  add_common(landstad, c);

  auto* symbolic = app.add_subcommand("symbolic", "symbolic suites");
  symbolic->require_subcommand(1);
  auto* cuntz_cmd = symbolic->add_subcommand("cuntz", "Toeplitz-Cuntz suite");
  int n = 2, depth = 4;
  cuntz_cmd->add_option("--n", n, "alphabet size");
  cuntz_cmd->add_option("--depth", depth, "word length bound");
  add_common(cuntz_cmd, c);
  auto* wh_cmd = symbolic->add_subcommand("wh", "Wiener-Hopf suite");
  std::string qlo = "z2n2";
  int window = 4;
  wh_cmd->add_option("--qlo", qlo, "z1n1, z2n2, z3n3 or freeN");
  wh_cmd->add_option("--window", window, "window size");
  add_common(wh_cmd, c);

  auto* fixtures_cmd = app.add_subcommand("fixtures", "list or export the built-in fixtures");
  std::string dir;
  fixtures_cmd->add_option("--write", dir, "directory to write <name>.json into");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInvalid;
  }

  try {
    if (*fixtures_cmd) {
      for (const auto& name : fixtures::names()) {
        std::cout << name << "\n";
        if (!dir.empty())
          io::write_file((std::filesystem::path(dir) / (name + ".json")).string(),
                         io::system_to_json(fixtures::by_name(name)).dump(2));
      }
      return kExitPass;
    }

    if (*symbolic) {
      if (*cuntz_cmd) {
        const Json echo{{"kind", "cuntz"}, {"n", n}, {"depth", depth}};
        return finish(cuntz_suite(n, depth, c), echo, c);
      }
      const Json echo{{"kind", "wiener-hopf"}, {"qlo", qlo}, {"window", window}};
      return finish(wh_suite_cli(qlo, window, c), echo, c);
    }

    const CLI::App* cmd = *validate ? validate : *build ? build : landstad;
    const auto spec = io::load_spec(spec_path);
    apply_options(spec.options, c, cmd);
    const Tolerance tol(c.eps);

    if (*validate) {
      Report r("validate " + spec.name);
      switch (spec.kind) {
        case io::SpecKind::PartialAction:
          if (check != "multiplicative")
            r.append(stage(c, [&] { return validate_partial_action(*spec.system, tol).report; }));
          if (check != "axioms") {
            r.append(stage(c, [&] {
              Report m("multiplicativity");
              const auto res = is_multiplicative(*spec.system);
              m.add("multiplicative", "D_{s_1...s_k} ⊂ D_{s_1} for every reduced word", res.multiplicative,
                    res.witness);
              m.note("containments checked: " + std::to_string(res.checked));
              return m;
            }));
          }
          break;
        case io::SpecKind::GradedAlgebra:
          r.append(stage(c, [&] { return validate_grading(*spec.graded, tol); }));
          break;
        case io::SpecKind::Cuntz:
          r.append(cuntz_suite(spec.n, spec.options.depth.value_or(4), c));
          break;
        case io::SpecKind::WienerHopf:
          r.append(wh_suite_cli(spec.qlo, spec.options.window.value_or(4), c));
          break;
      }
      return finish(r, spec.raw, c);
    }

    if (*build) {
      if (spec.kind != io::SpecKind::PartialAction) throw io::SpecError("build needs a partial-action spec");
      const auto sys = std::make_shared<const PartialActionSystem>(*spec.system);
      Report r("build " + spec.name);
      r.append(stage(c, [&] { return validate_partial_action(*sys, tol).report; }), "axioms: ");
      const auto cp = build_regular(sys, tol);
      r.append(stage(c, [&] { return grading_check(cp, tol); }));
      r.append(stage(c, [&] { return multiplier_membership_check(cp, tol); }));
      const auto dims = spectral_dims(cp, tol);
      std::string line = sys->group.is_finite() ? "algebra: " + std::to_string(cp.algebra_dimension()) : "";
      for (std::size_t s = 0; s < dims.size(); ++s)
        line += (line.empty() ? "" : ", ") + sys->group.label(s) + ": " + std::to_string(dims[s]);
      r.note("dims {" + line + "}");
      const std::string path = out.empty() ? spec.name + ".graded.json" : out;
      io::write_file(path, io::graded_to_json(graded_from_crossed_product(cp), spec.name).dump(2));
      r.note("artifact: " + path);
      return finish(r, spec.raw, c);
    }

    if (spec.kind != io::SpecKind::GradedAlgebra) throw io::SpecError("landstad needs a graded-algebra spec");
    return finish(landstad_report(*spec.graded, drops, c, out), spec.raw, c);
  } catch (const io::SpecError& e) {
    std::cerr << "invalid spec: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}
