#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "scx/analyze.hpp"
#include "scx/config.hpp"
#include "scx/dirichlet.hpp"
#include "scx/error.hpp"
#include "scx/generators.hpp"
#include "scx/io.hpp"
#include "scx/verify.hpp"

namespace {

enum ExitCode { kPass = 0, kCheckFailure = 1, kUsage = 2, kCap = 3 };

void emit(const std::string& out, const std::string& contents) {
  if (out.empty() || out == "-")
    std::cout << contents;
  else
    scx::write_file(out, contents);
}

std::vector<int> parse_dims(const std::string& text) {
  std::vector<int> dims;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      dims.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw scx::Error(scx::Errc::ValidationError, "bad dimension list '" + text + "'");
    }
  }
  return dims;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cheeger numbers, Laplacian spectra and homology of simplicial complexes"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  scx::KeyValues flags;
  std::optional<std::string> brute, coset, eig_tol, zero_band, seed, threads;
  app.add_option("--config", config_path, "key = value configuration file");
  app.add_option("--brute-cap-bits", brute, "largest exhaustive sweep, as a power of two (default 24)");
  app.add_option("--coset-cap-bits", coset, "largest coset table, as a power of two (default 20)");
  app.add_option("--eig-tol", eig_tol, "Jacobi convergence tolerance (default 1e-10)");
  app.add_option("--zero-band", zero_band, "eigenvalues below this count as zero (default 1e-8)");
  app.add_option("--seed", seed, "random seed (default 0)");
  app.add_option("--threads", threads, "worker threads for sweeps (default 1)");

  auto* gen = app.add_subcommand("generate", "write a complex from a named family");
  scx::FamilySpec spec;
  std::string gen_out, gen_name;
  gen->add_option("--family", spec.family, "sigma, xk, yk, gk, rp2, random_disk, random_tree")->required();
  gen->add_option("--m", spec.m, "dimension (sigma, xk, yk)");
  gen->add_option("--k", spec.k, "iteration or size parameter (xk, yk, gk)");
  gen->add_option("--t", spec.t, "triangles (random_disk) or vertices (random_tree)");
  gen->add_option("--name", gen_name, "name stored in the file");
  gen->add_option("-o,--out", gen_out, "output path, stdout when omitted");

  auto* ana = app.add_subcommand("analyze", "report every invariant of a complex file");
  std::string ana_in, ana_out, ana_dims, ana_format = "json";
  bool structural_only = false;
  ana->add_option("input", ana_in, "complex file")->required();
  ana->add_option("--dims", ana_dims, "comma-separated dimensions, all by default");
  ana->add_flag("--structural-only", structural_only, "skip exhaustive Cheeger sweeps");
  ana->add_option("--format", ana_format, "json, table or csv")->check(CLI::IsMember({"json", "table", "csv"}));
  ana->add_option("-o,--out", ana_out, "output path, stdout when omitted");

  auto* ver = app.add_subcommand("verify", "run the claim matrix; nonzero exit on any failure");
  scx::VerifyOptions vopt;
  std::string ver_out, ver_format = "text";
  bool no_timing = false;
  ver->add_option("--suite", vopt.suite, "paper or quick")->check(CLI::IsMember({"paper", "quick"}));
  ver->add_option("--m", vopt.m, "dimension of the X_k and Y_k families (default 2)");
  ver->add_option("--kmax", vopt.kmax, "largest family index (default 4)");
  ver->add_option("--seeds", vopt.seeds, "random instances per suite (default 25)");
  ver->add_option("--format", ver_format, "text or json")->check(CLI::IsMember({"text", "json"}));
  ver->add_flag("--no-timing", no_timing, "omit runtimes so output is reproducible");
  ver->add_option("-o,--out", ver_out, "output path, stdout when omitted");

  auto* dual = app.add_subcommand("dual", "write the dual graph with border facets");
  std::string dual_in, dual_out;
  dual->add_option("input", dual_in, "complex file")->required();
  dual->add_option("-o,--out", dual_out, "output path, stdout when omitted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kUsage;
  }

  try {
    for (auto [key, value] : {std::pair{"brute_cap_bits", &brute}, {"coset_cap_bits", &coset}, {"eig_tol", &eig_tol},
                              {"zero_band", &zero_band}, {"seed", &seed}, {"threads", &threads}})
      if (*value) flags[key] = **value;
    const scx::KeyValues file = config_path.empty() ? scx::KeyValues{} : scx::parse_key_values(scx::read_file(config_path));
    const scx::Config config = scx::resolve_config(flags, scx::environment_values(std::getenv), file);

    if (*gen) {
      spec.seed = config.seed;
      scx::ComplexDocument doc;
      doc.complex = scx::generate(spec);
      doc.name = gen_name.empty() ? spec.family : gen_name;
      nlohmann::json meta{{"family", spec.family}};
      if (spec.family == "sigma" || spec.family == "xk" || spec.family == "yk") meta["m"] = spec.m;
      if (spec.family == "xk" || spec.family == "yk" || spec.family == "gk") meta["k"] = spec.k;
      if (spec.family == "random_disk" || spec.family == "random_tree") {
        meta["t"] = spec.t;
        meta["seed"] = spec.seed;
      }
      doc.metadata = meta;
      emit(gen_out, scx::serialize_complex(doc));
      return kPass;
    }
    if (*ana) {
      scx::AnalyzeOptions opt;
      opt.config = config;
      opt.structural_only = structural_only;
      if (!ana_dims.empty()) opt.dims = parse_dims(ana_dims);
      const auto doc = scx::parse_complex(scx::read_file(ana_in));
      const nlohmann::json report = scx::analyze(doc.complex, opt);
      if (ana_format == "table")
        emit(ana_out, scx::analysis_table(report));
      else if (ana_format == "csv")
        emit(ana_out, scx::analysis_csv(report));
      else
        emit(ana_out, report.dump(2) + "\n");
      return kPass;
    }
    if (*ver) {
      vopt.config = config;
      const scx::VerificationReport report = scx::run_verify(vopt);
      emit(ver_out, ver_format == "json" ? report.to_json(!no_timing).dump(2) + "\n" : report.text());
      return report.pass() ? kPass : kCheckFailure;
    }
    if (*dual) {
      const auto doc = scx::parse_complex(scx::read_file(dual_in));
      emit(dual_out, scx::dual_graph_json(scx::dual_graph(doc.complex)).dump(2) + "\n");
      return kPass;
    }
  } catch (const scx::Error& e) {
    std::cerr << "scx: " << e.what() << "\n";
    if (e.code() == scx::Errc::BeyondBruteForceCap) return kCap;
    if (e.code() == scx::Errc::NoConvergence) return kCheckFailure;
    return kUsage;
  }
  return kUsage;
}
