// Command-line front end: orbit, width, witness, decompose, sweep, verify.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tsw/decompose.hpp"
#include "tsw/groups.hpp"
#include "tsw/io.hpp"
#include "tsw/measures.hpp"
#include "tsw/sweep.hpp"
#include "tsw/verify.hpp"
#include "tsw/width.hpp"

namespace {

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw tsw::InputError("cannot open output file: " + path);
  return file;
}

std::uint64_t projector_checksum(const tsw::Mat& p) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::int64_t v) {
    h ^= static_cast<std::uint64_t>(v);
    h *= 1099511628211ULL;
  };
  for (Eigen::Index j = 0; j < p.cols(); ++j)
    for (Eigen::Index i = 0; i < p.rows(); ++i) {
      mix(std::llround(p(i, j).real() * 1e6));
      mix(std::llround(p(i, j).imag() * 1e6));
    }
  return h;
}

std::vector<Eigen::Index> parse_dims(const std::string& s) {
  std::vector<Eigen::Index> dims;
  std::stringstream ss(s);
  std::string token;
  while (std::getline(ss, token, ','))
    if (!token.empty()) dims.push_back(std::stoll(token));
  return dims;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"width of transitive sets: witnesses, certificates, sweeps"};
  app.require_subcommand(1);

  std::uint64_t seed_value = 0;
  double eq_tol = 1e-9;
  int threads = 1;
  std::string out_path;
  std::string format = "csv";
  app.add_option("--seed", seed_value, "PRNG seed (default 0)");
  app.add_option("--tol", eq_tol, "equality tolerance (default 1e-9)");
  app.add_option("--threads", threads,
                 "worker threads (results are thread-count independent)");
  app.add_option("--out", out_path, "output file (default stdout)");
  app.add_option("--format", format, "output format: csv|json");

  // orbit
  auto* orbit_cmd = app.add_subcommand("orbit", "enumerate a group orbit");
  std::string group_file, vector_file;
  std::size_t max_size = 100000;
  bool print_points = false;
  orbit_cmd->add_option("--group", group_file, "group JSON file")->required();
  orbit_cmd->add_option("--vector", vector_file, "seed vector JSON file")
      ->required();
  orbit_cmd->add_option("--max-size", max_size, "orbit size bound");
  orbit_cmd->add_flag("--points", print_points, "print the point list");

  // width
  auto* width_cmd = app.add_subcommand("width", "two-sided width report");
  std::string w_group_file, w_vector_file;
  bool keep_virtual = false;
  int restarts = 64;
  width_cmd->add_option("--group", w_group_file, "group JSON file")
      ->required();
  width_cmd->add_option("--vector", w_vector_file, "seed vector JSON file")
      ->required();
  width_cmd->add_flag("--virtual", keep_virtual,
                      "keep the orbit virtual (structured groups only)");
  width_cmd->add_option("--restarts", restarts, "solver restarts");

  // witness
  auto* witness_cmd =
      app.add_subcommand("witness", "print a witness measure as JSON");
  std::string witness_kind = "dyadic";
  Eigen::Index witness_dim = 2;
  std::size_t witness_samples = 10000;
  witness_cmd
      ->add_option("kind", witness_kind, "dyadic|projected_dyadic|haar")
      ->required();
  witness_cmd->add_option("--dim", witness_dim, "dimension")->required();
  witness_cmd->add_option("--n-samples", witness_samples,
                          "haar sampler size");

  // decompose
  auto* dec_cmd =
      app.add_subcommand("decompose", "invariant subspaces via averaging");
  std::string dec_group_file;
  dec_cmd->add_option("--group", dec_group_file, "group JSON file")
      ->required();

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "width sweep over a family");
  std::string family = "sharpness", dims_arg = "2,4,8,16";
  std::string sweep_group_file, sweep_vector_file, svg_path;
  sweep_cmd->add_option("--family", family,
                        "sharpness|hypercube|basis|simplex|custom");
  sweep_cmd->add_option("--dims", dims_arg, "comma-separated dimensions");
  sweep_cmd->add_option("--group", sweep_group_file,
                        "group JSON (custom family)");
  sweep_cmd->add_option("--vector", sweep_vector_file,
                        "vector JSON (custom family)");
  sweep_cmd->add_option("--svg", svg_path, "also write an SVG plot");
  sweep_cmd->add_option("--restarts", restarts, "solver restarts");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run property suites");
  std::string suite;
  bool all_suites = false;
  verify_cmd->add_option("--suite", suite,
                         "selberg|eta|cap|gram|combine|rearrange|risk|"
                         "sharpness|smallcase|prefix|decompose|realwitness");
  verify_cmd->add_flag("--all", all_suites, "run the full battery");

  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  tsw::Tolerance tol;
  tol.eq_tol = eq_tol;
  tsw::Seed seed{seed_value};

  try {
    std::ofstream out_file;

    if (*orbit_cmd) {
      tsw::GroupPresentation g =
          tsw::group_from_json(tsw::load_json_file(group_file), tol);
      tsw::UnitVector v =
          tsw::unit_vector_from_json(tsw::load_json_file(vector_file), tol);
      tsw::TransitiveSet X = tsw::orbit_enumerate(g, v, max_size, tol);
      std::ostream& out = open_output(out_path, out_file);
      tsw::Json j{{"orbit_size", X.points().size()}};
      if (print_points) {
        tsw::Json pts = tsw::Json::array();
        for (const tsw::Vec& p : X.points())
          pts.push_back(tsw::vector_to_json(p, X.field()));
        j["points"] = pts;
      }
      out << j.dump(2) << '\n';
      return 0;
    }

    if (*width_cmd) {
      tsw::GroupPresentation g =
          tsw::group_from_json(tsw::load_json_file(w_group_file), tol);
      tsw::UnitVector v =
          tsw::unit_vector_from_json(tsw::load_json_file(w_vector_file), tol);
      tsw::TransitiveSet X =
          keep_virtual || g.kind() == tsw::GroupKind::MonomialFull
              ? tsw::TransitiveSet::virtual_set(g, v)
              : tsw::orbit_enumerate(g, v, 1000000, tol);
      tsw::SolverConfig cfg;
      cfg.restarts = restarts;
      cfg.seed = seed;
      tsw::WidthReport rep = tsw::width_report(X, cfg, tol);
      std::ostream& out = open_output(out_path, out_file);
      out << tsw::width_report_to_json(rep).dump(2) << '\n';
      return 0;
    }

    if (*witness_cmd) {
      tsw::SymmetricMeasure mu = [&] {
        if (witness_kind == "dyadic") return tsw::dyadic_measure(witness_dim);
        if (witness_kind == "projected_dyadic")
          return tsw::projected_dyadic_measure(witness_dim);
        if (witness_kind == "haar")
          return tsw::SymmetricMeasure::haar(witness_dim, tsw::Field::Complex,
                                             seed, witness_samples);
        throw tsw::InputError("unknown witness kind: " + witness_kind);
      }();
      std::ostream& out = open_output(out_path, out_file);
      out << tsw::measure_to_json(mu).dump(2) << '\n';
      return 0;
    }

    if (*dec_cmd) {
      tsw::GroupPresentation g =
          tsw::group_from_json(tsw::load_json_file(dec_group_file), tol);
      tsw::SubspaceDecomposition dec =
          tsw::reynolds_invariant_subspaces(g, seed, tol);
      std::ostream& out = open_output(out_path, out_file);
      tsw::Json blocks = tsw::Json::array();
      for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
        char checksum[32];
        std::snprintf(checksum, sizeof(checksum), "%016llx",
                      static_cast<unsigned long long>(
                          projector_checksum(dec.projector(i))));
        blocks.push_back(tsw::Json{{"dim", dec.blocks[i].cols()},
                                   {"projector_checksum", checksum}});
      }
      out << tsw::Json{{"blocks", blocks}}.dump(2) << '\n';
      return 0;
    }

    if (*sweep_cmd) {
      tsw::RunConfig cfg;
      cfg.seed = seed;
      cfg.family = family;
      cfg.dims = parse_dims(dims_arg);
      cfg.group_file = sweep_group_file;
      cfg.vector_file = sweep_vector_file;
      cfg.format = format;
      cfg.solver.restarts = restarts;
      cfg.solver.seed = seed;
      auto rows = tsw::run_sweep(cfg);
      std::ostream& out = open_output(out_path, out_file);
      if (format == "json")
        tsw::write_rows_json(out, rows);
      else
        tsw::write_rows_csv(out, rows);
      if (!svg_path.empty()) {
        std::ofstream svg(svg_path);
        if (!svg) throw tsw::InputError("cannot open SVG file: " + svg_path);
        tsw::write_rows_svg(svg, rows);
      }
      return 0;
    }

    if (*verify_cmd) {
      std::vector<tsw::CheckResult> results;
      if (all_suites || suite.empty()) {
        results = tsw::acceptance_criteria(seed);
        auto extra = tsw::run_suite("rearrange", seed);
        results.insert(results.end(), extra.begin(), extra.end());
      } else {
        results = tsw::run_suite(suite, seed);
      }
      bool all_ok = true;
      for (const auto& r : results) {
        std::printf("[%s] %s  (margin %.3g; %s)\n", r.passed ? "PASS" : "FAIL",
                    r.name.c_str(), r.margin, r.detail.c_str());
        all_ok = all_ok && r.passed;
      }
      return all_ok ? 0 : 1;
    }
  } catch (const tsw::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
