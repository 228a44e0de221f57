#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "tsw/groups.hpp"
#include "tsw/width.hpp"

namespace tsw {

struct SweepRow {
  std::string family;
  Eigen::Index d = 0;
  double width_upper = 0.0;
  double width_lower = 0.0;
  double inv_sqrt_log_d = 0.0;  // 1/sqrt(ln d) for d >= 2
  double sqrt_psi = 0.0;
  std::string error;  // nonempty when this row failed
};

struct RunConfig {
  Seed seed;
  std::vector<Eigen::Index> dims;
  std::string family = "sharpness";  // sharpness|hypercube|basis|simplex|custom
  std::string group_file;            // custom family
  std::string vector_file;           // custom family
  std::string output_path;           // empty -> stdout
  std::string format = "csv";        // csv|json
  std::string svg_path;              // optional plot
  SolverConfig solver;

  void validate() const {
    if (dims.empty()) throw InputError("sweep needs at least one dimension");
    for (Eigen::Index d : dims)
      if (d < 1) throw InputError("sweep dimensions must be >= 1");
  }
};

/// Builds the named family's transitive set at dimension d.
/// sharpness and basis are virtual monomial orbits, hypercube is a virtual
/// signed-permutation orbit, simplex is the explicit regular simplex.
TransitiveSet make_family_set(const std::string& family, Eigen::Index d);

/// Explicit square orbit {(+-1,0),(0,+-1)} in R^2.
TransitiveSet square_orbit();

std::vector<SweepRow> run_sweep(const RunConfig& cfg);

void write_rows_csv(std::ostream& out, const std::vector<SweepRow>& rows);
void write_rows_json(std::ostream& out, const std::vector<SweepRow>& rows);
void write_rows_svg(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace tsw
