#include "tsw/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "tsw/io.hpp"
#include "tsw/measures.hpp"

namespace tsw {

TransitiveSet square_orbit() {
  std::vector<Vec> pts;
  for (double s : {1.0, -1.0}) {
    Vec a(2), b(2);
    a << Complex(s, 0), Complex(0, 0);
    b << Complex(0, 0), Complex(s, 0);
    pts.push_back(a);
    pts.push_back(b);
  }
  return TransitiveSet::explicit_set(std::move(pts), Field::Real);
}

namespace {

TransitiveSet basis_virtual(Eigen::Index d) {
  Vec e1 = Vec::Zero(d);
  e1[0] = 1.0;
  return TransitiveSet::virtual_set(GroupPresentation::monomial_full(d),
                                    UnitVector(e1, Field::Complex));
}

TransitiveSet hypercube_virtual(Eigen::Index d) {
  Vec u = Vec::Constant(d, 1.0 / std::sqrt(double(d)));
  return TransitiveSet::virtual_set(GroupPresentation::signed_permutation(d),
                                    UnitVector(u, Field::Real));
}

// Regular simplex: the d+1 renormalized projections of the standard basis
// of R^{d+1} onto 1-perp, expressed in an orthonormal basis of 1-perp.
TransitiveSet simplex_explicit(Eigen::Index d) {
  Eigen::Index n = d + 1;
  Eigen::MatrixXd a(n, n);
  a.col(0) = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(double(n)));
  a.rightCols(n - 1).setZero();
  for (Eigen::Index j = 1; j < n; ++j) a(j - 1, j) = 1.0;
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  Eigen::MatrixXd q = qr.householderQ();
  Eigen::MatrixXd basis = q.rightCols(n - 1);  // ONB of 1-perp
  double scale = std::sqrt(double(n) / double(d));
  std::vector<Vec> pts;
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::VectorXd centered = -Eigen::VectorXd::Constant(n, 1.0 / double(n));
    centered[i] += 1.0;
    Eigen::VectorXd coords = scale * (basis.transpose() * centered);
    Vec p(d);
    for (Eigen::Index k = 0; k < d; ++k) p[k] = Complex(coords[k], 0.0);
    pts.push_back(std::move(p));
  }
  return TransitiveSet::explicit_set(std::move(pts), Field::Real);
}

std::string format_double(double x) {
  if (std::isnan(x)) return "";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

}  // namespace

TransitiveSet make_family_set(const std::string& family, Eigen::Index d) {
  if (family == "sharpness") return sharpness_set(d);
  if (family == "hypercube") return hypercube_virtual(d);
  if (family == "basis") return basis_virtual(d);
  if (family == "simplex") return simplex_explicit(d);
  throw InputError("unknown family: " + family);
}

std::vector<SweepRow> run_sweep(const RunConfig& cfg) {
  cfg.validate();
  std::vector<SweepRow> rows;
  for (Eigen::Index d : cfg.dims) {
    SweepRow row;
    row.family = cfg.family;
    row.d = d;
    row.inv_sqrt_log_d =
        d >= 2 ? 1.0 / std::sqrt(std::log(double(d))) : std::nan("");
    try {
      row.sqrt_psi = std::sqrt(psi(d));
      TransitiveSet X = [&] {
        if (cfg.family == "custom") {
          GroupPresentation g =
              group_from_json(load_json_file(cfg.group_file));
          UnitVector v =
              unit_vector_from_json(load_json_file(cfg.vector_file));
          if (g.kind() == GroupKind::Explicit)
            return orbit_enumerate(g, v, 1000000);
          return TransitiveSet::virtual_set(g, v);
        }
        return make_family_set(cfg.family, d);
      }();
      SolverConfig solver = cfg.solver;
      solver.seed = Seed{cfg.seed.value ^ (0x5eedULL + std::uint64_t(d))};
      WidthReport rep = width_report(X, solver);
      row.width_upper = rep.upper;
      row.width_lower = rep.lower;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_rows_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "family,d,width_upper,width_lower,inv_sqrt_log_d,sqrt_psi\n";
  for (const SweepRow& r : rows) {
    if (!r.error.empty()) {
      std::string msg = r.error;
      for (char& c : msg)
        if (c == ',' || c == '\n') c = ';';
      out << r.family << ',' << r.d << ",,,,," << msg << '\n';
      continue;
    }
    out << r.family << ',' << r.d << ',' << format_double(r.width_upper)
        << ',' << format_double(r.width_lower) << ','
        << format_double(r.inv_sqrt_log_d) << ',' << format_double(r.sqrt_psi)
        << '\n';
  }
}

void write_rows_json(std::ostream& out, const std::vector<SweepRow>& rows) {
  Json arr = Json::array();
  for (const SweepRow& r : rows) {
    Json j{{"family", r.family}, {"d", r.d}};
    if (r.error.empty()) {
      j["width_upper"] = r.width_upper;
      j["width_lower"] = r.width_lower;
      if (!std::isnan(r.inv_sqrt_log_d)) j["inv_sqrt_log_d"] = r.inv_sqrt_log_d;
      j["sqrt_psi"] = r.sqrt_psi;
    } else {
      j["error"] = r.error;
    }
    arr.push_back(std::move(j));
  }
  out << arr.dump(2) << '\n';
}

void write_rows_svg(std::ostream& out, const std::vector<SweepRow>& rows) {
  const double w = 640, h = 420, ml = 50, mr = 15, mt = 15, mb = 35;
  double dmax = 2;
  for (const SweepRow& r : rows)
    if (r.error.empty()) dmax = std::max(dmax, double(r.d));
  auto sx = [&](double d) {
    return ml + (w - ml - mr) * std::log(std::max(2.0, d) / 2.0) /
                    std::max(1e-9, std::log(dmax / 2.0));
  };
  auto sy = [&](double v) { return h - mb - (h - mt - mb) * v; };
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
      << "\" height=\"" << h << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<line x1=\"" << ml << "\" y1=\"" << sy(0) << "\" x2=\"" << w - mr
      << "\" y2=\"" << sy(0) << "\" stroke=\"black\"/>\n"
      << "<line x1=\"" << ml << "\" y1=\"" << sy(0) << "\" x2=\"" << ml
      << "\" y2=\"" << mt << "\" stroke=\"black\"/>\n";
  // reference curve 1/sqrt(ln d)
  out << "<polyline fill=\"none\" stroke=\"#999\" stroke-dasharray=\"4 3\" "
         "points=\"";
  for (int k = 0; k <= 100; ++k) {
    double d = 2.0 * std::pow(dmax / 2.0, k / 100.0);
    out << sx(d) << ',' << sy(1.0 / std::sqrt(std::log(d))) << ' ';
  }
  out << "\"/>\n";
  for (const SweepRow& r : rows) {
    if (!r.error.empty()) continue;
    out << "<circle cx=\"" << sx(double(r.d)) << "\" cy=\""
        << sy(r.width_upper) << "\" r=\"3\" fill=\"#1f77b4\"/>\n";
    out << "<path d=\"M" << sx(double(r.d)) - 3 << ' ' << sy(r.width_lower) - 3
        << " l6 6 m0 -6 l-6 6\" stroke=\"#d62728\" fill=\"none\"/>\n";
  }
  out << "<text x=\"" << (w / 2) << "\" y=\"" << h - 8
      << "\" font-size=\"12\" text-anchor=\"middle\">d (log scale)</text>\n"
      << "<text x=\"12\" y=\"" << mt + 10
      << "\" font-size=\"12\">width</text>\n</svg>\n";
}

}  // namespace tsw
