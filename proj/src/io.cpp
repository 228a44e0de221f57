#include "tsw/io.hpp"

#include <fstream>

namespace tsw {

namespace {

std::string field_name(Field f) {
  return f == Field::Real ? "real" : "complex";
}

Field field_from_name(const std::string& s) {
  if (s == "real") return Field::Real;
  if (s == "complex") return Field::Complex;
  throw InputError("unknown field tag: " + s);
}

Json scalar_to_json(const Complex& z, Field field) {
  if (field == Field::Real) return z.real();
  return Json::array({z.real(), z.imag()});
}

Complex scalar_from_json(const Json& j, Field field) {
  if (field == Field::Real) {
    if (!j.is_number()) throw InputError("real scalar must be a number");
    return Complex(j.get<double>(), 0.0);
  }
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2)
    return Complex(j[0].get<double>(), j[1].get<double>());
  throw InputError("complex scalar must be a number or [re, im]");
}

}  // namespace

Json vector_to_json(const Vec& v, Field field) {
  Json coords = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    coords.push_back(scalar_to_json(v[i], field));
  return Json{{"field", field_name(field)}, {"coords", coords}};
}

std::pair<Vec, Field> vector_from_json(const Json& j) {
  if (!j.contains("field") || !j.contains("coords"))
    throw InputError("vector JSON needs \"field\" and \"coords\"");
  Field field = field_from_name(j["field"].get<std::string>());
  const Json& coords = j["coords"];
  if (!coords.is_array() || coords.empty())
    throw InputError("vector coords must be a nonempty array");
  Vec v(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i)
    v[static_cast<Eigen::Index>(i)] = scalar_from_json(coords[i], field);
  return {v, field};
}

UnitVector unit_vector_from_json(const Json& j, const Tolerance& tol) {
  auto [v, field] = vector_from_json(j);
  return UnitVector(v, field, tol);
}

Json matrix_to_json(const Mat& m, Field field) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k)
      row.push_back(scalar_to_json(m(i, k), field));
    rows.push_back(row);
  }
  return Json{{"field", field_name(field)}, {"rows", rows}};
}

Mat matrix_from_json(const Json& j) {
  if (!j.contains("field") || !j.contains("rows"))
    throw InputError("matrix JSON needs \"field\" and \"rows\"");
  Field field = field_from_name(j["field"].get<std::string>());
  const Json& rows = j["rows"];
  if (!rows.is_array() || rows.empty())
    throw InputError("matrix rows must be a nonempty array");
  std::size_t n = rows.size();
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n)
      throw InputError("matrix must be square");
    for (std::size_t k = 0; k < n; ++k)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
          scalar_from_json(rows[i][k], field);
  }
  return m;
}

Json group_to_json(const GroupPresentation& g) {
  switch (g.kind()) {
    case GroupKind::Explicit: {
      Json gens = Json::array();
      for (const Mat& m : g.generators())
        gens.push_back(matrix_to_json(m, g.field()));
      return Json{{"dim", g.dim()},
                  {"field", field_name(g.field())},
                  {"kind", "explicit"},
                  {"generators", gens}};
    }
    case GroupKind::Permutation:
      return Json{{"kind", "permutation"}, {"dim", g.dim()},
                  {"field", field_name(g.field())}};
    case GroupKind::SignedPermutation:
      return Json{{"kind", "signed_permutation"}, {"dim", g.dim()},
                  {"field", field_name(g.field())}};
    case GroupKind::MonomialFull:
      return Json{{"kind", "monomial_full"}, {"dim", g.dim()}};
  }
  throw WrongKind("unknown group kind");
}

GroupPresentation group_from_json(const Json& j, const Tolerance& tol) {
  if (!j.contains("kind") || !j.contains("dim"))
    throw InputError("group JSON needs \"kind\" and \"dim\"");
  std::string kind = j["kind"].get<std::string>();
  auto dim = j["dim"].get<Eigen::Index>();
  Field field = Field::Real;
  if (j.contains("field")) field = field_from_name(j["field"]);
  if (kind == "permutation") return GroupPresentation::permutation(dim, field);
  if (kind == "signed_permutation")
    return GroupPresentation::signed_permutation(dim, field);
  if (kind == "monomial_full") return GroupPresentation::monomial_full(dim);
  if (kind == "explicit") {
    if (!j.contains("generators"))
      throw InputError("explicit group JSON needs \"generators\"");
    std::vector<Mat> gens;
    for (const Json& gj : j["generators"]) gens.push_back(matrix_from_json(gj));
    return GroupPresentation::explicit_group(dim, field, std::move(gens), tol);
  }
  throw InputError("unknown group kind: " + kind);
}

Json measure_to_json(const SymmetricMeasure& mu) {
  if (mu.kind == SymmetricMeasure::Kind::Haar)
    return Json{{"kind", "haar"},
                {"dim", mu.dim},
                {"field", field_name(mu.field)},
                {"n_samples", mu.n_samples},
                {"seed", mu.seed.value}};
  Json atoms = Json::array();
  for (std::size_t i = 0; i < mu.atoms.size(); ++i)
    atoms.push_back(Json{{"w", vector_to_json(mu.atoms[i], mu.field)},
                         {"weight", mu.weights[i]}});
  return Json{{"kind", "atoms"},
              {"dim", mu.dim},
              {"field", field_name(mu.field)},
              {"atoms", atoms}};
}

SymmetricMeasure measure_from_json(const Json& j, const Tolerance& tol) {
  if (!j.contains("kind")) throw InputError("measure JSON needs \"kind\"");
  std::string kind = j["kind"].get<std::string>();
  if (kind == "haar") {
    Field field = Field::Complex;
    if (j.contains("field")) field = field_from_name(j["field"]);
    return SymmetricMeasure::haar(j.at("dim").get<Eigen::Index>(), field,
                                  Seed{j.at("seed").get<std::uint64_t>()},
                                  j.at("n_samples").get<std::size_t>());
  }
  if (kind != "atoms") throw InputError("unknown measure kind: " + kind);
  std::vector<Vec> atoms;
  std::vector<double> weights;
  Field field = Field::Complex;
  for (const Json& aj : j.at("atoms")) {
    auto [v, f] = vector_from_json(aj.at("w"));
    field = f;
    atoms.push_back(v);
    weights.push_back(aj.at("weight").get<double>());
  }
  return SymmetricMeasure::from_atoms(std::move(atoms), std::move(weights),
                                      field, tol);
}

Json width_report_to_json(const WidthReport& rep) {
  return Json{{"upper", rep.upper},
              {"lower", rep.lower},
              {"lower_certificate", to_string(rep.certificate)},
              {"witness", vector_to_json(rep.witness.coords(),
                                         rep.witness.field())},
              {"iterations", rep.iterations},
              {"restarts", rep.restarts}};
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw InputError("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace tsw
