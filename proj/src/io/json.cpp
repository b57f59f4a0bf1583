#include "modspace/io/json.hpp"

#include <fstream>

#include "modspace/error.hpp"

namespace modspace::io {

using exact::Scalar;

namespace {

std::string index_path(const std::string& where, const std::string& key, std::size_t i) {
  return where + "." + key + "[" + std::to_string(i) + "]";
}

const Json& member(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + "." + key, "missing");
  return *it;
}

std::size_t size_member(const Json& j, const std::string& key, const std::string& where) {
  const Json& v = member(j, key, where);
  if (!v.is_number_unsigned()) throw ParseError(where + "." + key, "expected a non-negative integer");
  return v.get<std::size_t>();
}

const Json& array_member(const Json& j, const std::string& key, const std::string& where) {
  const Json& v = member(j, key, where);
  if (!v.is_array()) throw ParseError(where + "." + key, "expected an array");
  return v;
}

Field parse_field(const Json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError(where, "expected a field string \"Q\" or \"F:<p>\"");
  try {
    return Field::parse(v.get<std::string>());
  } catch (const Error& e) {
    throw ParseError(where, e.what());
  }
}

Scalar parse_scalar(Field f, const Json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError(where, "field elements must be strings");
  try {
    return Scalar::parse(f, v.get<std::string>());
  } catch (const Error& e) {
    throw ParseError(where, e.what());
  }
}

void require_field(const Matrix& m, Field f, const std::string& where) {
  if (!(m.field() == f)) throw ParseError(where + ".field", "expected " + f.to_string());
}

void require_shape(const Matrix& m, std::size_t rows, std::size_t cols, const std::string& where) {
  if (m.rows() != rows || m.cols() != cols)
    throw ParseError(where, "expected a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
}

std::vector<Matrix> matrix_list(const Json& j, const std::string& key, std::size_t count, std::size_t size,
                                Field f, const std::string& where) {
  const Json& arr = array_member(j, key, where);
  if (arr.size() != count) throw ParseError(where + "." + key, "expected " + std::to_string(count) + " matrices");
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::string path = index_path(where, key, i);
    Matrix m = matrix_from_json(arr[i], path);
    require_field(m, f, path);
    require_shape(m, size, size, path);
    out.push_back(std::move(m));
  }
  return out;
}

Json matrices(const std::vector<Matrix>& ms) {
  Json arr = Json::array();
  for (const auto& m : ms) arr.push_back(to_json(m));
  return arr;
}

Json poly_json(const exact::Poly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.to_string());
  return arr;
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json to_json(const Matrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) entries.push_back(m(i, j).to_string());
  return Json{{"field", m.field().to_string()}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Matrix matrix_from_json(const Json& j, const std::string& where) {
  const Field f = parse_field(member(j, "field", where), where + ".field");
  const std::size_t rows = size_member(j, "rows", where), cols = size_member(j, "cols", where);
  const Json& entries = array_member(j, "entries", where);
  if (entries.size() != rows * cols)
    throw ParseError(where + ".entries", "expected " + std::to_string(rows * cols) + " entries");
  Matrix m(f, rows, cols);
  for (std::size_t k = 0; k < entries.size(); ++k)
    m(k / cols, k % cols) = parse_scalar(f, entries[k], index_path(where, "entries", k));
  return m;
}

Json to_json(const modcore::FramedModule& m) {
  return Json{{"n", m.n}, {"d", m.d}, {"r", m.r}, {"X", matrices(m.X)}, {"G", to_json(m.G)}};
}

modcore::FramedModule framed_module_from_json(const Json& j, const std::string& where) {
  modcore::FramedModule m;
  m.n = size_member(j, "n", where);
  m.d = size_member(j, "d", where);
  m.r = size_member(j, "r", where);
  m.G = matrix_from_json(member(j, "G", where), where + ".G");
  require_shape(m.G, m.d, m.r, where + ".G");
  m.X = matrix_list(j, "X", m.n, m.d, m.G.field(), where);
  return m;
}

Json to_json(const bilin::BilinPoint& b) {
  return Json{{"M1", to_json(b.M1)}, {"M2", to_json(b.M2)}, {"d3", b.d3}, {"Z", matrices(b.Z)},
              {"Pihat", to_json(b.Pihat)}};
}

bilin::BilinPoint bilin_point_from_json(const Json& j, const std::string& where) {
  bilin::BilinPoint b;
  b.M1 = framed_module_from_json(member(j, "M1", where), where + ".M1");
  b.M2 = framed_module_from_json(member(j, "M2", where), where + ".M2");
  const Field f = b.M1.field();
  require_field(b.M2.G, f, where + ".M2.G");
  if (b.M2.n != b.M1.n) throw ParseError(where + ".M2.n", "must equal M1.n");
  b.d3 = size_member(j, "d3", where);
  b.Z = matrix_list(j, "Z", b.M1.n, b.d3, f, where);
  b.Pihat = matrix_from_json(member(j, "Pihat", where), where + ".Pihat");
  require_field(b.Pihat, f, where + ".Pihat");
  require_shape(b.Pihat, b.d3, b.M1.d * b.M2.d, where + ".Pihat");
  return b;
}

Json to_json(const Tensor3& t) {
  Json coeffs = Json::array();
  for (const auto& c : t.coeffs()) coeffs.push_back(c.to_string());
  const auto& d = t.dims();
  return Json{{"field", t.field().to_string()}, {"dims", {d[0], d[1], d[2]}}, {"coeffs", coeffs}};
}

Tensor3 tensor_from_json(const Json& j, Field fallback, const std::string& where) {
  Field f = fallback;
  if (j.is_object() && j.contains("field")) f = parse_field(j.at("field"), where + ".field");
  const Json& dims = array_member(j, "dims", where);
  if (dims.size() != 3) throw ParseError(where + ".dims", "expected three dimensions");
  Tensor3::Dims d{};
  for (std::size_t k = 0; k < 3; ++k) {
    if (!dims[k].is_number_unsigned()) throw ParseError(index_path(where, "dims", k), "expected a non-negative integer");
    d[k] = dims[k].get<std::size_t>();
  }
  const Json& coeffs = array_member(j, "coeffs", where);
  if (coeffs.size() != d[0] * d[1] * d[2])
    throw ParseError(where + ".coeffs", "expected " + std::to_string(d[0] * d[1] * d[2]) + " coefficients");
  Tensor3 t(f, d);
  for (std::size_t k = 0; k < coeffs.size(); ++k) t.coeffs()[k] = parse_scalar(f, coeffs[k], index_path(where, "coeffs", k));
  return t;
}

Json to_json(const exact::ParamMatrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) entries.push_back(poly_json(m(i, j)));
  return Json{{"field", m.field().to_string()}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Json to_json(const exact::ParamTensor& t) {
  Json coeffs = Json::array();
  for (const auto& c : t.coeffs()) coeffs.push_back(poly_json(c));
  const auto& d = t.dims();
  return Json{{"field", t.field().to_string()}, {"dims", {d[0], d[1], d[2]}}, {"coeffs", coeffs}};
}

Json to_json(const modcore::FramedValidation& v) {
  Json j{{"valid", v.valid()}, {"commuting", v.commuting}, {"generating", v.generating}};
  if (v.noncommuting_pair) {
    j["noncommuting_pair"] = {v.noncommuting_pair->first, v.noncommuting_pair->second};
    j["commutator"] = to_json(v.commutator);
  }
  if (v.invariant_subspace) j["invariant_subspace"] = to_json(*v.invariant_subspace);
  if (!v.valid()) j["message"] = v.message();
  return j;
}

Json to_json(const bilin::BilinValidation& v) {
  Json j{{"valid", v.valid()},
         {"modules_valid", v.modules_valid},
         {"z_commuting", v.z_commuting},
         {"equivariant", v.equivariant},
         {"surjective", v.surjective}};
  if (v.failing_index) {
    j["failing_index"] = *v.failing_index;
    j["failing_side"] = v.failing_side;
    j["residual"] = to_json(v.residual);
  }
  if (!v.valid()) j["message"] = v.message();
  return j;
}

Json to_json(const quot::QuotTangent& t) {
  Json basis = Json::array();
  for (const auto& v : t.basis) basis.push_back(Json{{"Xdot", matrices(v.Xdot)}, {"Gdot", to_json(v.Gdot)}});
  return Json{{"dim", t.dim}, {"nullity", t.nullity}, {"gauge", t.gauge}, {"basis", basis}};
}

Json to_json(const quot::HomKM& h) {
  return Json{{"dim", h.dim}, {"kernel_generators", to_json(h.kernel.generators)}, {"basis", matrices(h.basis)}};
}

Json to_json(const quot::QuotDims& d) {
  return Json{{"principal_dim", d.principal_dim},
              {"degenerate_dim", optional_json(d.degenerate_dim)},
              {"reducible_by_count", d.reducible_by_count}};
}

Json to_json(const quot::GrassmannianReport& g) {
  return Json{{"enumerated", g.enumerated},
              {"expected", g.expected},
              {"matrices_scanned", g.matrices_scanned},
              {"match", g.match()}};
}

Json to_json(const quot::QuotFamily& f) {
  Json xs = Json::array();
  for (const auto& x : f.X) xs.push_back(to_json(x));
  return Json{{"n", f.n}, {"r", f.r}, {"branch", quot::to_string(f.branch)}, {"X", xs}, {"G", to_json(f.G)}};
}

Json to_json(const bilin::BilinTangent& t) {
  Json basis = Json::array();
  for (const auto& v : t.basis)
    basis.push_back(Json{{"Xdot", matrices(v.Xdot)},
                         {"Gdot", to_json(v.Gdot)},
                         {"Ydot", matrices(v.Ydot)},
                         {"Hdot", to_json(v.Hdot)},
                         {"Zdot", matrices(v.Zdot)},
                         {"Pihatdot", to_json(v.Pihatdot)}});
  return Json{{"dim", t.dim}, {"nullity", t.nullity}, {"gauge", t.gauge}, {"basis", basis}};
}

Json to_json(const bilin::DimensionReport& d) {
  return Json{{"n", d.n},
              {"d", d.d},
              {"r1", d.r1},
              {"r2", d.r2},
              {"main_dim", d.main_dim},
              {"degenerate_dim", optional_json(d.degenerate_dim)},
              {"reducible_by_count", d.reducible_by_count},
              {"reducible_by_secant", d.reducible_by_secant},
              {"irreducible", d.irreducible},
              {"reason", d.reason}};
}

Json to_json(const tensor::Classification222& c) {
  return Json{{"label", c.label()},
              {"orbit", tensor::to_string(c.orbit)},
              {"rank", c.rank},
              {"border_rank", c.border_rank},
              {"concise", {c.concise[0], c.concise[1], c.concise[2]}},
              {"nonconcise_factor", c.nonconcise_factor ? Json(*c.nonconcise_factor + 1) : Json(nullptr)}};
}

Json to_json(const tensor::BruteForceRank& r) {
  return Json{{"rank", r.rank ? Json(*r.rank) : Json(nullptr)},
              {"states", r.states},
              {"rank_one_count", r.rank_one_count}};
}

Json to_json(const tensor::SecantReport& s) {
  return Json{{"d", s.d},
              {"r", s.r},
              {"terracini_dim", s.terracini_dim},
              {"bound", s.bound},
              {"ambient", s.ambient},
              {"fills", s.fills_ambient},
              {"trial_dims", s.trial_dims}};
}

Json to_json(const cases::LimitReport& r) {
  Json samples = Json::array();
  for (const auto& s : r.samples) samples.push_back(Json{{"t", s.t.to_string()}, {"class", to_json(s.cls)}});
  return Json{{"limit_matches", r.limit_matches},
              {"limit_class", to_json(r.limit_class)},
              {"samples", samples},
              {"samples_concise_rank2", r.samples_concise_rank2},
              {"samples_identical", r.samples_identical},
              {"rank_drop", r.rank_drop}};
}

Json to_json(const cases::PointClassification& p) {
  return Json{{"label", cases::to_string(p.label)},
              {"tensor", to_json(p.tensor)},
              {"modules",
               {cases::to_string(p.modules[0]), cases::to_string(p.modules[1]), cases::to_string(p.modules[2])}},
              {"violations", p.violations}};
}

Json to_json(const cases::Census& c) {
  Json classes = Json::array();
  for (const auto& [key, count] : c.by_class) {
    Json entry{{"label", key.label}, {"tensor_class", key.tensor_class}, {"count", count}};
    auto it = c.examples.find(key);
    if (it != c.examples.end()) entry["example"] = to_json(it->second);
    classes.push_back(entry);
  }
  return Json{{"q", c.q},
              {"quot_classes", c.quot_classes},
              {"points", c.points},
              {"nonsplit", c.nonsplit},
              {"border_rank3", c.border_rank3},
              {"membership_mismatches", c.membership_mismatches},
              {"by_label", c.by_label},
              {"classes", classes},
              {"violations", c.violations},
              {"ok", c.ok()}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("file", "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("file", path + ": " + e.what());
  }
}

}  // namespace modspace::io
