#pragma once

#include <json.hpp>
#include <string>

#include "modspace/bilin/bilin.hpp"
#include "modspace/cases/cases.hpp"
#include "modspace/quot/quot.hpp"
#include "modspace/tensor/tensor.hpp"

namespace modspace::io {

using Json = nlohmann::ordered_json;
using exact::Field;
using exact::Matrix;
using exact::Tensor3;

// Field elements are always strings: "a/b" or "c" over Q, residues in [0, p) over F_p.
// Parse functions throw ParseError whose where() is the path of the offending field,
// e.g. "M1.X[0].entries[3]".

Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const std::string& where = "matrix");

Json to_json(const modcore::FramedModule& m);
modcore::FramedModule framed_module_from_json(const Json& j, const std::string& where = "module");

Json to_json(const bilin::BilinPoint& b);
bilin::BilinPoint bilin_point_from_json(const Json& j, const std::string& where = "point");

/// {"field", "dims", "coeffs"} with coeffs in (i, j, k) lexicographic order.
Json to_json(const Tensor3& t);
/// "field" is optional and defaults to `fallback`.
Tensor3 tensor_from_json(const Json& j, Field fallback = Field::rationals(), const std::string& where = "tensor");

/// Entries become coefficient lists, constant term first.
Json to_json(const exact::ParamMatrix& m);
Json to_json(const exact::ParamTensor& t);

Json to_json(const modcore::FramedValidation& v);
Json to_json(const bilin::BilinValidation& v);
Json to_json(const quot::QuotTangent& t);
Json to_json(const quot::HomKM& h);
Json to_json(const quot::QuotDims& d);
Json to_json(const quot::GrassmannianReport& g);
Json to_json(const quot::QuotFamily& f);
Json to_json(const bilin::BilinTangent& t);
Json to_json(const bilin::DimensionReport& d);
Json to_json(const tensor::Classification222& c);
Json to_json(const tensor::BruteForceRank& r);
Json to_json(const tensor::SecantReport& s);
Json to_json(const cases::LimitReport& r);
Json to_json(const cases::PointClassification& p);
Json to_json(const cases::Census& c);

/// Reads and parses a JSON file; ParseError("file", ...) on I/O or syntax errors.
Json read_json_file(const std::string& path);

}  // namespace modspace::io
