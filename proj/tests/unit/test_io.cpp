#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "modspace/error.hpp"
#include "modspace/exact/random.hpp"
#include "modspace/io/json.hpp"

using namespace modspace;
using namespace modspace::exact;
using io::Json;

namespace {

const Field kQ = Field::rationals();

std::string parse_error_where(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.where();
  }
  return "<no error>";
}

Json main_point_json() { return io::read_json_file(std::string(MODSPACE_DATA_DIR) + "/main_1222.json"); }

}  // namespace

TEST_CASE("matrix round trip") {
  Matrix a = Matrix::from_rows(kQ, {{1, -2, 0}, {3, 4, 5}});
  a(0, 2) = Scalar::rational(-7, 3);
  Json j = io::to_json(a);
  CHECK(j["field"] == "Q");
  CHECK(j["entries"][2] == "-7/3");
  CHECK(io::matrix_from_json(j) == a);

  Field f7 = Field::prime(7);
  Matrix b = Matrix::from_rows(f7, {{6, -1}, {10, 0}});
  Json jb = io::to_json(b);
  CHECK(jb["field"] == "F:7");
  CHECK(jb["entries"][1] == "6");  // residues in [0, p)
  CHECK(io::matrix_from_json(jb) == b);
  CHECK(io::matrix_from_json(Json::parse(jb.dump())) == b);
}

TEST_CASE("module, point and tensor round trips") {
  Rng rng(3);
  Field f5 = Field::prime(5);
  for (int trial = 0; trial < 10; ++trial) {
    auto m = modcore::random_framed(trial % 2 ? kQ : f5, 1 + trial % 3, 3, 2, rng);
    CHECK(io::framed_module_from_json(Json::parse(io::to_json(m).dump())) == m);
  }
  auto b = io::bilin_point_from_json(main_point_json());
  CHECK(bilin::validate_bilin(b).valid());
  CHECK(io::bilin_point_from_json(Json::parse(io::to_json(b).dump())) == b);

  Tensor3 t(f5, {2, 3, 2});
  for (auto& c : t.coeffs()) c = random_scalar(f5, rng);
  CHECK(io::tensor_from_json(io::to_json(t)) == t);
  Json no_field = Json::parse(R"({"dims": [1, 1, 2], "coeffs": ["1", "3"]})");
  Tensor3 u = io::tensor_from_json(no_field, f5);
  CHECK(u.field() == f5);
  CHECK(u(0, 0, 1) == Scalar(f5, 3));
  // (i, j, k) lexicographic order
  Tensor3 v(kQ, {2, 2, 2});
  v(1, 0, 1) = Scalar(kQ, 1);
  CHECK(io::to_json(v)["coeffs"][5] == "1");
}

TEST_CASE("parse errors name the offending field") {
  Json j = main_point_json();
  CHECK(parse_error_where([&] {
          Json k = j;
          k.erase("Pihat");
          io::bilin_point_from_json(k);
        }) == "point.Pihat");
  CHECK(parse_error_where([&] {
          Json k = j;
          k["M1"]["X"][0]["entries"][1] = 3;
          io::bilin_point_from_json(k);
        }) == "point.M1.X[0].entries[1]");
  CHECK(parse_error_where([&] {
          Json k = j;
          k["M2"]["G"]["entries"][0] = "1/0";
          io::bilin_point_from_json(k);
        }) == "point.M2.G.entries[0]");
  CHECK(parse_error_where([&] {
          Json k = j;
          k["M2"]["G"]["field"] = "F:4";
          io::bilin_point_from_json(k);
        }) == "point.M2.G.field");
  CHECK(parse_error_where([&] {
          Json k = j;
          k["M2"]["G"]["field"] = "F:3";
          k["M2"]["X"][0]["field"] = "F:3";
          io::bilin_point_from_json(k);
        }) == "point.M2.G.field");
  CHECK(parse_error_where([&] {
          Json k = j;
          k["Z"][0]["rows"] = 1;
          k["Z"][0]["entries"] = {"0", "0"};
          io::bilin_point_from_json(k);
        }) == "point.Z[0].rows");
  CHECK(parse_error_where([&] {
          Json k = j;
          k["M1"]["n"] = 2;
          io::bilin_point_from_json(k);
        }) == "point.M1.n");
  CHECK(parse_error_where([&] {
          Json k = j;
          k["d3"] = -1;
          io::bilin_point_from_json(k);
        }) == "point.d3");
  CHECK(parse_error_where([] { io::tensor_from_json(Json::parse(R"({"dims": [2, 2], "coeffs": []})")); }) ==
        "tensor.dims");
  CHECK(parse_error_where([] { io::tensor_from_json(Json::parse(R"({"dims": [1, 1, 2], "coeffs": ["1"]})")); }) ==
        "tensor.coeffs");
  CHECK(parse_error_where([] { io::matrix_from_json(Json::array()); }) == "matrix");
  CHECK(parse_error_where([] { io::read_json_file("/nonexistent/point.json"); }) == "file");

  auto path = std::filesystem::temp_directory_path() / "modspace_bad.json";
  std::ofstream(path) << "{ \"n\": 1, ";
  CHECK(parse_error_where([&] { io::read_json_file(path.string()); }) == "file");
}

TEST_CASE("report serialization") {
  auto s = io::to_json(tensor::secant_dimension(kQ, 3, 3, 2, 1));
  CHECK(s["bound"] == 20);
  CHECK(s["ambient"] == 26);
  CHECK(s["fills"] == false);
  auto d = io::to_json(bilin::bilin_dims(1, 3, 2, 2));
  CHECK(d["degenerate_dim"].is_null());
  auto b = io::bilin_point_from_json(main_point_json());
  auto t = io::to_json(bilin::bilin_tangent(b));
  CHECK(t["dim"] == 6);
  CHECK(t["basis"].size() == 6);
  CHECK(t["basis"][0].contains("Pihatdot"));
  auto c = io::to_json(tensor::classify_2x2x2(tensor::unit_tensor(kQ, 2)));
  CHECK(c["label"] == "generic");
  CHECK(c["nonconcise_factor"].is_null());
}
