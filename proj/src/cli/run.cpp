#include "modspace/cli/run.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <sstream>

#include "modspace/cases/cases.hpp"
#include "modspace/error.hpp"
#include "modspace/io/json.hpp"
#include "modspace/quot/quot.hpp"
#include "modspace/tensor/tensor.hpp"

namespace modspace::cli {

using exact::Field;
using exact::Scalar;
using io::Json;

namespace {

struct RunConfig {
  std::string field = "Q";
  std::uint64_t seed = 1;
  std::string out;
  std::string grid = "n=1..2 d=2..3 r=2..4";
  std::uint64_t cap = 1u << 22;
  bool check = false;
  std::size_t workers = 1;

  std::string kind;  // tangent: quot | bilin
  std::string point, m1, m2, m3, tensor, named, detail;
  std::string enumerate;
  std::string samples = "1,2,3";
  std::size_t n = 1, d = 2, r = 2, r1 = 2, r2 = 2, trials = 5;
  std::uint64_t q = 2;
  unsigned rmax = 4;
};

// Writes to --out when given, otherwise to the report stream.
class Sink {
 public:
  Sink(const RunConfig& cfg, std::ostream& out) : path_(cfg.out), out_(out) {}
  void write(const std::string& text) {
    if (path_.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(path_);
    if (!f) throw ParseError("out", "cannot write " + path_);
    f << text;
  }
  void json(const Json& j) { write(j.dump(2) + "\n"); }

 private:
  std::string path_;
  std::ostream& out_;
};

std::string require_path(const std::string& path, const std::string& flag) {
  if (path.empty()) throw ParseError(flag, "required");
  return path;
}

Json load(const std::string& path, const std::string& flag) { return io::read_json_file(require_path(path, flag)); }

struct Range {
  std::size_t lo, hi;
};

// "n=1..2 d=2..3 r=2..4"; r sets both r1 and r2.
std::map<std::string, Range> parse_grid(const std::string& text) {
  std::map<std::string, Range> grid{{"n", {1, 1}}, {"d", {2, 2}}, {"r1", {2, 2}}, {"r2", {2, 2}}};
  std::string spaced = text;
  for (auto& c : spaced)
    if (c == ',' || c == ';') c = ' ';
  std::istringstream in(spaced);
  std::string token;
  while (in >> token) {
    auto eq = token.find('=');
    if (eq == std::string::npos) throw ParseError("grid", "expected key=lo..hi, got '" + token + "'");
    std::string key = token.substr(0, eq), value = token.substr(eq + 1);
    Range range{};
    try {
      auto dots = value.find("..");
      range.lo = std::stoul(value.substr(0, dots));
      range.hi = dots == std::string::npos ? range.lo : std::stoul(value.substr(dots + 2));
    } catch (const std::exception&) {
      throw ParseError("grid." + key, "expected an integer range, got '" + value + "'");
    }
    if (range.lo == 0 || range.hi < range.lo) throw ParseError("grid." + key, "empty or non-positive range");
    if (key == "r") {
      grid["r1"] = grid["r2"] = range;
    } else if (grid.count(key)) {
      grid[key] = range;
    } else {
      throw ParseError("grid." + key, "unknown key");
    }
  }
  return grid;
}

std::vector<Scalar> parse_samples(Field f, const std::string& text) {
  std::vector<Scalar> out;
  std::string spaced = text;
  for (auto& c : spaced)
    if (c == ',') c = ' ';
  std::istringstream in(spaced);
  std::string token;
  while (in >> token) {
    try {
      out.push_back(Scalar::parse(f, token));
    } catch (const Error& e) {
      throw ParseError("samples", e.what());
    }
  }
  if (out.empty()) throw ParseError("samples", "no sample parameters");
  return out;
}

std::uint64_t parse_q(const std::string& text) {
  std::string v = text.rfind("q=", 0) == 0 ? text.substr(2) : text;
  try {
    std::size_t used = 0;
    auto q = std::stoull(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return q;
  } catch (const std::exception&) {
    throw ParseError("enumerate", "expected q=<prime>, got '" + text + "'");
  }
}

Field parse_field(const std::string& text) {
  try {
    return Field::parse(text);
  } catch (const Error& e) {
    throw ParseError("field", e.what());
  }
}

tensor::Tensor3 load_tensor(const RunConfig& cfg) {
  Field f = parse_field(cfg.field);
  if (!cfg.named.empty()) {
    auto nt = cases::named_tensor(f, cfg.named);
    return exact::evaluate_param(nt.value, Scalar(f, 0));
  }
  return io::tensor_from_json(load(cfg.tensor, "tensor"), f, "tensor");
}

int cmd_validate(const RunConfig& cfg, Sink& sink) {
  Json j = load(cfg.point, "point");
  if (j.is_object() && j.contains("M1")) {
    auto b = io::bilin_point_from_json(j, "point");
    auto v = bilin::validate_bilin(b);
    sink.json(Json{{"kind", "bilin"}, {"validation", io::to_json(v)}});
    return v.valid() ? ok : validation_failure;
  }
  auto m = io::framed_module_from_json(j, "point");
  auto v = modcore::validate_framed(m);
  sink.json(Json{{"kind", "quot"}, {"validation", io::to_json(v)}});
  return v.valid() ? ok : validation_failure;
}

int cmd_tangent(const RunConfig& cfg, Sink& sink, std::ostream& err) {
  Json j = load(cfg.point, "point");
  if (cfg.kind == "quot") {
    auto m = io::framed_module_from_json(j, "point");
    auto v = modcore::validate_framed(m);
    if (!v.valid()) {
      err << "invalid point: " << v.message() << "\n";
      sink.json(Json{{"validation", io::to_json(v)}});
      return validation_failure;
    }
    auto t = quot::quot_tangent(m, cfg.check);
    Json report = io::to_json(t);
    auto dims = quot::quot_dims(m.n, m.d, m.r);
    report["principal_dim"] = dims.principal_dim;
    if (m.n == 1) report["hom_dim"] = quot::hom_KM_univariate(m).dim;
    sink.json(report);
    return ok;
  }
  auto b = io::bilin_point_from_json(j, "point");
  auto v = bilin::validate_bilin(b);
  if (!v.valid()) {
    err << "invalid point: " << v.message() << "\n";
    sink.json(Json{{"validation", io::to_json(v)}});
    return validation_failure;
  }
  auto t = bilin::bilin_tangent(b, cfg.check);
  Json report = io::to_json(t);
  if (b.M1.d == b.M2.d && b.M1.d == b.d3) {
    auto dims = bilin::bilin_dims(b.n(), b.M1.d, b.M1.r, b.M2.r);
    report["main_dim"] = dims.main_dim;
    report["degenerate_dim"] = dims.degenerate_dim ? Json(*dims.degenerate_dim) : Json(nullptr);
  }
  if (b.n() == 1) report["hom_triple_dim"] = bilin::hom_triple_space_dim(b, bilin::hom_triple_context(b));
  sink.json(report);
  return ok;
}

int cmd_member(const RunConfig& cfg, Sink& sink) {
  auto m1 = io::framed_module_from_json(load(cfg.m1, "m1"), "m1");
  auto m2 = io::framed_module_from_json(load(cfg.m2, "m2"), "m2");
  auto m3 = io::framed_module_from_json(load(cfg.m3, "m3"), "m3");
  for (const auto* m : {&m1, &m2, &m3}) modcore::require_valid(*m);
  auto found = bilin::factor_membership(m1, m2, m3);
  Json report{{"member", found.has_value()}};
  if (found) {
    report["solution_dim"] = *bilin::membership_solution_dim(m1, m2, m3);
    report["point"] = io::to_json(*found);
  }
  sink.json(report);
  return found ? ok : validation_failure;
}

int cmd_dims(const RunConfig& cfg, Sink& sink) {
  auto grid = parse_grid(cfg.grid);
  std::ostringstream csv;
  csv << "n,d,r1,r2,main_dim,degenerate_dim,reducible_by_count,reducible_by_secant,irreducible\n";
  for (std::size_t n = grid["n"].lo; n <= grid["n"].hi; ++n)
    for (std::size_t d = grid["d"].lo; d <= grid["d"].hi; ++d)
      for (std::size_t r1 = grid["r1"].lo; r1 <= grid["r1"].hi; ++r1)
        for (std::size_t r2 = grid["r2"].lo; r2 <= grid["r2"].hi; ++r2) {
          auto rep = bilin::bilin_dims(n, d, r1, r2);
          csv << n << ',' << d << ',' << r1 << ',' << r2 << ',' << rep.main_dim << ','
              << (rep.degenerate_dim ? std::to_string(*rep.degenerate_dim) : "") << ',' << rep.reducible_by_count
              << ',' << rep.reducible_by_secant << ',' << rep.irreducible << '\n';
        }
  sink.write(csv.str());
  return ok;
}

int cmd_reducibility(const RunConfig& cfg, Sink& sink) {
  auto rep = bilin::bilin_dims(cfg.n, cfg.d, cfg.r1, cfg.r2);
  Json j = io::to_json(rep);
  j["quot"] = io::to_json(quot::quot_dims(cfg.n, cfg.d, cfg.r1));
  sink.json(j);
  return ok;
}

int cmd_secant(const RunConfig& cfg, Sink& sink) {
  auto rep = tensor::secant_dimension(parse_field(cfg.field), cfg.d, cfg.r, cfg.trials, cfg.seed, cfg.workers);
  sink.json(io::to_json(rep));
  return ok;
}

int cmd_classify(const RunConfig& cfg, Sink& sink) {
  if (!cfg.enumerate.empty()) {
    auto census = cases::enumerate_222(parse_q(cfg.enumerate), cfg.workers, cfg.cap);
    std::ostringstream csv;
    csv << "label,tensor_class,count\n";
    for (const auto& [key, count] : census.by_class) csv << key.label << ',' << key.tensor_class << ',' << count << '\n';
    csv << "NON_SPLIT,," << census.nonsplit << '\n';
    sink.write(csv.str());
    std::string detail = cfg.detail;
    if (detail.empty() && !cfg.out.empty()) detail = cfg.out + ".json";
    if (!detail.empty()) {
      std::ofstream f(detail);
      if (!f) throw ParseError("detail", "cannot write " + detail);
      f << io::to_json(census).dump(2) << "\n";
    }
    return census.ok() ? ok : validation_failure;
  }
  if (cfg.tensor.empty() && cfg.named.empty()) throw ParseError("tensor", "one of --tensor, --named, --enumerate is required");
  auto t = load_tensor(cfg);
  Json j{{"tensor", io::to_json(t)}, {"classification", io::to_json(tensor::classify_2x2x2(t, cfg.check))}};
  auto c = tensor::conciseness(t);
  j["flattening_ranks"] = c.flattening_ranks;
  if (t.field().characteristic() != 2) j["hyperdeterminant"] = tensor::hyperdeterminant(t).to_string();
  sink.json(j);
  return ok;
}

int cmd_limits(const RunConfig& cfg, Sink& sink) {
  const Field f = parse_field(cfg.field);
  const auto samples = parse_samples(f, cfg.samples);
  bool good = true;
  Json report;
  if (!cfg.point.empty()) {
    auto m = io::framed_module_from_json(load(cfg.point, "point"), "point");
    modcore::require_valid(m);
    auto fam = quot::quot2_limit_family(m);
    bool base = quot::evaluate_family(fam, Scalar(m.field(), 0)) == m;
    Json evals = Json::array();
    for (const auto& s : parse_samples(m.field(), cfg.samples)) {
      auto mt = quot::evaluate_family(fam, s);
      auto support = quot::support_size_d2(mt);
      bool valid = modcore::validate_framed(mt).valid();
      good = good && valid && support == std::optional<std::size_t>(2);
      evals.push_back(Json{{"t", s.to_string()}, {"valid", valid}, {"support_size", support ? Json(*support) : Json(nullptr)}});
    }
    good = good && base;
    report = Json{{"family", io::to_json(fam)}, {"recovers_base", base}, {"samples", evals}};
  } else {
    Json families = Json::object();
    for (const char* name : {"mu2_t", "mu3_t", "mu4_t"}) {
      auto nt = cases::named_tensor(f, name);
      auto target = exact::evaluate_param(cases::named_tensor(f, nt.limit).value, Scalar(f, 0));
      auto rep = cases::verify_limit(nt.value, target, samples);
      good = good && rep.limit_matches && rep.samples_concise_rank2;
      Json j = io::to_json(rep);
      j["limit"] = nt.limit;
      families[name] = j;
    }
    report = Json{{"field", f.to_string()}, {"families", families}};
  }
  report["ok"] = good;
  sink.json(report);
  return good ? ok : validation_failure;
}

int cmd_grcount(const RunConfig& cfg, Sink& sink) {
  auto rep = quot::degenerate_grassmannian_check(cfg.d, cfg.r, cfg.q, cfg.cap);
  sink.json(io::to_json(rep));
  return rep.match() ? ok : validation_failure;
}

int cmd_bruteforce(const RunConfig& cfg, Sink& sink) {
  auto t = load_tensor(cfg);
  auto rep = tensor::brute_force_rank_fq(t, cfg.rmax, cfg.cap);
  Json j{{"tensor", io::to_json(t)}, {"fq_rank", io::to_json(rep)}, {"rmax", cfg.rmax}};
  if (t.dims() == exact::Tensor3::Dims{2, 2, 2}) j["geometric"] = io::to_json(tensor::classify_2x2x2(t, cfg.check));
  sink.json(j);
  return ok;
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Framed modules, bilinear quotients and small tensors over Q and F_p"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--field", cfg.field, "Q or F:<p>");
  app.add_option("--seed", cfg.seed, "Random seed");
  app.add_option("--out", cfg.out, "Write the report to this file");
  app.add_option("--cap", cfg.cap, "Size cap for exhaustive enumerations")->check(CLI::PositiveNumber);
  app.add_flag("--check", cfg.check, "Run internal consistency checks");
  app.add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);

  auto* validate = app.add_subcommand("validate", "Validate a framed module or bilinear point");
  validate->add_option("--point", cfg.point, "JSON file")->required();

  auto* tangent = app.add_subcommand("tangent", "Tangent space dimension at a point");
  tangent->add_option("kind", cfg.kind, "quot or bilin")->required()->check(CLI::IsMember({"quot", "bilin"}));
  tangent->add_option("--point", cfg.point, "JSON file")->required();

  auto* member = app.add_subcommand("member", "Solve for Pihat making (M1, M2, M3) a point");
  member->add_option("--m1", cfg.m1)->required();
  member->add_option("--m2", cfg.m2)->required();
  member->add_option("--m3", cfg.m3)->required();

  auto* dims = app.add_subcommand("dims", "Component dimensions over a grid (CSV)");
  dims->add_option("--grid", cfg.grid, "e.g. \"n=1..2 d=2..3 r=2..4\"");

  auto* red = app.add_subcommand("reducibility", "Dimension comparison and reducibility criteria");
  red->add_option("--n", cfg.n);
  red->add_option("--d", cfg.d);
  red->add_option("--r1", cfg.r1);
  red->add_option("--r2", cfg.r2);

  auto* secant = app.add_subcommand("secant-dim", "Secant variety dimension of the Segre variety");
  secant->add_option("--d", cfg.d)->required();
  secant->add_option("--r", cfg.r)->required();
  secant->add_option("--trials", cfg.trials)->check(CLI::PositiveNumber);

  auto* classify = app.add_subcommand("classify222", "Classify a 2x2x2 tensor or enumerate points over F_q");
  auto* opt_tensor = classify->add_option("--tensor", cfg.tensor, "Tensor JSON file");
  auto* opt_named = classify->add_option("--named", cfg.named, "mu1 ... mu4, pi5_sample");
  auto* opt_enum = classify->add_option("--enumerate", cfg.enumerate, "q=<prime>");
  opt_tensor->excludes(opt_named)->excludes(opt_enum);
  opt_named->excludes(opt_enum);
  classify->add_option("--detail", cfg.detail, "JSON detail file for --enumerate");

  auto* limits = app.add_subcommand("limits", "Limit families of tensors or of a d = 2 module");
  limits->add_option("--samples", cfg.samples, "Comma-separated nonzero parameters");
  limits->add_option("--point", cfg.point, "Module JSON file for the Quot family");

  auto* grcount = app.add_subcommand("grcount", "Degenerate locus against the Gaussian binomial");
  grcount->add_option("--d", cfg.d)->required();
  grcount->add_option("--r", cfg.r)->required();
  grcount->add_option("--q", cfg.q)->required();

  auto* brute = app.add_subcommand("bruteforce-rank", "Exhaustive tensor rank over F_p");
  auto* b_tensor = brute->add_option("--tensor", cfg.tensor, "Tensor JSON file");
  brute->add_option("--named", cfg.named)->excludes(b_tensor);
  brute->add_option("--rmax", cfg.rmax);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return malformed_input;
  }

  Sink sink(cfg, out);
  try {
    if (*validate) return cmd_validate(cfg, sink);
    if (*tangent) return cmd_tangent(cfg, sink, err);
    if (*member) return cmd_member(cfg, sink);
    if (*dims) return cmd_dims(cfg, sink);
    if (*red) return cmd_reducibility(cfg, sink);
    if (*secant) return cmd_secant(cfg, sink);
    if (*classify) return cmd_classify(cfg, sink);
    if (*limits) return cmd_limits(cfg, sink);
    if (*grcount) return cmd_grcount(cfg, sink);
    if (*brute) return cmd_bruteforce(cfg, sink);
  } catch (const ParseError& e) {
    err << "malformed input: " << e.what() << "\n";
    return malformed_input;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return cap_exceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return validation_failure;
  }
  return malformed_input;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> storage{"modspace"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace modspace::cli
