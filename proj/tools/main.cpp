#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ainfty/builders.hpp"
#include "ainfty/errors.hpp"
#include "ainfty/field.hpp"
#include "ainfty/json_io.hpp"
#include "ainfty/kappa.hpp"
#include "ainfty/metrics.hpp"
#include "ainfty/reduction.hpp"
#include "ainfty/svg.hpp"
#include "ainfty/transfer.hpp"

namespace {

using namespace ainfty;

constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitTopN = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << content;
}

std::uint32_t env_field() {
  const char* e = std::getenv("AINFTY_FIELD");
  if (!e || !*e) return 2;
  try {
    std::size_t pos = 0;
    int v = std::stoi(e, &pos);
    if (pos != std::string(e).size() || v < 2) throw std::invalid_argument(e);
    return static_cast<std::uint32_t>(v);
  } catch (const std::exception&) {
    throw ParseError(std::string("bad AINFTY_FIELD value '") + e + "'");
  }
}

void require_prime_field(std::uint32_t p) {
  if (!is_prime(p)) throw ValidationError("the coefficient field must be F_p for a prime p, got " +
                                          std::to_string(p));
}

FiltValue parse_filt_flag(const std::string& s, const char* what) {
  auto v = FiltValue::parse(s);
  if (!v) throw ParseError(std::string("bad ") + what + " '" + s + "'");
  return *v;
}

std::map<int, Rational> parse_vertex_function(const std::string& text) {
  std::map<int, Rational> f;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string vtok, qtok;
    if (!(ls >> vtok)) continue;
    if (!(ls >> qtok)) throw ParseError("expected 'vertex value'", lineno);
    std::string rest;
    if (ls >> rest) throw ParseError("trailing token '" + rest + "'", lineno);
    int v = 0;
    try {
      std::size_t pos = 0;
      v = std::stoi(vtok, &pos);
      if (pos != vtok.size()) throw std::invalid_argument(vtok);
    } catch (const std::exception&) {
      throw ParseError("bad vertex id '" + vtok + "'", lineno);
    }
    auto q = try_parse_rational(qtok);
    if (!q) throw ParseError("bad value '" + qtok + "'", lineno);
    if (!f.emplace(v, *q).second) throw ParseError("vertex " + vtok + " listed twice", lineno);
  }
  return f;
}

std::string joined_args(int argc, char** argv) {
  std::string cmd;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) cmd += ' ';
    cmd += argv[i];
  }
  return cmd;
}

void print_metric(const MetricValue& d) {
  std::cout << d.to_string() << "\n";
  if (d.infinite) {
    std::cout << "inf\n";
  } else {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", d.to_double());
    std::cout << buf << "\n";
  }
}

int report_validation(const ValidationReport& rep, std::ostream& out) {
  for (auto& issue : rep.issues) out << issue.to_string() << "\n";
  return kExitValidation;
}

struct BarcodeArgs {
  std::string input, filtration = "file", function_file, max_r, svg_path;
  int degree = 0;
  int max_dim = -1;
  std::uint32_t field = 2;
  bool reduced = false;
  bool distance_matrix = false;
};

int run_barcode(const BarcodeArgs& a, const std::string& argline) {
  require_prime_field(a.field);
  std::string raw = read_file(a.input);
  std::string hashed = raw;
  FilteredComplex k;
  if (a.filtration == "file") {
    k = FilteredComplex::parse_text(raw);
  } else if (a.filtration == "lowerstar") {
    if (a.function_file.empty())
      throw ParseError("--function is required with --filtration lowerstar");
    std::string fraw = read_file(a.function_file);
    hashed += fraw;
    k = lower_star(FilteredComplex::parse_text(raw), parse_vertex_function(fraw));
  } else {
    if (a.max_r.empty()) throw ParseError("--max-r is required with --filtration " + a.filtration);
    FiltValue mr = parse_filt_flag(a.max_r, "--max-r");
    int md = a.max_dim >= 0 ? a.max_dim : a.degree + 1;
    PointCloud pc = a.distance_matrix ? parse_distance_matrix(raw) : parse_point_cloud(raw);
    k = a.filtration == "rips" ? rips_filtration(pc, md, mr) : cech_filtration(pc, md, mr);
  }
  auto rep = k.validate();
  if (!rep.ok()) return report_validation(rep, std::cerr);

  auto rd = reduce(k, a.field);
  Barcode bars = classical_barcode(rd, a.degree, a.reduced);

  RunManifest m;
  m.command = argline;
  m.input_hash = fnv1a64_hex(hashed);
  m.field = a.field;
  m.degrees = {a.degree};
  m.filtration = a.filtration;
  Json j = barcode_to_json(bars, a.field, a.degree, a.reduced);
  j["manifest"] = manifest_to_json(m);
  std::cout << dump_json(j);
  if (!a.svg_path.empty())
    write_file(a.svg_path, barcode_svg(bars, "degree " + std::to_string(a.degree) + " barcode"));
  return 0;
}

struct AinftyArgs {
  std::string input, svg_path;
  int n = 2;
  int degree = 1;
  int n_max = 3;
  std::uint32_t field = 2;
  std::uint64_t seed = 0;
};

int run_ainfty(const AinftyArgs& a, const std::string& argline) {
  require_prime_field(a.field);
  if (a.n < 2) throw ValidationError("--n must be at least 2");
  if (a.n_max < 2 || a.n_max > 5) throw ValidationError("--n-max must be between 2 and 5");
  if (a.n > a.n_max) throw ValidationError("--n exceeds --n-max");
  if (a.n >= 3 && a.field != 2) throw ValidationError("--n >= 3 requires the field F2");

  std::string raw = read_file(a.input);
  FilteredComplex k = FilteredComplex::parse_text(raw);
  auto rep = k.validate();
  if (!rep.ok()) return report_validation(rep, std::cerr);

  KappaModule km = kappa_module(k, a.n, a.degree, a.field, a.seed);
  Barcode bars = kappa_barcode(km);
  Json j = kappa_barcode_to_json(bars, a.field, a.degree, a.n, km.top_n_verified);

  // Extra: the first nonvanishing operation level at the final critical
  // grade, up to the requested depth (depth 2 outside characteristic 2).
  auto rd = reduce(k, a.field);
  auto crit = homological_critical_values(rd);
  if (!crit.empty()) {
    int depth = a.field == 2 ? a.n_max : 2;
    try {
      auto con = build_contraction(k, crit.back(), a.field, a.seed);
      KReport rep_k = k_invariant(transfer_delta(con, depth));
      j["k_invariant"] =
          Json{{"grade", filt_to_json(crit.back())}, {"report", rep_k.to_string()}, {"n_max", depth}};
    } catch (const DisconnectedError&) {
      // k-invariant needs a connected complex; skip the extra field
    }
  }

  RunManifest m;
  m.command = argline;
  m.input_hash = fnv1a64_hex(raw);
  m.field = a.field;
  m.n = a.n;
  m.degrees = {a.degree};
  m.filtration = "file";
  m.matching_seed = a.seed;
  j["manifest"] = manifest_to_json(m);
  std::cout << dump_json(j);
  if (!a.svg_path.empty())
    write_file(a.svg_path, barcode_svg(bars, "kappa(" + std::to_string(a.n) + ", " +
                                                 std::to_string(a.degree) + ") barcode"));
  return 0;
}

struct DistanceArgs {
  std::string file1, file2, metric = "bottleneck";
};

int run_distance(const DistanceArgs& a) {
  if (a.metric == "bottleneck") {
    PersistenceDiagram d1 = diagram_from_json(load_json(a.file1));
    PersistenceDiagram d2 = diagram_from_json(load_json(a.file2));
    print_metric(bottleneck(d1, d2));
  } else {
    PointCloud p = load_point_cloud(a.file1);
    PointCloud q = load_point_cloud(a.file2);
    print_metric(hausdorff(p.coords, q.coords));
  }
  return 0;
}

struct InferArgs {
  std::string cloud, epsilon, max_r;
  int n = 2;
  int degree = 1;
  int max_dim = -1;
  std::uint32_t field = 2;
  std::uint64_t seed = 0;
  bool rips = false;
  bool distance_matrix = false;
};

int run_infer(const InferArgs& a, const std::string& argline) {
  require_prime_field(a.field);
  if (a.n >= 3 && a.field != 2) throw ValidationError("--n >= 3 requires the field F2");
  std::string raw = read_file(a.cloud);
  PointCloud pc = a.distance_matrix ? parse_distance_matrix(raw) : parse_point_cloud(raw);
  FiltValue eps = parse_filt_flag(a.epsilon, "--epsilon");

  InferOptions opt;
  opt.n = a.n;
  opt.degree = a.degree;
  opt.field = a.field;
  opt.use_rips = a.rips;
  if (a.max_dim >= 0) opt.max_dim = a.max_dim;
  if (!a.max_r.empty()) opt.max_r = parse_filt_flag(a.max_r, "--max-r");
  opt.seed = a.seed;
  InferResult r = infer_features(pc, eps, opt);

  Json certs = Json::array();
  for (auto& c : r.certificates) {
    Json e{{"grade", filt_to_json(c.grade)}, {"n", c.n}, {"ok", c.ok}};
    if (!c.ok) {
      e["failing_m"] = c.failing_m;
      e["witness_degree"] = c.witness_degree;
      e["witness"] = c.witness;
    }
    certs.push_back(e);
  }
  RunManifest m;
  m.command = argline;
  m.input_hash = fnv1a64_hex(raw);
  m.field = a.field;
  m.n = a.n;
  m.degrees = {a.degree};
  m.filtration = a.rips ? "rips" : "cech";
  m.matching_seed = a.seed;
  Json j{{"count", r.count},
         {"window", Json::array({filt_to_json(r.window_lo), filt_to_json(r.window_hi)})},
         {"certificates", certs},
         {"manifest", manifest_to_json(m)}};
  std::cout << dump_json(j);
  return 0;
}

int run_validate(const std::string& input) {
  FilteredComplex k = FilteredComplex::parse_text(read_file(input));
  auto rep = k.validate();
  if (rep.ok()) {
    std::cout << "ok\n";
    return 0;
  }
  return report_validation(rep, std::cout);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"A-infinity persistent homology toolkit"};
  app.require_subcommand(1);
  std::string argline = joined_args(argc, argv);

  std::uint32_t field_default = 2;
  try {
    field_default = env_field();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }

  BarcodeArgs bc;
  bc.field = field_default;
  auto* cmd_bc = app.add_subcommand("barcode", "classical persistence barcode of a filtration");
  cmd_bc->add_option("input", bc.input, "filtration file or point cloud")->required();
  cmd_bc->add_option("--degree", bc.degree, "homology degree (default 0)");
  cmd_bc->add_option("--field", bc.field, "coefficient field F_p");
  cmd_bc->add_flag("--reduced", bc.reduced, "reduced homology (drop the basepoint bar)");
  cmd_bc->add_option("--filtration", bc.filtration, "input kind: file|rips|cech|lowerstar")
      ->check(CLI::IsMember({"file", "rips", "cech", "lowerstar"}));
  cmd_bc->add_option("--max-dim", bc.max_dim, "top simplex dimension for rips/cech");
  cmd_bc->add_option("--max-r", bc.max_r, "radius cap for rips/cech");
  cmd_bc->add_option("--function", bc.function_file, "vertex-value file for lowerstar");
  cmd_bc->add_flag("--distance-matrix", bc.distance_matrix, "input is a distance matrix");
  cmd_bc->add_option("--svg", bc.svg_path, "write a barcode plot to this path");

  AinftyArgs ai;
  ai.field = field_default;
  auto* cmd_ai = app.add_subcommand("ainfty", "kappa_{n,p} barcode of a filtration file");
  cmd_ai->add_option("input", ai.input, "filtration file")->required();
  cmd_ai->add_option("--n", ai.n, "operation level n (default 2)");
  cmd_ai->add_option("--degree", ai.degree, "homology degree p (default 1)");
  cmd_ai->add_option("--n-max", ai.n_max, "transfer depth cap, 2..5 (default 3)");
  cmd_ai->add_option("--field", ai.field, "coefficient field F_p (F2 required for n >= 3)");
  cmd_ai->add_option("--seed", ai.seed, "matching seed");
  cmd_ai->add_option("--svg", ai.svg_path, "write a barcode plot to this path");

  DistanceArgs di;
  auto* cmd_di = app.add_subcommand("distance", "distance between two files");
  cmd_di->add_option("file1", di.file1)->required();
  cmd_di->add_option("file2", di.file2)->required();
  cmd_di->add_option("--metric", di.metric, "bottleneck|hausdorff")
      ->check(CLI::IsMember({"bottleneck", "hausdorff"}));

  InferArgs in;
  in.field = field_default;
  auto* cmd_in = app.add_subcommand("infer", "count features certified on [epsilon, 3 epsilon]");
  cmd_in->add_option("cloud", in.cloud, "point cloud CSV")->required();
  cmd_in->add_option("--n", in.n, "operation level n (default 2)");
  cmd_in->add_option("--degree", in.degree, "homology degree p (default 1)");
  cmd_in->add_option("--epsilon", in.epsilon, "scale parameter")->required();
  cmd_in->add_option("--field", in.field, "coefficient field F_p");
  cmd_in->add_flag("--rips", in.rips, "use the Vietoris-Rips filtration instead of Cech");
  cmd_in->add_flag("--distance-matrix", in.distance_matrix, "cloud file is a distance matrix");
  cmd_in->add_option("--max-dim", in.max_dim, "top simplex dimension (default degree + 1)");
  cmd_in->add_option("--max-r", in.max_r, "radius cap (default 4 epsilon)");
  cmd_in->add_option("--seed", in.seed, "matching seed");

  std::string validate_input;
  auto* cmd_va = app.add_subcommand("validate", "check closure and monotonicity of a filtration file");
  cmd_va->add_option("input", validate_input)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (app.got_subcommand(cmd_bc)) return run_barcode(bc, argline);
    if (app.got_subcommand(cmd_ai)) return run_ainfty(ai, argline);
    if (app.got_subcommand(cmd_di)) return run_distance(di);
    if (app.got_subcommand(cmd_in)) return run_infer(in, argline);
    if (app.got_subcommand(cmd_va)) return run_validate(validate_input);
  } catch (const TopNViolationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitTopN;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const UnsupportedSignsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
