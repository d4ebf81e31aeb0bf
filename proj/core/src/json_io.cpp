#include "ainfty/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "ainfty/errors.hpp"

namespace ainfty {

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string fnv1a64_hex(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::uint64_t h = fnv1a64(bytes);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

Json manifest_to_json(const RunManifest& m) {
  Json j{{"command", m.command},       {"input_hash", m.input_hash},
         {"field", m.field},           {"matching_seed", m.matching_seed},
         {"version", m.version},       {"notes", m.notes}};
  if (m.n) j["n"] = *m.n;
  if (!m.degrees.empty()) j["degrees"] = m.degrees;
  if (!m.filtration.empty()) j["filtration"] = m.filtration;
  return j;
}

Json filt_to_json(const FiltValue& v) { return Json(v.to_string()); }

namespace {

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw ParseError("number is not finite");
  int exp = 0;
  double m = std::frexp(x, &exp);
  auto mi = static_cast<long long>(std::ldexp(m, 53));
  exp -= 53;
  Rational r(mi);
  if (exp > 0)
    r *= Rational(Int(1) << exp);
  else if (exp < 0)
    r /= Rational(Int(1) << -exp);
  return r;
}

}  // namespace

FiltValue filt_from_json(const Json& j) {
  if (j.is_string()) {
    auto v = FiltValue::parse(j.get<std::string>());
    if (!v) throw ParseError("bad value '" + j.get<std::string>() + "'");
    return *v;
  }
  if (j.is_number_integer()) return FiltValue::of_int(j.get<long long>());
  if (j.is_number_unsigned())
    return FiltValue::of_rational(Rational(j.get<unsigned long long>()));
  if (j.is_number_float()) return FiltValue::of_rational(rational_from_double(j.get<double>()));
  throw ParseError("expected a value, got " + std::string(j.type_name()));
}

namespace {

Json interval_to_json(const BarcodeInterval& bar) {
  return Json::array({filt_to_json(bar.birth), bar.death_inf ? Json("inf") : filt_to_json(bar.death)});
}

Barcode intervals_from_json(const Json& j, int degree) {
  if (!j.is_array()) throw ParseError("'intervals' must be an array");
  Barcode bars;
  for (auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw ParseError("an interval must be a [birth, death] pair");
    BarcodeInterval bar;
    bar.degree = degree;
    bar.birth = filt_from_json(e[0]);
    if (e[1].is_string() && e[1].get<std::string>() == "inf") {
      bar.death_inf = true;
    } else {
      bar.death = filt_from_json(e[1]);
      if (bar.death < bar.birth) throw ValidationError("interval death precedes its birth");
    }
    bars.push_back(bar);
  }
  return bars;
}

}  // namespace

Json barcode_to_json(const Barcode& bars, std::uint32_t field, int degree, bool reduced) {
  Json intervals = Json::array();
  for (auto& bar : bars) intervals.push_back(interval_to_json(bar));
  return Json{{"field", field}, {"degree", degree}, {"reduced", reduced}, {"intervals", intervals}};
}

BarcodeFile barcode_file_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("a barcode file is a JSON object");
  BarcodeFile f;
  if (j.contains("field")) f.field = j.at("field").get<std::uint32_t>();
  if (j.contains("degree")) f.degree = j.at("degree").get<int>();
  if (j.contains("reduced")) f.reduced = j.at("reduced").get<bool>();
  if (j.contains("n")) f.n = j.at("n").get<int>();
  if (j.contains("top_n_verified")) f.top_n_verified = j.at("top_n_verified").get<bool>();
  if (!j.contains("intervals")) throw ParseError("barcode file lacks 'intervals'");
  f.bars = intervals_from_json(j.at("intervals"), f.degree);
  return f;
}

Json kappa_barcode_to_json(const Barcode& bars, std::uint32_t field, int degree, int n,
                           bool top_n_verified) {
  Json j = barcode_to_json(bars, field, degree, /*reduced=*/true);
  j["n"] = n;
  j["top_n_verified"] = top_n_verified;
  return j;
}

Json diagram_to_json(const PersistenceDiagram& d) {
  Json pts = Json::array();
  for (auto& p : d.points) {
    Json b = p.birth_ninf ? Json("-inf") : filt_to_json(p.birth);
    Json dd = p.death_inf ? Json("inf") : filt_to_json(p.death);
    pts.push_back(Json::array({b, dd}));
  }
  return Json{{"points", pts}};
}

PersistenceDiagram diagram_from_json(const Json& j) {
  if (j.is_object() && j.contains("intervals"))
    return diagram_from_barcode(barcode_file_from_json(j).bars);
  if (!j.is_object() || !j.contains("points"))
    throw ParseError("a diagram file needs 'points' or 'intervals'");
  PersistenceDiagram d;
  for (auto& e : j.at("points")) {
    if (!e.is_array() || e.size() != 2) throw ParseError("a point must be a [birth, death] pair");
    DiagramPoint p;
    if (e[0].is_string() && e[0].get<std::string>() == "-inf")
      p.birth_ninf = true;
    else
      p.birth = filt_from_json(e[0]);
    if (e[1].is_string() && e[1].get<std::string>() == "inf")
      p.death_inf = true;
    else
      p.death = filt_from_json(e[1]);
    d.points.push_back(p);
  }
  return d;
}

Json structure_to_json(const AInftyStructure& a) {
  Json ops = Json::array();
  for (int n = 2; n <= a.n_max; ++n) {
    Json entries = Json::array();
    for (std::size_t src = 0; src < a.delta[n].size(); ++src) {
      for (auto& [word, coef] : a.delta[n][src]) {
        entries.push_back(Json{{"source", static_cast<int>(src)},
                               {"source_degree", a.h_degree[src]},
                               {"word", word},
                               {"coefficient", coef}});
      }
    }
    ops.push_back(Json{{"n", n}, {"entries", entries}});
  }
  return Json{{"field", a.p},
              {"n_max", a.n_max},
              {"grade", filt_to_json(a.grade)},
              {"matching_seed", a.seed},
              {"dims_by_degree", a.dims_by_degree},
              {"operations", ops}};
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

}  // namespace ainfty
