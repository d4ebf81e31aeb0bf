#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ainfty/kappa.hpp"
#include "ainfty/metrics.hpp"
#include "ainfty/reduction.hpp"
#include "ainfty/transfer.hpp"

namespace ainfty {

using Json = nlohmann::json;

// Reproducibility fingerprint attached to tool output.
struct RunManifest {
  std::string command;
  std::string input_hash;  // fnv1a-64 over the raw input bytes, hex
  std::uint32_t field = 2;
  std::optional<int> n;
  std::vector<int> degrees;
  std::string filtration;
  std::uint64_t matching_seed = 0;
  std::string version = "0.1.0";
  // Interval convention reminder: intervals are [birth, death), "inf"
  // marks a class that never dies.
  std::string notes = "intervals are half-open [birth, death); death \"inf\" means essential";
};

std::uint64_t fnv1a64(const std::string& bytes);
std::string fnv1a64_hex(const std::string& bytes);

Json manifest_to_json(const RunManifest& m);

// Endpoints serialize as exact strings ("1", "22/7", "sqrt(4/3)");
// readers also accept JSON numbers (integers exactly, other numbers at
// their binary value).
Json filt_to_json(const FiltValue& v);
FiltValue filt_from_json(const Json& j);

Json barcode_to_json(const Barcode& bars, std::uint32_t field, int degree, bool reduced);

struct BarcodeFile {
  std::uint32_t field = 2;
  int degree = 0;
  bool reduced = false;
  std::optional<int> n;  // present for kappa barcodes
  std::optional<bool> top_n_verified;
  Barcode bars;
};
BarcodeFile barcode_file_from_json(const Json& j);

// kappa_{n,degree} barcode: the classical schema plus the structure level
// n and whether the vanishing hypothesis was checked.
Json kappa_barcode_to_json(const Barcode& bars, std::uint32_t field, int degree, int n,
                           bool top_n_verified);

Json diagram_to_json(const PersistenceDiagram& d);
PersistenceDiagram diagram_from_json(const Json& j);

// Full transferred structure: basis dimensions by degree and every
// operation entry (source generator, target word, coefficient).
Json structure_to_json(const AInftyStructure& a);

std::string dump_json(const Json& j);
Json parse_json(const std::string& text);       // throws ParseError
Json load_json(const std::string& path);        // throws ParseError

}  // namespace ainfty
