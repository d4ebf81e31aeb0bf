#pragma once

#include <map>
#include <vector>

#include "ainfty/persistence_module.hpp"
#include "ainfty/reduction.hpp"
#include "ainfty/value.hpp"

namespace ainfty {

// A diagram point (birth, death) in the extended plane. The diagonal with
// infinite multiplicity is implicit and never stored.
struct DiagramPoint {
  bool birth_ninf = false;  // birth = -infinity (allowed by the data model,
                            // never produced by finite filtrations)
  FiltValue birth;
  bool death_inf = false;
  FiltValue death;
  friend bool operator==(const DiagramPoint&, const DiagramPoint&) = default;
};

struct PersistenceDiagram {
  std::vector<DiagramPoint> points;
};

PersistenceDiagram diagram_from_barcode(const Barcode& bars);
PersistenceDiagram diagram_from_module(const PersistenceModule& m);

// Exact bottleneck distance: binary search over candidate costs with a
// bipartite perfect-matching feasibility test; points may match their
// diagonal projection at half their lifetime.
MetricValue bottleneck(const PersistenceDiagram& d1, const PersistenceDiagram& d2);

// Interleaving distance of p.f.d. modules, computed as the bottleneck
// distance of their interval decompositions (the two agree exactly).
MetricValue interleaving(const PersistenceModule& m1, const PersistenceModule& m2);

// Hausdorff distance between nonempty rational point sets of equal
// ambient dimension. Throws EmptySetError / CarrierMismatchError.
using Point = std::vector<Rational>;
MetricValue hausdorff(const std::vector<Point>& p, const std::vector<Point>& q);

// Sup distance of two vertex functions on the same vertex set; refuses
// mismatched carriers rather than optimizing over re-identifications.
MetricValue sup_distance(const std::map<int, Rational>& f, const std::map<int, Rational>& g);

}  // namespace ainfty
