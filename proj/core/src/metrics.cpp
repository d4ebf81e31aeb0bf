#include "ainfty/metrics.hpp"

#include <algorithm>
#include <optional>

#include "ainfty/errors.hpp"

namespace ainfty {

namespace {

// Finite matching cost of two points, or nullopt for +infinity. Matching
// endpoints at the same infinity costs nothing; mixing a finite endpoint
// with an infinite one is impossible at any finite scale.
std::optional<MetricValue> pair_cost(const DiagramPoint& a, const DiagramPoint& b) {
  if (a.birth_ninf != b.birth_ninf || a.death_inf != b.death_inf) return std::nullopt;
  MetricValue bd = a.birth_ninf ? MetricValue::zero() : MetricValue::diff(a.birth, b.birth).abs();
  MetricValue dd = a.death_inf ? MetricValue::zero() : MetricValue::diff(a.death, b.death).abs();
  return MetricValue::max(bd, dd);
}

// Cost of sending a point to its diagonal projection.
std::optional<MetricValue> diag_cost(const DiagramPoint& a) {
  if (a.birth_ninf || a.death_inf) return std::nullopt;
  return MetricValue::diff(a.death, a.birth).half();
}

struct Matcher {
  int nl = 0, nr = 0;
  std::vector<std::vector<int>> adj;
  std::vector<int> match_r;
  std::vector<char> used;

  bool try_augment(int v) {
    for (int to : adj[v]) {
      if (used[to]) continue;
      used[to] = 1;
      if (match_r[to] < 0 || try_augment(match_r[to])) {
        match_r[to] = v;
        return true;
      }
    }
    return false;
  }

  bool perfect() {
    match_r.assign(nr, -1);
    int cnt = 0;
    for (int v = 0; v < nl; ++v) {
      used.assign(nr, 0);
      if (try_augment(v)) ++cnt;
    }
    return cnt == nl;
  }
};

}  // namespace

PersistenceDiagram diagram_from_barcode(const Barcode& bars) {
  PersistenceDiagram d;
  for (auto& bar : bars) d.points.push_back({false, bar.birth, bar.death_inf, bar.death});
  return d;
}

PersistenceDiagram diagram_from_module(const PersistenceModule& m) {
  PersistenceDiagram d;
  for (auto& iv : interval_decomposition(m)) {
    DiagramPoint pt;
    pt.birth = m.grades[iv.i];
    pt.death_inf = !iv.j.has_value();
    if (iv.j) pt.death = m.grades[*iv.j];
    for (int c = 0; c < iv.mult; ++c) d.points.push_back(pt);
  }
  return d;
}

MetricValue bottleneck(const PersistenceDiagram& d1, const PersistenceDiagram& d2) {
  int n1 = static_cast<int>(d1.points.size());
  int n2 = static_cast<int>(d2.points.size());
  if (n1 == 0 && n2 == 0) return MetricValue::zero();

  std::vector<std::vector<std::optional<MetricValue>>> pc(n1);
  std::vector<std::optional<MetricValue>> h1(n1), h2(n2);
  std::vector<MetricValue> cands;
  cands.push_back(MetricValue::zero());
  for (int i = 0; i < n1; ++i) {
    pc[i].resize(n2);
    for (int j = 0; j < n2; ++j) {
      pc[i][j] = pair_cost(d1.points[i], d2.points[j]);
      if (pc[i][j]) cands.push_back(*pc[i][j]);
    }
    h1[i] = diag_cost(d1.points[i]);
    if (h1[i]) cands.push_back(*h1[i]);
  }
  for (int j = 0; j < n2; ++j) {
    h2[j] = diag_cost(d2.points[j]);
    if (h2[j]) cands.push_back(*h2[j]);
  }
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end(),
                          [](const MetricValue& a, const MetricValue& b) { return a == b; }),
              cands.end());

  // Feasibility at scale lam: perfect matching on the augmented bipartite
  // graph where each point may also match its own diagonal copy and the
  // diagonal copies match each other freely.
  auto feasible = [&](const MetricValue& lam) {
    Matcher mt;
    mt.nl = n1 + n2;
    mt.nr = n2 + n1;
    mt.adj.assign(mt.nl, {});
    for (int i = 0; i < n1; ++i) {
      for (int j = 0; j < n2; ++j)
        if (pc[i][j] && !(lam < *pc[i][j])) mt.adj[i].push_back(j);
      if (h1[i] && !(lam < *h1[i])) mt.adj[i].push_back(n2 + i);
    }
    for (int j = 0; j < n2; ++j) {
      if (h2[j] && !(lam < *h2[j])) mt.adj[n1 + j].push_back(j);
      for (int i = 0; i < n1; ++i) mt.adj[n1 + j].push_back(n2 + i);
    }
    return mt.perfect();
  };

  if (!feasible(cands.back())) return MetricValue::inf();
  int lo = 0, hi = static_cast<int>(cands.size()) - 1, ans = hi;
  while (lo <= hi) {
    int mid = lo + (hi - lo) / 2;
    if (feasible(cands[mid])) {
      ans = mid;
      hi = mid - 1;
    } else {
      lo = mid + 1;
    }
  }
  return cands[ans];
}

MetricValue interleaving(const PersistenceModule& m1, const PersistenceModule& m2) {
  return bottleneck(diagram_from_module(m1), diagram_from_module(m2));
}

namespace {

FiltValue point_distance(const Point& x, const Point& y) {
  Rational sq = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    Rational d = x[i] - y[i];
    sq += d * d;
  }
  return FiltValue::sqrt_of(sq);
}

FiltValue directed_hausdorff(const std::vector<Point>& p, const std::vector<Point>& q) {
  FiltValue worst = FiltValue::of_int(0);
  for (auto& x : p) {
    FiltValue best = point_distance(x, q[0]);
    for (std::size_t j = 1; j < q.size(); ++j) {
      FiltValue d = point_distance(x, q[j]);
      if (d < best) best = d;
    }
    if (worst < best) worst = best;
  }
  return worst;
}

}  // namespace

MetricValue hausdorff(const std::vector<Point>& p, const std::vector<Point>& q) {
  if (p.empty() || q.empty()) throw EmptySetError();
  std::size_t dim = p[0].size();
  for (auto& x : p)
    if (x.size() != dim) throw CarrierMismatchError("point dimensions differ within a set");
  for (auto& y : q)
    if (y.size() != dim) throw CarrierMismatchError("point sets live in different dimensions");
  FiltValue d = directed_hausdorff(p, q);
  FiltValue e = directed_hausdorff(q, p);
  return MetricValue::of_filt(d < e ? e : d);
}

MetricValue sup_distance(const std::map<int, Rational>& f, const std::map<int, Rational>& g) {
  if (f.size() != g.size()) throw CarrierMismatchError("vertex sets differ");
  Rational best = 0;
  auto it = g.begin();
  for (auto& [v, fv] : f) {
    if (it->first != v) throw CarrierMismatchError("vertex sets differ");
    Rational d = fv - it->second;
    if (d < 0) d = -d;
    if (best < d) best = d;
    ++it;
  }
  return MetricValue::of_rational(best);
}

}  // namespace ainfty
