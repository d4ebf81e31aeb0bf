#include "ainfty/builders.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ainfty/errors.hpp"
#include "ainfty/reduction.hpp"

namespace ainfty {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> tokenize(const std::string& line) {
  std::string t = line.substr(0, line.find('#'));
  for (auto& ch : t)
    if (ch == ',' || ch == '\t' || ch == '\r') ch = ' ';
  std::istringstream ss(t);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// d(i,k) <= d(i,j) + d(j,k), exactly
void check_triangle(const std::vector<std::vector<FiltValue>>& dist, int i, int j, int k) {
  std::vector<std::pair<Rational, Rational>> terms;
  auto add = [&terms](const FiltValue& v, int s) {
    for (auto& t : MetricValue::of_filt(v).terms)
      terms.emplace_back(s > 0 ? t.first : Rational(-t.first), t.second);
  };
  add(dist[i][k], +1);
  add(dist[i][j], -1);
  add(dist[j][k], -1);
  if (sqrt_sum_sign(terms) > 0)
    throw ValidationError("distance matrix violates the triangle inequality on points " +
                          std::to_string(i) + ", " + std::to_string(j) + ", " +
                          std::to_string(k));
}

}  // namespace

PointCloud PointCloud::from_coords(std::vector<std::vector<Rational>> coords) {
  for (auto& row : coords)
    if (row.size() != coords[0].size())
      throw ValidationError("points have differing coordinate counts");
  PointCloud pc;
  pc.coords = std::move(coords);
  return pc;
}

PointCloud PointCloud::from_matrix(std::vector<std::vector<FiltValue>> dist) {
  int n = static_cast<int>(dist.size());
  const FiltValue zero{};
  for (auto& row : dist)
    if (static_cast<int>(row.size()) != n) throw ValidationError("distance matrix is not square");
  for (int i = 0; i < n; ++i) {
    if (!(dist[i][i] == zero))
      throw ValidationError("distance matrix has a nonzero diagonal entry at " + std::to_string(i));
    for (int j = i + 1; j < n; ++j) {
      if (!(dist[i][j] == dist[j][i])) throw ValidationError("distance matrix is not symmetric");
      if (dist[i][j] < zero)
        throw ValidationError("distance matrix has a negative entry at (" + std::to_string(i) +
                              ", " + std::to_string(j) + ")");
    }
  }
  if (n <= 25) {
    for (int i = 0; i < n; ++i)
      for (int k = i + 1; k < n; ++k)
        for (int j = 0; j < n; ++j)
          if (j != i && j != k) check_triangle(dist, i, j, k);
  } else {
    std::mt19937_64 rng(0x5eed);
    for (int trial = 0; trial < 2000; ++trial) {
      int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % n),
          k = static_cast<int>(rng() % n);
      if (i != j && j != k && i != k) check_triangle(dist, i, j, k);
    }
  }
  PointCloud pc;
  pc.dist = std::move(dist);
  return pc;
}

int PointCloud::size() const {
  return static_cast<int>(has_coords() ? coords.size() : dist.size());
}

Rational PointCloud::sq_distance(int i, int j) const {
  if (!has_coords()) throw std::logic_error("squared distances need coordinates");
  Rational s = 0;
  for (std::size_t c = 0; c < coords[i].size(); ++c) {
    Rational d = coords[i][c] - coords[j][c];
    s += d * d;
  }
  return s;
}

FiltValue PointCloud::distance(int i, int j) const {
  if (has_coords()) return FiltValue::sqrt_of(sq_distance(i, j));
  return dist[i][j];
}

PointCloud parse_point_cloud(const std::string& text) {
  std::vector<std::vector<Rational>> coords;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    std::vector<Rational> row;
    for (auto& tok : toks) {
      auto q = try_parse_rational(tok);
      if (!q) throw ParseError("bad coordinate '" + tok + "'", lineno);
      row.push_back(*q);
    }
    if (!coords.empty() && row.size() != coords[0].size())
      throw ParseError("expected " + std::to_string(coords[0].size()) + " coordinates, got " +
                           std::to_string(row.size()),
                       lineno);
    coords.push_back(std::move(row));
  }
  if (coords.empty()) throw ParseError("no points");
  return PointCloud::from_coords(std::move(coords));
}

PointCloud load_point_cloud(const std::string& path) { return parse_point_cloud(read_file(path)); }

PointCloud parse_distance_matrix(const std::string& text) {
  std::vector<std::vector<FiltValue>> rows;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    std::vector<FiltValue> row;
    for (auto& tok : toks) {
      auto v = FiltValue::parse(tok);
      if (!v) throw ParseError("bad distance '" + tok + "'", lineno);
      row.push_back(*v);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("no matrix rows");
  return PointCloud::from_matrix(std::move(rows));
}

PointCloud load_distance_matrix(const std::string& path) {
  return parse_distance_matrix(read_file(path));
}

namespace {

// Shared clique-expansion core for the radius-scale filtrations. `value_of`
// maps a simplex (with its half-diameter) to its filtration value; it must
// be monotone under cofaces so pruning is sound.
FilteredComplex expand_cliques(
    const PointCloud& pc, int max_dim, const FiltValue& max_r,
    const std::function<FiltValue(const std::vector<int>&, const FiltValue&)>& value_of) {
  if (max_dim < 0) throw std::invalid_argument("max_dim must be nonnegative");
  int n = pc.size();
  std::vector<std::vector<FiltValue>> half(n, std::vector<FiltValue>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      FiltValue h = pc.has_coords() ? FiltValue::sqrt_of(pc.sq_distance(i, j) / 4)
                                    : pc.dist[i][j].half();
      half[i][j] = half[j][i] = h;
    }

  std::vector<std::pair<Simplex, FiltValue>> out;
  std::vector<int> cur;
  // cur is a live clique already emitted; cand holds vertices past the last
  // one adjacent (at scale max_r) to everything in cur; half_val is the max
  // half-edge-length over cur.
  std::function<void(const std::vector<int>&, const FiltValue&)> extend =
      [&](const std::vector<int>& cand, const FiltValue& half_val) {
        if (static_cast<int>(cur.size()) - 1 >= max_dim) return;
        for (std::size_t idx = 0; idx < cand.size(); ++idx) {
          int v = cand[idx];
          FiltValue hv = half_val;
          for (int u : cur)
            if (hv < half[u][v]) hv = half[u][v];
          cur.push_back(v);
          FiltValue value = value_of(cur, hv);
          if (max_r < value) {
            cur.pop_back();
            continue;
          }
          out.emplace_back(Simplex::of(cur), value);
          std::vector<int> nc;
          for (std::size_t rest = idx + 1; rest < cand.size(); ++rest)
            if (!(max_r < half[v][cand[rest]])) nc.push_back(cand[rest]);
          extend(nc, hv);
          cur.pop_back();
        }
      };

  for (int i = 0; i < n; ++i) {
    out.emplace_back(Simplex::of({i}), FiltValue{});
    cur.assign(1, i);
    std::vector<int> cand;
    for (int j = i + 1; j < n; ++j)
      if (!(max_r < half[i][j])) cand.push_back(j);
    extend(cand, FiltValue{});
    cur.clear();
  }
  return FilteredComplex::from_pairs(std::move(out), true);
}

}  // namespace

FilteredComplex rips_filtration(const PointCloud& pc, int max_dim, const FiltValue& max_r) {
  return expand_cliques(pc, max_dim, max_r,
                        [](const std::vector<int>&, const FiltValue& h) { return h; });
}

FilteredComplex cech_filtration(const PointCloud& pc, int max_dim, const FiltValue& max_r) {
  if (!pc.has_coords())
    throw ValidationError("the Cech filtration needs coordinates, not a distance matrix");
  auto value_of = [&pc](const std::vector<int>& verts, const FiltValue& h) {
    if (verts.size() <= 2) return h;  // the miniball of two points is their midpoint ball
    std::vector<std::vector<Rational>> pts;
    pts.reserve(verts.size());
    for (int v : verts) pts.push_back(pc.coords[v]);
    return FiltValue::sqrt_of(miniball_sq_radius(pts));
  };
  return expand_cliques(pc, max_dim, max_r, value_of);
}

namespace {

// Exact solve of a k x k rational system; nullopt when singular.
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> a,
                                                  std::vector<Rational> b) {
  int n = static_cast<int>(a.size());
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (int i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

}  // namespace

Rational miniball_sq_radius(const std::vector<std::vector<Rational>>& pts) {
  if (pts.empty()) throw EmptySetError();
  int m = static_cast<int>(pts.size());
  int d = static_cast<int>(pts[0].size());
  for (auto& p : pts)
    if (static_cast<int>(p.size()) != d)
      throw CarrierMismatchError("points have differing coordinate counts");

  // The minimal enclosing ball is the circumball (within the affine hull)
  // of one of the affinely independent subsets, and circumballs of such
  // subsets that enclose everything can only be larger. So take the
  // smallest enclosing circumball over all subsets of size <= d + 1.
  int cap = std::min(m, d + 1);
  std::optional<Rational> best;
  std::vector<int> sel;

  auto consider = [&]() {
    const auto& q0 = pts[sel[0]];
    int k = static_cast<int>(sel.size()) - 1;
    std::vector<Rational> center(q0);
    Rational sqr = 0;
    if (k > 0) {
      std::vector<std::vector<Rational>> u(k, std::vector<Rational>(d));
      for (int i = 0; i < k; ++i)
        for (int c = 0; c < d; ++c) u[i][c] = pts[sel[i + 1]][c] - q0[c];
      std::vector<std::vector<Rational>> g(k, std::vector<Rational>(k));
      std::vector<Rational> rhs(k);
      for (int i = 0; i < k; ++i) {
        rhs[i] = dot(u[i], u[i]);
        for (int j = 0; j < k; ++j) g[i][j] = 2 * dot(u[i], u[j]);
      }
      auto t = solve_linear(std::move(g), std::move(rhs));
      if (!t) return;  // affinely dependent support, a subset covers it
      for (int c = 0; c < d; ++c)
        for (int i = 0; i < k; ++i) center[c] += (*t)[i] * u[i][c];
      for (int c = 0; c < d; ++c) {
        Rational dc = center[c] - q0[c];
        sqr += dc * dc;
      }
    }
    if (best && !(sqr < *best)) return;
    for (auto& p : pts) {
      Rational dist = 0;
      for (int c = 0; c < d; ++c) {
        Rational dc = p[c] - center[c];
        dist += dc * dc;
      }
      if (sqr < dist) return;  // not enclosing
    }
    best = sqr;
  };

  std::function<void(int)> rec = [&](int start) {
    for (int i = start; i < m; ++i) {
      sel.push_back(i);
      consider();
      if (static_cast<int>(sel.size()) < cap) rec(i + 1);
      sel.pop_back();
    }
  };
  rec(0);
  if (!best) throw std::logic_error("no enclosing circumball found");
  return *best;
}

FilteredComplex lower_star(const FilteredComplex& k, const std::map<int, Rational>& f) {
  std::vector<std::pair<Simplex, FiltValue>> pairs;
  pairs.reserve(k.size());
  for (int i = 0; i < k.size(); ++i) {
    const Simplex& s = k.simplex(i);
    Rational m = 0;
    bool first = true;
    for (int v : s.v) {
      auto it = f.find(v);
      if (it == f.end())
        throw ValidationError("vertex " + std::to_string(v) + " has no function value");
      if (first || m < it->second) m = it->second;
      first = false;
    }
    pairs.emplace_back(s, FiltValue::of_rational(m));
  }
  return FilteredComplex::from_pairs(std::move(pairs), true);
}

FiltValue filt_scale(const FiltValue& v, int factor) {
  if (factor < 0) throw std::invalid_argument("scale factor must be nonnegative");
  FiltValue out;
  out.msq = v.msq * factor * factor;
  return out;
}

InferResult infer_features(const PointCloud& pc, const FiltValue& epsilon,
                           const InferOptions& opt) {
  if (!(FiltValue{} < epsilon)) throw ValidationError("epsilon must be positive");
  if (opt.n < 2) throw std::invalid_argument("n must be at least 2");
  if (opt.degree < 0) throw std::invalid_argument("degree must be nonnegative");
  int max_dim = opt.max_dim.value_or(opt.degree + 1);
  FiltValue max_r = opt.max_r.value_or(filt_scale(epsilon, 4));
  FilteredComplex k = opt.use_rips ? rips_filtration(pc, max_dim, max_r)
                                   : cech_filtration(pc, max_dim, max_r);
  ReducedDecomposition rd = reduce(k, opt.field);
  InferResult res;
  res.window_lo = epsilon;
  res.window_hi = filt_scale(epsilon, 3);
  res.count = kappa_rank_between(k, rd, opt.n, opt.degree, res.window_lo, res.window_hi, opt.field,
                                 opt.seed, &res.certificates);
  return res;
}

}  // namespace ainfty
