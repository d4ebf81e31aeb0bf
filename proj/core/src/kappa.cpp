#include "ainfty/kappa.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ainfty/errors.hpp"

namespace ainfty {

namespace {

int grade_index(const std::vector<FiltValue>& grid, const FiltValue& t) {
  auto it = std::lower_bound(grid.begin(), grid.end(), t);
  if (it == grid.end() || !(*it == t)) throw std::logic_error("grade missing from critical grid");
  return static_cast<int>(it - grid.begin());
}

// Columns of the degree-p part of the contraction basis expressed in the
// reduction's homology basis at the same grade.
FpMat basis_change(const ReducedDecomposition& rd, const Contraction& con, const FiltValue& t,
                   int degree) {
  HomologyBasis basis = homology_basis(rd, t, degree);
  std::vector<int> srcs;
  for (int h = 0; h < con.dim(); ++h)
    if (con.h_degree(h) == degree) srcs.push_back(h);
  if (static_cast<int>(srcs.size()) != basis.dim())
    throw std::logic_error("contraction and reduction disagree on a Betti number");
  FpMat a(basis.dim(), static_cast<int>(srcs.size()), rd.p);
  for (std::size_t j = 0; j < srcs.size(); ++j) {
    auto coords = express_class(rd, con.iota[srcs[j]], t, basis);
    for (std::size_t r = 0; r < coords.size(); ++r) a.at(static_cast<int>(r), static_cast<int>(j)) = coords[r];
  }
  return a;
}

TopNCertificate vacuous_certificate(const FiltValue& t, int n) {
  TopNCertificate c;
  c.grade = t;
  c.n = n;
  c.ok = true;
  return c;
}

// Kernel of kappa at one grade in reduction coordinates, alongside the
// structure needed for certificates.
struct GradeSlice {
  FpMat kernel_in_reduction;  // dim H_p x k
  int kernel_dim = 0;
  TopNCertificate certificate;
};

GradeSlice slice_at(const FilteredComplex& k, const ReducedDecomposition& rd, const FiltValue& t,
                    int n, int degree, std::uint32_t field, std::uint64_t seed) {
  Contraction con = build_contraction(k, t, field, seed);
  AInftyStructure st = transfer_delta(con, n);
  GradeSlice out;
  out.certificate = (n >= 3) ? check_top_n(st, n) : vacuous_certificate(t, n);
  if (!out.certificate.ok)
    throw TopNViolationError(t.to_string(), out.certificate.failing_m,
                             out.certificate.witness_degree, out.certificate.witness);
  FpMat ker = kappa_kernel(st, n, degree);
  out.kernel_dim = ker.cols;
  out.kernel_in_reduction = basis_change(rd, con, t, degree).mul(ker);
  return out;
}

}  // namespace

TopNCertificate check_top_n(const AInftyStructure& a, int n) {
  TopNCertificate cert;
  cert.grade = a.grade;
  cert.n = n;
  cert.ok = true;
  AInftyStructure r = project_positive(a);
  for (int m = 2; m < n && m <= r.n_max; ++m) {
    for (int src = 0; src < r.dim(); ++src) {
      if (r.delta[m][src].empty()) continue;
      cert.ok = false;
      cert.failing_m = m;
      cert.witness_degree = r.h_degree[src];
      cert.witness = "generator " + std::to_string(src) + " in degree " +
                     std::to_string(r.h_degree[src]);
      return cert;
    }
  }
  return cert;
}

TopNCertificate check_top_n(const FilteredComplex& k, const FiltValue& t, int n,
                            std::uint32_t field, std::uint64_t seed) {
  if (n <= 2) return vacuous_certificate(t, n);
  Contraction con = build_contraction(k, t, field, seed);
  return check_top_n(transfer_delta(con, n), n);
}

FpMat kappa_kernel(const AInftyStructure& a, int n, int degree) {
  std::vector<int> srcs;
  for (int h = 0; h < a.dim(); ++h)
    if (a.h_degree[h] == degree) srcs.push_back(h);
  int cols = static_cast<int>(srcs.size());
  if (n > a.n_max) throw std::invalid_argument("kappa level above the structure cap");
  // collect reduced target words
  std::map<Word, int> row_of;
  for (int src : srcs)
    for (auto& [w, cf] : a.delta[n][src]) {
      if (a.word_touches_degree_zero(w)) continue;
      row_of.emplace(w, 0);
    }
  int r = 0;
  for (auto& [w, idx] : row_of) idx = r++;
  if (r == 0) return FpMat::identity(cols, a.p);
  FpMat d(r, cols, a.p);
  for (int j = 0; j < cols; ++j)
    for (auto& [w, cf] : a.delta[n][srcs[j]]) {
      if (a.word_touches_degree_zero(w)) continue;
      d.at(row_of[w], j) = cf;
    }
  return d.kernel_basis();
}

KappaBasis kappa_at(const FilteredComplex& k, const FiltValue& t, int n, int degree,
                    std::uint32_t field, std::uint64_t seed) {
  Contraction con = build_contraction(k, t, field, seed);
  AInftyStructure st = transfer_delta(con, n);
  KappaBasis out;
  out.grade = t;
  out.n = n;
  out.degree = degree;
  for (int h = 0; h < con.dim(); ++h)
    if (con.h_degree(h) == degree) out.h_cells.push_back(con.h_cells[h]);
  out.kernel = kappa_kernel(st, n, degree);
  return out;
}

std::vector<FiltValue> homological_critical_values(const ReducedDecomposition& rd) {
  const FilteredComplex& k = *rd.complex;
  std::vector<FiltValue> vals;
  for (auto& [b, d] : rd.pairs) {
    if (!(k.value(b) < k.value(d))) continue;
    vals.push_back(k.value(b));
    vals.push_back(k.value(d));
  }
  for (int e : rd.essentials) vals.push_back(k.value(e));
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end(), [](const FiltValue& a, const FiltValue& b) { return a == b; }),
             vals.end());
  return vals;
}

KappaModule kappa_module(const FilteredComplex& k, int n, int degree, std::uint32_t field,
                         std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("kappa needs n >= 2");
  if (degree < 0) throw std::invalid_argument("kappa needs degree >= 0");
  KappaModule km;
  km.n = n;
  km.degree = degree;
  km.field = field;
  km.seed = seed;

  ReducedDecomposition rd = reduce(k, field);
  std::vector<FiltValue> grid = homological_critical_values(rd);
  km.module.p = field;
  km.module.grades = grid;
  if (grid.empty()) {
    km.top_n_verified = true;
    return km;
  }

  // Degrees 0 and 1 cannot hit any tensor word with all factors positive
  // (n factors of degree >= 1 sum to at least n > degree + n - 2), so the
  // kernels are everything and the module is classical reduced homology.
  bool classical = degree <= 1;

  if (n >= 3) {
    for (auto& t : grid) {
      TopNCertificate cert = check_top_n(k, t, n, field, seed);
      km.certificates.push_back(cert);
      if (!cert.ok)
        throw TopNViolationError(t.to_string(), cert.failing_m, cert.witness_degree, cert.witness);
    }
  }
  km.top_n_verified = true;

  if (classical) {
    Barcode bars = classical_barcode(rd, degree, /*reduced=*/true);
    std::map<std::pair<int, std::optional<int>>, int> mult;
    for (auto& bar : bars) {
      int i = grade_index(grid, bar.birth);
      std::optional<int> j;
      if (!bar.death_inf) j = grade_index(grid, bar.death);
      ++mult[{i, j}];
    }
    std::vector<ModuleInterval> intervals;
    for (auto& [key, m] : mult) intervals.push_back({key.first, key.second, m});
    km.module = module_from_intervals(field, grid, intervals);
    return km;
  }

  std::vector<GradeSlice> slices;
  slices.reserve(grid.size());
  for (auto& t : grid) slices.push_back(slice_at(k, rd, t, n, degree, field, seed));
  km.module.dims.clear();
  for (auto& s : slices) km.module.dims.push_back(s.kernel_dim);
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    FpMat inc = FpMat::from_sparse(induced_map(rd, degree, grid[i], grid[i + 1]));
    FpMat img = inc.mul(slices[i].kernel_in_reduction);
    auto x = slices[i + 1].kernel_in_reduction.solve(img);
    if (!x) throw ContainmentFailureError(grid[i + 1].to_string());
    km.module.maps.push_back(std::move(*x));
  }
  return km;
}

Barcode module_barcode(const PersistenceModule& m, int degree) {
  Barcode out;
  for (auto& iv : interval_decomposition(m)) {
    BarcodeInterval bar;
    bar.birth = m.grades[iv.i];
    bar.death_inf = !iv.j.has_value();
    if (iv.j) bar.death = m.grades[*iv.j];
    bar.degree = degree;
    for (int c = 0; c < iv.mult; ++c) out.push_back(bar);
  }
  return out;
}

Barcode kappa_barcode(const KappaModule& km) { return module_barcode(km.module, km.degree); }

DeltaCritical delta_critical_values(const KappaModule& km) {
  DeltaCritical out;
  const PersistenceModule& m = km.module;
  int ng = m.size();
  for (int i = 0; i < ng; ++i) {
    bool critical;
    if (i == 0) {
      critical = m.dims[0] > 0;  // jump from the zero module
    } else {
      const FpMat& f = m.maps[i - 1];
      critical = !(m.dims[i - 1] == m.dims[i] && f.rank() == m.dims[i]);
    }
    if (critical) out.values.push_back(m.grades[i]);
  }
  for (auto& v : out.values)
    if (FiltValue{} < v && (!out.feature_size || v < *out.feature_size)) out.feature_size = v;
  return out;
}

int kappa_rank_between(const FilteredComplex& k, const ReducedDecomposition& rd, int n, int degree,
                       const FiltValue& t, const FiltValue& s, std::uint32_t field,
                       std::uint64_t seed, std::vector<TopNCertificate>* certs) {
  if (s < t) throw std::invalid_argument("kappa_rank_between needs t <= s");
  if (degree <= 1) {
    if (n >= 3) {
      for (auto& g : {t, s}) {
        TopNCertificate cert = check_top_n(k, g, n, field, seed);
        if (certs) certs->push_back(cert);
        if (!cert.ok)
          throw TopNViolationError(g.to_string(), cert.failing_m, cert.witness_degree, cert.witness);
      }
    }
    int count = 0;
    for (auto& bar : classical_barcode(rd, degree, /*reduced=*/true))
      if (bar.birth <= t && (bar.death_inf || s < bar.death)) ++count;
    return count;
  }
  GradeSlice at_t = slice_at(k, rd, t, n, degree, field, seed);
  GradeSlice at_s = slice_at(k, rd, s, n, degree, field, seed);
  if (certs && n >= 3) {
    certs->push_back(at_t.certificate);
    certs->push_back(at_s.certificate);
  }
  FpMat inc = FpMat::from_sparse(induced_map(rd, degree, t, s));
  FpMat img = inc.mul(at_t.kernel_in_reduction);
  auto x = at_s.kernel_in_reduction.solve(img);
  if (!x) throw ContainmentFailureError(s.to_string());
  return x->rank();
}

}  // namespace ainfty
