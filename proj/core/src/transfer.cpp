#include "ainfty/transfer.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "ainfty/chain.hpp"
#include "ainfty/errors.hpp"
#include "ainfty/reduction.hpp"

namespace ainfty {

namespace {

void erase_row(SparseVec& v, int row) {
  auto it = std::lower_bound(v.begin(), v.end(), row,
                             [](const std::pair<int, std::uint32_t>& e, int r) { return e.first < r; });
  if (it != v.end() && it->first == row) v.erase(it);
}

using Tens = std::map<Word, std::uint32_t>;

void tens_add(Tens& dst, const Word& w, std::uint32_t c, std::uint32_t p) {
  if (!c) return;
  auto [it, fresh] = dst.emplace(w, 0u);
  it->second = (it->second + c) % p;
  if (!it->second) dst.erase(it);
}

}  // namespace

int Contraction::dim_h(int degree) const {
  if (degree < 0 || degree >= static_cast<int>(dims_by_degree.size())) return 0;
  return dims_by_degree[degree];
}

FpMat Contraction::pi_matrix() const {
  FpMat out(dim(), m, p);
  for (int x = 0; x < m; ++x)
    for (auto& [h, cf] : pi[x]) out.at(h, x) = cf;
  return out;
}

FpMat Contraction::iota_matrix() const {
  FpMat out(m, dim(), p);
  for (int h = 0; h < dim(); ++h)
    for (auto& [cell, cf] : iota[h]) out.at(cell, h) = cf;
  return out;
}

FpMat Contraction::phi_matrix() const {
  FpMat out(m, m, p);
  for (int x = 0; x < m; ++x)
    for (auto& [cell, cf] : phi[x]) out.at(cell, x) = cf;
  return out;
}

FpMat Contraction::boundary_dense() const {
  return FpMat::from_sparse(boundary_matrix(*complex, grade, p));
}

Contraction build_contraction(const FilteredComplex& k, const FiltValue& t, std::uint32_t p,
                              std::uint64_t seed) {
  Contraction c;
  c.complex = &k;
  c.p = p;
  c.grade = t;
  c.seed = seed;
  int m = k.prefix_size_at(t);
  c.m = m;

  SparseMatrix d0 = boundary_matrix(k, t, p);
  std::vector<SparseVec> dcol(m), pi(m), iota(m), phi(m);
  std::vector<std::vector<int>> d_rows(m), pi_rows(m);
  for (int x = 0; x < m; ++x) {
    dcol[x] = d0.col[x];
    pi[x] = {{x, 1u}};
    iota[x] = {{x, 1u}};
    pi_rows[x].push_back(x);
    for (auto& [r, cf] : dcol[x]) d_rows[r].push_back(x);
  }
  std::vector<char> removed(m, 0);

  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);

  // Cancel one incidence pair (a, b) at a time. Each step composes the
  // current contraction with the elementary one of the pair, which keeps
  // every side condition exact. Zero columns of the working differential
  // stay zero, so one pass over all cells empties it.
  for (int b : order) {
    if (removed[b] || dcol[b].empty()) continue;
    std::size_t pick = static_cast<std::size_t>(rng() % dcol[b].size());
    int a = dcol[b][pick].first;
    std::uint32_t lam = dcol[b][pick].second;
    std::uint32_t lam_inv = mod_inverse(lam, p);
    SparseVec db = dcol[b];
    SparseVec ib = iota[b];

    // columns with an a-entry: d'h -= (c/lam) d'b, iota h -= (c/lam) iota b
    std::vector<int> cols_a;
    cols_a.swap(d_rows[a]);
    for (int h : cols_a) {
      if (removed[h] || h == b) continue;
      std::uint32_t cc = vec_coeff(dcol[h], a);
      if (!cc) continue;
      std::uint32_t mu = static_cast<std::uint32_t>(std::uint64_t(cc) * lam_inv % p);
      axpy(dcol[h], db, p - mu, p);
      axpy(iota[h], ib, p - mu, p);
      for (auto& [r, cf] : db)
        if (r != a) d_rows[r].push_back(h);
    }
    // columns of one dimension higher lose their b-entry
    std::vector<int> cols_b;
    cols_b.swap(d_rows[b]);
    for (int g : cols_b) {
      if (removed[g]) continue;
      erase_row(dcol[g], b);
    }
    // pi x -= (c_a/lam) d'b (cancels the a-entry); phi x -= (c_a/lam) iota b
    std::vector<int> cols_pa;
    cols_pa.swap(pi_rows[a]);
    for (int x : cols_pa) {
      std::uint32_t ca = vec_coeff(pi[x], a);
      if (!ca) continue;
      std::uint32_t mu = static_cast<std::uint32_t>(std::uint64_t(ca) * lam_inv % p);
      axpy(pi[x], db, p - mu, p);
      axpy(phi[x], ib, p - mu, p);
      for (auto& [r, cf] : db)
        if (r != a) pi_rows[r].push_back(x);
    }
    // pi x loses its b-entry
    std::vector<int> cols_pb;
    cols_pb.swap(pi_rows[b]);
    for (int x : cols_pb) erase_row(pi[x], b);

    removed[a] = removed[b] = 1;
    dcol[a].clear();
    dcol[b].clear();
    iota[a].clear();
    iota[b].clear();
  }

  for (int x = 0; x < m; ++x)
    if (!removed[x] && !dcol[x].empty())
      throw std::logic_error("contraction left a nonzero differential");

  for (int x = 0; x < m; ++x)
    if (!removed[x]) c.h_cells.push_back(x);
  c.h_index_of.assign(m, -1);
  for (int i = 0; i < static_cast<int>(c.h_cells.size()); ++i) c.h_index_of[c.h_cells[i]] = i;

  c.pi.resize(m);
  for (int x = 0; x < m; ++x) {
    SparseVec v;
    v.reserve(pi[x].size());
    for (auto& [cell, cf] : pi[x]) {
      int h = c.h_index_of[cell];
      if (h < 0) throw std::logic_error("pi escapes the survivor basis");
      v.emplace_back(h, cf);
    }
    c.pi[x] = std::move(v);
  }
  c.iota.resize(c.h_cells.size());
  for (int i = 0; i < static_cast<int>(c.h_cells.size()); ++i) c.iota[i] = std::move(iota[c.h_cells[i]]);
  c.phi = std::move(phi);

  int top = -1;
  for (int cell : c.h_cells) top = std::max(top, k.simplex(cell).dim());
  c.dims_by_degree.assign(top + 1, 0);
  for (int cell : c.h_cells) ++c.dims_by_degree[k.simplex(cell).dim()];
  return c;
}

int AInftyStructure::dim_in_degree(int degree) const {
  if (degree < 0 || degree >= static_cast<int>(dims_by_degree.size())) return 0;
  return dims_by_degree[degree];
}

bool AInftyStructure::delta_is_zero(int n) const {
  if (n < 1 || n > n_max) return true;
  for (auto& mp : delta[n])
    if (!mp.empty()) return false;
  return true;
}

bool AInftyStructure::word_touches_degree_zero(const Word& w) const {
  for (int h : w)
    if (h_degree[h] == 0) return true;
  return false;
}

AInftyStructure transfer_delta(const Contraction& c, int n_max) {
  if (n_max < 2) throw std::invalid_argument("n_max must be at least 2");
  if (n_max >= 3 && c.p != 2) throw UnsupportedSignsError(n_max, c.p);
  const FilteredComplex& k = *c.complex;
  const std::uint32_t p = c.p;

  AInftyStructure a;
  a.p = p;
  a.n_max = n_max;
  a.seed = c.seed;
  a.grade = c.grade;
  for (int h = 0; h < c.dim(); ++h) a.h_degree.push_back(c.h_degree(h));
  a.dims_by_degree = c.dims_by_degree;
  a.delta.assign(n_max + 1, {});
  for (int n = 1; n <= n_max; ++n) a.delta[n].assign(c.dim(), {});

  // psi[r][x] = Psi_r applied to cell x; Psi_1 = pi and
  // Psi_r = sum_{i+j=r} (Psi_i (x) Psi_j) . AW . phi for r >= 2.
  int rmax = n_max - 1;
  std::vector<std::vector<Tens>> psi(rmax + 1, std::vector<Tens>(c.m));
  for (int x = 0; x < c.m; ++x)
    for (auto& [h, cf] : c.pi[x]) psi[1][x][{h}] = cf;

  auto split_into = [&](Tens& out, const SparseVec& chain, int i, int j) {
    for (auto& [cell, cf] : chain) {
      const Simplex& s = k.simplex(cell);
      int q = s.dim();
      for (int cut = 0; cut <= q; ++cut) {
        auto fi = k.index_of(s.front(cut));
        auto bi = k.index_of(s.back(cut));
        if (!fi || !bi) throw std::logic_error("AW face missing from complex");
        const Tens& tf = psi[i][*fi];
        const Tens& tb = psi[j][*bi];
        if (tf.empty() || tb.empty()) continue;
        for (auto& [wf, cwf] : tf)
          for (auto& [wb, cwb] : tb) {
            std::uint32_t cc = static_cast<std::uint32_t>(std::uint64_t(cf) * cwf % p);
            cc = static_cast<std::uint32_t>(std::uint64_t(cc) * cwb % p);
            Word w = wf;
            w.insert(w.end(), wb.begin(), wb.end());
            tens_add(out, w, cc, p);
          }
      }
    }
  };

  for (int r = 2; r <= rmax; ++r)
    for (int x = 0; x < c.m; ++x) {
      if (c.phi[x].empty()) continue;
      for (int i = 1; i < r; ++i) split_into(psi[r][x], c.phi[x], i, r - i);
    }

  for (int n = 2; n <= n_max; ++n)
    for (int src = 0; src < c.dim(); ++src) {
      Tens out;
      for (int i = 1; i < n; ++i) split_into(out, c.iota[src], i, n - i);
      a.delta[n][src] = std::move(out);
    }
  return a;
}

DeltaMap stasheff_residual(const AInftyStructure& a, int n) {
  if (n < 1) throw std::invalid_argument("stasheff_residual needs n >= 1");
  const std::uint32_t p = a.p;
  DeltaMap res(a.dim());
  auto deltas = [&](int i) -> const DeltaMap* {
    if (i < 1 || i > a.n_max) return nullptr;  // absent operations are zero
    return &a.delta[i];
  };
  for (int src = 0; src < a.dim(); ++src) {
    Tens acc;
    for (int i = 1; i <= n; ++i) {
      const DeltaMap* outer = deltas(i);
      const DeltaMap* inner = deltas(n - i + 1);
      if (!outer || !inner) continue;
      for (int j = 0; j + i <= n; ++j) {
        int pos = n - i - j;  // slot that Delta_i consumes, counted from the left
        bool neg = ((i + j + i * j) % 2) != 0;
        for (auto& [w, cw] : (*inner)[src]) {
          long left_deg = 0;
          for (int r = 0; r < pos; ++r) left_deg += a.h_degree[w[r]];
          bool koszul = ((i - 2) % 2 != 0) && (left_deg % 2 != 0);
          for (auto& [wi, cwi] : (*outer)[w[pos]]) {
            std::uint32_t cc = static_cast<std::uint32_t>(std::uint64_t(cw) * cwi % p);
            if (neg != koszul) cc = (p - cc) % p;
            Word out;
            out.reserve(n);
            out.insert(out.end(), w.begin(), w.begin() + pos);
            out.insert(out.end(), wi.begin(), wi.end());
            out.insert(out.end(), w.begin() + pos + 1, w.end());
            tens_add(acc, out, cc, p);
          }
        }
      }
    }
    res[src] = std::move(acc);
  }
  return res;
}

bool delta_map_is_zero(const DeltaMap& m) {
  for (auto& mp : m)
    if (!mp.empty()) return false;
  return true;
}

AInftyStructure project_positive(const AInftyStructure& a) {
  AInftyStructure b = a;
  for (int n = 1; n <= b.n_max; ++n)
    for (int src = 0; src < b.dim(); ++src) {
      auto& mp = b.delta[n][src];
      if (b.h_degree[src] == 0) {
        mp.clear();
        continue;
      }
      for (auto it = mp.begin(); it != mp.end();)
        it = b.word_touches_degree_zero(it->first) ? mp.erase(it) : std::next(it);
    }
  return b;
}

AInftyStructure reduce_to_positive_degrees(const AInftyStructure& a) {
  if (!a.dims_by_degree.empty() && a.dims_by_degree[0] > 1) throw DisconnectedError();
  AInftyStructure b;
  b.p = a.p;
  b.n_max = a.n_max;
  b.seed = a.seed;
  b.grade = a.grade;
  std::vector<int> remap(a.dim(), -1);
  for (int h = 0; h < a.dim(); ++h)
    if (a.h_degree[h] > 0) {
      remap[h] = b.dim();
      b.h_degree.push_back(a.h_degree[h]);
    }
  b.dims_by_degree = a.dims_by_degree;
  if (!b.dims_by_degree.empty()) b.dims_by_degree[0] = 0;
  b.delta.assign(b.n_max + 1, {});
  for (int n = 1; n <= b.n_max; ++n) {
    b.delta[n].assign(b.dim(), {});
    for (int src = 0; src < a.dim(); ++src) {
      if (remap[src] < 0) continue;
      for (auto& [w, cf] : a.delta[n][src]) {
        if (a.word_touches_degree_zero(w)) continue;
        Word w2;
        w2.reserve(w.size());
        for (int h : w) w2.push_back(remap[h]);
        b.delta[n][remap[src]][w2] = cf;
      }
    }
  }
  return b;
}

std::string KReport::to_string() const {
  return k ? std::to_string(*k) : ">= " + std::to_string(n_max + 1);
}

KReport k_invariant(const AInftyStructure& a) {
  AInftyStructure r = reduce_to_positive_degrees(a);
  for (int n = 2; n <= r.n_max; ++n)
    if (!r.delta_is_zero(n)) return {n, r.n_max};
  return {std::nullopt, a.n_max};
}

}  // namespace ainfty
