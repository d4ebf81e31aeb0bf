#include "ainfty/reduction.hpp"

#include <algorithm>
#include <stdexcept>

namespace ainfty {

SparseMatrix boundary_matrix(const FilteredComplex& k, const FiltValue& t, std::uint32_t p) {
  int m = k.prefix_size_at(t);
  SparseMatrix d(m, m, p);
  for (int j = 0; j < m; ++j) {
    Chain b = boundary(k.simplex(j), p);
    SparseVec col;
    for (auto& [face, coef] : b.terms) {
      auto idx = k.index_of(face);
      if (!idx || *idx >= m)
        throw std::logic_error("boundary face missing from sublevel complex");
      col.emplace_back(*idx, coef);
    }
    std::sort(col.begin(), col.end());
    d.col[j] = std::move(col);
  }
  return d;
}

ReducedDecomposition reduce(const FilteredComplex& k, std::uint32_t p) {
  ReducedDecomposition rd;
  rd.complex = &k;
  rd.p = p;
  int m = k.size();
  FiltValue top = m ? k.value(m - 1) : FiltValue{};
  rd.R = boundary_matrix(k, top, p);
  rd.V = SparseMatrix::identity(m, p);
  rd.pivot_col_of_row.assign(m, -1);

  for (int j = 0; j < m; ++j) {
    while (auto low = rd.R.lowest(j)) {
      int other = rd.pivot_col_of_row[low->first];
      if (other < 0) break;
      // R_j -= (low_j / low_other) * R_other, mirror in V
      std::uint32_t lead = rd.R.col[other].back().second;
      std::uint32_t c = static_cast<std::uint32_t>(
          std::uint64_t(low->second) * mod_inverse(lead, p) % p);
      axpy(rd.R.col[j], rd.R.col[other], p - c, p);
      axpy(rd.V.col[j], rd.V.col[other], p - c, p);
    }
    if (auto low = rd.R.lowest(j)) {
      rd.pivot_col_of_row[low->first] = j;
      rd.pairs.emplace_back(low->first, j);
    }
  }
  std::sort(rd.pairs.begin(), rd.pairs.end());
  std::vector<bool> is_pivot_row(m, false), is_death(m, false);
  for (auto& [b, d] : rd.pairs) {
    is_pivot_row[b] = true;
    is_death[d] = true;
  }
  for (int i = 0; i < m; ++i)
    if (!is_pivot_row[i] && !is_death[i]) rd.essentials.push_back(i);
  return rd;
}

Barcode classical_barcode(const ReducedDecomposition& rd, int degree, bool reduced) {
  const FilteredComplex& k = *rd.complex;
  Barcode out;
  for (auto& [b, d] : rd.pairs) {
    if (k.simplex(b).dim() != degree) continue;
    if (!(k.value(b) < k.value(d))) continue;  // zero-length
    out.push_back({k.value(b), false, k.value(d), degree});
  }
  for (int e : rd.essentials) {
    if (k.simplex(e).dim() != degree) continue;
    out.push_back({k.value(e), true, FiltValue{}, degree});
  }
  std::sort(out.begin(), out.end(), [](const BarcodeInterval& a, const BarcodeInterval& b) {
    if (!(a.birth == b.birth)) return a.birth < b.birth;
    if (a.death_inf != b.death_inf) return !a.death_inf;
    if (!a.death_inf && !(a.death == b.death)) return a.death < b.death;
    return false;
  });
  if (reduced && degree == 0 && !out.empty()) {
    // drop the earliest-born infinite interval: the basepoint class
    auto it = std::min_element(out.begin(), out.end(), [](const auto& a, const auto& b) {
      if (a.death_inf != b.death_inf) return a.death_inf;
      return a.birth < b.birth;
    });
    if (it != out.end() && it->death_inf) out.erase(it);
  }
  return out;
}

// Representative cycle of the class born at row b, expressed as a column.
// For a paired birth (b, d) the cycle is R_d; for an essential birth it is
// V_b. Both have lowest row b.
static const SparseVec& birth_cycle(const ReducedDecomposition& rd, int b) {
  int d = rd.pivot_col_of_row[b];
  if (d >= 0) return rd.R.col[d];
  return rd.V.col[b];
}

HomologyBasis homology_basis(const ReducedDecomposition& rd, const FiltValue& t, int degree) {
  const FilteredComplex& k = *rd.complex;
  HomologyBasis basis;
  basis.grade = t;
  basis.degree = degree;
  int m = k.prefix_size_at(t);
  for (int b = 0; b < m; ++b) {
    if (k.simplex(b).dim() != degree) continue;
    int d = rd.pivot_col_of_row[b];
    bool alive;
    if (d >= 0) {
      alive = !(k.value(d) <= t);  // paired class, death after t
    } else {
      // born rows are cycle columns or essential; death columns never have
      // a pivot row equal to themselves
      alive = rd.is_cycle_column(b);
    }
    if (!alive) continue;
    basis.birth_rows.push_back(b);
    basis.cycles.push_back(column_to_chain(k, birth_cycle(rd, b), degree, rd.p));
  }
  return basis;
}

std::vector<std::uint32_t> express_class(const ReducedDecomposition& rd, const SparseVec& z,
                                         const FiltValue& t, const HomologyBasis& basis) {
  const FilteredComplex& k = *rd.complex;
  std::vector<std::uint32_t> coords(basis.birth_rows.size(), 0);
  SparseVec cur = z;
  while (!cur.empty()) {
    auto [row, coef] = cur.back();
    int d = rd.pivot_col_of_row[row];
    if (d >= 0 && k.value(d) <= t) {
      // the class of R_d is already a boundary in K_t; cancel the row
      std::uint32_t lead = rd.R.col[d].back().second;
      std::uint32_t c = static_cast<std::uint32_t>(
          std::uint64_t(coef) * mod_inverse(lead, rd.p) % rd.p);
      axpy(cur, rd.R.col[d], rd.p - c, rd.p);
      continue;
    }
    // otherwise the row must be an alive birth present in the basis
    auto it = std::lower_bound(basis.birth_rows.begin(), basis.birth_rows.end(), row);
    if (it == basis.birth_rows.end() || *it != row)
      throw std::logic_error("cycle class escapes the homology basis");
    const SparseVec& zeta = birth_cycle(rd, row);
    std::uint32_t lead = zeta.back().second;
    std::uint32_t c = static_cast<std::uint32_t>(
        std::uint64_t(coef) * mod_inverse(lead, rd.p) % rd.p);
    std::size_t pos = it - basis.birth_rows.begin();
    coords[pos] = static_cast<std::uint32_t>((coords[pos] + c) % rd.p);
    axpy(cur, zeta, rd.p - c, rd.p);
  }
  return coords;
}

SparseMatrix induced_map(const ReducedDecomposition& rd, int degree, const FiltValue& t,
                         const FiltValue& s) {
  if (s < t) throw std::invalid_argument("induced_map needs t <= s");
  HomologyBasis from = homology_basis(rd, t, degree);
  HomologyBasis to = homology_basis(rd, s, degree);
  SparseMatrix out(to.dim(), from.dim(), rd.p);
  for (int j = 0; j < from.dim(); ++j) {
    auto coords = express_class(rd, birth_cycle(rd, from.birth_rows[j]), s, to);
    SparseVec col;
    for (std::size_t r = 0; r < coords.size(); ++r)
      if (coords[r]) col.emplace_back(static_cast<int>(r), coords[r]);
    out.col[j] = std::move(col);
  }
  return out;
}

int betti_at(const ReducedDecomposition& rd, const FiltValue& t, int degree) {
  return homology_basis(rd, t, degree).dim();
}

SparseVec chain_to_column(const FilteredComplex& k, const Chain& c) {
  SparseVec out;
  for (auto& [s, coef] : c.terms) {
    auto idx = k.index_of(s);
    if (!idx) throw std::invalid_argument("chain simplex not in complex");
    out.emplace_back(*idx, coef);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Chain column_to_chain(const FilteredComplex& k, const SparseVec& v, int degree, std::uint32_t p) {
  Chain c(degree, p);
  for (auto& [row, coef] : v) c.add(k.simplex(row), FieldElement{coef, p});
  return c;
}

}  // namespace ainfty
