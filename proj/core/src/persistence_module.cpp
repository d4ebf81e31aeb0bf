#include "ainfty/persistence_module.hpp"

#include <algorithm>
#include <stdexcept>

namespace ainfty {

bool PersistenceModule::valid_shape() const {
  if (dims.size() != grades.size()) return false;
  if (grades.empty()) return maps.empty();
  if (maps.size() + 1 != grades.size()) return false;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (maps[i].rows != dims[i + 1] || maps[i].cols != dims[i]) return false;
    if (maps[i].p != p) return false;
  }
  for (std::size_t i = 0; i + 1 < grades.size(); ++i)
    if (!(grades[i] < grades[i + 1])) return false;
  return true;
}

int rank_between(const PersistenceModule& m, int i, int j) {
  if (i < 0 || j >= m.size() || i > j) throw std::invalid_argument("rank_between range");
  if (i == j) return m.dims[i];
  FpMat acc = m.maps[i];
  for (int k = i + 1; k < j; ++k) acc = m.maps[k].mul(acc);
  return acc.rank();
}

std::vector<ModuleInterval> interval_decomposition(const PersistenceModule& m) {
  if (!m.valid_shape()) throw std::invalid_argument("malformed persistence module");
  int n = m.size();
  std::vector<ModuleInterval> out;
  if (n == 0) return out;
  // r(i, j) = rank of M(grades[i]) -> M(grades[j])
  std::vector<std::vector<int>> r(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    r[i][i] = m.dims[i];
    for (int j = i + 1; j < n; ++j) r[i][j] = rank_between(m, i, j);
  }
  auto rk = [&](int i, int j) { return (i < 0 || j >= n || i > j) ? 0 : r[i][j]; };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      // summands born exactly at grade i and dying exactly at grade j
      int mult = (rk(i, j - 1) - rk(i, j)) - (rk(i - 1, j - 1) - rk(i - 1, j));
      if (mult < 0) throw std::logic_error("negative interval multiplicity");
      if (mult > 0) out.push_back({i, j, mult});
    }
    int inf = rk(i, n - 1) - rk(i - 1, n - 1);
    if (inf < 0) throw std::logic_error("negative interval multiplicity");
    if (inf > 0) out.push_back({i, std::nullopt, inf});
  }
  std::sort(out.begin(), out.end(), [](const ModuleInterval& a, const ModuleInterval& b) {
    if (a.i != b.i) return a.i < b.i;
    if (a.j.has_value() != b.j.has_value()) return a.j.has_value();
    if (a.j && b.j) return *a.j < *b.j;
    return false;
  });
  return out;
}

PersistenceModule module_from_intervals(std::uint32_t p, const std::vector<FiltValue>& grades,
                                        const std::vector<ModuleInterval>& intervals) {
  int n = static_cast<int>(grades.size());
  PersistenceModule m;
  m.p = p;
  m.grades = grades;
  m.dims.assign(n, 0);
  // live(i) = indices of interval copies alive at grade i, in a fixed order
  std::vector<std::vector<int>> live(n);
  int id = 0;
  for (auto& iv : intervals) {
    for (int c = 0; c < iv.mult; ++c, ++id) {
      int hi = iv.j ? *iv.j : n;
      for (int g = iv.i; g < hi && g < n; ++g) live[g].push_back(id);
    }
  }
  for (int g = 0; g < n; ++g) m.dims[g] = static_cast<int>(live[g].size());
  for (int g = 0; g + 1 < n; ++g) {
    FpMat f(m.dims[g + 1], m.dims[g], p);
    for (int c = 0; c < m.dims[g]; ++c) {
      auto it = std::find(live[g + 1].begin(), live[g + 1].end(), live[g][c]);
      if (it != live[g + 1].end())
        f.at(static_cast<int>(it - live[g + 1].begin()), c) = 1 % p;
    }
    m.maps.push_back(std::move(f));
  }
  return m;
}

}  // namespace ainfty
