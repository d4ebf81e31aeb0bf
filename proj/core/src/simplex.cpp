#include "ainfty/simplex.hpp"

#include <algorithm>
#include <stdexcept>

namespace ainfty {

Simplex Simplex::of(std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw std::invalid_argument("repeated vertex in simplex");
  Simplex s;
  s.v = std::move(vertices);
  return s;
}

std::vector<Simplex> Simplex::facets() const {
  std::vector<Simplex> out;
  if (v.size() <= 1) return out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Simplex f;
    f.v.reserve(v.size() - 1);
    for (std::size_t j = 0; j < v.size(); ++j)
      if (j != i) f.v.push_back(v[j]);
    out.push_back(std::move(f));
  }
  return out;
}

Simplex Simplex::front(int i) const {
  Simplex s;
  s.v.assign(v.begin(), v.begin() + i + 1);
  return s;
}

Simplex Simplex::back(int i) const {
  Simplex s;
  s.v.assign(v.begin() + i, v.end());
  return s;
}

std::string Simplex::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v[i]);
  }
  return out + "]";
}

}  // namespace ainfty
