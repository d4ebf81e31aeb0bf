#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace ainfty {

// An abstract simplex: strictly increasing vertex ids.
struct Simplex {
  std::vector<int> v;

  Simplex() = default;
  // sorts and rejects duplicate vertices (throws std::invalid_argument)
  static Simplex of(std::vector<int> vertices);
  static Simplex of(std::initializer_list<int> vertices) {
    return of(std::vector<int>(vertices));
  }

  int dim() const { return static_cast<int>(v.size()) - 1; }
  bool empty() const { return v.empty(); }

  // codimension-1 faces, in order of omitted position
  std::vector<Simplex> facets() const;
  // front face [v0..vi] and back face [vi..vk]
  Simplex front(int i) const;
  Simplex back(int i) const;

  std::string to_string() const;  // "[0 2 5]"

  auto operator<=>(const Simplex&) const = default;
};

}  // namespace ainfty
