#pragma once

#include <map>
#include <string>
#include <utility>

#include "ainfty/field.hpp"
#include "ainfty/simplex.hpp"

namespace ainfty {

// A formal F_p-linear combination of simplices of one dimension.
struct Chain {
  int degree = 0;
  std::uint32_t p = 2;
  std::map<Simplex, std::uint32_t> terms;  // nonzero coefficients only

  Chain() = default;
  Chain(int degree_, std::uint32_t p_) : degree(degree_), p(p_) {}
  static Chain of_simplex(const Simplex& s, std::uint32_t p);

  bool is_zero() const { return terms.empty(); }
  void add(const Simplex& s, FieldElement c);
  void add_scaled(const Chain& other, FieldElement c);
  FieldElement coeff(const Simplex& s) const;
  std::string to_string() const;
  bool operator==(const Chain&) const = default;
};

// A formal combination of ordered pairs of simplices (a rank-2 tensor).
struct Tensor2 {
  std::uint32_t p = 2;
  std::map<std::pair<Simplex, Simplex>, std::uint32_t> terms;

  bool is_zero() const { return terms.empty(); }
  void add(const Simplex& a, const Simplex& b, FieldElement c);
  bool operator==(const Tensor2&) const = default;
};

// Simplicial boundary with alternating signs.
Chain boundary(const Simplex& s, std::uint32_t p);
Chain boundary(const Chain& c);

// Alexander–Whitney diagonal: sum of front(i) (x) back(i) splits.
Tensor2 aw_diagonal(const Simplex& s, std::uint32_t p);
Tensor2 aw_diagonal(const Chain& c);

// Augmentation: sum of coefficients in degree 0 (zero elsewhere).
FieldElement augmentation(const Chain& c);

}  // namespace ainfty
