#include "ainfty/chain.hpp"

namespace ainfty {

Chain Chain::of_simplex(const Simplex& s, std::uint32_t p) {
  Chain c(s.dim(), p);
  c.terms[s] = 1 % p;
  return c;
}

void Chain::add(const Simplex& s, FieldElement c) {
  if (c.is_zero()) return;
  auto it = terms.find(s);
  if (it == terms.end()) {
    terms.emplace(s, c.value);
    return;
  }
  FieldElement sum = FieldElement{it->second, p} + c;
  if (sum.is_zero())
    terms.erase(it);
  else
    it->second = sum.value;
}

void Chain::add_scaled(const Chain& other, FieldElement c) {
  if (c.is_zero()) return;
  for (auto& [s, v] : other.terms) add(s, FieldElement{v, p} * c);
}

FieldElement Chain::coeff(const Simplex& s) const {
  auto it = terms.find(s);
  return {it == terms.end() ? 0 : it->second, p};
}

std::string Chain::to_string() const {
  if (terms.empty()) return "0";
  std::string out;
  for (auto& [s, c] : terms) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += std::to_string(c) + "*";
    out += s.to_string();
  }
  return out;
}

void Tensor2::add(const Simplex& a, const Simplex& b, FieldElement c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(a, b);
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, c.value);
    return;
  }
  FieldElement sum = FieldElement{it->second, p} + c;
  if (sum.is_zero())
    terms.erase(it);
  else
    it->second = sum.value;
}

Chain boundary(const Simplex& s, std::uint32_t p) {
  Chain out(s.dim() - 1, p);
  if (s.dim() <= 0) return out;
  auto faces = s.facets();
  for (std::size_t i = 0; i < faces.size(); ++i)
    out.add(faces[i], FieldElement::of(i % 2 == 0 ? 1 : -1, p));
  return out;
}

Chain boundary(const Chain& c) {
  Chain out(c.degree - 1, c.p);
  for (auto& [s, v] : c.terms) out.add_scaled(boundary(s, c.p), FieldElement{v, c.p});
  return out;
}

Tensor2 aw_diagonal(const Simplex& s, std::uint32_t p) {
  Tensor2 out;
  out.p = p;
  for (int i = 0; i <= s.dim(); ++i) out.add(s.front(i), s.back(i), FieldElement::one(p));
  return out;
}

Tensor2 aw_diagonal(const Chain& c) {
  Tensor2 out;
  out.p = c.p;
  for (auto& [s, v] : c.terms) {
    for (int i = 0; i <= s.dim(); ++i)
      out.add(s.front(i), s.back(i), FieldElement{v, c.p});
  }
  return out;
}

FieldElement augmentation(const Chain& c) {
  FieldElement out = FieldElement::zero(c.p);
  if (c.degree != 0) return out;
  for (auto& [s, v] : c.terms) out = out + FieldElement{v, c.p};
  return out;
}

}  // namespace ainfty
