#pragma once

#include <cassert>
#include <cstdint>

namespace ainfty {

bool is_prime(std::uint32_t p);
std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint32_t p);
std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p);

// An element of F_p carrying its modulus. Arithmetic asserts matching
// moduli; values are always stored reduced to [0, p).
struct FieldElement {
  std::uint32_t value = 0;
  std::uint32_t modulus = 2;

  static FieldElement of(long long v, std::uint32_t p) {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return FieldElement{static_cast<std::uint32_t>(r), p};
  }
  static FieldElement zero(std::uint32_t p) { return {0, p}; }
  static FieldElement one(std::uint32_t p) { return {1 % p, p}; }

  bool is_zero() const { return value == 0; }

  FieldElement operator+(FieldElement o) const {
    assert(modulus == o.modulus);
    std::uint32_t s = value + o.value;
    if (s >= modulus) s -= modulus;
    return {s, modulus};
  }
  FieldElement operator-(FieldElement o) const {
    assert(modulus == o.modulus);
    std::uint32_t s = value + modulus - o.value;
    if (s >= modulus) s -= modulus;
    return {s, modulus};
  }
  FieldElement operator*(FieldElement o) const {
    assert(modulus == o.modulus);
    return {static_cast<std::uint32_t>(std::uint64_t(value) * o.value % modulus), modulus};
  }
  FieldElement operator-() const { return {value == 0 ? 0 : modulus - value, modulus}; }
  FieldElement inverse() const {
    assert(value != 0);
    return {mod_inverse(value, modulus), modulus};
  }
  bool operator==(const FieldElement& o) const = default;
};

}  // namespace ainfty
