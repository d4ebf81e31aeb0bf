#include "ainfty/field.hpp"

namespace ainfty {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t acc = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) acc = acc * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(acc);
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) { return mod_pow(a, p - 2, p); }

}  // namespace ainfty
