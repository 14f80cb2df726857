#include "svar/field.hpp"

#include <string>

#include "svar/error.hpp"

namespace svar {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw UsageError("field modulus " + std::to_string(p) + " is not an admissible prime");
}

Elem PrimeField::pow(Elem a, std::uint64_t e) const {
  Elem r = 1 % p_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw UsageError("inverse of zero");
  return pow(a, p_ - 2);
}

}  // namespace svar
