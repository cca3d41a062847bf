#pragma once

#include <cstdint>

namespace idemfact::detail {

  constexpr bool is_prime(std::uint32_t p) noexcept {
    if (p < 2) {
      return false;
    }
    for (std::uint32_t q = 2; q * q <= p; ++q) {
      if (p % q == 0) {
        return false;
      }
    }
    return true;
  }

  // a^{-1} mod p for a != 0 and p prime, by Fermat.
  constexpr std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) noexcept {
    std::uint64_t result = 1;
    std::uint64_t base   = a % p;
    for (std::uint32_t e = p - 2; e != 0; e >>= 1) {
      if (e & 1) {
        result = result * base % p;
      }
      base = base * base % p;
    }
    return static_cast<std::uint32_t>(result);
  }

}  // namespace idemfact::detail
