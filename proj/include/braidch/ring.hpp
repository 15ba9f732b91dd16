#pragma once

#include <cstdint>
#include <string>

namespace braidch {

// Exact integer coefficients; arithmetic is overflow-checked in ring ops.
using Coeff = std::int64_t;

bool is_prime(std::uint32_t n);

// Coefficient ring descriptor: the integers (modulus == 0) or a prime field F_p.
struct Ring {
  std::uint32_t modulus = 0;

  static Ring integers() { return Ring{0}; }
  static Ring prime_field(std::uint32_t p);
  static Ring from_name(const std::string& name);

  bool is_integers() const { return modulus == 0; }
  bool operator==(const Ring&) const = default;

  // Canonical representative: identity over Z, value in [0, p) over F_p.
  Coeff normalize(Coeff c) const;
  Coeff add(Coeff a, Coeff b) const;
  Coeff mul(Coeff a, Coeff b) const;
  Coeff neg(Coeff a) const;

  std::string name() const;  // "Z" or "F_<p>"
};

}  // namespace braidch
