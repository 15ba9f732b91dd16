#include "braidch/ring.hpp"

#include <stdexcept>

namespace braidch {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Ring Ring::prime_field(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  return Ring{p};
}

Ring Ring::from_name(const std::string& name) {
  if (name == "Z") return integers();
  if (name.rfind("F_", 0) == 0) {
    std::size_t pos = 0;
    unsigned long p = std::stoul(name.substr(2), &pos);
    if (pos != name.size() - 2) throw std::invalid_argument("bad ring name: " + name);
    return prime_field(static_cast<std::uint32_t>(p));
  }
  throw std::invalid_argument("bad ring name: " + name);
}

Coeff Ring::normalize(Coeff c) const {
  if (is_integers()) return c;
  Coeff m = static_cast<Coeff>(modulus);
  Coeff r = c % m;
  return r < 0 ? r + m : r;
}

Coeff Ring::add(Coeff a, Coeff b) const {
  if (!is_integers()) return normalize(a + b);  // operands already in [0, p)
  Coeff r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer coefficient overflow in add");
  return r;
}

Coeff Ring::mul(Coeff a, Coeff b) const {
  if (!is_integers()) return normalize(a * b);
  Coeff r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer coefficient overflow in mul");
  return r;
}

Coeff Ring::neg(Coeff a) const { return normalize(is_integers() ? -a : static_cast<Coeff>(modulus) - a); }

std::string Ring::name() const { return is_integers() ? "Z" : "F_" + std::to_string(modulus); }

}  // namespace braidch
