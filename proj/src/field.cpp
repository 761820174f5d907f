#include "cfla/field.hpp"

#include <stdexcept>
#include <string>

namespace cfla {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldPrime::FieldPrime(int p, int max_prime) : p_(p) {
  if (!is_prime(p)) throw std::invalid_argument("field modulus " + std::to_string(p) + " is not prime");
  if (p > max_prime) {
    throw std::invalid_argument("field modulus " + std::to_string(p) + " exceeds the supported bound " +
                                std::to_string(max_prime));
  }
}

int FieldPrime::inv(int a) const {
  a = reduce(a);
  if (a == 0) throw std::domain_error("zero has no inverse");
  // Fermat: a^(p-2)
  int result = 1;
  int base = a;
  for (int e = p_ - 2; e > 0; e >>= 1) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

}  // namespace cfla
