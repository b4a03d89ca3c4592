#include "cmwild/field.hpp"

#include <string>

namespace cmwild {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31)) throw InputError("field characteristic must be below 2^31");
  if (!is_prime(p)) throw InputError("field characteristic " + std::to_string(p) + " is not prime");
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a % p_ == 0) throw ArithmeticError("division by zero");
  // extended Euclid on (a, p)
  std::int64_t r0 = p_, r1 = a, t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  return from_int(t0);
}

PrimeField::Elem PrimeField::pow(Elem a, std::uint64_t e) const noexcept {
  Elem result = 1 % p_;
  Elem base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

FieldElem field_arith(FieldElem a, FieldElem b, FieldOp op) {
  if (op == FieldOp::Add || op == FieldOp::Mul) {
    if (a.modulus != b.modulus) throw InputError("field elements over different primes");
  }
  PrimeField f(a.modulus);
  switch (op) {
    case FieldOp::Add: return {f.add(a.value % a.modulus, b.value % a.modulus), a.modulus};
    case FieldOp::Mul: return {f.mul(a.value % a.modulus, b.value % a.modulus), a.modulus};
    case FieldOp::Inv: return {f.inv(a.value % a.modulus), a.modulus};
    case FieldOp::Neg: return {f.neg(a.value % a.modulus), a.modulus};
  }
  return a;
}

}  // namespace cmwild
