#pragma once

#include <optional>
#include <random>
#include <vector>

#include "cmwild/field.hpp"
#include "cmwild/linalg.hpp"

/// Dense univariate polynomials over F_p: index i holds the coefficient of
/// t^i, no trailing zeros, the zero polynomial is empty.
namespace cmwild::upoly {

using UPoly = std::vector<PrimeField::Elem>;

void trim(UPoly& a);
int degree(const UPoly& a);
UPoly monomial(PrimeField::Elem c, std::size_t k);
UPoly add(const PrimeField& f, const UPoly& a, const UPoly& b);
UPoly sub(const PrimeField& f, const UPoly& a, const UPoly& b);
UPoly mul(const PrimeField& f, const UPoly& a, const UPoly& b);
/// Quotient and remainder; b must be nonzero.
std::pair<UPoly, UPoly> divmod(const PrimeField& f, const UPoly& a, const UPoly& b);
UPoly mod(const PrimeField& f, const UPoly& a, const UPoly& b);
UPoly monic(const PrimeField& f, const UPoly& a);
UPoly derivative(const PrimeField& f, const UPoly& a);
/// Monic gcd (zero when both are zero).
UPoly gcd(const PrimeField& f, UPoly a, UPoly b);
/// u a + v b = g with g the monic gcd.
struct Bezout {
  UPoly g, u, v;
};
Bezout ext_gcd(const PrimeField& f, const UPoly& a, const UPoly& b);
UPoly powmod(const PrimeField& f, UPoly base, std::uint64_t e, const UPoly& m);

/// Product of the distinct monic irreducible factors of a (a ≠ 0).
UPoly squarefree_part(const PrimeField& f, const UPoly& a);
/// A monic factor g of the squarefree monic a with 0 < deg g < deg a, or
/// nullopt when a is irreducible (or, in characteristic 2, when a splits only
/// into factors of equal degree).
std::optional<UPoly> proper_factor(const PrimeField& f, const UPoly& a, std::mt19937_64& rng);

/// p(M) by Horner's rule.
Matrix evaluate(const PrimeField& f, const UPoly& p, const Matrix& m);
/// Monic minimal polynomial of a square matrix.
UPoly minimal_polynomial(const PrimeField& f, const Matrix& m);

}  // namespace cmwild::upoly
