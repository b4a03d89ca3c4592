#pragma once

#include <cstdint>
#include <vector>

#include "cmwild/field.hpp"
#include "cmwild/monomial.hpp"
#include "cmwild/polynomial.hpp"

namespace cmwild {

/// One term c * m * e_comp of an element of a free module S^r.
struct ModTerm {
  Monomial mono;
  std::uint32_t comp = 0;
  PrimeField::Elem coef = 0;
  friend bool operator==(const ModTerm&, const ModTerm&) = default;
};

/// Position-over-term: a smaller component index is the larger position,
/// ties go to grevlex on the monomial.
inline bool term_greater(const ModTerm& a, const ModTerm& b) noexcept {
  if (a.comp != b.comp) return a.comp < b.comp;
  return monomial_compare(a.mono, b.mono) > 0;
}

/// Sparse element of S^r: terms strictly descending in the POT order,
/// nonzero coefficients only. Polynomials are the case r = 1.
struct ModuleVector {
  std::vector<ModTerm> terms;

  bool is_zero() const noexcept { return terms.empty(); }
  const ModTerm& lead() const { return terms.front(); }
  friend bool operator==(const ModuleVector&, const ModuleVector&) = default;
};

/// Sorts and merges an arbitrary term list into canonical form.
ModuleVector canonical(const PrimeField& f, std::vector<ModTerm> terms);

ModuleVector mv_add(const PrimeField& f, const ModuleVector& a, const ModuleVector& b);
/// a - c * m * b
ModuleVector mv_sub_mul(const PrimeField& f, const ModuleVector& a, PrimeField::Elem c, const Monomial& m,
                        const ModuleVector& b);
ModuleVector mv_scale(const PrimeField& f, const ModuleVector& a, PrimeField::Elem c);
ModuleVector mv_mul_monomial(const PrimeField& f, const ModuleVector& a, const Monomial& m,
                             PrimeField::Elem c = 1);
/// p * v for a polynomial p (given by its terms).
ModuleVector mv_mul_poly(const PrimeField& f, const std::vector<Term>& p, const ModuleVector& v);
/// Scales so the leading coefficient is 1.
ModuleVector mv_monic(const PrimeField& f, const ModuleVector& a);
/// Relabels components through `map` and re-sorts.
ModuleVector mv_relabel(const PrimeField& f, const ModuleVector& a, const std::vector<std::uint32_t>& map);

/// Unit vector x^0 * e_comp.
ModuleVector mv_unit(std::size_t nvars, std::uint32_t comp);
/// Embeds a polynomial into component `comp`.
ModuleVector mv_from_poly(const Polynomial& p, std::uint32_t comp = 0);
/// Component `comp` of v as a polynomial over `ring`.
Polynomial mv_component(const ModuleVector& v, std::uint32_t comp, const PolyRingPtr& ring);
/// Builds a vector from one polynomial per component.
ModuleVector mv_from_polys(const std::vector<Polynomial>& entries);

/// Degree of a homogeneous element given the generator degrees; nullopt for
/// zero or inhomogeneous input.
std::optional<int> mv_degree(const ModuleVector& v, const std::vector<int>& comp_degrees);

}  // namespace cmwild
