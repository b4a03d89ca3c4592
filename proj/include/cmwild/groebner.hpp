#pragma once

#include <cstdint>
#include <vector>

#include "cmwild/field.hpp"
#include "cmwild/module_vector.hpp"

namespace cmwild {

/// Reduced Gröbner basis of a homogeneous submodule of the free module
/// S^r = ⊕ S(-comp_degrees[c]) under the POT order of module_vector.hpp.
/// Ideals are the case r = 1.
///
/// Pairs are processed degree by degree (normal strategy); the product
/// criterion is used for ideals and the Gebauer–Möller chain criteria for
/// all ranks. Output is sorted by leading term (descending) and monic, so
/// it depends only on the submodule, not on the generator order.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(PrimeField field, std::size_t nvars, std::vector<int> comp_degrees,
                std::vector<ModuleVector> generators);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  std::size_t rank() const noexcept { return comp_degrees_.size(); }
  const std::vector<int>& comp_degrees() const noexcept { return comp_degrees_; }
  const std::vector<ModuleVector>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }

  /// Fully reduced remainder: no term is divisible by a leading term.
  ModuleVector normal_form(ModuleVector v) const;
  bool reduces_to_zero(const ModuleVector& v) const { return normal_form(v).is_zero(); }

  /// Leading monomials grouped by component.
  std::vector<std::vector<Monomial>> leading_monomials() const;

  /// True iff every S-pair of the stored basis reduces to zero.
  bool satisfies_buchberger_criterion() const;

 private:
  void build(std::vector<ModuleVector> generators);
  const ModuleVector* find_reducer(const ModTerm& t) const;

  PrimeField field_;
  std::size_t nvars_ = 0;
  std::vector<int> comp_degrees_;
  std::vector<ModuleVector> elements_;
  std::vector<std::vector<std::size_t>> by_comp_;
};

/// Convenience for ideals of S.
GroebnerBasis buchberger(const PrimeField& field, std::size_t nvars, const std::vector<Polynomial>& gens);

/// Hilbert series of a graded quotient, stored as numerator N(t) over the
/// fixed denominator (1-t)^nvars. N has integer coefficients indexed by degree.
struct HilbertSeries {
  std::size_t nvars = 0;
  std::vector<std::int64_t> numerator;

  /// Coefficient of t^degree in the power-series expansion.
  std::int64_t dim(int degree) const;
  /// Numerator with trailing zeros removed.
  HilbertSeries normalized() const;
  /// Order of the pole at t = 1, i.e. the Krull dimension (-1 for the zero series).
  int pole_order() const;
  /// True when the series is a polynomial (finite length module).
  bool is_polynomial() const;
  /// The series itself as a polynomial; requires is_polynomial().
  std::vector<std::int64_t> as_polynomial() const;

  friend HilbertSeries operator+(const HilbertSeries& a, const HilbertSeries& b);
  friend HilbertSeries operator-(const HilbertSeries& a, const HilbertSeries& b);
  /// Multiplication by t^s (s >= 0).
  HilbertSeries shifted(int s) const;
  /// Multiplication by (1 - t^e).
  HilbertSeries times_one_minus_t_pow(int e) const;
  friend bool operator==(const HilbertSeries& a, const HilbertSeries& b);
};

/// Hilbert numerator of S/J for the monomial ideal J.
std::vector<std::int64_t> monomial_ideal_numerator(std::vector<Monomial> gens, std::size_t nvars);

/// Hilbert series of S^r/U where U has the given Gröbner basis.
HilbertSeries quotient_series(const GroebnerBasis& gb);

/// Krull dimension of S/J, J monomial: the largest set of variables whose
/// monomials avoid every generator. -1 if 1 ∈ J.
int monomial_ideal_dimension(const std::vector<Monomial>& gens, std::size_t nvars);

}  // namespace cmwild
