#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cmwild/field.hpp"
#include "cmwild/monomial.hpp"

namespace cmwild {

/// Ambient polynomial ring k[x_1..x_n] over a prime field: variable names
/// plus the coefficient field. Shared by every polynomial built over it.
class PolyRing {
 public:
  PolyRing(std::vector<std::string> names, PrimeField field);

  std::size_t nvars() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const PrimeField& field() const noexcept { return field_; }
  /// Index of a variable name, or -1.
  int index_of(std::string_view name) const noexcept;

 private:
  std::vector<std::string> names_;
  PrimeField field_;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

PolyRingPtr make_ring(std::vector<std::string> names, std::uint32_t p = kDefaultPrime);

struct Term {
  Monomial mono;
  PrimeField::Elem coef;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial with terms strictly descending in grevlex and no zero
/// coefficients. The zero polynomial has no terms and no homogeneous degree.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(PolyRingPtr ring) : ring_(std::move(ring)) {}
  /// Canonicalizes: sorts, merges duplicate monomials, drops zeros.
  Polynomial(PolyRingPtr ring, std::vector<Term> terms);

  static Polynomial constant(PolyRingPtr ring, std::int64_t c);
  static Polynomial variable(PolyRingPtr ring, std::size_t index, int power = 1);
  static Polynomial monomial(PolyRingPtr ring, const Monomial& m, PrimeField::Elem c = 1);

  const PolyRingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const Term& leading_term() const { return terms_.front(); }

  std::optional<int> homogeneous_degree() const noexcept { return homogeneous_degree_; }
  bool is_homogeneous() const noexcept { return homogeneous_degree_.has_value(); }
  /// Coefficient of the constant monomial.
  PrimeField::Elem constant_coefficient() const noexcept;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(PrimeField::Elem c) const;
  Polynomial times_monomial(const Monomial& m, PrimeField::Elem c = 1) const;
  Polynomial pow(unsigned e) const;

  /// Replaces x_i by images[i] (all over the same target ring).
  Polynomial substitute(const std::vector<Polynomial>& images) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) noexcept { return a.terms_ == b.terms_; }

 private:
  void refresh_degree();

  PolyRingPtr ring_;
  std::vector<Term> terms_;
  std::optional<int> homogeneous_degree_;
};

/// Multiplication of two polynomials, with a structural check on the rings.
Polynomial poly_mul(const Polynomial& f, const Polynomial& g);

/// Parses `poly := ['+'|'-'] term (('+'|'-') term)*`,
/// `term := [coeff '*'] factor ('*' factor)* | coeff`, `factor := var ['^' exp]`.
/// Throws ParseError carrying the byte offset of the problem.
Polynomial parse_polynomial(std::string_view text, const PolyRingPtr& ring);

}  // namespace cmwild
