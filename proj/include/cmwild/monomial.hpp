#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace cmwild {

inline constexpr std::size_t kMaxVars = 16;

/// Exponent vector of a commutative monomial with its cached total degree.
/// Capacity is fixed at kMaxVars so monomials stay trivially copyable.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::span<const int> exponents);

  static Monomial one(std::size_t nvars) { return Monomial(nvars); }
  static Monomial variable(std::size_t nvars, std::size_t index, int power = 1);

  std::size_t nvars() const noexcept { return nvars_; }
  int degree() const noexcept { return static_cast<int>(degree_); }
  int operator[](std::size_t i) const noexcept { return exp_[i]; }
  void set(std::size_t i, int e);
  std::vector<int> exponents() const;

  bool divides(const Monomial& other) const noexcept;
  bool coprime(const Monomial& other) const noexcept;
  bool is_one() const noexcept { return degree_ == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.degree_ == b.degree_ && a.exp_ == b.exp_;
  }

  std::size_t hash() const noexcept;

 private:
  std::array<std::uint16_t, kMaxVars> exp_{};
  std::uint16_t nvars_ = 0;
  std::uint32_t degree_ = 0;
};

enum class MonomialOrder { Grevlex };

/// Graded reverse lexicographic comparison: higher degree is greater; on a
/// tie, a > b iff the last nonzero entry of (a - b) is negative.
std::strong_ordering monomial_compare(const Monomial& a, const Monomial& b,
                                      MonomialOrder ord = MonomialOrder::Grevlex) noexcept;

/// All monomials of the given degree in nvars variables, grevlex-descending.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace cmwild
