#pragma once

#include <cstdint>
#include <random>

#include "cmwild/error.hpp"

namespace cmwild {

inline constexpr std::uint32_t kDefaultPrime = 32003;

/// Arithmetic in Z/p for an odd or even prime p < 2^31. Elements are plain
/// residues in [0, p); the field object carries the modulus.
class PrimeField {
 public:
  using Elem = std::uint32_t;

  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t characteristic() const noexcept { return p_; }

  Elem add(Elem a, Elem b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const noexcept {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const noexcept;

  /// Reduces an arbitrary signed integer into [0, p).
  Elem from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }
  /// Symmetric representative in (-p/2, p/2].
  std::int64_t to_signed(Elem a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a;
  }

  /// Uniform residue drawn from the engine's raw output, portable across
  /// standard library implementations.
  template <class Engine>
  Elem random(Engine& rng) const {
    return static_cast<Elem>(rng() % p_);
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Stand-alone field element carrying its modulus.
struct FieldElem {
  std::uint32_t value = 0;
  std::uint32_t modulus = kDefaultPrime;
  friend bool operator==(const FieldElem&, const FieldElem&) = default;
};

enum class FieldOp { Add, Mul, Inv, Neg };

/// Binary or unary operation on field elements; `b` is ignored by Inv and Neg.
FieldElem field_arith(FieldElem a, FieldElem b, FieldOp op);

}  // namespace cmwild
