#include "cmwild/monomial.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

#include "cmwild/error.hpp"

namespace cmwild {

Monomial::Monomial(std::size_t nvars) : nvars_(static_cast<std::uint16_t>(nvars)) {
  if (nvars > kMaxVars) throw InputError("too many variables (limit " + std::to_string(kMaxVars) + ")");
}

Monomial::Monomial(std::span<const int> exponents) : Monomial(exponents.size()) {
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, int power) {
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, int e) {
  if (e < 0 || e > std::numeric_limits<std::uint16_t>::max()) throw InputError("exponent out of range");
  degree_ = degree_ - exp_[i] + static_cast<std::uint32_t>(e);
  exp_[i] = static_cast<std::uint16_t>(e);
}

std::vector<int> Monomial::exponents() const { return {exp_.begin(), exp_.begin() + nvars_}; }

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exp_[i] > other.exp_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exp_[i] != 0 && other.exp_[i] != 0) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  assert(a.nvars_ == b.nvars_);
  Monomial r(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    std::uint32_t e = std::uint32_t{a.exp_[i]} + b.exp_[i];
    if (e > std::numeric_limits<std::uint16_t>::max()) throw InputError("exponent overflow");
    r.exp_[i] = static_cast<std::uint16_t>(e);
  }
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  assert(b.divides(a));
  Monomial r(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i) r.exp_[i] = static_cast<std::uint16_t>(a.exp_[i] - b.exp_[i]);
  r.degree_ = a.degree_ - b.degree_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
    r.degree_ += r.exp_[i];
  }
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    r.exp_[i] = std::min(a.exp_[i], b.exp_[i]);
    r.degree_ += r.exp_[i];
  }
  return r;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = nvars_;
  for (std::size_t i = 0; i < nvars_; ++i) h = h * 1000003u ^ exp_[i];
  return h;
}

std::strong_ordering monomial_compare(const Monomial& a, const Monomial& b, MonomialOrder) noexcept {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

namespace {

void enumerate(std::size_t nvars, std::size_t index, int remaining, Monomial& cur,
               std::vector<Monomial>& out) {
  if (index + 1 == nvars) {
    cur.set(index, remaining);
    out.push_back(cur);
    cur.set(index, 0);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur.set(index, e);
    enumerate(nvars, index + 1, remaining - e, cur, out);
  }
  cur.set(index, 0);
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  Monomial cur(nvars);
  enumerate(nvars, 0, degree, cur, out);
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return monomial_compare(a, b) > 0; });
  return out;
}

}  // namespace cmwild
