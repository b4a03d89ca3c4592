#include "cmwild/upoly.hpp"

#include "cmwild/error.hpp"

namespace cmwild::upoly {

void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

UPoly monomial(PrimeField::Elem c, std::size_t k) {
  if (c == 0) return {};
  UPoly out(k + 1, 0);
  out[k] = c;
  return out;
}

UPoly add(const PrimeField& f, const UPoly& a, const UPoly& b) {
  UPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = f.add(out[i], b[i]);
  trim(out);
  return out;
}

UPoly sub(const PrimeField& f, const UPoly& a, const UPoly& b) {
  UPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = f.sub(out[i], b[i]);
  trim(out);
  return out;
}

UPoly mul(const PrimeField& f, const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
  trim(out);
  return out;
}

std::pair<UPoly, UPoly> divmod(const PrimeField& f, const UPoly& a, const UPoly& b) {
  if (b.empty()) throw ArithmeticError("division by zero");
  UPoly r = a;
  trim(r);
  if (r.size() < b.size()) return {{}, r};
  UPoly q(r.size() - b.size() + 1, 0);
  const auto inv = f.inv(b.back());
  for (std::size_t k = q.size(); k-- > 0;) {
    const auto c = f.mul(r[k + b.size() - 1], inv);
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] = f.sub(r[k + j], f.mul(c, b[j]));
  }
  trim(q);
  trim(r);
  return {q, r};
}

UPoly mod(const PrimeField& f, const UPoly& a, const UPoly& b) { return divmod(f, a, b).second; }

UPoly monic(const PrimeField& f, const UPoly& a) {
  if (a.empty()) return {};
  const auto inv = f.inv(a.back());
  UPoly out = a;
  for (auto& c : out) c = f.mul(c, inv);
  return out;
}

UPoly derivative(const PrimeField& f, const UPoly& a) {
  if (a.size() <= 1) return {};
  UPoly out(a.size() - 1, 0);
  for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = f.mul(a[i], f.from_int(static_cast<std::int64_t>(i)));
  trim(out);
  return out;
}

UPoly gcd(const PrimeField& f, UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(f, a);
}

Bezout ext_gcd(const PrimeField& f, const UPoly& a, const UPoly& b) {
  UPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    auto [q, r] = divmod(f, r0, r1);
    auto s = sub(f, s0, mul(f, q, s1));
    auto t = sub(f, t0, mul(f, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (r0.empty()) return {{}, {}, {}};
  const auto inv = f.inv(r0.back());
  auto scale = [&](UPoly p) {
    for (auto& c : p) c = f.mul(c, inv);
    return p;
  };
  return {scale(r0), scale(s0), scale(t0)};
}

UPoly powmod(const PrimeField& f, UPoly base, std::uint64_t e, const UPoly& m) {
  UPoly result = mod(f, UPoly{1}, m);
  base = mod(f, base, m);
  while (e > 0) {
    if (e & 1) result = mod(f, mul(f, result, base), m);
    base = mod(f, mul(f, base, base), m);
    e >>= 1;
  }
  return result;
}

UPoly squarefree_part(const PrimeField& f, const UPoly& a) {
  if (a.empty()) throw ArithmeticError("squarefree part of zero");
  if (a.size() == 1) return {1};
  const auto p = f.characteristic();
  auto da = derivative(f, a);
  if (da.empty()) {
    // a(t) = b(t^p) = b(t)^p, coefficients being fixed by Frobenius
    UPoly b;
    for (std::size_t i = 0; i < a.size(); i += p) b.push_back(a[i]);
    return squarefree_part(f, b);
  }
  // w collects the factors whose multiplicity is prime to p
  auto w = divmod(f, monic(f, a), gcd(f, a, da)).first;
  UPoly rest = monic(f, a);
  for (auto g = gcd(f, rest, w); g.size() > 1; g = gcd(f, rest, w)) rest = divmod(f, rest, g).first;
  if (rest.size() <= 1) return monic(f, w);
  return monic(f, mul(f, w, squarefree_part(f, rest)));
}

namespace {

// r^{(p^d - 1)/2} mod a, written as (Π_{i<d} r^{p^i})^{(p-1)/2}
UPoly half_power(const PrimeField& f, const UPoly& r, int d, const UPoly& a) {
  const auto p = f.characteristic();
  UPoly prod{1}, cur = mod(f, r, a);
  for (int i = 0; i < d; ++i) {
    prod = mod(f, mul(f, prod, cur), a);
    cur = powmod(f, cur, p, a);
  }
  return powmod(f, prod, (p - 1) / 2, a);
}

}  // namespace

std::optional<UPoly> proper_factor(const PrimeField& f, const UPoly& a, std::mt19937_64& rng) {
  const int n = degree(a);
  if (n <= 1) return std::nullopt;
  const auto p = f.characteristic();
  const UPoly t{0, 1};
  UPoly h = t;
  for (int d = 1; 2 * d <= n; ++d) {
    h = powmod(f, h, p, a);
    auto g = gcd(f, a, sub(f, h, t));
    if (degree(g) > 0 && degree(g) < n) return g;
    if (degree(g) == n) {
      // every irreducible factor has degree d and there are n/d > 1 of them
      if (p == 2) return std::nullopt;
      for (int attempt = 0; attempt < 256; ++attempt) {
        UPoly r(static_cast<std::size_t>(n), 0);
        for (auto& c : r) c = f.random(rng);
        trim(r);
        if (degree(r) < 1) continue;
        auto e = gcd(f, a, r);
        if (degree(e) > 0 && degree(e) < n) return e;
        auto s = gcd(f, a, sub(f, half_power(f, r, d, a), UPoly{1}));
        if (degree(s) > 0 && degree(s) < n) return s;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

Matrix evaluate(const PrimeField& f, const UPoly& p, const Matrix& m) {
  const auto n = m.rows();
  Matrix acc(n, n);
  for (std::size_t k = p.size(); k-- > 0;) {
    acc = mat_mul(f, acc, m);
    for (std::size_t i = 0; i < n; ++i) acc(i, i) = f.add(acc(i, i), p[k]);
  }
  return acc;
}

UPoly minimal_polynomial(const PrimeField& f, const Matrix& m) {
  if (!m.square()) throw InputError("minimal polynomial of a non-square matrix");
  const auto n = m.rows();
  // powers I, M, M^2, ... flattened; the first dependency gives the answer
  std::vector<std::vector<PrimeField::Elem>> powers;
  Matrix cur = Matrix::identity(n);
  for (std::size_t k = 0; k <= n; ++k) {
    powers.push_back(cur.data());
    Matrix a(n * n, powers.size());
    for (std::size_t j = 0; j < powers.size(); ++j)
      for (std::size_t i = 0; i < n * n; ++i) a(i, j) = powers[j][i];
    auto null = nullspace(f, a);
    if (!null.empty()) {
      UPoly mu = null.front();
      trim(mu);
      return monic(f, mu);
    }
    cur = mat_mul(f, cur, m);
  }
  throw InternalError("minimal polynomial exceeded the matrix size");
}

}  // namespace cmwild::upoly
