#include "cmwild/conjugacy.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "cmwild/error.hpp"
#include "cmwild/polynomial.hpp"
#include "cmwild/upoly.hpp"

namespace cmwild {

std::string to_string(IsoCertificate::Outcome o) {
  switch (o) {
    case IsoCertificate::Outcome::Isomorphic:
      return "Isomorphic";
    case IsoCertificate::Outcome::NotIsomorphic:
      return "NotIsomorphic";
    case IsoCertificate::Outcome::Undecided:
      return "Undecided";
  }
  return "Undecided";
}

std::string to_string(IndecomposabilityResult::Outcome o) {
  switch (o) {
    case IndecomposabilityResult::Outcome::Indecomposable:
      return "Indecomposable";
    case IndecomposabilityResult::Outcome::Decomposable:
      return "Decomposable";
    case IndecomposabilityResult::Outcome::Undecided:
      return "Undecided";
  }
  return "Undecided";
}

namespace {

void check_square(const Matrix& m, std::size_t n, const char* what) {
  if (m.rows() != n || m.cols() != n) throw InputError(std::string(what) + " must be " + std::to_string(n) + "x" +
                                                       std::to_string(n));
}

Matrix combine(const PrimeField& f, const std::vector<Matrix>& basis, const std::vector<PrimeField::Elem>& coeffs) {
  Matrix out(basis.front().rows(), basis.front().cols());
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (coeffs[i] != 0) out = mat_add(f, out, mat_scale(f, basis[i], coeffs[i]));
  return out;
}

// Advances a base-p counter; false after wrapping to zero.
bool next_tuple(std::vector<PrimeField::Elem>& v, std::uint32_t p) {
  for (auto& x : v) {
    if (++x < p) return true;
    x = 0;
  }
  return false;
}

bool tuple_count_at_most(std::uint32_t p, std::size_t k, std::uint64_t limit) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    total *= p;
    if (total > limit) return false;
  }
  return true;
}

// det(Σ t_i N_i) as a polynomial in the t_i, by Laplace expansion along rows
// memoized on the set of columns still unused.
Polynomial determinant_polynomial(const std::vector<std::vector<Polynomial>>& m, const PolyRingPtr& ring) {
  const std::size_t n = m.size();
  std::map<std::uint32_t, Polynomial> memo;
  auto rec = [&](auto&& self, std::size_t row, std::uint32_t used) -> Polynomial {
    if (row == n) return Polynomial::constant(ring, 1);
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    Polynomial acc(ring);
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (used & (1u << c)) continue;
      if (!m[row][c].is_zero()) {
        auto term = m[row][c] * self(self, row + 1, used | (1u << c));
        acc = sign > 0 ? acc + term : acc - term;
      }
      sign = -sign;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return rec(rec, 0, 0);
}

}  // namespace

std::vector<Matrix> intertwiners(const PrimeField& f, const std::vector<std::pair<Matrix, Matrix>>& pairs) {
  if (pairs.empty()) throw InputError("no matrices given");
  const std::size_t n = pairs.front().first.rows();
  Matrix eqs(pairs.size() * n * n, n * n);
  std::size_t row = 0;
  for (const auto& [a, b] : pairs) {
    check_square(a, n, "matrix");
    check_square(b, n, "matrix");
    // entry (i,j) of σA - Bσ, unknown σ_{ab} at column a n + b
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j, ++row)
        for (std::size_t k = 0; k < n; ++k) {
          eqs(row, i * n + k) = f.add(eqs(row, i * n + k), a(k, j));
          eqs(row, k * n + j) = f.sub(eqs(row, k * n + j), b(i, k));
        }
  }
  std::vector<Matrix> out;
  for (auto& v : nullspace(f, eqs)) out.emplace_back(n, n, std::move(v));
  return out;
}

IsoCertificate iso_test(const PrimeField& f, const Matrix& ax, const std::optional<Matrix>& ay, const Matrix& bx,
                        const std::optional<Matrix>& by, const ConjugacyOptions& opts) {
  if (ay.has_value() != by.has_value()) throw InputError("both pairs must have the same number of matrices");
  const std::size_t n = ax.rows();
  if (n == 0) throw InputError("matrices must be nonempty");
  std::vector<std::pair<Matrix, Matrix>> pairs{{ax, bx}};
  if (ay) pairs.emplace_back(*ay, *by);
  IsoCertificate cert;

  auto found = [&](Matrix s, std::string method) {
    cert.outcome = IsoCertificate::Outcome::Isomorphic;
    cert.sigma = std::move(s);
    cert.method = std::move(method);
    cert.reason = "invertible intertwiner found";
    return cert;
  };
  auto absent = [&](std::string method, std::string reason) {
    cert.outcome = IsoCertificate::Outcome::NotIsomorphic;
    cert.method = std::move(method);
    cert.reason = std::move(reason);
    return cert;
  };

  if (ax == bx && (!ay || *ay == *by)) {
    cert.intertwiner_dim = intertwiners(f, pairs).size();
    return found(Matrix::identity(n), "basis");
  }
  const auto basis = intertwiners(f, pairs);
  cert.intertwiner_dim = basis.size();
  if (basis.empty()) return absent("zero-space", "the only intertwiner is zero");

  for (const auto& b : basis)
    if (determinant(f, b) != 0) return found(b, "basis");

  std::mt19937_64 rng(opts.seed);
  std::vector<PrimeField::Elem> coeffs(basis.size());
  for (int s = 0; s < opts.samples; ++s) {
    for (auto& c : coeffs) c = f.random(rng);
    auto sigma = combine(f, basis, coeffs);
    if (determinant(f, sigma) != 0) return found(std::move(sigma), "sampling");
  }

  const auto p = f.characteristic();
  if (tuple_count_at_most(p, basis.size(), opts.exhaustive_limit)) {
    std::fill(coeffs.begin(), coeffs.end(), 0);
    while (next_tuple(coeffs, p)) {
      auto sigma = combine(f, basis, coeffs);
      if (determinant(f, sigma) != 0) return found(std::move(sigma), "exhaustive");
    }
    return absent("exhaustive", "no invertible element in the intertwiner space (exhaustive)");
  }

  if (basis.size() > kMaxVars || n > 16) {
    cert.method = "sampling";
    cert.reason = "intertwiner space too large to certify";
    return cert;
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < basis.size(); ++i) names.push_back("t" + std::to_string(i));
  auto ring = make_ring(names, p);
  std::vector<std::vector<Polynomial>> generic(n, std::vector<Polynomial>(n, Polynomial(ring)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Term> terms;
      for (std::size_t k = 0; k < basis.size(); ++k)
        if (basis[k](i, j) != 0) terms.push_back({Monomial::variable(basis.size(), k), basis[k](i, j)});
      generic[i][j] = Polynomial(ring, std::move(terms));
    }
  auto det = determinant_polynomial(generic, ring);
  if (det.is_zero()) return absent("determinant", "the determinant vanishes on the whole intertwiner space");

  // A nonzero polynomial of degree n keeps a nonzero specialization among any
  // n + 1 values of each variable in turn.
  if (p <= n) {
    cert.method = "determinant";
    cert.reason = "determinant is nonzero but the field is too small to locate a non-root";
    return cert;
  }
  std::vector<Polynomial> images;
  for (std::size_t k = 0; k < basis.size(); ++k) images.push_back(Polynomial::variable(ring, k));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    bool ok = false;
    for (std::uint32_t v = 0; v <= n && !ok; ++v) {
      auto trial = images;
      trial[k] = Polynomial::constant(ring, v);
      if (!det.substitute(trial).is_zero()) {
        images = std::move(trial);
        ok = true;
      }
    }
    if (!ok) throw InternalError("determinant specialization failed");
  }
  for (std::size_t k = 0; k < basis.size(); ++k) coeffs[k] = images[k].constant_coefficient();
  auto sigma = combine(f, basis, coeffs);
  if (determinant(f, sigma) == 0) throw InternalError("specialized intertwiner is singular");
  return found(std::move(sigma), "determinant");
}

namespace {

// Coordinates of matrices in a linearly independent family.
class Coordinates {
 public:
  Coordinates(const PrimeField& f, const std::vector<Matrix>& basis) : field_(f), k_(basis.size()) {
    const std::size_t len = basis.front().data().size();
    Matrix a(len, k_);
    for (std::size_t j = 0; j < k_; ++j)
      for (std::size_t i = 0; i < len; ++i) a(i, j) = basis[j].data()[i];
    // pick k independent rows, then invert that square block
    Matrix at(k_, len);
    for (std::size_t i = 0; i < len; ++i)
      for (std::size_t j = 0; j < k_; ++j) at(j, i) = a(i, j);
    rows_ = rref(f, at);
    Matrix block(k_, k_);
    for (std::size_t r = 0; r < k_; ++r)
      for (std::size_t j = 0; j < k_; ++j) block(r, j) = a(rows_[r], j);
    auto inv = inverse(f, block);
    if (!inv) throw InternalError("commutant basis is dependent");
    inv_ = std::move(*inv);
  }

  std::vector<PrimeField::Elem> of(const Matrix& m) const {
    std::vector<PrimeField::Elem> out(k_, 0);
    for (std::size_t i = 0; i < k_; ++i)
      for (std::size_t r = 0; r < k_; ++r)
        out[i] = field_.add(out[i], field_.mul(inv_(i, r), m.data()[rows_[r]]));
    return out;
  }

 private:
  PrimeField field_;
  std::size_t k_;
  std::vector<std::size_t> rows_;
  Matrix inv_;
};

bool is_nontrivial_idempotent(const PrimeField& f, const Matrix& e) {
  return mat_mul(f, e, e) == e && !e.is_zero() && e != Matrix::identity(e.rows());
}

// A nontrivial idempotent in F_p[a] when the minimal polynomial of a has two
// coprime nonconstant factors.
std::optional<Matrix> split(const PrimeField& f, const Matrix& a, std::mt19937_64& rng) {
  using namespace upoly;
  const auto mu = minimal_polynomial(f, a);
  const auto rad = squarefree_part(f, mu);
  auto g0 = proper_factor(f, rad, rng);
  if (!g0) return std::nullopt;
  // part of mu supported on the irreducible factors of g0
  UPoly part{1}, rest = mu;
  for (auto g = gcd(f, rest, *g0); degree(g) > 0; g = gcd(f, rest, *g0)) {
    rest = divmod(f, rest, g).first;
    part = mul(f, part, g);
  }
  auto bz = ext_gcd(f, part, rest);
  if (bz.g != UPoly{1}) throw InternalError("coprime splitting failed");
  auto e = evaluate(f, mul(f, bz.u, part), a);
  if (!is_nontrivial_idempotent(f, e)) return std::nullopt;
  return e;
}

}  // namespace

IndecomposabilityResult indecomposability_test(const PrimeField& f, const Matrix& ax, const std::optional<Matrix>& ay,
                                               const ConjugacyOptions& opts) {
  const std::size_t n = ax.rows();
  if (n == 0) throw InputError("matrices must be nonempty");
  check_square(ax, n, "A_x");
  if (ay) check_square(*ay, n, "A_y");
  std::vector<std::pair<Matrix, Matrix>> pairs{{ax, ax}};
  if (ay) pairs.emplace_back(*ay, *ay);
  const auto basis = intertwiners(f, pairs);
  IndecomposabilityResult res;
  res.commutant_dim = basis.size();
  const auto p = f.characteristic();

  auto decomposable = [&](Matrix e, std::string method) {
    res.outcome = IndecomposabilityResult::Outcome::Decomposable;
    res.idempotent = std::move(e);
    res.method = std::move(method);
    return res;
  };

  if (basis.size() == 1) {
    res.outcome = IndecomposabilityResult::Outcome::Indecomposable;
    res.method = "scalar-commutant";
    return res;
  }

  // look for an element of the commutant whose minimal polynomial splits
  std::mt19937_64 rng(opts.seed);
  for (const auto& b : basis)
    if (auto e = split(f, b, rng)) return decomposable(std::move(*e), "splitting");

  const Coordinates coords(f, basis);
  if (p > n) {
    // trace-form radical: valid when p exceeds the matrix size
    const std::size_t k = basis.size();
    Matrix gram(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) gram(i, j) = trace(f, mat_mul(f, basis[i], basis[j]));
    EchelonBasis radical(f, k);
    for (auto& v : nullspace(f, gram)) radical.insert(std::move(v));
    res.radical_dim = radical.size();

    // quotient coordinates: components that stay free after reduction mod J
    std::vector<std::size_t> free_coords;
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<PrimeField::Elem> e(k, 0);
      e[j] = 1;
      auto r = radical.reduce(e);
      if (r == e) free_coords.push_back(j);
    }
    // reduce() zeroes pivot positions; the remaining positions coordinatize C/J
    auto project = [&](const Matrix& m) {
      auto r = radical.reduce(coords.of(m));
      std::vector<PrimeField::Elem> out;
      for (auto j : free_coords) out.push_back(r[j]);
      return out;
    };
    const std::size_t q = free_coords.size();
    if (q + radical.size() != k) throw InternalError("radical quotient has the wrong dimension");

    bool commutative = true;
    for (std::size_t i = 0; i < q && commutative; ++i)
      for (std::size_t j = i + 1; j < q && commutative; ++j) {
        const auto& a = basis[free_coords[i]];
        const auto& b = basis[free_coords[j]];
        auto c = project(mat_sub(f, mat_mul(f, a, b), mat_mul(f, b, a)));
        commutative = std::all_of(c.begin(), c.end(), [](auto x) { return x == 0; });
      }
    if (commutative) {
      Matrix frob(q, q);
      for (std::size_t j = 0; j < q; ++j) {
        auto img = project(mat_pow(f, basis[free_coords[j]], p));
        for (std::size_t i = 0; i < q; ++i) frob(i, j) = img[i];
      }
      Matrix shifted = frob;
      for (std::size_t i = 0; i < q; ++i) shifted(i, i) = f.sub(shifted(i, i), 1);
      if (q - rank(f, shifted) == 1) {
        res.outcome = IndecomposabilityResult::Outcome::Indecomposable;
        res.method = "radical+frobenius";
        return res;
      }
      // lifts of fixed vectors have split minimal polynomials
      for (const auto& v : nullspace(f, shifted)) {
        std::vector<PrimeField::Elem> full(k, 0);
        for (std::size_t i = 0; i < q; ++i) full[free_coords[i]] = v[i];
        if (auto e = split(f, combine(f, basis, full), rng)) return decomposable(std::move(*e), "radical+frobenius");
      }
    }
  }

  std::vector<PrimeField::Elem> coeffs(basis.size());
  for (int s = 0; s < opts.samples; ++s) {
    for (auto& c : coeffs) c = f.random(rng);
    if (auto e = split(f, combine(f, basis, coeffs), rng)) return decomposable(std::move(*e), "splitting");
  }

  if (tuple_count_at_most(p, basis.size(), opts.exhaustive_limit)) {
    std::fill(coeffs.begin(), coeffs.end(), 0);
    while (next_tuple(coeffs, p)) {
      auto e = combine(f, basis, coeffs);
      if (is_nontrivial_idempotent(f, e)) return decomposable(std::move(e), "exhaustive");
    }
    res.outcome = IndecomposabilityResult::Outcome::Indecomposable;
    res.method = "exhaustive";
    return res;
  }
  res.method = "splitting";
  return res;
}

}  // namespace cmwild
