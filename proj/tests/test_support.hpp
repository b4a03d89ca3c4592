#pragma once

#include <random>
#include <vector>

#include <algorithm>

#include "cmwild/linalg.hpp"
#include "cmwild/polynomial.hpp"

namespace cmwild::testutil {

/// Random polynomial with up to `max_terms` terms of total degree <= max_degree.
inline Polynomial random_poly(std::mt19937_64& rng, const PolyRingPtr& ring, int max_degree, int max_terms) {
  std::vector<Term> terms;
  int count = static_cast<int>(rng() % static_cast<unsigned>(max_terms + 1));
  for (int k = 0; k < count; ++k) {
    Monomial m(ring->nvars());
    int budget = static_cast<int>(rng() % static_cast<unsigned>(max_degree + 1));
    for (int b = 0; b < budget; ++b) {
      auto v = rng() % ring->nvars();
      m.set(v, m[v] + 1);
    }
    terms.push_back({m, ring->field().random(rng)});
  }
  return Polynomial(ring, std::move(terms));
}

/// Random homogeneous polynomial of the given degree.
inline Polynomial random_homogeneous(std::mt19937_64& rng, const PolyRingPtr& ring, int degree, int max_terms) {
  std::vector<Term> terms;
  int count = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_terms));
  for (int k = 0; k < count; ++k) {
    Monomial m(ring->nvars());
    for (int b = 0; b < degree; ++b) {
      auto v = rng() % ring->nvars();
      m.set(v, m[v] + 1);
    }
    terms.push_back({m, ring->field().random(rng)});
  }
  return Polynomial(ring, std::move(terms));
}

/// dim_k (S/(gens))_t by rank of the span of all degree-t monomial multiples
/// of the generators. No Gröbner basis involved.
inline std::int64_t degree_dim_oracle(const PolyRingPtr& ring, const std::vector<Polynomial>& gens, int t) {
  auto monos = monomials_of_degree(ring->nvars(), t);
  std::vector<std::vector<PrimeField::Elem>> rows;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    int dg = *g.homogeneous_degree();
    if (dg > t) continue;
    for (const auto& m : monomials_of_degree(ring->nvars(), t - dg)) {
      std::vector<PrimeField::Elem> row(monos.size(), 0);
      const auto prod = g.times_monomial(m);
      for (const auto& term : prod.terms()) {
        auto it = std::find(monos.begin(), monos.end(), term.mono);
        row[static_cast<std::size_t>(it - monos.begin())] = term.coef;
      }
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) return static_cast<std::int64_t>(monos.size());
  Matrix m(rows.size(), monos.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < monos.size(); ++j) m(i, j) = rows[i][j];
  return static_cast<std::int64_t>(monos.size() - rank(ring->field(), m));
}

}  // namespace cmwild::testutil
