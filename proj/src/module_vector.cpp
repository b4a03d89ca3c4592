#include "cmwild/module_vector.hpp"

#include <algorithm>

namespace cmwild {

ModuleVector canonical(const PrimeField& f, std::vector<ModTerm> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  ModuleVector out;
  out.terms.reserve(terms.size());
  for (auto& t : terms) {
    t.coef %= f.characteristic();
    if (!out.terms.empty() && out.terms.back().comp == t.comp && out.terms.back().mono == t.mono) {
      out.terms.back().coef = f.add(out.terms.back().coef, t.coef);
      if (out.terms.back().coef == 0) out.terms.pop_back();
    } else if (t.coef != 0) {
      out.terms.push_back(t);
    }
  }
  return out;
}

ModuleVector mv_add(const PrimeField& f, const ModuleVector& a, const ModuleVector& b) {
  ModuleVector out;
  out.terms.reserve(a.terms.size() + b.terms.size());
  std::size_t i = 0, j = 0;
  const auto& x = a.terms;
  const auto& y = b.terms;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && term_greater(x[i], y[j]))) {
      out.terms.push_back(x[i++]);
    } else if (i == x.size() || term_greater(y[j], x[i])) {
      out.terms.push_back(y[j++]);
    } else {
      auto c = f.add(x[i].coef, y[j].coef);
      if (c != 0) out.terms.push_back({x[i].mono, x[i].comp, c});
      ++i;
      ++j;
    }
  }
  return out;
}

ModuleVector mv_sub_mul(const PrimeField& f, const ModuleVector& a, PrimeField::Elem c, const Monomial& m,
                        const ModuleVector& b) {
  ModuleVector out;
  out.terms.reserve(a.terms.size() + b.terms.size());
  const auto& x = a.terms;
  std::size_t i = 0;
  const auto negc = f.neg(c);
  for (const auto& bt : b.terms) {
    ModTerm t{bt.mono * m, bt.comp, f.mul(bt.coef, negc)};
    while (i < x.size() && term_greater(x[i], t)) out.terms.push_back(x[i++]);
    if (i < x.size() && x[i].comp == t.comp && x[i].mono == t.mono) {
      auto s = f.add(x[i].coef, t.coef);
      if (s != 0) out.terms.push_back({t.mono, t.comp, s});
      ++i;
    } else {
      out.terms.push_back(t);
    }
  }
  while (i < x.size()) out.terms.push_back(x[i++]);
  return out;
}

ModuleVector mv_scale(const PrimeField& f, const ModuleVector& a, PrimeField::Elem c) {
  ModuleVector out;
  if (c == 0) return out;
  out.terms = a.terms;
  for (auto& t : out.terms) t.coef = f.mul(t.coef, c);
  return out;
}

ModuleVector mv_mul_monomial(const PrimeField& f, const ModuleVector& a, const Monomial& m, PrimeField::Elem c) {
  ModuleVector out;
  if (c == 0) return out;
  out.terms.reserve(a.terms.size());
  for (const auto& t : a.terms) out.terms.push_back({t.mono * m, t.comp, f.mul(t.coef, c)});
  return out;
}

ModuleVector mv_mul_poly(const PrimeField& f, const std::vector<Term>& p, const ModuleVector& v) {
  std::vector<ModTerm> prod;
  prod.reserve(p.size() * v.terms.size());
  for (const auto& s : p)
    for (const auto& t : v.terms) prod.push_back({s.mono * t.mono, t.comp, f.mul(s.coef, t.coef)});
  return canonical(f, std::move(prod));
}

ModuleVector mv_monic(const PrimeField& f, const ModuleVector& a) {
  if (a.is_zero() || a.lead().coef == 1) return a;
  return mv_scale(f, a, f.inv(a.lead().coef));
}

ModuleVector mv_relabel(const PrimeField& f, const ModuleVector& a, const std::vector<std::uint32_t>& map) {
  std::vector<ModTerm> terms = a.terms;
  for (auto& t : terms) t.comp = map[t.comp];
  std::sort(terms.begin(), terms.end(), term_greater);
  (void)f;
  return ModuleVector{std::move(terms)};
}

ModuleVector mv_unit(std::size_t nvars, std::uint32_t comp) {
  return ModuleVector{{ModTerm{Monomial(nvars), comp, 1}}};
}

ModuleVector mv_from_poly(const Polynomial& p, std::uint32_t comp) {
  ModuleVector out;
  out.terms.reserve(p.size());
  for (const auto& t : p.terms()) out.terms.push_back({t.mono, comp, t.coef});
  return out;
}

Polynomial mv_component(const ModuleVector& v, std::uint32_t comp, const PolyRingPtr& ring) {
  std::vector<Term> terms;
  for (const auto& t : v.terms)
    if (t.comp == comp) terms.push_back({t.mono, t.coef});
  return Polynomial(ring, std::move(terms));
}

ModuleVector mv_from_polys(const std::vector<Polynomial>& entries) {
  ModuleVector out;
  for (std::uint32_t c = 0; c < entries.size(); ++c)
    for (const auto& t : entries[c].terms()) out.terms.push_back({t.mono, c, t.coef});
  return out;  // components ascend and each block is already descending
}

std::optional<int> mv_degree(const ModuleVector& v, const std::vector<int>& comp_degrees) {
  if (v.is_zero()) return std::nullopt;
  int d = v.lead().mono.degree() + comp_degrees.at(v.lead().comp);
  for (const auto& t : v.terms)
    if (t.mono.degree() + comp_degrees.at(t.comp) != d) return std::nullopt;
  return d;
}

}  // namespace cmwild
