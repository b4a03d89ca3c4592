#include "cmwild/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <bit>
#include <limits>
#include <numeric>

#include "cmwild/error.hpp"

namespace cmwild {

namespace {

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint32_t comp;
  int degree;
};

bool pair_before(const Pair& a, const Pair& b) {
  if (a.degree != b.degree) return a.degree < b.degree;
  if (a.comp != b.comp) return a.comp > b.comp;
  auto c = monomial_compare(a.lcm, b.lcm);
  if (c != 0) return c < 0;
  if (a.j != b.j) return a.j < b.j;
  return a.i < b.i;
}

// cur[pos..] - c * m * b, written into a fresh vector
std::vector<ModTerm> sub_mul_tail(const PrimeField& f, const std::vector<ModTerm>& cur, std::size_t pos,
                                  PrimeField::Elem c, const Monomial& m, const ModuleVector& b) {
  std::vector<ModTerm> out;
  out.reserve(cur.size() - pos + b.terms.size());
  std::size_t i = pos;
  const auto negc = f.neg(c);
  for (const auto& bt : b.terms) {
    ModTerm t{bt.mono * m, bt.comp, f.mul(bt.coef, negc)};
    while (i < cur.size() && term_greater(cur[i], t)) out.push_back(cur[i++]);
    if (i < cur.size() && cur[i].comp == t.comp && cur[i].mono == t.mono) {
      auto s = f.add(cur[i].coef, t.coef);
      if (s != 0) out.push_back({t.mono, t.comp, s});
      ++i;
    } else {
      out.push_back(t);
    }
  }
  out.insert(out.end(), cur.begin() + static_cast<std::ptrdiff_t>(i), cur.end());
  return out;
}

}  // namespace

GroebnerBasis::GroebnerBasis(PrimeField field, std::size_t nvars, std::vector<int> comp_degrees,
                             std::vector<ModuleVector> generators)
    : field_(field), nvars_(nvars), comp_degrees_(std::move(comp_degrees)) {
  build(std::move(generators));
}

const ModuleVector* GroebnerBasis::find_reducer(const ModTerm& t) const {
  if (t.comp >= by_comp_.size()) return nullptr;
  for (auto idx : by_comp_[t.comp]) {
    const auto& e = elements_[idx];
    if (e.lead().mono.divides(t.mono)) return &e;
  }
  return nullptr;
}

ModuleVector GroebnerBasis::normal_form(ModuleVector v) const {
  ModuleVector result;
  std::vector<ModTerm> cur = std::move(v.terms);
  std::size_t pos = 0;
  while (pos < cur.size()) {
    const ModTerm lt = cur[pos];
    const ModuleVector* red = find_reducer(lt);
    if (red == nullptr) {
      result.terms.push_back(lt);
      ++pos;
      continue;
    }
    auto c = field_.div(lt.coef, red->lead().coef);
    cur = sub_mul_tail(field_, cur, pos, c, lt.mono / red->lead().mono, *red);
    pos = 0;
  }
  return result;
}

std::vector<std::vector<Monomial>> GroebnerBasis::leading_monomials() const {
  std::vector<std::vector<Monomial>> out(rank());
  for (const auto& e : elements_) out[e.lead().comp].push_back(e.lead().mono);
  return out;
}

void GroebnerBasis::build(std::vector<ModuleVector> generators) {
  const bool ideal = comp_degrees_.size() == 1;
  std::vector<std::pair<int, ModuleVector>> gens;
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    for (const auto& t : g.terms) {
      if (t.comp >= comp_degrees_.size()) throw InputError("module element component out of range");
      if (t.mono.nvars() != nvars_) throw InputError("variable count mismatch in Gröbner input");
    }
    auto d = mv_degree(g, comp_degrees_);
    if (!d) throw InputError("Gröbner input is not homogeneous");
    gens.emplace_back(*d, std::move(g));
  }
  std::stable_sort(gens.begin(), gens.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  by_comp_.assign(comp_degrees_.size(), {});
  std::vector<Pair> pairs;

  auto add_element = [&](ModuleVector h) {
    h = mv_monic(field_, h);
    const std::size_t k = elements_.size();
    const auto comp = h.lead().comp;
    const Monomial lm = h.lead().mono;
    elements_.push_back(std::move(h));

    // Gebauer–Möller: drop old pairs whose lcm is hit by the new leading term
    std::erase_if(pairs, [&](const Pair& p) {
      if (p.comp != comp || !lm.divides(p.lcm)) return false;
      const auto& a = elements_[p.i].lead().mono;
      const auto& b = elements_[p.j].lead().mono;
      return lcm(a, lm) != p.lcm && lcm(b, lm) != p.lcm;
    });

    struct Cand {
      std::size_t g;
      Monomial l;
      bool coprime;
      bool keep = true;
    };
    std::vector<Cand> cands;
    for (auto g : by_comp_[comp]) {
      const auto& gm = elements_[g].lead().mono;
      cands.push_back({g, lcm(gm, lm), ideal && gm.coprime(lm)});
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
      auto c = monomial_compare(a.l, b.l);
      if (c != 0) return c < 0;
      return a.g < b.g;
    });
    for (std::size_t a = 0; a < cands.size(); ++a) {
      for (std::size_t b = 0; b < cands.size(); ++b) {
        if (a == b) continue;
        if (cands[b].l.divides(cands[a].l) && cands[b].l != cands[a].l) {
          cands[a].keep = false;
          break;
        }
      }
    }
    // equal lcms: keep one representative, none if any of them is coprime
    for (std::size_t a = 0; a < cands.size();) {
      std::size_t b = a;
      bool any_coprime = false;
      while (b < cands.size() && cands[b].l == cands[a].l) any_coprime |= cands[b++].coprime;
      for (std::size_t c = a; c < b; ++c)
        if (any_coprime || c != a) cands[c].keep = false;
      a = b;
    }
    for (const auto& c : cands) {
      if (!c.keep || c.coprime) continue;
      pairs.push_back({c.g, k, c.l, comp, c.l.degree() + comp_degrees_[comp]});
    }
    by_comp_[comp].push_back(k);
  };

  std::size_t gi = 0;
  while (gi < gens.size() || !pairs.empty()) {
    int t = std::numeric_limits<int>::max();
    if (gi < gens.size()) t = gens[gi].first;
    for (const auto& p : pairs) t = std::min(t, p.degree);

    while (gi < gens.size() && gens[gi].first == t) {
      auto r = normal_form(std::move(gens[gi].second));
      ++gi;
      if (!r.is_zero()) add_element(std::move(r));
    }

    std::vector<Pair> batch;
    std::erase_if(pairs, [&](const Pair& p) {
      if (p.degree != t) return false;
      batch.push_back(p);
      return true;
    });
    std::sort(batch.begin(), batch.end(), pair_before);
    for (const auto& p : batch) {
      const auto& f = elements_[p.i];
      const auto& g = elements_[p.j];
      auto s = mv_mul_monomial(field_, f, p.lcm / f.lead().mono);
      s = mv_sub_mul(field_, s, 1, p.lcm / g.lead().mono, g);
      auto r = normal_form(std::move(s));
      if (!r.is_zero()) add_element(std::move(r));
    }
  }

  // minimalize, then tail-reduce and sort for a canonical reduced basis
  std::vector<ModuleVector> minimal;
  for (std::size_t a = 0; a < elements_.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < elements_.size() && !redundant; ++b) {
      if (a == b || elements_[a].lead().comp != elements_[b].lead().comp) continue;
      const auto& ma = elements_[a].lead().mono;
      const auto& mb = elements_[b].lead().mono;
      redundant = mb.divides(ma) && (mb != ma || b < a);
    }
    if (!redundant) minimal.push_back(elements_[a]);
  }
  elements_ = std::move(minimal);
  std::sort(elements_.begin(), elements_.end(),
            [](const ModuleVector& a, const ModuleVector& b) { return term_greater(a.lead(), b.lead()); });
  by_comp_.assign(comp_degrees_.size(), {});
  for (std::size_t k = 0; k < elements_.size(); ++k) by_comp_[elements_[k].lead().comp].push_back(k);
  for (auto& e : elements_) {
    ModuleVector tail;
    tail.terms.assign(e.terms.begin() + 1, e.terms.end());
    auto reduced = normal_form(std::move(tail));
    ModuleVector next;
    next.terms.reserve(reduced.terms.size() + 1);
    next.terms.push_back(e.lead());
    next.terms.insert(next.terms.end(), reduced.terms.begin(), reduced.terms.end());
    e = std::move(next);
  }
}

bool GroebnerBasis::satisfies_buchberger_criterion() const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    for (std::size_t j = i + 1; j < elements_.size(); ++j) {
      const auto& f = elements_[i];
      const auto& g = elements_[j];
      if (f.lead().comp != g.lead().comp) continue;
      auto l = lcm(f.lead().mono, g.lead().mono);
      auto s = mv_mul_monomial(field_, f, l / f.lead().mono, field_.inv(f.lead().coef));
      s = mv_sub_mul(field_, s, field_.inv(g.lead().coef), l / g.lead().mono, g);
      if (!normal_form(std::move(s)).is_zero()) return false;
    }
  return true;
}

GroebnerBasis buchberger(const PrimeField& field, std::size_t nvars, const std::vector<Polynomial>& gens) {
  std::vector<ModuleVector> vs;
  vs.reserve(gens.size());
  for (const auto& g : gens) vs.push_back(mv_from_poly(g));
  return GroebnerBasis(field, nvars, {0}, std::move(vs));
}

// ---------------------------------------------------------------------------
// Hilbert series

namespace {

using IntPoly = std::vector<std::int64_t>;

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

void poly_add_shifted(IntPoly& acc, const IntPoly& b, int shift, std::int64_t sign = 1) {
  if (acc.size() < b.size() + static_cast<std::size_t>(shift)) acc.resize(b.size() + static_cast<std::size_t>(shift), 0);
  for (std::size_t i = 0; i < b.size(); ++i) acc[i + static_cast<std::size_t>(shift)] += sign * b[i];
}

IntPoly one_minus_t_pow(int e) {
  IntPoly p(static_cast<std::size_t>(e) + 1, 0);
  p[0] += 1;
  p[static_cast<std::size_t>(e)] -= 1;
  return p;
}

void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  gens = std::move(out);
}

std::size_t support_count(const Monomial& m) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < m.nvars(); ++i) c += m[i] > 0;
  return c;
}

IntPoly numerator_rec(std::vector<Monomial> gens, std::size_t nvars) {
  minimalize(gens);
  if (gens.empty()) return {1};
  if (gens.front().is_one()) return {};

  bool pairwise_coprime = true;
  for (std::size_t a = 0; a < gens.size() && pairwise_coprime; ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b)
      if (!gens[a].coprime(gens[b])) {
        pairwise_coprime = false;
        break;
      }
  if (pairwise_coprime) {
    IntPoly r{1};
    for (const auto& g : gens) r = poly_mul(r, one_minus_t_pow(g.degree()));
    return r;
  }

  // pivot on the variable shared by the most non-pure-power generators
  std::vector<std::size_t> count(nvars, 0);
  for (const auto& g : gens) {
    if (support_count(g) < 2) continue;
    for (std::size_t v = 0; v < nvars; ++v) count[v] += g[v] > 0;
  }
  std::size_t v = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
  int e = std::numeric_limits<int>::max();
  for (const auto& g : gens)
    if (g[v] > 0) e = std::min(e, g[v]);

  std::vector<Monomial> without_v, colon;
  for (const auto& g : gens) {
    if (g[v] == 0) without_v.push_back(g);
    Monomial q = g;
    q.set(v, std::max(0, g[v] - e));
    colon.push_back(q);
  }
  // HS(S/J) = HS(S/(J + x_v^e)) + t^e HS(S/(J : x_v^e))
  IntPoly result = poly_mul(one_minus_t_pow(e), numerator_rec(std::move(without_v), nvars));
  poly_add_shifted(result, numerator_rec(std::move(colon), nvars), e);
  return result;
}

__int128 binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  __int128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::vector<std::int64_t> monomial_ideal_numerator(std::vector<Monomial> gens, std::size_t nvars) {
  auto n = numerator_rec(std::move(gens), nvars);
  while (!n.empty() && n.back() == 0) n.pop_back();
  return n;
}

HilbertSeries quotient_series(const GroebnerBasis& gb) {
  HilbertSeries hs;
  hs.nvars = gb.nvars();
  auto lms = gb.leading_monomials();
  for (std::size_t c = 0; c < gb.rank(); ++c) {
    int shift = gb.comp_degrees()[c];
    if (shift < 0) throw InputError("negative generator degrees are not supported");
    poly_add_shifted(hs.numerator, monomial_ideal_numerator(lms[c], gb.nvars()), shift);
  }
  return hs.normalized();
}

std::int64_t HilbertSeries::dim(int degree) const {
  __int128 total = 0;
  for (std::size_t k = 0; k < numerator.size(); ++k) {
    std::int64_t rest = degree - static_cast<std::int64_t>(k);
    if (rest < 0) break;
    if (numerator[k] == 0) continue;
    if (nvars == 0) {
      if (rest == 0) total += numerator[k];
      continue;
    }
    total += numerator[k] * binomial(rest + static_cast<std::int64_t>(nvars) - 1,
                                     static_cast<std::int64_t>(nvars) - 1);
  }
  return static_cast<std::int64_t>(total);
}

HilbertSeries HilbertSeries::normalized() const {
  HilbertSeries r = *this;
  while (!r.numerator.empty() && r.numerator.back() == 0) r.numerator.pop_back();
  return r;
}

namespace {

// Divides by (1 - t) if possible.
bool divide_one_minus_t(std::vector<std::int64_t>& p) {
  std::int64_t sum = std::accumulate(p.begin(), p.end(), std::int64_t{0});
  if (sum != 0 || p.empty()) return false;
  // p(t) = (1 - t) q(t) ⇒ q_k = sum_{i<=k} p_i
  std::vector<std::int64_t> q(p.size() - 1, 0);
  std::int64_t acc = 0;
  for (std::size_t k = 0; k + 1 < p.size(); ++k) {
    acc += p[k];
    q[k] = acc;
  }
  p = std::move(q);
  while (!p.empty() && p.back() == 0) p.pop_back();
  return true;
}

}  // namespace

int HilbertSeries::pole_order() const {
  auto p = normalized().numerator;
  if (p.empty()) return -1;
  int order = static_cast<int>(nvars);
  while (order > 0 && divide_one_minus_t(p)) --order;
  return order;
}

bool HilbertSeries::is_polynomial() const { return pole_order() <= 0; }

std::vector<std::int64_t> HilbertSeries::as_polynomial() const {
  auto p = normalized().numerator;
  for (std::size_t i = 0; i < nvars; ++i)
    if (!divide_one_minus_t(p)) throw InternalError("Hilbert series is not a polynomial");
  return p;
}

HilbertSeries operator+(const HilbertSeries& a, const HilbertSeries& b) {
  if (a.nvars != b.nvars) throw InternalError("adding Hilbert series over different rings");
  HilbertSeries r = a;
  poly_add_shifted(r.numerator, b.numerator, 0);
  return r.normalized();
}

HilbertSeries operator-(const HilbertSeries& a, const HilbertSeries& b) {
  if (a.nvars != b.nvars) throw InternalError("subtracting Hilbert series over different rings");
  HilbertSeries r = a;
  poly_add_shifted(r.numerator, b.numerator, 0, -1);
  return r.normalized();
}

HilbertSeries HilbertSeries::shifted(int s) const {
  if (s < 0) throw InternalError("negative Hilbert series shift");
  HilbertSeries r;
  r.nvars = nvars;
  poly_add_shifted(r.numerator, numerator, s);
  return r.normalized();
}

HilbertSeries HilbertSeries::times_one_minus_t_pow(int e) const {
  HilbertSeries r;
  r.nvars = nvars;
  r.numerator = poly_mul(numerator, one_minus_t_pow(e));
  return r.normalized();
}

bool operator==(const HilbertSeries& a, const HilbertSeries& b) {
  return a.nvars == b.nvars && a.normalized().numerator == b.normalized().numerator;
}

int monomial_ideal_dimension(const std::vector<Monomial>& gens, std::size_t nvars) {
  std::vector<std::uint32_t> supports;
  for (const auto& g : gens) {
    std::uint32_t s = 0;
    for (std::size_t v = 0; v < nvars; ++v)
      if (g[v] > 0) s |= 1u << v;
    if (s == 0) return -1;
    supports.push_back(s);
  }
  int best = 0;
  for (std::uint32_t u = 0; u < (1u << nvars); ++u) {
    int size = std::popcount(u);
    if (size <= best) continue;
    bool ok = true;
    for (auto s : supports)
      if ((s & ~u) == 0) {
        ok = false;
        break;
      }
    if (ok) best = size;
  }
  return best;
}

}  // namespace cmwild
