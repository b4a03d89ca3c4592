#include "cmwild/resolution.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

#include "cmwild/error.hpp"
#include "cmwild/linalg.hpp"

namespace cmwild {

ModuleVector FreeMap::apply(const PrimeField& f, const ModuleVector& v) const {
  std::vector<ModTerm> terms;
  for (const auto& t : v.terms) {
    if (t.comp >= columns.size()) throw InputError("vector component outside the source module");
    for (const auto& c : columns[t.comp].terms) terms.push_back({c.mono * t.mono, c.comp, f.mul(c.coef, t.coef)});
  }
  return canonical(f, std::move(terms));
}

bool FreeMap::is_homogeneous() const {
  if (columns.size() != source.rank()) return false;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].is_zero()) continue;
    auto d = mv_degree(columns[j], target.degrees);
    if (!d || *d != source.degrees[j]) return false;
  }
  return true;
}

FreeMap compose(const QuotientRingSpec& ring, const FreeMap& b, const FreeMap& a) {
  if (a.target != b.source) throw InputError("composition of incompatible maps");
  FreeMap out{a.source, b.target, {}};
  for (const auto& col : a.columns) out.columns.push_back(reduce_mod_ideal(ring, b.apply(ring.field(), col)));
  return out;
}

FreeMap identity_map(const GradedFreeModule& m, std::size_t nvars) {
  FreeMap out{m, m, {}};
  for (std::uint32_t j = 0; j < m.rank(); ++j) out.columns.push_back(mv_unit(nvars, j));
  return out;
}

ModuleVector reduce_mod_ideal(const QuotientRingSpec& ring, const ModuleVector& v) {
  const auto& gb = ring.ideal_basis();
  if (gb.size() == 0) return v;
  ModuleVector out;
  std::size_t i = 0;
  while (i < v.terms.size()) {
    const auto comp = v.terms[i].comp;
    ModuleVector block;
    for (; i < v.terms.size() && v.terms[i].comp == comp; ++i) block.terms.push_back({v.terms[i].mono, 0, v.terms[i].coef});
    for (auto& t : gb.normal_form(std::move(block)).terms) out.terms.push_back({t.mono, comp, t.coef});
  }
  return out;
}

ModulePresentation::ModulePresentation(RingPtr ring, GradedFreeModule ambient, std::vector<ModuleVector> relations)
    : ring_(std::move(ring)), ambient_(std::move(ambient)), relations_(std::move(relations)) {
  sub_ = std::make_shared<const Submodule>(ring_, ambient_, relations_);
}

ModulePresentation ModulePresentation::with_relations(const std::vector<ModuleVector>& extra) const {
  auto rels = relations_;
  rels.insert(rels.end(), extra.begin(), extra.end());
  return {ring_, ambient_, std::move(rels)};
}

Lifter::Lifter(RingPtr ring, FreeMap map, std::vector<ModuleVector> target_relations)
    : ring_(std::move(ring)), map_(std::move(map)) {
  if (!map_.is_homogeneous()) throw InputError("map is not homogeneous");
  const auto g = static_cast<std::uint32_t>(map_.target.rank());
  const auto f = static_cast<std::uint32_t>(map_.source.rank());
  offset_ = g;
  const auto nvars = ring_->nvars();

  std::vector<int> degrees = map_.target.degrees;
  degrees.insert(degrees.end(), map_.source.degrees.begin(), map_.source.degrees.end());

  std::vector<ModuleVector> gens;
  for (std::uint32_t j = 0; j < f; ++j) {
    ModuleVector v = map_.columns[j];
    v.terms.push_back({Monomial(nvars), g + j, 1});
    gens.push_back(std::move(v));
  }
  for (auto& n : target_relations) {
    for (const auto& t : n.terms)
      if (t.comp >= g) throw InputError("relation outside the target module");
    gens.push_back(std::move(n));
  }
  for (const auto& h : ring_->ideal_basis().elements())
    for (std::uint32_t k = 0; k < g + f; ++k) {
      ModuleVector v = h;
      for (auto& t : v.terms) t.comp = k;
      gens.push_back(std::move(v));
    }
  gb_ = GroebnerBasis(ring_->field(), nvars, std::move(degrees), std::move(gens));
}

std::vector<ModuleVector> Lifter::kernel() const {
  std::vector<ModuleVector> out;
  for (const auto& e : gb_.elements()) {
    if (e.lead().comp < offset_) continue;
    ModuleVector v = e;
    for (auto& t : v.terms) t.comp -= offset_;
    v = reduce_mod_ideal(*ring_, v);
    if (!v.is_zero()) out.push_back(std::move(v));
  }
  return out;
}

std::optional<ModuleVector> Lifter::lift(const ModuleVector& v) const {
  auto r = gb_.normal_form(v);
  if (!r.is_zero() && r.lead().comp < offset_) return std::nullopt;
  for (auto& t : r.terms) t.comp -= offset_;
  return reduce_mod_ideal(*ring_, mv_scale(ring_->field(), r, ring_->field().neg(1)));
}

std::vector<std::size_t> minimal_subset(const RingPtr& ring, const GradedFreeModule& ambient,
                                        const std::vector<ModuleVector>& base,
                                        const std::vector<ModuleVector>& candidates) {
  std::vector<std::pair<int, std::size_t>> order;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (candidates[i].is_zero()) continue;
    auto d = mv_degree(candidates[i], ambient.degrees);
    if (!d) throw InputError("inhomogeneous module element");
    order.emplace_back(*d, i);
  }
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<std::size_t> kept;
  std::size_t pos = 0;
  while (pos < order.size()) {
    const int t = order[pos].first;
    auto gens = base;
    for (auto k : kept) gens.push_back(candidates[k]);
    Submodule sub(ring, ambient, std::move(gens));

    std::map<std::pair<std::uint32_t, std::vector<int>>, std::size_t> coord;
    for (const auto& m : sub.standard_monomials(t)) coord.emplace(std::pair{m.comp, m.mono.exponents()}, coord.size());
    EchelonBasis span(ring->field(), coord.size());
    for (; pos < order.size() && order[pos].first == t; ++pos) {
      auto r = sub.normal_form(candidates[order[pos].second]);
      std::vector<PrimeField::Elem> vec(coord.size(), 0);
      for (const auto& term : r.terms) vec[coord.at({term.comp, term.mono.exponents()})] = term.coef;
      if (span.insert(std::move(vec))) kept.push_back(order[pos].second);
    }
  }
  return kept;
}

GradedFreeModule Resolution::module(int i) const {
  if (i < 0 || i >= static_cast<int>(modules.size())) return {};
  return modules[static_cast<std::size_t>(i)];
}

namespace {

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Columns picked from `cols` in the order of `idx`, re-sorted by degree.
FreeMap map_from_columns(const GradedFreeModule& target, const std::vector<ModuleVector>& cols,
                         std::vector<std::size_t> idx) {
  std::vector<int> deg(cols.size(), 0);
  for (auto i : idx) deg[i] = *mv_degree(cols[i], target.degrees);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return deg[a] < deg[b]; });
  FreeMap out{{}, target, {}};
  for (auto i : idx) {
    out.source.degrees.push_back(deg[i]);
    out.columns.push_back(cols[i]);
  }
  return out;
}

}  // namespace

Resolution koszul_complex(const RingPtr& ring, const std::vector<Polynomial>& y, std::size_t copies) {
  if (copies == 0) throw InputError("Koszul complex needs at least one copy");
  for (const auto& yi : y)
    if (yi.is_zero() || !yi.is_homogeneous() || *yi.homogeneous_degree() <= 0)
      throw InputError("Koszul complex needs homogeneous elements of positive degree");
  const auto& f = ring->field();
  const auto d = y.size();
  const auto nvars = ring->nvars();

  Resolution res;
  res.ring = ring;
  std::vector<std::vector<std::vector<std::size_t>>> subsets;
  for (std::size_t i = 0; i <= d; ++i) {
    subsets.push_back(subsets_of_size(d, i));
    GradedFreeModule m;
    for (const auto& s : subsets.back()) {
      int deg = 0;
      for (auto k : s) deg += *y[k].homogeneous_degree();
      for (std::size_t c = 0; c < copies; ++c) m.degrees.push_back(deg);
    }
    res.modules.push_back(std::move(m));
  }
  for (std::size_t i = 1; i <= d; ++i) {
    const auto& lower = subsets[i - 1];
    FreeMap map{res.modules[i], res.modules[i - 1], {}};
    for (const auto& s : subsets[i]) {
      for (std::size_t c = 0; c < copies; ++c) {
        std::vector<ModTerm> terms;
        for (std::size_t k = 0; k < s.size(); ++k) {
          auto rest = s;
          rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
          auto pos = static_cast<std::size_t>(std::find(lower.begin(), lower.end(), rest) - lower.begin());
          auto comp = static_cast<std::uint32_t>(pos * copies + c);
          const auto sign = (k % 2 == 0) ? 1u : f.neg(1);
          for (const auto& t : y[s[k]].terms()) terms.push_back({t.mono, comp, f.mul(sign, t.coef)});
        }
        map.columns.push_back(reduce_mod_ideal(*ring, canonical(f, std::move(terms))));
      }
    }
    res.maps.push_back(std::move(map));
  }
  res.augmentation = identity_map(res.modules[0], nvars);
  for (const auto& yi : y)
    for (std::uint32_t c = 0; c < copies; ++c) res.target_relations.push_back(mv_from_poly(yi, c));
  res.minimal = has_no_unit_entries(res);
  return res;
}

FreeMap syzygies(const RingPtr& ring, const FreeMap& phi, const std::vector<ModuleVector>& target_relations) {
  Lifter lifter(ring, phi, target_relations);
  auto ker = lifter.kernel();
  return map_from_columns(phi.source, ker, minimal_subset(ring, phi.source, {}, ker));
}

Resolution minimal_resolution(const ModulePresentation& pres, int k) {
  if (k < 0) throw InputError("resolution length must be nonnegative");
  const auto& ring = pres.ring();
  const auto nvars = ring->nvars();
  const auto& g = pres.ambient();

  Resolution res;
  res.ring = ring;
  res.target_relations = pres.relations();

  std::vector<ModuleVector> units;
  for (std::uint32_t j = 0; j < g.rank(); ++j) units.push_back(mv_unit(nvars, j));
  auto f0 = map_from_columns(g, units, minimal_subset(ring, g, pres.relations(), units));
  res.modules.push_back(f0.source);
  res.augmentation = f0;

  // When F_0 keeps every generator of G, the given relations are natural
  // first candidates for the kernel generators of δ_0.
  std::vector<ModuleVector> preferred;
  if (f0.source.rank() == g.rank()) {
    std::vector<std::uint32_t> to_f0(g.rank());
    for (std::uint32_t j = 0; j < f0.columns.size(); ++j) to_f0[f0.columns[j].lead().comp] = j;
    for (const auto& n : pres.relations()) preferred.push_back(reduce_mod_ideal(*ring, mv_relabel(ring->field(), n, to_f0)));
  }

  res.lifters.push_back(std::make_shared<const Lifter>(ring, res.augmentation, pres.relations()));
  for (int i = 1; i <= k; ++i) {
    auto candidates = std::move(preferred);
    preferred.clear();
    auto ker = res.lifters.back()->kernel();
    candidates.insert(candidates.end(), ker.begin(), ker.end());
    const auto& fprev = res.modules.back();
    auto delta = map_from_columns(fprev, candidates, minimal_subset(ring, fprev, {}, candidates));
    if (delta.columns.empty()) {
      res.complete = true;
      break;
    }
    res.modules.push_back(delta.source);
    res.maps.push_back(std::move(delta));
    if (i < k) res.lifters.push_back(std::make_shared<const Lifter>(ring, res.maps.back()));
  }
  res.minimal = has_no_unit_entries(res);
  if (!res.minimal) throw InternalError("minimal generator selection left a unit entry");
  return res;
}

BettiTable betti_table(const Resolution& res) {
  BettiTable table;
  for (std::size_t i = 0; i < res.modules.size(); ++i)
    for (int d : res.modules[i].degrees) ++table[{static_cast<int>(i), d}];
  return table;
}

std::string betti_json(const Resolution& res) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [key, rank] : betti_table(res)) rows.push_back({{"i", key.first}, {"j", key.second}, {"rank", rank}});
  nlohmann::json out{{"betti", rows}, {"minimal", res.minimal}};
  return out.dump();
}

bool is_complex(const Resolution& res) {
  const auto& ring = *res.ring;
  if (res.length() >= 1) {
    Submodule n(res.ring, res.augmentation.target, res.target_relations);
    auto top = compose(ring, res.augmentation, res.map(1));
    for (const auto& c : top.columns)
      if (!n.contains(c)) return false;
  }
  for (int i = 2; i <= res.length(); ++i) {
    auto c = compose(ring, res.map(i - 1), res.map(i));
    for (const auto& col : c.columns)
      if (!col.is_zero()) return false;
  }
  return true;
}

bool is_exact(const Resolution& res) {
  for (int i = 0; i < res.length(); ++i) {
    std::shared_ptr<const Lifter> lifter;
    if (static_cast<std::size_t>(i) < res.lifters.size()) {
      lifter = res.lifters[static_cast<std::size_t>(i)];
    } else if (i == 0) {
      lifter = std::make_shared<const Lifter>(res.ring, res.augmentation, res.target_relations);
    } else {
      lifter = std::make_shared<const Lifter>(res.ring, res.map(i));
    }
    auto ker = lifter->kernel();
    const auto& image = res.map(i + 1).columns;
    const auto fi = res.module(i);
    Submodule ker_sub(res.ring, fi, ker), image_sub(res.ring, fi, image);
    for (const auto& v : image)
      if (!ker_sub.contains(v)) return false;
    for (const auto& v : ker)
      if (!image_sub.contains(v)) return false;
  }
  return true;
}

bool has_no_unit_entries(const Resolution& res) {
  for (const auto& m : res.maps)
    for (const auto& col : m.columns)
      for (const auto& t : col.terms)
        if (t.mono.is_one()) return false;
  return true;
}

ModulePresentation syzygy_module(const Resolution& res, int i) {
  if (i < 0) throw InputError("negative syzygy index");
  if (i == 0) {
    // Ω^0(M) = M, presented on F_0
    if (res.length() >= 1) return {res.ring, res.module(0), res.map(1).columns};
    if (!res.complete) throw InputError("resolution too short for the requested syzygy");
    return {res.ring, res.module(0), {}};
  }
  if (i + 1 <= res.length()) return {res.ring, res.module(i), res.map(i + 1).columns};
  if (!res.complete) throw InputError("resolution too short for the requested syzygy");
  return {res.ring, res.module(i), {}};
}

ModulePresentation reduce_mod(const ModulePresentation& m, const std::vector<Polynomial>& y) {
  const auto& f = m.ring()->field();
  std::vector<ModuleVector> extra;
  for (const auto& yi : y)
    for (std::uint32_t j = 0; j < m.ambient().rank(); ++j)
      extra.push_back(mv_mul_poly(f, yi.terms(), mv_unit(m.ring()->nvars(), j)));
  return m.with_relations(extra);
}

ComparisonMap comparison_map(const Resolution& koszul, const Resolution& res) {
  if (koszul.augmentation.target != res.augmentation.target)
    throw InputError("comparison map needs a common augmentation target");
  const auto& ring = res.ring;
  const auto& f = ring->field();
  auto lifter_for = [&](int i) {
    if (static_cast<std::size_t>(i) < res.lifters.size()) return res.lifters[static_cast<std::size_t>(i)];
    if (i == 0) return std::make_shared<const Lifter>(ring, res.augmentation, res.target_relations);
    return std::make_shared<const Lifter>(ring, res.map(i));
  };

  ComparisonMap cm;
  {
    auto lifter = lifter_for(0);
    FreeMap phi0{koszul.module(0), res.module(0), {}};
    for (const auto& col : koszul.augmentation.columns) {
      auto u = lifter->lift(col);
      if (!u) throw InternalError("comparison map: augmentation does not lift");
      phi0.columns.push_back(std::move(*u));
    }
    cm.phi.push_back(std::move(phi0));
  }
  const int top = std::min(koszul.length(), res.length());
  for (int i = 1; i <= top; ++i) {
    auto lifter = lifter_for(i);
    FreeMap phi{koszul.module(i), res.module(i), {}};
    for (const auto& col : koszul.map(i).columns) {
      auto v = reduce_mod_ideal(*ring, cm.phi.back().apply(f, col));
      auto u = lifter->lift(v);
      if (!u) throw InternalError("comparison map: lifting failed at index " + std::to_string(i));
      phi.columns.push_back(std::move(*u));
    }
    cm.phi.push_back(std::move(phi));
  }
  return cm;
}

bool is_chain_map(const ComparisonMap& cm, const Resolution& koszul, const Resolution& res) {
  const auto& ring = *res.ring;
  const auto& f = ring.field();
  if (cm.phi.empty()) return false;
  Submodule n(res.ring, res.augmentation.target, res.target_relations);
  auto top = compose(ring, res.augmentation, cm.phi[0]);
  for (std::size_t j = 0; j < top.columns.size(); ++j)
    if (!n.contains(mv_add(f, top.columns[j], mv_scale(f, koszul.augmentation.columns[j], f.neg(1))))) return false;
  for (std::size_t i = 1; i < cm.phi.size(); ++i) {
    const int ii = static_cast<int>(i);
    auto lhs = compose(ring, res.map(ii), cm.phi[i]);
    auto rhs = compose(ring, cm.phi[i - 1], koszul.map(ii));
    if (lhs.columns != rhs.columns) return false;
  }
  return true;
}

}  // namespace cmwild
