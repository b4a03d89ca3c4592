#include "cmwild/ring.hpp"

#include <algorithm>
#include <numeric>

#include "cmwild/error.hpp"

namespace cmwild {

QuotientRingSpec::QuotientRingSpec(PolyRingPtr ring, std::vector<Polynomial> relations)
    : ring_(std::move(ring)) {
  for (auto& r : relations) {
    if (r.is_zero()) continue;
    if (r.ring()->nvars() != ring_->nvars()) throw InputError("relation over a different ring");
    if (!r.is_homogeneous()) throw InputError("relation '" + r.to_string() + "' is not homogeneous");
    if (*r.homogeneous_degree() <= 0) throw InputError("relation '" + r.to_string() + "' has degree 0");
    relations_.push_back(Polynomial(ring_, r.terms()));
  }
  gb_ = buchberger(ring_->field(), ring_->nvars(), relations_);
}

std::vector<Polynomial> QuotientRingSpec::groebner_basis() const {
  std::vector<Polynomial> out;
  for (const auto& e : gb_.elements()) out.push_back(mv_component(e, 0, ring_));
  return out;
}

Polynomial QuotientRingSpec::reduce(const Polynomial& f) const {
  return mv_component(gb_.normal_form(mv_from_poly(f)), 0, ring_);
}

bool QuotientRingSpec::is_zero_ring() const {
  for (const auto& e : gb_.elements())
    if (e.lead().mono.is_one()) return true;
  return false;
}

RingPtr QuotientRingSpec::with_relations(const std::vector<Polynomial>& extra) const {
  auto rels = relations_;
  rels.insert(rels.end(), extra.begin(), extra.end());
  return std::make_shared<const QuotientRingSpec>(ring_, std::move(rels));
}

RingPtr make_quotient(PolyRingPtr ring, std::vector<Polynomial> relations) {
  return std::make_shared<const QuotientRingSpec>(std::move(ring), std::move(relations));
}

RingPtr make_quotient(const std::vector<std::string>& vars, const std::vector<std::string>& relations,
                      std::uint32_t p) {
  auto ring = make_ring(vars, p);
  std::vector<Polynomial> rels;
  for (const auto& r : relations) rels.push_back(parse_polynomial(r, ring));
  return make_quotient(ring, std::move(rels));
}

Polynomial poly_parse(std::string_view text, const QuotientRingSpec& ring) { return ring.parse(text); }

std::vector<int> GradedFreeModule::twists() const {
  std::vector<int> t(degrees.size());
  std::transform(degrees.begin(), degrees.end(), t.begin(), [](int d) { return -d; });
  return t;
}

GradedFreeModule GradedFreeModule::from_twists(const std::vector<int>& twists) {
  GradedFreeModule m;
  for (int t : twists) m.degrees.push_back(-t);
  return m;
}

GradedFreeModule direct_sum(const GradedFreeModule& a, const GradedFreeModule& b) {
  GradedFreeModule m = a;
  m.degrees.insert(m.degrees.end(), b.degrees.begin(), b.degrees.end());
  return m;
}

Submodule::Submodule(RingPtr ring, GradedFreeModule ambient, std::vector<ModuleVector> generators)
    : ring_(std::move(ring)), ambient_(std::move(ambient)), generators_(std::move(generators)) {
  const std::size_t r = ambient_.rank();
  std::vector<std::uint32_t> order(r);
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return ambient_.degrees[a] < ambient_.degrees[b]; });
  to_internal_.assign(r, 0);
  to_external_ = order;
  for (std::uint32_t k = 0; k < r; ++k) to_internal_[order[k]] = k;

  std::vector<int> internal_degrees(r);
  for (std::uint32_t k = 0; k < r; ++k) internal_degrees[k] = ambient_.degrees[order[k]];

  const auto& f = ring_->field();
  std::vector<ModuleVector> gens;
  for (const auto& g : generators_) {
    for (const auto& t : g.terms)
      if (t.comp >= r) throw InputError("generator component outside the ambient free module");
    gens.push_back(mv_relabel(f, g, to_internal_));
  }
  for (const auto& h : ring_->ideal_basis().elements())
    for (std::uint32_t k = 0; k < r; ++k) {
      ModuleVector v = h;
      for (auto& t : v.terms) t.comp = k;
      gens.push_back(std::move(v));
    }
  gb_ = GroebnerBasis(f, ring_->nvars(), internal_degrees, std::move(gens));
  series_ = cmwild::quotient_series(gb_);
}

std::vector<ModuleVector> Submodule::basis_elements() const {
  std::vector<ModuleVector> out;
  for (const auto& e : gb_.elements()) out.push_back(mv_relabel(ring_->field(), e, to_external_));
  return out;
}

ModuleVector Submodule::normal_form(const ModuleVector& v) const {
  const auto& f = ring_->field();
  return mv_relabel(f, gb_.normal_form(mv_relabel(f, v, to_internal_)), to_external_);
}

std::vector<ModTerm> Submodule::standard_monomials(int degree) const {
  auto lms = gb_.leading_monomials();
  std::vector<ModTerm> out;
  for (std::uint32_t k = 0; k < ambient_.rank(); ++k) {
    int d = degree - gb_.comp_degrees()[k];
    for (const auto& m : monomials_of_degree(ring_->nvars(), d)) {
      bool standard = std::none_of(lms[k].begin(), lms[k].end(), [&](const Monomial& l) { return l.divides(m); });
      if (standard) out.push_back({m, to_external_[k], 1});
    }
  }
  std::stable_sort(out.begin(), out.end(), term_greater);
  return out;
}

int Submodule::quotient_krull_dimension() const {
  auto lms = gb_.leading_monomials();
  int best = -1;
  for (const auto& l : lms) best = std::max(best, monomial_ideal_dimension(l, ring_->nvars()));
  return best;
}

HilbertSeries hilbert_series(const QuotientRingSpec& ring) { return quotient_series(ring.ideal_basis()); }

std::int64_t hilbert_dim(const QuotientRingSpec& ring, int t) { return hilbert_series(ring).dim(t); }

std::int64_t hilbert_dim(const Submodule& quotient, int t) { return quotient.quotient_dim(t); }

std::vector<Polynomial> component_basis(const QuotientRingSpec& ring, int t) {
  std::vector<Polynomial> out;
  auto lms = ring.ideal_basis().leading_monomials();
  for (const auto& m : monomials_of_degree(ring.nvars(), t)) {
    bool standard = std::none_of(lms[0].begin(), lms[0].end(), [&](const Monomial& l) { return l.divides(m); });
    if (standard) out.push_back(Polynomial::monomial(ring.ring(), m));
  }
  return out;
}

int krull_dimension(const QuotientRingSpec& ring) {
  return monomial_ideal_dimension(ring.ideal_basis().leading_monomials()[0], ring.nvars());
}

int top_degree(const QuotientRingSpec& ring) {
  auto hs = hilbert_series(ring);
  if (!hs.is_polynomial()) throw InputError("ring is not Artinian");
  auto p = hs.as_polynomial();
  return static_cast<int>(p.size()) - 1;
}

}  // namespace cmwild
