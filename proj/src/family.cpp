#include "cmwild/family.hpp"

#include <algorithm>

#include "cmwild/error.hpp"

namespace cmwild {

namespace {

int ring_dimension(const FamilySpec& spec) { return krull_dimension(*spec.ring); }

std::size_t matrix_count(const FamilySpec& spec) { return spec.ay ? 3 : 2; }

void check_matrix(const Matrix& m, std::size_t n, const char* name) {
  if (m.rows() != n || m.cols() != n)
    throw InputError(std::string(name) + " is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                     ", expected " + std::to_string(n) + "x" + std::to_string(n));
}

// Throws unless the normal forms of the e_j in R̄_c are linearly independent.
void check_basis(const QuotientRingSpec& rbar, const std::vector<Polynomial>& basis, int c) {
  const auto monos = monomials_of_degree(rbar.nvars(), c);
  EchelonBasis span(rbar.field(), monos.size());
  for (const auto& e : basis) {
    if (e.ring() != rbar.ring()) throw InputError("basis element over a different ring: " + e.to_string());
    if (e.is_zero() || !e.is_homogeneous() || *e.homogeneous_degree() != c)
      throw InputError("basis element " + e.to_string() + " is not a form of degree " + std::to_string(c));
    std::vector<PrimeField::Elem> coords(monos.size(), 0);
    const auto nf = rbar.reduce(e);
    for (const auto& t : nf.terms()) {
      auto it = std::find(monos.begin(), monos.end(), t.mono);
      coords[static_cast<std::size_t>(it - monos.begin())] = t.coef;
    }
    if (!span.insert(std::move(coords)))
      throw InputError("basis elements are linearly dependent in R/(y) in degree " + std::to_string(c));
  }
}

}  // namespace

FamilySpec make_family(RingPtr ring, RegularSequence y, int c, Matrix ax, std::optional<Matrix> ay,
                       std::vector<Polynomial> basis) {
  FamilySpec spec;
  spec.ring = std::move(ring);
  spec.y = std::move(y);
  spec.c = c;
  spec.n = ax.rows();
  spec.ax = std::move(ax);
  spec.ay = std::move(ay);
  if (basis.empty()) {
    auto rbar = spec.ring->with_relations(spec.y.elements);
    auto all = component_basis(*rbar, c);
    if (all.size() < matrix_count(spec))
      throw InputError("dim R/(y)_" + std::to_string(c) + " = " + std::to_string(all.size()) + " is below the " +
                       std::to_string(matrix_count(spec)) + " elements needed");
    basis.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(matrix_count(spec)));
  }
  spec.basis = std::move(basis);
  validate_family(spec);
  return spec;
}

std::vector<std::string> validate_family(const FamilySpec& spec) {
  if (!spec.ring) throw InputError("family has no ring");
  if (spec.n == 0) throw InputError("family rank n must be positive");
  check_matrix(spec.ax, spec.n, "A_x");
  if (spec.ay) check_matrix(*spec.ay, spec.n, "A_y");
  const int d = ring_dimension(spec);
  if (static_cast<int>(spec.y.elements.size()) != d)
    throw InputError("sequence length " + std::to_string(spec.y.elements.size()) + " differs from dim R = " +
                     std::to_string(d));
  if (!verify_regular_sequence(*spec.ring, spec.y.elements)) throw InputError("y is not a regular sequence on R");
  const int bound = spec.y.m - d + 1;
  if (spec.c <= bound)
    throw InputError("c = " + std::to_string(spec.c) + " must exceed m - d + 1 = " + std::to_string(bound));
  if (spec.basis.size() != matrix_count(spec))
    throw InputError("expected " + std::to_string(matrix_count(spec)) + " basis elements, got " +
                     std::to_string(spec.basis.size()));
  auto rbar = spec.ring->with_relations(spec.y.elements);
  check_basis(*rbar, spec.basis, spec.c);

  std::vector<std::string> warnings;
  const auto& f = spec.ring->field();
  if (spec.ay && mat_mul(f, spec.ax, *spec.ay) != mat_mul(f, *spec.ay, spec.ax))
    warnings.emplace_back("A_x and A_y do not commute");
  return warnings;
}

std::vector<ModuleVector> family_relations(const FamilySpec& spec) {
  auto rbar = spec.ring->with_relations(spec.y.elements);
  std::vector<Polynomial> e;
  for (const auto& b : spec.basis) e.push_back(rbar->reduce(b));
  std::vector<const Matrix*> mats{&spec.ax};
  if (spec.ay) mats.push_back(&*spec.ay);

  std::vector<ModuleVector> cols;
  for (std::size_t k = 0; k < spec.n; ++k) {
    std::vector<Polynomial> entries(spec.n, Polynomial(spec.ring->ring()));
    entries[k] = e[0];
    for (std::size_t j = 0; j < mats.size(); ++j)
      for (std::size_t i = 0; i < spec.n; ++i) {
        const auto a = (*mats[j])(i, k);
        if (a != 0) entries[i] = entries[i] + e[j + 1].scaled(a);
      }
    for (auto& p : entries) p = rbar->reduce(p);
    cols.push_back(mv_from_polys(entries));
  }
  return cols;
}

ModulePresentation family_member(const FamilySpec& spec) {
  auto rbar = spec.ring->with_relations(spec.y.elements);
  return {rbar, GradedFreeModule::free(spec.n, 0), family_relations(spec)};
}

ModulePresentation family_member_over_ring(const FamilySpec& spec) {
  auto rels = family_relations(spec);
  for (const auto& yi : spec.y.elements)
    for (std::size_t k = 0; k < spec.n; ++k) rels.push_back(mv_from_poly(spec.ring->reduce(yi), static_cast<std::uint32_t>(k)));
  return {spec.ring, GradedFreeModule::free(spec.n, 0), std::move(rels)};
}

MCMResult mcm_module(const FamilySpec& spec) {
  const int d = ring_dimension(spec);
  auto res = minimal_resolution(family_member_over_ring(spec), d + 1);
  auto omega = syzygy_module(res, d);
  const bool mcm = verify_regular_sequence(omega, spec.y.elements);
  return MCMResult{std::move(res), std::move(omega), d, mcm};
}

bool invariants_agree(const MCMResult& a, const MCMResult& b) {
  return a.omega.hilbert_series().normalized() == b.omega.hilbert_series().normalized() &&
         betti_table(a.resolution) == betti_table(b.resolution);
}

Lemma23Report verify_lemma23(const FamilySpec& spec) { return verify_lemma23(spec, mcm_module(spec)); }

Lemma23Report verify_lemma23(const FamilySpec& spec, const MCMResult& mcm) {
  Lemma23Report rep;
  rep.m = spec.y.m;
  const auto& f = spec.ring->field();
  auto omega_bar = reduce_mod(mcm.omega, spec.y.elements);
  // the degree-m standard monomials span (Ω̄^d)_m; adjoining them as relations
  // leaves Ω̄^d modulo the submodule they generate
  std::vector<ModuleVector> degree_m;
  for (const auto& t : omega_bar.submodule().standard_monomials(rep.m))
    degree_m.push_back(canonical(f, {ModTerm{t.mono, t.comp, 1}}));
  const auto hs_omega = omega_bar.hilbert_series();
  const auto hs_sub = hs_omega - omega_bar.with_relations(degree_m).hilbert_series();
  const auto hs_m = family_member(spec).hilbert_series();
  if (!hs_omega.is_polynomial() || !hs_m.is_polynomial())
    throw InternalError("reduction by a system of parameters did not give a finite length module");
  const int top_omega = static_cast<int>(hs_omega.as_polynomial().size());
  const int top_m = static_cast<int>(hs_m.as_polynomial().size());
  rep.lo = rep.m;
  rep.hi = std::max(top_omega, rep.m + top_m);
  rep.pass = true;
  for (int t = 0; t <= rep.hi; ++t) {
    const auto sub = hs_sub.dim(t);
    const auto shifted = t >= rep.m ? hs_m.dim(t - rep.m) : 0;
    if (sub != shifted) rep.pass = false;
    if (t >= rep.lo) {
      rep.sub_hf.push_back(sub);
      rep.shifted_hf.push_back(shifted);
    }
  }
  rep.generators = static_cast<std::int64_t>(degree_m.size());
  if (rep.generators != hs_m.dim(0)) rep.pass = false;
  return rep;
}

Lemma25Report verify_lemma25(const FamilySpec& spec) {
  const int d = ring_dimension(spec);
  const auto& f = spec.ring->field();
  auto koszul = koszul_complex(spec.ring, spec.y.elements, spec.n);
  auto res = minimal_resolution(family_member_over_ring(spec), d);
  auto cm = comparison_map(koszul, res);

  Lemma25Report rep;
  rep.chain_map = is_chain_map(cm, koszul, res);
  rep.pass = rep.chain_map;
  const auto betti_k = betti_table(koszul);
  const auto betti_f = betti_table(res);
  auto beta = [](const BettiTable& b, int i, int j) {
    auto it = b.find({i, j});
    return it == b.end() ? std::int64_t{0} : it->second;
  };

  for (std::size_t i = 0; i < cm.phi.size(); ++i) {
    const auto& phi = cm.phi[i];
    Lemma25Report::Level lv;
    lv.i = static_cast<int>(i);
    lv.koszul_rank = phi.source.rank();
    lv.bound = spec.c + lv.i - 1;

    Matrix constant(phi.target.rank(), phi.source.rank());
    for (std::size_t col = 0; col < phi.columns.size(); ++col)
      for (const auto& t : phi.columns[col].terms)
        if (t.mono.degree() == 0) constant(t.comp, col) = t.coef;
    lv.constant_rank = rank(f, constant);
    lv.split = lv.constant_rank == lv.koszul_rank;

    auto fdeg = phi.target.degrees;
    bool contained = true;
    for (int kd : phi.source.degrees) {
      auto it = std::find(fdeg.begin(), fdeg.end(), kd);
      if (it == fdeg.end()) {
        contained = false;
        break;
      }
      fdeg.erase(it);
    }
    std::sort(fdeg.begin(), fdeg.end());
    lv.complement_degrees = fdeg;
    lv.complement_ok = contained && std::all_of(fdeg.begin(), fdeg.end(), [&](int g) { return g >= lv.bound; });

    lv.betti_ok = true;
    for (int j = 0; j < lv.bound; ++j)
      if (beta(betti_f, lv.i, j) != beta(betti_k, lv.i, j)) lv.betti_ok = false;

    rep.pass = rep.pass && lv.split && lv.complement_ok && lv.betti_ok;
    rep.levels.push_back(std::move(lv));
  }
  if (static_cast<int>(rep.levels.size()) < std::min(d, res.length()) + 1) rep.pass = false;
  return rep;
}

IsoCertificate iso_family(const FamilySpec& a, const FamilySpec& b, const ConjugacyOptions& opts) {
  const bool same_ring = a.ring == b.ring || (a.ring->ring()->names() == b.ring->ring()->names() &&
                                              a.ring->field().characteristic() == b.ring->field().characteristic() &&
                                              a.ring->groebner_basis() == b.ring->groebner_basis());
  if (!same_ring || a.y.to_strings() != b.y.to_strings() || a.c != b.c || a.n != b.n ||
      a.ay.has_value() != b.ay.has_value())
    throw InputError("frame mismatch: members must share R, y, c, n and the number of matrices");
  std::vector<std::string> ba, bb;
  for (const auto& e : a.basis) ba.push_back(e.to_string());
  for (const auto& e : b.basis) bb.push_back(e.to_string());
  if (ba != bb) throw InputError("frame mismatch: members use different basis elements");
  return iso_test(a.ring->field(), a.ax, a.ay, b.ax, b.ay, opts);
}

IndecomposabilityResult indecomposability_family(const FamilySpec& spec, const ConjugacyOptions& opts) {
  return indecomposability_test(spec.ring->field(), spec.ax, spec.ay, opts);
}

}  // namespace cmwild
