#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cmwild/groebner.hpp"
#include "cmwild/polynomial.hpp"

namespace cmwild {

/// R = S/I for a homogeneous ideal I of the ambient ring S = k[vars].
/// The reduced Gröbner basis of I is computed at construction. An empty
/// relation list gives S itself.
class QuotientRingSpec {
 public:
  QuotientRingSpec(PolyRingPtr ring, std::vector<Polynomial> relations);

  const PolyRingPtr& ring() const noexcept { return ring_; }
  const PrimeField& field() const noexcept { return ring_->field(); }
  std::size_t nvars() const noexcept { return ring_->nvars(); }
  const std::vector<Polynomial>& relations() const noexcept { return relations_; }
  const GroebnerBasis& ideal_basis() const noexcept { return gb_; }
  std::vector<Polynomial> groebner_basis() const;

  /// Normal form modulo I.
  Polynomial reduce(const Polynomial& f) const;
  bool is_zero_ring() const;

  /// S/(I + extra).
  std::shared_ptr<const QuotientRingSpec> with_relations(const std::vector<Polynomial>& extra) const;

  Polynomial parse(std::string_view text) const { return parse_polynomial(text, ring_); }

 private:
  PolyRingPtr ring_;
  std::vector<Polynomial> relations_;
  GroebnerBasis gb_;
};

using RingPtr = std::shared_ptr<const QuotientRingSpec>;

RingPtr make_quotient(PolyRingPtr ring, std::vector<Polynomial> relations = {});
/// Builds a quotient from variable names and relation strings.
RingPtr make_quotient(const std::vector<std::string>& vars, const std::vector<std::string>& relations,
                      std::uint32_t p = kDefaultPrime);

Polynomial poly_parse(std::string_view text, const QuotientRingSpec& ring);

/// ⊕_i R(-degrees[i]). `twist(i)` is the shift a in R(a), i.e. -degrees[i].
struct GradedFreeModule {
  std::vector<int> degrees;

  std::size_t rank() const noexcept { return degrees.size(); }
  int twist(std::size_t i) const { return -degrees.at(i); }
  std::vector<int> twists() const;
  static GradedFreeModule from_twists(const std::vector<int>& twists);
  static GradedFreeModule free(std::size_t rank, int degree = 0) {
    return GradedFreeModule{std::vector<int>(rank, degree)};
  }
  friend bool operator==(const GradedFreeModule&, const GradedFreeModule&) = default;
};

GradedFreeModule direct_sum(const GradedFreeModule& a, const GradedFreeModule& b);

/// Submodule N of a graded free R-module F, R = S/I, handled over S by
/// adjoining I·e_j to the generators. Its Gröbner basis is computed at
/// construction with the POT order whose positions ascend by generator
/// degree, then index.
class Submodule {
 public:
  Submodule(RingPtr ring, GradedFreeModule ambient, std::vector<ModuleVector> generators);

  const RingPtr& ring() const noexcept { return ring_; }
  const GradedFreeModule& ambient() const noexcept { return ambient_; }
  const std::vector<ModuleVector>& generators() const noexcept { return generators_; }
  const GroebnerBasis& basis() const noexcept { return gb_; }
  /// Gröbner basis elements expressed in the original component labels.
  std::vector<ModuleVector> basis_elements() const;

  ModuleVector normal_form(const ModuleVector& v) const;
  bool contains(const ModuleVector& v) const { return normal_form(v).is_zero(); }

  /// Hilbert series of F/N (as R-modules, so of F/(N + IF) over S).
  HilbertSeries quotient_series() const { return series_; }
  std::int64_t quotient_dim(int degree) const { return series_.dim(degree); }
  /// Standard monomials of F/N in the given degree, in descending POT order.
  std::vector<ModTerm> standard_monomials(int degree) const;
  int quotient_krull_dimension() const;

 private:
  RingPtr ring_;
  GradedFreeModule ambient_;
  std::vector<ModuleVector> generators_;
  std::vector<std::uint32_t> to_internal_, to_external_;
  GroebnerBasis gb_;
  HilbertSeries series_;
};

/// Hilbert series of R.
HilbertSeries hilbert_series(const QuotientRingSpec& ring);
/// dim_k R_t.
std::int64_t hilbert_dim(const QuotientRingSpec& ring, int t);
/// dim_k (F/N)_t.
std::int64_t hilbert_dim(const Submodule& quotient, int t);
/// Standard monomials of R_t, grevlex-descending.
std::vector<Polynomial> component_basis(const QuotientRingSpec& ring, int t);
/// Krull dimension of R; -1 for the zero ring.
int krull_dimension(const QuotientRingSpec& ring);
/// Largest degree t with R_t ≠ 0 for Artinian R; -1 for the zero ring.
int top_degree(const QuotientRingSpec& ring);

}  // namespace cmwild
