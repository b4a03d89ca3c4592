#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cmwild/ring.hpp"

namespace cmwild {

/// Graded homomorphism F → G of free R-modules, stored column by column:
/// columns[j] is the image of the j-th generator of the source, written in
/// the target's components. Entries are kept reduced modulo the relations of R.
struct FreeMap {
  GradedFreeModule source;
  GradedFreeModule target;
  std::vector<ModuleVector> columns;

  Polynomial entry(const PolyRingPtr& ring, std::size_t row, std::size_t col) const {
    return mv_component(columns.at(col), static_cast<std::uint32_t>(row), ring);
  }
  /// Image of a source element.
  ModuleVector apply(const PrimeField& f, const ModuleVector& v) const;
  /// Every column c_j is homogeneous of degree source.degrees[j] (or zero).
  bool is_homogeneous() const;
};

/// b ∘ a
FreeMap compose(const QuotientRingSpec& ring, const FreeMap& b, const FreeMap& a);
FreeMap identity_map(const GradedFreeModule& m, std::size_t nvars);

/// Component-wise normal form modulo the defining ideal of R.
ModuleVector reduce_mod_ideal(const QuotientRingSpec& ring, const ModuleVector& v);

/// A graded module G/N over R given by generators of N.
class ModulePresentation {
 public:
  ModulePresentation(RingPtr ring, GradedFreeModule ambient, std::vector<ModuleVector> relations);

  const RingPtr& ring() const noexcept { return ring_; }
  const GradedFreeModule& ambient() const noexcept { return ambient_; }
  const std::vector<ModuleVector>& relations() const noexcept { return relations_; }
  const Submodule& submodule() const { return *sub_; }
  HilbertSeries hilbert_series() const { return sub_->quotient_series(); }
  std::int64_t hilbert_dim(int t) const { return sub_->quotient_dim(t); }
  /// Same generators and relations, read over another ring (e.g. R̄).
  ModulePresentation over(RingPtr ring) const { return {std::move(ring), ambient_, relations_}; }
  ModulePresentation with_relations(const std::vector<ModuleVector>& extra) const;

 private:
  RingPtr ring_;
  GradedFreeModule ambient_;
  std::vector<ModuleVector> relations_;
  std::shared_ptr<const Submodule> sub_;
};

/// Kernel and preimage computations for a map δ: F → G/N over R, via one
/// elimination Gröbner basis in G ⊕ F holding (δ(e_j), e_j), (n, 0) and the
/// relations of R in every component.
class Lifter {
 public:
  Lifter(RingPtr ring, FreeMap map, std::vector<ModuleVector> target_relations = {});

  const FreeMap& map() const noexcept { return map_; }
  /// Generators of ker δ, reduced modulo R's relations; zero classes dropped.
  std::vector<ModuleVector> kernel() const;
  /// Some u with δ(u) ≡ v modulo N; nullopt when v is not in the image.
  std::optional<ModuleVector> lift(const ModuleVector& v) const;

 private:
  RingPtr ring_;
  FreeMap map_;
  std::uint32_t offset_;
  GroebnerBasis gb_;
};

/// Chooses, in order of degree (stable within a degree), candidates that are
/// not in the span of `base`, R's relations and the candidates already kept.
/// The kept ones minimally generate ⟨base, candidates⟩ modulo ⟨base⟩.
std::vector<std::size_t> minimal_subset(const RingPtr& ring, const GradedFreeModule& ambient,
                                        const std::vector<ModuleVector>& base,
                                        const std::vector<ModuleVector>& candidates);

/// Betti numbers β_{i,j}, keyed by (i, j).
using BettiTable = std::map<std::pair<int, int>, std::int64_t>;

/// Graded free complex F_k → … → F_0 → G/N, with the augmentation
/// δ_0 : F_0 → G stored explicitly.
struct Resolution {
  RingPtr ring;
  std::vector<GradedFreeModule> modules;  // F_0 .. F_k
  std::vector<FreeMap> maps;              // maps[i-1] = δ_i : F_i → F_{i-1}
  FreeMap augmentation;
  std::vector<ModuleVector> target_relations;
  bool minimal = false;
  /// Set when a kernel vanished, so F_i = 0 past length().
  bool complete = false;
  /// lifters[0] lifts through δ_0 (modulo N), lifters[i] through δ_i.
  /// May be shorter than length() + 1.
  std::vector<std::shared_ptr<const Lifter>> lifters;

  int length() const noexcept { return static_cast<int>(maps.size()); }
  /// F_i, empty past the computed end.
  GradedFreeModule module(int i) const;
  /// δ_i for 1 ≤ i ≤ length().
  const FreeMap& map(int i) const { return maps.at(static_cast<std::size_t>(i - 1)); }
};

/// Koszul complex of y over R, tensored with n copies of R. K_i has basis
/// e_S ⊗ e_c, S an i-subset in lexicographic order, at index s·n + c.
/// ∂(e_S) = Σ_k (-1)^k y_{s_k} e_{S∖s_k}. The augmentation targets R^n with
/// relations y_i e_c.
Resolution koszul_complex(const RingPtr& ring, const std::vector<Polynomial>& y, std::size_t copies = 1);

/// Minimal generators of ker δ as the columns of a map into F.
FreeMap syzygies(const RingPtr& ring, const FreeMap& phi, const std::vector<ModuleVector>& target_relations = {});

/// Minimal graded free resolution of M = G/N through homological degree k.
/// F_0 is a subset of the generators of G; each later F_i minimally
/// generates ker δ_{i-1}. Stops early when a kernel vanishes.
Resolution minimal_resolution(const ModulePresentation& pres, int k);

BettiTable betti_table(const Resolution& res);
std::string betti_json(const Resolution& res);

/// True iff every consecutive composition vanishes modulo R's relations,
/// including δ_0 ∘ δ_1 modulo N.
bool is_complex(const Resolution& res);
/// Double inclusion Im δ_{i+1} = ker δ_i for 0 ≤ i < length().
bool is_exact(const Resolution& res);
/// No entry of any δ_i (i ≥ 1) has a nonzero constant term.
bool has_no_unit_entries(const Resolution& res);

/// Ω^i(M) = Im δ_i ≅ F_i / Im δ_{i+1}. Needs res.length() ≥ i + 1 unless the
/// resolution stopped early.
ModulePresentation syzygy_module(const Resolution& res, int i);

/// M/yM for the presentation of M: y·e_j adjoined to the relations.
ModulePresentation reduce_mod(const ModulePresentation& m, const std::vector<Polynomial>& y);

/// Chain map φ_• : K_• → F_• over the identity of the common target G,
/// assuming N_K ⊆ N_F. Lifts by normal-form division, one index at a time,
/// through min(K.length(), F.length()).
struct ComparisonMap {
  std::vector<FreeMap> phi;  // phi[i] : K_i → F_i
};
ComparisonMap comparison_map(const Resolution& koszul, const Resolution& res);
/// δ_i φ_i = φ_{i-1} 𝐝_i for every stored index, and δ_0 φ_0 ≡ ε_K modulo N_F.
bool is_chain_map(const ComparisonMap& cm, const Resolution& koszul, const Resolution& res);

}  // namespace cmwild
