#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cmwild/conjugacy.hpp"
#include "cmwild/resolution.hpp"
#include "cmwild/wildness.hpp"

namespace cmwild {

/// Data of one member M = nR̄/⟨W⟩ of the family, where R̄ = R/(y) and W has
/// the columns of I e_1 + A_x e_2 (+ A_y e_3), the e_j being independent
/// elements of R̄_c.
struct FamilySpec {
  RingPtr ring;
  RegularSequence y;
  int c = 0;
  std::vector<Polynomial> basis;
  std::size_t n = 0;
  Matrix ax;
  std::optional<Matrix> ay;
};

/// Builds and validates a spec. An empty `basis` selects the first two or
/// three standard monomials of R̄_c. Throws InputError when y is not a
/// regular sequence of length dim R, when c ≤ m - d + 1, when the e_j are not
/// independent forms of degree c in R̄, or when a matrix is not n×n.
FamilySpec make_family(RingPtr ring, RegularSequence y, int c, Matrix ax, std::optional<Matrix> ay = std::nullopt,
                       std::vector<Polynomial> basis = {});

/// Rechecks a spec; returns warnings (currently: A_x and A_y do not commute).
std::vector<std::string> validate_family(const FamilySpec& spec);

/// The n columns of W as vectors in R̄^n (entries reduced modulo y and I).
std::vector<ModuleVector> family_relations(const FamilySpec& spec);
/// M over R̄.
ModulePresentation family_member(const FamilySpec& spec);
/// M over R: the columns of W together with y_i e_k for all i, k.
ModulePresentation family_member_over_ring(const FamilySpec& spec);

/// The d-th syzygy Ω^d(M) over R, presented as F_d / Im δ_{d+1}.
struct MCMResult {
  Resolution resolution;
  ModulePresentation omega;
  int d = 0;
  /// y is a regular sequence on Ω^d(M), which for a Cohen-Macaulay R of
  /// dimension d means Ω^d(M) is maximal Cohen-Macaulay.
  bool mcm_verified = false;
};
MCMResult mcm_module(const FamilySpec& spec);

/// Hilbert series of Ω^d and graded Betti numbers of the resolutions agree.
bool invariants_agree(const MCMResult& a, const MCMResult& b);

/// Checks that the submodule of Ω̄^d = Ω^d/(y)Ω^d generated by its degree m
/// component has the Hilbert function of M(-m).
struct Lemma23Report {
  bool pass = false;
  int m = 0;
  /// Degrees lo..hi with lo = m; sub_hf[t - m] = dim Sub_t and
  /// shifted_hf[t - m] = dim M_{t-m}.
  int lo = 0, hi = 0;
  std::vector<std::int64_t> sub_hf, shifted_hf;
  /// dim (Ω̄^d)_m, the number of generators of the submodule.
  std::int64_t generators = 0;
};
Lemma23Report verify_lemma23(const FamilySpec& spec);
Lemma23Report verify_lemma23(const FamilySpec& spec, const MCMResult& mcm);

/// Compares the minimal resolution F of M over R with n copies of the
/// Koszul complex K of y through the comparison map φ.
struct Lemma25Report {
  struct Level {
    int i = 0;
    std::size_t koszul_rank = 0;
    /// Rank of φ_i modulo the maximal ideal.
    std::size_t constant_rank = 0;
    /// Degrees of F_i not accounted for by K_i (ascending).
    std::vector<int> complement_degrees;
    int bound = 0;
    bool split = false;
    bool complement_ok = false;
    bool betti_ok = false;
  };
  bool pass = false;
  bool chain_map = false;
  std::vector<Level> levels;
};
Lemma25Report verify_lemma25(const FamilySpec& spec);

/// Graded isomorphism of two members sharing the ring, sequence, c, basis and n:
/// decided by simultaneous conjugacy of the matrices. Throws InputError on a
/// frame mismatch.
IsoCertificate iso_family(const FamilySpec& a, const FamilySpec& b, const ConjugacyOptions& opts = {});

/// Indecomposability of the member, read off the commutant of its matrices.
IndecomposabilityResult indecomposability_family(const FamilySpec& spec, const ConjugacyOptions& opts = {});

}  // namespace cmwild
