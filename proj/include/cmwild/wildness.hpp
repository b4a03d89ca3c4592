#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cmwild/resolution.hpp"
#include "cmwild/ring.hpp"

namespace cmwild {

/// Homogeneous y_1..y_d with degrees m_i and m = Σ m_i. `verified` means each
/// y_i was certified regular on R/(y_1..y_{i-1}).
struct RegularSequence {
  std::vector<Polynomial> elements;
  std::vector<int> degrees;
  int m = 0;
  bool verified = false;
  /// "recipe", "search" or "given".
  std::string origin;

  static RegularSequence from(std::vector<Polynomial> elements, std::string origin);
  std::vector<std::string> to_strings() const;
};

enum class Verdict { CMWild, StrictlyCMInfinite, Inconclusive };
std::string to_string(Verdict v);

struct WildnessReport {
  Verdict verdict = Verdict::Inconclusive;
  std::uint32_t p = 0;
  RegularSequence sequence;
  int d = 0;
  std::optional<int> c;
  std::optional<std::int64_t> dim_c;
  std::vector<std::pair<int, std::int64_t>> scanned;
  bool cm_assumed = true;
  std::string narrative;
};

struct SearchOptions {
  std::uint64_t seed = 0;
  int budget = 50;
};

/// Multiplication by y is injective on N, decided by the exact identity
/// HS(N/yN) = (1 - t^e) HS(N), e = deg y.
bool verify_regular_element(const Polynomial& y, const ModulePresentation& n);
bool verify_regular_element(const Polynomial& y, const QuotientRingSpec& ring);
/// Each y_i regular on R/(y_<i).
bool verify_regular_sequence(const QuotientRingSpec& ring, const std::vector<Polynomial>& y);
/// Each y_i regular on N/(y_<i)N.
bool verify_regular_sequence(const ModulePresentation& n, const std::vector<Polynomial>& y);

/// Standard sequences: for one relation (v_0^2, v_1^2, v_2, ...), for
/// codimension k > 1 (v_k^2, v_{k+1}, ...), for no relations the variables.
/// Truncated to length d. Unverified.
std::vector<Polynomial> recipe_sequence(const QuotientRingSpec& ring, int d);

/// A verified regular sequence of length dim R: the recipe if it verifies,
/// otherwise a greedy search over variables, their squares, and seeded random
/// linear forms (exponent 1 or 2). Throws BudgetExhausted after
/// `budget` rejected candidates.
RegularSequence find_regular_sequence(const QuotientRingSpec& ring, const SearchOptions& opts = {});

/// R/(y); throws InputError unless the result is Artinian.
RingPtr artinian_reduction(const QuotientRingSpec& ring, const std::vector<Polynomial>& y);

/// Scans dim R̄_c for admissible c (c > m - d + 1) up to the socle degree of
/// R̄, or over the given window. CMWild at the smallest c with dim > 2, else
/// StrictlyCMInfinite at the smallest c with dim > 1.
WildnessReport wildness_certificate(const RingPtr& ring, std::optional<RegularSequence> y = std::nullopt,
                                    std::optional<std::pair<int, int>> c_window = std::nullopt,
                                    const SearchOptions& opts = {});

/// R = S/(f) with the hypersurface recipe.
WildnessReport hypersurface_report(const Polynomial& f, const SearchOptions& opts = {});
/// R = S/(f_1..f_k) for a regular sequence of forms of degree > 1.
WildnessReport complete_intersection_report(const std::vector<Polynomial>& fs, const SearchOptions& opts = {});

/// Re-derives the witness from scratch; false if the verdict is not backed.
bool check_witness(const QuotientRingSpec& ring, const WildnessReport& report);

}  // namespace cmwild
