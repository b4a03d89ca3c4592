#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cmwild/field.hpp"
#include "cmwild/linalg.hpp"

namespace cmwild {

/// Simultaneous conjugacy of pairs of n×n matrices: is there an invertible σ
/// with σ A_x = B_x σ and σ A_y = B_y σ?
struct IsoCertificate {
  enum class Outcome { Isomorphic, NotIsomorphic, Undecided };
  Outcome outcome = Outcome::Undecided;
  std::optional<Matrix> sigma;
  std::size_t intertwiner_dim = 0;
  /// How the outcome was reached: "basis", "sampling", "exhaustive",
  /// "determinant" or "zero-space".
  std::string method;
  std::string reason;
};
std::string to_string(IsoCertificate::Outcome o);

struct ConjugacyOptions {
  std::uint64_t seed = 0;
  int samples = 200;
  std::uint64_t exhaustive_limit = 100000;
};

/// Pass empty optionals when the second matrix of each pair is absent.
IsoCertificate iso_test(const PrimeField& f, const Matrix& ax, const std::optional<Matrix>& ay, const Matrix& bx,
                        const std::optional<Matrix>& by, const ConjugacyOptions& opts = {});

/// Basis of {σ : σ A = B σ for each pair}, as matrices.
std::vector<Matrix> intertwiners(const PrimeField& f, const std::vector<std::pair<Matrix, Matrix>>& pairs);

/// Decomposability of the pair (A_x, A_y) as a k[x,y]-module: the commutant
/// is local exactly when no idempotent other than 0 and I commutes with both.
struct IndecomposabilityResult {
  enum class Outcome { Indecomposable, Decomposable, Undecided };
  Outcome outcome = Outcome::Undecided;
  std::optional<Matrix> idempotent;
  std::size_t commutant_dim = 0;
  std::size_t radical_dim = 0;
  std::string method;
};
std::string to_string(IndecomposabilityResult::Outcome o);

IndecomposabilityResult indecomposability_test(const PrimeField& f, const Matrix& ax, const std::optional<Matrix>& ay,
                                               const ConjugacyOptions& opts = {});

}  // namespace cmwild
