#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "sandpile/graph.hpp"
#include "sandpile/linalg.hpp"
#include "sandpile/numeric.hpp"

namespace sandpile {

enum class Criterion {
  Definition,
  Stable,
  Theorem1,
  ConePartA,
  ConePartB,
  TreeTheorem,
  CompleteCongruence,
  WheelCongruence,
  WheelPow2,
  Banana,
};

std::string_view to_string(Criterion c) noexcept;

/// Immutable iff the Z- and R-odometers agree, equivalently iff the
/// R-odometer is integral.
struct Verdict {
  bool immutable = false;
  IntVector z_odometer;
  RatVector r_odometer;
  Criterion criterion = Criterion::Definition;
};

/// Computes both odometers exactly and compares them. The criterion records
/// which shortcut also certifies the answer (Stable or Theorem1); the
/// shortcut is always cross-checked against the definition.
Verdict classify(const Multigraph& g, const Sandpile& sigma);
Verdict classify(const Multigraph& g, const ReducedLaplacian& lap, const Sandpile& sigma);

/// Integrality of (L')^{-1}(sigma - d + 1). Throws NotUniformlyLarge.
bool theorem1_test(const Multigraph& g, const Sandpile& sigma);
bool theorem1_test(const Multigraph& g, const ReducedLaplacian& lap, const Sandpile& sigma);

/// a with L' a = sigma when such an integral a exists.
std::optional<IntVector> in_laplacian_image(const Multigraph& g, const IntVector& sigma);
std::optional<IntVector> in_laplacian_image(const ReducedLaplacian& lap, const IntVector& sigma);

/// Cone-of-regular-graph criterion.
///   (a) sigma uniformly large: immutable iff sigma = L' a for integral a.
///   (b) sigma = L' a with a integral and uniformly large: immutable.
/// In both immutable cases u^R = a - d + 1.
/// Throws NotConeOfRegular, or CriterionInapplicable if neither part applies.
Verdict cone_criterion(const Multigraph& g, const Sandpile& sigma);
/// Same, for an arbitrary integer vector: negative entries are rejected
/// with InvalidSandpile before anything else.
Verdict cone_criterion(const Multigraph& g, const IntVector& sigma);

/// sigma(v) = d(v), sigma(w) = d(w) - 1 elsewhere. Requires v adjacent to
/// the sink, (a) every other vertex reaches the sink avoiding v, and
/// (b) d(v) >= 2; otherwise throws HypothesesFail naming the failed condition.
Sandpile construct_mutable(const Multigraph& g, std::size_t vertex);

/// K_m with n = m - 1: all pairwise differences vanish mod n + 1.
bool complete_congruence_test(std::size_t m, const IntVector& sigma);

/// W_m with n = m - 1 rim vertices. sigma[p] is the rim vertex v_{p+1};
/// rim indices are read mod n. Even n: congruences mod 5 F_n in Lucas
/// numbers; odd n: congruences mod A_n in Fibonacci numbers.
bool wheel_congruence_test(std::size_t m, const IntVector& sigma);

/// W_{2^k + 1}, k >= 2: the reduced system of one congruence mod 5 and
/// 2^l congruences mod A_{2^l} for each 1 <= l <= k - 1.
/// Throws NotPowerOfTwo if sigma does not have 2^k entries.
bool wheel_pow2_test(std::size_t k, const IntVector& sigma);

/// banana(k) with a single non-sink value s: immutable iff s is stable
/// (s <= k - 1) or k divides s + 1.
bool banana_test(std::size_t k, const BigInt& s);

/// Trees: every uniformly large sandpile is immutable. Throws NotTree or
/// NotUniformlyLarge.
bool tree_fast_path(const Multigraph& g, const Sandpile& sigma);

}  // namespace sandpile
