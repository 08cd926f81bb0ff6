#pragma once

#include <optional>
#include <string>

#include "sandpile/graph.hpp"
#include "sandpile/linalg.hpp"
#include "sandpile/numeric.hpp"

namespace sandpile {

/// Subgroup G of (R, +) containing Z over which odometers are taken:
/// Z, (1/m)Z, or R.
class Group {
 public:
  enum class Kind { Integers, Fractions, Reals };

  static Group integers() { return Group(Kind::Integers, 1); }
  static Group reals() { return Group(Kind::Reals, 0); }
  /// (1/m)Z; m = 1 is the integers.
  static Group fractions(unsigned long m);

  /// Parses "z", "r", or "q:<m>".
  static Group parse(const std::string& text);

  Kind kind() const noexcept { return kind_; }
  /// m for (1/m)Z; 1 for Z; 0 for R.
  unsigned long denominator() const noexcept { return denominator_; }
  std::string name() const;

  friend bool operator==(const Group&, const Group&) = default;

 private:
  Group(Kind kind, unsigned long denominator) : kind_(kind), denominator_(denominator) {}
  Kind kind_;
  unsigned long denominator_;
};

struct OdometerReport {
  Group group;
  RatVector odometer;
  bool fast_path_used = false;
};

/// sigma - d + 1, the right-hand side c in L' u >= c.
IntVector odometer_rhs(const Multigraph& g, const Sandpile& sigma);

bool is_uniformly_large(const Multigraph& g, const Sandpile& sigma);

/// (L')^{-1}(sigma - d + 1). Throws NotUniformlyLarge unless sigma >= d - 1.
RatVector uniformly_large_r_odometer(const Multigraph& g, const Sandpile& sigma);
RatVector uniformly_large_r_odometer(const Multigraph& g, const ReducedLaplacian& lap, const Sandpile& sigma);

/// Least u >= 0 in R^{V'} with L' u >= c.
///
/// Growing active set: start from u = 0; repeatedly add every vertex whose
/// inequality is violated to the support S and solve L'_{SS} u_S = c_S with
/// u = 0 off S. Since L' is an M-matrix the iterates increase monotonically
/// and stay below every feasible point, so at most |V'| rounds are needed and
/// the result satisfies complementarity: u(v) = 0 or (L' u)(v) = c(v).
RatVector least_real_solution(const IntMatrix& reduced_laplacian, const IntVector& c);

/// The R-odometer. Uses the uniformly-large closed form when it applies.
OdometerReport r_odometer(const Multigraph& g, const Sandpile& sigma);
OdometerReport r_odometer(const Multigraph& g, const ReducedLaplacian& lap, const Sandpile& sigma);

/// The (1/m)Z-odometer: u = w / m where w is the least non-negative integer
/// solution of L' w >= m (sigma - d + 1).
OdometerReport g_odometer(const Multigraph& g, const Sandpile& sigma, unsigned long m);

/// Dispatches on the group.
OdometerReport odometer(const Multigraph& g, const Sandpile& sigma, const Group& group);

}  // namespace sandpile
