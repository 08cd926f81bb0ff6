#pragma once

#include <cstddef>
#include <random>

#include "sandpile/graph.hpp"
#include "sandpile/numeric.hpp"

namespace sandpile {

struct StabilizationResult {
  Sandpile stable_config;
  IntVector odometer;  // number of topplings per non-sink vertex
  BigInt topple_count;
};

/// d - 1, indexed by position.
IntVector stability_threshold(const Multigraph& g);

/// L' u computed directly from the multiplicities (no matrix materialized).
IntVector apply_reduced_laplacian(const Multigraph& g, const IntVector& u);

bool is_stable(const Multigraph& g, const Sandpile& sigma);

/// Topples `vertex` once, legal or not: config - L' e_vertex. Grains sent to
/// the sink disappear. `config` may hold any integers.
IntVector topple(const Multigraph& g, IntVector config, std::size_t vertex);

/// Stabilizes by legal topplings. Unstable vertices are processed from a FIFO
/// queue and fired floor(sigma(v) / d(v)) times at once.
StabilizationResult stabilize(const Multigraph& g, const Sandpile& sigma);

/// Stabilizes by firing one uniformly chosen unstable vertex at a time.
StabilizationResult stabilize_random(const Multigraph& g, const Sandpile& sigma, std::mt19937_64& rng);

/// The least w >= 0 in Z^{V'} with L' w >= c.
///
/// Starting from w = 0, any vertex whose inequality is violated is raised by
/// the least amount that restores it. Every feasible u dominates every
/// iterate, so the fixed point is the least element.
IntVector least_integer_solution(const Multigraph& g, const IntVector& c);

}  // namespace sandpile
