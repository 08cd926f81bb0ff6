#include "sandpile/dynamics.hpp"

#include <deque>
#include <string>

namespace sandpile {

namespace {

void check_size(const Multigraph& g, std::size_t size) {
  if (size != g.non_sink_count())
    throw Error(ErrorCode::SizeMismatch, "vector length " + std::to_string(size) + " does not match " +
                                             std::to_string(g.non_sink_count()) + " non-sink vertices");
}

BigInt big(std::size_t x) { return BigInt(static_cast<unsigned long>(x)); }

/// Fires the vertex at `pos` `times` times in place.
void fire(const Multigraph& g, IntVector& config, std::size_t pos, const BigInt& times) {
  const auto v = g.vertex_at(pos);
  config[pos] -= times * big(g.degree(v));
  const auto& vs = g.non_sink_vertices();
  for (std::size_t q = 0; q < vs.size(); ++q)
    if (const auto m = g.multiplicity(v, vs[q]); m != 0) config[q] += times * big(m);
}

}  // namespace

IntVector stability_threshold(const Multigraph& g) {
  auto d = g.degree_vector();
  for (auto& x : d) x -= 1;
  return d;
}

IntVector apply_reduced_laplacian(const Multigraph& g, const IntVector& u) {
  check_size(g, u.size());
  IntVector out(u.size());
  const auto& vs = g.non_sink_vertices();
  for (std::size_t p = 0; p < vs.size(); ++p) {
    out[p] = big(g.degree(vs[p])) * u[p];
    for (std::size_t q = 0; q < vs.size(); ++q)
      if (const auto m = g.multiplicity(vs[p], vs[q]); m != 0) out[p] -= big(m) * u[q];
  }
  return out;
}

bool is_stable(const Multigraph& g, const Sandpile& sigma) {
  check_size(g, sigma.size());
  for (std::size_t p = 0; p < sigma.size(); ++p)
    if (sigma[p] >= big(g.degree(g.vertex_at(p)))) return false;
  return true;
}

IntVector topple(const Multigraph& g, IntVector config, std::size_t vertex) {
  check_size(g, config.size());
  fire(g, config, g.position_of(vertex), 1);
  return config;
}

StabilizationResult stabilize(const Multigraph& g, const Sandpile& sigma) {
  check_size(g, sigma.size());
  const std::size_t n = sigma.size();
  IntVector config = sigma.values();
  IntVector odometer(n);
  BigInt total = 0;

  std::deque<std::size_t> queue;
  std::vector<bool> queued(n, false);
  const auto enqueue_if_unstable = [&](std::size_t p) {
    if (!queued[p] && config[p] >= big(g.degree(g.vertex_at(p)))) {
      queued[p] = true;
      queue.push_back(p);
    }
  };
  for (std::size_t p = 0; p < n; ++p) enqueue_if_unstable(p);

  const auto& vs = g.non_sink_vertices();
  BigInt times;
  while (!queue.empty()) {
    const auto p = queue.front();
    queue.pop_front();
    queued[p] = false;
    const auto d = big(g.degree(vs[p]));
    mpz_fdiv_q(times.get_mpz_t(), config[p].get_mpz_t(), d.get_mpz_t());
    if (times <= 0) continue;
    fire(g, config, p, times);
    odometer[p] += times;
    total += times;
    for (std::size_t q = 0; q < n; ++q)
      if (g.multiplicity(vs[p], vs[q]) != 0) enqueue_if_unstable(q);
  }
  return {Sandpile(std::move(config)), std::move(odometer), std::move(total)};
}

StabilizationResult stabilize_random(const Multigraph& g, const Sandpile& sigma, std::mt19937_64& rng) {
  check_size(g, sigma.size());
  const std::size_t n = sigma.size();
  IntVector config = sigma.values();
  IntVector odometer(n);
  BigInt total = 0;
  std::vector<std::size_t> unstable;
  for (;;) {
    unstable.clear();
    for (std::size_t p = 0; p < n; ++p)
      if (config[p] >= big(g.degree(g.vertex_at(p)))) unstable.push_back(p);
    if (unstable.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, unstable.size() - 1);
    const auto p = unstable[pick(rng)];
    fire(g, config, p, 1);
    odometer[p] += 1;
    total += 1;
  }
  return {Sandpile(std::move(config)), std::move(odometer), std::move(total)};
}

IntVector least_integer_solution(const Multigraph& g, const IntVector& c) {
  check_size(g, c.size());
  const std::size_t n = c.size();
  const auto& vs = g.non_sink_vertices();
  IntVector w(n);
  // residual = L' w - c, maintained incrementally.
  IntVector residual(n);
  for (std::size_t p = 0; p < n; ++p) residual[p] = -c[p];

  std::deque<std::size_t> queue;
  std::vector<bool> queued(n, false);
  for (std::size_t p = 0; p < n; ++p)
    if (residual[p] < 0) {
      queued[p] = true;
      queue.push_back(p);
    }

  BigInt step;
  while (!queue.empty()) {
    const auto p = queue.front();
    queue.pop_front();
    queued[p] = false;
    if (residual[p] >= 0) continue;
    const auto d = big(g.degree(vs[p]));
    BigInt deficit = -residual[p];
    mpz_cdiv_q(step.get_mpz_t(), deficit.get_mpz_t(), d.get_mpz_t());
    w[p] += step;
    residual[p] += step * d;
    for (std::size_t q = 0; q < n; ++q)
      if (const auto m = g.multiplicity(vs[p], vs[q]); m != 0) {
        residual[q] -= step * big(m);
        if (residual[q] < 0 && !queued[q]) {
          queued[q] = true;
          queue.push_back(q);
        }
      }
  }
  return w;
}

}  // namespace sandpile
