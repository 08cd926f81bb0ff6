#include "sandpile/classify.hpp"

#include <stdexcept>
#include <string>

#include "sandpile/closedform.hpp"
#include "sandpile/dynamics.hpp"
#include "sandpile/rodometer.hpp"

namespace sandpile {

namespace {

BigInt mod(const BigInt& x, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

/// Entry of sigma at cyclic label i (mod n), where label 0 aliases label n
/// and label p + 1 lives at position p.
const BigInt& cyclic(const IntVector& sigma, std::int64_t label) {
  const auto n = static_cast<std::int64_t>(sigma.size());
  const auto p = (((label - 1) % n) + n) % n;
  return sigma[static_cast<std::size_t>(p)];
}

RatVector shifted_by_threshold(const Multigraph& g, const IntVector& a) {
  const auto threshold = stability_threshold(g);
  RatVector out;
  out.reserve(a.size());
  for (std::size_t p = 0; p < a.size(); ++p) out.emplace_back(a[p] - threshold[p]);
  return out;
}

void cross_check(bool shortcut, bool definition, std::string_view what) {
  if (shortcut != definition)
    throw std::logic_error(std::string(what) + " disagrees with the definition-level classification");
}

}  // namespace

std::string_view to_string(Criterion c) noexcept {
  switch (c) {
    case Criterion::Definition: return "Definition";
    case Criterion::Stable: return "Stable";
    case Criterion::Theorem1: return "Theorem1";
    case Criterion::ConePartA: return "ConePart(a)";
    case Criterion::ConePartB: return "ConePart(b)";
    case Criterion::TreeTheorem: return "TreeTheorem";
    case Criterion::CompleteCongruence: return "CompleteCongruence";
    case Criterion::WheelCongruence: return "WheelCongruence";
    case Criterion::WheelPow2: return "WheelPow2";
    case Criterion::Banana: return "Banana";
  }
  return "Unknown";
}

Verdict classify(const Multigraph& g, const ReducedLaplacian& lap, const Sandpile& sigma) {
  Verdict v;
  v.z_odometer = stabilize(g, sigma).odometer;
  const auto report = r_odometer(g, lap, sigma);
  v.r_odometer = report.odometer;
  v.immutable = to_rational(v.z_odometer) == v.r_odometer;

  if (is_stable(g, sigma)) {
    v.criterion = Criterion::Stable;
    cross_check(true, v.immutable, "stable sandpile shortcut");
  } else if (report.fast_path_used) {
    v.criterion = Criterion::Theorem1;
    cross_check(is_integral(v.r_odometer), v.immutable, "uniformly large integrality test");
  }
  return v;
}

Verdict classify(const Multigraph& g, const Sandpile& sigma) { return classify(g, ReducedLaplacian(g), sigma); }

bool theorem1_test(const Multigraph& g, const ReducedLaplacian& lap, const Sandpile& sigma) {
  return is_integral(uniformly_large_r_odometer(g, lap, sigma));
}

bool theorem1_test(const Multigraph& g, const Sandpile& sigma) {
  return is_integral(uniformly_large_r_odometer(g, sigma));
}

std::optional<IntVector> in_laplacian_image(const ReducedLaplacian& lap, const IntVector& sigma) {
  if (sigma.size() != lap.matrix().rows()) throw Error(ErrorCode::SizeMismatch, "vector size does not match graph");
  const auto a = lap.solve(sigma);
  if (!is_integral(a)) return std::nullopt;
  return to_integer(a);
}

std::optional<IntVector> in_laplacian_image(const Multigraph& g, const IntVector& sigma) {
  if (sigma.size() != g.non_sink_count()) throw Error(ErrorCode::SizeMismatch, "vector size does not match graph");
  const auto a = solve_exact(reduced_laplacian(g), to_rational(sigma));
  if (!is_integral(a)) return std::nullopt;
  return to_integer(a);
}

Verdict cone_criterion(const Multigraph& g, const IntVector& sigma) {
  return cone_criterion(g, Sandpile(g, sigma));
}

Verdict cone_criterion(const Multigraph& g, const Sandpile& sigma) {
  if (!is_cone_of_regular(g))
    throw Error(ErrorCode::NotConeOfRegular, "graph is not the cone of a regular graph with the apex as sink");
  const ReducedLaplacian lap(g);
  const auto a = in_laplacian_image(lap, sigma.values());

  Verdict v;
  if (is_uniformly_large(g, sigma)) {
    v.criterion = Criterion::ConePartA;
    v.immutable = a.has_value();
    v.r_odometer = a ? shifted_by_threshold(g, *a) : lap.solve(odometer_rhs(g, sigma));
  } else if (a && leq(stability_threshold(g), *a)) {
    v.criterion = Criterion::ConePartB;
    v.immutable = true;
    v.r_odometer = shifted_by_threshold(g, *a);
  } else {
    throw Error(ErrorCode::CriterionInapplicable,
                "sandpile is neither uniformly large nor L' a with a integral and uniformly large");
  }
  v.z_odometer = stabilize(g, sigma).odometer;
  return v;
}

Sandpile construct_mutable(const Multigraph& g, std::size_t vertex) {
  const auto pos = g.position_of(vertex);
  const auto sink = g.sink();
  if (g.multiplicity(vertex, sink) == 0)
    throw Error(ErrorCode::HypothesesFail, "vertex " + std::to_string(vertex) + " is not adjacent to the sink");

  // (a): search from the sink in g with `vertex` removed.
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{sink};
  seen[sink] = true;
  seen[vertex] = true;
  while (!stack.empty()) {
    const auto u = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < n; ++w)
      if (!seen[w] && g.multiplicity(u, w) != 0) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  for (std::size_t w = 0; w < n; ++w)
    if (!seen[w])
      throw Error(ErrorCode::HypothesesFail, "condition (a) fails: vertex " + std::to_string(w) +
                                                 " cannot reach the sink avoiding " + std::to_string(vertex));

  if (g.degree(vertex) < 2)
    throw Error(ErrorCode::HypothesesFail, "condition (b) fails: degree of " + std::to_string(vertex) + " is below 2");

  IntVector values = stability_threshold(g);
  values[pos] += 1;
  return Sandpile(g, std::move(values));
}

bool complete_congruence_test(std::size_t m, const IntVector& sigma) {
  if (m < 2) throw Error(ErrorCode::SizeTooSmall, "complete graph needs m >= 2");
  if (sigma.size() != m - 1) throw Error(ErrorCode::SizeMismatch, "sandpile size does not match K_m");
  const BigInt modulus(static_cast<unsigned long>(m));
  const BigInt first = mod(sigma.front(), modulus);
  for (const auto& x : sigma)
    if (mod(x, modulus) != first) return false;
  return true;
}

bool wheel_congruence_test(std::size_t m, const IntVector& sigma) {
  if (m < 4) throw Error(ErrorCode::SizeTooSmall, "wheel needs m >= 4");
  if (sigma.size() != m - 1) throw Error(ErrorCode::SizeMismatch, "sandpile size does not match W_m");
  const auto n = static_cast<std::int64_t>(m - 1);

  if (n % 2 == 0) {
    const BigInt modulus = 5 * fib(n);
    std::vector<BigInt> coeff(static_cast<std::size_t>(n + 1));
    for (std::int64_t k = 0; k <= n; k += 2) coeff[static_cast<std::size_t>(k)] = mod(lucas(k), modulus);
    for (std::int64_t i = 0; i < n; ++i) {
      BigInt s = coeff[static_cast<std::size_t>(n)] * cyclic(sigma, i + n / 2) + coeff[0] * cyclic(sigma, i);
      for (std::int64_t k = 1; k <= n / 2 - 1; ++k)
        s += coeff[static_cast<std::size_t>(2 * k)] * (cyclic(sigma, i + k) + cyclic(sigma, i - k));
      if (mod(s, modulus) != 0) return false;
    }
    return true;
  }

  const BigInt modulus = lucas(n);
  std::vector<BigInt> coeff(static_cast<std::size_t>(n + 1));
  for (std::int64_t k = 1; k <= n; k += 2) coeff[static_cast<std::size_t>(k)] = mod(fib(k), modulus);
  for (std::int64_t i = 0; i < n; ++i) {
    BigInt s = coeff[static_cast<std::size_t>(n)] * cyclic(sigma, i + (n + 1) / 2);
    for (std::int64_t k = 1; k <= (n - 1) / 2; ++k)
      s += coeff[static_cast<std::size_t>(2 * k - 1)] * (cyclic(sigma, i + k) + cyclic(sigma, i + 1 - k));
    if (mod(s, modulus) != 0) return false;
  }
  return true;
}

bool wheel_pow2_test(std::size_t k, const IntVector& sigma) {
  if (k < 2) throw Error(ErrorCode::SizeTooSmall, "wheel_pow2_test needs k >= 2");
  if (k >= 62 || sigma.size() != (std::size_t{1} << k))
    throw Error(ErrorCode::NotPowerOfTwo, "sandpile must have exactly 2^k entries");
  const auto n = static_cast<std::int64_t>(sigma.size());

  BigInt alternating = 0;
  for (std::int64_t i = 0; i < n; ++i) alternating += (i % 2 == 0 ? 1 : -1) * cyclic(sigma, i);
  if (mod(alternating, 5) != 0) return false;

  for (std::int64_t l = 1; l <= static_cast<std::int64_t>(k) - 1; ++l) {
    const std::int64_t block = std::int64_t{1} << l;
    const BigInt modulus = lucas(block);
    std::vector<BigInt> coeff(static_cast<std::size_t>(block / 2));
    for (std::int64_t j = 0; j < block / 2; ++j) coeff[static_cast<std::size_t>(j)] = mod(lucas(2 * j), modulus);
    for (std::int64_t i = 0; i < block; ++i) {
      BigInt s = 0;
      for (std::int64_t c = 0; c < n / block; ++c) {
        const std::int64_t base = i + block * c;
        BigInt term = coeff[0] * cyclic(sigma, base);
        for (std::int64_t j = 1; j <= block / 2 - 1; ++j)
          term += coeff[static_cast<std::size_t>(j)] * (cyclic(sigma, base + j) + cyclic(sigma, base - j));
        if (c % 2 == 0) s += term;
        else s -= term;
      }
      if (mod(s, modulus) != 0) return false;
    }
  }
  return true;
}

bool banana_test(std::size_t k, const BigInt& s) {
  if (k < 1) throw Error(ErrorCode::SizeTooSmall, "banana graph needs k >= 1");
  if (s < 0) throw Error(ErrorCode::InvalidSandpile, "sandpile value is negative");
  const BigInt kk(static_cast<unsigned long>(k));
  if (s <= kk - 1) return true;
  return mod(s + 1, kk) == 0;
}

bool tree_fast_path(const Multigraph& g, const Sandpile& sigma) {
  if (det_exact(reduced_laplacian(g)) != 1) throw Error(ErrorCode::NotTree, "graph is not a tree");
  if (!is_uniformly_large(g, sigma)) throw Error(ErrorCode::NotUniformlyLarge, "sandpile is not uniformly large");
  return true;
}

}  // namespace sandpile
