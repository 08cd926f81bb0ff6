#include "sandpile/rodometer.hpp"

#include <charconv>

#include "sandpile/dynamics.hpp"

namespace sandpile {

Group Group::fractions(unsigned long m) {
  if (m == 0) throw Error(ErrorCode::ParseError, "group denominator must be positive");
  return m == 1 ? integers() : Group(Kind::Fractions, m);
}

Group Group::parse(const std::string& text) {
  if (text == "z" || text == "Z") return integers();
  if (text == "r" || text == "R") return reals();
  if (text.size() > 2 && (text[0] == 'q' || text[0] == 'Q') && text[1] == ':') {
    unsigned long m = 0;
    const char* first = text.data() + 2;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, m);
    if (ec == std::errc() && ptr == last && m > 0) return fractions(m);
  }
  throw Error(ErrorCode::ParseError, "group must be z, r, or q:<m> with m >= 1, got '" + text + "'");
}

std::string Group::name() const {
  switch (kind_) {
    case Kind::Integers: return "z";
    case Kind::Reals: return "r";
    case Kind::Fractions: return "q:" + std::to_string(denominator_);
  }
  return "?";
}

IntVector odometer_rhs(const Multigraph& g, const Sandpile& sigma) {
  if (sigma.size() != g.non_sink_count()) throw Error(ErrorCode::SizeMismatch, "sandpile size does not match graph");
  IntVector c = sigma.values();
  const auto threshold = stability_threshold(g);
  for (std::size_t p = 0; p < c.size(); ++p) c[p] -= threshold[p];
  return c;
}

bool is_uniformly_large(const Multigraph& g, const Sandpile& sigma) {
  for (const auto& x : odometer_rhs(g, sigma))
    if (x < 0) return false;
  return true;
}

RatVector uniformly_large_r_odometer(const Multigraph& g, const ReducedLaplacian& lap, const Sandpile& sigma) {
  const auto c = odometer_rhs(g, sigma);
  for (const auto& x : c)
    if (x < 0) throw Error(ErrorCode::NotUniformlyLarge, "sandpile is not uniformly large");
  return lap.solve(c);
}

RatVector uniformly_large_r_odometer(const Multigraph& g, const Sandpile& sigma) {
  const auto c = odometer_rhs(g, sigma);
  for (const auto& x : c)
    if (x < 0) throw Error(ErrorCode::NotUniformlyLarge, "sandpile is not uniformly large");
  return solve_exact(reduced_laplacian(g), to_rational(c));
}

RatVector least_real_solution(const IntMatrix& lap, const IntVector& c) {
  const std::size_t n = c.size();
  if (!lap.square() || lap.rows() != n) throw Error(ErrorCode::SizeMismatch, "system shape mismatch");

  RatVector u(n);
  std::vector<bool> in_support(n, false);
  for (;;) {
    // Violated inequalities at the current iterate.
    bool grew = false;
    for (std::size_t i = 0; i < n; ++i) {
      Rational lhs = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (u[j] != 0) lhs += Rational(lap(i, j)) * u[j];
      if (lhs < Rational(c[i])) {
        if (in_support[i]) throw Error(ErrorCode::Singular, "active-set iteration failed to converge");
        in_support[i] = true;
        grew = true;
      }
    }
    if (!grew) return u;

    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < n; ++i)
      if (in_support[i]) support.push_back(i);
    IntMatrix sub(support.size(), support.size());
    RatVector rhs(support.size());
    for (std::size_t a = 0; a < support.size(); ++a) {
      rhs[a] = c[support[a]];
      for (std::size_t b = 0; b < support.size(); ++b) sub(a, b) = lap(support[a], support[b]);
    }
    const auto solved = solve_exact(sub, rhs);
    u.assign(n, Rational(0));
    for (std::size_t a = 0; a < support.size(); ++a) u[support[a]] = solved[a];
  }
}

OdometerReport r_odometer(const Multigraph& g, const ReducedLaplacian& lap, const Sandpile& sigma) {
  const auto c = odometer_rhs(g, sigma);
  bool large = true;
  for (const auto& x : c) large = large && x >= 0;
  if (large) return {Group::reals(), lap.solve(c), true};
  return {Group::reals(), least_real_solution(lap.matrix(), c), false};
}

OdometerReport r_odometer(const Multigraph& g, const Sandpile& sigma) {
  const auto c = odometer_rhs(g, sigma);
  const auto lap = reduced_laplacian(g);
  bool large = true;
  for (const auto& x : c) large = large && x >= 0;
  if (large) return {Group::reals(), solve_exact(lap, to_rational(c)), true};
  return {Group::reals(), least_real_solution(lap, c), false};
}

OdometerReport g_odometer(const Multigraph& g, const Sandpile& sigma, unsigned long m) {
  const auto group = Group::fractions(m);
  auto c = odometer_rhs(g, sigma);
  const BigInt scale(m);
  for (auto& x : c) x *= scale;
  const auto w = least_integer_solution(g, c);
  RatVector u;
  u.reserve(w.size());
  for (const auto& x : w) {
    Rational q(x, scale);
    q.canonicalize();
    u.push_back(std::move(q));
  }
  return {group, std::move(u), false};
}

OdometerReport odometer(const Multigraph& g, const Sandpile& sigma, const Group& group) {
  switch (group.kind()) {
    case Group::Kind::Reals: return r_odometer(g, sigma);
    case Group::Kind::Integers: return g_odometer(g, sigma, 1);
    case Group::Kind::Fractions: return g_odometer(g, sigma, group.denominator());
  }
  return r_odometer(g, sigma);
}

}  // namespace sandpile
