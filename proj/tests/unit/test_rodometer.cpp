#include <doctest.h>

#include <random>

#include "sandpile/dynamics.hpp"
#include "sandpile/linalg.hpp"
#include "sandpile/rodometer.hpp"
#include "support/oracles.hpp"

using namespace sandpile;

namespace {

Rational r(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Sandpile sp(const Multigraph& g, std::initializer_list<long> v) { return Sandpile(g, make_int_vector(v)); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::ParseError;
}

bool satisfies_odometer_inequalities(const Multigraph& g, const Sandpile& sigma, const RatVector& u) {
  const auto lap = to_rational(reduced_laplacian(g));
  const auto lu = lap * u;
  const auto threshold = stability_threshold(g);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] < 0) return false;
    if (Rational(sigma[i]) - lu[i] > Rational(threshold[i])) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("group parsing") {
  CHECK(Group::parse("z") == Group::integers());
  CHECK(Group::parse("r") == Group::reals());
  CHECK(Group::parse("q:6").denominator() == 6);
  CHECK(Group::parse("q:1") == Group::integers());
  CHECK(Group::parse("q:6").name() == "q:6");
  CHECK(code_of([] { Group::parse("q:0"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { Group::parse("q:"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { Group::parse("x"); }) == ErrorCode::ParseError);
}

TEST_CASE("r_odometer examples") {
  const auto k3 = complete(3);
  const auto a = r_odometer(k3, sp(k3, {2, 0}));
  CHECK(a.odometer == make_rat_vector({r(1, 2), 0}));
  CHECK_FALSE(a.fast_path_used);

  const auto k4 = complete(4);
  CHECK(r_odometer(k4, sp(k4, {4, 0, 0})).odometer == make_rat_vector({r(2, 3), 0, 0}));

  for (long k = 1; k <= 6; ++k)
    for (long s = k; s <= k + 6; ++s) {
      const auto b = banana(static_cast<std::size_t>(k));
      const auto rep = r_odometer(b, sp(b, {s}));
      CHECK(rep.odometer == make_rat_vector({r(s + 1 - k, k)}));
      CHECK(rep.fast_path_used == (s >= k - 1));
    }
}

TEST_CASE("uniformly_large_r_odometer") {
  for (const auto& g : {complete(4), wheel(6), path(5)}) {
    const auto u = uniformly_large_r_odometer(g, Sandpile(g, stability_threshold(g)));
    CHECK(u == RatVector(g.non_sink_count()));
  }
  const auto k3 = complete(3);
  CHECK(uniformly_large_r_odometer(k3, sp(k3, {2, 1})) == make_rat_vector({r(2, 3), r(1, 3)}));
  const auto p4 = path(4);
  CHECK(uniformly_large_r_odometer(p4, Sandpile(p4, p4.degree_vector())) == make_rat_vector({3, 5, 6}));
  CHECK(code_of([&] { uniformly_large_r_odometer(k3, sp(k3, {2, 0})); }) == ErrorCode::NotUniformlyLarge);
}

TEST_CASE("g_odometer") {
  const auto k3 = complete(3);
  CHECK(g_odometer(k3, sp(k3, {2, 0}), 1).odometer == make_rat_vector({1, 0}));
  CHECK(g_odometer(k3, sp(k3, {2, 0}), 2).odometer == make_rat_vector({r(1, 2), 0}));
  for (long k = 1; k <= 5; ++k)
    for (long s = k; s <= k + 5; ++s) {
      const auto b = banana(static_cast<std::size_t>(k));
      CHECK(g_odometer(b, sp(b, {s}), static_cast<unsigned long>(k)).odometer == make_rat_vector({r(s + 1 - k, k)}));
    }
  CHECK(odometer(k3, sp(k3, {2, 0}), Group::integers()).odometer == make_rat_vector({1, 0}));
  CHECK(odometer(k3, sp(k3, {2, 0}), Group::fractions(2)).group == Group::fractions(2));
}

TEST_CASE("active set matches exhaustive supports; sandwich and lattice properties") {
  std::mt19937_64 rng(101);
  auto graphs = testing::simple_graph_family(4);
  for (const auto& g : testing::random_multigraphs(20, 2, 4, 3, 555)) graphs.push_back(g);
  for (const auto& g : graphs) {
    const ReducedLaplacian lap(g);
    const auto d = g.degree_vector();
    for (int trial = 0; trial < 12; ++trial) {
      IntVector values;
      for (const auto& x : d) values.emplace_back(static_cast<long>(rng() % (2 * x.get_ui() + 3)));
      const Sandpile sigma(g, values);
      const auto c = odometer_rhs(g, sigma);

      const auto u_r = r_odometer(g, lap, sigma).odometer;
      CHECK(u_r == testing::exhaustive_least_real(lap.matrix(), c));
      CHECK(u_r == least_real_solution(lap.matrix(), c));
      CHECK(satisfies_odometer_inequalities(g, sigma, u_r));
      // complementarity
      const auto lu = to_rational(lap.matrix()) * u_r;
      for (std::size_t i = 0; i < c.size(); ++i) CHECK((u_r[i] == 0 || lu[i] == Rational(c[i])));

      const auto u_z = to_rational(stabilize(g, sigma).odometer);
      RatVector previous = u_z;
      for (unsigned long m : {1UL, 2UL, 6UL}) {
        const auto u_m = g_odometer(g, sigma, m).odometer;
        CHECK(satisfies_odometer_inequalities(g, sigma, u_m));
        CHECK(leq(u_r, u_m));
        CHECK(leq(u_m, u_z));
        CHECK(leq(u_m, previous));  // 1 | 2 | 6
        previous = u_m;
      }

      // min of two feasible points is feasible.
      std::vector<RatVector> feasible{u_z, u_r};
      for (int sample = 0; sample < 40; ++sample) {
        RatVector cand;
        for (const auto& x : u_z) cand.push_back(Rational(static_cast<long>(rng() % (6 * x.get_num().get_ui() + 7)), 6));
        for (auto& x : cand) x.canonicalize();
        if (satisfies_odometer_inequalities(g, sigma, cand)) feasible.push_back(cand);
      }
      for (std::size_t i = 0; i < feasible.size(); ++i)
        for (std::size_t j = i + 1; j < feasible.size(); ++j) {
          RatVector lo(c.size());
          for (std::size_t k = 0; k < c.size(); ++k) lo[k] = std::min(feasible[i][k], feasible[j][k]);
          CHECK(satisfies_odometer_inequalities(g, sigma, lo));
          CHECK(leq(u_r, lo));
        }
    }
  }
}

TEST_CASE("fast path agrees with the general solver on uniformly large sandpiles") {
  std::mt19937_64 rng(7);
  for (const auto& g : {wheel(5), complete(4), path(4), cone(cycle(4))}) {
    const ReducedLaplacian lap(g);
    for (int trial = 0; trial < 40; ++trial) {
      IntVector values = stability_threshold(g);
      for (auto& x : values) x += static_cast<long>(rng() % 6);
      const Sandpile sigma(g, values);
      const auto fast = r_odometer(g, lap, sigma);
      CHECK(fast.fast_path_used);
      CHECK(fast.odometer == least_real_solution(lap.matrix(), odometer_rhs(g, sigma)));
      CHECK(fast.odometer == uniformly_large_r_odometer(g, sigma));
    }
  }
}

TEST_CASE("(1/det)Z-immutability matches R-immutability for uniformly large sandpiles") {
  std::mt19937_64 rng(9);
  for (const auto& g : {complete(3), wheel(5), cone(path(3)), path(4)}) {
    const ReducedLaplacian lap(g);
    const auto m = lap.det().get_ui();
    for (int trial = 0; trial < 30; ++trial) {
      IntVector values = stability_threshold(g);
      for (auto& x : values) x += static_cast<long>(rng() % 7);
      const Sandpile sigma(g, values);
      const auto u_z = to_rational(stabilize(g, sigma).odometer);
      const auto u_r = r_odometer(g, lap, sigma).odometer;
      const auto u_m = g_odometer(g, sigma, m).odometer;
      CHECK((u_m == u_z) == (u_r == u_z));
      CHECK(u_m == u_r);
    }
  }
}
