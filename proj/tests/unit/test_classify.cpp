#include <doctest.h>

#include <random>

#include "sandpile/classify.hpp"
#include "sandpile/dynamics.hpp"
#include "sandpile/fixtures.hpp"
#include "sandpile/io.hpp"
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

/// Immutability straight from the definition, with no shortcut involved.
bool definition_immutable(const Multigraph& g, const Sandpile& sigma) {
  const auto lap = reduced_laplacian(g);
  const auto u_r = testing::exhaustive_least_real(lap, odometer_rhs(g, sigma));
  return to_rational(stabilize(g, sigma).odometer) == u_r;
}

IntVector random_image(const Multigraph& g, std::mt19937_64& rng, long spread) {
  IntVector a;
  for (std::size_t i = 0; i < g.non_sink_count(); ++i) a.emplace_back(static_cast<long>(rng() % (2 * spread + 1)) - spread);
  return reduced_laplacian(g) * a;
}

}  // namespace

TEST_CASE("fixtures classify as recorded") {
  for (const auto& f : fixtures()) {
    CAPTURE(f.name);
    const auto g = io::parse_family(f.family);
    const auto v = classify(g, Sandpile(g, f.sandpile));
    CHECK(v.immutable == f.immutable);
    CHECK(v.z_odometer == f.z_odometer);
    CHECK(v.r_odometer == f.r_odometer);
  }
}

TEST_CASE("classify examples") {
  const auto k3 = complete(3);
  CHECK_FALSE(classify(k3, sp(k3, {2, 0})).immutable);
  // The real relaxation stops at (5/3, 1/3), strictly below the integer odometer.
  const auto b = classify(k3, sp(k3, {4, 0}));
  CHECK_FALSE(b.immutable);
  CHECK(b.z_odometer == make_int_vector({2, 1}));
  CHECK(b.r_odometer == make_rat_vector({r(5, 3), r(1, 3)}));
  CHECK(classify(k3, sp(k3, {4, 1})).criterion == Criterion::Theorem1);
  CHECK(classify(k3, sp(k3, {0, 0})).criterion == Criterion::Stable);
  CHECK(classify(k3, sp(k3, {2, 0})).criterion == Criterion::Definition);

  const auto p4 = path(4);
  const auto c = classify(p4, sp(p4, {2, 0, 0}));
  CHECK_FALSE(c.immutable);
  CHECK(c.r_odometer == make_rat_vector({r(1, 2), 0, 0}));
  CHECK(c.z_odometer == make_int_vector({1, 0, 0}));
  // (L')^{-1}(sigma - d + 1) is integral here yet is not u^R.
  const auto formal = ReducedLaplacian(p4).solve(odometer_rhs(p4, sp(p4, {2, 0, 0})));
  CHECK(is_integral(formal));
  CHECK(formal != c.r_odometer);

  const auto k4 = complete(4);
  CHECK(ReducedLaplacian(k4).solve(odometer_rhs(k4, sp(k4, {4, 0, 0}))) == make_rat_vector({0, -1, -1}));
  CHECK(to_string(Criterion::ConePartB) == "ConePart(b)");
}

TEST_CASE("is_uniformly_large and theorem1_test") {
  const auto k3 = complete(3);
  CHECK(is_uniformly_large(k3, Sandpile(k3, stability_threshold(k3))));
  CHECK_FALSE(is_uniformly_large(k3, sp(k3, {2, 0})));
  CHECK(is_uniformly_large(k3, sp(k3, {2, 1})));
  CHECK(theorem1_test(k3, Sandpile(k3, stability_threshold(k3))));
  CHECK_FALSE(theorem1_test(k3, sp(k3, {2, 1})));
  CHECK(theorem1_test(k3, sp(k3, {1, 4})));
  CHECK(code_of([&] { theorem1_test(k3, sp(k3, {2, 0})); }) == ErrorCode::NotUniformlyLarge);
}

TEST_CASE("in_laplacian_image") {
  const auto k3 = complete(3);
  CHECK(in_laplacian_image(k3, make_int_vector({0, 3})) == make_int_vector({1, 2}));
  CHECK_FALSE(in_laplacian_image(k3, make_int_vector({1, 0})).has_value());
  CHECK(in_laplacian_image(k3, make_int_vector({0, 0})) == make_int_vector({0, 0}));
  CHECK(code_of([&] { in_laplacian_image(k3, make_int_vector({0})); }) == ErrorCode::SizeMismatch);
}

TEST_CASE("cone_criterion") {
  const auto k3 = complete(3);
  const auto v = cone_criterion(k3, sp(k3, {0, 3}));
  CHECK(v.criterion == Criterion::ConePartB);
  CHECK(v.immutable);
  CHECK(v.r_odometer == make_rat_vector({0, 1}));

  const auto k4 = complete(4);
  CHECK(code_of([&] { cone_criterion(k4, sp(k4, {4, 0, 0})); }) == ErrorCode::CriterionInapplicable);
  CHECK(code_of([&] { cone_criterion(k3, make_int_vector({-1, 5})); }) == ErrorCode::InvalidSandpile);
  CHECK(code_of([&] { cone_criterion(path(4), sp(path(4), {1, 1, 1})); }) == ErrorCode::NotConeOfRegular);

  // Part (a) and part (b) agree with the definition on cones of regular graphs.
  std::mt19937_64 rng(41);
  for (const auto& g : {complete(4), wheel(5), cone(cycle(4)), complete(5)}) {
    const auto threshold = stability_threshold(g);
    for (int trial = 0; trial < 60; ++trial) {
      IntVector values = threshold;
      for (auto& x : values) x += static_cast<long>(rng() % 6);
      const Sandpile sigma(g, values);
      const auto verdict = cone_criterion(g, sigma);
      const auto truth = classify(g, sigma);
      CHECK(verdict.criterion == Criterion::ConePartA);
      CHECK(verdict.immutable == truth.immutable);
      if (truth.immutable) CHECK(verdict.r_odometer == truth.r_odometer);
    }
    for (int trial = 0; trial < 20; ++trial) {
      IntVector a = threshold;
      for (auto& x : a) x += static_cast<long>(rng() % 4);
      const auto sigma = reduced_laplacian(g) * a;
      bool nonneg = true;
      for (const auto& x : sigma) nonneg = nonneg && x >= 0;
      if (!nonneg) continue;
      const auto verdict = cone_criterion(g, sigma);
      const auto truth = classify(g, Sandpile(g, sigma));
      CHECK(verdict.immutable);
      CHECK(truth.immutable);
      CHECK(verdict.r_odometer == truth.r_odometer);
    }
  }
}

TEST_CASE("construct_mutable") {
  const auto k3 = complete(3);
  const auto s = construct_mutable(k3, 1);
  CHECK(s.values() == make_int_vector({2, 1}));
  CHECK_FALSE(classify(k3, s).immutable);

  CHECK(code_of([] { construct_mutable(path(3), 1); }) == ErrorCode::HypothesesFail);
  CHECK(code_of([] { construct_mutable(path(3), 2); }) == ErrorCode::HypothesesFail);
  CHECK(code_of([] { construct_mutable(banana(1), 1); }) == ErrorCode::HypothesesFail);
  CHECK(code_of([] { construct_mutable(complete(3), 0); }) == ErrorCode::SinkNotAllowed);

  for (const auto& g : testing::simple_graph_family(5)) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (v == g.sink()) continue;
      try {
        const auto sigma = construct_mutable(g, v);
        CHECK(is_uniformly_large(g, sigma));
        CHECK_FALSE(definition_immutable(g, sigma));
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::HypothesesFail);
      }
    }
  }
}

TEST_CASE("fast paths agree with the definition on small boxes") {
  for (const auto& g : {complete(3), complete(4), path(3), path(4), wheel(4), cone(path(2)), banana(2), banana(3), star(3)}) {
    const auto d = g.degree_vector();
    IntVector lo(d.size()), hi = d;
    for (auto& x : hi) x += 2;
    const ReducedLaplacian lap(g);
    testing::for_each_in_box(lo, hi, [&](const IntVector& values) {
      const Sandpile sigma(g, values);
      const auto v = classify(g, lap, sigma);
      CHECK(v.immutable == definition_immutable(g, sigma));
      if (is_stable(g, sigma)) CHECK(v.immutable);
      if (is_uniformly_large(g, sigma)) CHECK(theorem1_test(g, lap, sigma) == v.immutable);
    });
  }
}

TEST_CASE("complete_congruence_test") {
  CHECK(complete_congruence_test(4, make_int_vector({3, 3, 3})));
  CHECK_FALSE(complete_congruence_test(3, make_int_vector({2, 1})));
  CHECK(complete_congruence_test(6, make_int_vector({7, 7, 7, 7, 7})));
  CHECK(code_of([] { complete_congruence_test(3, make_int_vector({1})); }) == ErrorCode::SizeMismatch);
  for (std::size_t m = 3; m <= 5; ++m) {
    const auto g = complete(m);
    IntVector lo = stability_threshold(g), hi = lo;
    for (auto& x : hi) x += 3;
    testing::for_each_in_box(lo, hi, [&](const IntVector& values) {
      CHECK(complete_congruence_test(m, values) == theorem1_test(g, Sandpile(g, values)));
    });
  }
}

TEST_CASE("wheel_congruence_test") {
  std::mt19937_64 rng(77);
  CHECK_FALSE(wheel_congruence_test(5, make_int_vector({1, 0, 0, 0})));
  for (std::size_t m = 4; m <= 10; ++m) {
    const auto g = wheel(m);
    for (int trial = 0; trial < 20; ++trial) CHECK(wheel_congruence_test(m, random_image(g, rng, 5)));
    for (int trial = 0; trial < 60; ++trial) {
      IntVector values;
      for (std::size_t i = 0; i + 1 < m; ++i) values.emplace_back(static_cast<long>(rng() % 20));
      CHECK(wheel_congruence_test(m, values) == in_laplacian_image(g, values).has_value());
    }
  }
  for (int trial = 0; trial < 1000; ++trial) {
    IntVector values;
    for (int i = 0; i < 3; ++i) values.emplace_back(static_cast<long>(rng() % 30));
    CHECK(wheel_congruence_test(4, values) == complete_congruence_test(4, values));
  }
  CHECK(code_of([] { wheel_congruence_test(3, make_int_vector({0, 0})); }) == ErrorCode::SizeTooSmall);
}

TEST_CASE("wheel_pow2_test") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    IntVector values;
    for (int i = 0; i < 4; ++i) values.emplace_back(static_cast<long>(rng() % 15));
    CHECK(wheel_pow2_test(2, values) == wheel_congruence_test(5, values));
  }
  for (std::size_t k = 2; k <= 4; ++k) {
    const auto g = wheel((std::size_t{1} << k) + 1);
    for (int trial = 0; trial < 30; ++trial) CHECK(wheel_pow2_test(k, random_image(g, rng, 4)));
  }
  const auto alternating = make_int_vector({5, 0, 5, 0, 5, 0, 5, 0});
  CHECK(wheel_pow2_test(3, alternating) == wheel_congruence_test(9, alternating));
  CHECK(code_of([] { wheel_pow2_test(3, make_int_vector({1, 2, 3})); }) == ErrorCode::NotPowerOfTwo);
  CHECK(code_of([] { wheel_pow2_test(1, make_int_vector({1, 2})); }) == ErrorCode::SizeTooSmall);
}

TEST_CASE("banana_test") {
  CHECK(banana_test(2, 3));
  CHECK_FALSE(banana_test(2, 2));
  for (long s = 0; s <= 20; ++s) CHECK(banana_test(1, s));
  for (std::size_t k = 1; k <= 6; ++k) {
    const auto g = banana(k);
    for (long s = 0; s <= 25; ++s) CHECK(banana_test(k, s) == classify(g, Sandpile(g, make_int_vector({s}))).immutable);
  }
}

TEST_CASE("tree_fast_path") {
  for (std::size_t k = 2; k <= 6; ++k) {
    const auto g = path(k);
    const Sandpile sigma(g, g.degree_vector());
    CHECK(tree_fast_path(g, sigma));
    CHECK(classify(g, sigma).immutable);
  }
  const auto p3 = path(3);
  CHECK(code_of([&] { tree_fast_path(p3, sp(p3, {0, 5})); }) == ErrorCode::NotUniformlyLarge);
  CHECK(classify(p3, sp(p3, {0, 5})).immutable);
  const auto s = star(4);
  IntVector values = stability_threshold(s);
  values[2] += 7;
  CHECK(tree_fast_path(s, Sandpile(s, values)));
  CHECK(code_of([] { tree_fast_path(complete(3), sp(complete(3), {1, 1})); }) == ErrorCode::NotTree);
}
