#include "sandpile/fixtures.hpp"

namespace sandpile {

namespace {

RatVector q(std::initializer_list<std::pair<long, long>> entries) {
  RatVector out;
  for (auto [num, den] : entries) {
    Rational x(num, den);
    x.canonicalize();
    out.push_back(x);
  }
  return out;
}

std::vector<Fixture> build() {
  std::vector<Fixture> f;
  f.push_back({"complete1", "complete:3", make_int_vector({2, 0}), make_int_vector({1, 0}),
               q({{1, 2}, {0, 1}}), false});
  f.push_back({"complete2", "complete:4", make_int_vector({4, 0, 0}), make_int_vector({1, 0, 0}),
               q({{2, 3}, {0, 1}, {0, 1}}), false});
  f.push_back({"thm2.2", "complete:3", make_int_vector({4, 0}), make_int_vector({2, 1}),
               q({{5, 3}, {1, 3}}), false});
  f.push_back({"expanded", "complete:3", make_int_vector({0, 3}), make_int_vector({0, 1}),
               q({{0, 1}, {1, 1}}), true});
  f.push_back({"ex", "complete:3", make_int_vector({1, 0}), make_int_vector({0, 0}),
               q({{0, 1}, {0, 1}}), true});
  f.push_back({"trivial", "banana:2", make_int_vector({0}), make_int_vector({0}), q({{0, 1}}), true});
  f.push_back({"immutablepath", "path:3", make_int_vector({0, 3}), make_int_vector({2, 5}),
               q({{2, 1}, {5, 1}}), true});
  f.push_back({"path4", "path:4", make_int_vector({2, 0, 0}), make_int_vector({1, 0, 0}),
               q({{1, 2}, {0, 1}, {0, 1}}), false});
  f.push_back({"multik2", "banana:3", make_int_vector({5}), make_int_vector({1}), q({{1, 1}}), true});
  f.push_back({"multik2-mutable", "banana:2", make_int_vector({2}), make_int_vector({1}), q({{1, 2}}), false});
  f.push_back({"construct-K3", "complete:3", make_int_vector({2, 1}), make_int_vector({1, 1}),
               q({{2, 3}, {1, 3}}), false});
  return f;
}

}  // namespace

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = build();
  return all;
}

const Fixture& find_fixture(std::string_view name) {
  for (const auto& f : fixtures())
    if (f.name == name) return f;
  std::string known;
  for (const auto& f : fixtures()) known += (known.empty() ? "" : ", ") + f.name;
  throw Error(ErrorCode::ParseError, "unknown fixture '" + std::string(name) + "'; known: " + known);
}

}  // namespace sandpile
