#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sandpile/graph.hpp"
#include "sandpile/numeric.hpp"

namespace sandpile {

/// Worked example with known odometers and verdict.
struct Fixture {
  std::string name;
  std::string family;  // as accepted by io::parse_family
  IntVector sandpile;
  IntVector z_odometer;
  RatVector r_odometer;
  bool immutable = false;
};

const std::vector<Fixture>& fixtures();

/// Looks a fixture up by name; throws ParseError listing the known names.
const Fixture& find_fixture(std::string_view name);

}  // namespace sandpile
