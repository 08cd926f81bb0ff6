#include "sandpile/numeric.hpp"

namespace sandpile {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::SizeTooSmall: return "SizeTooSmall";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::SinkNotAllowed: return "SinkNotAllowed";
    case ErrorCode::InvalidSandpile: return "InvalidSandpile";
    case ErrorCode::NotUniformlyLarge: return "NotUniformlyLarge";
    case ErrorCode::NotConeOfRegular: return "NotConeOfRegular";
    case ErrorCode::CriterionInapplicable: return "CriterionInapplicable";
    case ErrorCode::HypothesesFail: return "HypothesesFail";
    case ErrorCode::NotTree: return "NotTree";
    case ErrorCode::NotPowerOfTwo: return "NotPowerOfTwo";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rational(m(r, c));
  return out;
}

RatVector to_rational(const IntVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

bool is_integral(const RatVector& v) {
  for (const auto& q : v)
    if (q.get_den() != 1) return false;
  return true;
}

IntVector to_integer(const RatVector& v) {
  IntVector out;
  out.reserve(v.size());
  for (const auto& q : v) {
    if (q.get_den() != 1) throw Error(ErrorCode::SizeMismatch, "vector is not integral");
    out.push_back(q.get_num());
  }
  return out;
}

IntVector make_int_vector(std::initializer_list<long> values) {
  IntVector out;
  out.reserve(values.size());
  for (long x : values) out.emplace_back(x);
  return out;
}

RatVector make_rat_vector(std::initializer_list<Rational> values) { return RatVector(values); }

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const BigInt& z) { return z.get_str(); }

}  // namespace sandpile
