#pragma once

#include <cstddef>
#include <cstdint>

#include "sandpile/numeric.hpp"

namespace sandpile {

/// Fibonacci F_k for any integer k (F_1 = F_2 = 1, F_{-a} = (-1)^{a+1} F_a).
BigInt fib(std::int64_t k);
/// Lucas A_k for any integer k (A_0 = 2, A_1 = 1, A_{-a} = (-1)^a A_a).
BigInt lucas(std::int64_t k);

/// (L')^{-1} of P_{n+1} with the sink at an endpoint: entry min(i, j).
RatMatrix path_inverse(std::size_t n);

/// (L')^{-1} of K_{n+1}: (J + I) / (n + 1).
RatMatrix complete_inverse(std::size_t n);

/// (L')^{-1} of W_{n+1}, rim positions in cyclic order. Circulant whose
/// first row at cyclic offset m is A_{|n-2m|} / (5 F_n) for even n and
/// F_{|n-2m|} / A_n for odd n.
RatMatrix wheel_inverse(std::size_t n);

/// Spanning trees of W_{n+1}: A_{2n} - 2.
BigInt wheel_tree_count(std::size_t n);
/// Spanning trees of the cone over P_k: F_{2k}.
BigInt cone_path_tree_count(std::size_t k);
/// Spanning trees of K_{n+1}: (n+1)^{n-1}.
BigInt cayley_count(std::size_t n);

/// A_{2j} = (-1)^j A_0 (mod 5) and A_{2(j + c 2^l)} = (-1)^c A_{2j} (mod A_{2^l}).
bool lucas_congruences_check(std::int64_t j, std::int64_t l, std::int64_t c);

/// The addition and subtraction formulas linking F and A at (a, b).
bool fib_lucas_identity_check(std::int64_t a, std::int64_t b);

}  // namespace sandpile
