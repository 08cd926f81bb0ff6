#include "sandpile/closedform.hpp"

#include <cstdlib>
#include <mutex>
#include <vector>

namespace sandpile {

namespace {

/// Memo of F_k and A_k for k >= 0, grown on demand.
class FibLucasTable {
 public:
  std::pair<BigInt, BigInt> at(std::uint64_t k) {
    std::lock_guard lock(mutex_);
    while (fib_.size() <= k) {
      const auto i = fib_.size();
      fib_.push_back(fib_[i - 1] + fib_[i - 2]);
      lucas_.push_back(lucas_[i - 1] + lucas_[i - 2]);
    }
    return {fib_[k], lucas_[k]};
  }

 private:
  std::mutex mutex_;
  std::vector<BigInt> fib_{0, 1};
  std::vector<BigInt> lucas_{2, 1};
};

FibLucasTable& table() {
  static FibLucasTable t;
  return t;
}

BigInt big(std::size_t x) { return BigInt(static_cast<unsigned long>(x)); }

bool divides(const BigInt& modulus, const BigInt& x) {
  if (modulus == 0) return x == 0;
  return mpz_divisible_p(x.get_mpz_t(), modulus.get_mpz_t()) != 0;
}

RatMatrix circulant(std::size_t n, const std::vector<BigInt>& first_row, const BigInt& denominator) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational q(first_row[(j + n - i) % n], denominator);
      q.canonicalize();
      m(i, j) = q;
    }
  return m;
}

}  // namespace

BigInt fib(std::int64_t k) {
  if (k >= 0) return table().at(static_cast<std::uint64_t>(k)).first;
  const auto a = static_cast<std::uint64_t>(-k);
  BigInt f = table().at(a).first;
  return a % 2 == 1 ? f : BigInt(-f);
}

BigInt lucas(std::int64_t k) {
  if (k >= 0) return table().at(static_cast<std::uint64_t>(k)).second;
  const auto a = static_cast<std::uint64_t>(-k);
  BigInt l = table().at(a).second;
  return a % 2 == 0 ? l : BigInt(-l);
}

RatMatrix path_inverse(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::SizeTooSmall, "path_inverse needs n >= 1");
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = big(std::min(i, j) + 1);
  return m;
}

RatMatrix complete_inverse(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::SizeTooSmall, "complete_inverse needs n >= 2");
  std::vector<BigInt> row(n, BigInt(1));
  row[0] = 2;
  return circulant(n, row, big(n + 1));
}

RatMatrix wheel_inverse(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::SizeTooSmall, "wheel_inverse needs n >= 3");
  const auto sn = static_cast<std::int64_t>(n);
  std::vector<BigInt> row(n);
  for (std::int64_t m = 0; m < sn; ++m) {
    const auto idx = std::llabs(sn - 2 * m);
    row[static_cast<std::size_t>(m)] = n % 2 == 0 ? lucas(idx) : fib(idx);
  }
  const BigInt denominator = n % 2 == 0 ? BigInt(5 * fib(sn)) : lucas(sn);
  return circulant(n, row, denominator);
}

BigInt wheel_tree_count(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::SizeTooSmall, "wheel_tree_count needs n >= 3");
  return lucas(2 * static_cast<std::int64_t>(n)) - 2;
}

BigInt cone_path_tree_count(std::size_t k) {
  if (k < 1) throw Error(ErrorCode::SizeTooSmall, "cone_path_tree_count needs k >= 1");
  return fib(2 * static_cast<std::int64_t>(k));
}

BigInt cayley_count(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::SizeTooSmall, "cayley_count needs n >= 1");
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(n + 1), static_cast<unsigned long>(n - 1));
  return out;
}

bool lucas_congruences_check(std::int64_t j, std::int64_t l, std::int64_t c) {
  if (l < 1) throw Error(ErrorCode::SizeTooSmall, "lucas_congruences_check needs l >= 1");
  const BigInt sign_j = j % 2 == 0 ? 1 : -1;
  const bool mod5 = divides(5, lucas(2 * j) - sign_j * lucas(0));

  const std::int64_t pow = std::int64_t{1} << l;
  const BigInt modulus = lucas(pow);
  const BigInt sign_c = c % 2 == 0 ? 1 : -1;
  const bool mod_a = divides(modulus, lucas(2 * (j + c * pow)) - sign_c * lucas(2 * j));
  return mod5 && mod_a;
}

bool fib_lucas_identity_check(std::int64_t a, std::int64_t b) {
  const BigInt fa = fib(a), fb = fib(b), la = lucas(a), lb = lucas(b);
  const BigInt sign_b = b % 2 == 0 ? 1 : -1;
  const bool fib_add = 2 * fib(a + b) == fa * lb + la * fb;
  const bool lucas_add = 2 * lucas(a + b) == 5 * fa * fb + la * lb;
  const bool fib_sub = 2 * fib(a - b) == sign_b * (fa * lb - la * fb);
  const bool lucas_sub = 2 * lucas(a - b) == -sign_b * (5 * fa * fb - la * lb);
  return fib_add && lucas_add && fib_sub && lucas_sub;
}

}  // namespace sandpile
