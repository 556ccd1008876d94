#include "typea.hpp"

#include <algorithm>
#include <numeric>

namespace traceform {

void validate(const ExponentWeight& w) {
  if (w.n < 2) {
    fail(ErrorCode::InvalidArgument, "exponent weight: need n >= 2");
  }
  if (w.exponents.size() != static_cast<size_t>(w.n - 1)) {
    fail(ErrorCode::InvalidArgument,
         "exponent weight: expected n - 1 exponents");
  }
  for (size_t i = 0; i < w.exponents.size(); ++i) {
    if (w.exponents[i] < 0) {
      fail(ErrorCode::InvalidArgument,
           "exponent weight: exponents must be nonnegative");
    }
    if (i + 1 < w.exponents.size() && w.exponents[i] < w.exponents[i + 1]) {
      fail(ErrorCode::InvalidArgument,
           "exponent weight: exponents must be nonincreasing");
    }
  }
}

ExponentPartition partition_of(const ExponentWeight& w) {
  validate(w);
  ExponentPartition p;
  for (int64_t e : w.exponents) {
    if (!p.values.empty() && p.values.back() == e) {
      ++p.counts.back();
    } else {
      p.values.push_back(e);
      p.counts.push_back(1);
    }
  }
  // The value 0 always closes the list (e_n = 0).
  if (!p.values.empty() && p.values.back() == 0) {
    ++p.counts.back();
  } else {
    p.values.push_back(0);
    p.counts.push_back(1);
  }
  return p;
}

Int orbit_index_typeA(const ExponentWeight& w) {
  const ExponentPartition p = partition_of(w);
  const Int n = w.n;

  Int factorial = 1;  // (n - 2)!, with 0! = 1 covering n = 2
  for (Int i = 2; i <= n - 2; ++i) factorial *= i;
  Int denominator = 1;
  for (int64_t r : p.counts) {
    for (int64_t i = 2; i <= r; ++i) denominator *= i;
  }
  Int sum = 0, square_sum = 0;
  for (size_t i = 0; i < p.values.size(); ++i) {
    sum += Int(p.counts[i]) * p.values[i];
    square_sum += Int(p.counts[i]) * p.values[i] * p.values[i];
  }
  const Rat result =
      Rat(factorial, denominator) * (n * square_sum - sum * sum);
  if (!is_integer(result) || result < 0) {
    fail(ErrorCode::Internal, "orbit_index_typeA: non-integral value");
  }
  return to_integer(result);
}

int64_t center_character(const ExponentWeight& w, int64_t m) {
  validate(w);
  if (m < 1 || w.n % m != 0) {
    fail(ErrorCode::InvalidArgument,
         "center_character: modulus must divide n");
  }
  int64_t sum = 0;
  for (int64_t e : w.exponents) sum = (sum + e % m) % m;
  return sum;
}

Int e_constant_typeA(int64_t n, int64_t m) {
  if (n < 2 || m < 1 || n % m != 0) {
    fail(ErrorCode::InvalidArgument, "e_constant_typeA: need m | n, n >= 2");
  }
  return Int(m / std::gcd(m, n / m));
}

std::vector<Int> ratio_primes_typeA(int64_t n, int64_t m) {
  if (n < 2 || m < 1 || n % m != 0) {
    fail(ErrorCode::InvalidArgument, "ratio_primes_typeA: need m | n, n >= 2");
  }
  Int base = std::gcd(m, n / m);
  if (m % 2 == 0) base *= 2;
  return prime_divisors(base);
}

std::vector<int64_t> to_fundamental_coords(const ExponentWeight& w) {
  validate(w);
  std::vector<int64_t> c(w.n - 1);
  for (int64_t i = 0; i + 1 < w.n; ++i) {
    const int64_t next = (i + 2 < w.n) ? w.exponents[i + 1] : 0;
    c[i] = w.exponents[i] - next;
  }
  return c;
}

ExponentWeight from_fundamental_coords(int64_t n,
                                       const std::vector<int64_t>& coords) {
  if (n < 2 || coords.size() != static_cast<size_t>(n - 1)) {
    fail(ErrorCode::InvalidArgument,
         "from_fundamental_coords: expected n - 1 coordinates");
  }
  ExponentWeight w{n, std::vector<int64_t>(n - 1)};
  int64_t suffix = 0;
  for (int64_t i = n - 2; i >= 0; --i) {
    if (coords[i] < 0) {
      fail(ErrorCode::InvalidArgument,
           "from_fundamental_coords: coordinates must be nonnegative");
    }
    suffix += coords[i];
    w.exponents[i] = suffix;
  }
  return w;
}

P2Verdict check_p2_claim(const ExponentWeight& w) {
  validate(w);
  P2Verdict verdict;
  const Int total =
      std::accumulate(w.exponents.begin(), w.exponents.end(), Int(0));
  if (w.n % 2 != 0 || total == 0) return verdict;  // not applicable
  verdict.v2_n = v2(Int(w.n));
  if (v2(total) < verdict.v2_n) return verdict;  // hypothesis fails
  verdict.applicable = true;
  verdict.v2_index = v2(orbit_index_typeA(w));
  verdict.holds = verdict.v2_index > verdict.v2_n;
  return verdict;
}

}  // namespace traceform
