#pragma once

#include "numeric.hpp"

#include <vector>

namespace traceform {

// Dominant weight of SL_n in the exponent model: nonincreasing nonnegative
// integers e_1 >= ... >= e_{n-1} >= 0 (with e_n pinned to 0).  Fundamental
// weight coordinates are the successive differences c_i = e_i - e_{i+1}.
struct ExponentWeight {
  int64_t n = 0;
  std::vector<int64_t> exponents;  // length n - 1
};

// Validates shape and monotonicity; throws InvalidArgument otherwise.
void validate(const ExponentWeight& w);

// Partition of the multiset {e_1, ..., e_{n-1}, 0} into distinct values
// a_1 > ... > a_k = 0 with repetition counts r_1, ..., r_k summing to n.
struct ExponentPartition {
  std::vector<int64_t> values;
  std::vector<int64_t> counts;
};
ExponentPartition partition_of(const ExponentWeight& w);

// Closed form for the orbit index of the weight:
//   (n-2)!/(r_1! ... r_k!) * [ n * sum r_i a_i^2 - (sum r_i a_i)^2 ],
// with 0! = 1 covering n = 2.  Always a nonnegative integer.
Int orbit_index_typeA(const ExponentWeight& w);

// Residue of e_1 + ... + e_{n-1} mod m (requires m | n); the weight is a
// character of SL_n/mu_m exactly when this vanishes.
int64_t center_character(const ExponentWeight& w, int64_t m);

// Normalization constant of SL_n/mu_m in closed form: m / gcd(m, n/m).
Int e_constant_typeA(int64_t n, int64_t m);

// Primes dividing gcd(m, n/m) (m odd) or 2 gcd(m, n/m) (m even): the
// support of index/normalization ratio for SL_n/mu_m.
std::vector<Int> ratio_primes_typeA(int64_t n, int64_t m);

// Conversions between the exponent model and fundamental-weight coordinates
// of the A_{n-1} root system.
std::vector<int64_t> to_fundamental_coords(const ExponentWeight& w);
ExponentWeight from_fundamental_coords(int64_t n,
                                       const std::vector<int64_t>& coords);

// Instance check of the 2-adic lower bound: whenever
// v2(sum e_i) >= v2(n) > 0 (and the weight is nonzero), the orbit index
// satisfies v2(index) > v2(n).
struct P2Verdict {
  bool applicable = false;  // hypothesis satisfied
  int v2_n = 0;
  int v2_index = 0;
  bool holds = false;  // v2_index > v2_n (meaningful only when applicable)
};
P2Verdict check_p2_claim(const ExponentWeight& w);

}  // namespace traceform
