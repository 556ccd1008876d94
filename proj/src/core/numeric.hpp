// SPDX-License-Identifier: MIT
//
// Exact arithmetic primitives shared by every module: arbitrary-precision
// integers and rationals, typed errors, and a few small number-theory
// helpers (2-adic valuation, prime factorisation of modest integers).

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace traceform {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

enum class ErrorCode {
  InvalidArgument,  // malformed input: bad rank, non-dominant weight, ...
  CapExceeded,      // an enumeration or search exceeded its configured cap
  NotStabilized,    // a gcd search did not stabilize between bounds
  Overflow,         // a value does not fit the requested fixed-width type
  OutOfScope,       // the requested case is explicitly not covered
  Internal,         // broken invariant; indicates a bug
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

// ---------------------------------------------------------------------------
// Rational helpers
// ---------------------------------------------------------------------------

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rat& q) { return rat_den(q) == 1; }

// Converts an exactly integral rational to Int; anything else is a bug in the
// caller's mathematics, not bad user input.
inline Int to_integer(const Rat& q) {
  if (!is_integer(q)) {
    fail(ErrorCode::Internal,
         "expected an integer, got " + q.convert_to<std::string>());
  }
  return rat_num(q);
}

inline int64_t to_int64(const Int& n) {
  if (n > std::numeric_limits<int64_t>::max() ||
      n < std::numeric_limits<int64_t>::min()) {
    fail(ErrorCode::Overflow, "value does not fit in 64 bits: " +
                                  n.convert_to<std::string>());
  }
  return n.convert_to<int64_t>();
}

using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

// ---------------------------------------------------------------------------
// Small number theory
// ---------------------------------------------------------------------------

// 2-adic valuation; v2(0) is undefined and rejected.
inline int v2(Int n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "v2(0) is undefined");
  if (n < 0) n = -n;
  int v = 0;
  while ((n & 1) == 0) {
    n >>= 1;
    ++v;
  }
  return v;
}

// Binary digit sum of a nonnegative integer.
inline int s2(Int n) {
  if (n < 0) fail(ErrorCode::InvalidArgument, "s2 expects n >= 0");
  int s = 0;
  while (n > 0) {
    s += static_cast<int>(n & 1);
    n >>= 1;
  }
  return s;
}

inline bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  // Deterministic for 64-bit inputs with this many rounds; for larger inputs
  // the error probability is below 2^-50, far beyond anything this library
  // is asked to classify.
  return boost::multiprecision::miller_rabin_test(n, 25);
}

// Ascending list of distinct prime divisors. Inputs here are ratios of
// group invariants (tiny in practice); plain trial division is plenty.
inline std::vector<Int> prime_divisors(Int n) {
  if (n < 0) n = -n;
  std::vector<Int> out;
  if (n <= 1) return out;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Exact division that insists on exactness.
inline Int exact_div(const Int& a, const Int& b) {
  if (b == 0 || a % b != 0) {
    fail(ErrorCode::Internal, "non-exact division " + a.convert_to<std::string>() +
                                  " / " + b.convert_to<std::string>());
  }
  return a / b;
}

}  // namespace traceform
