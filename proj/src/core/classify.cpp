// SPDX-License-Identifier: MIT

#include "classify.hpp"

#include "numeric.hpp"

#include <algorithm>

namespace traceform {
namespace {

void require_type_rank(char type, int rank) {
  // Delegates range checking to the root-system factory.
  RootSystem::create(type, rank);
}

bool contains(const std::vector<Int>& v, const Int& p) {
  return std::find(v.begin(), v.end(), p) != v.end();
}

}  // namespace

std::vector<Int> very_good_excluded_primes(char type, int rank) {
  require_type_rank(type, rank);
  switch (type) {
    case 'A':
      return prime_divisors(Int(rank) + 1);
    case 'B':
    case 'C':
    case 'D':
      return {Int(2)};
    case 'G':
    case 'F':
      return {Int(2), Int(3)};
    case 'E':
      if (rank == 8) return {Int(2), Int(3), Int(5)};
      return {Int(2), Int(3)};
    default:
      fail(ErrorCode::InvalidArgument, "unknown type");
  }
}

std::vector<Int> very_good_excluded_primes(const GroupForm& form) {
  return very_good_excluded_primes(form.rs->type(), form.rs->rank());
}

void require_characteristic(const Int& p) {
  if (p == 0) return;
  if (p < 0 || !is_prime(p)) {
    fail(ErrorCode::InvalidArgument,
         "characteristic must be zero or a prime, got " + p.str());
  }
}

Classification classify_group(const GroupForm& form, int bound) {
  GroupIndexResult gi = group_index(form, bound);
  if (!gi.stabilized) {
    fail(ErrorCode::NotStabilized,
         "inconclusive: group index gcd did not stabilize at bound " +
             std::to_string(bound) + " for " + form.label);
  }
  Classification c;
  c.label = form.label;
  c.group_index_value = gi.value;
  c.e_value = compute_E(form);
  if (c.group_index_value % c.e_value != 0) {
    fail(ErrorCode::Internal,
         "normalization constant does not divide the group index");
  }
  c.ratio = c.group_index_value / c.e_value;
  c.degenerate_primes = very_good_excluded_primes(form);
  c.zero_primes = prime_divisors(c.ratio);
  return c;
}

bool trace_zero_all(const GroupForm& form, const Int& p, int bound) {
  require_characteristic(p);
  if (p == 0) return false;
  Classification c = classify_group(form, bound);
  return c.ratio % p == 0;
}

bool trace_zero_single(const Int& n_rho, const Int& e_g, const Int& p) {
  require_characteristic(p);
  if (e_g <= 0) {
    fail(ErrorCode::InvalidArgument,
         "normalization constant must be positive");
  }
  if (n_rho < 0 || n_rho % e_g != 0) {
    fail(ErrorCode::InvalidArgument,
         "normalization constant must divide the representation index");
  }
  if (p == 0) return n_rho == 0;  // 0 | x exactly when x = 0
  return (n_rho / e_g) % p == 0;
}

bool nondegenerate_exists(const GroupForm& form, const Int& p) {
  require_characteristic(p);
  if (p == 0) return true;
  return !contains(very_good_excluded_primes(form), p);
}

CharacteristicVerdict classify_at(const GroupForm& form, const Int& p,
                                  int bound) {
  CharacteristicVerdict v;
  v.exists_nonzero = !trace_zero_all(form, p, bound);
  v.exists_nondegenerate = nondegenerate_exists(form, p);
  return v;
}

// ---------------------------------------------------------------------------
// Twisted forms
// ---------------------------------------------------------------------------

TwistedType parse_twisted(const std::string& label) {
  if (label.size() < 3) {
    fail(ErrorCode::InvalidArgument,
         "twisted label must look like 2A4 or 3D4, got '" + label + "'");
  }
  TwistedType t;
  const char tw = label[0];
  if (tw != '1' && tw != '2' && tw != '3' && tw != '6') {
    fail(ErrorCode::InvalidArgument,
         "twist order must be 1, 2, 3 or 6, got '" + label + "'");
  }
  t.twist = tw - '0';
  t.type = label[1];
  try {
    size_t used = 0;
    t.rank = std::stoi(label.substr(2), &used);
    if (used != label.size() - 2) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    fail(ErrorCode::InvalidArgument, "bad rank in twisted label '" + label + "'");
  }
  require_type_rank(t.type, t.rank);
  switch (t.twist) {
    case 1:
      break;
    case 2:
      if (t.type == 'A' && t.rank >= 2) break;
      if (t.type == 'D' && t.rank >= 4) break;
      if (t.type == 'E' && t.rank == 6) break;
      fail(ErrorCode::InvalidArgument,
           "no outer automorphism of order 2 for " + label.substr(1));
    default:  // 3 or 6
      if (t.type == 'D' && t.rank == 4) break;
      fail(ErrorCode::InvalidArgument,
           "twist orders 3 and 6 exist only for D4");
  }
  return t;
}

TwistedVerdict twisted_classify(const TwistedType& t, const Int& p,
                                bool simply_connected) {
  require_type_rank(t.type, t.rank);
  parse_twisted(std::to_string(t.twist) + t.type + std::to_string(t.rank));
  require_characteristic(p);
  const bool trivial_center =
      (t.type == 'G' || t.type == 'F' || (t.type == 'E' && t.rank == 8));
  if (trivial_center && !simply_connected) {
    fail(ErrorCode::InvalidArgument,
         "every group of this type is simply connected");
  }

  TwistedVerdict v;
  v.computed = false;

  // Characteristics in which every trace form is degenerate, regardless of
  // the isogeny.  Published-table lookup.
  if (p != 0) {
    if (t.type == 'A' && t.twist == 2 && (t.rank + 1) % 2 == 1) {
      // Outer form of A_{n-1} with n odd: p | 2n.
      v.degenerate_always = (Int(2 * (t.rank + 1)) % p == 0);
    } else if (t.type == 'D' && t.rank == 4 &&
               (t.twist == 3 || t.twist == 6)) {
      v.degenerate_always = (p == 2 || p == 3);
    } else {
      v.degenerate_always = contains(very_good_excluded_primes(t.type, t.rank), p);
    }
  }

  // Characteristics in which every trace form is zero.  The published
  // classification covers only groups that are neither simply connected
  // nor of type A; everything else stays open here.  D3 counts as type A3.
  if (simply_connected || t.type == 'A' || (t.type == 'D' && t.rank == 3)) {
    v.zero_always = std::nullopt;
    return v;
  }
  if (p == 0) {
    v.zero_always = false;
    return v;
  }
  switch (t.type) {
    case 'B':
    case 'C':
      v.zero_always = (p == 2);
      break;
    case 'D':
      if (t.rank == 4 && (t.twist == 3 || t.twist == 6)) {
        v.zero_always = (p == 2 || p == 3);
      } else {
        v.zero_always = (p == 2);
      }
      break;
    case 'E':
      if (t.rank == 6) {
        v.zero_always = (p == 2);
      } else {  // rank 7; rank 8 was rejected above
        v.zero_always = (p == 2 || p == 3);
      }
      break;
    default:
      fail(ErrorCode::Internal, "unreachable twisted type");
  }
  return v;
}

}  // namespace traceform
