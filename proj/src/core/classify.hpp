#pragma once

#include "dynkin.hpp"

#include <optional>

namespace traceform {

// Primes p such that characteristic p is NOT very good for the type:
// type A rank l -> prime divisors of l+1; B/C/D -> {2};
// G2/F4/E6/E7 -> {2,3}; E8 -> {2,3,5}.  Depends only on the type, not on
// the isogeny.
std::vector<Int> very_good_excluded_primes(char type, int rank);
std::vector<Int> very_good_excluded_primes(const GroupForm& form);

// Throws InvalidArgument unless p is zero or a prime.
void require_characteristic(const Int& p);

// Full split classification data for one isogeny type.
struct Classification {
  std::string label;
  Int group_index_value;          // gcd of orbit indices over T*
  Int e_value;                    // normalization constant
  Int ratio;                      // group_index_value / e_value
  std::vector<Int> degenerate_primes;  // characteristics with every trace
                                       // form degenerate (not very good)
  std::vector<Int> zero_primes;        // characteristics with every trace
                                       // form zero (support of the ratio)
};

// Computes the classification; throws NotStabilized (an "inconclusive"
// verdict) if the gcd scan did not stabilize at the given bound.
Classification classify_group(const GroupForm& form, int bound = 4);

// Every representation has zero trace form in characteristic p?
// p = 0 always gives false.
bool trace_zero_all(const GroupForm& form, const Int& p, int bound = 4);

// The single-representation criterion: a representation with index n_rho
// of a group with normalization constant e_g has zero trace form exactly
// when p divides n_rho / e_g (p = 0: never).  Requires e_g | n_rho.
bool trace_zero_single(const Int& n_rho, const Int& e_g, const Int& p);

// Some representation has nondegenerate trace form in characteristic p?
// True exactly when p is very good (p = 0 always true).
bool nondegenerate_exists(const GroupForm& form, const Int& p);

// Verdict for one characteristic, as surfaced by the CLI.
struct CharacteristicVerdict {
  bool exists_nonzero = false;
  bool exists_nondegenerate = false;
};
CharacteristicVerdict classify_at(const GroupForm& form, const Int& p,
                                  int bound = 4);

// ---------------------------------------------------------------------------
// Galois-twisted forms: published-table lookups
// ---------------------------------------------------------------------------

// A twisted type: the split type plus the order of the image of the Galois
// action on the Dynkin diagram (1 = split/inner, 2 for A/D/E6, 3 and 6 for
// D4 only).
struct TwistedType {
  char type = 0;
  int rank = 0;
  int twist = 1;
};

// Parses labels like "2A4", "3D4", "6D4", "2E6", "1D5".
TwistedType parse_twisted(const std::string& label);

// Results for twisted groups are published-table data, not computed here;
// `zero_always` is empty when the published classification leaves the case
// open (simply connected groups and type A).
struct TwistedVerdict {
  bool degenerate_always = false;
  std::optional<bool> zero_always;
  bool computed = false;  // always false: published-table lookup
};

TwistedVerdict twisted_classify(const TwistedType& t, const Int& p,
                                bool simply_connected);

}  // namespace traceform
