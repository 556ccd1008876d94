// SPDX-License-Identifier: MIT
//
// Isogeny bookkeeping: the fundamental group P/Q, character lattices
// Q <= T* <= P picked out by a subgroup of P/Q, the dual cocharacter
// lattice T_*, and the two integrality constants of the normalized
// bilinear form on the coroot side:
//
//   E  = least e > 0 with e * b integer-valued on T_*,
//   Eq = least e > 0 with e * q integer-valued on T_* (q(x) = b(x,x)/2).
//
// Coordinates: character-side vectors use the fundamental-weight basis,
// cocharacter-side vectors the simple-coroot basis; those two bases are
// dual under the canonical pairing, which is what makes the dual-lattice
// computation a plain matrix inversion.

#pragma once

#include "rootsys.hpp"

namespace traceform {

// ---------------------------------------------------------------------------
// The fundamental group P/Q
// ---------------------------------------------------------------------------

class FundamentalGroup {
 public:
  explicit FundamentalGroup(const RootSystem& rs);

  // Invariant factors > 1, in a divisibility chain d_1 | d_2 | ...
  const std::vector<int64_t>& invariants() const { return invariants_; }

  int64_t order() const;
  int64_t exponent() const;

  // Class of a weight: one residue in [0, d_t) per invariant factor.
  std::vector<int64_t> class_of(std::span<const int64_t> w) const;

  bool in_root_lattice(std::span<const int64_t> w) const;

  // Row t of the reduction map, entries already reduced into [0, d_t):
  // class_t(w) = sum_j rows()[t][j] * w_j mod d_t. Exposed so that scan
  // loops can update classes incrementally.
  const std::vector<std::vector<int64_t>>& reduction_rows() const {
    return rows_;
  }

 private:
  int rank_;
  std::vector<int64_t> invariants_;
  std::vector<std::vector<int64_t>> rows_;
};

// All classes of the subgroup of P/Q generated by the given weights,
// sorted lexicographically. The trivial class is always present.
std::vector<std::vector<int64_t>> subgroup_classes(
    const FundamentalGroup& fg, const std::vector<WeightCoords>& gens);

// ---------------------------------------------------------------------------
// Isogeny forms
// ---------------------------------------------------------------------------

// A split almost-simple group: a root system together with the subgroup
// T*/Q of the fundamental group, spelled as generator lifts in P.
struct GroupForm {
  std::string label;
  std::shared_ptr<const RootSystem> rs;
  std::vector<WeightCoords> gens;
};

GroupForm form_simply_connected(std::shared_ptr<const RootSystem> rs);
GroupForm form_adjoint(std::shared_ptr<const RootSystem> rs);
// Explicit subgroup of P/Q; generators are weights of length rank.
GroupForm form_subgroup(std::shared_ptr<const RootSystem> rs,
                        std::vector<WeightCoords> gens);

GroupForm form_sl_quotient(int n, int64_t m);  // SL_n / mu_m, m | n
GroupForm form_sp(int n);                      // Sp_n, n even >= 4
GroupForm form_psp(int n);                     // PSp_n, n even >= 4
GroupForm form_spin(int n);                    // Spin_n, n >= 5
GroupForm form_so(int n);                      // SO_n, n >= 5
GroupForm form_pso(int n);                     // PSO_n, n >= 5 (odd n = SO_n)
GroupForm form_half_spin(int n);               // HSpin_n, n = 0 mod 4, n >= 12

// Parses a group label: SL9, SL9/mu3, PGL4, Sp10, PSp10, Spin11, SO8,
// PSO8, HSpin12, E6sc, E6ad, E7sc, E7ad, E8, F4, G2, and the generic
// <Type><rank>sc / <Type><rank>ad forms such as B3ad or D6sc.
GroupForm parse_group(const std::string& text);

// ---------------------------------------------------------------------------
// Lattice resolution
// ---------------------------------------------------------------------------

struct LatticePresentation {
  // Basis of T* in fundamental-weight coordinates (canonical triangular
  // form, rows are basis vectors).
  IMat tstar_basis;
  // Basis of T_* in simple-coroot coordinates: the dual basis of the rows
  // of tstar_basis, so the mutual pairing matrix is the identity.
  QMat tsub_basis;
  // Gram matrix of the normalized form b on the rows of tsub_basis.
  QMat gram_b;
  // q(v_i) = gram_b(i, i) / 2.
  std::vector<Rat> q_diagonal;

  Int index_in_p;     // [P : T*]
  Int subgroup_order; // |T*/Q|

  bool simply_connected() const { return index_in_p == 1; }
  bool adjoint() const { return subgroup_order == 1; }
};

LatticePresentation resolve_lattices(const GroupForm& form);

// Same computation from an arbitrary (not necessarily canonical) basis of
// T*: rows must be integer weight vectors forming a full-rank matrix.
// Exposed so tests can verify basis independence of E and Eq.
LatticePresentation lattices_from_rows(const RootSystem& rs, const IMat& rows);

Int compute_E(const LatticePresentation& lp);
Int compute_Eq(const LatticePresentation& lp);

inline Int compute_E(const GroupForm& form) {
  return compute_E(resolve_lattices(form));
}
inline Int compute_Eq(const GroupForm& form) {
  return compute_Eq(resolve_lattices(form));
}

// Membership of a weight in the row lattice of a triangular basis as
// produced by resolve_lattices.
bool lattice_contains(const IMat& hnf_basis, std::span<const int64_t> w);

}  // namespace traceform
