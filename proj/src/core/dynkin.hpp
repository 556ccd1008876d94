#pragma once

#include "lattice.hpp"

#include <map>
#include <vector>

namespace traceform {

// Default cap on irreducible-representation dimension for the weight
// multiplicity recursion.
inline constexpr uint64_t kDefaultDimensionCap = 100000;

// Half-sum index of a single Weyl orbit, evaluated in closed form:
//   |W.w| * (w, w) / rank.
// `w` may be any weight; the orbit is that of its dominant representative.
// Always a nonnegative integer (exactness is asserted internally).
Int orbit_index_closed(const RootSystem& rs, std::span<const int64_t> w);

// Same invariant computed from the definition: half the sum of squared
// pairings of every orbit element against a fixed long coroot.  Retained as a
// differential oracle for orbit_index_closed; enumerates the orbit, so it
// throws CapExceeded (with a pointer to the closed form) on large orbits.
Int orbit_index_enum(const RootSystem& rs, std::span<const int64_t> w,
                     uint64_t cap = kDefaultOrbitCap);

// Variant pinning the long root used for the pairing; the result is
// independent of that choice (property-tested).  `long_root` indexes into
// rs.roots() and must reference a long root.
Int orbit_index_enum_at(const RootSystem& rs, std::span<const int64_t> w,
                        size_t long_root, uint64_t cap = kDefaultOrbitCap);

// Multiplicities of the dominant weights of the irreducible representation
// with highest weight `lambda` (Freudenthal's recursion, exact arithmetic).
// Keys are dominant weights; every dominant weight <= lambda appears with a
// positive multiplicity.  Throws CapExceeded if the dimension exceeds
// `dimension_cap`, InvalidArgument if lambda is not dominant.
std::map<WeightCoords, Int> weight_multiplicities(
    const RootSystem& rs, std::span<const int64_t> lambda,
    uint64_t dimension_cap = kDefaultDimensionCap);

// Dimension of the irreducible representation with highest weight `lambda`
// (Weyl's product formula, exact).
Int irrep_dimension(const RootSystem& rs, std::span<const int64_t> lambda);

// Index of the irreducible representation with highest weight `lambda`:
// the multiplicity-weighted sum of orbit_index_closed over its dominant
// weights.  Subject to the same dimension cap as weight_multiplicities.
Int irrep_index(const RootSystem& rs, std::span<const int64_t> lambda,
                uint64_t dimension_cap = kDefaultDimensionCap);

// Index of a tensor product from the dimensions and indices of the factors.
Int tensor_index(const Int& dim1, const Int& index1, const Int& dim2,
                 const Int& index2);

// Result of a gcd scan over a box of dominant character-lattice weights.
struct GroupIndexResult {
  Int value;        // gcd of orbit_index_closed over the box (0 if empty)
  bool stabilized;  // bound B and bound B-1 gave the same nonzero gcd
};

// gcd of orbit_index_closed(lambda) over all dominant lambda in the
// character lattice of `form` with coordinates <= bound.  `stabilized`
// reports whether shrinking the bound by one changes the answer — the
// heuristic convergence signal for the underlying (infinite) gcd.
GroupIndexResult group_index(const GroupForm& form, int bound = 4);

// Batched variant: one box sweep over the weight lattice of `rs` serving
// several character lattices at once, each given by generators of its image
// in the fundamental group (empty list = root lattice, i.e. the adjoint
// group; use the standard basis vectors of the fundamental group for the
// simply connected group).  Results are in input order and identical to
// calling group_index per form.
std::vector<GroupIndexResult> group_index_batch(
    const RootSystem& rs, const std::vector<std::vector<WeightCoords>>& gens,
    int bound = 4);

}  // namespace traceform
