// SPDX-License-Identifier: MIT
//
// Reduced irreducible root systems A-G with exact rational coordinates.
//
// Conventions, fixed once and used everywhere downstream:
//   * the invariant inner product ( , ) is normalized so long roots have
//     squared length 2 (short roots then have squared length 2/c, where c
//     is the squared-length ratio: 1, 2 or 3);
//   * weights are stored by their integer coordinates in the fundamental
//     weight basis, i.e. c_i = <lambda, alpha_i^vee>;
//   * cartan(i, j) = <alpha_j, alpha_i^vee>, so column j holds the
//     fundamental-weight coordinates of the simple root alpha_j;
//   * coweights are expressed in the simple coroot basis (dual to the
//     fundamental weights under < , >).

#pragma once

#include "linalg.hpp"
#include "numeric.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace traceform {

// Integer coordinates in the fundamental weight basis.
using WeightCoords = std::vector<int64_t>;

class RootSystem {
 public:
  // Builds the root system of the given Cartan type. Accepted ranks:
  // A: >=1, B: >=2, C: >=2, D: >=3, E: 6..8, F: 4, G: 2; ranks above
  // kMaxRank are rejected to keep Weyl-orbit bookkeeping in fixed masks.
  static std::shared_ptr<const RootSystem> create(char type, int rank);

  static constexpr int kMaxRank = 30;

  char type() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const { return std::string(1, type_) + std::to_string(rank_); }

  // --- Roots ---------------------------------------------------------------

  int root_count() const { return static_cast<int>(roots_wt_.size()); }
  int long_root_count() const { return long_count_; }
  int short_root_count() const { return root_count() - long_count_; }
  bool simply_laced() const { return long_count_ == root_count(); }

  // Squared-length ratio (long,long)/(short,short): 1, 2 or 3.
  int length_ratio() const { return length_ratio_; }

  const std::vector<WeightCoords>& roots() const { return roots_wt_; }
  bool root_is_long(size_t idx) const { return roots_long_[idx]; }

  // Ambient coordinates of the i-th root / simple root (exact rationals).
  const QMat& roots_ambient() const { return roots_ambient_; }
  const QMat& simple_roots_ambient() const { return simple_ambient_; }
  int ambient_dim() const { return static_cast<int>(simple_ambient_.cols); }

  // Highest root, and the dominant short root when two lengths exist.
  const WeightCoords& highest_root() const { return highest_root_; }
  const std::optional<WeightCoords>& dominant_short_root() const {
    return dominant_short_;
  }

  // --- Cartan data -----------------------------------------------------------

  // cartan(i, j) = <alpha_j, alpha_i^vee>.
  int64_t cartan(int i, int j) const { return cartan_[i * rank_ + j]; }

  // (omega_i, omega_j) in the normalized inner product.
  const QMat& fundamental_weight_gram() const { return fw_gram_; }
  // Same Gram scaled to integers: fw_gram = fw_gram_scaled / fw_gram_denom.
  const IMat& fw_gram_scaled() const { return fw_gram_scaled_; }
  const Int& fw_gram_denom() const { return fw_gram_denom_; }

  // (alpha_i^vee, alpha_j^vee): the bilinear form on the coroot side.
  const QMat& coroot_gram() const { return coroot_gram_; }

  // Normalized inner product of two weights given by coordinates.
  Rat weight_ip(std::span<const int64_t> x, std::span<const int64_t> y) const;

  // Coordinates of the Weyl vector (half-sum of positive roots): all ones.
  WeightCoords weyl_vector() const { return WeightCoords(rank_, 1); }

  // Marks of the highest root's coroot on the simple coroots, and the dual
  // Coxeter number 1 + sum(marks).
  const std::vector<int64_t>& coroot_marks() const { return coroot_marks_; }
  int64_t dual_coxeter_number() const { return dual_coxeter_; }
  // Coxeter number h = |roots| / rank.
  int64_t coxeter_number() const { return root_count() / rank_; }

  // --- Weyl group ------------------------------------------------------------

  const Int& weyl_order() const { return weyl_order_; }

  // Order of the parabolic subgroup generated by the simple reflections in
  // `mask` (bit i set = generator s_i included). Memoized.
  Int parabolic_order(uint32_t mask) const;

  // Orbit size |W.lambda| for a dominant weight, via the stabilizer theorem:
  // the stabilizer of a dominant weight is the parabolic on its zero set.
  Int orbit_size(std::span<const int64_t> dominant) const;

  // Full orbit of a weight by closure under simple reflections; throws
  // CapExceeded if the orbit is larger than `cap`.
  std::vector<WeightCoords> orbit(std::span<const int64_t> w, uint64_t cap) const;

  // In-place simple reflection s_i.
  void reflect(WeightCoords& c, int i) const;

  // The dominant chamber representative of a weight.
  WeightCoords dominant_representative(std::span<const int64_t> w) const;

  bool is_dominant(std::span<const int64_t> w) const;

  // <x, alpha^vee> for the root with index `root_idx`, x in weight coords.
  Int pair_with_coroot(std::span<const int64_t> x, size_t root_idx) const;

 private:
  RootSystem() = default;
  void build(char type, int rank);
  void build_simple_roots(char type, int rank);

  char type_ = '?';
  int rank_ = 0;
  Rat ip_scale_;              // normalized ip = ip_scale * standard dot product
  QMat simple_ambient_;       // rank x dim
  QMat roots_ambient_;        // |R| x dim, same order as roots_wt_
  std::vector<WeightCoords> roots_wt_;
  std::vector<bool> roots_long_;
  std::vector<std::vector<int64_t>> root_coroot_coords_;  // alpha^vee on simple coroots
  int long_count_ = 0;
  int length_ratio_ = 1;
  std::vector<int64_t> cartan_;
  QMat fw_gram_;
  IMat fw_gram_scaled_;
  Int fw_gram_denom_;
  QMat coroot_gram_;
  std::vector<int64_t> coroot_marks_;
  int64_t dual_coxeter_ = 0;
  WeightCoords highest_root_;
  std::optional<WeightCoords> dominant_short_;
  Int weyl_order_;

  mutable std::mutex parabolic_mutex_;
  mutable std::unordered_map<uint32_t, Int> parabolic_cache_;
};

// Default cap for Weyl orbit enumeration (overridable per call; the CLI maps
// the TRACEFORM_ORBIT_CAP environment variable onto this).
constexpr uint64_t kDefaultOrbitCap = 1000000;

}  // namespace traceform
