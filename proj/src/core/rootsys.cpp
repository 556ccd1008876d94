// SPDX-License-Identifier: MIT

#include "rootsys.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace traceform {

namespace {

// FNV-1a over the raw coordinate words; good enough for BFS dedup sets.
struct CoordsHash {
  size_t operator()(const WeightCoords& v) const {
    uint64_t h = 1469598103934665603ull;
    for (int64_t x : v) {
      h ^= static_cast<uint64_t>(x);
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

using CoordsSet = std::unordered_set<WeightCoords, CoordsHash>;

}  // namespace

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

void RootSystem::build_simple_roots(char type, int rank) {
  // Standard coordinate models. `scale` adjusts the plain dot product so
  // that long roots end up with squared length 2.
  int dim = 0;
  ip_scale_ = Rat(1);
  switch (type) {
    case 'A': dim = rank + 1; break;
    case 'B': dim = rank; break;
    case 'C': dim = rank; ip_scale_ = Rat(1, 2); break;
    case 'D': dim = rank; break;
    case 'E': dim = 8; break;
    case 'F': dim = 4; break;
    case 'G': dim = 3; ip_scale_ = Rat(1, 3); break;
    default: fail(ErrorCode::Internal, "unreachable type");
  }
  simple_ambient_ = QMat(rank, dim);
  auto set = [&](int i, int j, Rat v) { simple_ambient_(i, j) = std::move(v); };

  switch (type) {
    case 'A':
      for (int i = 0; i < rank; ++i) {
        set(i, i, Rat(1));
        set(i, i + 1, Rat(-1));
      }
      break;
    case 'B':
      for (int i = 0; i + 1 < rank; ++i) {
        set(i, i, Rat(1));
        set(i, i + 1, Rat(-1));
      }
      set(rank - 1, rank - 1, Rat(1));
      break;
    case 'C':
      for (int i = 0; i + 1 < rank; ++i) {
        set(i, i, Rat(1));
        set(i, i + 1, Rat(-1));
      }
      set(rank - 1, rank - 1, Rat(2));
      break;
    case 'D':
      for (int i = 0; i + 1 < rank; ++i) {
        set(i, i, Rat(1));
        set(i, i + 1, Rat(-1));
      }
      set(rank - 1, rank - 2, Rat(1));
      set(rank - 1, rank - 1, Rat(1));
      break;
    case 'E':
      // Bourbaki numbering inside R^8; E6 and E7 take the leading roots.
      set(0, 0, Rat(1, 2));
      set(0, 7, Rat(1, 2));
      for (int j = 1; j <= 6; ++j) set(0, j, Rat(-1, 2));
      set(1, 0, Rat(1));
      set(1, 1, Rat(1));
      for (int i = 2; i < rank; ++i) {
        set(i, i - 2, Rat(-1));
        set(i, i - 1, Rat(1));
      }
      break;
    case 'F':
      set(0, 1, Rat(1));
      set(0, 2, Rat(-1));
      set(1, 2, Rat(1));
      set(1, 3, Rat(-1));
      set(2, 3, Rat(1));
      set(3, 0, Rat(1, 2));
      set(3, 1, Rat(-1, 2));
      set(3, 2, Rat(-1, 2));
      set(3, 3, Rat(-1, 2));
      break;
    case 'G':
      set(0, 0, Rat(1));
      set(0, 1, Rat(-1));
      set(1, 0, Rat(-2));
      set(1, 1, Rat(1));
      set(1, 2, Rat(1));
      break;
    default: fail(ErrorCode::Internal, "unreachable type");
  }
}

std::shared_ptr<const RootSystem> RootSystem::create(char type, int rank) {
  bool ok = false;
  switch (type) {
    case 'A': ok = rank >= 1; break;
    case 'B': ok = rank >= 2; break;
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 3; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: ok = false; break;
  }
  if (!ok) {
    fail(ErrorCode::InvalidArgument,
         std::string("no root system of type ") + type + " and rank " +
             std::to_string(rank));
  }
  if (rank > kMaxRank) {
    fail(ErrorCode::InvalidArgument,
         "rank " + std::to_string(rank) + " exceeds supported maximum " +
             std::to_string(kMaxRank));
  }
  auto rs = std::shared_ptr<RootSystem>(new RootSystem());
  rs->build(type, rank);
  return rs;
}

void RootSystem::build(char type, int rank) {
  type_ = type;
  rank_ = rank;
  build_simple_roots(type, rank);
  const int dim = ambient_dim();

  auto ambient_ip = [&](const std::vector<Rat>& x, const std::vector<Rat>& y) {
    Rat s = 0;
    for (int k = 0; k < dim; ++k) s += x[k] * y[k];
    return Rat(ip_scale_ * s);
  };
  auto simple_row = [&](int i) {
    std::vector<Rat> r(dim);
    for (int k = 0; k < dim; ++k) r[k] = simple_ambient_(i, k);
    return r;
  };

  std::vector<std::vector<Rat>> simple(rank);
  std::vector<Rat> simple_len2(rank);
  for (int i = 0; i < rank; ++i) {
    simple[i] = simple_row(i);
    simple_len2[i] = ambient_ip(simple[i], simple[i]);
  }

  // Cartan matrix from the ambient model.
  cartan_.assign(static_cast<size_t>(rank) * rank, 0);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      Rat v = 2 * ambient_ip(simple[j], simple[i]) / simple_len2[i];
      cartan_[i * rank + j] = to_int64(to_integer(v));
    }

  QMat cartan_q(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) cartan_q(i, j) = Rat(cartan(i, j));
  QMat inv_cartan = inverse(cartan_q);

  // Gram matrix of the fundamental weights:
  // (omega_i, omega_j) = invC(j, i) * (alpha_j, alpha_j) / 2.
  fw_gram_ = QMat(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      fw_gram_(i, j) = inv_cartan(j, i) * simple_len2[j] / 2;
  fw_gram_denom_ = 1;
  for (const Rat& q : fw_gram_.a) fw_gram_denom_ = lcm(fw_gram_denom_, rat_den(q));
  fw_gram_scaled_ = IMat(rank, rank);
  for (size_t k = 0; k < fw_gram_.a.size(); ++k)
    fw_gram_scaled_.a[k] = to_integer(Rat(fw_gram_.a[k] * fw_gram_denom_));

  // Coroot Gram: (a_i^vee, a_j^vee) = 4 (a_i, a_j) / (|a_i|^2 |a_j|^2).
  coroot_gram_ = QMat(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      coroot_gram_(i, j) =
          4 * ambient_ip(simple[i], simple[j]) / (simple_len2[i] * simple_len2[j]);
  QMat inv_coroot_gram = inverse(coroot_gram_);

  // All roots: closure of the simple roots under simple reflections, done in
  // integer weight coordinates (column j of the Cartan matrix is alpha_j).
  std::vector<WeightCoords> queue;
  CoordsSet seen;
  for (int j = 0; j < rank; ++j) {
    WeightCoords c(rank);
    for (int i = 0; i < rank; ++i) c[i] = cartan(i, j);
    if (seen.insert(c).second) queue.push_back(c);
  }
  for (size_t head = 0; head < queue.size(); ++head) {
    WeightCoords cur = queue[head];
    for (int i = 0; i < rank; ++i) {
      WeightCoords nxt = cur;
      reflect(nxt, i);
      if (seen.insert(nxt).second) queue.push_back(nxt);
    }
  }
  std::sort(queue.begin(), queue.end());
  roots_wt_ = std::move(queue);

  // Ambient coordinates, lengths, and coroot coordinates per root.
  roots_ambient_ = QMat(roots_wt_.size(), dim);
  roots_long_.assign(roots_wt_.size(), false);
  root_coroot_coords_.resize(roots_wt_.size());
  long_count_ = 0;
  Rat min_len2(2);
  for (size_t r = 0; r < roots_wt_.size(); ++r) {
    const WeightCoords& c = roots_wt_[r];
    // Root-lattice coordinates t = C^{-1} c are integers for roots.
    std::vector<Rat> t(rank);
    for (int i = 0; i < rank; ++i) {
      Rat s = 0;
      for (int j = 0; j < rank; ++j) s += inv_cartan(i, j) * c[j];
      t[i] = s;
    }
    for (int k = 0; k < dim; ++k) {
      Rat s = 0;
      for (int i = 0; i < rank; ++i) s += t[i] * simple_ambient_(i, k);
      roots_ambient_(r, k) = s;
    }
    Rat len2 = weight_ip(c, c);
    if (len2 == 2) {
      roots_long_[r] = true;
      ++long_count_;
    } else {
      if (len2 <= 0 || len2 >= 2)
        fail(ErrorCode::Internal, "unexpected root length");
      if (len2 < min_len2) min_len2 = len2;
    }
    // alpha^vee on the simple coroot basis: solve Gc * m = 2c/len2.
    std::vector<Rat> y(rank);
    for (int i = 0; i < rank; ++i) y[i] = Rat(2 * c[i]) / len2;
    root_coroot_coords_[r].resize(rank);
    for (int i = 0; i < rank; ++i) {
      Rat s = 0;
      for (int j = 0; j < rank; ++j) s += inv_coroot_gram(i, j) * y[j];
      root_coroot_coords_[r][i] = to_int64(to_integer(s));
    }
  }
  length_ratio_ = (long_count_ == root_count())
                      ? 1
                      : to_int64(to_integer(Rat(2 / min_len2)));

  // Dominant roots: the unique dominant long root (highest root) and, when
  // two lengths exist, the unique dominant short one.
  for (size_t r = 0; r < roots_wt_.size(); ++r) {
    if (!is_dominant(roots_wt_[r])) continue;
    if (roots_long_[r]) {
      highest_root_ = roots_wt_[r];
    } else {
      dominant_short_ = roots_wt_[r];
    }
  }
  if (highest_root_.empty()) fail(ErrorCode::Internal, "no dominant long root");

  // Coroot marks of the highest root and the dual Coxeter number.
  {
    size_t hr = std::find(roots_wt_.begin(), roots_wt_.end(), highest_root_) -
                roots_wt_.begin();
    coroot_marks_ = root_coroot_coords_[hr];
    dual_coxeter_ = 1;
    for (int64_t m : coroot_marks_) dual_coxeter_ += m;
  }

  weyl_order_ = parabolic_order((1u << rank_) - 1u);  // rank_ <= kMaxRank < 32
}

// ---------------------------------------------------------------------------
// Weight arithmetic
// ---------------------------------------------------------------------------

void RootSystem::reflect(WeightCoords& c, int i) const {
  const int64_t ci = c[i];
  if (ci == 0) return;
  for (int k = 0; k < rank_; ++k) c[k] -= ci * cartan(k, i);
}

bool RootSystem::is_dominant(std::span<const int64_t> w) const {
  for (int64_t x : w)
    if (x < 0) return false;
  return true;
}

WeightCoords RootSystem::dominant_representative(std::span<const int64_t> w) const {
  WeightCoords c(w.begin(), w.end());
  while (true) {
    int neg = -1;
    for (int i = 0; i < rank_; ++i)
      if (c[i] < 0) {
        neg = i;
        break;
      }
    if (neg < 0) return c;
    reflect(c, neg);
  }
}

Rat RootSystem::weight_ip(std::span<const int64_t> x,
                          std::span<const int64_t> y) const {
  if (static_cast<int>(x.size()) != rank_ || static_cast<int>(y.size()) != rank_)
    fail(ErrorCode::InvalidArgument, "weight has wrong number of coordinates");
  Int acc = 0;
  for (int i = 0; i < rank_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) {
      if (y[j] == 0) continue;
      acc += Int(x[i]) * Int(y[j]) * fw_gram_scaled_(i, j);
    }
  }
  return Rat(acc, fw_gram_denom_);
}

Int RootSystem::pair_with_coroot(std::span<const int64_t> x,
                                 size_t root_idx) const {
  const auto& m = root_coroot_coords_.at(root_idx);
  Int s = 0;
  for (int i = 0; i < rank_; ++i) s += Int(m[i]) * x[i];
  return s;
}

// ---------------------------------------------------------------------------
// Weyl group bookkeeping
// ---------------------------------------------------------------------------

namespace {

// Orbit size of `start` under the reflections selected by `mask`, bounded by
// `cap` (0 = unbounded). Returns 0 if the cap was hit.
uint64_t masked_orbit_size(const RootSystem& rs, const WeightCoords& start,
                           uint32_t mask, uint64_t cap) {
  CoordsSet seen;
  std::deque<WeightCoords> queue;
  seen.insert(start);
  queue.push_back(start);
  while (!queue.empty()) {
    WeightCoords cur = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < rs.rank(); ++i) {
      if (!(mask >> i & 1)) continue;
      WeightCoords nxt = cur;
      rs.reflect(nxt, i);
      if (seen.insert(nxt).second) {
        if (cap != 0 && seen.size() > cap) return 0;
        queue.push_back(nxt);
      }
    }
  }
  return seen.size();
}

}  // namespace

Int RootSystem::parabolic_order(uint32_t mask) const {
  if (mask == 0) return Int(1);
  {
    std::lock_guard<std::mutex> lock(parabolic_mutex_);
    auto it = parabolic_cache_.find(mask);
    if (it != parabolic_cache_.end()) return it->second;
  }
  // |W_J| = |W_{J minus top}| * |orbit of omega_top under W_J|: omega_top is
  // fixed by every other generator in J, so its W_J-stabilizer is exactly the
  // smaller parabolic.
  int top = 31 - __builtin_clz(mask);
  WeightCoords omega(rank_, 0);
  omega[top] = 1;
  uint64_t index = masked_orbit_size(*this, omega, mask, 0);
  Int result = parabolic_order(mask & ~(1u << top)) * index;
  std::lock_guard<std::mutex> lock(parabolic_mutex_);
  parabolic_cache_.emplace(mask, result);
  return result;
}

Int RootSystem::orbit_size(std::span<const int64_t> dominant) const {
  if (static_cast<int>(dominant.size()) != rank_)
    fail(ErrorCode::InvalidArgument, "weight has wrong number of coordinates");
  if (!is_dominant(dominant))
    fail(ErrorCode::InvalidArgument, "orbit_size expects a dominant weight");
  uint32_t stab_mask = 0;
  for (int i = 0; i < rank_; ++i)
    if (dominant[i] == 0) stab_mask |= (1u << i);
  return exact_div(weyl_order_, parabolic_order(stab_mask));
}

std::vector<WeightCoords> RootSystem::orbit(std::span<const int64_t> w,
                                            uint64_t cap) const {
  if (static_cast<int>(w.size()) != rank_)
    fail(ErrorCode::InvalidArgument, "weight has wrong number of coordinates");
  CoordsSet seen;
  std::deque<WeightCoords> queue;
  WeightCoords start(w.begin(), w.end());
  seen.insert(start);
  queue.push_back(std::move(start));
  std::vector<WeightCoords> out;
  while (!queue.empty()) {
    WeightCoords cur = std::move(queue.front());
    queue.pop_front();
    out.push_back(cur);
    for (int i = 0; i < rank_; ++i) {
      WeightCoords nxt = cur;
      reflect(nxt, i);
      if (seen.insert(nxt).second) {
        if (cap != 0 && seen.size() > cap) {
          fail(ErrorCode::CapExceeded,
               "Weyl orbit larger than cap " + std::to_string(cap) +
                   "; raise the cap or use the closed-form path");
        }
        queue.push_back(std::move(nxt));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace traceform
