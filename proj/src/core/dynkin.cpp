// Orbit and representation indices, weight multiplicities, and the gcd
// box scan over a character lattice.

#include "dynkin.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace traceform {

namespace {

WeightCoords to_coords(std::span<const int64_t> w) {
  return WeightCoords(w.begin(), w.end());
}

bool is_zero(std::span<const int64_t> w) {
  return std::all_of(w.begin(), w.end(), [](int64_t c) { return c == 0; });
}

// Indices into rs.roots() of the positive roots (positive pairing with the
// Weyl vector).
std::vector<size_t> positive_root_indices(const RootSystem& rs) {
  const WeightCoords rho = rs.weyl_vector();
  std::vector<size_t> out;
  const auto& roots = rs.roots();
  out.reserve(roots.size() / 2);
  for (size_t i = 0; i < roots.size(); ++i) {
    if (rs.weight_ip(rho, roots[i]) > 0) out.push_back(i);
  }
  return out;
}

}  // namespace

Int orbit_index_closed(const RootSystem& rs, std::span<const int64_t> w) {
  if (w.size() != static_cast<size_t>(rs.rank())) {
    fail(ErrorCode::InvalidArgument,
         "orbit_index_closed: weight has wrong length");
  }
  if (is_zero(w)) return Int(0);
  const WeightCoords dom = rs.dominant_representative(w);
  const Rat value =
      Rat(rs.orbit_size(dom)) * rs.weight_ip(dom, dom) / rs.rank();
  if (!is_integer(value)) {
    fail(ErrorCode::Internal, "orbit_index_closed: non-integral value");
  }
  return to_integer(value);
}

Int orbit_index_enum_at(const RootSystem& rs, std::span<const int64_t> w,
                        size_t long_root, uint64_t cap) {
  if (long_root >= rs.roots().size() || !rs.root_is_long(long_root)) {
    fail(ErrorCode::InvalidArgument,
         "orbit_index_enum: index does not reference a long root");
  }
  Int sum = 0;
  for (const WeightCoords& x : rs.orbit(w, cap)) {
    const Int p = rs.pair_with_coroot(x, long_root);
    sum += p * p;
  }
  if (sum % 2 != 0) {
    fail(ErrorCode::Internal, "orbit_index_enum: odd pairing-square sum");
  }
  return sum / 2;
}

Int orbit_index_enum(const RootSystem& rs, std::span<const int64_t> w,
                     uint64_t cap) {
  const auto& roots = rs.roots();
  for (size_t i = 0; i < roots.size(); ++i) {
    if (rs.root_is_long(i)) return orbit_index_enum_at(rs, w, i, cap);
  }
  fail(ErrorCode::Internal, "orbit_index_enum: no long root");
}

Int irrep_dimension(const RootSystem& rs, std::span<const int64_t> lambda) {
  if (lambda.size() != static_cast<size_t>(rs.rank())) {
    fail(ErrorCode::InvalidArgument,
         "irrep_dimension: weight has wrong length");
  }
  if (!rs.is_dominant(lambda)) {
    fail(ErrorCode::InvalidArgument,
         "irrep_dimension: highest weight must be dominant");
  }
  const WeightCoords rho = rs.weyl_vector();
  WeightCoords shifted(lambda.begin(), lambda.end());
  for (int i = 0; i < rs.rank(); ++i) shifted[i] += 1;

  Rat product = 1;
  const auto& roots = rs.roots();
  for (size_t idx : positive_root_indices(rs)) {
    product *= rs.weight_ip(shifted, roots[idx]) / rs.weight_ip(rho, roots[idx]);
  }
  if (!is_integer(product)) {
    fail(ErrorCode::Internal, "irrep_dimension: non-integral product");
  }
  return to_integer(product);
}

std::map<WeightCoords, Int> weight_multiplicities(
    const RootSystem& rs, std::span<const int64_t> lambda,
    uint64_t dimension_cap) {
  const Int dim = irrep_dimension(rs, lambda);  // validates lambda
  if (dim > Int(dimension_cap)) {
    fail(ErrorCode::CapExceeded,
         "weight_multiplicities: representation dimension " + dim.str() +
             " exceeds the cap " + std::to_string(dimension_cap));
  }
  const int l = rs.rank();
  const WeightCoords hw = to_coords(lambda);
  const auto& roots = rs.roots();
  const std::vector<size_t> positives = positive_root_indices(rs);

  // Every dominant weight <= lambda is reachable from lambda by repeatedly
  // subtracting a positive root while staying dominant.
  std::map<WeightCoords, char> seen;
  std::vector<WeightCoords> work{hw};
  seen.emplace(hw, 1);
  while (!work.empty()) {
    const WeightCoords w = std::move(work.back());
    work.pop_back();
    for (size_t idx : positives) {
      const WeightCoords& alpha = roots[idx];
      WeightCoords v(l);
      for (int i = 0; i < l; ++i) v[i] = w[i] - alpha[i];
      if (!rs.is_dominant(v)) continue;
      if (seen.emplace(v, 1).second) work.push_back(v);
    }
  }

  // Process in decreasing |mu + rho|^2; every dominant weight strictly
  // above mu in the root order has strictly larger shifted norm, so the
  // multiplicities the recursion needs are always already available.
  const auto shifted_norm = [&](const WeightCoords& w) {
    WeightCoords s(w);
    for (int i = 0; i < l; ++i) s[i] += 1;
    return rs.weight_ip(s, s);
  };
  std::vector<WeightCoords> order;
  order.reserve(seen.size());
  for (const auto& [w, tag] : seen) order.push_back(w);
  std::vector<Rat> norms(order.size());
  for (size_t i = 0; i < order.size(); ++i) norms[i] = shifted_norm(order[i]);
  std::vector<size_t> perm(order.size());
  std::iota(perm.begin(), perm.end(), size_t{0});
  std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
    if (norms[a] != norms[b]) return norms[a] > norms[b];
    return order[a] < order[b];
  });

  const Rat top_norm = shifted_norm(hw);
  std::map<WeightCoords, Int> mult;
  for (size_t pi : perm) {
    const WeightCoords& mu = order[pi];
    if (mu == hw) {
      mult.emplace(hw, Int(1));
      continue;
    }
    Rat numerator = 0;
    for (size_t idx : positives) {
      const WeightCoords& alpha = roots[idx];
      WeightCoords nu(mu);
      for (uint64_t k = 1;; ++k) {
        for (int i = 0; i < l; ++i) nu[i] += alpha[i];
        const auto it = mult.find(rs.dominant_representative(nu));
        if (it == mult.end()) break;  // weight strings have no gaps
        numerator += Rat(it->second) * rs.weight_ip(nu, alpha);
      }
    }
    const Rat denominator = top_norm - norms[pi];
    const Rat m = 2 * numerator / denominator;
    if (!is_integer(m) || m <= 0) {
      fail(ErrorCode::Internal,
           "weight_multiplicities: recursion produced a non-positive or "
           "non-integral multiplicity");
    }
    mult.emplace(mu, to_integer(m));
  }
  return mult;
}

Int irrep_index(const RootSystem& rs, std::span<const int64_t> lambda,
                uint64_t dimension_cap) {
  Int total = 0;
  for (const auto& [mu, m] : weight_multiplicities(rs, lambda, dimension_cap)) {
    total += m * orbit_index_closed(rs, mu);
  }
  return total;
}

Int tensor_index(const Int& dim1, const Int& index1, const Int& dim2,
                 const Int& index2) {
  if (dim1 <= 0 || dim2 <= 0 || index1 < 0 || index2 < 0) {
    fail(ErrorCode::InvalidArgument,
         "tensor_index: dimensions must be positive and indices nonnegative");
  }
  return dim1 * index2 + dim2 * index1;
}

// ---------------------------------------------------------------------------
// gcd box scan
// ---------------------------------------------------------------------------

namespace {

constexpr int64_t kScanPointCap = 500'000'000;

// Depth-first sweep over dominant weights with coordinates in [0, bound],
// keeping the quadratic form value, the Gram vector, and the fundamental
// group residues updated incrementally (O(rank) work per assignment).
struct BoxScan {
  const RootSystem& rs;
  int l;
  int bound;
  // Scaled inner product: (x, y) = x^T G x / denom.
  std::vector<int64_t> gram;  // l * l, row-major
  int64_t denom;
  // Fundamental-group reduction: residue_j = sum_i row[j][i] c_i mod d_j.
  std::vector<int64_t> d;
  std::vector<std::vector<int64_t>> rows;
  std::vector<int64_t> stride;
  // Per-target membership over flattened residues, and gcd accumulators.
  std::vector<std::vector<char>> member;
  size_t ntargets;

  bool fast = false;      // leaf arithmetic fits __int128 / int64
  int64_t weyl64 = 0;     // |W| when fast
  int64_t denom_l = 0;    // denom * l

  // Mutable sweep state.
  std::vector<int64_t> c, gvec, res;
  std::vector<int64_t> orbit_cache;                    // fast path, 0 = unset
  std::unordered_map<uint32_t, Int> orbit_cache_big;   // exact path
  std::vector<int64_t> gall64, ginner64;
  std::vector<Int> gall, ginner;
  std::vector<char> done;
  size_t ndone = 0;

  explicit BoxScan(const RootSystem& sys, int b) : rs(sys), l(sys.rank()), bound(b) {}

  void prepare(const std::vector<std::vector<WeightCoords>>& gens_list) {
    ntargets = gens_list.size();

    Int points = 1;
    for (int i = 0; i < l; ++i) points *= bound + 1;
    if (points > kScanPointCap) {
      fail(ErrorCode::CapExceeded,
           "group_index: box of " + points.str() +
               " dominant weights exceeds the scan cap of " +
               std::to_string(kScanPointCap) +
               " points; reduce the bound or the rank");
    }

    const FundamentalGroup fg(rs);
    d = fg.invariants();
    rows = fg.reduction_rows();
    stride.assign(d.size(), 1);
    for (size_t j = 1; j < d.size(); ++j) stride[j] = stride[j - 1] * d[j - 1];
    int64_t nclasses = 1;
    for (int64_t dj : d) nclasses *= dj;

    member.assign(ntargets, std::vector<char>(nclasses, 0));
    for (size_t s = 0; s < ntargets; ++s) {
      for (const auto& cls : subgroup_classes(fg, gens_list[s])) {
        int64_t flat = 0;
        for (size_t j = 0; j < d.size(); ++j) flat += cls[j] * stride[j];
        member[s][flat] = 1;
      }
    }

    const IMat& gs = rs.fw_gram_scaled();
    denom = to_int64(rs.fw_gram_denom());
    gram.resize(static_cast<size_t>(l) * l);
    Int abs_sum = 0;
    for (int i = 0; i < l; ++i) {
      for (int j = 0; j < l; ++j) {
        gram[static_cast<size_t>(i) * l + j] = to_int64(gs(i, j));
        abs_sum += abs(gs(i, j));
      }
    }
    const Int s_max = abs_sum * bound * bound;
    if (s_max >= (Int(1) << 62)) {
      fail(ErrorCode::Internal, "group_index: quadratic form values overflow");
    }
    denom_l = denom * l;

    fast = false;
    if (rs.weyl_order() < (Int(1) << 62)) {
      weyl64 = to_int64(rs.weyl_order());
      const Int prod_max = rs.weyl_order() * s_max;
      if (prod_max < (Int(1) << 126)) fast = true;
    }
    if (fast && l <= 22) {
      orbit_cache.assign(size_t{1} << l, 0);
    } else if (fast) {
      fast = false;  // mask table would not fit; fall back to exact leaves
    }

    c.assign(l, 0);
    gvec.assign(l, 0);
    res.assign(d.size(), 0);
    gall64.assign(ntargets, 0);
    ginner64.assign(ntargets, 0);
    gall.assign(ntargets, Int(0));
    ginner.assign(ntargets, Int(0));
    done.assign(ntargets, 0);
    ndone = 0;
  }

  int64_t orbit_size_fast(uint32_t zero_mask) {
    int64_t& slot = orbit_cache[zero_mask];
    if (slot == 0) {
      slot = to_int64(exact_div(rs.weyl_order(), rs.parabolic_order(zero_mask)));
    }
    return slot;
  }

  const Int& orbit_size_exact(uint32_t zero_mask) {
    auto it = orbit_cache_big.find(zero_mask);
    if (it == orbit_cache_big.end()) {
      it = orbit_cache_big
               .emplace(zero_mask,
                        exact_div(rs.weyl_order(), rs.parabolic_order(zero_mask)))
               .first;
    }
    return it->second;
  }

  void leaf(int64_t s, uint32_t zero_mask, bool on_boundary) {
    int64_t flat = 0;
    for (size_t j = 0; j < d.size(); ++j) flat += res[j] * stride[j];

    bool have_n = false;
    int64_t n64 = 0;
    Int nbig;
    for (size_t t = 0; t < ntargets; ++t) {
      if (done[t] || !member[t][flat]) continue;
      if (!have_n) {
        if (fast) {
          const __int128 prod =
              static_cast<__int128>(orbit_size_fast(zero_mask)) * s;
          if (prod % denom_l != 0) {
            fail(ErrorCode::Internal, "group_index: non-integral orbit index");
          }
          n64 = static_cast<int64_t>(prod / denom_l);
        } else {
          nbig = orbit_size_exact(zero_mask) * s;
          const Int r = nbig % denom_l;
          if (r != 0) {
            fail(ErrorCode::Internal, "group_index: non-integral orbit index");
          }
          nbig /= denom_l;
        }
        have_n = true;
      }
      if (fast) {
        gall64[t] = std::gcd(gall64[t], n64);
        if (!on_boundary) ginner64[t] = std::gcd(ginner64[t], n64);
        if (gall64[t] == 1 && ginner64[t] == 1) {
          done[t] = 1;
          ++ndone;
        }
      } else {
        gall[t] = gcd(gall[t], nbig);
        if (!on_boundary) ginner[t] = gcd(ginner[t], nbig);
        if (gall[t] == 1 && ginner[t] == 1) {
          done[t] = 1;
          ++ndone;
        }
      }
    }
  }

  void sweep(int i, int64_t s, uint32_t zero_mask, bool on_boundary) {
    if (ndone == ntargets) return;
    if (i == l) {
      leaf(s, zero_mask, on_boundary);
      return;
    }
    // c_i = 0 contributes nothing to s, gvec, or the residues.
    sweep(i + 1, s, zero_mask | (uint32_t{1} << i), on_boundary);

    const size_t row = static_cast<size_t>(i) * l;
    std::vector<int64_t> saved_res(res);
    int64_t si = s;
    for (int v = 1; v <= bound; ++v) {
      si += 2 * gvec[i] + gram[row + i];
      for (int k = 0; k < l; ++k) gvec[k] += gram[static_cast<size_t>(k) * l + i];
      for (size_t j = 0; j < d.size(); ++j) {
        res[j] += rows[j][i];
        if (res[j] >= d[j]) res[j] -= d[j];
      }
      sweep(i + 1, si, zero_mask, on_boundary || v == bound);
      if (ndone == ntargets) break;
    }
    for (int k = 0; k < l; ++k) {
      gvec[k] -= bound * gram[static_cast<size_t>(k) * l + i];
    }
    res = std::move(saved_res);
  }

  std::vector<GroupIndexResult> results() const {
    std::vector<GroupIndexResult> out(ntargets);
    for (size_t t = 0; t < ntargets; ++t) {
      const Int all = fast ? Int(gall64[t]) : gall[t];
      const Int inner = fast ? Int(ginner64[t]) : ginner[t];
      out[t] = GroupIndexResult{all, all == inner && all != 0};
    }
    return out;
  }
};

}  // namespace

std::vector<GroupIndexResult> group_index_batch(
    const RootSystem& rs, const std::vector<std::vector<WeightCoords>>& gens,
    int bound) {
  if (bound < 1) {
    fail(ErrorCode::InvalidArgument, "group_index: bound must be >= 1");
  }
  for (const auto& g : gens) {
    for (const auto& w : g) {
      if (w.size() != static_cast<size_t>(rs.rank())) {
        fail(ErrorCode::InvalidArgument,
             "group_index: subgroup generator has wrong length");
      }
    }
  }
  if (gens.empty()) return {};
  BoxScan scan(rs, bound);
  scan.prepare(gens);
  scan.sweep(0, 0, 0, false);
  return scan.results();
}

GroupIndexResult group_index(const GroupForm& form, int bound) {
  return group_index_batch(*form.rs, {form.gens}, bound)[0];
}

}  // namespace traceform
