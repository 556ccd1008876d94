// SPDX-License-Identifier: MIT

#include "lattice.hpp"

#include <algorithm>
#include <regex>
#include <set>

namespace traceform {

// ---------------------------------------------------------------------------
// FundamentalGroup
// ---------------------------------------------------------------------------

FundamentalGroup::FundamentalGroup(const RootSystem& rs) : rank_(rs.rank()) {
  IMat cartan(rank_, rank_);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) cartan(i, j) = rs.cartan(i, j);

  // u * cartan * v = d diagonal; the quotient Z^l / (column lattice of the
  // Cartan matrix) is the direct sum of Z/d_i via w -> (u*w) mod d_i.
  SmithDecomposition snf = smith_normal_form(cartan);
  for (int i = 0; i < rank_; ++i) {
    Int d = snf.d(i, i);
    if (d == 0) fail(ErrorCode::Internal, "Cartan matrix is singular");
    if (d == 1) continue;
    int64_t di = to_int64(d);
    invariants_.push_back(di);
    std::vector<int64_t> row(rank_);
    for (int j = 0; j < rank_; ++j) {
      Int e = snf.u(i, j) % di;
      if (e < 0) e += di;
      row[j] = to_int64(e);
    }
    rows_.push_back(std::move(row));
  }
}

int64_t FundamentalGroup::order() const {
  int64_t o = 1;
  for (int64_t d : invariants_) o *= d;
  return o;
}

int64_t FundamentalGroup::exponent() const {
  // Invariant factors form a divisibility chain, so the last one is the lcm.
  return invariants_.empty() ? 1 : invariants_.back();
}

std::vector<int64_t> FundamentalGroup::class_of(
    std::span<const int64_t> w) const {
  if (static_cast<int>(w.size()) != rank_)
    fail(ErrorCode::InvalidArgument, "weight has wrong number of coordinates");
  std::vector<int64_t> cls(invariants_.size());
  for (size_t t = 0; t < invariants_.size(); ++t) {
    Int acc = 0;
    for (int j = 0; j < rank_; ++j) acc += Int(rows_[t][j]) * w[j];
    Int r = acc % invariants_[t];
    if (r < 0) r += invariants_[t];
    cls[t] = to_int64(r);
  }
  return cls;
}

bool FundamentalGroup::in_root_lattice(std::span<const int64_t> w) const {
  auto cls = class_of(w);
  return std::all_of(cls.begin(), cls.end(), [](int64_t r) { return r == 0; });
}

std::vector<std::vector<int64_t>> subgroup_classes(
    const FundamentalGroup& fg, const std::vector<WeightCoords>& gens) {
  const auto& inv = fg.invariants();
  std::set<std::vector<int64_t>> classes;
  classes.insert(std::vector<int64_t>(inv.size(), 0));
  std::vector<std::vector<int64_t>> gen_classes;
  for (const auto& g : gens) gen_classes.push_back(fg.class_of(g));

  // Closure under addition; the whole group has at most a few dozen
  // elements, so a plain worklist is fine.
  std::vector<std::vector<int64_t>> work(classes.begin(), classes.end());
  while (!work.empty()) {
    std::vector<int64_t> cur = std::move(work.back());
    work.pop_back();
    for (const auto& g : gen_classes) {
      std::vector<int64_t> next(inv.size());
      for (size_t t = 0; t < inv.size(); ++t)
        next[t] = (cur[t] + g[t]) % inv[t];
      if (classes.insert(next).second) work.push_back(next);
    }
  }
  return std::vector<std::vector<int64_t>>(classes.begin(), classes.end());
}

// ---------------------------------------------------------------------------
// Named isogeny forms
// ---------------------------------------------------------------------------

namespace {

std::vector<WeightCoords> full_group_gens(const RootSystem& rs) {
  std::vector<WeightCoords> gens;
  for (int i = 0; i < rs.rank(); ++i) {
    WeightCoords e(rs.rank(), 0);
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  return gens;
}

WeightCoords unit_times(int rank, int pos, int64_t factor) {
  WeightCoords w(rank, 0);
  w[pos] = factor;
  return w;
}

}  // namespace

GroupForm form_simply_connected(std::shared_ptr<const RootSystem> rs) {
  GroupForm f{rs->name() + "sc", rs, full_group_gens(*rs)};
  return f;
}

GroupForm form_adjoint(std::shared_ptr<const RootSystem> rs) {
  GroupForm f{rs->name() + "ad", rs, {}};
  return f;
}

GroupForm form_subgroup(std::shared_ptr<const RootSystem> rs,
                        std::vector<WeightCoords> gens) {
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != rs->rank())
      fail(ErrorCode::InvalidArgument,
           "subgroup generator has wrong number of coordinates");
  }
  GroupForm f{rs->name() + "(custom)", rs, std::move(gens)};
  return f;
}

GroupForm form_sl_quotient(int n, int64_t m) {
  if (n < 2) fail(ErrorCode::InvalidArgument, "SL_n requires n >= 2");
  if (m < 1 || n % m != 0)
    fail(ErrorCode::InvalidArgument,
         "SL" + std::to_string(n) + "/mu" + std::to_string(m) +
             ": the quotient requires m | n");
  auto rs = RootSystem::create('A', n - 1);
  std::string label = "SL" + std::to_string(n);
  if (m > 1) label += "/mu" + std::to_string(m);
  // T*/Q is the index-m subgroup of P/Q = Z/n: the class of m*omega_1.
  return GroupForm{label, rs, {unit_times(n - 1, 0, m)}};
}

GroupForm form_sp(int n) {
  if (n < 4 || n % 2 != 0)
    fail(ErrorCode::InvalidArgument,
         "Sp" + std::to_string(n) + ": need even n >= 4 (Sp2 is SL2)");
  auto rs = RootSystem::create('C', n / 2);
  return GroupForm{"Sp" + std::to_string(n), rs, full_group_gens(*rs)};
}

GroupForm form_psp(int n) {
  if (n < 4 || n % 2 != 0)
    fail(ErrorCode::InvalidArgument,
         "PSp" + std::to_string(n) + ": need even n >= 4 (PSp2 is PGL2)");
  auto rs = RootSystem::create('C', n / 2);
  return GroupForm{"PSp" + std::to_string(n), rs, {}};
}

GroupForm form_spin(int n) {
  if (n < 5)
    fail(ErrorCode::InvalidArgument,
         "Spin" + std::to_string(n) +
             ": need n >= 5 (Spin3 is SL2, Spin4 is not almost simple)");
  auto rs = (n % 2 == 1) ? RootSystem::create('B', (n - 1) / 2)
                         : RootSystem::create('D', n / 2);
  return GroupForm{"Spin" + std::to_string(n), rs, full_group_gens(*rs)};
}

GroupForm form_so(int n) {
  if (n < 5)
    fail(ErrorCode::InvalidArgument,
         "SO" + std::to_string(n) +
             ": need n >= 5 (SO3 is SL2/mu2, SO4 is not almost simple)");
  if (n % 2 == 1) {
    auto rs = RootSystem::create('B', (n - 1) / 2);
    return GroupForm{"SO" + std::to_string(n), rs, {}};
  }
  auto rs = RootSystem::create('D', n / 2);
  // The vector-representation kernel: the subgroup generated by [omega_1].
  return GroupForm{"SO" + std::to_string(n), rs, {unit_times(n / 2, 0, 1)}};
}

GroupForm form_pso(int n) {
  if (n < 5)
    fail(ErrorCode::InvalidArgument,
         "PSO" + std::to_string(n) + ": need n >= 5");
  if (n % 2 == 1) {
    GroupForm f = form_so(n);  // PSO = SO for odd n
    f.label = "PSO" + std::to_string(n);
    return f;
  }
  auto rs = RootSystem::create('D', n / 2);
  return GroupForm{"PSO" + std::to_string(n), rs, {}};
}

GroupForm form_half_spin(int n) {
  if (n < 12 || n % 4 != 0)
    fail(ErrorCode::InvalidArgument,
         "HSpin" + std::to_string(n) +
             ": half-spin groups are defined for n = 4k >= 12 "
             "(HSpin8 coincides with SO8)");
  int l = n / 2;
  auto rs = RootSystem::create('D', l);
  // Kernel-of-omega_l convention: the subgroup generated by [omega_l].
  return GroupForm{"HSpin" + std::to_string(n), rs, {unit_times(l, l - 1, 1)}};
}

namespace {

int parse_int(const std::ssub_match& m) {
  try {
    return std::stoi(m);
  } catch (const std::exception&) {
    fail(ErrorCode::InvalidArgument, "number out of range in group label");
  }
}

}  // namespace

GroupForm parse_group(const std::string& text) {
  std::smatch m;
  static const std::regex sl_re(R"(^SL(\d+)(?:/mu(\d+))?$)");
  static const std::regex pgl_re(R"(^PGL(\d+)$)");
  static const std::regex family_re(R"(^(Sp|PSp|Spin|SO|PSO|HSpin)(\d+)$)");
  static const std::regex exc_re(R"(^(E6|E7|E8|F4|G2)(sc|ad)?$)");
  static const std::regex generic_re(R"(^([A-D])(\d+)(sc|ad)$)");

  if (std::regex_match(text, m, sl_re)) {
    int n = parse_int(m[1]);
    int mu = m[2].matched ? parse_int(m[2]) : 1;
    return form_sl_quotient(n, mu);
  }
  if (std::regex_match(text, m, pgl_re)) {
    int n = parse_int(m[1]);
    return form_sl_quotient(n, n);
  }
  if (std::regex_match(text, m, family_re)) {
    int n = parse_int(m[2]);
    const std::string fam = m[1];
    if (fam == "Sp") return form_sp(n);
    if (fam == "PSp") return form_psp(n);
    if (fam == "Spin") return form_spin(n);
    if (fam == "SO") return form_so(n);
    if (fam == "PSO") return form_pso(n);
    return form_half_spin(n);
  }
  if (std::regex_match(text, m, exc_re)) {
    char type = m[1].str()[0];
    int rank = m[1].str()[1] - '0';
    auto rs = RootSystem::create(type, rank);
    bool trivial_center = FundamentalGroup(*rs).order() == 1;
    if (!m[2].matched && !trivial_center)
      fail(ErrorCode::InvalidArgument,
           text + " is ambiguous: specify " + text + "sc or " + text + "ad");
    GroupForm f = (m[2].matched && m[2] == "ad") ? form_adjoint(rs)
                                                 : form_simply_connected(rs);
    if (trivial_center) f.label = m[1];
    return f;
  }
  if (std::regex_match(text, m, generic_re)) {
    auto rs = RootSystem::create(m[1].str()[0], parse_int(m[2]));
    return (m[3] == "ad") ? form_adjoint(rs) : form_simply_connected(rs);
  }
  fail(ErrorCode::InvalidArgument,
       "unrecognized group '" + text +
           "'; expected e.g. SL9/mu3, Sp10, PSp10, Spin11, SO8, PSO8, "
           "HSpin12, E6sc, E7ad, E8, F4, G2, B3ad, D6sc");
}

// ---------------------------------------------------------------------------
// Lattice resolution and the constants E, Eq
// ---------------------------------------------------------------------------

LatticePresentation lattices_from_rows(const RootSystem& rs, const IMat& rows) {
  const int l = rs.rank();
  if (rows.rows != static_cast<size_t>(l) || rows.cols != static_cast<size_t>(l))
    fail(ErrorCode::InvalidArgument, "basis must be a full square matrix");

  LatticePresentation lp;
  lp.tstar_basis = rows;
  lp.tsub_basis = transpose(inverse(to_rational(rows)));

  // Gram of the normalized form on the dual basis: rows of tsub_basis hold
  // simple-coroot coordinates, so conjugate the coroot Gram.
  const QMat& gc = rs.coroot_gram();
  lp.gram_b = mat_mul(mat_mul(lp.tsub_basis, gc), transpose(lp.tsub_basis));
  lp.q_diagonal.resize(l);
  for (int i = 0; i < l; ++i) lp.q_diagonal[i] = lp.gram_b(i, i) / 2;

  Rat det = determinant(to_rational(rows));
  lp.index_in_p = to_integer(det < 0 ? -det : det);
  FundamentalGroup fg(rs);
  lp.subgroup_order = exact_div(Int(fg.order()), lp.index_in_p);
  return lp;
}

LatticePresentation resolve_lattices(const GroupForm& form) {
  const RootSystem& rs = *form.rs;
  const int l = rs.rank();
  for (const auto& g : form.gens) {
    if (static_cast<int>(g.size()) != l)
      fail(ErrorCode::InvalidArgument,
           "subgroup generator has wrong number of coordinates");
  }

  // T* = Q + sum Z*gen: stack the simple roots (weight coordinates) on top
  // of the generator lifts and take the canonical triangular basis.
  IMat stacked(l + form.gens.size(), l);
  for (int j = 0; j < l; ++j)
    for (int i = 0; i < l; ++i) stacked(j, i) = rs.cartan(i, j);
  for (size_t g = 0; g < form.gens.size(); ++g)
    for (int i = 0; i < l; ++i) stacked(l + g, i) = form.gens[g][i];

  LatticePresentation lp = lattices_from_rows(rs, hermite_normal_form(stacked));

  // Self-check: the two bases must pair to the identity.
  QMat pairing = mat_mul(to_rational(lp.tstar_basis), transpose(lp.tsub_basis));
  if (!(pairing == QMat::identity(l)))
    fail(ErrorCode::Internal, "lattice bases do not pair to the identity");
  return lp;
}

Int compute_E(const LatticePresentation& lp) {
  Int e = 1;
  for (const Rat& x : lp.gram_b.a) e = lcm(e, rat_den(x));
  return e;
}

Int compute_Eq(const LatticePresentation& lp) {
  // Integrality of a quadratic form on a lattice = integrality of q on a
  // basis plus integrality of the polar form b on basis pairs.
  Int e = 1;
  for (const Rat& q : lp.q_diagonal) e = lcm(e, rat_den(q));
  for (size_t i = 0; i < lp.gram_b.rows; ++i)
    for (size_t j = i + 1; j < lp.gram_b.cols; ++j)
      e = lcm(e, rat_den(lp.gram_b(i, j)));
  return e;
}

bool lattice_contains(const IMat& hnf_basis, std::span<const int64_t> w) {
  const size_t l = hnf_basis.rows;
  if (w.size() != l || hnf_basis.cols != l)
    fail(ErrorCode::InvalidArgument, "weight has wrong number of coordinates");
  // Solve x * basis = w by forward substitution through the triangular
  // basis; membership = all coefficients integral.
  std::vector<Int> x(l);
  for (size_t j = 0; j < l; ++j) {
    Int s = w[j];
    for (size_t i = 0; i < j; ++i) s -= x[i] * hnf_basis(i, j);
    if (s % hnf_basis(j, j) != 0) return false;
    x[j] = s / hnf_basis(j, j);
  }
  return true;
}

}  // namespace traceform
