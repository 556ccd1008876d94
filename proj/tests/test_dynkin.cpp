// Orbit/representation index and box-scan gcd checks.
//
// The closed orbit-index formula is validated against the defining
// enumeration, frozen values from the classical index tables, dimension
// formulas, and divisibility properties of character lattices.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "core/dynkin.hpp"

using namespace traceform;

namespace {

using RS = std::shared_ptr<const RootSystem>;

RS rs(char t, int r) { return RootSystem::create(t, r); }

WeightCoords unit(int rank, int pos, int64_t v = 1) {
  WeightCoords w(rank, 0);
  w[pos] = v;
  return w;
}

// Enumerate all dominant weights with coordinates in [0, bound] that lie in
// the character lattice of `form`, and fold f over them.
template <typename F>
void for_each_box_weight(const GroupForm& form, int bound, F&& f) {
  const int l = form.rs->rank();
  const FundamentalGroup fg(*form.rs);
  const auto classes = subgroup_classes(fg, form.gens);
  const auto in_subgroup = [&](const WeightCoords& w) {
    const auto c = fg.class_of(w);
    return std::find(classes.begin(), classes.end(), c) != classes.end();
  };
  WeightCoords w(l, 0);
  const auto rec = [&](auto&& self, int i) -> void {
    if (i == l) {
      if (in_subgroup(w)) f(w);
      return;
    }
    for (int64_t v = 0; v <= bound; ++v) {
      w[i] = v;
      self(self, i + 1);
    }
    w[i] = 0;
  };
  rec(rec, 0);
}

}  // namespace

TEST_CASE("closed form matches enumeration exhaustively at small rank") {
  for (const RS& sys : {rs('A', 1), rs('A', 2), rs('A', 3), rs('B', 2),
                        rs('B', 3), rs('C', 3), rs('D', 3), rs('G', 2)}) {
    const int l = sys->rank();
    WeightCoords w(l, 0);
    const auto sweep = [&](auto&& self, int i) -> void {
      if (i == l) {
        CAPTURE(sys->name());
        CHECK(orbit_index_closed(*sys, w) == orbit_index_enum(*sys, w));
        return;
      }
      for (int64_t v = 0; v <= 3; ++v) {
        w[i] = v;
        self(self, i + 1);
      }
      w[i] = 0;
    };
    sweep(sweep, 0);
  }
}

TEST_CASE("closed form matches enumeration on random capped weights") {
  std::mt19937_64 rng(20260111);
  const std::vector<RS> pool = {rs('A', 5), rs('A', 8), rs('B', 4), rs('B', 6),
                                rs('C', 5), rs('D', 6), rs('D', 8), rs('E', 6),
                                rs('E', 7), rs('F', 4)};
  int checked = 0;
  while (checked < 100) {
    const RS& sys = pool[rng() % pool.size()];
    WeightCoords w(sys->rank(), 0);
    // Few nonzero coordinates keep the orbit within the enumeration cap.
    const int support = 1 + static_cast<int>(rng() % 2);
    for (int s = 0; s < support; ++s) {
      w[rng() % sys->rank()] = 1 + static_cast<int64_t>(rng() % 3);
    }
    if (sys->orbit_size(sys->dominant_representative(w)) > 200000) continue;
    CAPTURE(sys->name());
    CHECK(orbit_index_closed(*sys, w) == orbit_index_enum(*sys, w, 200000));
    ++checked;
  }
}

TEST_CASE("enumerated index does not depend on the long root chosen") {
  for (const RS& sys : {rs('B', 3), rs('C', 3), rs('G', 2), rs('F', 4)}) {
    const WeightCoords w = sys->weyl_vector();
    std::vector<Int> values;
    for (size_t i = 0; i < sys->roots().size(); ++i) {
      if (sys->root_is_long(i)) {
        values.push_back(orbit_index_enum_at(*sys, w, i));
      }
    }
    CAPTURE(sys->name());
    for (const Int& v : values) CHECK(v == values.front());
    // Short roots are rejected.
    for (size_t i = 0; i < sys->roots().size(); ++i) {
      if (!sys->root_is_long(i)) {
        CHECK_THROWS_AS(orbit_index_enum_at(*sys, w, i), Error);
        break;
      }
    }
  }
}

TEST_CASE("zero weight has zero index") {
  for (const RS& sys : {rs('A', 4), rs('C', 2), rs('E', 8)}) {
    CHECK(orbit_index_closed(*sys, WeightCoords(sys->rank(), 0)) == 0);
    CHECK(orbit_index_enum(*sys, WeightCoords(sys->rank(), 0)) == 0);
  }
}

TEST_CASE("long and short root-orbit indices match the classical table") {
  for (int n = 2; n <= 6; ++n) {
    const RS b = rs('B', n);
    CHECK(orbit_index_closed(*b, b->highest_root()) == 4 * (n - 1));
    CHECK(orbit_index_closed(*b, *b->dominant_short_root()) == 2);
    const RS c = rs('C', n);
    CHECK(orbit_index_closed(*c, c->highest_root()) == 4);
    CHECK(orbit_index_closed(*c, *c->dominant_short_root()) == 2 * (n - 1));
  }
  const RS f = rs('F', 4);
  CHECK(orbit_index_closed(*f, f->highest_root()) == 12);
  CHECK(orbit_index_closed(*f, *f->dominant_short_root()) == 6);
  const RS g = rs('G', 2);
  CHECK(orbit_index_closed(*g, g->highest_root()) == 6);
  CHECK(orbit_index_closed(*g, *g->dominant_short_root()) == 2);
}

TEST_CASE("highest-root orbit index is twice the dual Coxeter number minus "
          "the short contribution") {
  // For simply-laced systems the highest-root orbit is all roots, so its
  // index is 2 * (dual Coxeter number); E8 gives the famous 60.
  for (const RS& sys : {rs('A', 4), rs('D', 5), rs('E', 6), rs('E', 7)}) {
    CHECK(orbit_index_closed(*sys, sys->highest_root()) ==
          2 * sys->dual_coxeter_number());
  }
  const RS e8 = rs('E', 8);
  CHECK(orbit_index_closed(*e8, e8->highest_root()) == 60);
}

TEST_CASE("rank-one and first-fundamental-weight indices") {
  const RS a1 = rs('A', 1);
  for (int64_t k = 0; k <= 6; ++k) {
    CHECK(orbit_index_closed(*a1, WeightCoords{k}) == k * k);
  }
  const RS c2 = rs('C', 2);
  CHECK(orbit_index_closed(*c2, unit(2, 0)) == 1);
  for (int n = 1; n <= 8; ++n) {
    const RS a = rs('A', n);
    for (int64_t m = 1; m <= 4; ++m) {
      CHECK(orbit_index_closed(*a, unit(n, 0, m)) == m * m);
    }
  }
}

TEST_CASE("spinor orbit indices are powers of two") {
  for (int n = 4; n <= 8; ++n) {
    const RS d = rs('D', n);
    CHECK(orbit_index_closed(*d, unit(n, n - 1)) == (Int(1) << (n - 3)));
  }
}

TEST_CASE("56-dimensional representation has index 12") {
  const RS e7 = rs('E', 7);
  const WeightCoords w7 = unit(7, 6);
  CHECK(irrep_dimension(*e7, w7) == 56);
  CHECK(orbit_index_closed(*e7, w7) == 12);
  CHECK(irrep_index(*e7, w7) == 12);
  const auto mult = weight_multiplicities(*e7, w7);
  CHECK(mult.size() == 1);  // minuscule: a single Weyl orbit
  CHECK(mult.at(w7) == 1);
}

TEST_CASE("adjoint representation has index twice the dual Coxeter number") {
  const std::vector<RS> all = {
      rs('A', 1), rs('A', 2), rs('A', 5), rs('A', 8), rs('B', 2), rs('B', 5),
      rs('B', 8), rs('C', 3), rs('C', 6), rs('C', 8), rs('D', 4), rs('D', 6),
      rs('D', 8), rs('E', 6), rs('E', 7), rs('E', 8), rs('F', 4), rs('G', 2)};
  for (const RS& sys : all) {
    CAPTURE(sys->name());
    CHECK(irrep_index(*sys, sys->highest_root()) ==
          2 * sys->dual_coxeter_number());
    CHECK(irrep_dimension(*sys, sys->highest_root()) ==
          sys->root_count() + sys->rank());
  }
}

TEST_CASE("frozen dimensions from the Weyl formula") {
  CHECK(irrep_dimension(*rs('A', 2), WeightCoords{1, 1}) == 8);
  CHECK(irrep_dimension(*rs('B', 2), unit(2, 1)) == 4);
  CHECK(irrep_dimension(*rs('B', 3), unit(3, 2)) == 8);
  CHECK(irrep_dimension(*rs('C', 3), unit(3, 0)) == 6);
  CHECK(irrep_dimension(*rs('G', 2), unit(2, 0)) == 7);
  CHECK(irrep_dimension(*rs('F', 4), unit(4, 3)) == 26);
  CHECK(irrep_dimension(*rs('E', 6), unit(6, 0)) == 27);
  CHECK(irrep_dimension(*rs('E', 8), rs('E', 8)->highest_root()) == 248);
  // Symmetric powers in rank one: dimension k + 1.
  for (int64_t k = 0; k <= 10; ++k) {
    CHECK(irrep_dimension(*rs('A', 1), WeightCoords{k}) == k + 1);
  }
}

TEST_CASE("weight multiplicities on small representations") {
  const RS a1 = rs('A', 1);
  const auto m3 = weight_multiplicities(*a1, WeightCoords{2});
  CHECK(m3.size() == 2);
  CHECK(m3.at(WeightCoords{2}) == 1);
  CHECK(m3.at(WeightCoords{0}) == 1);

  const RS a2 = rs('A', 2);
  const auto ad = weight_multiplicities(*a2, a2->highest_root());
  CHECK(ad.size() == 2);
  CHECK(ad.at(a2->highest_root()) == 1);
  CHECK(ad.at(WeightCoords{0, 0}) == 2);

  const RS e8 = rs('E', 8);
  const auto e8ad = weight_multiplicities(*e8, e8->highest_root());
  CHECK(e8ad.size() == 2);
  CHECK(e8ad.at(WeightCoords(8, 0)) == 8);

  // Minuscule: single orbit.
  const auto vec = weight_multiplicities(*rs('A', 4), unit(4, 0));
  CHECK(vec.size() == 1);
}

TEST_CASE("multiplicities sum to the dimension orbit by orbit") {
  const std::vector<std::pair<RS, WeightCoords>> cases = {
      {rs('A', 2), {2, 1}},     {rs('A', 3), {1, 1, 1}},
      {rs('B', 2), {1, 2}},     {rs('B', 3), {1, 0, 1}},
      {rs('C', 3), {0, 1, 1}},  {rs('G', 2), {1, 1}},
      {rs('D', 4), {1, 1, 0, 1}}, {rs('F', 4), {0, 0, 0, 2}},
      {rs('E', 6), {1, 0, 0, 0, 0, 1}}};
  for (const auto& [sys, w] : cases) {
    CAPTURE(sys->name());
    Int total = 0;
    for (const auto& [mu, m] : weight_multiplicities(*sys, w, 2000000)) {
      total += m * sys->orbit_size(mu);
    }
    CHECK(total == irrep_dimension(*sys, w));
  }
}

TEST_CASE("representation index is additive over direct sums and tensor "
          "factors") {
  CHECK(tensor_index(Int(56), Int(12), Int(56), Int(12)) == 1344);
  CHECK(tensor_index(Int(1), Int(0), Int(248), Int(60)) == 60);
  // Rank one: V(1) (x) V(1) = V(2) (+) V(0).
  const RS a1 = rs('A', 1);
  const Int lhs = tensor_index(irrep_dimension(*a1, WeightCoords{1}),
                               irrep_index(*a1, WeightCoords{1}),
                               irrep_dimension(*a1, WeightCoords{1}),
                               irrep_index(*a1, WeightCoords{1}));
  CHECK(lhs == irrep_index(*a1, WeightCoords{2}) +
                   irrep_index(*a1, WeightCoords{0}));
  CHECK(lhs == 4);
}

TEST_CASE("dimension cap and argument validation") {
  const RS a2 = rs('A', 2);
  CHECK_THROWS_WITH_AS(
      (void)weight_multiplicities(*a2, WeightCoords{100, 100}),
      doctest::Contains("exceeds the cap"), Error);
  try {
    (void)weight_multiplicities(*a2, WeightCoords{100, 100});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapExceeded);
  }
  CHECK_THROWS_AS((void)irrep_dimension(*a2, WeightCoords{-1, 0}), Error);
  CHECK_THROWS_AS((void)orbit_index_closed(*a2, WeightCoords{1}), Error);
  CHECK(irrep_index(*a2, WeightCoords{100, 100}, 2000000) > 0);
}

TEST_CASE("enumeration cap reports the closed form as the fallback") {
  const RS e8 = rs('E', 8);
  try {
    (void)orbit_index_enum(*e8, e8->weyl_vector(), 1000);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapExceeded);
  }
}

// ---------------------------------------------------------------------------
// Box-scan gcd of orbit indices over a character lattice
// ---------------------------------------------------------------------------

TEST_CASE("special linear and symplectic groups have index one") {
  for (const std::string label :
       {"SL5", "SL9", "Sp8", "Sp12", "A3sc", "C4sc"}) {
    const auto r = group_index(parse_group(label));
    CAPTURE(label);
    CHECK(r.value == 1);
    CHECK(r.stabilized);
  }
}

TEST_CASE("simply connected groups outside types A and C have nontrivial "
          "index") {
  // The prime support of these values is exactly the torsion-prime set:
  // {2} for the orthogonal series and G2, {2,3} for F4/E6/E7, {2,3,5} for E8.
  CHECK(group_index(form_simply_connected(rs('B', 4))).value == 2);
  CHECK(group_index(form_simply_connected(rs('D', 5))).value == 2);
  CHECK(group_index(form_simply_connected(rs('G', 2))).value == 2);
  CHECK(group_index(form_simply_connected(rs('F', 4))).value == 6);
  CHECK(group_index(form_simply_connected(rs('E', 7))).value == 12);
}

TEST_CASE("orthogonal and symplectic quotients") {
  for (int n = 7; n <= 12; ++n) {
    const auto so = group_index(parse_group("SO" + std::to_string(n)));
    CAPTURE(n);
    CHECK(so.value == 2);
    CHECK(so.stabilized);
    const auto spin = group_index(parse_group("Spin" + std::to_string(n)));
    CHECK(spin.value == 2);
    CHECK(spin.stabilized);
  }
  for (int n = 2; n <= 6; ++n) {
    const auto psp = group_index(parse_group("PSp" + std::to_string(2 * n)));
    CAPTURE(n);
    CHECK(psp.value == (n % 2 == 0 ? 2 : 4));
    CHECK(psp.stabilized);
  }
  const auto pso8 = group_index(parse_group("PSO8"));
  CHECK(pso8.value == 4);
  CHECK(pso8.stabilized);
  const auto pso10 = group_index(parse_group("PSO10"));
  CHECK(pso10.value == 8);
  CHECK(pso10.stabilized);
}

TEST_CASE("half-spin groups have index a power of two, at least four") {
  for (int n : {12, 16, 20}) {
    const auto r = group_index(parse_group("HSpin" + std::to_string(n)));
    CAPTURE(n);
    CHECK(r.stabilized);
    CHECK(r.value >= 4);
    Int v = r.value;
    while (v % 2 == 0) v /= 2;
    CHECK(v == 1);
    // The normalization constant divides the group index.
    CHECK(r.value % compute_E(parse_group("HSpin" + std::to_string(n))) == 0);
  }
}

TEST_CASE("exceptional group indices") {
  const std::vector<std::pair<const char*, int>> expected = {
      {"G2", 2},   {"F4", 6},   {"E6sc", 6}, {"E6ad", 6},
      {"E7sc", 12}, {"E7ad", 12}, {"E8", 60}};
  for (const auto& [label, value] : expected) {
    const auto r = group_index(parse_group(label));
    CAPTURE(label);
    CHECK(r.value == value);
    CHECK(r.stabilized);
  }
  // Torsion prime support of the E8 index.
  const auto primes = prime_divisors(group_index(parse_group("E8")).value);
  CHECK(primes == std::vector<Int>{2, 3, 5});
}

TEST_CASE("special linear quotients: index between m and m squared") {
  for (int n = 2; n <= 12; ++n) {
    for (int m = 1; m <= n; ++m) {
      if (n % m != 0) continue;
      const GroupForm form = form_sl_quotient(n, m);
      const auto r = group_index(form);
      CAPTURE(n);
      CAPTURE(m);
      CHECK(r.stabilized);
      CHECK(r.value % m == 0);
      CHECK(Int(m) * m % r.value == 0);
      CHECK(r.value % compute_E(form) == 0);
    }
  }
  CHECK(group_index(parse_group("SL4/mu2")).value == 2);
  CHECK(group_index(parse_group("SL12/mu6")).value == 6);
  CHECK(group_index(parse_group("PGL2")).value == 4);
}

TEST_CASE("batched scan equals one-at-a-time scans") {
  const RS d6 = rs('D', 6);
  const std::vector<std::string> labels = {"Spin12", "SO12", "HSpin12",
                                           "PSO12"};
  std::vector<std::vector<WeightCoords>> gens;
  for (const auto& label : labels) gens.push_back(parse_group(label).gens);
  const auto batch = group_index_batch(*d6, gens, 4);
  REQUIRE(batch.size() == labels.size());
  for (size_t i = 0; i < labels.size(); ++i) {
    const auto single = group_index(parse_group(labels[i]));
    CAPTURE(labels[i]);
    CHECK(batch[i].value == single.value);
    CHECK(batch[i].stabilized == single.stabilized);
  }
}

TEST_CASE("stabilization flag semantics at small bounds") {
  const GroupForm pgl2 = parse_group("PGL2");
  const auto b1 = group_index(pgl2, 1);
  CHECK(b1.value == 0);  // no nonzero character-lattice weight in the box
  CHECK_FALSE(b1.stabilized);
  const auto b2 = group_index(pgl2, 2);
  CHECK(b2.value == 4);
  CHECK_FALSE(b2.stabilized);  // the bound-1 box saw nothing
  const auto b3 = group_index(pgl2, 3);
  CHECK(b3.value == 4);
  CHECK(b3.stabilized);
  CHECK_THROWS_AS((void)group_index(pgl2, 0), Error);
}

TEST_CASE("box cap rejects infeasible scans") {
  try {
    (void)group_index(form_simply_connected(rs('A', 20)), 4);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapExceeded);
  }
}

TEST_CASE("normalization constant divides every orbit index over the "
          "character lattice") {
  for (const char* label : {"SL12/mu4", "PSp6", "HSpin12", "E7ad", "PSO10"}) {
    const GroupForm form = parse_group(label);
    const Int e = compute_E(form);
    for_each_box_weight(form, 3, [&](const WeightCoords& w) {
      const Int n = orbit_index_closed(*form.rs, w);
      CAPTURE(label);
      CHECK(n % e == 0);
    });
  }
}

TEST_CASE("odd symplectic quotients have all orbit indices divisible by 4") {
  for (int n : {3, 5}) {
    const GroupForm form = parse_group("PSp" + std::to_string(2 * n));
    for_each_box_weight(form, 3, [&](const WeightCoords& w) {
      const Int v = orbit_index_closed(*form.rs, w);
      if (v != 0) CHECK(v % 4 == 0);
    });
  }
}

TEST_CASE("quotient-lattice divisibility for special linear groups") {
  // m divides the orbit index of every character-lattice weight.
  for (const auto& [n, m] : std::vector<std::pair<int, int>>{
           {4, 2}, {6, 2}, {6, 3}, {8, 4}, {9, 3}}) {
    const GroupForm form = form_sl_quotient(n, m);
    for_each_box_weight(form, 2, [&](const WeightCoords& w) {
      CHECK(orbit_index_closed(*form.rs, w) % m == 0);
    });
  }
}
