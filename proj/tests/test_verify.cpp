#include <catch2/catch_amalgamated.hpp>

#include "chainpoly/cli.hpp"
#include "chainpoly/verify.hpp"
#include "oracles.hpp"

using namespace chainpoly;

namespace {
Poset chain_poset(int n) {
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  return Poset::from_covers(n, covers);
}
}  // namespace

TEST_CASE("theorem1_check verdicts", "[verify]") {
  const TheoremReport pass = theorem1_check(ChainVector{2, {3, 2}});
  CHECK(pass.ascending_ok);
  CHECK(pass.descending_ok);
  CHECK_FALSE(pass.falsification);
  CHECK(pass.unimodal);
  CHECK(pass.violations.empty());

  // descent range at d=2 starts at index 0, so 6 > 6 fails strictly
  const TheoremReport fail = theorem1_check(ChainVector{2, {6, 6}});
  CHECK(fail.ascending_ok);
  CHECK_FALSE(fail.descending_ok);
  CHECK(fail.falsification);
  REQUIRE(fail.violations.size() == 1);
  CHECK(fail.violations[0].index == 0);
  CHECK(fail.violations[0].kind == TheoremReport::Violation::Kind::descend_fail);

  const TheoremReport vac = theorem1_check(ChainVector{1, {5}});
  CHECK(vac.ascending_ok);
  CHECK(vac.descending_ok);
  CHECK_FALSE(vac.falsification);

  CHECK_THROWS_AS(theorem1_check(ChainVector{0, {}}), RangeError);
}

TEST_CASE("violations between the ranges leave both verdicts intact", "[verify]") {
  // d=9: ascent through index 4, descent from index 6; the dip at 4 and
  // rise at 5 sit in the uncovered middle window.
  const ChainVector cv{9, {1, 2, 3, 4, 5, 3, 7, 6, 1}};
  const TheoremReport rep = theorem1_check(cv);
  CHECK(rep.ascending_ok);
  CHECK(rep.descending_ok);
  CHECK_FALSE(rep.falsification);
  CHECK_FALSE(rep.unimodal);
  REQUIRE(rep.unimodality_violations == std::vector<int>{5});
  CHECK(rep.unimodality_violations.front() >= rep.window.epsilon);
  CHECK(rep.unimodality_violations.back() < rep.window.descent_start);
}

TEST_CASE("prop4_check", "[verify]") {
  CHECK(prop4_check(HVector{2, {1, 1, 0}}));
  CHECK(prop4_check(HVector{2, {1, 4, 1}}));
  CHECK_FALSE(prop4_check(HVector{2, {1, 0, 2}}));
  CHECK_FALSE(prop4_check(HVector{2, {1, -1, 0}}));
}

TEST_CASE("prop2_conclusion_check", "[verify]") {
  CHECK(prop2_conclusion_check(FVector{2, {3, 2}}));  // no pairs with i+j <= 0
  CHECK_FALSE(prop2_conclusion_check(FVector{4, {4, 8, 2, 1}}));
  CHECK(prop2_conclusion_check(FVector{3, {5, 8, 4}}));
}

TEST_CASE("boundary_g_check on the worked lattices", "[verify]") {
  CHECK(boundary_g_check(ideal_lattice(Poset::from_covers(3, {{0, 2}, {1, 2}}))));
  CHECK(boundary_g_check(ideal_lattice(chain_poset(3))));
  CHECK_THROWS_AS(boundary_g_check(ideal_lattice(chain_poset(2))), RangeError);
  CHECK_THROWS_AS(boundary_g_check(ideal_lattice(Poset::antichain(3))), RangeError);
}

TEST_CASE("boundary relation holds for every small non-boolean lattice", "[verify][oracle]") {
  for (int n = 3; n <= 5; ++n)
    for (const Poset& p : enumerate_posets(n)) {
      const IdealLattice lat = ideal_lattice(p);
      if (is_boolean(lat) || n - 1 < 2) continue;
      REQUIRE(boundary_g_check(lat));
    }
}

TEST_CASE("hd_euler_check", "[verify]") {
  CHECK(hd_euler_check(FVector{2, {6, 6}}, f_to_h(FVector{2, {6, 6}}), true));
  CHECK(hd_euler_check(FVector{2, {3, 2}}, f_to_h(FVector{2, {3, 2}}), false));
  CHECK_FALSE(hd_euler_check(FVector{2, {6, 6}}, f_to_h(FVector{2, {6, 6}}), false));
  // the empty proper part: f = (), h = (1), a (-1)-sphere
  CHECK(hd_euler_check(FVector{0, {}}, f_to_h(FVector{0, {}}), true));
}

TEST_CASE("theorem1_asserted follows the boolean small-d rule", "[verify]") {
  CHECK(theorem1_asserted(false, 1));
  CHECK(theorem1_asserted(false, 2));
  CHECK(theorem1_asserted(true, 3));
  CHECK_FALSE(theorem1_asserted(true, 1));
  CHECK_FALSE(theorem1_asserted(true, 2));
}

TEST_CASE("batch_verify on tiny universes", "[verify]") {
  const BatchReport r1 = batch_verify(1);
  CHECK(r1.posets_tested == 1);
  CHECK(r1.falsifications == 0);
  CHECK(r1.prop4_failures == 0);
  CHECK(r1.theorem_passes == 1);
  CHECK(r1.clean());

  const BatchReport r3 = batch_verify(3);
  CHECK(r3.posets_tested == 8);  // 1 + 2 + 5
  CHECK(r3.falsifications == 0);
  CHECK(r3.prop4_failures == 0);
  CHECK(r3.hd_euler_failures == 0);
  CHECK(r3.oracle_mismatches == 0);
  CHECK(r3.boundary_failures == 0);
  CHECK(r3.unimodal_count == 8);
  CHECK(r3.nonunimodal_examples.empty());
  // B_3 is recorded informationally: c = (6,6) and d = 2
  REQUIRE(r3.boolean_informational.size() == 1);
  CHECK(r3.boolean_informational[0].key == canonical_key(Poset::antichain(3)));
  CHECK(r3.boolean_informational[0].d == 2);
  CHECK(r3.boolean_informational[0].c.c == std::vector<mpz_class>{6, 6});
  CHECK(r3.clean());
}

TEST_CASE("batch_verify finds the strict-ascent counterexample at the 4-chain", "[verify]") {
  // The proper part of J(4-chain) is a 3-chain, whose order complex is a
  // full simplex: c = (3,3,1) and the strict ascent c_0 < c_1 fails. This
  // is a genuine boundary failure of the claim being verified (the order
  // complex degenerates to a simplex exactly for chain lattices), confirmed
  // below against the face-enumeration oracle.
  const BatchReport r4 = batch_verify(4);
  CHECK(r4.posets_tested == 24);  // 1 + 2 + 5 + 16
  CHECK(r4.prop4_failures == 0);
  CHECK(r4.oracle_mismatches == 0);
  REQUIRE(r4.falsifications == 1);
  REQUIRE(r4.falsification_examples.size() == 1);
  const FalsificationExample& ex = r4.falsification_examples[0];
  CHECK(ex.key == canonical_key(chain_poset(4)));
  CHECK(ex.d == 3);
  CHECK(ex.c.c == std::vector<mpz_class>{3, 3, 1});
  CHECK_FALSE(r4.clean());

  const FVector oracle_f =
      f_vector_bruteforce(order_complex(proper_part(ideal_lattice(chain_poset(4)))));
  CHECK(oracle_f.f == ex.c.c);
}

TEST_CASE("batch_verify is deterministic across worker counts", "[verify]") {
  const BatchReport a = batch_verify(4, 1);
  const BatchReport b = batch_verify(4, 4);
  const BatchReport c = batch_verify(4, 0);  // all cores
  CHECK(a == b);
  CHECK(a == c);
  CHECK(render_text(a) == render_text(b));
  CHECK(to_json(a).dump() == to_json(c).dump());
}

TEST_CASE("batch_verify gates", "[verify]") {
  CHECK_THROWS_AS(batch_verify(0), RangeError);
  CHECK_THROWS_AS(batch_verify(8), SizeError);
  CHECK_THROWS_AS(batch_verify(9, 1, true), SizeError);  // beyond the hard limit
}
