#include <doctest.h>

#include "golden.hpp"
#include "kgonal/error.hpp"
#include "kgonal/torus.hpp"
#include "kgonal/verifier.hpp"
#include "oracles.hpp"

using namespace kgonal;

namespace {
const BNParams kTrio{6, 2, 6, 3};  // [3] x [2] over [6]
}

TEST_CASE("torsion profile") {
  CHECK(torsion_profile(6, 3) == std::vector<int>{0, 0, 3, 3, 0, 0});
  CHECK(torsion_profile(3, 2) == std::vector<int>{0, 2, 0});
  CHECK(torsion_profile(2, 3) == std::vector<int>{0, 0});
}

TEST_CASE("torus of the k = 3 trio") {
  const auto u = torus_of(golden::trio_t(), kTrio);
  CHECK(u.constraints() == std::map<int, int>{{1, 0}, {2, 2}, {4, 1}, {5, 0}, {6, 2}});
  CHECK(u.str() == "{1:0 2:2 4:1 5:0 6:2}");
  CHECK(dimension(u) == 1);
  const auto star = torus_of(golden::trio_tstar(), kTrio);
  CHECK(dimension(star) == 0);
  CHECK(contains(star, u));
  CHECK_FALSE(contains(u, star));
  CHECK_FALSE(contains(torus_of(golden::trio_tprime(), kTrio), u));
  CHECK(contains(u, u));
  CHECK_THROWS_AS(torus_of(golden::trio_t(), BNParams{6, 2, 6, 2}), Error);
}

TEST_CASE("containment needs a shared ambient") {
  const TorusClass u(kTrio), v(BNParams{6, 1, 5, 3});
  CHECK_THROWS_AS(contains(u, v), Error);
}

TEST_CASE("residues are normalised and symbols bounded") {
  const TorusClass u(kTrio, {{1, -1}, {3, 7}});
  CHECK(u.residue(1) == 2);
  CHECK(u.residue(3) == 1);
  CHECK(u.constraint_count() == 2);
  CHECK_THROWS_AS(TorusClass(kTrio, {{7, 0}}), Error);
}

TEST_CASE("containment is a partial order and matches the tableau-level test") {
  for (const auto& p : default_manifest().instances) {
    const int k = static_cast<int>(p.k);
    const auto tableaux = all_tableaux(p);
    const auto poset = build_poset(p, tableaux);
    const auto& tori = poset.tori;
    for (std::size_t i = 0; i < tori.size(); ++i)
      for (std::size_t j = 0; j < tori.size(); ++j) {
        const bool ij = contains(tori[i], tori[j]);
        CHECK(ij == tableau_contains(poset.representative[i], poset.representative[j], k));
        CHECK(ij == oracle::torus_inside(poset.representative[i], poset.representative[j], k));
        if (i != j) CHECK_FALSE((ij && contains(tori[j], tori[i])));
        if (!ij) continue;
        for (std::size_t m = 0; m < tori.size(); ++m)
          if (contains(tori[j], tori[m])) CHECK(contains(tori[i], tori[m]));
      }
  }
}

TEST_CASE("rationals") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-7/4") == Rational(-7, 4));
  CHECK(rational_str(Rational(6, 4)) == "3/2");
  for (const char* bad : {"", "x", "1/0", "1/2/3", "2.5"}) CHECK_THROWS_AS(parse_rational(bad), Error);
}

TEST_CASE("general points and membership") {
  const auto u = torus_of(golden::trio_t(), kTrio);
  const auto D = sample_general(u, 7);
  CHECK(D.xi.size() == 6);
  CHECK(D.degree == 6);
  CHECK(membership(D, u));
  CHECK_FALSE(membership(D, torus_of(golden::trio_tstar(), kTrio)));
  CHECK(sample_general(u, 7).xi == D.xi);

  DivisorCoords bad = D;
  bad.degree = 5;
  CHECK_THROWS_AS(membership(bad, u), Error);

  // Coordinates on loops of torsion k are reduced into [0, k).
  DivisorCoords big{{Rational(7), Rational(7), Rational(7), Rational(7), Rational(7), Rational(7)}, 6};
  const auto n = normalized(big, 3);
  CHECK(n.xi[0] == Rational(7));
  CHECK(n.xi[2] == Rational(1));
  CHECK(n.xi[3] == Rational(1));
  CHECK(membership(big, TorusClass(kTrio, {{1, 1}, {3, 1}})));
}
