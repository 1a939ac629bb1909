#include <doctest.h>

#include "kgonal/dot.hpp"
#include "kgonal/error.hpp"
#include "kgonal/verifier.hpp"
#include "oracles.hpp"

using namespace kgonal;

TEST_CASE("default manifest") {
  const auto m = default_manifest();
  CHECK_FALSE(m.instances.empty());
  CHECK(std::is_sorted(m.instances.begin(), m.instances.end()));
  for (const auto& p : m.instances) {
    CHECK(p.valid());
    CHECK(p.g <= 8);
    CHECK(p.k >= 2);
    CHECK(p.k <= 4);
    CHECK(p.columns() * p.rows() <= 6);
  }
  CHECK(std::find(m.instances.begin(), m.instances.end(), BNParams{5, 1, 4, 3}) !=
        m.instances.end());
}

TEST_CASE("enumeration matches filtering all fillings") {
  for (const auto& p : default_manifest().instances) {
    if (p.columns() * p.rows() > 4) continue;
    CAPTURE(p.str());
    const auto got = all_tableaux(p);
    CHECK(std::is_sorted(got.begin(), got.end()));
    CHECK(std::set<Tableau>(got.begin(), got.end()) == oracle::filter_all_fillings(p));
  }
}

TEST_CASE("enumeration limits") {
  const BNParams p{5, 1, 4, 3};
  CHECK(all_tableaux(p).size() == 10);
  CHECK_THROWS_AS(all_tableaux(p, {5, 60}), Error);
  CHECK_THROWS_AS(all_tableaux(p, {0, 60}), Error);
  CHECK_THROWS_AS(all_tableaux(p, {100, 0}), Error);
  CHECK(all_tableaux(p, {10, 60}).size() == 10);
}

TEST_CASE("poset of the trigonal genus six instance") {
  const BNParams p{6, 1, 4, 3};
  const auto tableaux = all_tableaux(p);
  const auto poset = build_poset(p, tableaux);
  CHECK(poset.tableau_count == tableaux.size());
  CHECK(std::is_sorted(poset.tori.begin(), poset.tori.end()));
  for (std::size_t i = 0; i < poset.tori.size(); ++i) {
    CHECK(poset.maximal[i] == poset.scrollar(i));
    if (!poset.maximal[i]) continue;
    for (std::size_t j = 0; j < poset.tori.size(); ++j)
      if (j != i) CHECK_FALSE(contains(poset.tori[i], poset.tori[j]));
  }
  const auto maxima = maximal_tori(p);
  CHECK(maxima.size() == static_cast<std::size_t>(
                             std::count(poset.maximal.begin(), poset.maximal.end(), true)));
}

TEST_CASE("hasse covers and dot export") {
  const BNParams p{6, 1, 4, 3};
  const auto poset = build_poset(p, all_tableaux(p));
  const auto covers = hasse_covers(poset);
  for (std::size_t i = 0; i < covers.size(); ++i) {
    CHECK(covers[i].empty() == poset.maximal[i]);
    for (auto j : covers[i]) CHECK(contains(poset.tori[i], poset.tori[j]));
  }
  const auto dot = hasse_dot(poset);
  CHECK(dot.rfind("digraph tori {", 0) == 0);
  CHECK(dot.find("fillcolor=lightblue") != std::string::npos);
}

TEST_CASE("checks on individual instances") {
  for (const BNParams p : {BNParams{5, 1, 4, 3}, BNParams{6, 1, 4, 3}, BNParams{7, 2, 7, 4}}) {
    CAPTURE(p.str());
    const auto r = verify_instance(p, {});
    CHECK(r.status == Status::Pass);
    REQUIRE(r.checks.size() == 4);
    for (const auto& c : r.checks) CHECK(c.status == Status::Pass);
  }
  const auto r = verify_instance({5, 1, 4, 3}, {});
  CHECK(r.max_dimension == 1);
  CHECK(verify_splitting({11, 2, 8, 5}).status == Status::Pass);
}

TEST_CASE("an instance with no tableaux is skipped") {
  // [2] x [2] needs at least three symbols.
  const BNParams p{2, 1, 1, 2};
  const auto r = verify_instance(p, {});
  CHECK(r.tableau_count == 0);
  CHECK(r.checks[2].status == Status::Skip);
  CHECK(r.status == Status::Pass);
}

TEST_CASE("sweeps") {
  SweepManifest empty;
  CHECK(run_sweep(empty).instances.empty());

  SweepManifest zero;
  zero.instances = {{5, 1, 4, 3}, {6, 1, 4, 3}};
  zero.limits.max_tableaux = 0;
  const auto z = run_sweep(zero);
  for (const auto& r : z.instances) CHECK(r.status == Status::LimitExceeded);
  CHECK(z.any_limit());
  CHECK_FALSE(z.any_failure());

  SweepManifest m = default_manifest();
  const auto one = run_sweep(m, 1, 3);
  const auto four = run_sweep(m, 4, 3);
  CHECK(one.all_pass());
  REQUIRE(one.instances.size() == four.instances.size());
  for (std::size_t i = 0; i < one.instances.size(); ++i) {
    CHECK(one.instances[i].params == four.instances[i].params);
    CHECK(one.instances[i].tableau_count == four.instances[i].tableau_count);
    CHECK(one.instances[i].torus_count == four.instances[i].torus_count);
  }
}
