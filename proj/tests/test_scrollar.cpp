#include <doctest.h>

#include "golden.hpp"
#include "kgonal/error.hpp"
#include "kgonal/scrollar.hpp"
#include "kgonal/torus.hpp"
#include "kgonal/verifier.hpp"
#include "oracles.hpp"

using namespace kgonal;

TEST_CASE("hook statistic on the k = 5 example") {
  const Tableau t = golden::hook_example();
  const auto s = stat_grid(t, 5);
  const std::vector<std::tuple<int, int, int>> expected = {
      {4, 1, 4}, {3, 2, 3}, {4, 2, 3}, {2, 3, 2}, {3, 3, 3},
      {4, 3, 2}, {1, 4, 1}, {2, 4, 2}, {3, 4, 3}, {4, 4, 3}};
  int defined = 0;
  for (int y = 1; y <= 4; ++y)
    for (int x = 1; x <= 4; ++x) defined += s.defined(x, y);
  CHECK(defined == 10);
  for (auto [x, y, v] : expected) {
    CAPTURE(x);
    CAPTURE(y);
    CHECK(s.at(x, y) == v);
  }
  CHECK_THROWS_AS(stat(t, 5, 1, 1), Error);
  CHECK_THROWS_AS(stat(t, 5, 5, 1), Error);
}

TEST_CASE("hook statistic is 1 when k = 2") {
  for (const auto& t : all_tableaux({4, 1, 3, 2}))
    for (int y = 1; y <= t.rows(); ++y)
      for (int x = 1; x <= t.columns(); ++x) CHECK(stat(t, 2, x, y) == 1);
}

TEST_CASE("admissible paths on the k = 5 example") {
  const auto paths = admissible_paths(golden::hook_example(), 5);
  REQUIRE(paths.size() == 2);
  CHECK(paths[0].type == 3);
  CHECK(paths[1].type == 3);
  CHECK(paths[0].steps() == "DDR");
  CHECK(paths[1].steps() == "DRD");
  CHECK(paths[0].boxes == std::vector<Box>{{3, 2}, {3, 3}, {3, 4}, {4, 4}});
  CHECK(paths[1].boxes == std::vector<Box>{{3, 2}, {3, 3}, {4, 3}, {4, 4}});
}

TEST_CASE("admissible path errors") {
  CHECK_THROWS_AS(admissible_paths(Tableau({{1, 2}}, 2), 5), Error);
  CHECK_THROWS_AS(admissible_paths(golden::trio_t(), 2), Error);
}

TEST_CASE("scrollarization of the k = 5 example") {
  const auto s = scrollarize_with_path(golden::hook_example(), 5);
  CHECK(s.result == golden::hook_example_scrollarized());
  CHECK(s.type == 3);
  REQUIRE(s.path);
  CHECK(s.path->steps() == "DRD");
  CHECK(is_scrollar(s.result, 5, 3));
  CHECK(oracle::torus_inside(golden::hook_example(), s.result, 5));
}

TEST_CASE("scrollar inputs are fixed points") {
  CHECK(scrollarize(golden::scrollar_k5(), 5) == golden::scrollar_k5());
  CHECK(scrollarize(golden::block_scrollar_k5(), 5) == golden::block_scrollar_k5());
  CHECK(scrollarize(golden::hook_example_scrollarized(), 5) ==
        golden::hook_example_scrollarized());
}

TEST_CASE("small grids are returned unchanged") {
  const Tableau t({{1, 2}}, 3);
  const auto s = scrollarize_with_path(t, 4);
  CHECK(s.result == t);
  CHECK(s.type == 2);
  CHECK_FALSE(s.path);
  CHECK_THROWS_AS(scrollarize(golden::trio_t(), 2), Error);
}

TEST_CASE("statistic and path properties over every small instance") {
  for (const auto& p : default_manifest().instances) {
    const int k = static_cast<int>(p.k);
    for (const auto& t : all_tableaux(p)) {
      CAPTURE(t.str());
      const int a = t.columns(), b = t.rows();
      for (int y = 1; y <= b; ++y)
        for (int x = 1; x <= a; ++x) {
          if (x + y < k) continue;
          const int s = stat(t, k, x, y);
          CHECK(s == oracle::hook_width(t, k, x, y));
          // Step bounds: moving right, up, or up-right raises S by at most one.
          if (x < a) CHECK(stat(t, k, x + 1, y) <= s + 1);
          if (y > 1 && x + y - 1 >= k) CHECK(stat(t, k, x, y - 1) <= s + 1);
          if (x < a && y > 1) CHECK(stat(t, k, x + 1, y - 1) <= s + 1);
        }
      if (a + b < k) continue;
      const auto paths = admissible_paths(t, k);
      CHECK_FALSE(paths.empty());
      for (const auto& path : paths) CHECK(path.type == paths.front().type);
      const auto out = scrollarize(t, k);
      CHECK(oracle::torus_inside(t, out, k));
    }
  }
}
