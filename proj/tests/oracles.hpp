#pragma once

// Brute-force reference implementations. They share no code with the
// library beyond its value types and are only used to cross-check it.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "kgonal/splitting.hpp"
#include "kgonal/tableau.hpp"

namespace oracle {

using kgonal::BNParams;
using kgonal::SplittingType;
using kgonal::Tableau;

inline int mod(long long v, long long k) { return static_cast<int>(((v % k) + k) % k); }

// Every filling of [a] x [b] by [g], kept when rows and columns strictly
// increase and equal symbols share (x - y) mod k.
inline std::set<Tableau> filter_all_fillings(const BNParams& p) {
  const int a = static_cast<int>(p.columns()), b = static_cast<int>(p.rows());
  const int g = static_cast<int>(p.g), k = static_cast<int>(p.k);
  std::set<Tableau> out;
  std::vector<int> v(static_cast<std::size_t>(a * b), 1);
  for (;;) {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(b));
    for (int y = 0; y < b; ++y)
      rows[static_cast<std::size_t>(y)].assign(v.begin() + y * a, v.begin() + (y + 1) * a);
    bool ok = true;
    for (int y = 0; y < b && ok; ++y)
      for (int x = 0; x < a && ok; ++x) {
        const int s = v[static_cast<std::size_t>(y * a + x)];
        if (x + 1 < a && v[static_cast<std::size_t>(y * a + x + 1)] <= s) ok = false;
        if (y + 1 < b && v[static_cast<std::size_t>((y + 1) * a + x)] <= s) ok = false;
      }
    for (int i = 0; i < a * b && ok; ++i)
      for (int j = i + 1; j < a * b && ok; ++j)
        if (v[static_cast<std::size_t>(i)] == v[static_cast<std::size_t>(j)] &&
            mod((i % a) - (i / a), k) != mod((j % a) - (j / a), k))
          ok = false;
    if (ok) out.insert(Tableau(rows, g));
    std::size_t i = 0;
    while (i < v.size() && v[i] == g) v[i++] = 1;
    if (i == v.size()) break;
    ++v[i];
  }
  return out;
}

// -1, 0, 1 or 2 (incomparable) for mu versus lam by prefix sums.
inline int prefix_compare(const SplittingType& mu, const SplittingType& lam) {
  long long a = 0, b = 0;
  bool le = true, ge = true;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    a += mu[i];
    b += lam[i];
    // mu is below lam when each prefix of mu is at most lam's.
    if (a > b) le = false;
    if (a < b) ge = false;
  }
  if (le && ge) return 0;
  if (le) return -1;
  if (ge) return 1;
  return 2;
}

inline long long h0(const SplittingType& mu) {
  long long s = 0;
  for (std::size_t i = 0; i < mu.size(); ++i) s += std::max<long long>(0, mu[i] + 1);
  return s;
}

// All nondecreasing length-k types with sum d+1-g-k and h0 = r+1, by
// scanning a box that contains every such type.
inline std::vector<SplittingType> all_balanced(const BNParams& p) {
  const long long k = p.k, sum = p.d + 1 - p.g - p.k;
  const long long hi = p.r, lo = sum - (k - 1) * p.r;
  std::vector<SplittingType> out;
  std::vector<std::int64_t> v;
  // Pruned only by the sum: the remaining entries are at least e and at most hi.
  std::function<void(long long, long long)> rec = [&](long long from, long long left) {
    const long long rem = k - static_cast<long long>(v.size());
    if (rem == 0) {
      if (left == 0) {
        SplittingType mu(v);
        if (h0(mu) == p.r + 1) out.push_back(mu);
      }
      return;
    }
    for (long long e = from; e <= hi && rem * e <= left; ++e) {
      if (left - e > (rem - 1) * hi) continue;
      v.push_back(e);
      rec(e, left - e);
      v.pop_back();
    }
  };
  rec(lo, sum);
  std::sort(out.begin(), out.end());
  return out;
}

// Dominance-maximal elements of all_balanced(p).
inline std::set<SplittingType> maximal_balanced(const BNParams& p) {
  const auto all = all_balanced(p);
  std::set<SplittingType> out;
  for (const auto& mu : all) {
    bool dominated = false;
    for (const auto& lam : all)
      if (prefix_compare(mu, lam) == -1) dominated = true;
    if (!dominated) out.insert(mu);
  }
  return out;
}

// Width of the hook at (x, y) made of its k-1 largest symbols, by sorting.
inline int hook_width(const Tableau& t, int k, int x, int y) {
  std::vector<std::pair<int, bool>> hook;  // symbol, lies in the row arm
  for (int i = 1; i < x; ++i) hook.push_back({t(i, y), true});
  for (int j = 1; j < y; ++j) hook.push_back({t(x, j), false});
  std::sort(hook.rbegin(), hook.rend());
  int width = 1;
  for (int n = 0; n < k - 2 && n < static_cast<int>(hook.size()); ++n) width += hook[static_cast<std::size_t>(n)].second;
  return width;
}

// The (symbol, residue) pairs a tableau imposes.
inline std::set<std::pair<int, int>> constraint_pairs(const Tableau& t, int k) {
  std::set<std::pair<int, int>> out;
  for (int y = 1; y <= t.rows(); ++y)
    for (int x = 1; x <= t.columns(); ++x) out.insert({t(x, y), mod(y - x, k)});
  return out;
}

// T(inner) inside T(outer) iff outer's constraints are among inner's.
inline bool torus_inside(const Tableau& inner, const Tableau& outer, int k) {
  const auto a = constraint_pairs(inner, k), b = constraint_pairs(outer, k);
  return std::includes(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace oracle
