#pragma once

// Hook statistic, admissible paths, and the scrollarization procedure that
// turns any k-uniform displacement tableau t into a scrollar tableau t' whose
// torus contains that of t.

#include <optional>
#include <string>
#include <vector>

#include "kgonal/tableau.hpp"

namespace kgonal {

// Width of the hook formed by the k-1 largest symbols among column x at or
// above (x,y) and row y at or left of (x,y); the corner belongs to both arms.
// Requires x + y >= k (Undefined otherwise). Throws Internal if two of the
// candidate symbols tie before k-1 of them are taken.
int stat(const Tableau& t, int k, int x, int y);

class StatGrid {
 public:
  StatGrid(int columns, int rows) : a_(columns), b_(rows), v_(static_cast<std::size_t>(columns * rows)) {}

  int columns() const { return a_; }
  int rows() const { return b_; }
  bool defined(int x, int y) const { return v_[index(x, y)].has_value(); }
  std::optional<int> get(int x, int y) const { return v_[index(x, y)]; }
  int at(int x, int y) const { return v_[index(x, y)].value(); }
  void set(int x, int y, int value) { v_[index(x, y)] = value; }

  friend bool operator==(const StatGrid&, const StatGrid&) = default;

 private:
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>((y - 1) * a_ + (x - 1));
  }
  int a_;
  int b_;
  std::vector<std::optional<int>> v_;
};

StatGrid stat_grid(const Tableau& t, int k);

struct AdmissiblePath {
  int type = 0;
  std::vector<Box> boxes;

  // One character per step: 'D' (down) or 'R' (right).
  std::string steps() const;

  friend bool operator==(const AdmissiblePath&, const AdmissiblePath&) = default;
};

// Every admissible path, of every type, ordered by step string with D < R.
// Requires a + b >= k (GridTooSmall) and t k-uniform (NotKUniform).
std::vector<AdmissiblePath> admissible_paths(const Tableau& t, int k);

struct Scrollarization {
  Tableau result;
  int type = 0;
  // Empty when a + b <= k and t is returned as is.
  std::optional<AdmissiblePath> path;
};

// Follows the admissible path that takes right-steps as early as possible
// (the last one in admissible_paths order), starting from t on the
// [type] x [k-type] corner and adding one row or column per step.
Scrollarization scrollarize_with_path(const Tableau& t, int k);

Tableau scrollarize(const Tableau& t, int k);

}  // namespace kgonal
