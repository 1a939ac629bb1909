#pragma once

// Rectangular tableaux on [a] x [b] with alphabet [g].
//
// Boxes are addressed 1-based as (x, y): x is the column, y the row, and (1,1)
// is the top-left box. A tableau is strictly increasing along rows and down
// columns; symbols may repeat, which is what k-uniform displacement tableaux
// exploit.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kgonal/splitting.hpp"

namespace kgonal {

struct Box {
  int x = 0;
  int y = 0;
  friend bool operator==(const Box&, const Box&) = default;
  friend auto operator<=>(const Box&, const Box&) = default;
};

class Tableau {
 public:
  Tableau() = default;
  // A filling of an a x b grid (a columns, b rows); every entry zero.
  Tableau(int columns, int rows, int alphabet);
  // rows[y-1][x-1] = t(x, y). Rows must be nonempty and of equal length.
  Tableau(const std::vector<std::vector<int>>& rows, int alphabet);

  int columns() const { return a_; }
  int rows() const { return b_; }
  int alphabet() const { return g_; }
  std::size_t area() const { return cells_.size(); }

  int at(int x, int y) const { return cells_[index(x, y)]; }
  int& at(int x, int y) { return cells_[index(x, y)]; }
  int operator()(int x, int y) const { return at(x, y); }
  bool contains(int x, int y) const { return x >= 1 && y >= 1 && x <= a_ && y <= b_; }

  // Row-major cell values.
  const std::vector<int>& cells() const { return cells_; }
  std::vector<std::vector<int>> row_vectors() const;

  // Same cells, different alphabet bound.
  Tableau with_alphabet(int g) const;

  std::string str() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;
  // Shape, then row-major lexicographic.
  friend auto operator<=>(const Tableau&, const Tableau&) = default;

 private:
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y - 1) * static_cast<std::size_t>(a_) +
           static_cast<std::size_t>(x - 1);
  }

  int a_ = 0;
  int b_ = 0;
  int g_ = 0;
  std::vector<int> cells_;
};

bool validate(const Tableau& t);

// Equal symbols only on boxes with equal (x - y) mod k.
bool is_k_uniform_displacement(const Tableau& t, int k);

std::set<int> symbols(const Tableau& t);
std::size_t distinct_symbol_count(const Tableau& t);

// t^T(x, y) = t(y, x), on [b] x [a].
Tableau transpose(const Tableau& t);

// t_R(x, y) = g + 1 - t(a+1-x, b+1-y).
Tableau rotate(const Tableau& t);

// Whether alpha meets the standing hypotheses for scrollar tableaux on
// [a] x [b]: 1 <= alpha <= min(a, k-1), and alpha >= k-b or alpha == a.
bool scrollar_alpha_admissible(int columns, int rows, int k, int alpha);

// Throws InvalidAlpha when the hypotheses above fail.
bool is_scrollar(const Tableau& t, int k, int alpha);

// Every admissible alpha for which t is scrollar, ascending.
std::vector<int> scrollar_types(const Tableau& t, int k);

bool has_vertical_steps(const Tableau& t, int k);

// Number of distinct symbols in a scrollar tableau of type alpha on
// [a] x [b]: alpha(b - a + alpha) + (a - alpha)k.
std::int64_t scrollar_symbol_count(int columns, int rows, int k, int alpha);

// A scrollar tableau of type alpha on [r+1] x [g-d+r] over [g], or nullopt
// when g < |mu_alpha|. The fundamental L-shaped region is filled in blocks of
// alpha columns, each block row by row, and the rest follows by translation;
// symbols are shifted so the largest one is g. For alpha > 1 the result has
// no vertical steps. Throws InvalidAlpha when alpha is not valid for p.
std::optional<Tableau> generate_scrollar(const BNParams& p, std::int64_t alpha);

}  // namespace kgonal
