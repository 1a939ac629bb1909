#include "kgonal/tableau.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "kgonal/error.hpp"

namespace kgonal {

Tableau::Tableau(int columns, int rows, int alphabet)
    : a_(columns), b_(rows), g_(alphabet) {
  if (columns < 1 || rows < 1)
    throw Error(Errc::InvalidParams, "tableau grid must be at least 1x1");
  cells_.assign(static_cast<std::size_t>(columns) * static_cast<std::size_t>(rows), 0);
}

Tableau::Tableau(const std::vector<std::vector<int>>& rows, int alphabet) : g_(alphabet) {
  if (rows.empty() || rows.front().empty())
    throw Error(Errc::InvalidParams, "tableau must have at least one box");
  a_ = static_cast<int>(rows.front().size());
  b_ = static_cast<int>(rows.size());
  cells_.reserve(static_cast<std::size_t>(a_) * static_cast<std::size_t>(b_));
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != a_)
      throw Error(Errc::InvalidParams, "tableau rows must have equal length");
    cells_.insert(cells_.end(), row.begin(), row.end());
  }
}

std::vector<std::vector<int>> Tableau::row_vectors() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(b_));
  for (int y = 1; y <= b_; ++y)
    for (int x = 1; x <= a_; ++x) out[static_cast<std::size_t>(y - 1)].push_back(at(x, y));
  return out;
}

Tableau Tableau::with_alphabet(int g) const {
  Tableau t = *this;
  t.g_ = g;
  return t;
}

std::string Tableau::str() const {
  std::ostringstream os;
  for (int y = 1; y <= b_; ++y) {
    for (int x = 1; x <= a_; ++x) {
      if (x > 1) os << ' ';
      os << at(x, y);
    }
    os << '\n';
  }
  return os.str();
}

bool validate(const Tableau& t) {
  for (int y = 1; y <= t.rows(); ++y)
    for (int x = 1; x <= t.columns(); ++x) {
      const int v = t(x, y);
      if (v < 1 || v > t.alphabet()) return false;
      if (x < t.columns() && !(v < t(x + 1, y))) return false;
      if (y < t.rows() && !(v < t(x, y + 1))) return false;
    }
  return true;
}

bool is_k_uniform_displacement(const Tableau& t, int k) {
  std::map<int, std::int64_t> residue;
  for (int y = 1; y <= t.rows(); ++y)
    for (int x = 1; x <= t.columns(); ++x) {
      const auto res = mod_pos(x - y, k);
      auto [it, inserted] = residue.emplace(t(x, y), res);
      if (!inserted && it->second != res) return false;
    }
  return true;
}

std::set<int> symbols(const Tableau& t) {
  return std::set<int>(t.cells().begin(), t.cells().end());
}

std::size_t distinct_symbol_count(const Tableau& t) { return symbols(t).size(); }

Tableau transpose(const Tableau& t) {
  Tableau out(t.rows(), t.columns(), t.alphabet());
  for (int y = 1; y <= out.rows(); ++y)
    for (int x = 1; x <= out.columns(); ++x) out.at(x, y) = t(y, x);
  return out;
}

Tableau rotate(const Tableau& t) {
  Tableau out(t.columns(), t.rows(), t.alphabet());
  const int a = t.columns(), b = t.rows();
  for (int y = 1; y <= b; ++y)
    for (int x = 1; x <= a; ++x) out.at(x, y) = t.alphabet() + 1 - t(a + 1 - x, b + 1 - y);
  return out;
}

bool scrollar_alpha_admissible(int columns, int rows, int k, int alpha) {
  if (alpha < 1 || alpha > std::min(columns, k - 1)) return false;
  return alpha >= k - rows || alpha == columns;
}

bool is_scrollar(const Tableau& t, int k, int alpha) {
  const int a = t.columns(), b = t.rows();
  if (!scrollar_alpha_admissible(a, b, k, alpha))
    throw Error(Errc::InvalidAlpha, "alpha " + std::to_string(alpha) +
                                        " is not an admissible scrollar type on [" +
                                        std::to_string(a) + "]x[" + std::to_string(b) +
                                        "] with k=" + std::to_string(k));
  if (!validate(t)) return false;

  // (1) equal symbols exactly along translates by (alpha, alpha - k).
  const int area = static_cast<int>(t.area());
  for (int i = 0; i < area; ++i) {
    const int x1 = i % a + 1, y1 = i / a + 1;
    for (int j = i + 1; j < area; ++j) {
      const int x2 = j % a + 1, y2 = j / a + 1;
      const int dx = x2 - x1, dy = y2 - y1;
      const bool translate = dx % alpha == 0 && dy == (dx / alpha) * (alpha - k);
      if (translate != (t(x1, y1) == t(x2, y2))) return false;
    }
  }
  // (2)
  if (alpha == a)
    for (int y = std::max(1, k - a + 1); y <= b; ++y)
      if (!(t(1, y) > t(a, y + a - k))) return false;
  // (3)
  if (alpha == k - b)
    for (int x = std::max(1, k - b + 1); x <= a; ++x)
      if (!(t(x, 1) > t(x + b - k, b))) return false;
  return true;
}

std::vector<int> scrollar_types(const Tableau& t, int k) {
  std::vector<int> out;
  for (int alpha = 1; alpha <= std::min(t.columns(), k - 1); ++alpha)
    if (scrollar_alpha_admissible(t.columns(), t.rows(), k, alpha) && is_scrollar(t, k, alpha))
      out.push_back(alpha);
  return out;
}

bool has_vertical_steps(const Tableau& t, int k) {
  for (int y = 1; y < t.rows(); ++y)
    for (int x = 1; x <= t.columns(); ++x) {
      const int v = t(x, y);
      if (t(x, y + 1) == v + 1 && k <= v && v <= t.alphabet() - k) return true;
    }
  return false;
}

std::int64_t scrollar_symbol_count(int columns, int rows, int k, int alpha) {
  const std::int64_t a = columns, b = rows, al = alpha;
  return checked_add(checked_mul(al, b - a + al), checked_mul(a - al, k));
}

std::optional<Tableau> generate_scrollar(const BNParams& p, std::int64_t alpha) {
  p.validate();
  const auto alphas = valid_alphas(p);
  if (std::find(alphas.begin(), alphas.end(), alpha) == alphas.end())
    throw Error(Errc::InvalidAlpha,
                "alpha " + std::to_string(alpha) + " is not valid for " + p.str());
  const std::int64_t needed = magnitude(mu_alpha(p, alpha));
  if (p.g < needed) return std::nullopt;

  const int a = static_cast<int>(p.columns());
  const int b = static_cast<int>(p.rows());
  const int k = static_cast<int>(p.k);
  const int al = static_cast<int>(alpha);
  const int g = static_cast<int>(p.g);

  Tableau t(a, b, g);
  int next = 0;
  for (int y = 1; y <= b; ++y)
    for (int x = 1; x <= al; ++x) t.at(x, y) = ++next;

  // Later blocks exist only when b >= k - alpha (otherwise alpha == a).
  const int tail = k - al;
  for (int start = al + 1; start <= a; start += al) {
    const int stop = std::min(start + al - 1, a);
    for (int y = b - tail + 1; y <= b; ++y)
      for (int x = start; x <= stop; ++x) t.at(x, y) = ++next;
    for (int y = 1; y <= b - tail; ++y)
      for (int x = start; x <= stop; ++x) t.at(x, y) = t(x - al, y + tail);
  }
  if (next != needed)
    throw Error(Errc::Internal, "generate_scrollar: fundamental region has " +
                                    std::to_string(next) + " boxes, expected " +
                                    std::to_string(needed));
  const int shift = g - next;
  for (int y = 1; y <= b; ++y)
    for (int x = 1; x <= a; ++x) t.at(x, y) += shift;
  return t;
}

}  // namespace kgonal
