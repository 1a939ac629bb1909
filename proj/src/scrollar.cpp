#include "kgonal/scrollar.hpp"

#include <algorithm>

#include "kgonal/error.hpp"

namespace kgonal {

int stat(const Tableau& t, int k, int x, int y) {
  if (!t.contains(x, y)) throw Error(Errc::Undefined, "box outside the grid");
  if (x + y < k)
    throw Error(Errc::Undefined, "statistic undefined at (" + std::to_string(x) + "," +
                                     std::to_string(y) + "): x + y < k");
  // Merge the row arm (leftwards) and column arm (upwards) from the corner,
  // always taking the larger symbol.
  int width = 1, height = 1;
  while (width + height - 1 < k - 1) {
    const bool has_row = x - width >= 1;
    const bool has_col = y - height >= 1;
    if (has_row && has_col) {
      const int rv = t(x - width, y), cv = t(x, y - height);
      if (rv == cv)
        throw Error(Errc::Internal, "hook statistic is ambiguous at (" + std::to_string(x) +
                                        "," + std::to_string(y) + ")");
      if (rv > cv)
        ++width;
      else
        ++height;
    } else if (has_row) {
      ++width;
    } else if (has_col) {
      ++height;
    } else {
      throw Error(Errc::Internal, "hook ran out of boxes");
    }
  }
  return width;
}

StatGrid stat_grid(const Tableau& t, int k) {
  StatGrid grid(t.columns(), t.rows());
  for (int y = 1; y <= t.rows(); ++y)
    for (int x = 1; x <= t.columns(); ++x)
      if (x + y >= k) grid.set(x, y, stat(t, k, x, y));
  return grid;
}

std::string AdmissiblePath::steps() const {
  std::string s;
  for (std::size_t i = 1; i < boxes.size(); ++i) s += boxes[i].x > boxes[i - 1].x ? 'R' : 'D';
  return s;
}

std::vector<AdmissiblePath> admissible_paths(const Tableau& t, int k) {
  const int a = t.columns(), b = t.rows();
  if (a + b < k) throw Error(Errc::GridTooSmall, "admissible paths need a + b >= k");
  if (!is_k_uniform_displacement(t, k))
    throw Error(Errc::NotKUniform, "tableau is not " + std::to_string(k) + "-uniform");
  const StatGrid s = stat_grid(t, k);

  std::vector<AdmissiblePath> out;
  AdmissiblePath cur;
  auto walk = [&](auto&& self, int x, int y) -> void {
    if (x == a && y == b) {
      out.push_back(cur);
      return;
    }
    if (y < b && s.at(x, y + 1) >= cur.type) {
      cur.boxes.push_back({x, y + 1});
      self(self, x, y + 1);
      cur.boxes.pop_back();
    }
    if (x < a && s.at(x + 1, y) <= cur.type) {
      cur.boxes.push_back({x + 1, y});
      self(self, x + 1, y);
      cur.boxes.pop_back();
    }
  };
  for (int alpha = 1; alpha <= k - 1; ++alpha) {
    if (alpha > a || k - alpha > b) continue;
    cur.type = alpha;
    cur.boxes = {{alpha, k - alpha}};
    walk(walk, alpha, k - alpha);
  }
  std::sort(out.begin(), out.end(),
            [](const AdmissiblePath& p, const AdmissiblePath& q) { return p.steps() < q.steps(); });
  return out;
}

Scrollarization scrollarize_with_path(const Tableau& t, int k) {
  if (!validate(t) || !is_k_uniform_displacement(t, k))
    throw Error(Errc::NotKUniform,
                "scrollarize needs a valid " + std::to_string(k) + "-uniform displacement tableau");
  const int a = t.columns(), b = t.rows();
  if (a + b <= k) return {t, a, std::nullopt};

  const auto paths = admissible_paths(t, k);
  if (paths.empty()) throw Error(Errc::Internal, "no admissible path exists");
  for (const auto& p : paths)
    if (p.type != paths.front().type)
      throw Error(Errc::Internal, "admissible paths of different types");
  const AdmissiblePath& path = paths.back();
  const int alpha = path.type;
  const int tail = k - alpha;

  Tableau cur(a, b, t.alphabet());
  for (int y = 1; y <= tail; ++y)
    for (int x = 1; x <= alpha; ++x) cur.at(x, y) = t(x, y);

  int cx = alpha, cy = tail;
  for (std::size_t i = 1; i < path.boxes.size(); ++i) {
    if (path.boxes[i].x > cx) {
      // New column cx+1, copied from alpha columns left and k-alpha rows down.
      ++cx;
      for (int y = 1; y <= cy; ++y)
        cur.at(cx, y) = y <= cy - tail ? cur(cx - alpha, y + tail) : t(cx, y);
    } else {
      // New row cy+1, copied from alpha columns right and k-alpha rows up.
      ++cy;
      for (int x = 1; x <= cx; ++x)
        cur.at(x, cy) = x <= cx - alpha ? cur(x + alpha, cy - tail) : t(x, cy);
    }
  }
  return {std::move(cur), alpha, path};
}

Tableau scrollarize(const Tableau& t, int k) { return scrollarize_with_path(t, k).result; }

}  // namespace kgonal
