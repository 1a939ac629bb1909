#include "kgonal/torus.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "kgonal/error.hpp"

namespace kgonal {

std::vector<int> torsion_profile(int g, int k) {
  if (g < 1 || k < 2) throw Error(Errc::InvalidParams, "torsion profile needs g >= 1, k >= 2");
  std::vector<int> taus(static_cast<std::size_t>(g));
  for (int i = 1; i <= g; ++i) taus[static_cast<std::size_t>(i - 1)] = (i < k || i > g - k + 1) ? 0 : k;
  return taus;
}

TorusClass::TorusClass(const BNParams& ambient)
    : ambient_(ambient), residues_(static_cast<std::size_t>(ambient.g), -1) {}

TorusClass::TorusClass(const BNParams& ambient, const std::map<int, int>& constraints)
    : TorusClass(ambient) {
  for (auto [j, res] : constraints) {
    if (j < 1 || j > ambient.g)
      throw Error(Errc::InvalidParams, "symbol " + std::to_string(j) + " outside [1, g]");
    residues_[static_cast<std::size_t>(j - 1)] = static_cast<int>(mod_pos(res, ambient.k));
  }
  count_ = constraints.size();
}

std::map<int, int> TorusClass::constraints() const {
  std::map<int, int> out;
  for (std::size_t i = 0; i < residues_.size(); ++i)
    if (residues_[i] >= 0) out.emplace(static_cast<int>(i + 1), residues_[i]);
  return out;
}

std::string TorusClass::str() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto [j, res] : constraints()) {
    if (!first) os << ' ';
    first = false;
    os << j << ':' << res;
  }
  os << '}';
  return os.str();
}

bool operator<(const TorusClass& u, const TorusClass& v) {
  if (u.ambient_ != v.ambient_) return u.ambient_ < v.ambient_;
  const auto cu = u.constraints(), cv = v.constraints();
  return std::lexicographical_compare(cu.begin(), cu.end(), cv.begin(), cv.end());
}

TorusClass torus_of(const Tableau& t, const BNParams& params) {
  const int k = static_cast<int>(params.k);
  if (!is_k_uniform_displacement(t, k))
    throw Error(Errc::NotKUniform, "tableau is not " + std::to_string(k) + "-uniform");
  std::map<int, int> c;
  for (int y = 1; y <= t.rows(); ++y)
    for (int x = 1; x <= t.columns(); ++x)
      c.emplace(t(x, y), static_cast<int>(mod_pos(y - x, k)));
  return TorusClass(params, c);
}

bool contains(const TorusClass& inner, const TorusClass& outer) {
  if (inner.ambient() != outer.ambient())
    throw Error(Errc::PreconditionViolated, "tori live in different ambients");
  for (int j = 1; j <= outer.genus(); ++j)
    if (outer.constrains(j) && inner.residue(j) != outer.residue(j)) return false;
  return true;
}

bool torus_equal(const TorusClass& u, const TorusClass& v) { return u == v; }

std::int64_t dimension(const TorusClass& u) {
  return u.ambient().g - static_cast<std::int64_t>(u.constraint_count());
}

bool tableau_contains(const Tableau& inner, const Tableau& outer, int k) {
  for (int y2 = 1; y2 <= outer.rows(); ++y2)
    for (int x2 = 1; x2 <= outer.columns(); ++x2) {
      bool found = false;
      for (int y = 1; y <= inner.rows(); ++y)
        for (int x = 1; x <= inner.columns(); ++x) {
          if (inner(x, y) != outer(x2, y2)) continue;
          found = true;
          if (mod_pos(x - y, k) != mod_pos(x2 - y2, k)) return false;
        }
      if (!found) return false;
    }
  return true;
}

namespace {

Rational reduce_mod(const Rational& q, std::int64_t k) {
  // q - k * floor(q / k)
  const std::int64_t den = checked_mul(q.denominator(), k);
  const std::int64_t fl = floor_div(q.numerator(), den);
  return q - Rational(checked_mul(fl, k));
}

}  // namespace

DivisorCoords normalized(const DivisorCoords& D, int k) {
  const auto taus = torsion_profile(static_cast<int>(D.xi.size()), k);
  DivisorCoords out = D;
  for (std::size_t i = 0; i < out.xi.size(); ++i)
    if (taus[i] == k) out.xi[i] = reduce_mod(out.xi[i], k);
  return out;
}

bool membership(const DivisorCoords& D, const TorusClass& u) {
  if (D.degree != u.ambient().d)
    throw Error(Errc::PreconditionViolated, "divisor degree differs from the ambient degree");
  if (static_cast<std::int64_t>(D.xi.size()) != u.ambient().g)
    throw Error(Errc::PreconditionViolated, "divisor needs one coordinate per loop");
  const std::int64_t k = u.ambient().k;
  for (int j = 1; j <= u.genus(); ++j) {
    if (!u.constrains(j)) continue;
    const Rational diff = (D.xi[static_cast<std::size_t>(j - 1)] - Rational(u.residue(j))) / Rational(k);
    if (diff.denominator() != 1) return false;
  }
  return true;
}

DivisorCoords sample_general(const TorusClass& u, std::uint64_t seed) {
  const std::int64_t k = u.ambient().k;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> den_dist(2, 97);
  DivisorCoords D;
  D.degree = u.ambient().d;
  D.xi.reserve(static_cast<std::size_t>(u.genus()));
  for (int j = 1; j <= u.genus(); ++j) {
    if (u.constrains(j)) {
      D.xi.emplace_back(u.residue(j));
      continue;
    }
    std::int64_t q;
    do q = den_dist(rng);
    while (std::gcd(q, k) != 1);
    std::uniform_int_distribution<std::int64_t> num_dist(-4 * k * q, 4 * k * q);
    std::int64_t p;
    do p = num_dist(rng);
    while (std::gcd(p, q) != 1);
    D.xi.emplace_back(p, q);
  }
  return normalized(D, static_cast<int>(k));
}

std::string rational_str(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Rational parse_rational(const std::string& s) {
  try {
    std::size_t pos = 0;
    const std::int64_t num = std::stoll(s, &pos);
    if (pos == s.size()) return Rational(num);
    if (s[pos] != '/') throw Error(Errc::Parse, "bad rational '" + s + "'");
    std::size_t pos2 = 0;
    const std::string rest = s.substr(pos + 1);
    const std::int64_t den = std::stoll(rest, &pos2);
    if (pos2 != rest.size() || den == 0) throw Error(Errc::Parse, "bad rational '" + s + "'");
    return Rational(num, den);
  } catch (const std::logic_error&) {
    throw Error(Errc::Parse, "bad rational '" + s + "'");
  }
}

}  // namespace kgonal
