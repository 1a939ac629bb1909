#pragma once

// Coordinate subtori of Pic^d of a k-gonal chain of loops.
//
// A divisor class is recorded by its break-divisor coordinates xi_1..xi_g. A
// k-uniform displacement tableau t cuts out the subtorus where
// xi_{t(x,y)} = y - x (mod k); such a torus is stored as the map from
// constrained symbols to residues in [0, k).

#include <boost/rational.hpp>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kgonal/splitting.hpp"
#include "kgonal/tableau.hpp"

namespace kgonal {

using Rational = boost::rational<std::int64_t>;

// tau_i = 0 for i < k or i > g-k+1, and k otherwise.
std::vector<int> torsion_profile(int g, int k);

class TorusClass {
 public:
  TorusClass() = default;
  // The unconstrained torus (all of Pic^d).
  explicit TorusClass(const BNParams& ambient);
  // Throws InvalidParams for symbols outside [1, g].
  TorusClass(const BNParams& ambient, const std::map<int, int>& constraints);

  const BNParams& ambient() const { return ambient_; }
  int genus() const { return static_cast<int>(ambient_.g); }
  int gonality() const { return static_cast<int>(ambient_.k); }

  // Residue for symbol j, or -1 when j is unconstrained.
  int residue(int j) const { return residues_[static_cast<std::size_t>(j - 1)]; }
  bool constrains(int j) const { return residue(j) >= 0; }
  std::size_t constraint_count() const { return count_; }
  std::map<int, int> constraints() const;

  std::string str() const;

  friend bool operator==(const TorusClass& u, const TorusClass& v) {
    return u.ambient_ == v.ambient_ && u.residues_ == v.residues_;
  }
  // Canonical order: lexicographic on the sorted (symbol, residue) pairs.
  friend bool operator<(const TorusClass& u, const TorusClass& v);

 private:
  BNParams ambient_{};
  std::vector<int> residues_;
  std::size_t count_ = 0;
};

// Requires t to be k-uniform; throws NotKUniform otherwise. The grid shape is
// not checked against params, so transposes and sub-tableaux are accepted.
TorusClass torus_of(const Tableau& t, const BNParams& params);

// inner is a subset of outer: every constraint of outer appears in inner.
bool contains(const TorusClass& inner, const TorusClass& outer);
bool torus_equal(const TorusClass& u, const TorusClass& v);
std::int64_t dimension(const TorusClass& u);

// Containment read directly off two tableaux: every symbol of outer occurs in
// inner, and shared symbols sit on boxes with equal (x - y) mod k.
bool tableau_contains(const Tableau& inner, const Tableau& outer, int k);

struct DivisorCoords {
  std::vector<Rational> xi;  // xi[j-1] is the coordinate on loop j
  std::int64_t degree = 0;

  friend bool operator==(const DivisorCoords&, const DivisorCoords&) = default;
};

// Reduces coordinates on torsion-k loops into [0, k).
DivisorCoords normalized(const DivisorCoords& D, int k);

// Every constrained xi_j is congruent to its residue mod k. Throws
// PreconditionViolated on degree or length mismatch.
bool membership(const DivisorCoords& D, const TorusClass& u);

// A point of u that lies in no torus failing to contain u: constrained
// coordinates get their residue, the others non-integral rationals with
// denominators coprime to k. Deterministic in seed.
DivisorCoords sample_general(const TorusClass& u, std::uint64_t seed);

std::string rational_str(const Rational& q);
// Accepts "p", "-p" and "p/q".
Rational parse_rational(const std::string& s);

}  // namespace kgonal
