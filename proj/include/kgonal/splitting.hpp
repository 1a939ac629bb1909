#pragma once

// Splitting types of rank-k bundles on P^1 and the Brill-Noether numerology
// attached to them.
//
// A splitting type is a nondecreasing integer vector (a partition that may
// have negative parts). Types of equal length and equal sum are compared by
// the dominance order on prefix sums.

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace kgonal {

class SplittingType {
 public:
  SplittingType() = default;
  // Entries are sorted on construction. Requires at least two entries.
  explicit SplittingType(std::vector<std::int64_t> entries);
  SplittingType(std::initializer_list<std::int64_t> entries);

  std::span<const std::int64_t> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }
  std::int64_t sum() const;

  // Number of entries >= 0.
  std::size_t nonnegative_count() const;

  std::string str() const;

  friend bool operator==(const SplittingType&, const SplittingType&) = default;
  friend auto operator<=>(const SplittingType&, const SplittingType&) = default;

 private:
  std::vector<std::int64_t> entries_;
};

// A Brill-Noether problem instance: genus g, rank r, degree d, gonality k.
struct BNParams {
  std::int64_t g = 0;
  std::int64_t r = 0;
  std::int64_t d = 0;
  std::int64_t k = 0;

  // Throws Errc::InvalidParams unless g >= 1, r >= 0, d >= 1, k >= 2 and
  // r > d - g.
  void validate() const;
  bool valid() const noexcept;

  // Tableau grid [r+1] x [g-d+r].
  std::int64_t columns() const { return r + 1; }
  std::int64_t rows() const { return g - d + r; }

  std::string str() const;

  friend bool operator==(const BNParams&, const BNParams&) = default;
  friend auto operator<=>(const BNParams&, const BNParams&) = default;
};

enum class Dominance { Less, Equal, Greater, Incomparable };

const char* dominance_name(Dominance d) noexcept;

// Dominance order on types of equal length and equal sum. Throws
// LengthMismatch / SumMismatch otherwise.
Dominance compare_dominance(const SplittingType& mu, const SplittingType& lam);

// Sum over i < j of max(0, mu_j - mu_i - 1).
std::int64_t magnitude(const SplittingType& mu);

// h^0 of the twist by O(m): sum of max(0, mu_i + m + 1).
std::int64_t h0_twist(const SplittingType& mu, std::int64_t m);

// g + k - 1 + sum(mu).
std::int64_t degree_of(const SplittingType& mu, std::int64_t g);

std::int64_t rho(std::int64_t g, std::int64_t r, std::int64_t d);

// rho(g, alpha-1, d) - (r+1-alpha)k, the dimension attached to alpha.
std::int64_t alpha_dimension(const BNParams& p, std::int64_t alpha);

// Max of alpha_dimension over valid_alphas(p).
std::int64_t rho_k(const BNParams& p);

// The alpha in [1, min(r+1, k-1)] with alpha >= k - (g-d+r) or alpha = r+1,
// ascending.
std::vector<std::int64_t> valid_alphas(const BNParams& p);

// The most balanced type with exactly alpha nonnegative entries. Defined for
// every 1 <= alpha <= min(r+1, k-1); throws InvalidAlpha otherwise.
SplittingType mu_alpha(const BNParams& p, std::int64_t alpha);

// g - |mu_alpha|; negative means the stratum is expected to be empty.
std::int64_t expected_dim(const BNParams& p, std::int64_t alpha);

// Repeatedly moves one unit from the largest jump to the smallest one until
// h0_twist(., 0) == r+1. The result dominates mu. Throws AlreadyBelow when
// h0_twist(mu, 0) < r+1, and PreconditionViolated if a move would not lower
// h0 by exactly one (only possible when mu_1 >= -1).
SplittingType balance_reduce(const SplittingType& mu, std::int64_t r);

// Types of length k and sum d+1-g-k with h0_twist(., 0) == r+1, in
// lexicographic order. This set is finite: nonnegative entries lie in [0, r]
// and the negative entries have fixed total.
std::vector<SplittingType> balanced_candidates(const BNParams& p);

// Brute-force maximality among types of sum d+1-g-k and h0 >= r+1. Throws
// PreconditionViolated if mu itself is not such a type.
bool is_maximal(const SplittingType& mu, const BNParams& p);

// Closed form: mu_alpha for each valid alpha, ordered by alpha.
std::vector<SplittingType> maximal_splitting_types(const BNParams& p);

}  // namespace kgonal
