#include "kgonal/splitting.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "kgonal/error.hpp"

namespace kgonal {

SplittingType::SplittingType(std::vector<std::int64_t> entries)
    : entries_(std::move(entries)) {
  if (entries_.size() < 2)
    throw Error(Errc::InvalidParams, "splitting type needs at least two entries");
  std::sort(entries_.begin(), entries_.end());
}

SplittingType::SplittingType(std::initializer_list<std::int64_t> entries)
    : SplittingType(std::vector<std::int64_t>(entries)) {}

std::int64_t SplittingType::sum() const {
  std::int64_t s = 0;
  for (auto e : entries_) s = checked_add(s, e);
  return s;
}

std::size_t SplittingType::nonnegative_count() const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [](auto e) { return e >= 0; }));
}

std::string SplittingType::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ',';
    os << entries_[i];
  }
  os << ')';
  return os.str();
}

void BNParams::validate() const {
  if (g < 1) throw Error(Errc::InvalidParams, "genus must be positive");
  if (r < 0) throw Error(Errc::InvalidParams, "rank must be nonnegative");
  if (d < 1) throw Error(Errc::InvalidParams, "degree must be positive");
  if (k < 2) throw Error(Errc::InvalidParams, "gonality must be at least 2");
  if (!(r > d - g))
    throw Error(Errc::InvalidParams, "need r > d - g, got " + str());
}

bool BNParams::valid() const noexcept {
  return g >= 1 && r >= 0 && d >= 1 && k >= 2 && r > d - g;
}

std::string BNParams::str() const {
  std::ostringstream os;
  os << "(g=" << g << ",r=" << r << ",d=" << d << ",k=" << k << ')';
  return os.str();
}

const char* dominance_name(Dominance d) noexcept {
  switch (d) {
    case Dominance::Less: return "LESS";
    case Dominance::Equal: return "EQUAL";
    case Dominance::Greater: return "GREATER";
    case Dominance::Incomparable: return "INCOMPARABLE";
  }
  return "?";
}

Dominance compare_dominance(const SplittingType& mu, const SplittingType& lam) {
  if (mu.size() != lam.size())
    throw Error(Errc::LengthMismatch, "dominance needs equal lengths: " +
                                          mu.str() + " vs " + lam.str());
  if (mu.sum() != lam.sum())
    throw Error(Errc::SumMismatch, "dominance needs equal sums: " + mu.str() +
                                       " vs " + lam.str());
  bool below = false, above = false;
  std::int64_t pm = 0, pl = 0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    pm += mu[i];
    pl += lam[i];
    if (pm < pl) below = true;
    if (pm > pl) above = true;
  }
  if (below && above) return Dominance::Incomparable;
  if (below) return Dominance::Less;
  if (above) return Dominance::Greater;
  return Dominance::Equal;
}

std::int64_t magnitude(const SplittingType& mu) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < mu.size(); ++i)
    for (std::size_t j = i + 1; j < mu.size(); ++j)
      total = checked_add(total, std::max<std::int64_t>(0, mu[j] - mu[i] - 1));
  return total;
}

std::int64_t h0_twist(const SplittingType& mu, std::int64_t m) {
  std::int64_t total = 0;
  for (auto e : mu.entries())
    total = checked_add(total, std::max<std::int64_t>(0, checked_add(e, m + 1)));
  return total;
}

std::int64_t degree_of(const SplittingType& mu, std::int64_t g) {
  auto k = static_cast<std::int64_t>(mu.size());
  return checked_add(checked_add(g, k - 1), mu.sum());
}

std::int64_t rho(std::int64_t g, std::int64_t r, std::int64_t d) {
  return checked_sub(g, checked_mul(r + 1, checked_add(checked_sub(g, d), r)));
}

std::int64_t alpha_dimension(const BNParams& p, std::int64_t alpha) {
  return checked_sub(rho(p.g, alpha - 1, p.d), checked_mul(p.r + 1 - alpha, p.k));
}

std::vector<std::int64_t> valid_alphas(const BNParams& p) {
  p.validate();
  const std::int64_t top = std::min(p.r + 1, p.k - 1);
  const std::int64_t threshold = p.k - p.rows();
  std::vector<std::int64_t> out;
  for (std::int64_t a = 1; a <= top; ++a)
    if (a >= threshold || a == p.r + 1) out.push_back(a);
  return out;
}

std::int64_t rho_k(const BNParams& p) {
  auto alphas = valid_alphas(p);
  std::int64_t best = alpha_dimension(p, alphas.front());
  for (auto a : alphas) best = std::max(best, alpha_dimension(p, a));
  return best;
}

SplittingType mu_alpha(const BNParams& p, std::int64_t alpha) {
  p.validate();
  if (alpha < 1 || alpha > std::min(p.r + 1, p.k - 1))
    throw Error(Errc::InvalidAlpha, "alpha " + std::to_string(alpha) +
                                        " outside [1, min(r+1,k-1)] for " + p.str());
  const std::int64_t q = (p.r + 1) / alpha;
  const std::int64_t beta = (p.r + 1) % alpha;
  const std::int64_t q2 = p.rows() / (p.k - alpha);
  const std::int64_t beta2 = p.rows() % (p.k - alpha);

  std::vector<std::int64_t> e;
  e.reserve(static_cast<std::size_t>(p.k));
  for (std::int64_t i = 1; i <= p.k; ++i) {
    if (i <= beta2)
      e.push_back(-q2 - 2);
    else if (i <= p.k - alpha)
      e.push_back(-q2 - 1);
    else if (i <= p.k - beta)
      e.push_back(q - 1);
    else
      e.push_back(q);
  }
  return SplittingType(std::move(e));
}

std::int64_t expected_dim(const BNParams& p, std::int64_t alpha) {
  return checked_sub(p.g, magnitude(mu_alpha(p, alpha)));
}

SplittingType balance_reduce(const SplittingType& mu, std::int64_t r) {
  std::int64_t h = h0_twist(mu, 0);
  if (h < r + 1)
    throw Error(Errc::AlreadyBelow,
                "h0 of " + mu.str() + " is already below r+1 = " + std::to_string(r + 1));
  std::vector<std::int64_t> v(mu.entries().begin(), mu.entries().end());
  while (h > r + 1) {
    if (v.front() > -2)
      throw Error(Errc::PreconditionViolated,
                  "balance_reduce needs a smallest entry <= -2 while h0 > r+1");
    // 1-based indices of the first and last strict increases.
    std::size_t j = 0, jp = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
      if (v[i] > v[i - 1]) {
        if (j == 0) j = i + 1;
        jp = i + 1;
      }
    }
    if (j == 0 || !(j < jp || v[j - 2] < v[j - 1] - 1))
      throw Error(Errc::Internal, "balance_reduce: no admissible move");
    v[j - 2] += 1;
    v[jp - 1] -= 1;
    SplittingType next(v);
    const std::int64_t hn = h0_twist(next, 0);
    if (hn != h - 1 || !std::is_sorted(v.begin(), v.end()))
      throw Error(Errc::Internal, "balance_reduce: move did not lower h0 by one");
    h = hn;
  }
  return SplittingType(std::move(v));
}

namespace {

// Nondecreasing sequences of length n with entries in [lo, hi] summing to s.
void nondecreasing_sequences(std::int64_t n, std::int64_t lo, std::int64_t hi,
                             std::int64_t s,
                             const std::function<void(const std::vector<std::int64_t>&)>& emit) {
  std::vector<std::int64_t> cur;
  cur.reserve(static_cast<std::size_t>(n));
  std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t floor_v,
                                                            std::int64_t remaining) {
    const auto left = n - static_cast<std::int64_t>(cur.size());
    if (left == 0) {
      if (remaining == 0) emit(cur);
      return;
    }
    // Every later entry is >= v and <= hi.
    const std::int64_t from = std::max(floor_v, remaining - hi * (left - 1));
    for (std::int64_t v = from; v <= hi && v * left <= remaining; ++v) {
      cur.push_back(v);
      rec(v, remaining - v);
      cur.pop_back();
    }
  };
  rec(lo, s);
}

}  // namespace

std::vector<SplittingType> balanced_candidates(const BNParams& p) {
  p.validate();
  const std::int64_t total = p.d + 1 - p.g - p.k;
  std::vector<SplittingType> out;
  for (std::int64_t nn = 1; nn <= std::min(p.k, p.r + 1); ++nn) {
    const std::int64_t neg_count = p.k - nn;
    const std::int64_t nonneg_sum = p.r + 1 - nn;
    const std::int64_t neg_sum = total - nonneg_sum;
    if (neg_count == 0 && neg_sum != 0) continue;
    if (neg_sum > -neg_count) continue;
    std::vector<std::vector<std::int64_t>> tops, bottoms;
    nondecreasing_sequences(nn, 0, nonneg_sum, nonneg_sum,
                            [&](const auto& s) { tops.push_back(s); });
    if (neg_count == 0) {
      bottoms.emplace_back();
    } else {
      const std::int64_t lo = neg_sum + (neg_count - 1);
      nondecreasing_sequences(neg_count, lo, -1, neg_sum,
                              [&](const auto& s) { bottoms.push_back(s); });
    }
    for (const auto& b : bottoms)
      for (const auto& t : tops) {
        std::vector<std::int64_t> e(b);
        e.insert(e.end(), t.begin(), t.end());
        out.emplace_back(std::move(e));
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_maximal(const SplittingType& mu, const BNParams& p) {
  p.validate();
  if (static_cast<std::int64_t>(mu.size()) != p.k || mu.sum() != p.d + 1 - p.g - p.k ||
      h0_twist(mu, 0) < p.r + 1)
    throw Error(Errc::PreconditionViolated,
                mu.str() + " is not a degree-d, rank >= r type for " + p.str());
  for (const auto& lam : balanced_candidates(p))
    if (compare_dominance(mu, lam) == Dominance::Less) return false;
  return true;
}

std::vector<SplittingType> maximal_splitting_types(const BNParams& p) {
  std::vector<SplittingType> out;
  for (auto a : valid_alphas(p)) out.push_back(mu_alpha(p, a));
  return out;
}

}  // namespace kgonal
