#include "kgonal/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <set>
#include <thread>

#include "kgonal/error.hpp"
#include "kgonal/scrollar.hpp"

namespace kgonal {

SweepManifest default_manifest() {
  SweepManifest m;
  for (std::int64_t g = 1; g <= 8; ++g)
    for (std::int64_t r = 0; r <= 5; ++r)
      for (std::int64_t rows = 1; (r + 1) * rows <= 6; ++rows) {
        const std::int64_t d = g + r - rows;
        for (std::int64_t k : {2, 3, 4}) {
          BNParams p{g, r, d, k};
          if (p.valid()) m.instances.push_back(p);
        }
      }
  std::sort(m.instances.begin(), m.instances.end());
  return m;
}

namespace {

class Enumerator {
 public:
  Enumerator(const BNParams& p, const std::function<void(const Tableau&)>& visit,
             const Limits& limits)
      : a_(static_cast<int>(p.columns())),
        b_(static_cast<int>(p.rows())),
        g_(static_cast<int>(p.g)),
        k_(static_cast<int>(p.k)),
        t_(a_, b_, g_),
        residue_(static_cast<std::size_t>(g_ + 1), -1),
        uses_(static_cast<std::size_t>(g_ + 1), 0),
        visit_(visit),
        limits_(limits),
        start_(std::chrono::steady_clock::now()) {}

  void run() {
    if (limits_.max_tableaux == 0 || limits_.max_seconds <= 0)
      throw Error(Errc::LimitExceeded, "limits are zero");
    place(0);
  }

 private:
  void place(int cell) {
    if ((++nodes_ & 0xfff) == 0) check_time();
    if (cell == a_ * b_) {
      if (++count_ > limits_.max_tableaux)
        throw Error(Errc::LimitExceeded,
                    "more than " + std::to_string(limits_.max_tableaux) + " tableaux");
      visit_(t_);
      return;
    }
    const int x = cell % a_ + 1, y = cell / a_ + 1;
    int lo = 1;
    if (x > 1) lo = std::max(lo, t_(x - 1, y) + 1);
    if (y > 1) lo = std::max(lo, t_(x, y - 1) + 1);
    // Boxes to the south-east need strictly larger symbols.
    const int hi = g_ - (a_ - x) - (b_ - y);
    const int res = static_cast<int>(mod_pos(x - y, k_));
    for (int s = lo; s <= hi; ++s) {
      auto& r = residue_[static_cast<std::size_t>(s)];
      if (r >= 0 && r != res) continue;
      const bool fresh = r < 0;
      r = res;
      ++uses_[static_cast<std::size_t>(s)];
      t_.at(x, y) = s;
      place(cell + 1);
      if (--uses_[static_cast<std::size_t>(s)] == 0 && fresh) r = -1;
    }
    t_.at(x, y) = 0;
  }

  void check_time() const {
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
    if (elapsed.count() > limits_.max_seconds)
      throw Error(Errc::LimitExceeded, "time budget of " + std::to_string(limits_.max_seconds) +
                                           " s exhausted");
  }

  int a_, b_, g_, k_;
  Tableau t_;
  std::vector<int> residue_;
  std::vector<int> uses_;
  const std::function<void(const Tableau&)>& visit_;
  Limits limits_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t count_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

void enumerate_tableaux(const BNParams& p, const std::function<void(const Tableau&)>& visit,
                        const Limits& limits) {
  p.validate();
  Enumerator(p, visit, limits).run();
}

std::vector<Tableau> all_tableaux(const BNParams& p, const Limits& limits) {
  std::vector<Tableau> out;
  enumerate_tableaux(p, [&](const Tableau& t) { out.push_back(t); }, limits);
  return out;
}

TorusPoset build_poset(const BNParams& p, const std::vector<Tableau>& tableaux) {
  const int k = static_cast<int>(p.k);
  std::map<TorusClass, std::size_t> first;
  std::vector<std::pair<TorusClass, std::size_t>> seen;
  std::map<TorusClass, std::set<int>> types;
  for (std::size_t i = 0; i < tableaux.size(); ++i) {
    auto u = torus_of(tableaux[i], p);
    first.emplace(u, i);
    auto& ts = types[u];
    for (int a : scrollar_types(tableaux[i], k)) ts.insert(a);
  }

  TorusPoset poset;
  poset.params = p;
  poset.tableau_count = tableaux.size();
  for (const auto& [u, idx] : first) {
    poset.tori.push_back(u);
    poset.representative.push_back(tableaux[idx]);
    const auto& ts = types[u];
    poset.scrollar_types.emplace_back(ts.begin(), ts.end());
  }
  const std::size_t n = poset.tori.size();
  poset.maximal.assign(n, true);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n && poset.maximal[i]; ++j)
      if (i != j && contains(poset.tori[i], poset.tori[j])) poset.maximal[i] = false;
  return poset;
}

std::vector<std::vector<std::size_t>> hasse_covers(const TorusPoset& poset) {
  const std::size_t n = poset.tori.size();
  std::vector<std::vector<bool>> above(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      above[i][j] = i != j && contains(poset.tori[i], poset.tori[j]);
  std::vector<std::vector<std::size_t>> covers(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!above[i][j]) continue;
      bool between = false;
      for (std::size_t m = 0; m < n && !between; ++m) between = above[i][m] && above[m][j];
      if (!between) covers[i].push_back(j);
    }
  return covers;
}

std::vector<TorusClass> all_tori(const BNParams& p, const Limits& limits) {
  std::set<TorusClass> tori;
  enumerate_tableaux(p, [&](const Tableau& t) { tori.insert(torus_of(t, p)); }, limits);
  return {tori.begin(), tori.end()};
}

std::vector<TorusClass> maximal_tori(const std::vector<TorusClass>& tori) {
  std::vector<TorusClass> out;
  for (std::size_t i = 0; i < tori.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < tori.size() && maximal; ++j)
      if (!(tori[i] == tori[j]) && contains(tori[i], tori[j])) maximal = false;
    if (maximal) out.push_back(tori[i]);
  }
  return out;
}

std::vector<TorusClass> maximal_tori(const BNParams& p, const Limits& limits) {
  return maximal_tori(all_tori(p, limits));
}

const char* status_name(Status s) noexcept {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skip: return "SKIP";
    case Status::LimitExceeded: return "LIMIT";
  }
  return "?";
}

namespace {

CheckResult fail(CheckResult c, std::string what, std::vector<Tableau> ts = {},
                 std::vector<SplittingType> types = {}) {
  c.status = Status::Fail;
  c.detail = what;
  c.counterexample = Counterexample{std::move(what), std::move(ts), std::move(types)};
  return c;
}

// Fringe boxes kept by scrollarization: the last `alpha` boxes of the bottom
// row and the last `k - alpha` boxes of the right column.
bool fringe_preserved(const Tableau& t, const Tableau& out, int k, int alpha) {
  const int a = t.columns(), b = t.rows();
  for (int i = 0; i < alpha && a - i >= 1; ++i)
    if (out(a - i, b) != t(a - i, b)) return false;
  for (int j = 0; j < k - alpha && b - j >= 1; ++j)
    if (out(a, b - j) != t(a, b - j)) return false;
  return true;
}

}  // namespace

CheckResult verify_max_scrollar(const TorusPoset& poset, const std::vector<Tableau>& tableaux) {
  CheckResult c{"maximal_tori_are_scrollar", Status::Pass, {}, std::nullopt};
  const BNParams& p = poset.params;
  const int k = static_cast<int>(p.k);

  for (std::size_t i = 0; i < poset.tori.size(); ++i) {
    if (poset.maximal[i] != poset.scrollar(i))
      return fail(c,
                  std::string(poset.maximal[i] ? "maximal torus without a scrollar tableau: "
                                               : "scrollar torus that is not maximal: ") +
                      poset.tori[i].str(),
                  {poset.representative[i]});
  }
  for (const auto& t : tableaux) {
    Scrollarization s;
    try {
      s = scrollarize_with_path(t, k);
    } catch (const Error& e) {
      return fail(c, std::string("scrollarize threw: ") + e.what(), {t});
    }
    const Tableau& out = s.result;
    if (!validate(out) || !is_k_uniform_displacement(out, k))
      return fail(c, "scrollarize produced an invalid tableau", {t, out});
    if (!scrollar_alpha_admissible(out.columns(), out.rows(), k, s.type) ||
        !is_scrollar(out, k, s.type))
      return fail(c, "scrollarize output is not scrollar of type " + std::to_string(s.type),
                  {t, out});
    if (!contains(torus_of(t, p), torus_of(out, p)))
      return fail(c, "torus of the input is not inside the torus of the output", {t, out});
    if (s.path && !fringe_preserved(t, out, k, s.type))
      return fail(c, "scrollarize changed the fringe", {t, out});
  }
  std::size_t scrollar = 0, maximal = 0;
  for (std::size_t i = 0; i < poset.tori.size(); ++i) {
    scrollar += poset.scrollar(i);
    maximal += poset.maximal[i];
  }
  c.detail = std::to_string(maximal) + " maximal tori, all scrollar; " +
             std::to_string(tableaux.size()) + " tableaux scrollarized";
  return c;
}

CheckResult verify_splitting(const BNParams& p) {
  CheckResult c{"maximal_splitting_types", Status::Pass, {}, std::nullopt};
  const auto closed = maximal_splitting_types(p);
  const std::set<SplittingType> closed_set(closed.begin(), closed.end());

  const auto cands = balanced_candidates(p);
  std::vector<SplittingType> brute;
  for (const auto& mu : cands)
    if (is_maximal(mu, p)) brute.push_back(mu);
  if (std::set<SplittingType>(brute.begin(), brute.end()) != closed_set)
    return fail(c, "brute-force maxima differ from the mu_alpha closed form", {}, brute);
  for (const auto& mu : closed)
    if (!is_maximal(mu, p)) return fail(c, "closed-form type is not maximal", {}, {mu});
  for (std::size_t i = 0; i < closed.size(); ++i)
    for (std::size_t j = i + 1; j < closed.size(); ++j)
      if (compare_dominance(closed[i], closed[j]) != Dominance::Incomparable)
        return fail(c, "maximal types are comparable", {}, {closed[i], closed[j]});

  const std::int64_t top = std::min(p.r + 1, p.k - 1);
  for (std::int64_t a = 1; a <= top; ++a) {
    const auto mu = mu_alpha(p, a);
    if (p.g - magnitude(mu) != alpha_dimension(p, a))
      return fail(c, "g - |mu_alpha| differs from the alpha dimension at alpha=" +
                         std::to_string(a), {}, {mu});
  }
  const std::int64_t bound = std::min(p.k - p.rows(), p.r + 1);
  for (std::int64_t a = 1; a < bound && a + 1 <= top; ++a)
    if (compare_dominance(mu_alpha(p, a), mu_alpha(p, a + 1)) != Dominance::Less)
      return fail(c, "mu_alpha not below mu_(alpha+1) at alpha=" + std::to_string(a), {},
                  {mu_alpha(p, a), mu_alpha(p, a + 1)});
  for (const auto& mu : cands) {
    const auto alpha = static_cast<std::int64_t>(mu.nonnegative_count());
    if (alpha > top) return fail(c, "balanced type with too many nonnegative entries", {}, {mu});
    const auto cmp = compare_dominance(mu, mu_alpha(p, alpha));
    if (cmp != Dominance::Less && cmp != Dominance::Equal)
      return fail(c, "balanced type not below mu_alpha for its alpha", {}, {mu});
  }
  c.detail = std::to_string(cands.size()) + " balanced types, " +
             std::to_string(closed.size()) + " maximal";
  return c;
}

CheckResult verify_dimension(const TorusPoset& poset) {
  CheckResult c{"dimension", Status::Pass, {}, std::nullopt};
  const BNParams& p = poset.params;
  if (poset.tori.empty()) {
    c.status = Status::Skip;
    c.detail = "no tableaux";
    return c;
  }
  std::int64_t best = dimension(poset.tori.front());
  for (const auto& u : poset.tori) best = std::max(best, dimension(u));
  const std::int64_t expected = rho_k(p);
  if (best != expected)
    return fail(c, "largest torus dimension " + std::to_string(best) + " != rho_k " +
                       std::to_string(expected));
  for (std::size_t i = 0; i < poset.tori.size(); ++i) {
    if (!poset.maximal[i]) continue;
    if (poset.scrollar_types[i].empty())
      return fail(c, "maximal torus without a scrollar type", {poset.representative[i]});
    for (int a : poset.scrollar_types[i]) {
      const auto want = p.g - magnitude(mu_alpha(p, a));
      if (dimension(poset.tori[i]) != want)
        return fail(c, "maximal torus of type " + std::to_string(a) + " has dimension " +
                           std::to_string(dimension(poset.tori[i])) + ", expected " +
                           std::to_string(want),
                    {poset.representative[i]});
    }
  }
  c.detail = "max dimension " + std::to_string(best);
  return c;
}

CheckResult verify_membership(const TorusPoset& poset, std::uint64_t seed) {
  CheckResult c{"general_point_membership", Status::Pass, {}, std::nullopt};
  for (std::size_t i = 0; i < poset.tori.size(); ++i) {
    const auto D = sample_general(poset.tori[i], seed + i);
    for (std::size_t j = 0; j < poset.tori.size(); ++j)
      if (membership(D, poset.tori[j]) != contains(poset.tori[i], poset.tori[j]))
        return fail(c, "general point of " + poset.tori[i].str() +
                           " misclassified against " + poset.tori[j].str(),
                    {poset.representative[i], poset.representative[j]});
  }
  c.detail = std::to_string(poset.tori.size()) + " tori sampled";
  return c;
}

InstanceReport verify_instance(const BNParams& p, const Limits& limits, std::uint64_t seed) {
  InstanceReport rep;
  rep.params = p;
  std::vector<Tableau> tableaux;
  try {
    tableaux = all_tableaux(p, limits);
  } catch (const Error& e) {
    if (e.code() != Errc::LimitExceeded) throw;
    rep.status = Status::LimitExceeded;
    rep.error = e.what();
    return rep;
  }
  const TorusPoset poset = build_poset(p, tableaux);
  rep.tableau_count = tableaux.size();
  rep.torus_count = poset.tori.size();
  for (std::size_t i = 0; i < poset.tori.size(); ++i) {
    rep.maximal_count += poset.maximal[i];
    rep.scrollar_torus_count += poset.scrollar(i);
    const auto dim = dimension(poset.tori[i]);
    if (!rep.max_dimension || dim > *rep.max_dimension) rep.max_dimension = dim;
  }
  rep.checks.push_back(verify_max_scrollar(poset, tableaux));
  rep.checks.push_back(verify_splitting(p));
  rep.checks.push_back(verify_dimension(poset));
  rep.checks.push_back(verify_membership(poset, seed));
  for (const auto& c : rep.checks)
    if (c.status == Status::Fail) rep.status = Status::Fail;
  return rep;
}

bool VerificationReport::all_pass() const {
  return std::all_of(instances.begin(), instances.end(),
                     [](const InstanceReport& r) { return r.status == Status::Pass; });
}

bool VerificationReport::any_failure() const {
  return std::any_of(instances.begin(), instances.end(),
                     [](const InstanceReport& r) { return r.status == Status::Fail; });
}

bool VerificationReport::any_limit() const {
  return std::any_of(instances.begin(), instances.end(),
                     [](const InstanceReport& r) { return r.status == Status::LimitExceeded; });
}

VerificationReport run_sweep(const SweepManifest& manifest, unsigned workers,
                             std::uint64_t seed) {
  VerificationReport report;
  const std::size_t n = manifest.instances.size();
  report.instances.resize(n);
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(n, 1)));

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      const BNParams& p = manifest.instances[i];
      try {
        report.instances[i] = verify_instance(p, manifest.limits, seed);
      } catch (const std::exception& e) {
        InstanceReport r;
        r.params = p;
        r.status = Status::Fail;
        r.error = e.what();
        report.instances[i] = std::move(r);
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  return report;
}

}  // namespace kgonal
