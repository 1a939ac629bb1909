#pragma once

// Exhaustive instance-level verification. For one BNParams instance every
// k-uniform displacement tableau on [r+1] x [g-d+r] over [g] is enumerated,
// the tori they cut out are deduplicated and ordered by containment, and the
// structural statements are checked against brute force.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kgonal/splitting.hpp"
#include "kgonal/tableau.hpp"
#include "kgonal/torus.hpp"

namespace kgonal {

struct Limits {
  std::uint64_t max_tableaux = 1'000'000;
  double max_seconds = 60.0;

  friend bool operator==(const Limits&, const Limits&) = default;
};

struct SweepManifest {
  std::vector<BNParams> instances;
  Limits limits;
};

// Every valid (g, r, d, k) with g <= 8, k in {2, 3, 4} and grid area at most
// 6, sorted.
SweepManifest default_manifest();

// Visits tableaux in row-major lexicographic order. Throws LimitExceeded
// when the count or time budget is exhausted.
void enumerate_tableaux(const BNParams& p, const std::function<void(const Tableau&)>& visit,
                        const Limits& limits = {});
std::vector<Tableau> all_tableaux(const BNParams& p, const Limits& limits = {});

// The deduplicated tori and how they relate.
struct TorusPoset {
  BNParams params;
  std::uint64_t tableau_count = 0;
  std::vector<TorusClass> tori;               // canonical order
  std::vector<Tableau> representative;        // first tableau yielding each torus
  std::vector<std::vector<int>> scrollar_types;  // union over tableaux yielding it
  std::vector<bool> maximal;

  bool scrollar(std::size_t i) const { return !scrollar_types[i].empty(); }
};

TorusPoset build_poset(const BNParams& p, const std::vector<Tableau>& tableaux);

// covers[i] lists the j with tori[i] strictly inside tori[j] and no torus
// strictly between them.
std::vector<std::vector<std::size_t>> hasse_covers(const TorusPoset& poset);

std::vector<TorusClass> all_tori(const BNParams& p, const Limits& limits = {});

// Containment-maximal elements, in input order.
std::vector<TorusClass> maximal_tori(const std::vector<TorusClass>& tori);
std::vector<TorusClass> maximal_tori(const BNParams& p, const Limits& limits = {});

enum class Status { Pass, Fail, Skip, LimitExceeded };
const char* status_name(Status s) noexcept;

struct Counterexample {
  std::string what;
  std::vector<Tableau> tableaux;
  std::vector<SplittingType> types;
};

struct CheckResult {
  std::string name;
  Status status = Status::Pass;
  std::string detail;
  std::optional<Counterexample> counterexample;
};

// Maximal tori are exactly the tori of scrollar tableaux, and scrollarize
// lands on a scrollar tableau whose torus contains the input's.
CheckResult verify_max_scrollar(const TorusPoset& poset, const std::vector<Tableau>& tableaux);

// Brute-force dominance maxima agree with the mu_alpha closed form; the
// expected-dimension identity and the lower-bound strict inequalities hold.
CheckResult verify_splitting(const BNParams& p);

// Largest torus dimension equals rho_k, and maximal tori have dimension
// g - |mu_alpha| for their scrollar type. Skip when there are no tableaux.
CheckResult verify_dimension(const TorusPoset& poset);

// A general point of each torus lies in exactly the tori that contain it.
CheckResult verify_membership(const TorusPoset& poset, std::uint64_t seed);

struct InstanceReport {
  BNParams params;
  Status status = Status::Pass;
  std::string error;
  std::uint64_t tableau_count = 0;
  std::uint64_t torus_count = 0;
  std::uint64_t maximal_count = 0;
  std::uint64_t scrollar_torus_count = 0;
  std::optional<std::int64_t> max_dimension;
  std::vector<CheckResult> checks;
};

InstanceReport verify_instance(const BNParams& p, const Limits& limits, std::uint64_t seed = 1);

struct VerificationReport {
  std::vector<InstanceReport> instances;

  bool all_pass() const;
  bool any_failure() const;
  bool any_limit() const;
};

// Instances run on `workers` threads (0 = hardware concurrency); the report
// is in manifest order regardless.
VerificationReport run_sweep(const SweepManifest& manifest, unsigned workers = 1,
                             std::uint64_t seed = 1);

}  // namespace kgonal
