#include "commands.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "kgonal/dot.hpp"
#include "kgonal/error.hpp"
#include "kgonal/io.hpp"
#include "kgonal/scrollar.hpp"
#include "kgonal/splitting.hpp"
#include "kgonal/tableau.hpp"
#include "kgonal/torus.hpp"
#include "kgonal/verifier.hpp"

namespace kgonal::cli {

namespace {

using io::Json;

// Thrown for bad flag combinations detected after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << content;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

const char* yes_no(bool b) { return b ? "true" : "false"; }

// The grid [a] x [b] sits in the ambient with r = a - 1 and g - d + r = b.
BNParams ambient_of(const Tableau& t, int k) {
  const std::int64_t r = t.columns() - 1;
  return {t.alphabet(), r, t.alphabet() + r - t.rows(), k};
}

struct InstanceFlags {
  std::int64_t g = 0, r = 0, d = 0, k = 0;

  void add(CLI::App* app, bool required) {
    auto* og = app->add_option("--g", g, "genus");
    auto* orr = app->add_option("--r", r, "rank");
    auto* od = app->add_option("--d", d, "degree");
    auto* ok = app->add_option("--k", k, "gonality");
    if (required)
      for (auto* o : {og, orr, od, ok}) o->required();
  }
  BNParams params() const {
    BNParams p{g, r, d, k};
    p.validate();
    return p;
  }
};

// splitting ---------------------------------------------------------------

struct SplittingCmd {
  InstanceFlags inst;
  bool json = false;
  std::size_t max_candidates = 100;

  int exec(std::ostream& out) const {
    const BNParams p = inst.params();
    const auto valid = valid_alphas(p);
    const std::int64_t top = std::min(p.r + 1, p.k - 1);
    const auto cands = balanced_candidates(p);

    Json alphas = Json::array();
    for (std::int64_t a = 1; a <= top; ++a) {
      const auto mu = mu_alpha(p, a);
      const bool is_valid = std::find(valid.begin(), valid.end(), a) != valid.end();
      alphas.push_back({{"alpha", a},
                        {"valid", is_valid},
                        {"mu", io::to_json(mu)},
                        {"magnitude", magnitude(mu)},
                        {"dimension", p.g - magnitude(mu)},
                        {"expected_dimension", expected_dim(p, a)},
                        {"maximal", is_maximal(mu, p)}});
    }
    Json balanced = Json::array();
    for (std::size_t i = 0; i < cands.size() && i < max_candidates; ++i) {
      const auto& mu = cands[i];
      balanced.push_back({{"mu", io::to_json(mu)},
                          {"magnitude", magnitude(mu)},
                          {"dimension", p.g - magnitude(mu)},
                          {"maximal", is_maximal(mu, p)}});
    }
    Json report = {{"params", io::to_json(p)},
                   {"rho", rho(p.g, p.r, p.d)},
                   {"rho_k", rho_k(p)},
                   {"valid_alphas", valid},
                   {"alphas", alphas},
                   {"balanced", balanced},
                   {"balanced_total", cands.size()}};
    if (json) {
      out << dump(report);
      return kExitOk;
    }

    out << "instance " << p.str() << "  rho " << rho(p.g, p.r, p.d) << "  rho_k " << rho_k(p)
        << "\nvalid alpha:";
    for (auto a : valid) out << ' ' << a;
    out << "\n\n"
        << std::left << std::setw(7) << "alpha" << std::setw(7) << "valid" << std::setw(24)
        << "mu_alpha" << std::right << std::setw(10) << "magnitude" << std::setw(6) << "dim"
        << std::setw(10) << "expected" << "  maximal\n";
    for (const auto& row : alphas)
      out << std::left << std::setw(7) << row["alpha"].get<std::int64_t>() << std::setw(7)
          << yes_no(row["valid"].get<bool>()) << std::setw(24)
          << splitting_from(row["mu"]) << std::right << std::setw(10)
          << row["magnitude"].get<std::int64_t>() << std::setw(6)
          << row["dimension"].get<std::int64_t>() << std::setw(10)
          << row["expected_dimension"].get<std::int64_t>() << "  "
          << yes_no(row["maximal"].get<bool>()) << '\n';
    out << "\nbalanced types (h0 = r+1): " << cands.size();
    if (cands.size() > max_candidates) out << ", first " << max_candidates << " shown";
    out << "\n"
        << std::left << std::setw(24) << "mu" << std::right << std::setw(10) << "magnitude"
        << std::setw(6) << "dim" << "  maximal\n";
    for (const auto& row : balanced)
      out << std::left << std::setw(24) << splitting_from(row["mu"]) << std::right
          << std::setw(10) << row["magnitude"].get<std::int64_t>() << std::setw(6)
          << row["dimension"].get<std::int64_t>() << "  " << yes_no(row["maximal"].get<bool>())
          << '\n';
    return kExitOk;
  }

  static std::string splitting_from(const Json& j) { return io::splitting_from_json(j).str(); }
};

// tableau -----------------------------------------------------------------

struct TableauCmd {
  std::string input;
  int k = 0;
  int g = 0;
  std::vector<std::string> checks;
  int alpha = 0;
  std::string transform;
  bool json = false;

  int exec(std::ostream& out) const {
    const Tableau t = io::parse_tableau(read_input(input), g);
    if (k < 2) throw UsageError("--k must be at least 2");
    const std::vector<std::string> wanted =
        checks.empty() ? std::vector<std::string>{"uniform", "scrollar", "vertical-steps"} : checks;

    Json report = {{"tableau", io::to_json(t)}, {"k", k}, {"valid", validate(t)},
                   {"distinct_symbols", distinct_symbol_count(t)}};
    const bool uniform = is_k_uniform_displacement(t, k);
    for (const auto& c : wanted) {
      if (c == "uniform") {
        report["uniform"] = uniform;
      } else if (c == "vertical-steps") {
        report["vertical_steps"] = has_vertical_steps(t, k);
      } else if (alpha != 0) {
        if (!scrollar_alpha_admissible(t.columns(), t.rows(), k, alpha))
          throw Error(Errc::InvalidAlpha, "type " + std::to_string(alpha) +
                                              " is not admissible on this grid");
        report["scrollar"] = {{"alpha", alpha}, {"value", is_scrollar(t, k, alpha)}};
      } else {
        report["scrollar_types"] = scrollar_types(t, k);
      }
    }
    if (!transform.empty()) {
      const Tableau u = transform == "transpose" ? transpose(t) : rotate(t);
      report["transform"] = {{"kind", transform}, {"tableau", io::to_json(u)}};
    }
    if (json) {
      out << dump(report);
      return kExitOk;
    }

    out << io::grid_str(t) << "grid " << t.columns() << "x" << t.rows() << ", alphabet "
        << t.alphabet() << ", k " << k << ", distinct symbols " << distinct_symbol_count(t)
        << "\nvalid: " << yes_no(validate(t)) << '\n';
    for (const auto& c : wanted) {
      if (c == "uniform") {
        out << "uniform: " << yes_no(uniform) << '\n';
      } else if (c == "vertical-steps") {
        out << "vertical-steps: " << yes_no(report["vertical_steps"].get<bool>()) << '\n';
      } else if (alpha != 0) {
        out << "scrollar type " << alpha << ": "
            << yes_no(report["scrollar"]["value"].get<bool>()) << '\n';
      } else {
        out << "scrollar types:";
        const auto types = report["scrollar_types"].get<std::vector<int>>();
        if (types.empty()) out << " none";
        for (int a : types) out << ' ' << a;
        out << '\n';
      }
    }
    if (!transform.empty())
      out << transform << ":\n"
          << io::grid_str(io::tableau_from_json(report["transform"]["tableau"]));
    return kExitOk;
  }
};

// scrollarize -------------------------------------------------------------

struct ScrollarizeCmd {
  std::string input;
  int k = 0;
  int g = 0;
  bool json = false;
  std::string output;

  int exec(std::ostream& out) const {
    const Tableau t = io::parse_tableau(read_input(input), g);
    if (k < 2) throw UsageError("--k must be at least 2");
    const auto s = scrollarize_with_path(t, k);
    const BNParams ambient = ambient_of(t, k);
    const auto inner = torus_of(t, ambient);
    const auto outer = torus_of(s.result, ambient);
    const bool unchanged = s.result == t;

    Json report = {{"input", io::to_json(t)},
                   {"k", k},
                   {"result", io::to_json(s.result)},
                   {"type", s.type},
                   {"path", s.path ? io::to_json(*s.path) : Json()},
                   {"steps", s.path ? Json(s.path->steps()) : Json()},
                   {"input_torus", io::to_json(inner)},
                   {"result_torus", io::to_json(outer)},
                   {"contained", contains(inner, outer)},
                   {"unchanged", unchanged}};
    if (!output.empty()) write_file(output, dump(io::to_json(s.result)));
    if (json) {
      out << dump(report);
      return kExitOk;
    }
    out << io::grid_str(s.result) << "type " << s.type << '\n';
    if (s.path) {
      out << "path " << s.path->steps() << ':';
      for (const auto& b : s.path->boxes) out << " (" << b.x << ',' << b.y << ')';
      out << '\n';
    } else {
      out << "path none (grid has a + b <= k)\n";
    }
    out << "input torus  " << inner.str() << "\nresult torus " << outer.str()
        << "\ncontained: " << yes_no(contains(inner, outer)) << '\n';
    if (unchanged) out << "note: input is already scrollar of type " << s.type << '\n';
    return kExitOk;
  }
};

// enumerate ---------------------------------------------------------------

struct EnumerateCmd {
  InstanceFlags inst;
  Limits limits;
  bool count_only = false;
  bool tori = false;
  bool json = false;

  int exec(std::ostream& out) const {
    const BNParams p = inst.params();
    const auto tableaux = all_tableaux(p, limits);
    if (tori) {
      const auto poset = build_poset(p, tableaux);
      Json arr = Json::array();
      for (std::size_t i = 0; i < poset.tori.size(); ++i)
        arr.push_back({{"torus", io::to_json(poset.tori[i])},
                       {"dimension", dimension(poset.tori[i])},
                       {"maximal", static_cast<bool>(poset.maximal[i])},
                       {"scrollar_types", poset.scrollar_types[i]},
                       {"representative", io::to_json(poset.representative[i])}});
      if (json) {
        out << dump({{"params", io::to_json(p)}, {"tableau_count", tableaux.size()}, {"tori", arr}});
        return kExitOk;
      }
      out << tableaux.size() << " tableaux, " << poset.tori.size() << " tori\n";
      for (std::size_t i = 0; i < poset.tori.size(); ++i) {
        out << poset.tori[i].str() << "  dim " << dimension(poset.tori[i])
            << (poset.maximal[i] ? "  maximal" : "");
        for (int a : poset.scrollar_types[i]) out << "  scrollar " << a;
        out << '\n';
      }
      return kExitOk;
    }
    if (json) {
      Json arr = Json::array();
      if (!count_only)
        for (const auto& t : tableaux) arr.push_back(io::to_json(t));
      Json report = {{"params", io::to_json(p)}, {"tableau_count", tableaux.size()}};
      if (!count_only) report["tableaux"] = arr;
      out << dump(report);
      return kExitOk;
    }
    if (!count_only)
      for (const auto& t : tableaux) out << io::grid_str(t) << '\n';
    out << tableaux.size() << " tableaux\n";
    return kExitOk;
  }
};

// verify ------------------------------------------------------------------

struct VerifyCmd {
  InstanceFlags inst;
  std::string manifest;
  std::optional<std::uint64_t> max_tableaux;
  std::optional<double> max_seconds;
  std::string report_path;
  std::string dot_path;
  std::string counterexample_dir;
  std::uint64_t seed = 1;
  bool json = false;
  bool single = false;

  static unsigned workers() {
    const char* env = std::getenv(kWorkersEnv);
    if (!env || !*env) return 1;
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (*end != '\0' || v > 1024)
      throw UsageError(std::string(kWorkersEnv) + " must be an integer in [0, 1024]");
    return static_cast<unsigned>(v);
  }

  int exec(std::ostream& out) const {
    SweepManifest m;
    if (!manifest.empty()) {
      if (single) throw UsageError("--manifest excludes --g/--r/--d/--k");
      m = io::parse_manifest(read_input(manifest));
    } else if (single) {
      m.instances.push_back(inst.params());
    } else {
      m = default_manifest();
    }
    if (max_tableaux) m.limits.max_tableaux = *max_tableaux;
    if (max_seconds) m.limits.max_seconds = *max_seconds;
    if (!dot_path.empty() && m.instances.size() != 1)
      throw UsageError("--dot needs exactly one instance");

    const auto report = run_sweep(m, workers(), seed);
    const Json j = io::to_json(report);
    if (!report_path.empty()) write_file(report_path, dump(j));
    if (!counterexample_dir.empty()) write_counterexamples(report);
    if (!dot_path.empty()) {
      const auto& r = report.instances.front();
      if (r.status != Status::LimitExceeded) {
        const auto tableaux = all_tableaux(r.params, m.limits);
        write_file(dot_path, hasse_dot(build_poset(r.params, tableaux)));
      }
    }
    if (json)
      out << dump(j);
    else
      out << io::report_table(report);

    if (report.any_failure()) return kExitFail;
    if (report.any_limit()) return kExitLimit;
    return kExitOk;
  }

  void write_counterexamples(const VerificationReport& report) const {
    std::filesystem::create_directories(counterexample_dir);
    for (std::size_t i = 0; i < report.instances.size(); ++i)
      for (const auto& c : report.instances[i].checks) {
        if (!c.counterexample) continue;
        const auto& ts = c.counterexample->tableaux;
        for (std::size_t n = 0; n < ts.size(); ++n) {
          const auto name = "instance" + std::to_string(i) + "_" + c.name + "_" +
                            std::to_string(n) + ".json";
          write_file((std::filesystem::path(counterexample_dir) / name).string(),
                     dump(io::to_json(ts[n])));
        }
      }
  }
};

int error_code(Errc e) {
  switch (e) {
    case Errc::LimitExceeded: return kExitLimit;
    case Errc::Internal:
    case Errc::Overflow: return kExitFail;
    default: return kExitUsage;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Splitting types and tableau calculus for Brill-Noether loci of k-gonal chains of loops"};
  app.name("kgonal");
  app.require_subcommand(1);

  SplittingCmd splitting;
  auto* sp = app.add_subcommand("splitting", "maximal splitting types mu_alpha of an instance");
  splitting.inst.add(sp, true);
  sp->add_flag("--json", splitting.json, "print JSON");
  sp->add_option("--max-candidates", splitting.max_candidates, "balanced types listed")
      ->capture_default_str();

  TableauCmd tableau;
  auto* tb = app.add_subcommand("tableau", "predicates on a tableau file");
  tb->add_option("--input,-i", tableau.input, "tableau file (JSON or grid; - for stdin)")->required();
  tb->add_option("--k", tableau.k, "gonality")->required();
  tb->add_option("--g", tableau.g, "alphabet size for grid input (default: largest symbol)");
  tb->add_option("--check", tableau.checks, "predicates to report")
      ->check(CLI::IsMember({"scrollar", "uniform", "vertical-steps"}));
  tb->add_option("--alpha", tableau.alpha, "scrollar type to test");
  tb->add_option("--transform", tableau.transform, "also print a transformed tableau")
      ->check(CLI::IsMember({"transpose", "rotate"}));
  tb->add_flag("--json", tableau.json, "print JSON");

  ScrollarizeCmd scroll;
  auto* sc = app.add_subcommand("scrollarize", "turn a tableau into a scrollar tableau");
  sc->add_option("--input,-i", scroll.input, "tableau file (JSON or grid; - for stdin)")->required();
  sc->add_option("--k", scroll.k, "gonality")->required();
  sc->add_option("--g", scroll.g, "alphabet size for grid input (default: largest symbol)");
  sc->add_option("--output,-o", scroll.output, "write the result as tableau JSON");
  sc->add_flag("--json", scroll.json, "print JSON");

  EnumerateCmd enumerate;
  auto* en = app.add_subcommand("enumerate", "list all k-uniform displacement tableaux");
  enumerate.inst.add(en, true);
  en->add_option("--max-tableaux", enumerate.limits.max_tableaux)->capture_default_str();
  en->add_option("--max-seconds", enumerate.limits.max_seconds)->capture_default_str();
  en->add_flag("--count", enumerate.count_only, "print only the count");
  en->add_flag("--tori", enumerate.tori, "print the deduplicated tori instead");
  en->add_flag("--json", enumerate.json, "print JSON");

  VerifyCmd verify;
  auto* vf = app.add_subcommand(
      "verify", "exhaustive checks on one instance, a manifest, or the default sweep");
  verify.inst.add(vf, false);
  vf->add_option("--manifest,-m", verify.manifest, "manifest file (JSON or TOML-style)");
  vf->add_option("--max-tableaux", verify.max_tableaux, "override the tableau limit");
  vf->add_option("--max-seconds", verify.max_seconds, "override the time limit per instance");
  vf->add_option("--report", verify.report_path, "write the JSON report here");
  vf->add_option("--dot", verify.dot_path, "write the Hasse diagram of a single instance");
  vf->add_option("--counterexamples", verify.counterexample_dir,
                 "directory for counterexample tableaux");
  vf->add_option("--seed", verify.seed, "seed for general-point sampling")->capture_default_str();
  vf->add_flag("--json", verify.json, "print the JSON report instead of the table");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (sp->parsed()) return splitting.exec(out);
    if (tb->parsed()) return tableau.exec(out);
    if (sc->parsed()) return scroll.exec(out);
    if (en->parsed()) return enumerate.exec(out);
    if (vf->parsed()) {
      const int given = static_cast<int>(vf->count("--g") + vf->count("--r") +
                                         vf->count("--d") + vf->count("--k"));
      if (given != 0 && given != 4) throw UsageError("--g, --r, --d and --k go together");
      verify.single = given == 4;
      return verify.exec(out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << errc_name(e.code()) << ": " << e.what() << '\n';
    return error_code(e.code());
  }
  return kExitUsage;
}

}  // namespace kgonal::cli
