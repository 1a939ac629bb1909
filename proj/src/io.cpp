#include "kgonal/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <iomanip>
#include <sstream>

#include "kgonal/error.hpp"

namespace kgonal::io {

namespace {

std::string location(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::Parse, what); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) bad("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
  return *it;
}

std::int64_t as_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) bad(what + " must be an integer");
  return j.get<std::int64_t>();
}

int as_small_int(const Json& j, const std::string& what) {
  const auto v = as_int(j, what);
  if (v < -1'000'000 || v > 1'000'000) bad(what + " is out of range");
  return static_cast<int>(v);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Json status_json(Status s) { return status_name(s); }

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    bad("invalid JSON at " + location(text, at));
  }
}

Json to_json(const SplittingType& mu) {
  return Json(std::vector<std::int64_t>(mu.entries().begin(), mu.entries().end()));
}

SplittingType splitting_from_json(const Json& j) {
  if (!j.is_array()) bad("splitting type must be a JSON array");
  std::vector<std::int64_t> v;
  for (const auto& e : j) v.push_back(as_int(e, "splitting type entry"));
  try {
    return SplittingType(std::move(v));
  } catch (const Error& e) {
    bad(e.what());
  }
}

Json to_json(const BNParams& p) { return {{"g", p.g}, {"r", p.r}, {"d", p.d}, {"k", p.k}}; }

BNParams params_from_json(const Json& j) {
  return {as_int(member(j, "g"), "g"), as_int(member(j, "r"), "r"), as_int(member(j, "d"), "d"),
          as_int(member(j, "k"), "k")};
}

Json to_json(const Tableau& t) {
  return {{"a", t.columns()}, {"b", t.rows()}, {"g", t.alphabet()}, {"rows", t.row_vectors()}};
}

Tableau tableau_from_json(const Json& j) {
  const Json& rows = member(j, "rows");
  if (!rows.is_array() || rows.empty()) bad("\"rows\" must be a nonempty array");
  std::vector<std::vector<int>> v;
  for (const auto& row : rows) {
    if (!row.is_array() || row.empty()) bad("each row must be a nonempty array");
    auto& out = v.emplace_back();
    for (const auto& e : row) out.push_back(as_small_int(e, "tableau entry"));
    if (out.size() != v.front().size()) bad("rows have different lengths");
  }
  const int g = as_small_int(member(j, "g"), "g");
  if (j.contains("a") && as_int(j["a"], "a") != static_cast<std::int64_t>(v.front().size()))
    bad("\"a\" does not match the row length");
  if (j.contains("b") && as_int(j["b"], "b") != static_cast<std::int64_t>(v.size()))
    bad("\"b\" does not match the number of rows");
  return Tableau(v, g);
}

Tableau parse_tableau_grid(std::string_view text, int alphabet) {
  std::vector<std::vector<int>> rows;
  std::size_t line_start = 0;
  int line_no = 0;
  int largest = 0;
  while (line_start <= text.size()) {
    std::size_t end = text.find('\n', line_start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(line_start, end - line_start);
    ++line_no;
    const auto body = trim(line);
    if (!body.empty() && body.front() != '#') {
      std::vector<int> row;
      std::size_t i = 0;
      while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i])) || line[i] == ',') {
          ++i;
          continue;
        }
        int value = 0;
        const auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
        const std::size_t used = static_cast<std::size_t>(ptr - (line.data() + i));
        const bool ends_token = ptr == line.data() + line.size() ||
                                std::isspace(static_cast<unsigned char>(*ptr)) || *ptr == ',';
        if (ec != std::errc() || used == 0 || !ends_token || value < 1)
          bad("expected a positive integer at line " + std::to_string(line_no) + ", column " +
              std::to_string(i + 1));
        row.push_back(value);
        largest = std::max(largest, value);
        i += used;
      }
      if (!rows.empty() && row.size() != rows.front().size())
        bad("row length differs from the first row at line " + std::to_string(line_no) +
            ", column 1");
      rows.push_back(std::move(row));
    }
    if (end == text.size()) break;
    line_start = end + 1;
  }
  if (rows.empty()) bad("empty tableau at line 1, column 1");
  return Tableau(rows, alphabet > 0 ? alphabet : largest);
}

Tableau parse_tableau(std::string_view text, int alphabet) {
  const auto body = trim(text);
  if (!body.empty() && body.front() == '{') {
    Json j = parse_json(text);
    if (!j.contains("g") && alphabet > 0) j["g"] = alphabet;
    return tableau_from_json(j);
  }
  return parse_tableau_grid(text, alphabet);
}

std::string grid_str(const Tableau& t) {
  int width = 1;
  for (int s : t.cells()) width = std::max(width, static_cast<int>(std::to_string(s).size()));
  std::ostringstream os;
  for (int y = 1; y <= t.rows(); ++y) {
    for (int x = 1; x <= t.columns(); ++x) os << (x > 1 ? " " : "") << std::setw(width) << t(x, y);
    os << '\n';
  }
  return os.str();
}

Json to_json(const TorusClass& u) {
  Json c = Json::object();
  for (auto [sym, res] : u.constraints()) c[std::to_string(sym)] = res;
  const auto& p = u.ambient();
  return {{"constraints", c}, {"g", p.g}, {"r", p.r}, {"d", p.d}, {"k", p.k}};
}

TorusClass torus_from_json(const Json& j) {
  BNParams p{as_int(member(j, "g"), "g"), 0, 0, as_int(member(j, "k"), "k")};
  p.r = j.contains("r") ? as_int(j["r"], "r") : 0;
  p.d = j.contains("d") ? as_int(j["d"], "d") : p.g;
  if (p.g < 1 || p.k < 2) bad("torus needs g >= 1 and k >= 2");
  const Json& c = member(j, "constraints");
  if (!c.is_object()) bad("\"constraints\" must be an object");
  std::map<int, int> m;
  for (const auto& [key, value] : c.items()) {
    int sym = 0;
    const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), sym);
    if (ec != std::errc() || ptr != key.data() + key.size())
      bad("constraint key \"" + key + "\" is not an integer");
    m[sym] = as_small_int(value, "constraint residue");
  }
  try {
    return TorusClass(p, m);
  } catch (const Error& e) {
    bad(e.what());
  }
}

Json to_json(const DivisorCoords& D) {
  Json xi = Json::array();
  for (const auto& q : D.xi) xi.push_back(rational_str(q));
  return {{"xi", xi}, {"d", D.degree}};
}

DivisorCoords divisor_from_json(const Json& j) {
  DivisorCoords D;
  D.degree = as_int(member(j, "d"), "d");
  const Json& xi = member(j, "xi");
  if (!xi.is_array()) bad("\"xi\" must be an array");
  for (const auto& e : xi) {
    if (e.is_number_integer())
      D.xi.emplace_back(e.get<std::int64_t>());
    else if (e.is_string())
      D.xi.push_back(parse_rational(e.get<std::string>()));
    else
      bad("coordinates must be rational strings");
  }
  return D;
}

Json to_json(const AdmissiblePath& path) {
  Json boxes = Json::array();
  for (const auto& b : path.boxes) boxes.push_back({b.x, b.y});
  return {{"type", path.type}, {"boxes", boxes}};
}

Json to_json(const Limits& limits) {
  return {{"max_tableaux", limits.max_tableaux}, {"max_seconds", limits.max_seconds}};
}

Json to_json(const SweepManifest& m) {
  Json inst = Json::array();
  for (const auto& p : m.instances) inst.push_back(to_json(p));
  return {{"instances", inst}, {"limits", to_json(m.limits)}};
}

namespace {

void read_limits(const Json& j, Limits& limits) {
  if (!j.is_object()) bad("\"limits\" must be an object");
  if (j.contains("max_tableaux")) {
    const auto v = as_int(j["max_tableaux"], "max_tableaux");
    if (v < 0) bad("max_tableaux must be nonnegative");
    limits.max_tableaux = static_cast<std::uint64_t>(v);
  }
  if (j.contains("max_seconds")) {
    if (!j["max_seconds"].is_number()) bad("max_seconds must be a number");
    limits.max_seconds = j["max_seconds"].get<double>();
  }
}

BNParams checked_params(const BNParams& p, const std::string& where) {
  if (!p.valid()) bad("invalid instance " + p.str() + where);
  return p;
}

SweepManifest manifest_from_json(const Json& j) {
  SweepManifest m;
  const Json& inst = member(j, "instances");
  if (!inst.is_array()) bad("\"instances\" must be an array");
  for (std::size_t i = 0; i < inst.size(); ++i)
    m.instances.push_back(
        checked_params(params_from_json(inst[i]), " (instance " + std::to_string(i) + ")"));
  if (j.contains("limits")) read_limits(j["limits"], m.limits);
  return m;
}

SweepManifest manifest_from_toml(std::string_view text) {
  SweepManifest m;
  enum class Section { None, Limits, Instance } section = Section::None;
  struct Pending {
    std::optional<std::int64_t> g, r, d, k;
    int line = 0;
  };
  std::vector<Pending> pending;

  std::size_t line_start = 0;
  int line_no = 0;
  while (line_start <= text.size()) {
    std::size_t end = text.find('\n', line_start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(line_start, end - line_start);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto body = trim(line);
    const auto col = [&](std::string_view part) {
      return std::to_string(static_cast<std::size_t>(part.data() - line.data()) + 1);
    };
    const auto where = [&](std::string_view part) {
      return " at line " + std::to_string(line_no) + ", column " + col(part);
    };
    if (body.empty()) {
    } else if (body == "[limits]") {
      section = Section::Limits;
    } else if (body == "[[instance]]" || body == "[[instances]]") {
      section = Section::Instance;
      pending.push_back({});
      pending.back().line = line_no;
    } else if (body.front() == '[') {
      bad("unknown table " + std::string(body) + where(body));
    } else {
      const auto eq = body.find('=');
      if (eq == std::string_view::npos) bad("expected key = value" + where(body));
      const auto key = trim(body.substr(0, eq));
      const auto value = trim(body.substr(eq + 1));
      if (value.empty()) bad("missing value" + where(body.substr(eq)));
      double number = 0;
      const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), number);
      if (ec != std::errc() || ptr != value.data() + value.size())
        bad("expected a number" + where(value));
      const bool integral = value.find_first_of(".eE") == std::string_view::npos;
      if (section == Section::Limits) {
        if (key == "max_tableaux") {
          if (!integral || number < 0) bad("max_tableaux must be a nonnegative integer" + where(value));
          m.limits.max_tableaux = static_cast<std::uint64_t>(number);
        } else if (key == "max_seconds") {
          m.limits.max_seconds = number;
        } else {
          bad("unknown limit \"" + std::string(key) + "\"" + where(key));
        }
      } else if (section == Section::Instance) {
        if (!integral) bad("instance fields must be integers" + where(value));
        auto& cur = pending.back();
        const auto v = static_cast<std::int64_t>(number);
        if (key == "g") cur.g = v;
        else if (key == "r") cur.r = v;
        else if (key == "d") cur.d = v;
        else if (key == "k") cur.k = v;
        else bad("unknown instance field \"" + std::string(key) + "\"" + where(key));
      } else {
        bad("key outside of a table" + where(key));
      }
    }
    if (end == text.size()) break;
    line_start = end + 1;
  }
  for (const auto& p : pending) {
    if (!p.g || !p.r || !p.d || !p.k)
      bad("instance at line " + std::to_string(p.line) + ", column 1 needs g, r, d and k");
    m.instances.push_back(
        checked_params({*p.g, *p.r, *p.d, *p.k}, " at line " + std::to_string(p.line) + ", column 1"));
  }
  return m;
}

}  // namespace

SweepManifest parse_manifest(std::string_view text) {
  const auto body = trim(text);
  if (!body.empty() && body.front() == '{') return manifest_from_json(parse_json(text));
  return manifest_from_toml(text);
}

Json to_json(const CheckResult& c) {
  Json j = {{"name", c.name}, {"status", status_json(c.status)}, {"detail", c.detail}};
  if (c.counterexample) {
    Json ts = Json::array(), types = Json::array();
    for (const auto& t : c.counterexample->tableaux) ts.push_back(to_json(t));
    for (const auto& mu : c.counterexample->types) types.push_back(to_json(mu));
    j["counterexample"] = {{"what", c.counterexample->what}, {"tableaux", ts}, {"types", types}};
  }
  return j;
}

Json to_json(const InstanceReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  Json j = {{"params", to_json(r.params)},
            {"status", status_json(r.status)},
            {"tableau_count", r.tableau_count},
            {"torus_count", r.torus_count},
            {"maximal_count", r.maximal_count},
            {"scrollar_torus_count", r.scrollar_torus_count},
            {"max_dimension", r.max_dimension ? Json(*r.max_dimension) : Json()},
            {"checks", checks}};
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

Json to_json(const VerificationReport& r) {
  Json inst = Json::array();
  std::size_t pass = 0, fail = 0, limit = 0;
  for (const auto& i : r.instances) {
    inst.push_back(to_json(i));
    pass += i.status == Status::Pass;
    fail += i.status == Status::Fail;
    limit += i.status == Status::LimitExceeded;
  }
  return {{"instances", inst},
          {"summary", {{"total", r.instances.size()}, {"pass", pass}, {"fail", fail},
                       {"limit_exceeded", limit}}}};
}

std::string report_table(const VerificationReport& r) {
  std::ostringstream os;
  os << std::left << std::setw(22) << "instance" << std::setw(7) << "status" << std::right
     << std::setw(10) << "tableaux" << std::setw(7) << "tori" << std::setw(9) << "maximal"
     << std::setw(6) << "dim" << "  checks\n";
  for (const auto& i : r.instances) {
    os << std::left << std::setw(22) << i.params.str() << std::setw(7) << status_name(i.status)
       << std::right << std::setw(10) << i.tableau_count << std::setw(7) << i.torus_count
       << std::setw(9) << i.maximal_count << std::setw(6)
       << (i.max_dimension ? std::to_string(*i.max_dimension) : "-") << "  ";
    for (std::size_t c = 0; c < i.checks.size(); ++c)
      os << (c ? " " : "") << i.checks[c].name << '=' << status_name(i.checks[c].status);
    if (!i.error.empty()) os << (i.checks.empty() ? "" : " ") << i.error;
    os << '\n';
  }
  return os.str();
}

}  // namespace kgonal::io
