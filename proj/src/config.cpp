#include "gnls/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "gnls/csv.hpp"
#include "gnls/error.hpp"

namespace gnls {

const std::vector<std::string>& fit_targets() {
  static const std::vector<std::string> targets = {"linf_u", "linf_v", "l2p2_u",
                                                   "l2p2_v"};
  return targets;
}

namespace {

struct Entry {
  std::string value;
  std::size_t line = 0;
};

// section -> key -> entry
using Document = std::map<std::string, std::map<std::string, Entry>>;

const std::map<std::string, std::set<std::string>>& fixed_keys() {
  static const std::map<std::string, std::set<std::string>> keys = {
      {"grid", {"x0", "xf", "n_points"}},
      {"scheme", {"p", "beta", "dt", "t_final", "picard_tol", "picard_max_iters"}},
      {"initial", {"kind", "path", "boundary_tol"}},
      {"output",
       {"diagnostics_path", "summary_path", "snapshot_dir", "sample_every",
        "snapshot_every", "j_norm_order"}},
      {"fit", {"t_min", "targets"}},
  };
  return keys;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw Error(Errc::parse_error, "line " + std::to_string(line) + ": " + what);
}

Document tokenize(std::string_view text) {
  Document doc;
  std::string section;
  std::size_t line_no = 0;
  std::size_t n_keys = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = csv::trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') parse_fail(line_no, "unterminated section header");
      section = std::string(csv::trim(line.substr(1, line.size() - 2)));
      if (!fixed_keys().contains(section))
        throw Error(Errc::unknown_key, "line " + std::to_string(line_no) +
                                           ": unknown section [" + section + "]");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) parse_fail(line_no, "expected key = value");
    if (section.empty()) parse_fail(line_no, "key outside of any [section]");
    const std::string key(csv::trim(line.substr(0, eq)));
    const std::string value(csv::trim(line.substr(eq + 1)));
    if (key.empty()) parse_fail(line_no, "empty key");
    if (value.empty()) parse_fail(line_no, "empty value for " + section + "." + key);
    auto& keys = doc[section];
    if (keys.contains(key))
      parse_fail(line_no, "duplicate key " + section + "." + key);
    keys[key] = Entry{value, line_no};
    ++n_keys;
  }
  if (n_keys == 0) throw Error(Errc::parse_error, "line 0: empty configuration");
  return doc;
}

class Reader {
 public:
  explicit Reader(Document doc) : doc_(std::move(doc)) {}

  const Entry* find(const std::string& section, const std::string& key) const {
    const auto s = doc_.find(section);
    if (s == doc_.end()) return nullptr;
    const auto k = s->second.find(key);
    return k == s->second.end() ? nullptr : &k->second;
  }

  const Entry& require(const std::string& section, const std::string& key) const {
    const Entry* e = find(section, key);
    if (!e)
      throw Error(Errc::missing_parameter,
                  section + "." + key + " is required");
    return *e;
  }

  double real(const std::string& section, const std::string& key,
              std::optional<double> fallback = std::nullopt) {
    const Entry* e = fallback ? find(section, key) : &require(section, key);
    if (!e) return defaulted(section, key, *fallback);
    try {
      return csv::parse_real(e->value);
    } catch (const Error&) {
      invalid(section, key, *e, "expected a number");
    }
  }

  long long integer(const std::string& section, const std::string& key,
                    std::optional<long long> fallback = std::nullopt) {
    const Entry* e = fallback ? find(section, key) : &require(section, key);
    if (!e) return defaulted(section, key, *fallback);
    long long value = 0;
    const char* first = e->value.data();
    const char* last = first + e->value.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
      invalid(section, key, *e, "expected an integer");
    return value;
  }

  std::optional<std::string> text(const std::string& section,
                                  const std::string& key) const {
    const Entry* e = find(section, key);
    if (!e) return std::nullopt;
    return e->value;
  }

  [[noreturn]] static void invalid(const std::string& section,
                                   const std::string& key, const Entry& e,
                                   const std::string& what) {
    throw Error(Errc::validation_error,
                "line " + std::to_string(e.line) + ": " + section + "." + key +
                    ": " + what + " (got '" + e.value + "')");
  }

  const Document& doc() const { return doc_; }
  std::vector<std::string> defaults;

 private:
  template <class T>
  T defaulted(const std::string& section, const std::string& key, T value) {
    defaults.push_back(section + "." + key);
    return value;
  }

  Document doc_;
};

void check_known_keys(const Document& doc, InitialKind kind) {
  for (const auto& [section, keys] : doc) {
    const auto& allowed = fixed_keys().at(section);
    for (const auto& [key, entry] : keys) {
      if (allowed.contains(key)) continue;
      if (section == "initial") {
        const auto& params = parameters_of(kind);
        if (std::any_of(params.begin(), params.end(),
                        [&](const auto& p) { return p.name == key; }))
          continue;
      }
      throw Error(Errc::unknown_key, "line " + std::to_string(entry.line) +
                                         ": unknown key " + section + "." + key);
    }
  }
}

std::size_t positive_count(Reader& r, const std::string& section,
                           const std::string& key, long long value,
                           bool allow_zero) {
  if (value < 0 || (!allow_zero && value == 0)) {
    const Entry* e = r.find(section, key);
    throw Error(Errc::validation_error,
                "line " + std::to_string(e ? e->line : 0) + ": " + section + "." +
                    key + " must be " + (allow_zero ? ">= 0" : ">= 1"));
  }
  return static_cast<std::size_t>(value);
}

}  // namespace

RunConfig parse_config(std::string_view text) {
  Reader r(tokenize(text));
  RunConfig cfg;

  const std::string kind_name = std::string(r.require("initial", "kind").value);
  cfg.initial.kind = parse_initial_kind(kind_name);
  check_known_keys(r.doc(), cfg.initial.kind);

  {
    const double x0 = r.real("grid", "x0");
    const double xf = r.real("grid", "xf");
    const long long n = r.integer("grid", "n_points");
    cfg.grid = make_grid(x0, xf, positive_count(r, "grid", "n_points", n, false));
  }

  SchemeParams& s = cfg.scheme;
  const long long p = r.integer("scheme", "p");
  if (p < 1 || p > 63)
    throw Error(Errc::validation_error, "scheme.p must be an odd integer >= 1");
  s.p = static_cast<int>(p);
  s.beta = r.real("scheme", "beta");
  s.dt = r.real("scheme", "dt");
  s.t_final = r.real("scheme", "t_final");
  s.picard_tol = r.real("scheme", "picard_tol", kDefaultPicardTol);
  const long long iters =
      r.integer("scheme", "picard_max_iters", kDefaultPicardMaxIters);
  s.picard_max_iters = static_cast<int>(
      std::min<long long>(positive_count(r, "scheme", "picard_max_iters", iters, false),
                          1'000'000));
  validate(s);

  InitialSpec& init = cfg.initial;
  init.boundary_tol = r.real("initial", "boundary_tol", kDefaultBoundaryTol);
  if (!(init.boundary_tol > 0.0))
    throw Error(Errc::validation_error, "initial.boundary_tol must be positive");
  if (auto path = r.text("initial", "path")) init.path = *path;
  if (init.kind == InitialKind::from_file && init.path.empty())
    throw Error(Errc::missing_parameter, "initial.path is required for from_file");
  for (const auto& info : parameters_of(init.kind)) {
    if (r.find("initial", info.name))
      init.params[info.name] = r.real("initial", info.name);
    else if (!info.default_value)
      throw Error(Errc::missing_parameter, "initial." + info.name +
                                               " is required for kind " +
                                               kind_name);
  }

  OutputConfig& out = cfg.output;
  out.diagnostics_path = r.require("output", "diagnostics_path").value;
  if (auto summary = r.text("output", "summary_path")) {
    out.summary_path = *summary;
  } else {
    out.summary_path = out.diagnostics_path.string() + ".summary.txt";
    r.defaults.push_back("output.summary_path");
  }
  out.sample_every = positive_count(r, "output", "sample_every",
                                    r.integer("output", "sample_every", 1), false);
  out.snapshot_every = positive_count(
      r, "output", "snapshot_every", r.integer("output", "snapshot_every", 0), true);
  if (auto dir = r.text("output", "snapshot_dir")) out.snapshot_dir = *dir;
  if (out.snapshot_every > 0 && out.snapshot_dir.empty())
    throw Error(Errc::missing_parameter,
                "output.snapshot_dir is required when snapshot_every > 0");
  const long long j_order = r.integer("output", "j_norm_order", 0);
  if (j_order < 0 || j_order > kMaxJOrder)
    throw Error(Errc::validation_error,
                "output.j_norm_order must be in [0, " + std::to_string(kMaxJOrder) + "]");
  out.j_norm_order = static_cast<int>(j_order);

  cfg.fit.t_min = r.real("fit", "t_min", 0.0);
  if (!(cfg.fit.t_min >= 0.0))
    throw Error(Errc::validation_error, "fit.t_min must be >= 0");
  if (auto targets = r.text("fit", "targets")) {
    for (auto item : csv::split(*targets)) {
      const std::string name(csv::trim(item));
      const auto& known = fit_targets();
      if (std::find(known.begin(), known.end(), name) == known.end())
        throw Error(Errc::validation_error, "fit.targets: unknown target '" + name + "'");
      cfg.fit.targets.push_back(name);
    }
  }

  cfg.defaulted = std::move(r.defaults);
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_failure, "cannot read config " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string describe(const RunConfig& c) {
  using csv::format_real;
  std::ostringstream os;
  const auto line = [&](const std::string& key, const std::string& value) {
    os << key << " = " << value;
    if (std::find(c.defaulted.begin(), c.defaulted.end(), key) != c.defaulted.end())
      os << "  (default)";
    os << '\n';
  };
  line("grid.x0", format_real(c.grid.x0));
  line("grid.xf", format_real(c.grid.xf));
  line("grid.n_points", std::to_string(c.grid.n_points));
  line("grid.dx", format_real(c.grid.dx));
  line("scheme.p", std::to_string(c.scheme.p));
  line("scheme.beta", format_real(c.scheme.beta));
  line("scheme.dt", format_real(c.scheme.dt));
  line("scheme.t_final", format_real(c.scheme.t_final));
  line("scheme.picard_tol", format_real(c.scheme.picard_tol));
  line("scheme.picard_max_iters", std::to_string(c.scheme.picard_max_iters));
  line("initial.kind", std::string(to_string(c.initial.kind)));
  if (!c.initial.path.empty()) line("initial.path", c.initial.path);
  line("initial.boundary_tol", format_real(c.initial.boundary_tol));
  for (const auto& [name, value] : c.initial.params)
    line("initial." + name, format_real(value));
  line("output.diagnostics_path", c.output.diagnostics_path.string());
  line("output.summary_path", c.output.summary_path.string());
  if (!c.output.snapshot_dir.empty())
    line("output.snapshot_dir", c.output.snapshot_dir.string());
  line("output.sample_every", std::to_string(c.output.sample_every));
  line("output.snapshot_every", std::to_string(c.output.snapshot_every));
  line("output.j_norm_order", std::to_string(c.output.j_norm_order));
  line("fit.t_min", format_real(c.fit.t_min));
  std::string targets;
  for (const auto& t : c.fit.targets) targets += (targets.empty() ? "" : ",") + t;
  line("fit.targets", targets.empty() ? "(none)" : targets);
  return os.str();
}

}  // namespace gnls
