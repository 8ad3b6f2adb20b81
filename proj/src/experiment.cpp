#include "gnls/experiment.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cerrno>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "gnls/csv.hpp"
#include "gnls/error.hpp"
#include "gnls/initcond.hpp"
#include "gnls/snapshot.hpp"
#include "gnls/stepper.hpp"

namespace gnls {

namespace fs = std::filesystem;
using csv::format_real;

std::string format_record(const DiagnosticsRecord& rec) {
  std::string row;
  row.reserve(256);
  for (double value : {rec.t, rec.mass_u, rec.mass_v, rec.energy, rec.linf_u,
                       rec.linf_v, rec.l2p2_u, rec.l2p2_v}) {
    row += format_real(value);
    row += ',';
  }
  if (rec.j_norm_u) row += format_real(*rec.j_norm_u);
  row += ',';
  if (rec.j_norm_v) row += format_real(*rec.j_norm_v);
  row += ',';
  row += std::to_string(rec.picard_iters);
  return row;
}

std::vector<DiagnosticsRecord> read_diagnostics(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_failure, "cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line))
    throw Error(Errc::malformed_file, path.string() + ": empty file");

  std::map<std::string, std::size_t, std::less<>> column;
  const auto header = csv::split(csv::trim(line));
  for (std::size_t i = 0; i < header.size(); ++i)
    column[std::string(csv::trim(header[i]))] = i;
  std::vector<std::size_t> idx;
  for (auto name : csv::split(kDiagnosticsHeader)) {
    const auto it = column.find(name);
    if (it == column.end())
      throw Error(Errc::missing_column,
                  path.string() + ": missing column '" + std::string(name) + "'");
    idx.push_back(it->second);
  }

  std::vector<DiagnosticsRecord> records;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (csv::trim(line).empty()) continue;
    const auto cols = csv::split(csv::trim(line));
    if (cols.size() != header.size())
      throw Error(Errc::malformed_file, path.string() + ":" +
                                            std::to_string(line_no) +
                                            ": wrong number of columns");
    try {
      DiagnosticsRecord r;
      double* reals[] = {&r.t,      &r.mass_u, &r.mass_v, &r.energy,
                         &r.linf_u, &r.linf_v, &r.l2p2_u, &r.l2p2_v};
      for (std::size_t k = 0; k < 8; ++k) *reals[k] = csv::parse_real(cols[idx[k]]);
      if (!csv::trim(cols[idx[8]]).empty()) r.j_norm_u = csv::parse_real(cols[idx[8]]);
      if (!csv::trim(cols[idx[9]]).empty()) r.j_norm_v = csv::parse_real(cols[idx[9]]);
      r.picard_iters = static_cast<int>(csv::parse_real(cols[idx[10]]));
      records.push_back(r);
    } catch (const Error& e) {
      throw Error(Errc::malformed_file,
                  path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return records;
}

std::vector<Sample> column_samples(const std::vector<DiagnosticsRecord>& records,
                                   const std::string& target) {
  double DiagnosticsRecord::*member = nullptr;
  if (target == "linf_u") member = &DiagnosticsRecord::linf_u;
  else if (target == "linf_v") member = &DiagnosticsRecord::linf_v;
  else if (target == "l2p2_u") member = &DiagnosticsRecord::l2p2_u;
  else if (target == "l2p2_v") member = &DiagnosticsRecord::l2p2_v;
  else throw Error(Errc::missing_column, "unknown fit target '" + target + "'");
  std::vector<Sample> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back({r.t, r.*member});
  return out;
}

namespace {

class FileLock {
 public:
  explicit FileLock(fs::path path) : path_(std::move(path)) {
    fd_ = ::open(path_.c_str(), O_CREAT | O_RDWR | O_CLOEXEC, 0644);
    if (fd_ < 0)
      throw Error(Errc::io_failure,
                  "cannot create lock " + path_.string() + ": " + std::strerror(errno));
    if (::flock(fd_, LOCK_EX | LOCK_NB) != 0) {
      ::close(fd_);
      throw Error(Errc::io_failure, "output " + path_.string() +
                                        " is locked by another run");
    }
  }
  ~FileLock() {
    ::unlink(path_.c_str());
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

 private:
  fs::path path_;
  int fd_ = -1;
};

class CsvSink final : public EvolutionSink {
 public:
  CsvSink(const fs::path& path, const fs::path& snapshot_dir, const Grid& grid)
      : out_(path, std::ios::binary | std::ios::trunc),
        path_(path), snapshot_dir_(snapshot_dir), grid_(grid) {
    if (!out_) throw Error(Errc::io_failure, "cannot open " + path.string());
    out_ << kDiagnosticsHeader << '\n';
  }

  void record(const DiagnosticsRecord& rec) override {
    records_.push_back(rec);
    out_ << format_record(rec) << '\n';
    if (!out_) throw Error(Errc::io_failure, "write failed: " + path_.string());
  }

  void step_done(std::size_t step, const StepReport& report) override {
    steps_ = step;
    max_iters_ = std::max(max_iters_, report.picard_iters);
    max_residual_ = std::max(max_residual_, report.linear_residual);
  }

  void snapshot(const FieldPair& state, std::size_t step) override {
    std::ostringstream name;
    name << "snapshot_" << std::setw(8) << std::setfill('0') << step << ".csv";
    write_snapshot(state, grid_, snapshot_dir_ / name.str());
  }

  void flush() { out_.flush(); }

  const std::vector<DiagnosticsRecord>& records() const { return records_; }
  std::size_t steps() const { return steps_; }
  int max_iters() const { return max_iters_; }
  double max_residual() const { return max_residual_; }

 private:
  std::ofstream out_;
  fs::path path_;
  fs::path snapshot_dir_;
  Grid grid_;
  std::vector<DiagnosticsRecord> records_;
  std::size_t steps_ = 0;
  int max_iters_ = 0;
  double max_residual_ = 0.0;
};

double relative_drift(const std::vector<DiagnosticsRecord>& records,
                      double DiagnosticsRecord::*member) {
  if (records.empty()) return 0.0;
  const double ref = records.front().*member;
  double worst = 0.0;
  for (const auto& r : records) worst = std::max(worst, std::abs(r.*member - ref));
  return ref != 0.0 ? worst / std::abs(ref) : worst;
}

}  // namespace

std::string format_summary(const RunConfig& config, const RunSummary& s) {
  std::ostringstream os;
  os << "# run summary\n";
  os << "initial = " << to_string(config.initial.kind);
  if (config.initial.kind == InitialKind::menyuk) os << " (menyuk-family)";
  os << '\n';
  os << "steps = " << s.steps << '\n';
  os << "records = " << s.records << '\n';
  os << "max_picard_iters = " << s.max_picard_iters << '\n';
  os << "max_linear_residual = " << format_real(s.max_linear_residual) << '\n';
  os << "mass_u_rel_drift = " << format_real(s.mass_u_drift) << '\n';
  os << "mass_v_rel_drift = " << format_real(s.mass_v_drift) << '\n';
  os << "energy_rel_drift = " << format_real(s.energy_drift) << '\n';
  if (!s.fits.empty()) os << "# fit target slope intercept r2 t_first t_last\n";
  for (const auto& f : s.fits) {
    if (f.fit) {
      os << "fit " << f.target << ' ' << format_real(f.fit->slope) << ' '
         << format_real(f.fit->intercept) << ' ' << format_real(f.fit->r_squared)
         << ' ' << format_real(f.fit->t_min) << ' ' << format_real(f.fit->t_max)
         << '\n';
    } else {
      os << "fit " << f.target << " failed: " << f.error << '\n';
    }
  }
  return os.str();
}

RunSummary run(const RunConfig& config, std::ostream& log) {
  log << "# effective configuration\n" << describe(config);

  const fs::path& diag_path = config.output.diagnostics_path;
  if (diag_path.has_parent_path()) fs::create_directories(diag_path.parent_path());
  FileLock lock(diag_path.string() + ".lock");

  const FieldPair initial = build(config.initial, config.grid);
  if (config.output.snapshot_every > 0)
    fs::create_directories(config.output.snapshot_dir);

  CsvSink sink(diag_path, config.output.snapshot_dir, config.grid);
  EvolveOptions options;
  options.sample_every = config.output.sample_every;
  options.snapshot_every = config.output.snapshot_every;
  options.j_order = config.output.j_norm_order;
  try {
    evolve(initial, config.scheme, config.grid, options, sink);
  } catch (...) {
    sink.flush();
    throw;
  }
  sink.flush();

  RunSummary summary;
  const auto& records = sink.records();
  summary.steps = sink.steps();
  summary.records = records.size();
  summary.max_picard_iters = sink.max_iters();
  summary.max_linear_residual = sink.max_residual();
  summary.mass_u_drift = relative_drift(records, &DiagnosticsRecord::mass_u);
  summary.mass_v_drift = relative_drift(records, &DiagnosticsRecord::mass_v);
  summary.energy_drift = relative_drift(records, &DiagnosticsRecord::energy);
  for (const auto& target : config.fit.targets) {
    TargetFit tf{target, std::nullopt, {}};
    try {
      tf.fit = fit_decay(column_samples(records, target), config.fit.t_min);
    } catch (const Error& e) {
      tf.error = e.what();
    }
    summary.fits.push_back(std::move(tf));
  }

  const std::string text = format_summary(config, summary);
  std::ofstream out(config.output.summary_path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out)
    throw Error(Errc::io_failure,
                "cannot write summary " + config.output.summary_path.string());
  log << text;
  return summary;
}

void report_error(const std::exception& e, std::ostream& err) {
  ErrorCategory category = ErrorCategory::usage;
  std::string code = "internal";
  if (const auto* ge = dynamic_cast<const Error*>(&e)) {
    category = ge->category();
    code = std::string(to_string(ge->code()));
  } else if (dynamic_cast<const fs::filesystem_error*>(&e)) {
    category = ErrorCategory::io;
    code = "io-failure";
  }
  std::string message = e.what();
  for (char& c : message)
    if (c == '"' || c == '\n') c = '\'';
  err << "error category=" << to_string(category) << " code=" << code
      << " exit=" << exit_code(category) << " message=\"" << message << "\"\n";
}

int run_experiment(const RunConfig& config, std::ostream& log, std::ostream& err) {
  try {
    run(config, log);
    return 0;
  } catch (const Error& e) {
    report_error(e, err);
    return exit_code(e.category());
  } catch (const fs::filesystem_error& e) {
    report_error(e, err);
    return exit_code(ErrorCategory::io);
  }
}

std::string fit_report(const fs::path& csv_path, double t_min,
                       const std::vector<std::string>& targets,
                       const std::optional<fs::path>& plot_dir) {
  const auto records = read_diagnostics(csv_path);
  std::ostringstream os;
  os << "# target slope intercept r2 t_first t_last\n";
  for (const auto& target : targets) {
    const auto samples = column_samples(records, target);
    const DecayFit fit = fit_decay(samples, t_min);
    os << target << ' ' << format_real(fit.slope) << ' '
       << format_real(fit.intercept) << ' ' << format_real(fit.r_squared) << ' '
       << format_real(fit.t_min) << ' ' << format_real(fit.t_max) << '\n';
    if (plot_dir) {
      fs::create_directories(*plot_dir);
      const fs::path file =
          *plot_dir / (csv_path.stem().string() + "." + target + ".dat");
      std::ofstream out(file, std::ios::binary | std::ios::trunc);
      out << "# t " << target << '\n';
      for (const auto& s : samples)
        out << format_real(s.t) << ' ' << format_real(s.value) << '\n';
      if (!out) throw Error(Errc::io_failure, "cannot write " + file.string());
    }
  }
  return os.str();
}

}  // namespace gnls
