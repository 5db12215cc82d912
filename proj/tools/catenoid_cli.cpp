#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "catenoid/error.hpp"
#include "catenoid/flux.hpp"
#include "catenoid/jacobi.hpp"
#include "catenoid/profile.hpp"
#include "catenoid/report_io.hpp"
#include "catenoid/spectral.hpp"
#include "catenoid/stability.hpp"
#include "criteria.hpp"

using namespace catenoid;
using nlohmann::json;

namespace {

constexpr int kUsage = 2;
constexpr int kNumerical = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string family = "euclid";
  int n = 2;
  double a = 1.0;
  std::optional<double> a_min, a_max;
  double a_step = 0.01;
  std::string interval;
  int grid = 0;  // 0: command default
  std::string format = "csv";
  std::string out;
  double tol = 1e-10;
  std::optional<double> alpha;
  bool mesh = false;
  int theta_steps = 24;
  int threads = 0;
  double tol_scale = 1.0;
  std::string filter;
  std::string command;
  std::string config_text;  // effective options, for the hash
};

FamilySpec family_spec(const RunConfig& c) {
  FamilySpec s{parse_family(c.family), c.n, c.a};
  validate(s);
  return s;
}

Tolerances tolerances(const RunConfig& c) { return {c.tol, c.tol, 1e-12}; }

std::pair<double, double> parse_interval(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("--interval expects LO:HI");
  auto number = [&](const std::string& part) {
    char* end = nullptr;
    const double x = std::strtod(part.c_str(), &end);
    if (part.empty() || *end != '\0') throw UsageError("cannot parse '" + part + "' in --interval");
    return x;
  };
  const double lo = number(text.substr(0, colon));
  const double hi = number(text.substr(colon + 1));
  if (!(lo < hi)) throw UsageError("--interval needs LO < HI");
  return {lo, hi};
}

// Sample points on [0, S] by default, or on the requested interval.
std::vector<double> sample_grid(const RunConfig& c, const FamilySpec& spec) {
  const int count = c.grid > 0 ? c.grid : 51;
  if (count < 2) throw UsageError("--grid needs at least 2 points");
  if (c.interval.empty()) return standard_grid(spec, count);
  const auto [lo, hi] = parse_interval(c.interval);
  std::vector<double> g(count);
  for (int i = 0; i < count; ++i) g[i] = lo + (hi - lo) * i / (count - 1);
  return g;
}

std::vector<double> a_range(const RunConfig& c) {
  if (!c.a_min || !c.a_max) throw UsageError("--a-min and --a-max are required");
  if (!(c.a_step > 0.0) || *c.a_min > *c.a_max || !(*c.a_min > 0.0)) {
    throw UsageError("empty or invalid a-range");
  }
  std::vector<double> out;
  const long steps = std::lround(std::floor((*c.a_max - *c.a_min) / c.a_step + 1e-9));
  for (long i = 0; i <= steps; ++i) out.push_back(*c.a_min + i * c.a_step);
  return out;
}

std::string config_hash(const RunConfig& c) { return hash_hex(fnv1a64(c.command + "\n" + c.config_text)); }

void emit(const RunConfig& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw UsageError("cannot open " + c.out);
  f << text;
}

void emit_table(const RunConfig& c, const Table& t, json extra = json::object()) {
  if (c.format == "json") {
    extra["config_hash"] = config_hash(c);
    extra["rows"] = to_json(t);
    emit(c, extra.dump(2) + "\n");
  } else {
    std::string text = to_csv(t, config_hash(c));
    for (const auto& [key, value] : extra.items()) {
      text += "# " + key + "=" + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
    }
    emit(c, text);
  }
}

void emit_json(const RunConfig& c, json j) {
  j["config_hash"] = config_hash(c);
  emit(c, j.dump(2) + "\n");
}

json real(double x) { return std::isfinite(x) ? json(x) : json(format_real(x)); }

int cmd_profile(const RunConfig& c) {
  const FamilySpec spec = family_spec(c);
  const Profile p = build_profile(spec);
  const auto grid = sample_grid(c, spec);
  Table t;
  if (!c.mesh) {
    t.columns = {"s", "radius", "height", "d_radius", "d_height"};
    for (double s : grid) {
      const ProfilePoint q = p.at(s);
      t.rows.push_back({s, q.radius, q.height, q.d_radius, q.d_height});
    }
  } else {
    const int dim = static_cast<int>(embed(p, 0.0, 0.0).size());
    t.columns = {"s", "theta"};
    for (int i = 0; i < dim; ++i) t.columns.push_back("x" + std::to_string(i + 1));
    for (double s : grid) {
      for (int j = 0; j < c.theta_steps; ++j) {
        const double theta = 2.0 * M_PI * j / c.theta_steps;
        std::vector<double> row{s, theta};
        for (double x : embed(p, s, theta)) row.push_back(x);
        t.rows.push_back(std::move(row));
      }
    }
  }
  emit_table(c, t, {{"family", describe(spec)}, {"T", format_real(p.T())}});
  return 0;
}

int cmd_jacobi(const RunConfig& c) {
  const FamilySpec spec = family_spec(c);
  const JacobiPair J = jacobi_pair(spec);
  std::optional<CombinedField> w;
  if (c.alpha) w = combined_field(spec, *c.alpha);
  Table t;
  t.columns = {"s", "v", "e", "e_normalized", "weight"};
  if (w) t.columns.push_back("w");
  for (double s : sample_grid(c, spec)) {
    std::vector<double> row{s, J.v(s), J.e(s), J.normalized_e(s), J.weight(s)};
    if (w) row.push_back((*w)(s));
    t.rows.push_back(std::move(row));
  }
  emit_table(c, t, {{"family", describe(spec)}});
  return 0;
}

int cmd_stability(const RunConfig& c) {
  const FamilySpec spec = family_spec(c);
  json j = to_json(classify(spec, tolerances(c)));
  if (c.alpha) {
    const DomainSpec d = maximal_domain(spec, *c.alpha);
    j["maximal_domain"] = {{"lower", real(d.lower)}, {"upper", real(d.upper)}};
  }
  emit_json(c, j);
  return 0;
}

int cmd_scan(const RunConfig& c) {
  const Family fam = parse_family(c.family);
  if (fam != Family::H3Minimal && fam != Family::H2xR && fam != Family::HnxR) {
    throw UsageError("scan needs a family with a tail integral (h3min, h2xr, hnxr)");
  }
  const auto as = a_range(c);
  std::vector<std::vector<double>> rows(as.size());
  std::vector<std::string> failures(as.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < as.size(); i = next++) {
      try {
        const FamilySpec spec{fam, c.n, as[i]};
        validate(spec);
        const double E = tail_integral(spec, tolerances(c)).value;
        const Heights h = heights(spec, tolerances(c));
        rows[i] = {as[i], E, h.V, h.X ? *h.X : NAN, E > 0.0 ? 1.0 : 0.0};
      } catch (const std::exception& e) {
        failures[i] = e.what();
      }
    }
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned count = c.threads > 0 ? c.threads : hw;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(count, as.size()); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (const auto& f : failures) {
    if (!f.empty()) throw Error(ErrorKind::TolExceeded, f);
  }

  Table t{{"a", "E0", "V0", "X0", "index"}, rows};
  json brackets = json::array();
  std::string text;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if ((rows[i - 1][1] > 0.0) != (rows[i][1] > 0.0)) {
      json b{{"lo", rows[i - 1][0]}, {"hi", rows[i][0]}};
      if (fam == Family::H3Minimal) b["root"] = h3_critical_neck(rows[i - 1][0], rows[i][0]);
      brackets.push_back(b);
      std::cerr << "E0 changes sign in [" << format_real(rows[i - 1][0]) << ", " << format_real(rows[i][0]) << "]";
      if (b.contains("root")) std::cerr << ", root " << format_real(b["root"].get<double>());
      std::cerr << "\n";
    }
  }
  if (brackets.empty()) std::cerr << "E0 keeps its sign on the range\n";
  emit_table(c, t, {{"sign_changes", brackets}});
  return 0;
}

int cmd_spectrum(const RunConfig& c) {
  const FamilySpec spec = family_spec(c);
  if (c.interval.empty()) throw UsageError("spectrum needs --interval LO:HI");
  const auto [lo, hi] = parse_interval(c.interval);
  const int N = c.grid > 0 ? c.grid : 4001;
  const SLProblem prob = assemble(spec, lo, hi, N);
  const SpectralResult r = lambda1(prob);
  const int index = index_on_interval(prob);
  const bool truncated = std::isinf(lo) || std::isinf(hi);
  const double sensitivity = truncated ? truncation_sensitivity(spec, lo, hi, N) : 0.0;
  if (c.format == "json") {
    emit_json(c, {{"family", describe(spec)},
                  {"lo", real(prob.lo)},
                  {"hi", real(prob.hi)},
                  {"N", N},
                  {"lambda1", r.lambda1},
                  {"index", index},
                  {"truncation", prob.truncation ? real(*prob.truncation) : json(nullptr)},
                  {"truncation_sensitivity", sensitivity},
                  {"recovery_mismatch", prob.recovery_mismatch}});
  } else {
    Table t{{"lo", "hi", "N", "lambda1", "index", "truncation", "truncation_sensitivity", "recovery_mismatch"},
            {{prob.lo, prob.hi, double(N), r.lambda1, double(index), prob.truncation.value_or(NAN), sensitivity,
              prob.recovery_mismatch}}};
    emit_table(c, t);
  }
  return 0;
}

int cmd_envelope(const RunConfig& c) {
  if (c.n < 2) throw UsageError("--n must be at least 2");
  const double slope = envelope_cone(c.n);
  const FamilySpec unit{Family::EuclidCatenoid, c.n, 1.0};
  const double z1 = *variation_zero(unit);
  const double r1 = build_profile(unit).radius(z1);
  RunConfig range = c;
  if (!range.a_min) range.a_min = 0.25;
  if (!range.a_max) range.a_max = 3.0;
  if (!c.a_min && !c.a_max) range.a_step = 0.25;
  Table t{{"a", "z", "radius", "height"}, {}};
  // Touch points scale with a: (a r1, a z1) all lie on the cone.
  for (double a : a_range(range)) t.rows.push_back({a, a * z1, a * r1, a * z1});
  emit_table(c, t, {{"n", c.n}, {"slope", slope}});
  return 0;
}

int cmd_flux(const RunConfig& c) {
  const FamilySpec spec = family_spec(c);
  if (!c.interval.empty() && c.grid == 0) {
    const auto [lo, hi] = parse_interval(c.interval);
    const FluxBalance b = boundary_flux_balance(spec, lo, hi);
    const json j{{"family", describe(spec)}, {"lo", lo},           {"hi", hi},
                 {"boundary", b.boundary},    {"interior", b.interior}, {"residual", b.residual}};
    if (c.format == "json") {
      emit_json(c, j);
    } else {
      emit_table(c, {{"lo", "hi", "boundary", "interior", "residual"}, {{lo, hi, b.boundary, b.interior, b.residual}}});
    }
    return 0;
  }
  const FluxTrace tr = flux_constancy(spec, sample_grid(c, spec));
  Table t{{"s", "first_integral"}, {}};
  for (const auto& [s, v] : tr.samples) t.rows.push_back({s, v});
  emit_table(c, t, {{"constant", tr.constant_estimate}, {"max_rel_deviation", tr.max_rel_deviation}});
  return 0;
}

int cmd_verify(const RunConfig& c) {
  acceptance::Options opt;
  opt.tol_scale = c.tol_scale;
  opt.filter = c.filter;
  opt.threads = c.threads;
  const auto results = acceptance::run_acceptance(opt);
  int failed = 0;
  std::ostringstream text;
  for (const auto& r : results) {
    text << acceptance::format_outcome(r) << "\n";
    failed += r.pass ? 0 : 1;
  }
  text << results.size() - failed << "/" << results.size() << " criteria passed\n";
  emit(c, text.str());
  if (results.empty()) {
    std::cerr << "no criterion matches the filter\n";
    return kNumerical;
  }
  return failed == 0 ? 0 : kNumerical;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::OutOfDomain:
    case ErrorKind::UnsupportedFamily:
    case ErrorKind::IdenticalCurves:
      return kUsage;
    default:
      return kNumerical;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Catenoids and catenoid cousins: profiles, Jacobi fields, stability and spectra"};
  app.set_config("--config", "", "Flat key=value file; command-line flags take precedence");
  app.require_subcommand(1);

  RunConfig c;
  app.add_option("--family", c.family, "euclid | h2xr | hnxr | h3min | cousin")->capture_default_str();
  app.add_option("--n", c.n, "Surface dimension (euclid, hnxr)")->capture_default_str();
  app.add_option("--a", c.a, "Neck parameter")->capture_default_str();
  app.add_option("--a-min", c.a_min, "Start of the a-range");
  app.add_option("--a-max", c.a_max, "End of the a-range");
  app.add_option("--a-step", c.a_step, "Step of the a-range")->capture_default_str();
  app.add_option("--interval", c.interval, "Parameter interval LO:HI (inf allowed; use --interval=-inf:inf)");
  app.add_option("--grid", c.grid, "Number of grid points");
  app.add_option("--format", c.format, "csv | json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  app.add_option("--out", c.out, "Output path (stdout when absent)");
  app.add_option("--tol", c.tol, "Quadrature tolerance")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--alpha", c.alpha, "Left end -alpha of a stable domain");
  app.add_flag("--mesh", c.mesh, "Emit embedded surface points instead of the profile");
  app.add_option("--theta-steps", c.theta_steps, "Rotation samples for --mesh")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--threads", c.threads, "Worker threads (0: all cores)")->capture_default_str();
  app.add_option("--tol-scale", c.tol_scale, "Multiplier on every acceptance threshold")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--filter", c.filter, "Run only acceptance criteria matching this text");

  struct Command {
    const char* name;
    const char* help;
    int (*run)(const RunConfig&);
  };
  const Command commands[] = {
      {"profile", "Profile curve table, or embedded points with --mesh", cmd_profile},
      {"jacobi", "Vertical and variation Jacobi fields", cmd_jacobi},
      {"stability", "Index, zeros, Lindelof verdict and certificates (JSON)", cmd_stability},
      {"scan", "Tail integral and heights over an a-range", cmd_scan},
      {"spectrum", "Least Dirichlet eigenvalue on an interval", cmd_spectrum},
      {"envelope", "Cone enveloping the Euclidean catenoids", cmd_envelope},
      {"flux", "First integral along the profile, or boundary balance on an interval", cmd_flux},
      {"verify", "Run the acceptance suite", cmd_verify},
  };
  for (const auto& cmd : commands) app.add_subcommand(cmd.name, cmd.help)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  c.config_text = app.config_to_str(true, false);
  try {
    for (const auto& cmd : commands) {
      if (app.got_subcommand(cmd.name)) {
        c.command = cmd.name;
        return cmd.run(c);
      }
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumerical;
  }
  return kUsage;
}
