#include "kroncave/cli.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kroncave/closed_forms.hpp"
#include "kroncave/coefficients.hpp"
#include "kroncave/conjectures.hpp"
#include "kroncave/errors.hpp"
#include "kroncave/store.hpp"
#include "kroncave/verify.hpp"

namespace kroncave {

namespace {

struct Options {
  std::string lambda = "-", mu = "-", nu = "-", rho;
  std::vector<std::string> parts;
  std::optional<int> d;
  int k_max = 2;
  int max_boxes = 6;
  int jobs = 1;
  int chain_length = 3;
  std::string mode = "kronecker";
  std::string target;
  std::optional<std::string> out_path;
  std::optional<std::string> cache;
  bool cache_all = false;
  bool no_cache = false;
  bool stretch = false;
  bool trace = false;
  bool no_timing = false;
  int window = 2;
  std::optional<int> cap;
  int a = 0, b = 0, c = 0, gd = 0, x = 0, y = 0;
  int j = 0, k = 0;
};

// A usage problem detected after CLI11 accepted the arguments.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Partition parse_flag(const std::string& flag, const std::string& text) {
  try {
    return parse_partition_text(text);
  } catch (const ParseError& e) {
    throw ParseError(flag + " '" + text + "': " + e.what(), e.position());
  }
}

void add_engine_flags(CLI::App* sub, Options& o) {
  sub->add_option("--window", o.window, "consecutive equal values accepted as stable")
      ->check(CLI::PositiveNumber);
  sub->add_option("--cap", o.cap, "largest d tried is the start plus this offset")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--cache", o.cache, "cache file (default $KRONCAVE_CACHE or ./kroncave-cache.jsonl)");
  sub->add_flag("--cache-all", o.cache_all, "also cache kron and lr values");
  sub->add_flag("--no-cache", o.no_cache, "do not read or write the cache file");
  sub->add_option("--out", o.out_path, "write output to this file instead of stdout");
}

void add_triple(CLI::App* sub, Options& o, bool with_nu) {
  sub->add_option("--lambda", o.lambda, "partition, e.g. 3,3,1,1 or -")->required();
  sub->add_option("--mu", o.mu, "partition")->required();
  if (with_nu) sub->add_option("--nu", o.nu, "partition")->required();
}

class Session {
 public:
  Session(const Options& o, std::ostream& err) {
    StabilizationConfig config;
    config.window = o.window;
    config.cap_offset = o.cap;
    engine_ = std::make_unique<Engine>(config);
    if (!o.no_cache) {
      store_ = std::make_unique<JsonlStore>(resolve_cache_path(o.cache), engine_->version(), &err);
      engine_->attach_cache(store_.get(), o.cache_all);
    }
  }
  const Engine& engine() const { return *engine_; }

 private:
  std::unique_ptr<Engine> engine_;
  std::unique_ptr<JsonlStore> store_;
};

// Bad input as opposed to a failed computation.
bool is_usage_error(const std::exception& e) {
  return dynamic_cast<const UsageError*>(&e) || dynamic_cast<const ParseError*>(&e) ||
         dynamic_cast<const InvalidPartition*>(&e) || dynamic_cast<const PadTooSmall*>(&e) ||
         dynamic_cast<const NotIntegral*>(&e) || dynamic_cast<const SizeMismatch*>(&e) ||
         dynamic_cast<const std::invalid_argument*>(&e);
}

int report_exit(const ViolationReport& r) { return r.passed() ? exit_ok : exit_violations; }

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

void print_rep(std::ostream& os, const std::map<Partition, ExactInt>& coeffs) {
  for (const auto& [nu, c] : coeffs) os << to_string(nu) << ' ' << c << '\n';
}

int run_check(const Options& o, std::ostream& os, std::ostream& err) {
  const Partition lambda = parse_flag("--lambda", o.lambda);
  const Partition mu = parse_flag("--mu", o.mu);
  const std::string name = [&] {
    std::string s = o.target;
    std::replace(s.begin(), s.end(), '_', '-');
    return s;
  }();

  if (name == "dim-log-concavity") {
    const int d = o.d.value_or(std::max(lambda.size() + lambda.part(0), mu.size() + mu.part(0)));
    const auto r = check_dim_log_concavity(lambda, mu, d);
    nlohmann::ordered_json j;
    j["subject"] = "dim-log-concavity";
    j["lambda"] = to_string(lambda);
    j["mu"] = to_string(mu);
    j["d"] = d;
    j["midpoint"] = to_string(r.midpoint);
    j["lhs"] = to_decimal(r.lhs);
    j["rhs"] = to_decimal(r.rhs);
    j["holds"] = r.holds;
    os << dump(j);
    return r.holds ? exit_ok : exit_violations;
  }

  Session session(o, err);
  const Engine& engine = session.engine();
  if (name == "saturation") {
    SaturationMode mode;
    if (o.mode == "kronecker") {
      mode = SaturationMode::kronecker;
    } else if (o.mode == "reduced") {
      mode = SaturationMode::reduced;
    } else {
      throw UsageError("--mode must be kronecker or reduced");
    }
    const Partition nu = parse_flag("--nu", o.nu);
    nlohmann::ordered_json j;
    j["subject"] = "saturation " + o.mode;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& [k, nonzero] : check_saturation(engine, lambda, mu, nu, o.k_max, mode)) {
      rows.push_back({{"k", k}, {"nonzero", nonzero}});
    }
    j["values"] = std::move(rows);
    os << dump(j);
    return exit_ok;
  }

  ViolationReport report;
  if (name == "midpoint-reduced") {
    report = check_midpoint_reduced(engine, lambda, mu);
  } else if (name == "midpoint-kronecker") {
    report = check_midpoint_kronecker(engine, lambda, mu);
  } else if (name == "sort") {
    report = check_sort_conjecture(engine, lambda, mu);
  } else if (name == "schur-lr") {
    report = check_schur_log_concavity(engine, lambda, mu);
  } else if (name == "chain") {
    std::vector<Partition> parts;
    for (const auto& p : o.parts) parts.push_back(parse_flag("--part", p));
    if (parts.empty()) throw UsageError("chain needs at least one --part");
    report = check_chain_conjecture(engine, parts);
  } else if (name == "murnaghan-littlewood") {
    report = check_murnaghan_littlewood(engine, o.max_boxes);
  } else {
    throw UsageError("unknown check '" + o.target + "'");
  }
  os << dump(to_json(report, !o.no_timing));
  return report_exit(report);
}

int dispatch(const CLI::App& app, const Options& o, std::ostream& os, std::ostream& err) {
  auto used = [&](const char* name) { return app.got_subcommand(name); };

  if (used("char")) {
    CharacterTable table;
    os << table.character(parse_flag("--lambda", o.lambda), parse_flag("--rho", o.rho)) << '\n';
    return exit_ok;
  }
  if (used("dim")) {
    Partition lambda = parse_flag("--lambda", o.lambda);
    if (o.d) lambda = pad(lambda, *o.d);
    os << syt_count(lambda) << '\n';
    return exit_ok;
  }
  if (used("closed-form")) {
    const auto* cf = app.get_subcommand("closed-form");
    if (cf->got_subcommand("gamma")) {
      os << gamma({o.a, o.b, o.c, o.gd, o.x, o.y}) << '\n';
    } else if (cf->got_subcommand("two-row")) {
      os << reduced_two_row(o.j, o.k, parse_flag("--nu", o.nu)) << '\n';
    } else {
      os << reduced_hook(o.j, o.k, parse_flag("--nu", o.nu)) << '\n';
    }
    return exit_ok;
  }
  if (used("check")) return run_check(o, os, err);

  Session session(o, err);
  const Engine& engine = session.engine();
  if (used("kron") || used("lr") || used("redkron")) {
    const Partition lambda = parse_flag("--lambda", o.lambda);
    const Partition mu = parse_flag("--mu", o.mu);
    const Partition nu = parse_flag("--nu", o.nu);
    if (used("kron")) {
      os << engine.kronecker(lambda, mu, nu) << '\n';
    } else if (used("lr")) {
      os << engine.lr(lambda, mu, nu) << '\n';
    } else if (o.trace) {
      const auto t = engine.reduced_kronecker_trace(lambda, mu, nu);
      for (std::size_t i = 0; i < t.values.size(); ++i) {
        os << "d=" << t.first_d + static_cast<int>(i) << ' ' << t.values[i] << '\n';
      }
      os << t.stable_value << '\n';
    } else {
      os << engine.reduced_kronecker(lambda, mu, nu) << '\n';
    }
    return exit_ok;
  }
  if (used("tensor")) {
    print_rep(os, engine.tensor_decompose(parse_flag("--lambda", o.lambda), parse_flag("--mu", o.mu)).coeffs());
    return exit_ok;
  }
  if (used("redtensor")) {
    print_rep(os, engine.reduced_tensor_decompose(parse_flag("--lambda", o.lambda), parse_flag("--mu", o.mu))
                      .coeffs());
    return exit_ok;
  }
  if (used("scan")) {
    const auto family = parse_family(o.target);
    if (!family) throw UsageError("unknown scan family '" + o.target + "'");
    ScanRequest request;
    request.family = *family;
    request.max_boxes = o.max_boxes;
    request.chain_length = o.chain_length;
    request.jobs = o.jobs;
    const auto report = scan(engine, request);
    os << dump(to_json(report, !o.no_timing));
    return report_exit(report);
  }
  if (used("verify")) {
    if (o.target != "paper") throw UsageError("verify supports only 'paper'");
    VerifyOptions options;
    options.stretch = o.stretch;
    options.jobs = o.jobs;
    const auto checks = verify_golden(engine, options);
    const auto j = to_json(checks);
    os << dump(j);
    return j["passed"].get<bool>() ? exit_ok : exit_violations;
  }
  throw UsageError("no subcommand given");
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Kronecker, reduced Kronecker and Littlewood-Richardson coefficients", "kroncave"};
  app.require_subcommand(1);

  for (const char* name : {"kron", "lr", "redkron"}) {
    auto* sub = app.add_subcommand(name, std::string(name) + " coefficient of (lambda, mu; nu)");
    add_triple(sub, o, true);
    add_engine_flags(sub, o);
    if (std::string(name) == "redkron") sub->add_flag("--trace", o.trace, "print the padded sequence");
  }
  for (const char* name : {"tensor", "redtensor"}) {
    const bool stable = std::string(name) == "redtensor";
    auto* sub = app.add_subcommand(name, std::string("decompose the ") + (stable ? "stable" : "S_n") +
                                             " tensor product, one 'nu coefficient' per line");
    add_triple(sub, o, false);
    add_engine_flags(sub, o);
  }
  {
    auto* sub = app.add_subcommand("char", "character value chi^lambda(rho)");
    sub->add_option("--lambda", o.lambda)->required();
    sub->add_option("--rho", o.rho, "cycle type")->required();
    sub->add_option("--out", o.out_path);
  }
  {
    auto* sub = app.add_subcommand("dim", "number of standard tableaux of lambda, or of lambda[d]");
    sub->add_option("--lambda", o.lambda)->required();
    sub->add_option("--d", o.d, "pad to a partition of d");
    sub->add_option("--out", o.out_path);
  }
  {
    auto* cf = app.add_subcommand("closed-form", "closed-form evaluations");
    cf->require_subcommand(1);
    auto* g = cf->add_subcommand("gamma", "count of points of a box reachable from (x, y)");
    g->add_option("--a", o.a)->required();
    g->add_option("--b", o.b)->required();
    g->add_option("--c", o.c)->required();
    g->add_option("--d", o.gd)->required();
    g->add_option("--x", o.x)->required();
    g->add_option("--y", o.y)->required();
    for (const char* name : {"two-row", "hook"}) {
      auto* sub = cf->add_subcommand(name, std::string("reduced coefficient, ") +
                                               (std::string(name) == "hook" ? "two columns" : "two rows"));
      sub->add_option("--j", o.j)->required()->check(CLI::NonNegativeNumber);
      sub->add_option("--k", o.k)->required()->check(CLI::NonNegativeNumber);
      sub->add_option("--nu", o.nu)->required();
    }
    for (auto* sub : cf->get_subcommands({})) sub->add_option("--out", o.out_path);
  }
  {
    auto* sub = app.add_subcommand("check", "run one check; exit 1 when violations are found");
    sub->add_option("name", o.target,
                    "midpoint-reduced | midpoint-kronecker | sort | schur-lr | chain | dim-log-concavity | "
                    "saturation | murnaghan-littlewood")
        ->required();
    sub->add_option("--lambda", o.lambda);
    sub->add_option("--mu", o.mu);
    sub->add_option("--nu", o.nu);
    sub->add_option("--part", o.parts, "chain input, repeatable");
    sub->add_option("--d", o.d, "padded size for dim-log-concavity");
    sub->add_option("--k-max", o.k_max)->check(CLI::PositiveNumber);
    sub->add_option("--mode", o.mode, "kronecker | reduced");
    sub->add_option("--max-boxes", o.max_boxes)->check(CLI::NonNegativeNumber);
    sub->add_flag("--no-timing", o.no_timing, "omit elapsedMillis");
    add_engine_flags(sub, o);
  }
  {
    auto* sub = app.add_subcommand("scan", "exhaustive check over all inputs up to a box budget");
    sub->add_option("family", o.target, "midpoint-reduced | sort | chain | midpoint-kronecker | schur-lr")
        ->required();
    sub->add_option("--max-boxes", o.max_boxes)->check(CLI::NonNegativeNumber);
    sub->add_option("--chain-length", o.chain_length)->check(CLI::PositiveNumber);
    sub->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);
    sub->add_flag("--no-timing", o.no_timing, "omit elapsedMillis");
    add_engine_flags(sub, o);
  }
  {
    auto* sub = app.add_subcommand("verify", "recompute the reference values");
    sub->add_option("suite", o.target, "paper")->required();
    sub->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);
    sub->add_flag("--stretch", o.stretch, "also run the slow nonzero side of the scaled triple");
    add_engine_flags(sub, o);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  std::ostringstream buffer;
  int code = exit_ok;
  try {
    code = dispatch(app, o, buffer, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return is_usage_error(e) ? exit_usage : exit_failure;
  }

  if (o.out_path) {
    std::ofstream file(*o.out_path);
    if (!(file << buffer.str())) {
      err << "error: cannot write " << *o.out_path << "\n";
      return exit_failure;
    }
  } else {
    out << buffer.str();
  }
  return code;
}

}  // namespace kroncave
