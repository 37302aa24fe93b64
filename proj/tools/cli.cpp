#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "checks.hpp"
#include "zetafast/zetafast.hpp"

namespace zetafast::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string number(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// Flat JSON object with fields in insertion order.
class JsonObject {
 public:
  JsonObject& add(const std::string& key, double x) { return raw(key, number(x)); }
  JsonObject& add(const std::string& key, std::int64_t x) { return raw(key, std::to_string(x)); }
  JsonObject& add(const std::string& key, int x) { return raw(key, std::to_string(x)); }
  JsonObject& add(const std::string& key, bool x) { return raw(key, x ? "true" : "false"); }
  JsonObject& add(const std::string& key, const char* x) { return raw(key, quote(x)); }
  JsonObject& add(const std::string& key, const std::string& x) { return raw(key, quote(x)); }
  JsonObject& add(const std::string& key, ComplexValue z) {
    return raw(key, "{\"re\": " + number(z.real()) + ", \"im\": " + number(z.imag()) + "}");
  }
  JsonObject& raw(const std::string& key, const std::string& json) {
    fields_.emplace_back(key, json);
    return *this;
  }
  std::string str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < fields_.size(); ++i) {
      if (i) s += ", ";
      s += quote(fields_[i].first) + ": " + fields_[i].second;
    }
    return s + "}";
  }

 private:
  static std::string quote(const std::string& x) {
    std::string s = "\"";
    for (char c : x) {
      if (c == '"' || c == '\\') s += '\\';
      s += c;
    }
    return s + "\"";
  }
  std::vector<std::pair<std::string, std::string>> fields_;
};

PrecisionPolicy precision_from_env() {
  const char* env = std::getenv("ZETAFAST_PRECISION");
  if (env == nullptr || *env == '\0') return PrecisionPolicy::automatic;
  const std::string value(env);
  if (value == "hardware") return PrecisionPolicy::hardware;
  if (value == "extended") return PrecisionPolicy::extended;
  throw UsageError("ZETAFAST_PRECISION must be 'hardware' or 'extended', got '" + value + "'");
}

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw UsageError(std::string("bad number in ") + what + ": '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError(std::string(what) + " is empty");
  return out;
}

void print_result(std::ostream& out, const EvalResult& r, bool json) {
  if (json) {
    JsonObject o;
    o.add("value", r.value)
        .add("error_bound", r.error_bound)
        .add("certified", r.certified)
        .add("summands_used", r.summands_used)
        .add("max_cancellation_ratio", r.max_cancellation_ratio)
        .add("backend", to_string(r.backend));
    out << o.str() << '\n';
    return;
  }
  out << "value                  " << number(r.value.real()) << " + " << number(r.value.imag())
      << "i\n"
      << "error_bound            " << number(r.error_bound) << '\n'
      << "certified              " << (r.certified ? "true" : "false") << '\n'
      << "summands_used          " << r.summands_used << '\n'
      << "max_cancellation_ratio " << number(r.max_cancellation_ratio) << '\n'
      << "backend                " << to_string(r.backend) << '\n';
}

EvalResult oracle_result(ComplexValue s, int order) {
  EvalResult r;
  r.value = order == 0 ? zeta_em(s) : zeta_em_derivative(s, order);
  const auto cfg = default_em_config(s);
  r.error_bound = cfg.self_check_tolerance * std::max(1.0, std::abs(r.value));
  r.certified = false;
  r.summands_used = 2 * cfg.cutoff_terms;
  r.max_cancellation_ratio = 0.0;
  r.backend = Backend::extended;
  return r;
}

struct EvalArgs {
  double sigma = 0.0;
  double tau = 0.0;
  double delta = 1e-8;
  std::string mode = "certified";
  std::string engine = "zetafast";
  bool json = false;
};

void add_eval_options(CLI::App* cmd, EvalArgs& a) {
  cmd->add_option("--sigma", a.sigma, "real part of s")->required();
  cmd->add_option("--tau", a.tau, "imaginary part of s")->required();
  cmd->add_option("--delta", a.delta, "absolute accuracy")->required();
  cmd->add_option("--mode", a.mode)->check(CLI::IsMember({"certified", "heuristic"}));
  cmd->add_option("--engine", a.engine)->check(CLI::IsMember({"zetafast", "oracle"}));
  cmd->add_flag("--json", a.json, "machine-readable output");
}

int run_selftest(std::ostream& out) {
  bool all = true;
  for (const auto& check : checks::all_checks()) {
    const auto r = check();
    all = all && r.pass;
    out << checks::format(r) << std::endl;
  }
  out << (all ? "selftest passed" : "selftest FAILED") << '\n';
  return all ? kExitOk : kExitFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zeta function, derivatives and Dirichlet L-functions to a requested accuracy"};
  app.require_subcommand(1);

  EvalArgs zeta_args;
  auto* zeta_cmd = app.add_subcommand("zeta", "evaluate zeta(sigma + i tau)");
  add_eval_options(zeta_cmd, zeta_args);

  EvalArgs deriv_args;
  int order = 1;
  auto* deriv_cmd = app.add_subcommand("zeta-deriv", "first or second derivative of zeta");
  add_eval_options(deriv_cmd, deriv_args);
  deriv_cmd->add_option("--order", order)->required()->check(CLI::IsMember({1, 2}));

  double l_sigma = 0.0, l_tau = 0.0, l_delta = 1e-8;
  int l_q = 0, l_index = 0;
  bool l_json = false;
  auto* lfun_cmd = app.add_subcommand("lfun", "Dirichlet L-function of a primitive character");
  lfun_cmd->add_option("--q", l_q, "modulus")->required();
  lfun_cmd->add_option("--char-index", l_index, "index in the enumeration of characters mod q")
      ->required();
  lfun_cmd->add_option("--sigma", l_sigma)->required();
  lfun_cmd->add_option("--tau", l_tau)->required();
  lfun_cmd->add_option("--delta", l_delta)->required();
  lfun_cmd->add_flag("--json", l_json);

  double p_sigma = 0.0, p_tau = 0.0, p_delta = 0.05;
  std::string p_mode = "certified";
  bool p_json = false;
  auto* params_cmd = app.add_subcommand("params", "show the evaluation parameters");
  params_cmd->add_option("--sigma", p_sigma)->required();
  params_cmd->add_option("--tau", p_tau)->required();
  params_cmd->add_option("--delta", p_delta)->required();
  params_cmd->add_option("--mode", p_mode)->check(CLI::IsMember({"certified", "heuristic"}));
  params_cmd->add_flag("--json", p_json);

  double t0 = 0.0, t1 = 0.0, step = 0.05, scan_delta = 1e-8;
  std::string scan_engine = "zetafast";
  unsigned scan_workers = 0;
  bool scan_json = false;
  auto* scan_cmd = app.add_subcommand("scan", "sign changes of Hardy's Z on [t0, t1]");
  scan_cmd->add_option("--t0", t0)->required();
  scan_cmd->add_option("--t1", t1)->required();
  scan_cmd->add_option("--step", step);
  scan_cmd->add_option("--delta", scan_delta);
  scan_cmd->add_option("--engine", scan_engine)->check(CLI::IsMember({"zetafast", "oracle"}));
  scan_cmd->add_option("--workers", scan_workers, "0 = all cores");
  scan_cmd->add_flag("--json", scan_json);

  std::string tau_list, delta_list, sigma_list = "0,0.5,1,1.5,2", csv_path = "-";
  unsigned bench_workers = 0;
  double oracle_limit = 1e5;
  auto* bench_cmd = app.add_subcommand("bench", "summand counts against the bound S");
  bench_cmd->add_option("--tau-list", tau_list)->required();
  bench_cmd->add_option("--delta-list", delta_list)->required();
  bench_cmd->add_option("--sigma-list", sigma_list);
  bench_cmd->add_option("--csv", csv_path, "output file, '-' for stdout");
  bench_cmd->add_option("--workers", bench_workers, "0 = all cores");
  bench_cmd->add_option("--oracle-tau-limit", oracle_limit);

  auto* selftest_cmd = app.add_subcommand("selftest", "run the acceptance checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (zeta_cmd->parsed() || deriv_cmd->parsed()) {
      const bool deriv = deriv_cmd->parsed();
      const EvalArgs& a = deriv ? deriv_args : zeta_args;
      const PrecisionPolicy precision = precision_from_env();
      const ComplexValue s(a.sigma, a.tau);
      EvalResult r;
      if (a.engine == "oracle") {
        r = oracle_result(s, deriv ? order : 0);
      } else if (deriv) {
        r = zeta_derivative(s, order, a.delta, precision);
      } else {
        r = zeta(s, a.delta, a.mode == "heuristic" ? Mode::heuristic : Mode::certified, precision);
      }
      print_result(out, r, a.json);
    } else if (lfun_cmd->parsed()) {
      const auto chi = character(l_q, l_index);
      print_result(out, l_function({l_sigma, l_tau}, chi, l_delta, precision_from_env()), l_json);
    } else if (params_cmd->parsed()) {
      const Mode mode = p_mode == "heuristic" ? Mode::heuristic : Mode::certified;
      const EvalParams p = derive_params(p_sigma, p_tau, p_delta, mode);
      const bool pre = speed_precondition(std::abs(p_tau), p_delta);
      const double bound = summand_bound_formula(p_sigma, std::abs(p_tau), p_delta);
      JsonObject o;
      o.add("x0", p.x0)
          .add("v", p.v)
          .add("N", p.N)
          .add("M", p.M)
          .add("lambda", p.lambda)
          .add("d_terms", p.d_terms())
          .add("delta", p.delta)
          .add("certified", p.certified)
          .add("precondition_ok", pre)
          .add("summands_bound", bound);
      if (p_json) {
        out << o.str() << '\n';
      } else {
        out << "x0=" << number(p.x0) << " v=" << p.v << " N=" << number(p.N) << " M=" << p.M
            << " lambda=" << number(p.lambda) << " d_terms=" << p.d_terms()
            << " certified=" << (p.certified ? "true" : "false")
            << " precondition_ok=" << (pre ? "true" : "false")
            << " summands_bound=" << number(bound) << '\n';
      }
    } else if (scan_cmd->parsed()) {
      const Engine engine = scan_engine == "oracle" ? Engine::oracle : Engine::zetafast;
      const auto zeros = find_zeros(t0, t1, scan_delta, step, engine, scan_workers);
      if (scan_json) {
        std::string list = "[";
        for (std::size_t i = 0; i < zeros.size(); ++i) {
          JsonObject z;
          z.add("t", zeros[i].t)
              .add("t_lo", zeros[i].bracket.t_lo)
              .add("t_hi", zeros[i].bracket.t_hi)
              .add("z_lo", zeros[i].bracket.z_lo)
              .add("z_hi", zeros[i].bracket.z_hi);
          list += (i ? ", " : "") + z.str();
        }
        JsonObject o;
        o.add("count", static_cast<std::int64_t>(zeros.size())).raw("zeros", list + "]");
        out << o.str() << '\n';
      } else {
        for (const auto& z : zeros) out << number(z.t) << '\n';
        out << zeros.size() << " zeros\n";
      }
    } else if (bench_cmd->parsed()) {
      const auto sigmas = parse_list(sigma_list, "--sigma-list");
      const auto taus = parse_list(tau_list, "--tau-list");
      const auto deltas = parse_list(delta_list, "--delta-list");
      BenchOptions options;
      options.workers = bench_workers;
      options.oracle_tau_limit = oracle_limit;
      const auto records = run_bench(sigmas, taus, deltas, options);
      if (csv_path == "-") {
        write_bench_csv(out, records);
      } else {
        std::ofstream file(csv_path);
        if (!file) throw UsageError("cannot open " + csv_path);
        write_bench_csv(file, records);
        if (!file) throw std::runtime_error("write to " + csv_path + " failed");
      }
    } else if (selftest_cmd->parsed()) {
      return run_selftest(out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const PrecisionExhausted& e) {
    err << "precision exhausted: " << e.what() << '\n';
    return kExitPrecision;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace zetafast::cli
