#include "rrg/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <regex>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "rrg/augmentation.hpp"
#include "rrg/entropy.hpp"
#include "rrg/errors.hpp"
#include "rrg/parallel.hpp"
#include "rrg/report.hpp"
#include "rrg/star_thinning.hpp"
#include "rrg/verify.hpp"

#ifndef RRG_DATA_DIR
#define RRG_DATA_DIR "data"
#endif

namespace rrg::cli {
namespace {

using Json = nlohmann::ordered_json;

struct CommonOptions {
  double tol = kDefaultTolerance;
  std::string format = "pretty";
  std::uint64_t seed = 42;
  unsigned jobs = default_jobs();
  int precision = 6;
  bool timing = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

OutputFormat format_of(const CommonOptions& o) {
  const auto f = parse_format(o.format);
  if (!f) throw UsageError(fmt::format("unknown format '{}'", o.format));
  return *f;
}

void check_degree(int d) {
  if (d < kMinDegree || d > kMaxDegree) {
    throw UsageError(fmt::format("degree {} outside [{}, {}]", d, kMinDegree, kMaxDegree));
  }
}

double number(const std::string& text) { return std::stod(text); }

struct DegreeResult {
  LowerBound bound;
  double elapsed_ms = 0.0;
};

DegreeResult compute(int d, double tol) {
  const auto start = std::chrono::steady_clock::now();
  DegreeResult r{lower_bound(d, tol), 0.0};
  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

OutputRecord to_record(const DegreeResult& r, bool timing) {
  OutputRecord rec;
  rec.d = r.bound.search.d;
  rec.alpha = r.bound.alpha();
  rec.alpha_hat = r.bound.alpha_hat();
  rec.gw_margin = r.bound.augmentation.gw_margin();
  if (timing) rec.elapsed_ms = r.elapsed_ms;
  return rec;
}

void print_pretty_header(std::ostream& out, bool timing) {
  out << fmt::format("{:>7}  {:>12}  {:>12}  {:>16}", "d", "alpha", "alpha_hat", "gw_margin");
  if (timing) out << fmt::format("  {:>10}", "ms");
  out << '\n';
}

void print_pretty_row(std::ostream& out, const OutputRecord& r, int precision) {
  out << fmt::format("{:>7}  {:>12}  {:>12}  {:>16}", r.d, format_truncated(r.alpha, precision),
                     format_truncated(r.alpha_hat, precision), format_sig12(r.gw_margin));
  if (r.elapsed_ms) out << fmt::format("  {:>10.1f}", *r.elapsed_ms);
  out << '\n';
}

int cmd_alpha(int d, const CommonOptions& o, std::ostream& out) {
  check_degree(d);
  const auto fmt_kind = format_of(o);
  const auto result = compute(d, o.tol);
  const auto rec = to_record(result, o.timing);
  const auto& search = result.bound.search;
  const auto& aug = result.bound.augmentation;

  switch (fmt_kind) {
    case OutputFormat::Csv:
      out << record_csv_header(o.timing) << ",smm_margin\n"
          << to_csv(rec, o.precision) << ',' << format_sig12(search.margin_at_threshold) << '\n';
      break;
    case OutputFormat::Json: {
      auto j = Json::parse(to_json(rec, o.precision));
      j["smm_margin"] = number(format_sig12(search.margin_at_threshold));
      out << j.dump() << '\n';
      break;
    }
    case OutputFormat::Pretty: {
      out << fmt::format("degree                    {}\n", d);
      out << fmt::format("alpha (second moment)     {}\n", format_truncated(rec.alpha, o.precision));
      out << fmt::format("alpha_hat (augmented)     {}\n", format_truncated(rec.alpha_hat, o.precision));
      out << fmt::format("threshold margin          {}\n", format_sig12(search.margin_at_threshold));
      out << fmt::format("crossover verified        {}\n", search.crossover_verified ? "yes" : "NO");
      out << fmt::format("p                         {}\n", format_sig12(aug.p));
      out << fmt::format("P(full-zero)              {}\n", format_sig12(aug.q_full_zero));
      out << fmt::format("P(isolated full-zero)     {}\n", format_sig12(aug.q_isolated));
      out << fmt::format("GW offspring mean         {}{}\n", format_sig12(aug.gw_offspring_mean),
                         aug.gw_borderline ? " (borderline)" : "");
      out << fmt::format("GW margin                 {}\n", format_sig12(rec.gw_margin));
      out << fmt::format("asymptotic reference      {}\n", format_sig12(asymptotic_reference(d)));
      if (rec.elapsed_ms) out << fmt::format("elapsed ms                {:.1f}\n", *rec.elapsed_ms);
      break;
    }
  }
  return kSuccess;
}

int cmd_table(int d_min, int d_max, const CommonOptions& o, std::ostream& out) {
  check_degree(d_min);
  check_degree(d_max);
  if (d_min > d_max) throw UsageError(fmt::format("empty degree range {}..{}", d_min, d_max));
  const auto fmt_kind = format_of(o);

  const auto count = static_cast<std::size_t>(d_max - d_min + 1);
  std::vector<DegreeResult> results(count);
  parallel_for(count, o.jobs, [&](std::size_t i) {
    results[i] = compute(d_min + static_cast<int>(i), o.tol);
  });

  if (fmt_kind == OutputFormat::Csv) out << record_csv_header(o.timing) << '\n';
  if (fmt_kind == OutputFormat::Pretty) print_pretty_header(out, o.timing);
  for (const auto& r : results) {
    const auto rec = to_record(r, o.timing);
    switch (fmt_kind) {
      case OutputFormat::Csv: out << to_csv(rec, o.precision) << '\n'; break;
      case OutputFormat::Json: out << to_json(rec, o.precision) << '\n'; break;
      case OutputFormat::Pretty: print_pretty_row(out, rec, o.precision); break;
    }
  }
  return kSuccess;
}

struct StarsOptions {
  std::string dhat_range;
  std::optional<double> alpha;
  std::optional<double> alpha_upper;
  std::string upper_bounds_path = std::string(RRG_DATA_DIR) + "/upper_bounds.csv";
};

std::pair<int, int> parse_range(const std::string& text, int d) {
  if (text.empty()) return {1, d - 1};
  static const std::regex kRange(R"(^\s*(\d+)\s*(?:\.\.|-|:)\s*(\d+)\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, kRange)) return {std::stoi(m[1]), std::stoi(m[2])};
  static const std::regex kSingle(R"(^\s*(\d+)\s*$)");
  if (std::regex_match(text, m, kSingle)) return {std::stoi(m[1]), std::stoi(m[1])};
  throw UsageError(fmt::format("malformed --dhat range '{}' (expected A..B)", text));
}

int cmd_stars(int d, const StarsOptions& s, const CommonOptions& o, std::ostream& out) {
  check_degree(d);
  const auto fmt_kind = format_of(o);
  const auto [lo, hi] = parse_range(s.dhat_range, d);
  if (lo < 1 || hi >= d || lo > hi) {
    throw UsageError(fmt::format("--dhat range {}..{} must lie within [1, {}]", lo, hi, d - 1));
  }

  double alpha = 0.0;
  if (s.alpha) {
    if (!(*s.alpha > 0.0 && *s.alpha < 0.5)) throw UsageError("--alpha must lie in (0, 1/2)");
    alpha = *s.alpha;
  } else {
    alpha = alpha_star(d, o.tol).alpha_star;
  }

  bool have_upper = s.alpha_upper.has_value();
  double upper_value = s.alpha_upper.value_or(0.0);
  std::string upper_source = "--alpha-upper";
  if (!have_upper) {
    try {
      const auto table = UpperBoundTable::load(s.upper_bounds_path);
      if (const auto found = table.lookup(d)) {
        have_upper = true;
        upper_value = *found;
      }
      upper_source = fmt::format("{} (version {})", s.upper_bounds_path,
                                 table.version().empty() ? "unversioned" : table.version());
    } catch (const DomainError&) {
      have_upper = false;
    }
  }

  const auto rows = thinning_table(d, alpha, lo, hi);
  const auto stars = star_candidates(d, alpha);
  const double p = conditional_p(alpha);
  std::optional<int> k_max;
  if (have_upper) k_max = necessary_bound_k(d, upper_value);

  const int P = o.precision;
  const auto opt_int = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
  const auto opt_thin = [P](const std::optional<double>& v) { return v ? format_truncated(*v, P) : std::string(); };

  switch (fmt_kind) {
    case OutputFormat::Csv:
      out << "d,alpha,p,necessary_k_max\n";
      out << fmt::format("{},{},{},{}\n", d, format_sig12(alpha), format_sig12(p), opt_int(k_max));
      out << "\ndhat,deleted,alpha_thin\n";
      for (const auto& r : rows) {
        out << fmt::format("{},{},{}\n", r.dhat, format_truncated(r.deleted, P), format_truncated(r.alpha_thin, P));
      }
      out << "\nk,alpha_req,dhat_min,alpha_thin,status,note\n";
      for (const auto& c : stars) {
        out << fmt::format("{},{},{},{},{},{}\n", c.k, format_sig12(c.alpha_req), opt_int(c.dhat_min),
                           opt_thin(c.alpha_thin), to_string(c.status), c.external_conditions_note);
      }
      break;
    case OutputFormat::Json: {
      Json head;
      head["type"] = "summary";
      head["d"] = d;
      head["alpha"] = number(format_sig12(alpha));
      head["p"] = number(format_sig12(p));
      head["necessary_k_max"] = k_max ? Json(*k_max) : Json(nullptr);
      out << head.dump() << '\n';
      for (const auto& r : rows) {
        Json j;
        j["type"] = "thinning";
        j["dhat"] = r.dhat;
        j["deleted"] = number(format_truncated(r.deleted, P));
        j["alpha_thin"] = number(format_truncated(r.alpha_thin, P));
        out << j.dump() << '\n';
      }
      for (const auto& c : stars) {
        Json j;
        j["type"] = "star";
        j["k"] = c.k;
        j["alpha_req"] = number(format_sig12(c.alpha_req));
        j["dhat_min"] = c.dhat_min ? Json(*c.dhat_min) : Json(nullptr);
        j["alpha_thin"] = c.alpha_thin ? Json(number(format_truncated(*c.alpha_thin, P))) : Json(nullptr);
        j["status"] = to_string(c.status);
        j["note"] = c.external_conditions_note;
        out << j.dump() << '\n';
      }
      break;
    }
    case OutputFormat::Pretty:
      out << fmt::format("d = {}   alpha = {}   p = {}\n\n", d, format_sig12(alpha), format_sig12(p));
      out << fmt::format("{:>6}  {:>12}  {:>12}\n", "dhat", "deleted", "alpha_thin");
      for (const auto& r : rows) {
        out << fmt::format("{:>6}  {:>12}  {:>12}\n", r.dhat, format_truncated(r.deleted, P),
                           format_truncated(r.alpha_thin, P));
      }
      out << fmt::format("\n{:>6}  {:>12}  {:>8}  {:>12}  {}\n", "k", "alpha_req", "dhat_min", "alpha_thin",
                         "status");
      for (const auto& c : stars) {
        out << fmt::format("{:>6}  {:>12}  {:>8}  {:>12}  {}\n", c.k, format_truncated(c.alpha_req, P),
                           opt_int(c.dhat_min), opt_thin(c.alpha_thin), to_string(c.status));
      }
      out << "\nnote: " << kExternalConditionsNote << '\n';
      if (k_max) {
        out << fmt::format("necessary condition: k <= {} (upper bound {} from {})\n", *k_max,
                           format_sig12(upper_value), upper_source);
      } else {
        out << "necessary condition: no upper bound available for this degree\n";
      }
      break;
  }
  return kSuccess;
}

struct VerifyCliOptions {
  std::uint64_t samples = 1'000'000;
  std::size_t grid = 1'000'000;
};

int cmd_verify(int d, const VerifyCliOptions& v, const CommonOptions& o, std::ostream& out) {
  check_degree(d);
  const auto fmt_kind = format_of(o);
  if (v.samples == 0) throw UsageError("--samples must be positive");
  if (v.grid < 10'000) throw UsageError("--grid must be at least 10000");

  VerifyOptions opt;
  opt.samples = v.samples;
  opt.seed = o.seed;
  opt.grid_points = v.grid;
  opt.jobs = o.jobs;
  opt.tol = o.tol;
  const auto checks = verify_degree(d, opt);

  const bool all = std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
  switch (fmt_kind) {
    case OutputFormat::Csv:
      out << "d,check,status,detail\n";
      for (const auto& c : checks) {
        out << fmt::format("{},{},{},\"{}\"\n", d, c.name, c.passed ? "pass" : "fail", c.detail);
      }
      break;
    case OutputFormat::Json:
      for (const auto& c : checks) {
        Json j;
        j["d"] = d;
        j["check"] = c.name;
        j["status"] = c.passed ? "pass" : "fail";
        j["detail"] = c.detail;
        out << j.dump() << '\n';
      }
      break;
    case OutputFormat::Pretty:
      for (const auto& c : checks) {
        out << fmt::format("{}  {:<32} {}\n", c.passed ? "PASS" : "FAIL", c.name, c.detail);
      }
      out << fmt::format("verify d={} seed={} samples={}: {}\n", d, o.seed, v.samples,
                         all ? "PASS" : "FAIL");
      break;
  }
  return all ? kSuccess : kVerificationFailure;
}

void add_common(CLI::App& sub, CommonOptions& o, bool with_seed) {
  sub.add_option("--tol", o.tol, "bisection width for the threshold search")->capture_default_str();
  sub.add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"pretty", "csv", "json"}))
      ->capture_default_str();
  sub.add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  sub.add_option("--precision", o.precision, "printed decimals (truncated)")
      ->check(CLI::Range(1, 15))
      ->capture_default_str();
  if (with_seed) sub.add_option("--seed", o.seed, "random seed")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lower bounds on the independence ratio of random d-regular graphs", "rrg"};
  app.require_subcommand(1);

  CommonOptions common;
  int degree = 0;
  int degree_hi = 0;
  StarsOptions stars;
  VerifyCliOptions verify;

  auto* alpha = app.add_subcommand("alpha", "threshold density and augmented bound for one degree");
  alpha->add_option("d", degree, "degree")->required();
  add_common(*alpha, common, false);
  alpha->add_flag("--timing", common.timing, "include elapsed time");

  auto* table = app.add_subcommand("table", "bounds for a range of degrees");
  table->add_option("d_min", degree, "first degree")->required();
  table->add_option("d_max", degree_hi, "last degree")->required();
  add_common(*table, common, false);
  table->add_flag("--timing", common.timing, "include per-degree elapsed time");

  auto* star = app.add_subcommand("stars", "thinned densities and star-decomposition candidates");
  star->add_option("d", degree, "degree")->required();
  star->add_option("--dhat", stars.dhat_range, "thinness caps to tabulate, A..B");
  star->add_option("--alpha", stars.alpha, "density to thin (default: threshold density)");
  star->add_option("--alpha-upper", stars.alpha_upper, "upper bound on the independence ratio");
  star->add_option("--upper-bounds", stars.upper_bounds_path, "CSV of published upper bounds")
      ->capture_default_str();
  add_common(*star, common, false);

  auto* ver = app.add_subcommand("verify", "run every oracle for one degree");
  ver->add_option("d", degree, "degree")->required();
  ver->add_option("--samples", verify.samples, "Monte Carlo samples")->capture_default_str();
  ver->add_option("--grid", verify.grid, "brute-force grid points")->capture_default_str();
  add_common(*ver, common, true);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (alpha->parsed()) return cmd_alpha(degree, common, out);
    if (table->parsed()) return cmd_table(degree, degree_hi, common, out);
    if (star->parsed()) return cmd_stars(degree, stars, common, out);
    if (ver->parsed()) return cmd_verify(degree, verify, common, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const NumericalFailure& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const GwSupercritical& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  }
  return kUsageError;
}

}  // namespace rrg::cli
