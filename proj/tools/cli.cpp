#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "permcensus/permcensus.hpp"

namespace permcensus::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageFailure : std::runtime_error {
  ExitCode code;
  UsageFailure(ExitCode c, std::string const& what) : std::runtime_error(what), code(c) {}
};

StatKind require_stat(std::string const& name)
{
  auto kind = parse_stat_name(name);
  if (!kind)
    throw UsageFailure(unknown_stat,
                       "unknown stat '" + name +
                           "' (expected one of om nom od nod oe noe cm ncm cd ncd ce nce)");
  return *kind;
}

void require(bool condition, std::string const& message)
{
  if (!condition)
    throw UsageFailure(out_of_range, message);
}

std::string decimal(mpq_class const& value)
{
  return to_significant_digits(value, 6);
}

std::uint64_t resolve_seed(CLI::Option const* flag, std::uint64_t flag_value)
{
  if (flag->count() > 0)
    return flag_value;
  if (char const* env = std::getenv("PERMCENSUS_SEED")) {
    std::string const text(env);
    require(!text.empty() && std::all_of(text.begin(), text.end(), ::isdigit),
            "PERMCENSUS_SEED must be a nonnegative decimal integer");
    try {
      return std::stoull(text);
    } catch (std::out_of_range const&) {
      throw UsageFailure(out_of_range, "PERMCENSUS_SEED does not fit in 64 bits");
    }
  }
  return 1;
}

struct CountArgs {
  std::string stat;
  std::uint64_t q = 0, n = 0, k = 1;
};

struct TableArgs {
  std::string stat;
  std::uint64_t q = 0, n_max = 0;
  std::string format = "tsv";
  bool sym_only = false;
};

struct ProbArgs {
  std::string stat;
  std::uint64_t q = 0, n = 0;
};

struct BoundsArgs {
  std::uint64_t q = 0, m = 0;
  std::string format = "text";
};

struct CheckArgs {
  std::uint64_t q_max = 0, n_max = 0;
  std::uint64_t sym_limit = OracleLimits{}.max_sym_degree;
  std::uint64_t coset_limit = OracleLimits{}.max_coset_degree;
};

struct IdentifyArgs {
  std::uint64_t n_hidden = 0;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
  std::uint64_t n_max = 10000;
  std::string orders_file;
};

int do_count(CountArgs const& a, std::ostream& out)
{
  StatKind const kind = require_stat(a.stat);
  require(a.q >= 1, "--q must be at least 1");
  require(a.n >= 1, "--n must be at least 1");
  require(a.k >= 1 && a.k <= a.n, "--k must lie in [1, n]");
  CensusEngine engine;
  out << engine.stat_count({kind, a.q, a.n, a.k}) << '\n';
  return ok;
}

int do_table(TableArgs const& a, std::ostream& out)
{
  StatKind const kind = require_stat(a.stat);
  require(a.q >= 1, "--q must be at least 1");
  require(a.n_max >= 1, "--n-max must be at least 1");

  CensusEngine engine;
  json rows = json::array();
  bool const tsv = a.format == "tsv";
  if (tsv)
    out << "stat\tq\tn\tk\tcount\tsize\tfraction\n";
  for (std::uint64_t n = 1; n <= a.n_max; ++n) {
    std::uint64_t const k_max = a.sym_only ? 1 : n;
    for (std::uint64_t k = 1; k <= k_max; ++k) {
      Count const count = engine.stat_count({kind, a.q, n, k});
      Count const size = coset_size(n, k);
      std::string const fraction = ExactRatio(count, size).str();
      if (tsv) {
        out << stat_name(kind) << '\t' << a.q << '\t' << n << '\t' << k << '\t'
            << count << '\t' << size << '\t' << fraction << '\n';
      } else {
        rows.push_back({{"stat", stat_name(kind)},
                        {"q", a.q},
                        {"n", n},
                        {"k", k},
                        {"count", count.get_str()},
                        {"size", size.get_str()},
                        {"fraction", fraction}});
      }
    }
  }
  if (!tsv)
    out << rows.dump(2) << '\n';
  return ok;
}

int do_prob(ProbArgs const& a, std::ostream& out)
{
  StatKind const kind = require_stat(a.stat);
  require(a.q >= 1, "--q must be at least 1");
  require(a.n >= 1, "--n must be at least 1");
  ExactRatio const p = probability(kind, a.q, a.n);
  out << p.str() << " ≈ " << decimal(p.value()) << '\n';
  return ok;
}

int do_bounds(BoundsArgs const& a, std::ostream& out)
{
  require(a.q >= 2, "--q must be at least 2");
  require(a.m >= 1, "--m must be at least 1");
  BoundReport const r = sandwich_bounds(a.q, a.m);
  Real const c = sandwich_constant(a.q);
  if (a.format == "json") {
    json j{{"q", r.q},
           {"m", r.m},
           {"c_q", c.str(17)},
           {"lower", r.lower.str(17)},
           {"exact", r.exact.str()},
           {"exact_decimal", decimal(r.exact.value())},
           {"upper", r.upper.str(17)},
           {"brackets", r.brackets()}};
    out << j.dump(2) << '\n';
  } else {
    out << "q: " << r.q << '\n'
        << "m: " << r.m << '\n'
        << "c_q: " << c.str(17) << '\n'
        << "lower: " << r.lower.str(17) << '\n'
        << "exact: " << r.exact.str() << " ≈ " << decimal(r.exact.value()) << '\n'
        << "upper: " << r.upper.str(17) << '\n'
        << "brackets: " << (r.brackets() ? "true" : "false") << '\n';
  }
  return ok;
}

int do_oracle_check(CheckArgs const& a, std::ostream& out, std::ostream& err)
{
  require(a.q_max >= 1, "--q-max must be at least 1");
  require(a.n_max >= 1, "--n-max must be at least 1");
  OracleLimits const limits{a.sym_limit, a.coset_limit};
  require(a.n_max <= limits.max_sym_degree && a.n_max <= limits.max_coset_degree,
          "--n-max exceeds the oracle enumeration limits (--sym-limit " +
              std::to_string(limits.max_sym_degree) + ", --coset-limit " +
              std::to_string(limits.max_coset_degree) + ")");
  EquivalenceReport const report = check_oracle_equivalence(a.q_max, a.n_max, limits);
  if (report.first_mismatch) {
    err << report.first_mismatch->describe() << '\n';
    return check_failed;
  }
  out << "ok: " << report.comparisons << " comparisons matched\n";
  return ok;
}

json fit_json(HypothesisFit const& fit)
{
  json ll = fit.log_likelihood;
  if (!std::isfinite(fit.log_likelihood))
    ll = nullptr;
  return {{"n", fit.degree},
          {"expected_coprime_fraction", fit.expected_coprime.str()},
          {"log_likelihood", ll}};
}

int do_identify(IdentifyArgs const& a, CLI::Option const* seed_flag,
                std::ostream& out)
{
  OrderSample sample;
  if (!a.orders_file.empty()) {
    std::ifstream in(a.orders_file);
    if (!in)
      throw UsageFailure(unreadable_file, "cannot read order file '" + a.orders_file + "'");
    try {
      sample = read_order_sample(in);
    } catch (std::invalid_argument const& e) {
      throw UsageFailure(unreadable_file, a.orders_file + ": " + e.what());
    }
    require(sample.sample_count() > 0, "order file '" + a.orders_file + "' is empty");
  } else {
    require(a.n_hidden >= 1, "--n-hidden must be at least 1");
    require(a.n_hidden <= 0xFFFFFFFFu, "--n-hidden is too large");
    require(a.samples >= 1, "--samples must be at least 1");
    std::uint64_t const seed = resolve_seed(seed_flag, a.seed);
    sample = simulate_sample(static_cast<std::uint32_t>(a.n_hidden), a.samples, seed);
  }
  require(a.n_max >= 3, "--n-max must be at least 3");

  DegreeEstimate const est = identify_degree(sample, a.n_max);
  json j{{"block", {est.block.low, est.block.high()}},
         {"chosen_n", est.chosen_n},
         {"discriminating_prime", est.discriminating_prime},
         {"sample_count", est.sample_count}};
  j["seed"] = sample.source_seed ? json(*sample.source_seed) : json(nullptr);
  j["observed_odd_fraction"] = est.observed_odd.str();
  j["expected_odd_fraction"] = est.expected_odd.str();
  j["observed_coprime_fraction"] = est.observed_coprime.str();
  j["hypotheses"] = {fit_json(est.lower), fit_json(est.upper)};
  j["confidence"] = est.confidence;
  out << j.dump(2) << '\n';
  return ok;
}

} // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Exact element counts by order and cycle statistics in symmetric "
               "groups and point-stabilizer cosets"};
  app.name("permcensus");
  app.require_subcommand(1, 1);

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Exact count of a statistic on C_{n,k}");
  count->add_option("--stat", count_args.stat, "Statistic name, e.g. ncm")->required();
  count->add_option("--q", count_args.q, "Modulus q")->required();
  count->add_option("--n", count_args.n, "Degree n")->required();
  count->add_option("--k", count_args.k, "Coset index k (1 = whole S_n)");

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "Counts for every (n, k) up to n-max");
  table->add_option("--stat", table_args.stat, "Statistic name")->required();
  table->add_option("--q", table_args.q, "Modulus q")->required();
  table->add_option("--n-max", table_args.n_max, "Largest degree")->required();
  table->add_option("--format", table_args.format, "tsv or json")
      ->check(CLI::IsMember({"tsv", "json"}));
  table->add_flag("--sym-only", table_args.sym_only, "Only k = 1 (one row per n)");

  ProbArgs prob_args;
  auto* prob = app.add_subcommand("prob", "Exact probability in S_n");
  prob->add_option("--stat", prob_args.stat, "Statistic name")->required();
  prob->add_option("--q", prob_args.q, "Modulus q")->required();
  prob->add_option("--n", prob_args.n, "Degree n")->required();

  BoundsArgs bounds_args;
  auto* bounds = app.add_subcommand("bounds", "Analytic bounds on p_{q,mq}");
  bounds->add_option("--q", bounds_args.q, "Modulus q >= 2")->required();
  bounds->add_option("--m", bounds_args.m, "Block index m >= 1")->required();
  bounds->add_option("--format", bounds_args.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CheckArgs check_args;
  auto* check = app.add_subcommand("oracle-check", "Compare recurrences with brute force");
  check->add_option("--q-max", check_args.q_max, "Largest modulus")->required();
  check->add_option("--n-max", check_args.n_max, "Largest degree")->required();
  check->add_option("--sym-limit", check_args.sym_limit, "Partition oracle degree limit");
  check->add_option("--coset-limit", check_args.coset_limit, "Coset oracle degree limit");

  IdentifyArgs id_args;
  auto* identify = app.add_subcommand("identify", "Estimate n from element orders of S_n");
  auto* hidden = identify->add_option("--n-hidden", id_args.n_hidden, "Simulate S_N");
  identify->add_option("--samples", id_args.samples, "Number of simulated elements");
  auto* seed_flag = identify->add_option("--seed", id_args.seed,
                                         "Sampler seed (default: $PERMCENSUS_SEED, else 1)");
  auto* orders = identify->add_option("--orders", id_args.orders_file,
                                      "File of element orders, one per line");
  identify->add_option("--n-max", id_args.n_max, "Largest degree considered");
  hidden->excludes(orders);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return ok;
  } catch (CLI::CallForAllHelp const&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (CLI::ParseError const& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }

  if (identify->parsed() && hidden->count() == 0 && orders->count() == 0) {
    err << "error: identify needs --n-hidden or --orders\n";
    return usage_error;
  }

  try {
    if (count->parsed())
      return do_count(count_args, out);
    if (table->parsed())
      return do_table(table_args, out);
    if (prob->parsed())
      return do_prob(prob_args, out);
    if (bounds->parsed())
      return do_bounds(bounds_args, out);
    if (check->parsed())
      return do_oracle_check(check_args, out, err);
    if (identify->parsed())
      return do_identify(id_args, seed_flag, out);
  } catch (UsageFailure const& e) {
    err << "error: " << e.what() << '\n';
    return e.code;
  } catch (std::logic_error const& e) {
    err << "error: " << e.what() << '\n';
    return out_of_range;
  } catch (OracleLimitExceeded const& e) {
    err << "error: " << e.what() << '\n';
    return out_of_range;
  }
  return usage_error;
}

} // namespace permcensus::cli
