#include "stabilab/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "stabilab/cache.hpp"
#include "stabilab/characters.hpp"
#include "stabilab/groebner.hpp"
#include "stabilab/multiplicities.hpp"
#include "stabilab/polyring.hpp"
#include "stabilab/report.hpp"
#include "stabilab/symfunc.hpp"

namespace stabilab {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  auto parse_one = [&](const std::string& item) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer: '" + item + "'");
    }
    if (used != item.size()) throw std::invalid_argument("not an integer: '" + item + "'");
    return value;
  };
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty entry in '" + text + "'");
    if (auto dots = item.find(".."); dots != std::string::npos) {
      const int lo = parse_one(item.substr(0, dots));
      const int hi = parse_one(item.substr(dots + 2));
      if (hi < lo) throw std::invalid_argument("empty range '" + item + "'");
      for (int v = lo; v <= hi; ++v) out.push_back(v);
    } else {
      out.push_back(parse_one(item));
    }
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  std::ranges::sort(out);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

struct RunConfig {
  std::string group;
  std::string command;
  std::string k = "2";
  std::string n;
  std::string m;
  std::string d;
  std::string r = "3";
  std::string mu;
  std::string lambda;
  std::string L;
  std::string order_family = "grevlex";
  std::string significance = "interleaved";
  std::string out;
  std::string format = "json";
  std::string cache_dir;
  bool strict = false;
  bool no_timing = false;
  bool long_run = false;
  int threads = 1;
  int max_degree = 12;
  long inject = -1;
};

// Config problems found before any computation.
class CapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json big_json(const BigInt& value) {
  if (value.fits_slong_p()) return value.get_si();
  return value.get_str();
}

nlohmann::json series_json(const QSeries& series) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : series) out.push_back(big_json(c));
  return out;
}

nlohmann::json config_json(const RunConfig& config) {
  nlohmann::json out;
  auto put = [&](const char* key, const std::string& value) {
    if (!value.empty()) out[key] = value;
  };
  put("k", config.k);
  put("n", config.n);
  put("m", config.m);
  put("d", config.d);
  put("r", config.r);
  put("mu", config.mu);
  put("lambda", config.lambda);
  put("L", config.L);
  out["order_family"] = config.order_family;
  out["significance"] = config.significance;
  out["strict"] = config.strict;
  return out;
}

int single_int(const std::string& text, const char* flag) {
  const auto values = parse_int_list(text);
  if (values.size() != 1) throw std::invalid_argument(std::string("--") + flag + " takes a single value here");
  return values.front();
}

int required_int(const std::string& text, const char* flag) {
  if (text.empty()) throw std::invalid_argument(std::string("--") + flag + " is required");
  return single_int(text, flag);
}

std::vector<int> required_list(const std::string& text, const char* flag) {
  if (text.empty()) throw std::invalid_argument(std::string("--") + flag + " is required");
  return parse_int_list(text);
}

void check_cap(int value, int cap, const std::string& what) {
  if (value > cap) {
    throw CapError(what + " = " + std::to_string(value) + " exceeds --max-degree " + std::to_string(cap));
  }
}

void check_nonnegative(const std::vector<int>& values, const char* flag) {
  for (int v : values) {
    if (v < 0) throw std::invalid_argument(std::string("--") + flag + " must be non-negative");
  }
}

using Task = std::function<std::vector<StabilityReport>()>;

struct Outcome {
  std::vector<StabilityReport> reports;
  std::exception_ptr error;
};

// Runs the tasks on at most `threads` workers; outcomes keep task order.
std::vector<Outcome> run_pool(const std::vector<Task>& tasks, int threads) {
  std::vector<Outcome> outcomes(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t i = next++;
      if (i >= tasks.size()) return;
      try {
        outcomes[i].reports = tasks[i]();
      } catch (...) {
        outcomes[i].error = std::current_exception();
      }
    }
  };
  const std::size_t count = std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), tasks.size());
  if (count <= 1) {
    worker();
    return outcomes;
  }
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < count; ++t) pool.emplace_back(worker);
  for (auto& thread : pool) thread.join();
  return outcomes;
}

OrderChoice order_choice(const RunConfig& config) {
  return {parse_order_family(config.order_family), parse_significance(config.significance)};
}

bool is_conjecture(const std::string& command) {
  return command == "quasifree" || command == "conjecture2" || command == "coinvariants";
}

struct VerifyPlan {
  std::vector<Task> tasks;
};

VerifyPlan plan_verify(const RunConfig& config, const CacheDirectory& cache) {
  const std::string& cmd = config.command;
  const int cap = config.max_degree;
  const auto ks = parse_int_list(config.k);
  for (int k : ks) {
    if (k < 1) throw std::invalid_argument("--k must be at least 1");
  }
  VerifyPlan plan;

  if (cmd == "corollary2" || cmd == "weyl" || cmd == "gstab" || cmd == "multigraded") {
    const int n = required_int(config.n, "n");
    if (n < 1) throw std::invalid_argument("--n must be at least 1");
    check_cap(n, cap, "n");
    const int r = single_int(config.r, "r");
    if (r < 0) throw std::invalid_argument("--r must be non-negative");
    if (cmd != "corollary2") {
      const int top = cmd == "weyl" ? n : n + r;
      if (top > kMaxCharacterDegree) {
        throw CapError("character tables stop at n = " + std::to_string(kMaxCharacterDegree));
      }
    }
    if (cmd == "corollary2") {
      for (int k : ks) {
        plan.tasks.push_back([k, n] {
          return std::vector<StabilityReport>{verify_corollary2(k, n), verify_product_formula(k, n)};
        });
      }
    } else if (cmd == "weyl") {
      plan.tasks.push_back([n] { return std::vector<StabilityReport>{verify_weyl_stability(n)}; });
    } else if (cmd == "gstab") {
      check_cap(n + r, cap, "n + r");
      const int d = config.d.empty() ? std::min(n, 6) : single_int(config.d, "d");
      if (d < 0) throw std::invalid_argument("--d must be non-negative");
      check_cap(d, cap, "d");
      plan.tasks.push_back([n, r] { return std::vector<StabilityReport>{verify_g_stability(n, r)}; });
      for (int k : ks) {
        plan.tasks.push_back([k, n, d] {
          return std::vector<StabilityReport>{verify_g_plethysm_agreement(k, n, d)};
        });
      }
    } else {
      check_cap(n + r, cap, "n + r");
      for (int k : ks) {
        plan.tasks.push_back([k, n, r] { return std::vector<StabilityReport>{verify_multigraded(k, n, r)}; });
      }
    }
    return plan;
  }

  const auto ns = required_list(config.n, "n");
  for (int n : ns) {
    if (n < 1) throw std::invalid_argument("--n must be at least 1");
    check_cap(n, cap, "n");
  }
  std::vector<int> ms;
  if (!config.m.empty()) {
    ms = parse_int_list(config.m);
    check_nonnegative(ms, "m");
  }

  if (cmd == "theorem1") {
    for (int k : ks) {
      for (int n : ns) {
        check_cap(n + 1, cap, "n + 1");
        plan.tasks.push_back([k, n] { return std::vector<StabilityReport>{verify_theorem1(k, n)}; });
      }
    }
    return plan;
  }

  if (cmd == "quasifree") {
    std::optional<Partition> lambda;
    if (!config.lambda.empty()) lambda = Partition::parse(config.lambda);
    for (int n : ns) {
      if (n >= 5 && !config.long_run) throw CapError("quasifree with n >= 5 needs --long");
      if (lambda && lambda->size() != n) throw std::invalid_argument("--lambda must be a partition of n");
    }
    for (int k : ks) {
      for (int n : ns) {
        std::vector<int> grid = ms;
        if (grid.empty()) {
          for (int m = 0; m <= n; ++m) grid.push_back(m);
        }
        for (int m : grid) {
          check_cap(m, cap, "m");
          plan.tasks.push_back([k, n, m, lambda] {
            std::vector<StabilityReport> out{quasifree_check(k, n, m), verify_quasifree_corollaries(k, n, m)};
            if (lambda) {
              out.push_back(verify_quasifree_corollaries(k, n, m, lambda));
            } else {
              StabilityReport isotypic("conjecture1-isotypic", {{"k", k}, {"n", n}, {"m", m}});
              double ms_total = 0.0;
              for (const auto& mu : enumerate_partitions(n)) {
                StabilityReport part = verify_quasifree_corollaries(k, n, m, mu);
                isotypic.append(part);
                ms_total += part.elapsed_ms();
              }
              isotypic.set_elapsed_ms(ms_total);
              out.push_back(std::move(isotypic));
            }
            return out;
          });
        }
      }
    }
    return plan;
  }

  if (cmd == "conjecture2" || cmd == "coinvariants") {
    const OrderChoice choice = order_choice(config);
    const CacheDirectory* cache_ptr = &cache;
    for (int k : ks) {
      for (int n : ns) {
        std::vector<int> grid;
        if (ms.empty()) {
          for (int m = 1; m < n; ++m) grid.push_back(m);
        } else {
          for (int m : ms) {
            if (m < 1 || m >= n) throw std::invalid_argument("--m must satisfy 1 <= m < n");
            grid.push_back(m);
          }
        }
        for (int m : grid) {
          if (cmd == "conjecture2") {
            plan.tasks.push_back([k, n, m, choice, cache_ptr] {
              return std::vector<StabilityReport>{verify_conjecture2(k, n, m, choice, cache_ptr)};
            });
          } else {
            plan.tasks.push_back([k, n, m, choice, cache_ptr] {
              return std::vector<StabilityReport>{coinvariant_hilbert_check(k, n, m, choice, cache_ptr)};
            });
          }
        }
        if (cmd == "coinvariants" && k == 1) {
          plan.tasks.push_back([n, choice, cache_ptr] {
            return std::vector<StabilityReport>{verify_qfactorial(n, choice, cache_ptr)};
          });
        }
      }
    }
    return plan;
  }
  throw std::invalid_argument("unknown verify target '" + cmd + "'");
}

struct Emitted {
  nlohmann::json document;
  std::string csv;
  int status = kExitPass;
};

Emitted run_verify(const RunConfig& config, const CacheDirectory& cache, std::ostream& err) {
  const VerifyPlan plan = plan_verify(config, cache);
  const auto start = std::chrono::steady_clock::now();
  auto outcomes = run_pool(plan.tasks, config.threads);
  const double total_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  Emitted result;
  nlohmann::json reports = nlohmann::json::array();
  std::string csv = StabilityReport::csv_header();
  bool all_pass = true;
  std::string error;
  int error_status = kExitPass;
  long remaining = config.inject;
  for (auto& outcome : outcomes) {
    if (outcome.error) {
      try {
        std::rethrow_exception(outcome.error);
      } catch (const ResourceError& e) {
        if (error.empty()) error = e.what();
        error_status = std::max(error_status, kExitResource);
      } catch (const CacheError& e) {
        if (error.empty()) error = e.what();
        error_status = std::max(error_status, kExitResource);
      } catch (const std::invalid_argument& e) {
        if (error.empty()) error = e.what();
        error_status = std::max(error_status, kExitUsage);
      } catch (const std::exception& e) {
        if (error.empty()) error = e.what();
        error_status = std::max(error_status, kExitFailure);
        all_pass = false;
      }
      continue;
    }
    for (auto& report : outcome.reports) {
      // --inject-failure: shift one instance (counted across reports) by one.
      if (remaining >= 0) {
        if (static_cast<std::size_t>(remaining) < report.instances().size()) {
          report.perturb(static_cast<std::size_t>(remaining), 1);
          remaining = -1;
        } else {
          remaining -= static_cast<long>(report.instances().size());
        }
      }
      reports.push_back(report.to_json(!config.no_timing));
      csv += report.to_csv_rows();
      all_pass = all_pass && report.pass();
    }
  }
  if (remaining >= 0 && error.empty()) throw std::invalid_argument("--inject-failure index past the last instance");

  nlohmann::json doc;
  doc["schema"] = kReportSchema;
  doc["command"] = "verify " + config.command;
  doc["config"] = config_json(config);
  doc["pass"] = all_pass && error.empty();
  doc["reports"] = std::move(reports);
  if (!error.empty()) {
    doc["error"] = error;
    err << "error: " << error << '\n';
  }
  if (!config.no_timing) doc["timing"] = {{"total_ms", total_ms}};
  result.document = std::move(doc);
  result.csv = std::move(csv);

  if (error_status != kExitPass) {
    result.status = error_status;
  } else if (!all_pass && (!is_conjecture(config.command) || config.strict)) {
    result.status = kExitFailure;
  }
  return result;
}

Emitted run_dim(const RunConfig& config) {
  nlohmann::json value;
  std::string csv = "quantity,value\n";
  const int cap = config.max_degree;
  if (config.command == "invariants") {
    const int k = single_int(config.k, "k");
    const int n = required_int(config.n, "n");
    const int d = required_int(config.d, "d");
    if (k < 1 || n < 1 || d < 0) throw std::invalid_argument("dim invariants needs k, n >= 1 and d >= 0");
    check_cap(n, cap, "n");
    check_cap(d, cap, "d");
    const BigInt a = invariant_dim(n, k, d, InvariantMethod::enumeration);
    const BigInt b = invariant_dim(n, k, d, InvariantMethod::molien);
    value = {{"enumeration", big_json(a)}, {"molien", big_json(b)}};
    csv += "enumeration," + a.get_str() + "\nmolien," + b.get_str() + "\n";
  } else if (config.command == "weyl") {
    if (config.lambda.empty()) throw std::invalid_argument("--lambda is required");
    const Partition lambda = Partition::parse(config.lambda);
    const int n = required_int(config.n, "n");
    check_cap(n, cap, "n");
    const BigInt v = weyl_invariant_dim(lambda, n);
    value = big_json(v);
    csv += "weyl_invariant_dim," + v.get_str() + "\n";
  } else if (config.command == "g") {
    if (config.lambda.empty() || config.mu.empty()) throw std::invalid_argument("--lambda and --mu are required");
    const Partition lambda = Partition::parse(config.lambda);
    const Partition mu = Partition::parse(config.mu);
    check_cap(mu.size(), cap, "|mu|");
    const BigInt v = g_coeff(lambda, mu);
    value = big_json(v);
    csv += "g," + v.get_str() + "\n";
  } else if (config.command == "mL") {
    if (config.mu.empty() || config.L.empty()) throw std::invalid_argument("--mu and --L are required");
    const Partition mu = Partition::parse(config.mu);
    check_cap(mu.size(), cap, "|mu|");
    ExponentVector L;
    std::stringstream stream(config.L);
    std::string item;
    while (std::getline(stream, item, ',')) L.push_back(single_int(item, "L"));
    check_nonnegative(L, "L");
    if (L.empty()) throw std::invalid_argument("--L must list at least one degree");
    const BigInt v = m_mu_L(mu, L);
    value = big_json(v);
    csv += "m_mu_L," + v.get_str() + "\n";
  } else {
    throw std::invalid_argument("unknown dim target '" + config.command + "'");
  }
  Emitted result;
  result.document = {{"schema", kReportSchema},
                     {"command", "dim " + config.command},
                     {"config", config_json(config)},
                     {"result", std::move(value)}};
  result.csv = std::move(csv);
  return result;
}

std::string series_csv(const QSeries& series) {
  std::string csv = "degree,coefficient\n";
  for (std::size_t d = 0; d < series.size(); ++d) csv += std::to_string(d) + "," + series[d].get_str() + "\n";
  return csv;
}

Emitted run_series(const RunConfig& config, const CacheDirectory& cache) {
  const int cap = config.max_degree;
  const int k = single_int(config.k, "k");
  if (k < 1) throw std::invalid_argument("--k must be at least 1");
  const int d = required_int(config.d, "d");
  if (d < 0) throw std::invalid_argument("--d must be non-negative");
  check_cap(d, cap, "d");
  nlohmann::json value;
  std::string csv;
  if (config.command == "product") {
    const QSeries series = product_series(k, d);
    value = series_json(series);
    csv = series_csv(series);
  } else if (config.command == "plethysm") {
    if (config.mu.empty()) throw std::invalid_argument("--mu is required");
    const Partition mu = Partition::parse(config.mu);
    const MultigradedSeries series = plethysm_series(mu, k, d);
    const QSeries totals = series.total_degree_coefficients();
    value = {{"multigraded", series.to_json()}, {"total_degree", series_json(totals)}};
    csv = series_csv(totals);
  } else if (config.command == "hilbert") {
    const int n = required_int(config.n, "n");
    if (n < 1) throw std::invalid_argument("--n must be at least 1");
    check_cap(n, cap, "n");
    QSeries series{1};
    if (d >= 1) {
      const LeadMonomialSet leads = lead_monomials_upto(k, n, d, order_choice(config), &cache);
      series = standard_monomial_counts({leads.monomials.begin(), leads.monomials.end()}, k * n, d);
    }
    value = series_json(series);
    csv = series_csv(series);
  } else {
    throw std::invalid_argument("unknown series target '" + config.command + "'");
  }
  Emitted result;
  result.document = {{"schema", kReportSchema},
                     {"command", "series " + config.command},
                     {"config", config_json(config)},
                     {"result", std::move(value)}};
  result.csv = std::move(csv);
  return result;
}

Emitted run_cache(const RunConfig& config, const CacheDirectory& cache) {
  namespace fs = std::filesystem;
  Emitted result;
  result.document = {{"schema", kReportSchema}, {"command", "cache " + config.command},
                     {"root", cache.root().string()}};
  if (config.command == "list") {
    const auto entries = cache.list();
    result.document["entries"] = entries;
    for (const auto& e : entries) result.csv += e + "\n";
  } else if (config.command == "clear") {
    std::error_code ec;
    if (fs::exists(cache.root(), ec) && !fs::is_directory(cache.root(), ec)) {
      throw CacheError("cache root " + cache.root().string() + " is not a directory");
    }
    cache.clear();
    result.document["cleared"] = true;
  } else if (config.command == "path") {
    result.csv = cache.root().string() + "\n";
  } else {
    throw std::invalid_argument("unknown cache command '" + config.command + "'");
  }
  return result;
}

void add_flags(CLI::App* app, RunConfig& config) {
  app->add_option("--k", config.k, "number of variable sets (list or range)");
  app->add_option("--n", config.n, "number of variables per set (list or range)");
  app->add_option("--m", config.m, "truncation degree or smaller ring size (list or range)");
  app->add_option("--d", config.d, "degree bound");
  app->add_option("--r", config.r, "first-row extension bound");
  app->add_option("--mu", config.mu, "partition, e.g. 3+1");
  app->add_option("--lambda", config.lambda, "partition, e.g. 2+1");
  app->add_option("--L", config.L, "multidegree, e.g. 2,1");
  app->add_option("--order-family", config.order_family, "grevlex, grlex or lex")
      ->check(CLI::IsMember({"grevlex", "grlex", "lex"}));
  app->add_option("--significance", config.significance, "interleaved or displayed")
      ->check(CLI::IsMember({"interleaved", "displayed"}));
  app->add_option("--out", config.out, "write the report to this file");
  app->add_option("--format", config.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app->add_option("--cache-dir", config.cache_dir, "cache directory");
  app->add_flag("--strict", config.strict, "fail the run on conjecture counterexamples");
  app->add_option("--threads", config.threads, "worker threads")->check(CLI::Range(1, 256));
  app->add_option("--max-degree", config.max_degree, "cap on every degree-like parameter")
      ->check(CLI::Range(0, 64));
  app->add_flag("--no-timing", config.no_timing, "omit wall-clock fields");
  app->add_flag("--long", config.long_run, "allow the long-running quasi-freeness grid");
  app->add_option("--inject-failure", config.inject, "perturb the instance with this index (testing)")
      ->group("")
      ->check(CLI::NonNegativeNumber);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app("Stability checks for polarized symmetric-group invariants", "stabilab");
  app.require_subcommand(1);

  const std::vector<std::pair<std::string, std::vector<std::string>>> groups = {
      {"verify",
       {"corollary2", "theorem1", "weyl", "gstab", "multigraded", "quasifree", "conjecture2", "coinvariants"}},
      {"series", {"product", "plethysm", "hilbert"}},
      {"dim", {"invariants", "weyl", "g", "mL"}},
      {"cache", {"list", "clear", "path"}},
  };
  for (const auto& [group, commands] : groups) {
    CLI::App* sub = app.add_subcommand(group, group + " subcommands");
    sub->require_subcommand(1);
    for (const auto& command : commands) {
      CLI::App* leaf = sub->add_subcommand(command);
      add_flags(leaf, config);
      leaf->callback([&config, group, command] {
        config.group = group;
        config.command = command;
      });
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  const CacheDirectory cache(config.cache_dir.empty() ? CacheDirectory::default_root()
                                                      : std::filesystem::path(config.cache_dir));
  Emitted result;
  try {
    if (config.group != "cache") default_characters().attach_cache(cache);
    if (config.group == "verify") {
      result = run_verify(config, cache, err);
    } else if (config.group == "dim") {
      result = run_dim(config);
    } else if (config.group == "series") {
      result = run_series(config, cache);
    } else {
      result = run_cache(config, cache);
    }
  } catch (const CapError& e) {
    err << "resource cap: " << e.what() << '\n';
    return kExitResource;
  } catch (const ResourceError& e) {
    err << "resource cap: " << e.what() << '\n';
    return kExitResource;
  } catch (const CacheError& e) {
    err << "cache error: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }

  const std::string text = config.format == "csv" ? result.csv : result.document.dump(2) + "\n";
  if (config.out.empty()) {
    out << text;
  } else {
    std::ofstream file(config.out);
    if (!(file << text)) {
      err << "cannot write " << config.out << '\n';
      return kExitResource;
    }
  }
  return result.status;
}

}  // namespace stabilab
