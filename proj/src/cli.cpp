#include "qfgaps/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "qfgaps/analytic_constants.hpp"
#include "qfgaps/census.hpp"
#include "qfgaps/characters.hpp"
#include "qfgaps/errors.hpp"
#include "qfgaps/gaps.hpp"
#include "qfgaps/local_densities.hpp"
#include "qfgaps/parallel.hpp"
#include "qfgaps/repr_sets.hpp"
#include "qfgaps/serialize.hpp"
#include "qfgaps/verify.hpp"

namespace qfg::cli {
namespace {

using json = nlohmann::ordered_json;

struct Globals {
  unsigned threads = 0;  // 0: keep env / hardware default
  std::string format = "csv";
  std::string out_path;
  bool header = false;
  std::uint64_t seed = 1;
  std::uint64_t witness_cap = kDefaultWitnessCap;
};

// Everything a subcommand produced. csv rows are joined with '\n'.
struct Output {
  std::string csv_header;
  std::vector<std::string> csv_rows;
  json doc;
  int code = kExitOk;
};

std::string row(std::initializer_list<std::string> fields) {
  std::string s;
  for (const auto& f : fields) {
    if (!s.empty()) s += ',';
    s += f;
  }
  return s;
}

template <class T>
std::string str(T v) {
  if constexpr (std::is_floating_point_v<T>) {
    return format_real(v);
  } else {
    return std::to_string(v);
  }
}

double round15(double v) { return std::stod(format_real(v)); }

std::vector<const char*> argv_of(std::span<const std::string> args) {
  std::vector<const char*> argv{"qfg"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return argv;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"quadratic-form gap and correlation toolkit", "qfg"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--threads", g.threads, "worker threads (overrides QFG_THREADS)")->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", g.out_path, "write output to FILE instead of stdout");
  app.add_flag("--header", g.header, "print the CSV header line first");
  app.add_option("--seed", g.seed, "seed for sampled suites");
  app.add_option("--witness-cap", g.witness_cap, "maximum witnesses listed by census");

  std::function<Output()> action;

  // repr
  auto* repr = app.add_subcommand("repr", "representation counts r2, R2 or ideal counts");
  std::string repr_fn = "r2", repr_mode = "formula";
  std::uint64_t repr_n = 0;
  std::int64_t repr_d = -3;
  repr->add_option("--fn", repr_fn)->check(CLI::IsMember({"r2", "R2", "ideal"}));
  repr->add_option("--n", repr_n)->required()->check(CLI::PositiveNumber);
  repr->add_option("--mode", repr_mode)->check(CLI::IsMember({"formula", "enumerate"}));
  repr->add_option("--D", repr_d, "discriminant for --fn ideal");
  repr->callback([&] {
    action = [&] {
      const ReprMode mode = repr_mode == "formula" ? ReprMode::Formula : ReprMode::Enumerate;
      std::uint64_t v = 0;
      if (repr_fn == "r2") {
        v = r2(repr_n, mode);
      } else if (repr_fn == "R2") {
        v = R2(repr_n, mode);
      } else {
        v = ideal_count(repr_n, repr_d);
      }
      Output o{"n,value", {row({str(repr_n), str(v)})}, {{"fn", repr_fn}, {"n", repr_n}, {"value", v}}};
      return o;
    };
  });

  // member
  auto* member = app.add_subcommand("member", "set membership test");
  std::string member_set;
  std::uint64_t member_n = 0;
  member->add_option("--set", member_set)->required();
  member->add_option("--n", member_n)->required();
  member->callback([&] {
    action = [&] {
      const SetId set = SetId::parse(member_set);
      const bool in = is_member(set, member_n);
      return Output{"set,n,member",
                    {row({set.name(), str(member_n), in ? "1" : "0"})},
                    {{"set", set.name()}, {"n", member_n}, {"member", in}}};
    };
  });

  // eta
  auto* eta_cmd = app.add_subcommand("eta", "local density count eta_a(q)");
  std::int64_t eta_a = 0;
  std::uint64_t eta_q = 0;
  bool eta_use_brute = false;
  eta_cmd->add_option("--a", eta_a)->required();
  eta_cmd->add_option("--q", eta_q)->required()->check(CLI::PositiveNumber);
  eta_cmd->add_flag("--brute", eta_use_brute, "count residues directly");
  eta_cmd->callback([&] {
    action = [&] {
      const auto v = eta_use_brute ? eta_brute(eta_a, eta_q) : eta(eta_a, eta_q);
      return Output{"a,q,eta", {row({str(eta_a), str(eta_q), str(v)})}, {{"a", eta_a}, {"q", eta_q}, {"eta", v}}};
    };
  });

  // lambda
  auto* lambda_cmd = app.add_subcommand("lambda", "lambda_a(q) = eta_a(q)/q and its Mobius convolution");
  std::int64_t lambda_a = 0;
  std::uint64_t lambda_q = 0;
  lambda_cmd->add_option("--a", lambda_a)->required();
  lambda_cmd->add_option("--q", lambda_q)->required()->check(CLI::PositiveNumber);
  lambda_cmd->callback([&] {
    action = [&] {
      const Rational v = lambda(lambda_a, lambda_q);
      const LambdaBar b = lambda_bar(lambda_a, lambda_q);
      return Output{"a,q,lambda,lambda_bar,f",
                    {row({str(lambda_a), str(lambda_q), v.str(), b.value.str(), str(b.f)})},
                    {{"a", lambda_a},
                     {"q", lambda_q},
                     {"lambda", v.str()},
                     {"lambda_bar", b.value.str()},
                     {"f", b.f}}};
    };
  });

  // beta, mainterm share the shape psi,a,eps
  std::string beta_psi = "chi6";
  std::int64_t beta_a = 1;
  double beta_eps = 1e-9;
  auto* beta_cmd = app.add_subcommand("beta", "the Euler-product constant beta(psi,a)");
  auto* main_cmd = app.add_subcommand("mainterm", "slope beta(psi,a)*eta*(psi,a)");
  for (auto* sub : {beta_cmd, main_cmd}) {
    sub->add_option("--psi", beta_psi);
    sub->add_option("--a", beta_a)->required();
    sub->add_option("--eps", beta_eps)->check(CLI::PositiveNumber);
  }
  auto truncated = [&](const char* name, TruncatedValue (*fn)(const DirichletCharacter&, std::int64_t, double)) {
    return [&, name, fn] {
      action = [&, name, fn] {
        const auto psi = DirichletCharacter::parse(beta_psi);
        const TruncatedValue v = fn(psi, beta_a, beta_eps);
        json doc{{"what", name}, {"psi", psi.id()}, {"a", beta_a}};
        doc.update(to_json(v));
        return Output{"psi,a,value,error_bound,terms",
                      {row({psi.id(), str(beta_a), str(v.value), str(v.error_bound), str(v.terms_used)})},
                      doc};
      };
    };
  };
  beta_cmd->callback(truncated("beta", &beta));
  main_cmd->callback(truncated("mainterm", &main_term));

  // etastar
  auto* etastar_cmd = app.add_subcommand("etastar", "eta*(psi,a) as a rational multiple of pi");
  std::string etastar_psi = "chi6";
  std::int64_t etastar_a = 1;
  etastar_cmd->add_option("--psi", etastar_psi);
  etastar_cmd->add_option("--a", etastar_a)->required();
  etastar_cmd->callback([&] {
    action = [&] {
      const auto psi = DirichletCharacter::parse(etastar_psi);
      const PiMultiple v = eta_star(psi, etastar_a);
      return Output{"psi,a,pi_coefficient,value",
                    {row({psi.id(), str(etastar_a), v.coefficient.str(), str(v.value())})},
                    {{"psi", psi.id()},
                     {"a", etastar_a},
                     {"pi_coefficient", v.coefficient.str()},
                     {"value", round15(v.value())}}};
    };
  });

  // muller
  auto* muller_cmd = app.add_subcommand("muller", "main-term slope for a pair of primitive characters");
  std::string muller_psi = "kronecker:5", muller_rho = "kronecker:5";
  std::uint64_t muller_a = 1;
  double muller_eps = 1e-9;
  muller_cmd->add_option("--psi", muller_psi);
  muller_cmd->add_option("--rho", muller_rho);
  muller_cmd->add_option("--a", muller_a)->required()->check(CLI::PositiveNumber);
  muller_cmd->add_option("--eps", muller_eps)->check(CLI::PositiveNumber);
  muller_cmd->callback([&] {
    action = [&] {
      const auto psi = DirichletCharacter::parse(muller_psi);
      const auto rho = DirichletCharacter::parse(muller_rho);
      const TruncatedValue c = muller_c(psi, rho, muller_a, muller_eps);
      const Rational bracket = muller_bracket(psi, rho, muller_a);
      const TruncatedValue m = muller_main(psi, rho, muller_a, muller_eps);
      return Output{"psi,rho,a,C,bracket,main,error_bound",
                    {row({psi.id(), rho.id(), str(muller_a), str(c.value), bracket.str(), str(m.value),
                          str(m.error_bound)})},
                    {{"psi", psi.id()},
                     {"rho", rho.id()},
                     {"a", muller_a},
                     {"C", round15(c.value)},
                     {"bracket", bracket.str()},
                     {"main", round15(m.value)},
                     {"error_bound", round15(m.error_bound)}}};
    };
  });

  // correlate
  auto* corr_cmd = app.add_subcommand("correlate", "exact correlation sums against the main term");
  std::string corr_psi = "chi6";
  std::int64_t corr_a = 1;
  std::vector<std::uint64_t> corr_xs;
  double corr_eps = 1e-9;
  corr_cmd->add_option("--psi", corr_psi);
  corr_cmd->add_option("--a", corr_a)->required();
  corr_cmd->add_option("--x", corr_xs, "one or more x values, increasing")->required()->expected(1, -1);
  corr_cmd->add_option("--eps", corr_eps)->check(CLI::PositiveNumber);
  corr_cmd->callback([&] {
    action = [&] {
      const auto psi = DirichletCharacter::parse(corr_psi);
      const auto reports = ratio_report(psi, corr_a, corr_xs, corr_eps);
      Output o{std::string(kCorrelationHeader), {}, json::array()};
      for (const auto& r : reports) {
        o.csv_rows.push_back(correlation_csv(r));
        o.doc.push_back(to_json(r));
      }
      return o;
    };
  });

  // census
  auto* census_cmd = app.add_subcommand("census", "count n in [x, x+H] with n in set1 and n+a in set2");
  std::string census_set1 = "triangle", census_set2 = "square2";
  std::int64_t census_a = 1;
  std::uint64_t census_x = 0, census_len = 0;
  census_cmd->add_option("--set1", census_set1);
  census_cmd->add_option("--set2", census_set2);
  census_cmd->add_option("--a", census_a)->required();
  census_cmd->add_option("--x", census_x)->required();
  census_cmd->add_option("--len", census_len, "window length H")->required();
  census_cmd->callback([&] {
    action = [&] {
      const auto rec =
          census_interval(SetId::parse(census_set1), SetId::parse(census_set2), census_a, census_x, census_len,
                          g.witness_cap);
      std::string body = census_csv(rec);
      if (!body.empty() && body.back() == '\n') body.pop_back();
      return Output{std::string(kCensusHeader), {body}, to_json(rec)};
    };
  });

  // gap
  auto* gap_cmd = app.add_subcommand("gap", "explicit witness n > x with n in W1 and n+a in sums of two squares");
  std::int64_t gap_a = 0;
  std::uint64_t gap_x = 0;
  std::string gap_pair = "triangle";
  gap_cmd->add_option("--a", gap_a)->required();
  gap_cmd->add_option("--x", gap_x)->required()->check(CLI::PositiveNumber);
  gap_cmd->add_option("--pair", gap_pair)->check(CLI::IsMember({"sq2", "triangle"}));
  gap_cmd->callback([&] {
    action = [&] {
      if (gap_a == 0) throw std::invalid_argument("--a must be nonzero");
      const GapWitness w = gap_pair == "sq2" ? gap_square2_square2(gap_a, gap_x) : gap_triangle_square2(gap_a, gap_x);
      return Output{{}, {}, to_json(w)};
    };
  });

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run invariant suites");
  std::string verify_suite = "all";
  unsigned verify_budget = 1;
  verify_cmd->add_option("--suite", verify_suite)
      ->check(CLI::IsMember({"oracles", "lemmas", "constants", "gaps", "all"}));
  verify_cmd->add_option("--budget", verify_budget, "work multiplier; 0 runs nothing");
  verify_cmd->callback([&] {
    action = [&] {
      const auto results = run_verify(verify_suite, verify_budget, g.seed);
      Output o{"suite,check,status,cases", {}, json::array()};
      for (const auto& r : results) {
        o.csv_rows.push_back(row({r.suite, r.name, r.pass ? "PASS" : "FAIL", str(r.cases)}));
        json item{{"suite", r.suite}, {"check", r.name}, {"status", r.pass ? "PASS" : "FAIL"}, {"cases", r.cases}};
        if (!r.pass) {
          item["detail"] = r.detail;
          err << "verify: " << r.suite << '/' << r.name << " failed at " << r.detail << '\n';
          o.code = kExitInvariant;
        }
        o.doc.push_back(std::move(item));
      }
      return o;
    };
  });

  try {
    const auto argv = argv_of(args);
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (g.threads > 0) set_default_threads(g.threads);
    if (gap_cmd->parsed()) g.format = "json";  // gap has no csv form
    Output o = action();

    std::ostringstream buf;
    if (g.format == "json") {
      buf << o.doc.dump(2) << '\n';
    } else {
      if (g.header && !o.csv_header.empty()) buf << o.csv_header << '\n';
      for (const auto& r : o.csv_rows) buf << r << '\n';
    }
    if (g.out_path.empty()) {
      out << buf.str();
    } else {
      std::ofstream file(g.out_path, std::ios::binary);
      if (!file) throw std::invalid_argument("cannot open --out file '" + g.out_path + "'");
      file << buf.str();
    }
    return o.code;
  } catch (const BudgetError& e) {
    err << "qfg: budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::overflow_error& e) {
    err << "qfg: overflow: " << e.what() << '\n';
    return kExitBudget;
  } catch (const InvariantError& e) {
    err << "qfg: internal invariant failed: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const std::invalid_argument& e) {
    err << "qfg: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "qfg: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "qfg: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace qfg::cli
