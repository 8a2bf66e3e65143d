#include "degen/cli.hpp"

#include <fstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "degen/characters.hpp"
#include "degen/config.hpp"
#include "degen/degenerate.hpp"
#include "degen/fermionic.hpp"
#include "degen/identities.hpp"
#include "degen/serialize.hpp"
#include "degen/sweep.hpp"
#include "degen/valuation.hpp"

namespace degen {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct GlobalOptions {
  std::string format = "json";
  std::string out;
  int workers = 0;
  std::string config;
};

struct CharacterAddress {
  unsigned d = 1;
  std::size_t chi = 0;
};

void emit(const std::string& text, const GlobalOptions& g, std::ostream& out) {
  if (g.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(g.out, std::ios::binary);
  if (!file) throw UsageError("cannot write " + g.out);
  file << text;
}

Json character_meta(const DirichletCharacter& chi) {
  return Json{{"d", chi.modulus()}, {"chi", chi.index()}, {"exponents", chi.exponents()}, {"order", chi.order()}};
}

Table numbers_table(const CharacterAddress& a, const Rational& lambda, unsigned n_max) {
  const auto& chi = character(a.d, a.chi);
  const auto numbers = generalized_numbers(chi, lambda, n_max);
  Table t;
  t.title = "generalized degenerate Euler numbers";
  t.meta = Json{{"command", "numbers"}};
  t.meta.update(character_meta(chi));
  t.meta["lambda"] = lambda.str();
  t.columns = {"n", "value"};
  for (unsigned n = 0; n <= n_max; ++n) t.rows.push_back({Json(n), to_json(numbers.values[n])});
  return t;
}

Table poly_table(const CharacterAddress& a, const Rational& lambda, unsigned n, const Rational& x) {
  const auto& chi = character(a.d, a.chi);
  Table t;
  t.title = "generalized degenerate Euler polynomial value";
  t.meta = Json{{"command", "poly"}};
  t.meta.update(character_meta(chi));
  t.meta["lambda"] = lambda.str();
  t.columns = {"n", "x", "value"};
  t.rows.push_back({Json(n), Json(x.str()), to_json(generalized_poly_eval(chi, lambda, n, x))});
  return t;
}

Table rsum_table(const CharacterAddress& a, const Rational& lambda, unsigned k, unsigned n) {
  const auto& chi = character(a.d, a.chi);
  Table t;
  t.title = "alternating character sums R_k";
  t.meta = Json{{"command", "rsum"}};
  t.meta.update(character_meta(chi));
  t.meta["lambda"] = lambda.str();
  t.columns = {"k", "n", "value"};
  t.rows.push_back({Json(k), Json(n), to_json(r_sum(k, n, lambda, chi))});
  return t;
}

Table chars_table(unsigned d) {
  Table t;
  t.title = "Dirichlet characters mod " + std::to_string(d);
  t.meta = Json{{"command", "chars"}, {"d", d}};
  t.columns = {"index", "exponents", "order", "conductor", "primitive", "parity", "values"};
  for (const auto& chi : characters_mod(d)) {
    Json exps = Json::array();
    for (unsigned e : chi.exponents()) exps.push_back(e);
    Json values = Json::array();
    for (const auto& v : chi.values()) values.push_back(to_json(v));
    t.rows.push_back({Json(chi.index()), exps, Json(chi.order()), Json(conductor(chi)), Json(is_primitive(chi)),
                      Json(parity(chi)), values});
  }
  return t;
}

Table padic_table(const std::vector<BigInt>& coeffs, unsigned long p, std::pair<unsigned, unsigned> levels,
                  const CharacterAddress& a) {
  if (levels.first < 1) throw UsageError("N must start at 1 or above");
  const QPolynomial f(std::vector<Rational>(coeffs.begin(), coeffs.end()));
  const DirichletCharacter* chi = a.d == 1 ? nullptr : &character(a.d, a.chi);
  const Cyclotomic oracle = chi ? twisted_fermionic_integral(f, *chi) : Cyclotomic(fermionic_integral(f));
  Table t;
  t.title = "finite-level alternating sums against the fermionic integral";
  Json fj = Json::array();
  for (const auto& c : coeffs) fj.push_back(c.get_str());
  t.meta = Json{{"command", "padic"}, {"p", p}, {"f", fj}, {"d", a.d}, {"chi", a.chi}};
  t.columns = {"N", "S_N", "oracle", "valuation", "ok"};
  for (unsigned level = levels.first; level <= levels.second; ++level) {
    const Cyclotomic s = finite_level_sum(f, chi, p, level);
    const Valuation v = p_adic_valuation(s - oracle, p);
    t.rows.push_back({Json(level), to_json(s), to_json(oracle), Json(v.str()), Json(v >= long(level))});
  }
  return t;
}

void add_character_options(CLI::App* cmd, CharacterAddress& a) {
  cmd->add_option("--d", a.d, "Odd modulus")->default_val(1);
  cmd->add_option("--chi", a.chi, "Character index in enumeration order")->default_val(0);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degenerate Euler polynomials, character sums, and symmetry identity checks", "degen"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--format", g.format, "Output format: json, csv, latex")->default_val("json");
  app.add_option("--out", g.out, "Write output to PATH instead of stdout");
  app.add_option("--workers", g.workers, "Worker threads for check (0 = all available)")->default_val(0);
  app.add_option("--config", g.config, "Sweep config file (key = values per line)");

  CharacterAddress addr;
  std::string lambda_text = "0";
  std::string x_text = "0";
  unsigned n_max = 8, n = 0, k = 0;

  auto* numbers = app.add_subcommand("numbers", "Generalized degenerate Euler numbers E_{n,lambda,chi}");
  add_character_options(numbers, addr);
  numbers->add_option("--lambda", lambda_text, "Exact fraction p/q");
  numbers->add_option("--nmax", n_max, "Largest n")->default_val(8);

  auto* poly = app.add_subcommand("poly", "Value of E_{n,lambda,chi}(x)");
  add_character_options(poly, addr);
  poly->add_option("--lambda", lambda_text, "Exact fraction p/q");
  poly->add_option("--n", n, "Degree")->required();
  poly->add_option("--x", x_text, "Exact fraction p/q");

  auto* rsum = app.add_subcommand("rsum", "R_k(n, lambda | chi) = 2 sum_{l<=n} (-1)^l chi(l) (l|lambda)_k");
  add_character_options(rsum, addr);
  rsum->add_option("--lambda", lambda_text, "Exact fraction p/q");
  rsum->add_option("--k", k, "Falling-factorial length")->required();
  rsum->add_option("--n", n, "Upper summation limit")->required();

  auto* chars = app.add_subcommand("chars", "Character table mod d");
  chars->add_option("--d", addr.d, "Odd modulus")->required();

  std::string f_text = "0,1";
  unsigned long prime = 3;
  std::string level_text = "1..4";
  auto* padic = app.add_subcommand("padic", "Finite-level sums S_N(f) against the fermionic integral");
  add_character_options(padic, addr);
  padic->add_option("--f", f_text, "Integer coefficients, lowest degree first")->default_val("0,1");
  padic->add_option("--p", prime, "Odd prime")->default_val(3);
  padic->add_option("--N", level_text, "Level or range a..b")->default_val("1..4");

  std::string identity_text;
  bool default_grid_flag = false, timings = false;
  FlatConfig inline_cfg;
  std::map<std::string, std::string> flag_values;
  auto* check_cmd = app.add_subcommand("check", "Verify identities over a parameter grid");
  check_cmd->add_option("identity", identity_text, "Identity id, comma list, 'all', or 'list'")->required();
  check_cmd->add_flag("--default-grid", default_grid_flag, "Use the default grid (ignores --config)");
  check_cmd->add_flag("--timings", timings, "Include per-report elapsed time in the JSON");
  for (const char* key : {"d", "chi", "lambda", "w1", "w2", "x", "L", "n", "p", "N", "f", "fault-degree"})
    check_cmd->add_option(std::string("--") + key, flag_values[key], "Grid axis (comma-separated list)");

  std::vector<std::string> argv_storage{"degen"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    const OutputFormat format = parse_format(g.format);

    if (numbers->parsed()) {
      emit(render(numbers_table(addr, Rational::parse(lambda_text), n_max), format), g, out);
    } else if (poly->parsed()) {
      emit(render(poly_table(addr, Rational::parse(lambda_text), n, Rational::parse(x_text)), format), g, out);
    } else if (rsum->parsed()) {
      emit(render(rsum_table(addr, Rational::parse(lambda_text), k, n), format), g, out);
    } else if (chars->parsed()) {
      emit(render(chars_table(addr.d), format), g, out);
    } else if (padic->parsed()) {
      emit(render(padic_table(parse_integer_list(f_text), prime, parse_range(level_text), addr), format), g, out);
    } else if (check_cmd->parsed() && identity_text == "list") {
      for (IdentityId id : all_identities()) out << to_string(id) << '\n';
    } else if (check_cmd->parsed()) {
      FlatConfig cfg;
      if (!g.config.empty() && !default_grid_flag) cfg = load_flat_config(g.config);
      if (!g.config.empty() && cfg.count("workers") && g.workers == 0) g.workers = std::stoi(cfg.at("workers"));
      cfg["identities"] = identity_text;
      for (const auto& [key, value] : flag_values) {
        if (value.empty()) continue;
        cfg[key == "fault-degree" ? "fault_degree" : key] = value;
      }
      const SweepGrid grid = apply_config(cfg, default_grid());
      const auto reports = sweep_parallel(expand(grid), g.workers);
      const SweepSummary summary = summarize(reports);

      emit(to_json(reports, timings).dump(2) + "\n", g, out);
      err << "checked " << summary.total << " parameter tuples, " << summary.failed << " failed\n";
      if (!summary.all_hold()) {
        const auto& bad = reports[*summary.first_failed_report];
        err << "first counterexample: " << to_string(bad.params.id) << " " << to_json(bad.params).dump()
            << " at degree " << *bad.first_failure << '\n';
        return kExitIdentityFailed;
      }
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace degen
