#include "zetaq/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "zetaq/errors.hpp"
#include "zetaq/polynomials.hpp"
#include "zetaq/solver.hpp"
#include "zetaq/theorem_coeffs.hpp"
#include "zetaq/zeta_reference.hpp"
#include "zetaq/zeta_series.hpp"

namespace zetaq {
namespace {

using json = nlohmann::ordered_json;

enum class Format { Json, Csv, Text };

struct Options {
  int s = 3;
  int n = 0;
  int n_from = 0;
  int n_to = -1;
  int digits = 10;
  int budget = kDefaultDigitBudget;
  std::string t = "1";
  Format format = Format::Json;
  std::uint64_t seed = 42;
  int trials = 100;
  int max_degree = 3;
  int max = 20;
  int max_s = 0;
  int max_n = 200;
  std::string variant;
  std::string low_order;
  bool adjudicate = false;
};

json rat_json(const Rat& r) { return r.str(); }

json coeffs_json(const PolySpec& p) {
  json a = json::array();
  for (const Rat& c : p.coeffs()) a.push_back(c.str());
  return a;
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

std::string upper_sci(const Rat& x) { return render_scientific_upper(x, 3); }

// Digits of reference precision comfortably below a bound.
int digits_below(const Rat& bound) {
  if (bound.is_zero()) return 30;
  const long bits = static_cast<long>(mpz_sizeinbase(bound.raw().get_den_mpz_t(), 2)) -
                    static_cast<long>(mpz_sizeinbase(bound.raw().get_num_mpz_t(), 2));
  return std::max(30, static_cast<int>(std::ceil(static_cast<double>(bits) * std::log10(2.0))) + 15);
}

RowConventions parse_conventions(const Options& o) {
  RowConventions c;
  if (o.variant == "with-h") c.variant = TranscriptionVariant::RegroupedWithH;
  if (o.low_order == "generic") c.low_order = LowOrderRoute::GenericFormula;
  return c;
}

PolySpec parse_t(const Options& o) { return explicit_poly(parse_coeff_list(o.t)); }

int cmd_approx(const Options& o, std::ostream& out) {
  const PolySpec t = parse_t(o);
  const ApproxResult res = approximate_zeta(o.s, o.n, t, parse_conventions(o));
  const std::string dec = render_decimal(res.alpha, res.beta, o.digits, o.budget);
  switch (o.format) {
    case Format::Json: {
      json j;
      j["s"] = res.s;
      j["n"] = res.n;
      j["t"] = coeffs_json(t);
      j["alpha"] = rat_json(res.alpha);
      j["beta"] = rat_json(res.beta);
      j["theta_bound"] = rat_json(res.theta_bound);
      j["theta_bound_sci"] = upper_sci(res.theta_bound);
      j["digits"] = o.digits;
      j["decimal"] = dec;
      emit_json(out, j);
      break;
    }
    case Format::Csv:
      out << "s,n,alpha,beta,theta_bound,decimal\n"
          << res.s << "," << res.n << "," << res.alpha << "," << res.beta << "," << upper_sci(res.theta_bound)
          << "," << dec << "\n";
      break;
    case Format::Text:
      out << "zeta(" << res.s << ") ~ alpha*zeta(2) + beta, n = " << res.n << "\n"
          << "alpha       = " << res.alpha << "\n"
          << "beta        = " << res.beta << "\n"
          << "theta_bound = " << upper_sci(res.theta_bound) << "\n"
          << "decimal     = " << dec << "\n";
      break;
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::vector<RowConventions> convs;
  if (o.adjudicate) {
    convs = all_conventions();
  } else {
    convs.push_back(parse_conventions(o));
  }
  std::mt19937_64 rng(o.seed);
  json mismatches = json::array();
  ValidationReport total;
  for (int trial = 0; trial < o.trials; ++trial) {
    const auto [p, q, t] = random_triple(rng, o.max_degree);
    const ValidationReport rep = validate_rows(p, q, t, o.s, convs);
    for (const RowCheck& r : rep.rows) {
      if (r.equal || mismatches.size() >= 20) continue;
      json m;
      m["trial"] = trial;
      m["order"] = r.order;
      m["conventions"] = r.convention_sensitive ? to_string(r.conv) : "n/a";
      m["first_difference"] = *r.first_difference == 0 ? "constant" : "zeta(" + std::to_string(*r.first_difference) + ")";
      m["got"] = rat_json(r.got);
      m["expected"] = rat_json(r.expected);
      m["P"] = coeffs_json(p);
      m["Q"] = coeffs_json(q);
      m["T"] = coeffs_json(t);
      mismatches.push_back(std::move(m));
    }
    total.merge(rep);
  }

  json rows = json::array();
  for (int r = 3; r <= o.s; ++r) {
    const std::size_t count = r >= 5 ? convs.size() : 1;
    for (std::size_t ci = 0; ci < count; ++ci) {
      int checked = 0;
      int failed = 0;
      for (const RowCheck& c : total.rows) {
        if (c.order != r || (c.convention_sensitive && !(c.conv == convs[ci]))) continue;
        ++checked;
        failed += c.equal ? 0 : 1;
      }
      json row;
      row["order"] = r;
      row["conventions"] = r >= 5 ? to_string(convs[ci]) : "n/a";
      row["checked"] = checked;
      row["equal"] = failed == 0;
      row["failures"] = failed;
      rows.push_back(std::move(row));
    }
  }

  json j;
  j["command"] = "verify";
  j["s_max"] = o.s;
  j["trials"] = o.trials;
  j["seed"] = o.seed;
  j["max_degree"] = o.max_degree;
  j["rows"] = rows;
  bool ok = false;
  if (o.adjudicate) {
    json passing = json::array();
    for (const RowConventions& c : adjudicate(total, convs)) passing.push_back(to_string(c));
    ok = passing.size() == 1;
    j["passing_conventions"] = passing;
    j["unique"] = ok;
  } else {
    ok = total.all_equal();
    j["all_equal"] = ok;
  }
  j["mismatches"] = mismatches;
  emit_json(out, j);
  return ok ? kExitOk : kExitMismatch;
}

int cmd_lemma2(const Options& o, std::ostream& out) {
  const int max_s = o.max_s > 0 ? o.max_s : o.max;
  const Lemma2Report rep = lemma2_sweep(o.max, o.max, max_s);
  json j;
  j["command"] = "lemma2";
  j["max_r"] = o.max;
  j["max_k"] = o.max;
  j["max_s"] = max_s;
  j["checked"] = rep.checked;
  j["failed"] = rep.failed;
  if (!rep.ok()) {
    static const char* names[] = {"simple", "double", "triple"};
    j["first_failure"] = {{"identity", names[static_cast<int>(rep.first_id)]},
                          {"r", rep.first_r},
                          {"k", rep.first_k},
                          {"s", rep.first_s}};
  }
  j["ok"] = rep.ok();
  emit_json(out, j);
  return rep.ok() ? kExitOk : kExitMismatch;
}

// Upper bound on |alpha zeta(2) + beta - zeta(s)| from reference enclosures,
// refined until their contribution is small next to the theta bound.
Rat error_bound(const ApproxResult& res, int budget) {
  int digits = std::min(budget, digits_below(res.theta_bound));
  for (;;) {
    const Interval approx = res.alpha * zeta_reference(2, digits, budget) + res.beta;
    const Interval err = approx - zeta_reference(res.s, digits, budget);
    if (err.width() * Rat(1000000) <= res.theta_bound || digits >= budget) {
      return err.magnitude();
    }
    digits = std::min(budget, digits * 2);
  }
}

int cmd_table(const Options& o, std::ostream& out) {
  if (o.n_from < 1 || o.n_to < o.n_from) {
    throw CLI::ValidationError("table", "need 1 <= n-from <= n-to");
  }
  const PolySpec t = parse_t(o);
  json rows = json::array();
  if (o.format == Format::Csv) {
    out << "n,theta_bound,abs_error,decimal\n";
  } else if (o.format == Format::Text) {
    out << "n\ttheta_bound\tabs_error\tdecimal\n";
  }
  for (int n = o.n_from; n <= o.n_to; ++n) {
    const ApproxResult res = approximate_zeta(o.s, n, t, parse_conventions(o));
    const std::string tb = upper_sci(res.theta_bound);
    const std::string err = upper_sci(error_bound(res, o.budget));
    const std::string dec = render_decimal(res.alpha, res.beta, o.digits, o.budget);
    switch (o.format) {
      case Format::Csv:
        out << n << "," << tb << "," << err << "," << dec << "\n";
        break;
      case Format::Text:
        out << n << "\t" << tb << "\t" << err << "\t" << dec << "\n";
        break;
      case Format::Json:
        rows.push_back({{"n", n}, {"theta_bound", tb}, {"abs_error", err}, {"decimal", dec}});
        break;
    }
  }
  if (o.format == Format::Json) {
    json j;
    j["command"] = "table";
    j["s"] = o.s;
    j["t"] = coeffs_json(t);
    j["rows"] = rows;
    emit_json(out, j);
  }
  return kExitOk;
}

int cmd_digits(const Options& o, std::ostream& out) {
  const PolySpec t = parse_t(o);
  const Rat target(BigInt(1), pow_int(10, static_cast<unsigned long>(o.digits) + 1));
  for (int n = 1; n <= o.max_n; ++n) {
    const ApproxResult res = approximate_zeta(o.s, n, t, parse_conventions(o));
    if (res.theta_bound > target) continue;
    const std::string dec = render_decimal(res.alpha, res.beta, o.digits, o.budget);
    if (o.format == Format::Json) {
      json j;
      j["s"] = o.s;
      j["digits"] = o.digits;
      j["n"] = n;
      j["theta_bound_sci"] = upper_sci(res.theta_bound);
      j["decimal"] = dec;
      emit_json(out, j);
    } else if (o.format == Format::Csv) {
      out << "s,digits,n,theta_bound,decimal\n"
          << o.s << "," << o.digits << "," << n << "," << upper_sci(res.theta_bound) << "," << dec << "\n";
    } else {
      out << dec << "\n";
    }
    return kExitOk;
  }
  throw PrecisionBudgetExceeded("no n <= " + std::to_string(o.max_n) + " reaches 10^-" +
                                std::to_string(o.digits + 1));
}

void add_format(CLI::App* sub, std::string& target) {
  sub->add_option("--format", target, "Output format: json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
}

Format resolve_format(const std::string& name, Format fallback) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "text") return Format::Text;
  return fallback;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  std::string format_name;
  CLI::App app{"Rational approximations of zeta(s) by alpha*zeta(2) + beta", "zetaq"};
  app.require_subcommand(1);

  const auto variant_check = CLI::IsMember({"with-h", "no-h"});
  const auto route_check = CLI::IsMember({"separate", "generic"});

  auto* approx = app.add_subcommand("approx", "Approximate zeta(s)");
  approx->add_option("--s", o.s, "Zeta argument")->required()->check(CLI::Range(3, 1000));
  approx->add_option("--n", o.n, "Polynomial degree")->required()->check(CLI::Range(1, 100000));
  approx->add_option("--t", o.t, "Third polynomial, comma-separated, lowest degree first");
  approx->add_option("--digits", o.digits, "Decimal places")->check(CLI::Range(1, 100000));
  approx->add_option("--budget", o.budget, "Working-precision budget in digits");
  approx->add_option("--variant", o.variant)->check(variant_check);
  approx->add_option("--low-order", o.low_order)->check(route_check);
  add_format(approx, format_name);

  auto* verify = app.add_subcommand("verify", "Check theorem rows against the partial-fraction oracle");
  verify->add_option("--s", o.s, "Largest row order")->check(CLI::Range(3, 1000));
  verify->add_option("--trials", o.trials)->check(CLI::Range(1, 1000000));
  verify->add_option("--seed", o.seed);
  verify->add_option("--max-degree", o.max_degree)->check(CLI::Range(0, 20));
  verify->add_option("--variant", o.variant)->check(variant_check);
  verify->add_option("--low-order", o.low_order)->check(route_check);
  verify->add_flag("--adjudicate", o.adjudicate, "Try every convention and report which ones pass");

  auto* lemma2 = app.add_subcommand("lemma2", "Check the telescoping identities exactly");
  lemma2->add_option("--max", o.max, "Upper limit for r, k and s")->check(CLI::Range(1, 1000));
  lemma2->add_option("--max-s", o.max_s, "Separate upper limit for s")->check(CLI::Range(1, 1000));

  auto* table = app.add_subcommand("table", "Convergence table over a range of n");
  table->add_option("--s", o.s)->check(CLI::Range(3, 1000));
  table->add_option("--n-from", o.n_from)->required();
  table->add_option("--n-to", o.n_to)->required();
  table->add_option("--t", o.t);
  table->add_option("--digits", o.digits)->check(CLI::Range(1, 100000));
  table->add_option("--budget", o.budget);
  table->add_option("--variant", o.variant)->check(variant_check);
  table->add_option("--low-order", o.low_order)->check(route_check);
  add_format(table, format_name);

  auto* digits = app.add_subcommand("digits", "Smallest n whose bound reaches the requested digits");
  digits->add_option("--s", o.s)->check(CLI::Range(3, 1000));
  digits->add_option("--digits", o.digits)->required()->check(CLI::Range(1, 100000));
  digits->add_option("--t", o.t);
  digits->add_option("--max-n", o.max_n)->check(CLI::Range(1, 100000));
  digits->add_option("--budget", o.budget);
  add_format(digits, format_name);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (approx->parsed()) {
      o.format = resolve_format(format_name, Format::Json);
      return cmd_approx(o, out);
    }
    if (verify->parsed()) return cmd_verify(o, out);
    if (lemma2->parsed()) return cmd_lemma2(o, out);
    if (table->parsed()) {
      o.format = resolve_format(format_name, Format::Csv);
      return cmd_table(o, out);
    }
    if (digits->parsed()) {
      o.format = resolve_format(format_name, Format::Text);
      return cmd_digits(o, out);
    }
  } catch (const PrecisionBudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SingularSystem& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace zetaq
