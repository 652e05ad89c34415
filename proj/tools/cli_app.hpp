#pragma once

#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pqgf/pqgf.hpp"

namespace pqgf::cli {

enum class Format { text, json, csv };

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string family;
  std::string parity;
  std::optional<std::string> p, q, k;
  std::optional<std::string> alpha, beta, gamma;
  std::size_t count = 10;
  std::optional<std::size_t> order;
  std::string format = "text";
  std::string scope = "all";
  std::string id;
  bool product = false;
};

inline MPoly parse_param(const std::string& flag, const std::string& text) {
  try {
    return parse_mpoly(text);
  } catch (const std::exception& e) {
    throw usage_error("--" + flag + ": " + e.what());
  }
}

inline Format parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw usage_error("unknown format '" + s + "'");
}

inline FamilyId family_of(const Options& o) {
  if (o.family.empty()) throw usage_error("--family is required");
  try {
    return parse_family(o.family);
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());
  }
}

inline ParitySelector parity_of(const Options& o, ParitySelector fallback) {
  if (o.parity.empty()) return fallback;
  try {
    return parse_parity(o.parity);
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());
  }
}

// p and q from the flags. Without either, special families with --k fall back
// to their k-number bindings and everything else stays symbolic.
inline std::pair<MPoly, MPoly> bindings(const Options& o, FamilyId f) {
  MPoly p = Var::p;
  MPoly q = Var::q;
  if (!o.p && !o.q && o.k && !is_generalized(f)) {
    const SequenceSpec s = k_specialize(f);
    p = s.p();
    q = s.q();
  }
  if (o.p) p = parse_param("p", *o.p);
  if (o.q) q = parse_param("q", *o.q);
  if (o.k) {
    const MPoly k = parse_param("k", *o.k);
    p = substitute(p, Var::k, k);
    q = substitute(q, Var::k, k);
  }
  return {p, q};
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline void print_terms(std::ostream& out, const std::vector<MPoly>& terms, Format fmt,
                        json header) {
  switch (fmt) {
    case Format::text:
      for (std::size_t i = 0; i < terms.size(); ++i) out << (i ? ", " : "") << to_string(terms[i]);
      out << '\n';
      break;
    case Format::csv:
      out << "n,value\n";
      for (std::size_t i = 0; i < terms.size(); ++i) out << i << ',' << csv_field(to_string(terms[i])) << '\n';
      break;
    case Format::json:
      header["terms"] = terms;
      out << header.dump(2) << '\n';
      break;
  }
}

inline int run_seq(const Options& o, std::ostream& out) {
  const FamilyId f = family_of(o);
  const ParitySelector par = parity_of(o, ParitySelector::all_n);
  if (o.count < 1) throw usage_error("--count must be at least 1");
  auto [p, q] = bindings(o, f);
  std::optional<Seeds> seeds;
  if (is_generalized(f)) {
    if (!o.alpha || !o.beta || !o.gamma) throw usage_error(o.family + " needs --alpha, --beta and --gamma");
    seeds = Seeds{parse_param("alpha", *o.alpha), parse_param("beta", *o.beta), parse_param("gamma", *o.gamma)};
  } else if (o.alpha || o.beta || o.gamma) {
    throw usage_error(o.family + " has fixed seeds");
  }
  const SequenceSpec spec(f, p, q, seeds);
  std::vector<MPoly> terms;
  if (o.product) {
    if (par == ParitySelector::all_n) throw usage_error("--product needs --parity even or odd");
    terms = product_terms(spec, spec, par, o.count);
  } else if (par == ParitySelector::all_n) {
    terms = seq_terms(spec, o.count);
  } else {
    terms = parity_subsequence(seq_terms(spec, 2 * o.count), par, o.count);
  }
  print_terms(out, terms, parse_format(o.format),
              {{"family", family_name(f)}, {"parity", parity_name(par)}, {"p", p}, {"q", q}});
  return 0;
}

inline CatalogEntry entry_of(const Options& o) {
  const FamilyId f = family_of(o);
  if (is_generalized(f)) throw usage_error("no closed form for " + o.family);
  const ParitySelector par = parity_of(o, ParitySelector::all_n);
  if (par == ParitySelector::all_n) throw usage_error("--parity must be even or odd");
  auto [p, q] = bindings(o, f);
  const CatalogEntry base = o.product ? product_gf(f, f, par) : family_gf(f, par);
  return instantiate(base, p, q);
}

inline int run_gf(const Options& o, std::ostream& out) {
  const CatalogEntry e = entry_of(o);
  switch (parse_format(o.format)) {
    case Format::text: out << to_string(e.gf) << '\n'; break;
    case Format::csv:
      out << "id,label,numer,denom\n"
          << e.id << ',' << csv_field(e.label) << ',' << csv_field(z_poly_string(e.gf.numer())) << ','
          << csv_field(z_poly_string(e.gf.denom())) << '\n';
      break;
    case Format::json: out << json(e).dump(2) << '\n'; break;
  }
  return 0;
}

inline int run_expand(const Options& o, std::ostream& out) {
  const CatalogEntry e = entry_of(o);
  const std::size_t n = o.order.value_or(10);
  const TruncSeries s = expand(e.gf, n);
  std::vector<MPoly> coeffs(s.coeffs().begin(), s.coeffs().end());
  print_terms(out, coeffs, parse_format(o.format), {{"id", e.id}, {"gf", to_string(e.gf)}, {"order", n}});
  return 0;
}

inline void print_report_line(std::ostream& out, const VerificationReport& r) {
  if (r.passed()) {
    out << "PASS " << r.id << " (order " << r.order << ")\n";
    return;
  }
  const auto& m = *r.first_mismatch;
  out << "FAIL " << r.id << " at n=" << m.index << ": oracle " << to_string(m.lhs) << ", closed form "
      << to_string(m.rhs) << '\n';
  if (r.suggested_numer) out << "     oracle numerator: " << z_poly_string(*r.suggested_numer) << '\n';
}

inline int run_verify(const Options& o, std::ostream& out, std::ostream& err) {
  Scope scope;
  try {
    scope = parse_scope(o.scope);
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());
  }
  if (o.order && *o.order < kMinCheckOrder) throw usage_error("--order must be at least 4");
  const auto reports = run_checks(suite_checks(scope, o.order));
  std::size_t failed = 0;
  for (const auto& r : reports) failed += r.passed() ? 0 : 1;
  switch (parse_format(o.format)) {
    case Format::text:
      for (const auto& r : reports) print_report_line(out, r);
      out << reports.size() - failed << "/" << reports.size() << " checks passed\n";
      break;
    case Format::csv:
      out << "id,order,status,n\n";
      for (const auto& r : reports) {
        out << r.id << ',' << r.order << ',' << (r.passed() ? "pass" : "fail") << ',';
        if (r.first_mismatch) out << r.first_mismatch->index;
        out << '\n';
      }
      break;
    case Format::json:
      out << json{{"scope", o.scope}, {"passed", failed == 0}, {"checks", reports}}.dump(2) << '\n';
      break;
  }
  if (failed == 0) return 0;
  for (const auto& r : reports) {
    if (!r.passed()) {
      err << "verification failed: " << r.id << '\n';
      break;
    }
  }
  return 1;
}

inline int run_tables(const Options& o, std::ostream& out) {
  int t = 0;
  try {
    std::size_t used = 0;
    t = std::stoi(o.id, &used);
    if (used != o.id.size()) throw std::invalid_argument(o.id);
    parse_table(t);
  } catch (const std::exception&) {
    throw usage_error("--id must be a table number 2..7");
  }
  const auto rows = table_entries(parse_table(t));
  switch (parse_format(o.format)) {
    case Format::text:
      for (const auto& e : rows) out << e.label << '\t' << to_string(e.gf) << '\n';
      break;
    case Format::csv:
      out << "label,gf\n";
      for (const auto& e : rows) out << csv_field(e.label) << ',' << csv_field(to_string(e.gf)) << '\n';
      break;
    case Format::json: out << json(rows).dump(2) << '\n'; break;
  }
  return 0;
}

/// Exit codes: 0 ok, 1 verification failure, 2 usage error.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact generating functions for (p,q)-number families", "pqgf"};
  app.require_subcommand(1);
  Options o;

  auto add_params = [&o](CLI::App* sub) {
    sub->add_option("--family", o.family, "fib, lucas, pell, pell-lucas, jac, jac-lucas, gen-fib, gen-pell, gen-jac");
    sub->add_option("--parity", o.parity, "all, even or odd");
    sub->add_option("--p", o.p, "value of p (integer or polynomial in k)");
    sub->add_option("--q", o.q, "value of q");
    sub->add_option("--k", o.k, "value of k");
    sub->add_flag("--product", o.product, "X_n X_{2n} / X_n X_{2n+1} instead of X_{2n} / X_{2n+1}");
    sub->add_option("--format", o.format, "text, json or csv");
  };

  auto* seq = app.add_subcommand("seq", "terms of a sequence");
  add_params(seq);
  seq->add_option("--count", o.count, "number of terms");
  seq->add_option("--alpha", o.alpha);
  seq->add_option("--beta", o.beta);
  seq->add_option("--gamma", o.gamma);

  auto* gf = app.add_subcommand("gf", "closed-form generating function");
  add_params(gf);

  auto* exp = app.add_subcommand("expand", "series coefficients of a generating function");
  add_params(exp);
  exp->add_option("--order", o.order, "highest power of z");

  auto* ver = app.add_subcommand("verify", "run verification checks");
  ver->add_option("--scope", o.scope,
                  "all, theorems, lemmas, families, shapes, generic, products, bridge, consistency, tables");
  ver->add_option("--order", o.order, "truncation order for every check");
  ver->add_option("--format", o.format, "text, json or csv");

  auto* tab = app.add_subcommand("tables", "k-number tables");
  tab->add_option("--id", o.id, "table number 2..7")->required();
  tab->add_option("--format", o.format, "text, json or csv");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    parse_format(o.format);
    if (seq->parsed()) return run_seq(o, out);
    if (gf->parsed()) return run_gf(o, out);
    if (exp->parsed()) return run_expand(o, out);
    if (ver->parsed()) return run_verify(o, out, err);
    return run_tables(o, out);
  } catch (const usage_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace pqgf::cli
