// Acceptance run: one line per criterion.
//   acceptance [--golden DIR] [--expect-red N,N...]
// Exit status is 0 when exactly the listed criteria are red (none by default).

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "oracles.hpp"
#include "pqgf/pqgf.hpp"

using namespace pqgf;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(3);
  os << s << "s";
  return os.str();
}

Outcome suite(const std::vector<CatalogEntry>& entries, std::size_t order, std::size_t expected, double limit) {
  const auto t0 = Clock::now();
  std::vector<Check> checks;
  for (const auto& e : entries) checks.push_back({e.id, [e, order] { return verify_entry(e, order); }});
  const auto reports = run_checks(checks);
  const double dt = seconds_since(t0);
  Outcome o;
  std::size_t passed = 0;
  std::string failures;
  for (const auto& r : reports) {
    if (r.passed()) {
      ++passed;
    } else {
      failures += " " + r.id + "@n=" + std::to_string(r.first_mismatch->index);
    }
  }
  o.ok = reports.size() == expected && passed == expected && dt < limit;
  o.detail = std::to_string(passed) + "/" + std::to_string(reports.size()) + " in " + fmt_seconds(dt);
  if (!failures.empty()) o.detail += "; mismatches:" + failures;
  return o;
}

Outcome theorems() {
  const auto t0 = Clock::now();
  std::vector<Check> checks;
  for (TheoremId id : kAllTheorems) checks.push_back({"", [id] { return theorem_check(id, 12); }});
  const auto reports = run_checks(checks);
  const double dt = seconds_since(t0);
  std::size_t passed = 0;
  for (const auto& r : reports) passed += r.passed() ? 1 : 0;
  return {passed == 8 && dt < 30.0, std::to_string(passed) + "/8 at order 12 in " + fmt_seconds(dt)};
}

Outcome denominators() {
  const MPoly p(Var::p), q(Var::q);
  const MPoly p2 = p * p, q2 = q * q, q3 = q2 * q, p4 = p2 * p2;
  const std::vector<std::vector<MPoly>> typed{
      {1, -(p * (p2 + 2 * q)), -(q * (p4 + 3 * p2 * q + 2 * q2)), p * q3 * (p2 + 2 * q), pow(q, 6)},
      {1, -(4 * p * (2 * p2 + q)), -(2 * q * (8 * p4 + 6 * p2 * q + q2)), 4 * p * q3 * (2 * p2 + q), pow(q, 6)},
      {1, -(p * (p2 + 4 * q)), -(2 * q * (p4 + 6 * p2 * q + 8 * q2)), 8 * p * q3 * (p2 + 4 * q), 64 * pow(q, 6)},
  };
  const std::array<AlphabetPair, 3> pairs{AlphabetPair::signed_pair(p, q), AlphabetPair::signed_pair(2 * p, q),
                                          AlphabetPair::signed_pair(p, 2 * q)};
  int good = 0;
  for (int i = 0; i < 3; ++i) good += product_denominator(pairs[i], pairs[i]) == typed[i] ? 1 : 0;
  return {good == 3, std::to_string(good) + "/3 denominators equal"};
}

std::vector<oracle::Int> int_coeffs(const RationalGF& gf, std::size_t order) {
  std::vector<oracle::Int> out;
  const TruncSeries s = expand(gf, order);
  for (const auto& c : s.coeffs()) out.push_back(eval(c, {}));
  return out;
}

Outcome tables(const std::string& golden_dir) {
  int rows_ok = 0, rows = 0;
  for (int t = 2; t <= 7; ++t) {
    std::ifstream in(golden_dir + "/table" + std::to_string(t) + ".txt");
    std::vector<std::string> lines;
    for (std::string l; std::getline(in, l);) lines.push_back(l);
    const auto entries = table_entries(parse_table(t));
    for (std::size_t i = 0; i < entries.size(); ++i) {
      ++rows;
      if (i < lines.size() && lines[i] == entries[i].label + "\t" + to_string(entries[i].gf)) ++rows_ok;
    }
  }
  const bool spots = int_coeffs(table_entries(TableId::T5)[0].gf, 4) == oracle::ints({0, 1, 3, 16, 63}) &&
                     int_coeffs(table_entries(TableId::T6)[0].gf, 4) == oracle::ints({0, 2, 24, 350, 4896}) &&
                     int_coeffs(table_entries(TableId::T7)[3].gf, 3) == oracle::ints({2, 7, 155, 889});
  return {rows_ok == 24 && rows == 24 && spots,
          std::to_string(rows_ok) + "/24 golden rows, spot values " + (spots ? "ok" : "wrong")};
}

Outcome classic_closure() {
  struct Row {
    TableId table;
    std::size_t row;
    const char* name;
    std::size_t offset;
    const char* text;
  };
  const std::vector<Row> rows{
      {TableId::T2, 0, "fib", 0, "z / (1 - 3*z + z^2)"},
      {TableId::T2, 1, "fib", 1, "(1 - z)/(1 - 3*z + z^2)"},
      {TableId::T2, 2, "lucas", 0, "(2 - 3*z)/(1 - 3*z + z^2)"},
      {TableId::T2, 3, "lucas", 1, "(1 + z)/(1 - 3*z + z^2)"},
      {TableId::T3, 0, "pell", 0, "2*z / (1 - 6*z + z^2)"},
      {TableId::T3, 1, "pell", 1, "(1 - z)/(1 - 6*z + z^2)"},
      {TableId::T3, 2, "pell-lucas", 0, "(2 - 6*z)/(1 - 6*z + z^2)"},
      {TableId::T3, 3, "pell-lucas", 1, "(2 + 2*z)/(1 - 6*z + z^2)"},
      {TableId::T4, 0, "jac", 0, "z / (1 - 5*z + 4*z^2)"},
      {TableId::T4, 1, "jac", 1, "(1 - 2*z)/(1 - 5*z + 4*z^2)"},
      {TableId::T4, 2, "jac-lucas", 0, "(2 - 5*z)/(1 - 5*z + 4*z^2)"},
      {TableId::T4, 3, "jac-lucas", 1, "(1 + 2*z)/(1 - 5*z + 4*z^2)"},
  };
  int good = 0;
  for (const auto& r : rows) {
    const RationalGF gf = substitute(table_entries(r.table)[r.row].gf, {{Var::k, MPoly(1)}});
    const auto want = oracle::every_other(oracle::family(r.name, 1, 1, 24), r.offset, 10);
    if (to_string(gf) == r.text && int_coeffs(gf, 9) == want) ++good;
  }
  return {good == 12, std::to_string(good) + "/12 classic forms, 10 coefficients each"};
}

Outcome bridge() {
  int good = 0;
  for (FamilyId f : kSpecialFamilies) good += bridge_check(f, 16).passed() ? 1 : 0;
  return {good == 6, std::to_string(good) + "/6 families for n <= 16"};
}

Outcome kernel() {
  std::mt19937_64 rng(99);
  constexpr int kCases = 200;
  int ring = 0, hom = 0, recip = 0, div = 0;
  std::uniform_int_distribution<int> val(-9, 9);
  std::uniform_int_distribution<int> len(0, 8);
  for (int i = 0; i < kCases; ++i) {
    const MPoly a = oracle::random_poly(rng), b = oracle::random_poly(rng), c = oracle::random_poly(rng);
    if (a + b == b + a && a * b == b * a && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c &&
        (a + b) + c == a + (b + c) && (a - a).is_zero())
      ++ring;
    const Bindings at{{Var::p, val(rng)}, {Var::q, val(rng)}, {Var::k, val(rng)}};
    if (eval(a * b, at) == eval(a, at) * eval(b, at) && eval(a + b, at) == eval(a, at) + eval(b, at)) ++hom;
    const std::size_t n = len(rng);
    std::vector<MPoly> cs{i % 2 ? 1 : -1};
    for (std::size_t j = 1; j <= n; ++j) cs.push_back(oracle::random_poly(rng, 3, 2));
    const TruncSeries f(cs);
    if (f * reciprocal(f) == TruncSeries::one(n)) ++recip;
    MPoly g = oracle::random_poly(rng, 3, 2);
    if (g.is_zero()) g = MPoly(Var::p) + 1;
    if (divide_exact(a * g, g) == a) ++div;
  }
  const bool ok = ring == kCases && hom == kCases && recip == kCases && div == kCases;
  std::ostringstream os;
  os << "ring " << ring << ", eval " << hom << ", reciprocal " << recip << ", division " << div << " of " << kCases;
  return {ok, os.str()};
}

Outcome mutations() {
  std::size_t tried = 0, caught = 0;
  auto mutate = [&](const std::vector<MPoly>& numer, std::size_t slots,
                    const std::function<VerificationReport(const std::vector<MPoly>&)>& check) {
    for (std::size_t i = 0; i < slots; ++i) {
      auto bad = numer;
      bad.resize(std::max(slots, bad.size()));
      bad[i] += 1;
      ++tried;
      const auto r = check(bad);
      if (!r.passed() && r.first_mismatch->index <= i) ++caught;
    }
  };
  for (TheoremId id : kAllTheorems) {
    mutate(theorem_numerator(id), 4, [id](const std::vector<MPoly>& n) {
      return check_theorem_gf(id, RationalGF(n, theorem_denominator()), 8);
    });
  }
  std::vector<CatalogEntry> entries = catalog();
  for (int t = 2; t <= 7; ++t) {
    for (auto& e : table_entries(parse_table(t))) entries.push_back(e);
  }
  for (const auto& e : entries) {
    const std::size_t slots = std::max(e.gf.numer().size(), e.gf.denom().size() - 1);
    mutate(e.gf.numer(), slots,
           [&e](const std::vector<MPoly>& n) { return verify_gf(e, RationalGF(n, e.gf.denom()), 8); });
  }
  return {tried > 0 && caught == tried, std::to_string(caught) + "/" + std::to_string(tried) + " mutants caught"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::string golden = PQGF_GOLDEN_DIR;
  std::vector<int> expect_red;
  app.add_option("--golden", golden, "directory of table golden files");
  app.add_option("--expect-red", expect_red, "criteria known to be red")->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"theorem suite, order 12, < 30 s", theorems},
      {"single-family suite, n <= 32, < 10 s",
       [] { return suite(catalog(EntryCategory::family), kSingleOrder, 12, 10.0); }},
      {"product suite, n <= 24, < 60 s",
       [] { return suite(catalog(EntryCategory::product), kProductOrder, 12, 60.0); }},
      {"product denominators D1 D2 D3", denominators},
      {"table goldens and spot values", [&golden] { return tables(golden); }},
      {"classic closure at k = 1", classic_closure},
      {"family / S_n bridge", bridge},
      {"kernel properties, 200 random cases each", kernel},
      {"mutation controls", mutations},
  };

  std::set<int> red;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Outcome o = criteria[i].second();
    const int num = static_cast<int>(i) + 1;
    if (!o.ok) red.insert(num);
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << num << ": " << criteria[i].first << " -- "
              << o.detail << '\n';
  }
  const std::set<int> expected(expect_red.begin(), expect_red.end());
  std::cout << criteria.size() - red.size() << "/" << criteria.size() << " criteria green";
  if (!red.empty()) {
    std::cout << "; red:";
    for (int r : red) std::cout << ' ' << r;
    std::cout << (red == expected ? " (as expected)" : " (unexpected)");
  }
  std::cout << '\n';
  return red == expected ? 0 : 1;
}
