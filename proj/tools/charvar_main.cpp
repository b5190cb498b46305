// charvar: exact censuses and orbit dynamics for SL_2/SL_3 character
// varieties of Z^r over finite fields.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error,
// 3 work-bound refusal.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "charvar/cvpoints.hpp"
#include "charvar/dynamics.hpp"
#include "charvar/ffield.hpp"
#include "charvar/oracle.hpp"
#include "charvar/polycount.hpp"
#include "charvar/serialize.hpp"

namespace {

using namespace charvar;
using u64 = std::uint64_t;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitWorkBound = 3;

struct CommonOpts {
  std::vector<u64> qs;
  u64 p = 0;
  unsigned k = 0;
  std::string format = "table";
  std::string out_path;
  u64 max_work = 0;  // 0 = default (env CHARVAR_MAX_WORK or built-in)
};

void add_common(CLI::App* cmd, CommonOpts& o, bool need_q = true) {
  auto* qopt = cmd->add_option("--q", o.qs, "prime power(s), comma separated")->delimiter(',');
  auto* popt = cmd->add_option("--p", o.p, "field characteristic (with --k)");
  cmd->add_option("--k", o.k, "extension degree (with --p)")->needs(popt);
  popt->excludes(qopt);
  if (need_q) {
    // exactly one of --q / --p must arrive; validated after parsing
  }
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--out", o.out_path, "write output to this path instead of stdout");
  cmd->add_option("--max-work", o.max_work, "work-bound override (env CHARVAR_MAX_WORK)");
}

u64 resolve_max_work(const CommonOpts& o, u64 fallback) {
  if (o.max_work) return o.max_work;
  if (const char* env = std::getenv("CHARVAR_MAX_WORK")) {
    char* end = nullptr;
    u64 v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return fallback;
}

std::vector<u64> resolve_qs(const CommonOpts& o) {
  std::vector<u64> qs = o.qs;
  if (o.p) {
    if (o.k == 0) throw std::invalid_argument("--p requires --k");
    qs.push_back(num::checked_pow(o.p, o.k));
  }
  if (qs.empty()) throw std::invalid_argument("need --q LIST or --p/--k");
  for (u64 q : qs) {
    if (!num::prime_power(q)) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  }
  return qs;
}

ffield::FieldCtx field_for(u64 q, u64 max_work) {
  auto pk = num::prime_power(q).value();
  return ffield::make_field(pk.first, pk.second, std::max<u64>(q, max_work));
}

void emit(const CommonOpts& o, const std::string& text) {
  if (o.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output path " + o.out_path);
  f << text;
}

int cmd_polys(const CommonOpts& o, bool enumerate) {
  u64 work = resolve_max_work(o, 1'000'000);
  std::vector<serialize::PolysRow> rows;
  bool ok = true;
  for (u64 q : resolve_qs(o)) {
    serialize::PolysRow row;
    row.formula = polycount::count_cubics_formula(q);
    if (enumerate) {
      auto F = field_for(q, ffield::kDefaultMaxQ);
      row.enumerated = polycount::count_cubics_enumerated(F, work);
      if (!(*row.enumerated == row.formula)) ok = false;
    }
    rows.push_back(std::move(row));
  }
  emit(o, serialize::render_polys(rows, serialize::format_from(o.format)));
  return ok ? kExitOk : kExitMismatch;
}

int cmd_strata(const CommonOpts& o, int n, int r, bool enumerate) {
  u64 work = resolve_max_work(o, cvpoints::kDefaultPointWork);
  std::vector<serialize::StrataRow> rows;
  bool ok = true;
  for (u64 q : resolve_qs(o)) {
    serialize::StrataRow row;
    row.n = n;
    row.r = r;
    row.q = q;
    row.epoly = cvpoints::epoly(n, r).str();
    for (auto s : cvpoints::strata_for(n))
      row.formula.emplace_back(s, cvpoints::stratum_count_formula(n, r, q, s));
    row.total = cvpoints::epoly_eval(n, r, q);
    if (enumerate) {
      row.enumerated = cvpoints::strata_counts_enumerated(n, r, q, work);
      for (size_t i = 0; i < row.formula.size(); ++i)
        if (qpoly::Int(static_cast<unsigned long>((*row.enumerated)[i].second)) !=
            row.formula[i].second)
          ok = false;
    }
    rows.push_back(std::move(row));
  }
  emit(o, serialize::render_strata(rows, serialize::format_from(o.format)));
  return ok ? kExitOk : kExitMismatch;
}

int cmd_oracle(const CommonOpts& o, int n, int r) {
  u64 work = resolve_max_work(o, oracle::kDefaultOracleWork);
  std::vector<serialize::OracleRow> rows;
  bool ok = true;
  for (u64 q : resolve_qs(o)) {
    auto F = field_for(q, ffield::kDefaultMaxQ);
    serialize::OracleRow row;
    row.census = oracle::git_census(F, n, r, work);
    row.pass = true;
    for (auto s : cvpoints::strata_for(n)) {
      qpoly::Int expect = cvpoints::stratum_count_formula(n, r, q, s);
      row.expected.emplace_back(s, expect);
      u64 got = row.census.class_counts.count(s) ? row.census.class_counts.at(s) : 0;
      if (qpoly::Int(static_cast<unsigned long>(got)) != expect) row.pass = false;
    }
    if (!row.pass) ok = false;
    rows.push_back(std::move(row));
  }
  emit(o, serialize::render_oracle(rows, serialize::format_from(o.format)));
  return ok ? kExitOk : kExitMismatch;
}

int cmd_orbits_census(const CommonOpts& o, int n, int r) {
  u64 work = resolve_max_work(o, dynamics::kDefaultOrbitWork);
  std::vector<dynamics::OrbitReport> reports;
  for (u64 q : resolve_qs(o)) reports.push_back(dynamics::orbit_census(n, r, q, work));
  emit(o, serialize::render_orbit_census(reports, serialize::format_from(o.format)));
  return kExitOk;
}

int cmd_orbits_table(const CommonOpts& o, int n, int r) {
  u64 work = resolve_max_work(o, dynamics::kDefaultOrbitWork);
  auto rows = dynamics::ratio_table(n, r, resolve_qs(o), work);
  emit(o, serialize::render_ratio_table(n, r, rows, serialize::format_from(o.format)));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact censuses and orbit dynamics for SL_n character varieties of Z^r over F_q"};
  app.require_subcommand(1);

  CommonOpts polys_o;
  bool polys_enum = false;
  auto* polys = app.add_subcommand("polys", "census of monic cubics with constant term -1");
  add_common(polys, polys_o);
  polys->add_flag("--enumerate", polys_enum, "cross-check the formula by brute force");

  CommonOpts strata_o;
  int strata_n = 2, strata_r = 1;
  bool strata_enum = false;
  auto* strata = app.add_subcommand("strata", "per-stratum point counts and E-polynomial");
  add_common(strata, strata_o);
  strata->add_option("--n", strata_n, "group rank (2 or 3)")->required()->check(CLI::IsMember({2, 3}));
  strata->add_option("--r", strata_r, "number of commuting generators")->required()->check(CLI::PositiveNumber);
  strata->add_flag("--enumerate", strata_enum, "cross-check by exponent-model enumeration");

  CommonOpts oracle_o;
  int oracle_n = 2, oracle_r = 1;
  auto* oraclec = app.add_subcommand("oracle", "brute-force matrix census with formula check");
  add_common(oraclec, oracle_o);
  oraclec->add_option("--n", oracle_n, "group rank (2 or 3)")->required()->check(CLI::IsMember({2, 3}));
  oraclec->add_option("--r", oracle_r, "number of commuting generators")->required()->check(CLI::PositiveNumber);

  auto* orbits = app.add_subcommand("orbits", "orbit structure of the Out(Z^r) action");
  orbits->require_subcommand(1);
  CommonOpts census_o;
  int census_n = 2, census_r = 2;
  auto* census = orbits->add_subcommand("census", "full orbit census at each q");
  add_common(census, census_o);
  census->add_option("--n", census_n, "group rank (2 or 3)")->required()->check(CLI::IsMember({2, 3}));
  census->add_option("--r", census_r, "number of commuting generators")->required()->check(CLI::PositiveNumber);
  CommonOpts table_o;
  int table_n = 2, table_r = 2;
  auto* table = orbits->add_subcommand("ratio-table", "max-orbit ratio per q");
  add_common(table, table_o);
  table->add_option("--n", table_n, "group rank (2 or 3)")->required()->check(CLI::IsMember({2, 3}));
  table->add_option("--r", table_r, "number of commuting generators")->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (polys->parsed()) return cmd_polys(polys_o, polys_enum);
    if (strata->parsed()) return cmd_strata(strata_o, strata_n, strata_r, strata_enum);
    if (oraclec->parsed()) return cmd_oracle(oracle_o, oracle_n, oracle_r);
    if (census->parsed()) return cmd_orbits_census(census_o, census_n, census_r);
    if (table->parsed()) return cmd_orbits_table(table_o, table_n, table_r);
    return kExitUsage;
  } catch (const WorkBoundExceeded& e) {
    std::cerr << "refused: " << e.what() << " (raise --max-work to override)\n";
    return kExitWorkBound;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
