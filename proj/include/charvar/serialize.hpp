#pragma once

#include <optional>
#include <string>
#include <vector>

#include "charvar/cvpoints.hpp"
#include "charvar/dynamics.hpp"
#include "charvar/oracle.hpp"
#include "charvar/polycount.hpp"

namespace charvar::serialize {

using u64 = std::uint64_t;

inline constexpr const char* kSchema = "charvar-dyn/1";

enum class Format { Table, Json, Csv };

Format format_from(const std::string& name);  // "table" | "json" | "csv"

// Point serialization: tag name, coordinate list(s) as least residues, modulus.
std::string point_json(const cvpoints::CVPoint& p, u64 q);
std::string point_brief(const cvpoints::CVPoint& p);

struct PolysRow {
  polycount::CubicCensus formula;
  std::optional<polycount::CubicCensus> enumerated;
};

struct StrataRow {
  int n = 0, r = 0;
  u64 q = 0;
  std::vector<std::pair<cvpoints::Stratum, qpoly::Int>> formula;
  std::optional<std::vector<std::pair<cvpoints::Stratum, u64>>> enumerated;
  qpoly::Int total;
  std::string epoly;
};

struct OracleRow {
  oracle::GitCensus census;
  std::vector<std::pair<cvpoints::Stratum, qpoly::Int>> expected;
  bool pass = false;
};

std::string render_polys(const std::vector<PolysRow>& rows, Format f);
std::string render_strata(const std::vector<StrataRow>& rows, Format f);
std::string render_oracle(const std::vector<OracleRow>& rows, Format f);
std::string render_orbit_census(const std::vector<dynamics::OrbitReport>& reports, Format f);
std::string render_ratio_table(int n, int r, const std::vector<dynamics::RatioRow>& rows, Format f);

}  // namespace charvar::serialize
