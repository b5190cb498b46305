#include "charvar/serialize.hpp"

#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace charvar::serialize {

using json = nlohmann::json;
using cvpoints::Stratum;
using cvpoints::stratum_name;
using polycount::CubicCensus;

Format format_from(const std::string& name) {
  if (name == "table") return Format::Table;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw std::invalid_argument("unknown format: " + name);
}

namespace {

json point_obj(const cvpoints::CVPoint& p, u64 q) {
  json j;
  j["tag"] = cvpoints::tag_name(p.tag);
  j["modulus"] = cvpoints::torus_modulus(p.tag, q);
  j["u"] = p.u;
  if (p.tag == cvpoints::Tag::Split3) j["v"] = p.v;
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string point_json(const cvpoints::CVPoint& p, u64 q) { return dump(point_obj(p, q)); }

std::string point_brief(const cvpoints::CVPoint& p) {
  std::ostringstream os;
  os << cvpoints::tag_name(p.tag) << "(";
  for (size_t i = 0; i < p.u.size(); ++i) os << (i ? "," : "") << p.u[i];
  if (!p.v.empty()) {
    os << ";";
    for (size_t i = 0; i < p.v.size(); ++i) os << (i ? "," : "") << p.v[i];
  }
  os << ")";
  return os.str();
}

namespace {

const std::vector<std::pair<const char*, u64 CubicCensus::*>> kCubicFields = {
    {"triple_root", &CubicCensus::triple_root},
    {"double_root", &CubicCensus::double_root},
    {"three_distinct", &CubicCensus::three_distinct},
    {"one_root_quadratic", &CubicCensus::one_root_quadratic},
    {"irreducible", &CubicCensus::irreducible},
};

}  // namespace

std::string render_polys(const std::vector<PolysRow>& rows, Format f) {
  if (f == Format::Json) {
    json out;
    out["schema"] = kSchema;
    out["kind"] = "cubic_census";
    out["rows"] = json::array();
    for (const auto& row : rows) {
      json r;
      r["q"] = row.formula.q;
      for (auto& [name, field] : kCubicFields) r["formula"][name] = row.formula.*field;
      r["total"] = row.formula.total();
      if (row.enumerated) {
        for (auto& [name, field] : kCubicFields) r["enumerated"][name] = (*row.enumerated).*field;
        r["match"] = (*row.enumerated == row.formula);
      }
      out["rows"].push_back(r);
    }
    return dump(out);
  }
  std::ostringstream os;
  if (f == Format::Csv) {
    os << "q,triple_root,double_root,three_distinct,one_root_quadratic,irreducible,total";
    if (!rows.empty() && rows[0].enumerated) os << ",enumerated_match";
    os << "\n";
    for (const auto& row : rows) {
      os << row.formula.q;
      for (auto& [name, field] : kCubicFields) os << "," << row.formula.*field;
      os << "," << row.formula.total();
      if (row.enumerated) os << "," << ((*row.enumerated == row.formula) ? "true" : "false");
      os << "\n";
    }
    return os.str();
  }
  os << std::left << std::setw(8) << "q";
  for (auto& [name, field] : kCubicFields) os << std::setw(20) << name;
  os << std::setw(10) << "total";
  if (!rows.empty() && rows[0].enumerated) os << std::setw(8) << "match";
  os << "\n";
  for (const auto& row : rows) {
    os << std::left << std::setw(8) << row.formula.q;
    for (auto& [name, field] : kCubicFields) os << std::setw(20) << row.formula.*field;
    os << std::setw(10) << row.formula.total();
    if (row.enumerated) os << std::setw(8) << ((*row.enumerated == row.formula) ? "yes" : "NO");
    os << "\n";
  }
  return os.str();
}

std::string render_strata(const std::vector<StrataRow>& rows, Format f) {
  if (f == Format::Json) {
    json out;
    out["schema"] = kSchema;
    out["kind"] = "stratum_counts";
    out["rows"] = json::array();
    for (const auto& row : rows) {
      json r;
      r["n"] = row.n;
      r["r"] = row.r;
      r["q"] = row.q;
      r["e_polynomial"] = row.epoly;
      for (auto& [s, v] : row.formula) r["formula"][stratum_name(s)] = v.get_str();
      r["total"] = row.total.get_str();
      if (row.enumerated) {
        bool match = true;
        for (size_t i = 0; i < row.enumerated->size(); ++i) {
          auto& [s, v] = (*row.enumerated)[i];
          r["enumerated"][stratum_name(s)] = v;
          if (qpoly::Int(static_cast<unsigned long>(v)) != row.formula[i].second) match = false;
        }
        r["match"] = match;
      }
      out["rows"].push_back(r);
    }
    return dump(out);
  }
  std::ostringstream os;
  if (f == Format::Csv) {
    os << "n,r,q,stratum,count" << (!rows.empty() && rows[0].enumerated ? ",enumerated,match" : "") << "\n";
    for (const auto& row : rows) {
      for (size_t i = 0; i < row.formula.size(); ++i) {
        auto& [s, v] = row.formula[i];
        os << row.n << "," << row.r << "," << row.q << "," << stratum_name(s) << "," << v.get_str();
        if (row.enumerated) {
          u64 e = (*row.enumerated)[i].second;
          os << "," << e << "," << (qpoly::Int(static_cast<unsigned long>(e)) == v ? "true" : "false");
        }
        os << "\n";
      }
      os << row.n << "," << row.r << "," << row.q << ",total," << row.total.get_str();
      if (row.enumerated) os << ",,";
      os << "\n";
    }
    return os.str();
  }
  for (const auto& row : rows) {
    os << "n=" << row.n << " r=" << row.r << " q=" << row.q << "   E = " << row.epoly << "\n";
    for (size_t i = 0; i < row.formula.size(); ++i) {
      auto& [s, v] = row.formula[i];
      os << "  " << std::left << std::setw(22) << stratum_name(s) << std::setw(16) << v.get_str();
      if (row.enumerated) {
        u64 e = (*row.enumerated)[i].second;
        os << " enumerated " << std::setw(12) << e
           << (qpoly::Int(static_cast<unsigned long>(e)) == v ? "ok" : "MISMATCH");
      }
      os << "\n";
    }
    os << "  " << std::left << std::setw(22) << "total" << row.total.get_str() << "\n";
  }
  return os.str();
}

namespace {

// class records aggregated by (stratum, orbit size, centralizer orders)
struct AggKey {
  Stratum s;
  u64 orbit, slc, glc;
  bool operator<(const AggKey& o) const {
    return std::tie(s, orbit, slc, glc) < std::tie(o.s, o.orbit, o.slc, o.glc);
  }
};

std::map<AggKey, u64> aggregate(const oracle::GitCensus& census) {
  std::map<AggKey, u64> agg;
  for (const auto& cls : census.classes)
    agg[AggKey{cls.stratum, cls.orbit_size, cls.sl_centralizer_order, cls.gl_centralizer_order}]++;
  return agg;
}

}  // namespace

std::string render_oracle(const std::vector<OracleRow>& rows, Format f) {
  if (f == Format::Json) {
    json out;
    out["schema"] = kSchema;
    out["kind"] = "git_census";
    out["rows"] = json::array();
    for (const auto& row : rows) {
      json r;
      r["n"] = row.census.n;
      r["r"] = row.census.r;
      r["q"] = row.census.q;
      r["tuple_total"] = row.census.tuple_total;
      r["records"] = json::array();
      for (auto& [key, count] : aggregate(row.census)) {
        r["records"].push_back(json{{"stratum", stratum_name(key.s)},
                                    {"class_count", count},
                                    {"orbit_size", key.orbit},
                                    {"sl_centralizer_order", key.slc},
                                    {"gl_centralizer_order", key.glc}});
      }
      for (auto& [s, expect] : row.expected) {
        u64 got = row.census.class_counts.count(s) ? row.census.class_counts.at(s) : 0;
        r["classes"][stratum_name(s)] = got;
        r["expected"][stratum_name(s)] = expect.get_str();
      }
      r["pass"] = row.pass;
      out["rows"].push_back(r);
    }
    return dump(out);
  }
  std::ostringstream os;
  if (f == Format::Csv) {
    os << "n,r,q,stratum,class_count,orbit_size,sl_centralizer_order,gl_centralizer_order\n";
    for (const auto& row : rows)
      for (auto& [key, count] : aggregate(row.census))
        os << row.census.n << "," << row.census.r << "," << row.census.q << ","
           << stratum_name(key.s) << "," << count << "," << key.orbit << "," << key.slc << ","
           << key.glc << "\n";
    return os.str();
  }
  for (const auto& row : rows) {
    os << "n=" << row.census.n << " r=" << row.census.r << " q=" << row.census.q
       << "  classes=" << row.census.classes.size() << "  tuples=" << row.census.tuple_total
       << "  " << (row.pass ? "pass" : "FAIL") << "\n";
    os << "  " << std::left << std::setw(22) << "stratum" << std::setw(14) << "classes"
       << std::setw(14) << "expected" << "\n";
    for (auto& [s, expect] : row.expected) {
      u64 got = row.census.class_counts.count(s) ? row.census.class_counts.at(s) : 0;
      os << "  " << std::left << std::setw(22) << stratum_name(s) << std::setw(14) << got
         << std::setw(14) << expect.get_str() << "\n";
    }
  }
  return os.str();
}

std::string render_orbit_census(const std::vector<dynamics::OrbitReport>& reports, Format f) {
  if (f == Format::Json) {
    json out;
    out["schema"] = kSchema;
    out["kind"] = "orbit_census";
    out["rows"] = json::array();
    for (const auto& rep : reports) {
      json r;
      r["n"] = rep.n;
      r["r"] = rep.r;
      r["q"] = rep.q;
      r["total"] = rep.total.get_str();
      r["per_stratum"] = json::array();
      for (auto& [s, sizes] : rep.sizes_by_stratum) {
        json e;
        e["stratum"] = stratum_name(s);
        e["orbits"] = json::array();
        for (auto& [size, count] : sizes) e["orbits"].push_back(json{{"size", size}, {"count", count}});
        r["per_stratum"].push_back(e);
      }
      r["max_orbit"] = rep.max_orbit;
      r["max_ratio_num"] = rep.max_ratio.get_num().get_ui();
      r["max_ratio_den"] = rep.max_ratio.get_den().get_ui();
      out["rows"].push_back(r);
    }
    return dump(out);
  }
  std::ostringstream os;
  if (f == Format::Csv) {
    os << "n,r,q,stratum,orbit_size,orbit_count\n";
    for (const auto& rep : reports)
      for (auto& [s, sizes] : rep.sizes_by_stratum)
        for (auto& [size, count] : sizes)
          os << rep.n << "," << rep.r << "," << rep.q << "," << stratum_name(s) << "," << size
             << "," << count << "\n";
    return os.str();
  }
  for (const auto& rep : reports) {
    os << "n=" << rep.n << " r=" << rep.r << " q=" << rep.q << "  total=" << rep.total.get_str()
       << "  orbits=" << rep.orbits.size() << "  max_orbit=" << rep.max_orbit
       << "  max_ratio=" << rep.max_ratio.get_str() << " (" << std::setprecision(4)
       << rep.max_ratio.get_d() << ")\n";
    for (auto& [s, sizes] : rep.sizes_by_stratum) {
      os << "  " << std::left << std::setw(22) << stratum_name(s);
      for (auto& [size, count] : sizes) os << count << "x" << size << " ";
      os << "\n";
    }
  }
  return os.str();
}

std::string render_ratio_table(int n, int r, const std::vector<dynamics::RatioRow>& rows, Format f) {
  if (f == Format::Json) {
    json out;
    out["schema"] = kSchema;
    out["kind"] = "ratio_table";
    out["n"] = n;
    out["r"] = r;
    out["rows"] = json::array();
    for (const auto& row : rows) {
      out["rows"].push_back(json{{"q", row.q},
                                 {"total", row.total.get_str()},
                                 {"max_orbit", row.max_orbit},
                                 {"ratio_num", row.ratio.get_num().get_ui()},
                                 {"ratio_den", row.ratio.get_den().get_ui()},
                                 {"ratio", row.ratio.get_d()}});
    }
    return dump(out);
  }
  std::ostringstream os;
  if (f == Format::Csv) {
    os << "n,r,q,total,max_orbit,ratio_num,ratio_den,ratio\n";
    for (const auto& row : rows)
      os << n << "," << r << "," << row.q << "," << row.total.get_str() << "," << row.max_orbit
         << "," << row.ratio.get_num().get_str() << "," << row.ratio.get_den().get_str() << ","
         << row.ratio.get_d() << "\n";
    return os.str();
  }
  os << std::left << std::setw(8) << "q" << std::setw(14) << "total" << std::setw(12)
     << "max_orbit" << std::setw(14) << "ratio" << "approx" << "\n";
  for (const auto& row : rows) {
    os << std::left << std::setw(8) << row.q << std::setw(14) << row.total.get_str()
       << std::setw(12) << row.max_orbit << std::setw(14) << row.ratio.get_str()
       << std::setprecision(4) << row.ratio.get_d() << "\n";
  }
  return os.str();
}

}  // namespace charvar::serialize
