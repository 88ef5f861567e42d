#include "fpme/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fpme::io {

namespace {

using nlohmann::json;

// Two parsed CSV fields of one `a,b` row.
std::pair<double, double> parse_pair(const std::string& line, int lineno) {
  const auto comma = line.find(',');
  if (comma == std::string::npos) {
    throw std::runtime_error("line " + std::to_string(lineno) +
                             ": expected two comma-separated fields");
  }
  const std::string first = line.substr(0, comma);
  const std::string second = line.substr(comma + 1);
  char* end = nullptr;
  const double a = std::strtod(first.c_str(), &end);
  if (end == first.c_str() || *end != '\0') {
    throw std::runtime_error("line " + std::to_string(lineno) +
                             ": bad numeric field '" + first + "'");
  }
  const double b = std::strtod(second.c_str(), &end);
  if (end == second.c_str() || *end != '\0') {
    throw std::runtime_error("line " + std::to_string(lineno) +
                             ": bad numeric field '" + second + "'");
  }
  return {a, b};
}

json report_to_json(const analysis::OrderReport& r, bool include_runtime) {
  json obj;
  obj["alpha"] = r.params.alpha;
  obj["m"] = r.params.m;
  obj["N_base"] = r.N_base;
  obj["evaluation_point"] = r.evaluation_point;
  obj["empirical_order"] = r.empirical_order;
  obj["theoretical_order_computed"] = r.theoretical_order;
  const auto ref = analysis::reference_lookup(r.params);
  if (ref) {
    obj["theoretical_order_paper"] = ref->theoretical;
  } else {
    obj["theoretical_order_paper"] = nullptr;
  }
  obj["runtime_seconds"] = include_runtime ? r.runtime_seconds : 0.0;
  return obj;
}

}  // namespace

std::string format_full(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_solution_csv(std::ostream& os, const solver::DiscreteSolution& s) {
  os << "z,y\n";
  const int N = s.grid.subdivisions;
  for (int n = 0; n <= N; ++n) {
    os << format_full(s.grid.node(n)) << ','
       << format_full(s.values[static_cast<std::size_t>(n)]) << '\n';
  }
}

std::string solution_csv(const solver::DiscreteSolution& s) {
  std::ostringstream os;
  write_solution_csv(os, s);
  return os.str();
}

SolutionTable read_solution_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "z,y") {
    throw std::runtime_error("missing `z,y` header");
  }
  SolutionTable table;
  int lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto [z, y] = parse_pair(line, lineno);
    table.z.push_back(z);
    table.y.push_back(y);
  }
  return table;
}

std::string solution_json(const solver::DiscreteSolution& s) {
  json obj;
  obj["alpha"] = s.params.alpha;
  obj["m"] = s.params.m;
  obj["N"] = s.grid.subdivisions;
  obj["rule"] = s.rule_name;
  obj["starting_value"] = s.starting_value_used;
  obj["z"] = json::array();
  obj["y"] = json::array();
  const int N = s.grid.subdivisions;
  for (int n = 0; n <= N; ++n) {
    obj["z"].push_back(s.grid.node(n));
    obj["y"].push_back(s.values[static_cast<std::size_t>(n)]);
  }
  return obj.dump(2) + "\n";
}

std::string reports_csv(const std::vector<analysis::OrderReport>& reports,
                        bool include_runtime) {
  std::ostringstream os;
  os << "alpha,m,N_base,evaluation_point,empirical_order,"
        "theoretical_order_computed,theoretical_order_paper,runtime_seconds\n";
  for (const auto& r : reports) {
    os << format_full(r.params.alpha) << ',' << format_full(r.params.m) << ','
       << r.N_base << ',' << format_full(r.evaluation_point) << ','
       << format_full(r.empirical_order) << ','
       << format_full(r.theoretical_order) << ',';
    if (const auto ref = analysis::reference_lookup(r.params)) {
      os << format_full(ref->theoretical);
    }
    os << ',' << format_full(include_runtime ? r.runtime_seconds : 0.0)
       << '\n';
  }
  return os.str();
}

std::string reports_json(const std::vector<analysis::OrderReport>& reports,
                         bool include_runtime) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(report_to_json(r, include_runtime));
  return arr.dump(2) + "\n";
}

std::string profile_csv(const reconstruct::PhysicalProfile& p) {
  std::ostringstream os;
  os << "z,y,eta,U\n";
  for (std::size_t i = 0; i < p.z.size(); ++i) {
    os << format_full(p.z[i]) << ',' << format_full(p.y[i]) << ','
       << format_full(p.eta[i]) << ',' << format_full(p.U[i]) << '\n';
  }
  return os.str();
}

std::string profile_json(const reconstruct::PhysicalProfile& p) {
  json obj;
  obj["alpha"] = p.params.alpha;
  obj["m"] = p.params.m;
  obj["eta_star"] = p.eta_star;
  obj["z"] = p.z;
  obj["y"] = p.y;
  obj["eta"] = p.eta;
  obj["U"] = p.U;
  return obj.dump(2) + "\n";
}

std::string field_csv(const std::vector<FieldSample>& samples) {
  std::ostringstream os;
  os << "x,t,u\n";
  for (const auto& s : samples) {
    os << format_full(s.x) << ',' << format_full(s.t) << ','
       << format_full(s.u) << '\n';
  }
  return os.str();
}

}  // namespace fpme::io
