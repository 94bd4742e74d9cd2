#include "scaniv/csv.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "scaniv/errors.hpp"

namespace scaniv {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool is_na(const std::string& f) {
  if (f.empty()) return true;
  std::string t;
  for (char c : f) t.push_back(char(std::toupper(static_cast<unsigned char>(c))));
  return t == "NA" || t == "NAN";
}

double parse_num(const std::string& f, const char* col, std::size_t line) {
  try {
    std::size_t pos = 0;
    double v = std::stod(f, &pos);
    if (pos != f.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw Error(Errc::Validation, std::string("cannot parse ") + col +
                                      " value '" + f + "' at line " +
                                      std::to_string(line));
  }
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(trim(cur));
  return out;
}

}  // namespace

Dataset read_csv(std::istream& in, InstrumentKind kind) {
  std::string line;
  if (!std::getline(in, line))
    throw Error(Errc::Validation, "empty input: missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  {
    auto hdr = split_fields(line);
    if (hdr.size() != 4 || hdr[0] != "y" || hdr[1] != "delta" ||
        hdr[2] != "u" || hdr[3] != "z")
      throw Error(Errc::Validation, "header must be exactly 'y,delta,u,z'");
  }

  Dataset ds;
  ds.kind = kind;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    auto f = split_fields(line);
    if (f.size() != 4)
      throw Error(Errc::Validation,
                  "expected 4 fields at line " + std::to_string(lineno));
    double y = is_na(f[0]) ? std::numeric_limits<double>::quiet_NaN()
                           : parse_num(f[0], "y", lineno);
    double d = parse_num(f[1], "delta", lineno);
    double u = parse_num(f[2], "u", lineno);
    double z = parse_num(f[3], "z", lineno);
    ds.y.push_back(y);
    ds.delta.push_back(d == 0.0 ? 0 : (d == 1.0 ? 1 : 2));  // 2 = invalid
    ds.u.push_back(u);
    ds.z.push_back(z);
  }

  if (kind == InstrumentKind::ordinal) {
    // Densify integer codes to ranks 0..K-1 in ascending code order.
    std::map<double, double> rank;
    for (double z : ds.z) {
      if (!std::isfinite(z) || z != std::floor(z))
        throw Error(Errc::Validation,
                    "ordinal instrument requires integer z codes");
      rank.emplace(z, 0.0);
    }
    double r = 0.0;
    for (auto& kv : rank) kv.second = r++;
    for (double& z : ds.z) z = rank[z];
  }

  ValidationReport rep = validate(ds);
  if (!rep.ok()) throw Error(Errc::Validation, rep.summary());
  return ds;
}

Dataset read_csv_file(const std::string& path, InstrumentKind kind) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Validation, "cannot open input file: " + path);
  return read_csv(in, kind);
}

void write_csv(std::ostream& out, const Dataset& ds) {
  out << "y,delta,u,z\n";
  char buf[512];
  for (std::size_t i = 0; i < ds.n(); ++i) {
    if (ds.delta[i] == 1 && std::isfinite(ds.y[i])) {
      std::snprintf(buf, sizeof buf, "%.17g,%d,%.17g,%.17g", ds.y[i],
                    ds.delta[i], ds.u[i], ds.z[i]);
    } else {
      std::snprintf(buf, sizeof buf, "NA,%d,%.17g,%.17g", ds.delta[i],
                    ds.u[i], ds.z[i]);
    }
    out << buf << '\n';
  }
}

void write_csv_file(const std::string& path, const Dataset& ds) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::Validation, "cannot open output file: " + path);
  write_csv(out, ds);
}

}  // namespace scaniv
