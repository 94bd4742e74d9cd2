#include "scaniv/dataset.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "scaniv/errors.hpp"

namespace scaniv {

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << violations[i];
  }
  return os.str();
}

ValidationReport validate(const Dataset& ds) {
  ValidationReport rep;
  auto add = [&rep](const std::string& v) { rep.violations.push_back(v); };

  const std::size_t n = ds.y.size();
  if (ds.delta.size() != n || ds.u.size() != n || ds.z.size() != n) {
    add("length mismatch across columns");
    return rep;  // row-wise checks are meaningless past this point
  }
  if (n < 2) add("fewer than 2 records");

  bool any_resp = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (ds.delta[i] != 0 && ds.delta[i] != 1) {
      add("non-binary delta at row " + std::to_string(i));
      continue;
    }
    if (ds.delta[i] == 1) {
      any_resp = true;
      if (!std::isfinite(ds.y[i]))
        add("missing or non-finite y with delta=1 at row " + std::to_string(i));
    } else if (std::isfinite(ds.y[i])) {
      rep.warnings.push_back("y present where delta=0 at row " +
                             std::to_string(i));
    }
    if (!std::isfinite(ds.u[i]))
      add("non-finite u at row " + std::to_string(i));
    if (!std::isfinite(ds.z[i]))
      add("non-finite z at row " + std::to_string(i));
  }
  (void)any_resp;  // fitting ops enforce respondent presence themselves

  std::set<double> distinct_z;
  for (std::size_t i = 0; i < n && distinct_z.size() < 2; ++i)
    if (std::isfinite(ds.z[i])) distinct_z.insert(ds.z[i]);
  if (n >= 2 && distinct_z.size() < 2) add("constant instrument");

  if (ds.kind == InstrumentKind::ordinal) {
    for (std::size_t i = 0; i < n; ++i) {
      double zi = ds.z[i];
      if (std::isfinite(zi) && (zi != std::floor(zi) || zi < 0.0))
        add("ordinal z not a nonnegative integer rank at row " +
            std::to_string(i));
    }
  }
  return rep;
}

void ensure_valid(const Dataset& ds) {
  ValidationReport rep = validate(ds);
  if (!rep.ok()) throw Error(Errc::Validation, rep.summary());
}

int count_respondents(const Dataset& ds) {
  int c = 0;
  for (int d : ds.delta) c += (d != 0);
  return c;
}

Dataset subset(const Dataset& ds, const std::vector<int>& rows) {
  Dataset out;
  out.kind = ds.kind;
  out.y.reserve(rows.size());
  out.delta.reserve(rows.size());
  out.u.reserve(rows.size());
  out.z.reserve(rows.size());
  for (int r : rows) {
    out.y.push_back(ds.y[r]);
    out.delta.push_back(ds.delta[r]);
    out.u.push_back(ds.u[r]);
    out.z.push_back(ds.z[r]);
  }
  return out;
}

}  // namespace scaniv
