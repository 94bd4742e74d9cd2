#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace scaniv {

enum class InstrumentKind { continuous, ordinal };

// One estimation sample: aligned columns. y is NaN wherever delta == 0 and
// must never be read there. For ordinal instruments z holds integer ranks
// 0..K-1 stored as doubles. Immutable by convention once built.
struct Dataset {
  std::vector<double> y;
  std::vector<int> delta;  // 0/1
  std::vector<double> u;
  std::vector<double> z;
  InstrumentKind kind = InstrumentKind::continuous;

  std::size_t n() const { return y.size(); }
};

struct ValidationReport {
  std::vector<std::string> violations;
  std::vector<std::string> warnings;  // allowed-but-suspect patterns
  bool ok() const { return violations.empty(); }
  std::string summary() const;  // violations joined with "; "
};

// Report-style check of the Dataset invariants (never throws).
ValidationReport validate(const Dataset& ds);

// Throws Error(Validation) listing every violation found.
void ensure_valid(const Dataset& ds);

int count_respondents(const Dataset& ds);

// Row gather (with repetition allowed); used by resampling.
Dataset subset(const Dataset& ds, const std::vector<int>& rows);

}  // namespace scaniv
