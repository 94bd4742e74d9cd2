#pragma once

#include <iosfwd>
#include <string>

#include "scaniv/dataset.hpp"

namespace scaniv {

// Reads the `y,delta,u,z` schema. Missing y is an empty field or NA (any
// case); ordinal instruments may use arbitrary integer codes, which are
// densified to ranks 0..K-1 preserving order. Throws Error(Validation) on
// malformed input; the returned dataset is additionally validated.
Dataset read_csv(std::istream& in, InstrumentKind kind);
Dataset read_csv_file(const std::string& path, InstrumentKind kind);

// Writes the same schema; y printed with 17 significant digits, missing as NA.
void write_csv(std::ostream& out, const Dataset& ds);
void write_csv_file(const std::string& path, const Dataset& ds);

}  // namespace scaniv
