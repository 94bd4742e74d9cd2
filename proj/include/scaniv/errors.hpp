#pragma once

#include <stdexcept>
#include <string>

namespace scaniv {

// Failure categories. "input" errors describe unusable inputs or
// configuration; "estimation" errors describe data on which a requested
// estimator cannot be computed. The CLI maps input -> exit 2 and
// estimation -> exit 3.
enum class Errc {
  // input / configuration
  Validation,
  Config,
  // estimation
  EmptyGrid,
  EmptyStratum,
  DegenerateCovariate,
  NoRespondents,
  NonIdentified,
  NoSignChange,
  AllPointsFailed,
  TooManyFailures,
  OrdinalInstrument,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::Validation: return "Validation";
    case Errc::Config: return "Config";
    case Errc::EmptyGrid: return "EmptyGrid";
    case Errc::EmptyStratum: return "EmptyStratum";
    case Errc::DegenerateCovariate: return "DegenerateCovariate";
    case Errc::NoRespondents: return "NoRespondents";
    case Errc::NonIdentified: return "NonIdentified";
    case Errc::NoSignChange: return "NoSignChange";
    case Errc::AllPointsFailed: return "AllPointsFailed";
    case Errc::TooManyFailures: return "TooManyFailures";
    case Errc::OrdinalInstrument: return "OrdinalInstrument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}
  Errc code() const { return code_; }
  bool is_input_error() const {
    return code_ == Errc::Validation || code_ == Errc::Config;
  }

 private:
  Errc code_;
};

}  // namespace scaniv
