#pragma once

#include <stdexcept>
#include <string>

namespace invgen {

enum class Errc {
  InvalidInput,
  AmbientMismatch,
  NotTotallyIsotropic,
  NonSquareScalar,
  ProfileMismatch,
  FormMismatch,
  FieldNotFinite,
  FieldTooSmall,
  EmptyStratum,
  EnumerationTooLarge,
  EigenvaluesNotDistinctOrNotRational,
  InsufficientData,
  AllZeroCounts,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::AmbientMismatch: return "AmbientMismatch";
    case Errc::NotTotallyIsotropic: return "NotTotallyIsotropic";
    case Errc::NonSquareScalar: return "NonSquareScalar";
    case Errc::ProfileMismatch: return "ProfileMismatch";
    case Errc::FormMismatch: return "FormMismatch";
    case Errc::FieldNotFinite: return "FieldNotFinite";
    case Errc::FieldTooSmall: return "FieldTooSmall";
    case Errc::EmptyStratum: return "EmptyStratum";
    case Errc::EnumerationTooLarge: return "EnumerationTooLarge";
    case Errc::EigenvaluesNotDistinctOrNotRational:
      return "EigenvaluesNotDistinctOrNotRational";
    case Errc::InsufficientData: return "InsufficientData";
    case Errc::AllZeroCounts: return "AllZeroCounts";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace invgen
