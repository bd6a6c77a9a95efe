#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hyperdec {

enum class Errc {
  InvalidTerm,
  InvalidArgument,
  DivisionByZero,
  NotLimited,
  NotDecomposable,
  NotIntegerValued,
  NotInAtomForm,
  NonnegativityViolation,
  PoleAtArgument,
  PoleInInterval,
  ProbeDisagreement,
  CandidateSetIncomplete,
  SyntaxError,
};

constexpr std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidTerm: return "InvalidTerm";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotLimited: return "NotLimited";
    case Errc::NotDecomposable: return "NotDecomposable";
    case Errc::NotIntegerValued: return "NotIntegerValued";
    case Errc::NotInAtomForm: return "NotInAtomForm";
    case Errc::NonnegativityViolation: return "NonnegativityViolation";
    case Errc::PoleAtArgument: return "PoleAtArgument";
    case Errc::PoleInInterval: return "PoleInInterval";
    case Errc::ProbeDisagreement: return "ProbeDisagreement";
    case Errc::CandidateSetIncomplete: return "CandidateSetIncomplete";
    case Errc::SyntaxError: return "SyntaxError";
  }
  return "Unknown";
}

/// Base exception for every failure raised by the library. The code is the
/// stable, machine-readable part; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string& detail)
      : Error(Errc::SyntaxError, format(offset, expected, detail)),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  static std::string format(std::size_t offset, const std::vector<std::string>& expected,
                            const std::string& detail) {
    std::string msg = "syntax error at offset " + std::to_string(offset);
    if (!detail.empty()) msg += ": " + detail;
    if (!expected.empty()) {
      msg += " (expected ";
      for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i) msg += ", ";
        msg += expected[i];
      }
      msg += ")";
    }
    return msg;
  }

  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace hyperdec
