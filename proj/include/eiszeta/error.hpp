#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eiszeta {

enum class Errc {
  DivisionByZero,
  NotPrime,
  EvenPrime,
  NotRational,
  CapExceeded,
  SingularGenerator,
  LatticeMismatch,
  OrderExceeded,
  NoMinimumDistance,
  DegenerateEnumerator,
  NotFormalEnumerator,
  SingularSystem,
  TruncationLeak,
  InvalidWeight,
  RootFindingDiverged,
  NotOnCircle,
  ZeroBernoulli,
  MismatchAgainstPaper,
  InvalidArgument,
};

constexpr std::string_view errc_name(Errc e) {
  switch (e) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotPrime: return "NotPrime";
    case Errc::EvenPrime: return "EvenPrime";
    case Errc::NotRational: return "NotRational";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::SingularGenerator: return "SingularGenerator";
    case Errc::LatticeMismatch: return "LatticeMismatch";
    case Errc::OrderExceeded: return "OrderExceeded";
    case Errc::NoMinimumDistance: return "NoMinimumDistance";
    case Errc::DegenerateEnumerator: return "DegenerateEnumerator";
    case Errc::NotFormalEnumerator: return "NotFormalEnumerator";
    case Errc::SingularSystem: return "SingularSystem";
    case Errc::TruncationLeak: return "TruncationLeak";
    case Errc::InvalidWeight: return "InvalidWeight";
    case Errc::RootFindingDiverged: return "RootFindingDiverged";
    case Errc::NotOnCircle: return "NotOnCircle";
    case Errc::ZeroBernoulli: return "ZeroBernoulli";
    case Errc::MismatchAgainstPaper: return "MismatchAgainstPaper";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace eiszeta
