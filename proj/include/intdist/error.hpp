#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace intdist {

enum class ErrorKind {
  NonPrime,
  CapExceeded,
  DivisionByZero,
  EvenCharacteristic,
  OddCharacteristic,
  SizeMismatch,
  NotInternalNucleus,
  IncompleteData,
  DegreeOutOfRange,
  FamilyInapplicable,
  NotMaximalArc,
  NoSuchConfiguration,
  BudgetExceeded,
  InvalidArgument,
  InexactDivision,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace intdist
