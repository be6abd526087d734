#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toricres {

enum class ErrorKind {
  Overflow,
  ZeroVector,
  InvalidArgument,
  NotPointed,
  NotFullDim,
  NotMember,
  NotSaturated,
  NotMonomial,
  AllZero,
  InvalidColumns,
  InvalidSplitting,
  Parse,
  SelectorInapplicable,
  InternalMismatch,
  NotResolved,
  NonSmoothFan,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace toricres
