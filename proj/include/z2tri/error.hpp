#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace z2tri {

enum class ErrorKind {
  SyntaxError,
  NonInvolutiveGluing,
  FaceGluedToItself,
  IndexOutOfRange,
  InvalidEdge,
  NotClosed,
  NonOrientable,
  NotOneVertex,
  ZeroClass,
  RankTooLow,
  MixedTypes,
  InvalidSite,
  StepLimitExceeded,
  PromotionBlocked,
  BadParameter,
  NotACocycle,
  UnsupportedSurface,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace z2tri
