#include "z2tri/error.hpp"

namespace z2tri {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::SyntaxError: return "SyntaxError";
  case ErrorKind::NonInvolutiveGluing: return "NonInvolutiveGluing";
  case ErrorKind::FaceGluedToItself: return "FaceGluedToItself";
  case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
  case ErrorKind::InvalidEdge: return "InvalidEdge";
  case ErrorKind::NotClosed: return "NotClosed";
  case ErrorKind::NonOrientable: return "NonOrientable";
  case ErrorKind::NotOneVertex: return "NotOneVertex";
  case ErrorKind::ZeroClass: return "ZeroClass";
  case ErrorKind::RankTooLow: return "RankTooLow";
  case ErrorKind::MixedTypes: return "MixedTypes";
  case ErrorKind::InvalidSite: return "InvalidSite";
  case ErrorKind::StepLimitExceeded: return "StepLimitExceeded";
  case ErrorKind::PromotionBlocked: return "PromotionBlocked";
  case ErrorKind::BadParameter: return "BadParameter";
  case ErrorKind::NotACocycle: return "NotACocycle";
  case ErrorKind::UnsupportedSurface: return "UnsupportedSurface";
  }
  return "Unknown";
}

} // namespace z2tri
