#include "cantor/error.hpp"

namespace cantor {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::MixedSystems: return "MixedSystems";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::Underflow: return "Underflow";
    case ErrorKind::RankOutOfRange: return "RankOutOfRange";
    case ErrorKind::LevelTooSmall: return "LevelTooSmall";
    case ErrorKind::LevelTooLarge: return "LevelTooLarge";
    case ErrorKind::EmptyInterval: return "EmptyInterval";
    case ErrorKind::TrivialKernel: return "TrivialKernel";
    case ErrorKind::TrivialBase: return "TrivialBase";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::DepthTooSmall: return "DepthTooSmall";
    case ErrorKind::InvalidTower: return "InvalidTower";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace cantor
