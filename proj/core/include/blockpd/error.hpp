#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace blockpd {

enum class ErrorCode {
  kOutOfRange,
  kDuplicateEdge,
  kSelfLoop,
  kWeightOverflow,
  kDisconnected,
  kNotBlockGraph,
  kNoPairedDominatingSet,
  kTooLarge,
  kParseError,
  kInvalidArgument,
  kInternalInconsistency,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace blockpd
