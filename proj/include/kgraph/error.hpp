#ifndef KGRAPH_ERROR_HPP
#define KGRAPH_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace kgraph {

enum class ErrorCode {
  Malformed,          // structurally inconsistent input data
  UnknownId,
  NotComposable,
  BadSplit,
  DimensionTooLarge,
  BadDirection,
  RankMismatch,
  OutsideTruncation,  // query reaches past the degree bound of a truncated graph
  InvalidModel,
  ForeignId,
  NotACongruence,
  NotInjective,
  NotHereditary,
  BadMarking,
  OutOfRange,
  HeightExceeded,
  OutOfBox,
  NoEmbedding,
  Parse,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so that
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kgraph

#endif  // KGRAPH_ERROR_HPP
