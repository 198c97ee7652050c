#ifndef STONE_ERRORS_HPP
#define STONE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace stone {

enum class Errc {
  NotPrime,
  NotCommutative,
  NotAssociative,
  BadUnit,
  FieldMismatch,
  SourceMismatch,
  DimCapExceeded,
  EnumerationCapExceeded,
  NotMonic,
  ZeroDegree,
  NotSquarefree,
  NotPBoolean,
  NotIdempotent,
  NotInjectiveInput,
  InternalClosureFailure,
  SystemValidationFailure,
  ScalarResolutionFailure,
  NoPreimagePoint,
  LevelOutOfRange,
  InvalidSubtower,
  InvalidAtDepth,
  NotClopenAtThisDepth,
  AlgebraMismatch,
  SyntaxError,
  MixedCharacteristic,
  BadInput,
};

const char* errcName(Errc c);

// Exit-code class for CLI dispatch: 1 usage/parse, 2 domain, 3 cap exceeded.
int errcExitClass(Errc c);

class StoneError : public std::runtime_error {
public:
  StoneError(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errcName(code)) + ": " + msg), code_(code) {}

  Errc code() const { return code_; }

private:
  Errc code_;
};

class ParseError : public StoneError {
public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& msg)
      : StoneError(Errc::SyntaxError, msg + " (byte " + std::to_string(offset) + ")"),
        offset_(offset), expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw StoneError(code, msg);
}

}  // namespace stone

#endif
