#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nonpasch {

enum class ErrorCode {
  DivisionByZero,
  Overflow,
  NotDistinct,
  Degenerate,
  OverlappingSegments,
  NoCommonEndpoint,
  WrongVariant,
  SamePoint,
  SameLine,
  NotCollinear,
  NotPairwiseIntersecting,
  IncidentPoint,
  DegeneratePair,
  NotIntersecting,
  ConcurrentLines,
  DegenerateVertices,
  NumericallyDegenerate,
  OnBoundary,
  NotOnModel,
  IncompatibleStrategy,
  UnsupportedAxiom,
  Parse,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Syntax error in a textual literal; `position` is a 0-based offset into
/// the offending text.
class ParseError : public Error {
 public:
  ParseError(std::string text, std::size_t position, const std::string& what)
      : Error(ErrorCode::Parse, "'" + text + "' at position " +
                                    std::to_string(position) + ": " + what),
        text_(std::move(text)),
        position_(position) {}

  const std::string& text() const noexcept { return text_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string text_;
  std::size_t position_;
};

}  // namespace nonpasch
