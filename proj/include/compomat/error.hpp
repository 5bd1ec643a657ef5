#pragma once

#include <stdexcept>
#include <string>

namespace compomat {

enum class Err {
  NotComposable,
  NotInGroupoid,
  UnknownObject,
  ObjectMismatch,
  ModeMismatch,
  ClosureExceedsCap,
  Singular,
  EmptySampleSet,
  NotClosed,
  CornerMismatch,
  WrongGroupoid,
  NotComposableVertically,
  NotComposableHorizontally,
  NotComposableBlock,
  InvalidPartial,
  SizeCap,
  InvalidParams,
  NotAGroup,
  ParseError,
  SchemaError,
  ResolutionError,
  UsageError,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
public:
  Error(Err code, const std::string& msg)
      : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}
  Err code() const { return code_; }

private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) { throw Error(code, msg); }

}  // namespace compomat
