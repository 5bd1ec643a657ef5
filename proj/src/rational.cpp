#include "compomat/rational.hpp"

#include "compomat/error.hpp"

#include <cctype>

namespace compomat {

const char* err_name(Err e) {
  switch (e) {
    case Err::NotComposable: return "NotComposable";
    case Err::NotInGroupoid: return "NotInGroupoid";
    case Err::UnknownObject: return "UnknownObject";
    case Err::ObjectMismatch: return "ObjectMismatch";
    case Err::ModeMismatch: return "ModeMismatch";
    case Err::ClosureExceedsCap: return "ClosureExceedsCap";
    case Err::Singular: return "Singular";
    case Err::EmptySampleSet: return "EmptySampleSet";
    case Err::NotClosed: return "NotClosed";
    case Err::CornerMismatch: return "CornerMismatch";
    case Err::WrongGroupoid: return "WrongGroupoid";
    case Err::NotComposableVertically: return "NotComposableVertically";
    case Err::NotComposableHorizontally: return "NotComposableHorizontally";
    case Err::NotComposableBlock: return "NotComposableBlock";
    case Err::InvalidPartial: return "InvalidPartial";
    case Err::SizeCap: return "SizeCap";
    case Err::InvalidParams: return "InvalidParams";
    case Err::NotAGroup: return "NotAGroup";
    case Err::ParseError: return "ParseError";
    case Err::SchemaError: return "SchemaError";
    case Err::ResolutionError: return "ResolutionError";
    case Err::UsageError: return "UsageError";
  }
  return "UnknownError";
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt parse_int(const std::string& s) {
  std::string t = s;
  bool neg = false;
  if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
    neg = t[0] == '-';
    t = t.substr(1);
  }
  if (!all_digits(t)) fail(Err::ParseError, "bad integer '" + s + "'");
  BigInt v(t);
  return neg ? -v : v;
}

}  // namespace

Rational rat_parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    return Rational(parse_int(text));
  }
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) fail(Err::ParseError, "zero denominator in '" + text + "'");
  return Rational(num, den);
}

std::string rat_str(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += '/';
    s += denominator(r).str();
  }
  return s;
}

double rat_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace compomat
