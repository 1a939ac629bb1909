#include "kgonal/error.hpp"

namespace kgonal {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::SumMismatch: return "SumMismatch";
    case Errc::InvalidAlpha: return "InvalidAlpha";
    case Errc::AlreadyBelow: return "AlreadyBelow";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::Undefined: return "Undefined";
    case Errc::GridTooSmall: return "GridTooSmall";
    case Errc::NotKUniform: return "NotKUniform";
    case Errc::LimitExceeded: return "LimitExceeded";
    case Errc::Parse: return "ParseError";
    case Errc::Overflow: return "Overflow";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out))
    throw Error(Errc::Overflow, "integer overflow in addition");
  return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out))
    throw Error(Errc::Overflow, "integer overflow in subtraction");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    throw Error(Errc::Overflow, "integer overflow in multiplication");
  return out;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

std::int64_t mod_pos(std::int64_t a, std::int64_t b) {
  std::int64_t m = a % b;
  return m < 0 ? m + b : m;
}

}  // namespace kgonal
