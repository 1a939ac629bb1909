#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kgonal {

enum class Errc {
  InvalidParams,
  LengthMismatch,
  SumMismatch,
  InvalidAlpha,
  AlreadyBelow,
  PreconditionViolated,
  Undefined,
  GridTooSmall,
  NotKUniform,
  LimitExceeded,
  Parse,
  Overflow,
  Internal,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Overflow-checked 64-bit arithmetic.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// Floor division and nonnegative remainder, divisor > 0.
std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t mod_pos(std::int64_t a, std::int64_t b);

}  // namespace kgonal
