#include "ninv/probability.hpp"

#include <array>
#include <charconv>

namespace ninv {

namespace {

std::string describe(std::string_view function, double p, double lower, double upper,
                     bool lower_open, bool upper_open) {
  std::string msg(function);
  msg += ": p=";
  msg += format_roundtrip(p);
  msg += " outside ";
  msg += lower_open ? '(' : '[';
  msg += format_roundtrip(lower);
  msg += ", ";
  msg += format_roundtrip(upper);
  msg += upper_open ? ')' : ']';
  return msg;
}

}  // namespace

DomainError::DomainError(std::string_view function, double p, double lower,
                         double upper, bool lower_open, bool upper_open)
    : std::domain_error(describe(function, p, lower, upper, lower_open, upper_open)),
      p_(p),
      lower_(lower),
      upper_(upper),
      lower_open_(lower_open),
      upper_open_(upper_open) {}

void throw_domain_error(const char* function, double p, double lower, double upper,
                        bool lower_open, bool upper_open) {
  throw DomainError(function, p, lower, upper, lower_open, upper_open);
}

std::string format_roundtrip(double value) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), res.ptr);
}

}  // namespace ninv
