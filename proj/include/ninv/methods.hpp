#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace ninv {

/// Closed interval [lo, hi].
struct Interval {
  double lo;
  double hi;

  constexpr bool contains(double p) const noexcept { return p >= lo && p <= hi; }
  constexpr bool contains(const Interval& other) const noexcept {
    return other.lo >= lo && other.hi <= hi;
  }
};

enum class MethodId {
  Rat22A,
  Rat22B,
  Rat22ACentral,
  Rat22BCentral,
  Tail,
  AsImproved,
  AsOriginal,
  BeasleySpringer,
  BeasleySpringerCentral,
};

struct MethodInfo {
  MethodId id;
  std::string_view name;
  std::string_view summary;
  /// Inputs the method accepts, as a closed interval of doubles.
  Interval domain;
  /// Published absolute error bound over the domain, if one exists.
  std::optional<double> error_bound;
  double (*evaluate)(double);
};

std::span<const MethodInfo> all_methods() noexcept;
const MethodInfo& method_info(MethodId id) noexcept;

/// Accepts the canonical names plus the short aliases "as", "bs", "rat22-tail".
std::optional<MethodId> parse_method(std::string_view name) noexcept;

/// The four methods of the throughput comparison, slowest first.
std::vector<MethodId> benchmark_methods();

}  // namespace ninv
