#include "ninv/methods.hpp"

#include <array>
#include <cmath>

#include "ninv/baselines.hpp"
#include "ninv/quantile.hpp"

namespace ninv {

namespace {

const double kAboveFloor = std::nextafter(kHardFloor, 1.0);
const double kBelowOne = std::nextafter(1.0, 0.0);
const double kAboveZero = std::nextafter(0.0, 1.0);
const double kBelowNarrowCut = std::nextafter(kNarrowPartition.lower_cut, 0.0);

bool in_bs_central(double p) { return std::abs(p - 0.5) <= baseline_constants::kBsSplit; }

// Outermost doubles that Beasley-Springer sends to its central branch.
Interval bs_central_domain() {
  double lo = 0.5 - baseline_constants::kBsSplit;
  double hi = 0.5 + baseline_constants::kBsSplit;
  while (!in_bs_central(lo)) lo = std::nextafter(lo, 1.0);
  while (in_bs_central(std::nextafter(lo, 0.0))) lo = std::nextafter(lo, 0.0);
  while (!in_bs_central(hi)) hi = std::nextafter(hi, 0.0);
  while (in_bs_central(std::nextafter(hi, 1.0))) hi = std::nextafter(hi, 1.0);
  return {lo, hi};
}

double eval_rat22a(double p) { return inv_cdf_rat22a(p); }
double eval_rat22b(double p) { return inv_cdf_rat22b(p); }
double eval_narrow(double p) { return central_2_2(p); }
double eval_wide(double p) { return central_2_2_wide(p); }
double eval_tail(double p) { return tail_3_2(p); }
double eval_as_improved(double p) { return as_improved(p); }
double eval_as_original(double p) { return as_original(p); }
double eval_bs(double p) { return beasley_springer(p); }

double eval_bs_central(double p) {
  if (!in_bs_central(p)) {
    const Interval d = bs_central_domain();
    throw_domain_error("beasley_springer_central", p, d.lo, d.hi, false, false);
  }
  return beasley_springer(p);
}

const std::array<MethodInfo, 9>& registry() {
  static const std::array<MethodInfo, 9> methods{{
      {MethodId::Rat22A, "rat22a", "narrow central (2,2) + tail (3,2)",
       {kAboveFloor, kBelowOne}, 2.5e-5, eval_rat22a},
      {MethodId::Rat22B, "rat22b", "wide central (2,2) + tail (3,2)",
       {kAboveFloor, kBelowOne}, 1.16e-4, eval_rat22b},
      {MethodId::Rat22ACentral, "rat22a-central", "narrow central (2,2) alone",
       {kNarrowPartition.lower_cut, kNarrowPartition.upper_cut}, 2.5e-5, eval_narrow},
      {MethodId::Rat22BCentral, "rat22b-central", "wide central (2,2) alone",
       {kWidePartition.lower_cut, kWidePartition.upper_cut}, 1.16e-4, eval_wide},
      {MethodId::Tail, "tail", "lower tail (3,2) alone",
       {kAboveFloor, kBelowNarrowCut}, 2.458e-5, eval_tail},
      {MethodId::AsImproved, "as-improved", "handbook shape refit on p > exp(-684.5)",
       {kAboveFloor, kBelowOne}, 8e-5, eval_as_improved},
      {MethodId::AsOriginal, "as-original", "Abramowitz-Stegun 26.2.23",
       {kAboveZero, kBelowOne}, 4.5e-4, eval_as_original},
      {MethodId::BeasleySpringer, "beasley-springer", "Beasley-Springer AS 111",
       {kAboveZero, kBelowOne}, std::nullopt, eval_bs},
      {MethodId::BeasleySpringerCentral, "beasley-springer-central",
       "Beasley-Springer central (3,4) alone", bs_central_domain(), 1.85e-9, eval_bs_central},
  }};
  return methods;
}

}  // namespace

std::span<const MethodInfo> all_methods() noexcept { return registry(); }

const MethodInfo& method_info(MethodId id) noexcept {
  return registry()[static_cast<std::size_t>(id)];
}

std::optional<MethodId> parse_method(std::string_view name) noexcept {
  for (const auto& m : registry()) {
    if (m.name == name) return m.id;
  }
  if (name == "as") return MethodId::AsOriginal;
  if (name == "bs") return MethodId::BeasleySpringer;
  if (name == "rat22-tail") return MethodId::Tail;
  return std::nullopt;
}

std::vector<MethodId> benchmark_methods() {
  return {MethodId::AsOriginal, MethodId::BeasleySpringer, MethodId::Rat22A,
          MethodId::Rat22B};
}

}  // namespace ninv
