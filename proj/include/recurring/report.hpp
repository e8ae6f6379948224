#pragma once

// Per-(core, prime) analysis record and its JSON / CSV / table encodings.
// Big integers (discriminant, unit group order) are decimal strings in JSON.
// The period is a JSON number when it fits in 64 bits, a decimal string otherwise.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "recurring/intcore.hpp"
#include "recurring/numtheory.hpp"
#include "recurring/period.hpp"

namespace recurring {

struct FactorText {
  std::string factor;
  unsigned multiplicity;

  friend bool operator==(const FactorText&, const FactorText&) = default;
};

struct PrimeReport {
  std::vector<BigInt> t;
  std::uint32_t p = 0;
  BigInt period;
  std::uint64_t preperiod = 0;
  std::string classification;
  std::vector<FactorText> factors;
  BigInt discriminant;
  bool p_divides_discriminant = false;
  bool p_divides_period = false;
  // Absent when p | t_k (singular companion).
  std::optional<bool> thm67_agree;
  std::optional<BigInt> unit_group_order;
  std::vector<std::size_t> idempotent_ranks;
  std::optional<std::uint64_t> exact_period;
  bool singular_companion = false;

  friend bool operator==(const PrimeReport&, const PrimeReport&) = default;
};

// Core-level facts shared by every prime of a sweep.
struct CoreFacts {
  BigInt discriminant;
  std::optional<std::uint64_t> exact_period;

  static CoreFacts of(const CorePoly& core);
};

PrimeReport analyze_prime(const CorePoly& core, Prime p, const CoreFacts& facts,
                          ConsistencyOptions opts = {});

nlohmann::json to_json(const PrimeReport& r);
PrimeReport report_from_json(const nlohmann::json& j);

std::string csv_header();
std::string to_csv_row(const PrimeReport& r);

std::string table_header();
std::string to_table_row(const PrimeReport& r);

}  // namespace recurring
