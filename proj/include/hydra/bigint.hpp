#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace hydra {

using BigInt = mpz_class;
using BigNat = mpz_class;

inline std::uint64_t bit_length(const BigInt& v) {
  if (v == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

std::optional<std::int64_t> to_int64(const BigInt& v);
std::optional<std::uint64_t> to_uint64(const BigInt& v);
BigInt from_int64(std::int64_t v);
BigInt from_uint64(std::uint64_t v);
std::string to_string(const BigInt& v);
BigInt parse_bigint(const std::string& text);

}  // namespace hydra
