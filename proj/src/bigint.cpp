#include "hydra/bigint.hpp"

#include <limits>
#include <stdexcept>

namespace hydra {

std::optional<std::int64_t> to_int64(const BigInt& v) {
  if (!mpz_fits_slong_p(v.get_mpz_t())) return std::nullopt;
  return static_cast<std::int64_t>(mpz_get_si(v.get_mpz_t()));
}

std::optional<std::uint64_t> to_uint64(const BigInt& v) {
  if (v < 0 || !mpz_fits_ulong_p(v.get_mpz_t())) return std::nullopt;
  return static_cast<std::uint64_t>(mpz_get_ui(v.get_mpz_t()));
}

BigInt from_int64(std::int64_t v) {
  static_assert(sizeof(long) == sizeof(std::int64_t));
  return BigInt(static_cast<long>(v));
}

BigInt from_uint64(std::uint64_t v) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return BigInt(static_cast<unsigned long>(v));
}

std::string to_string(const BigInt& v) { return v.get_str(10); }

BigInt parse_bigint(const std::string& text) {
  BigInt out;
  if (text.empty() || out.set_str(text, 10) != 0) {
    throw std::invalid_argument("not an integer: " + text);
  }
  return out;
}

}  // namespace hydra
