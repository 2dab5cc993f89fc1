#ifndef AFFDEM_RATIONAL_HPP
#define AFFDEM_RATIONAL_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace affdem {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Canonical "p/q" text ("3" for integers, "-3/2" otherwise).
std::string to_string(const Rational& q);

/// Parses "p", "p/q" or "-p/q"; throws std::invalid_argument on malformed
/// input or a zero denominator.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);

std::size_t hash_value(const Rational& q);
std::size_t hash_value(const RationalVector& v);

inline void hash_combine(std::size_t& seed, std::size_t h)
{
  seed ^= h + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

} // namespace affdem

#endif // AFFDEM_RATIONAL_HPP
