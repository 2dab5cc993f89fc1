#include "affdem/rational.hpp"

#include <cctype>
#include <functional>
#include <stdexcept>

namespace affdem {

std::string to_string(const Rational& q)
{
  return q.get_str();
}

Rational parse_rational(std::string_view text)
{
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s.push_back(c);
  if (s.empty())
    throw std::invalid_argument("empty rational");

  auto valid_integer = [](std::string_view digits, bool allow_sign) {
    std::size_t pos = 0;
    if (allow_sign && !digits.empty() && (digits[0] == '-' || digits[0] == '+'))
      pos = 1;
    if (pos == digits.size())
      return false;
    for (; pos < digits.size(); ++pos)
      if (!std::isdigit(static_cast<unsigned char>(digits[pos])))
        return false;
    return true;
  };

  auto slash = s.find('/');
  std::string_view num = std::string_view(s).substr(0, slash);
  std::string_view den = slash == std::string::npos ? std::string_view("1")
                                                    : std::string_view(s).substr(slash + 1);
  if (!valid_integer(num, true) || !valid_integer(den, false))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");

  std::string num_str(num);
  if (num_str[0] == '+')
    num_str.erase(0, 1);
  mpz_class n(num_str, 10);
  mpz_class d(std::string(den), 10);
  if (d == 0)
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q)
{
  return q.get_den() == 1;
}

std::size_t hash_value(const Rational& q)
{
  std::size_t seed = 0;
  hash_combine(seed, static_cast<std::size_t>(mpz_get_si(q.get_num_mpz_t())));
  hash_combine(seed, static_cast<std::size_t>(mpz_get_ui(q.get_den_mpz_t())));
  hash_combine(seed, static_cast<std::size_t>(mpz_sgn(q.get_num_mpz_t()) + 1));
  return seed;
}

std::size_t hash_value(const RationalVector& v)
{
  std::size_t seed = v.size();
  for (const auto& q : v)
    hash_combine(seed, hash_value(q));
  return seed;
}

} // namespace affdem
