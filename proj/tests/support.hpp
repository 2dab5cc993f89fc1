#ifndef AFFDEM_TESTS_SUPPORT_HPP
#define AFFDEM_TESTS_SUPPORT_HPP

#include <random>
#include <set>
#include <string>
#include <vector>

#include "affdem/cartan.hpp"
#include "affdem/weyl.hpp"

namespace testing_support {

using namespace affdem;

inline CartanPtr root_system(const char* tag)
{
  return FiniteCartanData::build(parse_root_system_tag(tag));
}

inline WeylElt elt(const CartanPtr& data, const char* word)
{
  return parse_weyl_element(data, word);
}

inline WeylElt random_element(const CartanPtr& data, std::mt19937_64& rng, int max_letters)
{
  std::uniform_int_distribution<int> len(0, max_letters);
  std::uniform_int_distribution<int> letter(0, data->rank());
  std::vector<int> word(static_cast<std::size_t>(len(rng)));
  for (auto& l : word)
    l = letter(rng);
  return WeylElt::from_word(data, word);
}

inline Rational random_rational(std::mt19937_64& rng, int bound = 5)
{
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, 3);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline Weight random_weight(const FiniteCartanData& data, std::mt19937_64& rng)
{
  Weight w = zero_weight(data);
  for (auto& c : w.fin)
    c = random_rational(rng);
  w.level = random_rational(rng);
  w.delta = random_rational(rng);
  return w;
}

inline Coweight random_coweight(const FiniteCartanData& data, std::mt19937_64& rng)
{
  Coweight c = zero_coweight(data);
  for (auto& x : c.fin)
    x = random_rational(rng);
  c.d = random_rational(rng);
  c.k = random_rational(rng);
  return c;
}

/// Every element expressible as a subword of the given word.
inline WeylEltSet subword_products(const CartanPtr& data, const std::vector<int>& word)
{
  WeylEltSet out;
  const std::size_t m = word.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::vector<int> sub;
    for (std::size_t k = 0; k < m; ++k)
      if (mask & (std::size_t{1} << k))
        sub.push_back(word[k]);
    out.insert(WeylElt::from_word(data, sub));
  }
  return out;
}

inline std::string word_of(const WeylElt& u)
{
  return format_word(u.canonical_word());
}

} // namespace testing_support

#endif // AFFDEM_TESTS_SUPPORT_HPP

namespace testing_support {

/// A reduced word of u built by stripping a random left descent each step.
inline std::vector<int> random_reduced_word(const WeylElt& u, std::mt19937_64& rng)
{
  std::vector<int> word;
  WeylElt z = u;
  while (!z.is_identity()) {
    std::vector<int> descents;
    for (int i = 0; i <= z.rank(); ++i)
      if (z.is_left_descent(i))
        descents.push_back(i);
    int i = descents[rng() % descents.size()];
    word.push_back(i);
    z = WeylElt::simple(z.data(), i) * z;
  }
  return word;
}

} // namespace testing_support
