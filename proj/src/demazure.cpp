#include "affdem/demazure.hpp"

#include <stdexcept>

namespace affdem {

DemazureResult demazure_product_word(const OrderKind& kind, std::span<const int> word, const WeylElt& v)
{
  const CartanPtr& data = v.data();
  DemazureResult r{v, WeylElt(data)};
  std::int64_t current = length(kind, v);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    WeylElt s = WeylElt::simple(data, *it);
    WeylElt candidate = s * r.product;
    std::int64_t l = length(kind, candidate);
    if (l == current + 1) {
      r.product = std::move(candidate);
      r.x0 = s * r.x0;
      current = l;
    }
  }
  return r;
}

DemazureResult demazure_product(const OrderKind& kind, const WeylElt& w, const WeylElt& v)
{
  require_same_system(w.data()->tag(), v.data()->tag());
  return demazure_product_word(kind, w.canonical_word(), v);
}

WeylElt brute_demazure_max(const OrderKind& kind, const WeylElt& w, const WeylElt& v,
                           const std::vector<WeylElt>* region)
{
  std::vector<WeylElt> candidates;
  WeylEltSet seen;
  for (const auto& x : interval_standard(w)) {
    WeylElt c = x * v;
    if (seen.insert(c).second)
      candidates.push_back(std::move(c));
  }
  std::size_t best = 0;
  std::int64_t best_len = length(kind, candidates[0]);
  for (std::size_t k = 1; k < candidates.size(); ++k) {
    std::int64_t l = length(kind, candidates[k]);
    if (l > best_len) {
      best = k;
      best_len = l;
    }
  }
  const WeylElt& top = candidates[best];
  for (const auto& c : candidates) {
    bool below = kind.is_regular()
                     ? leq(kind, c, top)
                     : leq_twisted_semidecision(kind.eta(), c, top, region ? *region : candidates) ==
                           Semidecision::proved_leq;
    if (!below)
      throw std::domain_error("no certified maximum: " + format_word(c.canonical_word()) +
                              (kind.is_regular() ? " is not below " : " is not provably below ") +
                              format_word(top.canonical_word()));
  }
  return top;
}

bool monoid_action_check(const WeylElt& w, const WeylElt& v, const WeylElt& u, const OrderKind& kind)
{
  WeylElt wv = demazure_product(OrderKind::standard(), w, v).product;
  WeylElt lhs = demazure_product(kind, wv, u).product;
  WeylElt rhs = demazure_product(kind, w, demazure_product(kind, v, u).product).product;
  return lhs == rhs;
}

bool length_additivity_check(const WeylElt& w, const WeylElt& v, const OrderKind& kind)
{
  DemazureResult r = demazure_product(kind, w, v);
  return r.product == r.x0 * v && leq_standard(r.x0, w) &&
         length(kind, r.product) == r.x0.length() + length(kind, v);
}

} // namespace affdem
