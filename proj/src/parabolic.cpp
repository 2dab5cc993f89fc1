#include "affdem/parabolic.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace affdem {

namespace {

bool supported_on(const IntVector& alpha, const std::vector<int>& nodes)
{
  for (std::size_t s = 0; s < alpha.size(); ++s)
    if (alpha[s] != 0 && std::find(nodes.begin(), nodes.end(), static_cast<int>(s) + 1) == nodes.end())
      return false;
  return true;
}

std::vector<std::vector<int>> dynkin_components(const FiniteCartanData& data, const std::vector<int>& nodes)
{
  std::vector<std::vector<int>> out;
  std::vector<bool> used(nodes.size(), false);
  for (std::size_t start = 0; start < nodes.size(); ++start) {
    if (used[start])
      continue;
    std::vector<int> comp{nodes[start]};
    used[start] = true;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (std::size_t t = 0; t < nodes.size(); ++t)
        if (!used[t] && data.cartan(comp[head] - 1, nodes[t] - 1) != 0) {
          used[t] = true;
          comp.push_back(nodes[t]);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<int> weight_vanishing(const FiniteCartanData& data, const Weight& lambda)
{
  if (!is_dominant_integral(data, lambda))
    throw std::invalid_argument("weight must be dominant integral of positive level");
  std::vector<int> out;
  for (int i = 0; i <= data.rank(); ++i)
    if (simple_coroot_value(data, lambda, i) == 0)
      out.push_back(i);
  return out;
}

} // namespace

Dominantized dominantize(const CartanPtr& data, const Coweight& eta)
{
  require_same_system(data->tag(), eta.system);
  CoweightClass c = classify(eta);
  int first = c == CoweightClass::level_zero ? 1 : 0;
  Dominantized r{eta, WeylElt(data)};
  for (;;) {
    int found = -1;
    for (int i = first; i <= data->rank() && found < 0; ++i) {
      Rational v = simple_root_value(*data, r.eta, i);
      if (c == CoweightClass::negative ? v > 0 : v < 0)
        found = i;
    }
    if (found < 0)
      return r;
    WeylElt s = WeylElt::simple(data, found);
    r.eta = s.act(r.eta);
    r.conjugator = s * r.conjugator;
  }
}

EtaContext::EtaContext(CartanPtr data, Coweight eta)
    : data_(std::move(data)), eta_(std::move(eta)), class_(classify(eta_))
{
  if (!is_appropriately_dominant(*data_, eta_))
    throw std::invalid_argument("coweight is not appropriately dominant");
  int n = data_->rank();
  int first = class_ == CoweightClass::level_zero ? 1 : 0;
  for (int i = first; i <= n; ++i)
    if (simple_root_value(*data_, eta_, i) == 0)
      J_.push_back(i);
  for (int j : J_)
    generator_roots_.push_back(simple_affine_root(*data_, j));
  if (class_ == CoweightClass::level_zero) {
    components_ = dynkin_components(*data_, J_);
    for (const auto& comp : components_) {
      const IntVector* best = nullptr;
      for (const auto& alpha : data_->positive_roots())
        if (supported_on(alpha, comp) &&
            (!best || FiniteCartanData::height(alpha) > FiniteCartanData::height(*best)))
          best = &alpha;
      component_highest_.push_back(*best);
      IntVector neg(best->size());
      for (std::size_t s = 0; s < neg.size(); ++s)
        neg[s] = -(*best)[s];
      generator_roots_.push_back(AffineRoot{std::move(neg), 1});
    }
  } else {
    std::set<AffineRoot> seen(generator_roots_.begin(), generator_roots_.end());
    std::deque<AffineRoot> queue(generator_roots_.begin(), generator_roots_.end());
    while (!queue.empty()) {
      AffineRoot beta = queue.front();
      queue.pop_front();
      for (int j : J_) {
        AffineRoot image = WeylElt::simple(data_, j).act(beta);
        if (image.is_positive() && seen.insert(image).second)
          queue.push_back(image);
      }
    }
    finite_positive_.assign(seen.begin(), seen.end());
  }
  for (const auto& g : generators())
    if (group_length(g) != 1)
      throw std::logic_error("generator of W(eta) has length other than 1");
}

std::vector<WeylElt> EtaContext::generators() const
{
  std::vector<WeylElt> out;
  for (const auto& gamma : generator_roots_)
    out.push_back(WeylElt::reflection(data_, gamma));
  return out;
}

OrderKind EtaContext::regular_kind() const
{
  switch (class_) {
  case CoweightClass::positive:
    return OrderKind::standard();
  case CoweightClass::negative:
    return OrderKind::opposite();
  default:
    return OrderKind::semi_infinite();
  }
}

OrderKind EtaContext::twisted_kind() const
{
  return OrderKind::twisted(*data_, eta_);
}

bool EtaContext::in_positive_roots(const AffineRoot& beta) const
{
  if (class_ != CoweightClass::level_zero)
    return std::binary_search(finite_positive_.begin(), finite_positive_.end(), beta);
  return beta.is_positive() && supported_on(beta.alpha, J_) && data_->root_index(beta.alpha) >= 0;
}

std::int64_t EtaContext::group_length(const WeylElt& x) const
{
  std::int64_t count = 0;
  if (class_ != CoweightClass::level_zero) {
    for (const auto& beta : finite_positive_)
      if (!x.act(beta).is_positive())
        ++count;
    return count;
  }
  for (const auto& beta : x.inversions())
    if (in_positive_roots(beta))
      ++count;
  return count;
}

bool EtaContext::is_coset_rep(const WeylElt& v) const
{
  for (const auto& gamma : generator_roots_)
    if (!v.act(gamma).is_positive())
      return false;
  return true;
}

Factorization EtaContext::factorize(const WeylElt& w) const
{
  Factorization r{w, WeylElt(data_)};
  for (;;) {
    const AffineRoot* found = nullptr;
    for (const auto& gamma : generator_roots_)
      if (!r.rep.act(gamma).is_positive()) {
        found = &gamma;
        break;
      }
    if (!found)
      return r;
    WeylElt s = WeylElt::reflection(data_, *found);
    r.rep = r.rep * s;
    r.sub = s * r.sub;
  }
}

bool EtaContext::in_group(const WeylElt& u) const
{
  if (class_ != CoweightClass::level_zero) {
    for (int letter : u.canonical_word())
      if (std::find(J_.begin(), J_.end(), letter) == J_.end())
        return false;
    return true;
  }
  int n = data_->rank();
  for (int i = 1; i <= n; ++i)
    if (u.xi()[i - 1] != 0 && std::find(J_.begin(), J_.end(), i) == J_.end())
      return false;
  Coweight nu = zero_coweight(*data_);
  for (int i = 1; i <= n; ++i)
    if (std::find(J_.begin(), J_.end(), i) == J_.end())
      nu = nu + finite_fundamental_coweight(*data_, i);
  return u.finite_part().act(nu) == nu;
}

std::vector<WeylElt> EtaContext::interval(const WeylElt& x) const
{
  if (!in_group(x))
    throw std::invalid_argument("element is not in W(eta)");
  std::vector<WeylElt> out{x};
  WeylEltSet seen{x};
  for (std::size_t head = 0; head < out.size(); ++head) {
    WeylElt z = out[head];
    std::int64_t lz = group_length(z);
    for (const auto& beta : z.inverse().inversions()) {
      if (!in_positive_roots(beta))
        continue;
      WeylElt y = WeylElt::reflection(data_, beta) * z;
      if (group_length(y) == lz - 1 && seen.insert(y).second)
        out.push_back(std::move(y));
    }
  }
  sort_canonically(out);
  return out;
}

bool stabilizer_membership(const WeylElt& u, const Coweight& eta)
{
  return u.act(eta) == eta;
}

std::vector<WeylElt> weight_stabilizer(const CartanPtr& data, const Weight& lambda)
{
  std::vector<int> nodes = weight_vanishing(*data, lambda);
  std::vector<WeylElt> out{WeylElt(data)};
  WeylEltSet seen{out[0]};
  for (std::size_t head = 0; head < out.size(); ++head)
    for (int i : nodes) {
      WeylElt y = out[head] * WeylElt::simple(data, i);
      if (seen.insert(y).second)
        out.push_back(std::move(y));
    }
  sort_canonically(out);
  return out;
}

bool double_coset_equal(const Weight& lambda, const EtaContext& ctx, const WeylElt& w1, const WeylElt& w2,
                        RightGroup group)
{
  for (const auto& x : weight_stabilizer(ctx.data(), lambda)) {
    WeylElt g = (x * w1).inverse() * w2;
    if (group == RightGroup::stabilizer ? stabilizer_membership(g, ctx.eta()) : ctx.in_group(g))
      return true;
  }
  return false;
}

WeylElt max_length_rep(const WeylElt& w, const Weight& lambda)
{
  std::vector<int> nodes = weight_vanishing(*w.data(), lambda);
  WeylElt r = w;
  for (bool changed = true; changed;) {
    changed = false;
    for (int i : nodes)
      if (!r.is_right_descent(i)) {
        r = r * WeylElt::simple(w.data(), i);
        changed = true;
        break;
      }
  }
  return r;
}

} // namespace affdem
