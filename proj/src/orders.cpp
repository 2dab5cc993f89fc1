#include "affdem/orders.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace affdem {

namespace {

std::int64_t floor_of(const Rational& q)
{
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  if (!r.fits_slong_p())
    throw std::overflow_error("rational out of 64-bit range");
  return r.get_si();
}

std::int64_t ceil_of(const Rational& q)
{
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  if (!r.fits_slong_p())
    throw std::overflow_error("rational out of 64-bit range");
  return r.get_si();
}

Rational finite_pairing(std::span<const std::int64_t> alpha, const Coweight& eta)
{
  Rational s = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (alpha[i] != 0)
      s += eta.fin[i] * static_cast<long>(alpha[i]);
  return s;
}

// Number of integers k in [kmin, kmax] with a + k d < 0.
std::int64_t count_negative(std::int64_t kmin, std::int64_t kmax, const Rational& a, const Rational& d)
{
  if (kmax < kmin)
    return 0;
  if (d == 0)
    return a < 0 ? kmax - kmin + 1 : 0;
  Rational bound = -a / d;
  if (d > 0) {
    std::int64_t hi = std::min(kmax, ceil_of(bound) - 1);
    return std::max<std::int64_t>(0, hi - kmin + 1);
  }
  std::int64_t lo = std::max(kmin, floor_of(bound) + 1);
  return std::max<std::int64_t>(0, kmax - lo + 1);
}

void require_positive_root(const FiniteCartanData& data, const AffineRoot& beta)
{
  require_real_root(data, beta);
  if (!beta.is_positive())
    throw std::invalid_argument("cover tests need a positive real root");
}

// Coordinates of u(omega_i^vee) in the basis alpha_0^vee..alpha_n^vee, all i.
std::vector<RationalVector> coweight_profile(const WeylElt& u)
{
  const FiniteCartanData& d = *u.data();
  std::vector<RationalVector> out;
  for (int i = 1; i <= d.rank(); ++i)
    out.push_back(affine_coroot_coordinates(d, u.act(finite_fundamental_coweight(d, i))));
  return out;
}

// a - b >= 0 coordinatewise for every profile entry.
bool dominates(const std::vector<RationalVector>& a, const std::vector<RationalVector>& b)
{
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j)
      if (a[i][j] < b[i][j])
        return false;
  return true;
}

} // namespace

bool is_appropriately_dominant(const FiniteCartanData& data, const Coweight& eta)
{
  if (!(eta.system == data.tag()))
    return false;
  switch (classify(eta)) {
  case CoweightClass::positive:
    for (int i = 0; i <= data.rank(); ++i)
      if (simple_root_value(data, eta, i) < 0)
        return false;
    return true;
  case CoweightClass::negative:
    for (int i = 0; i <= data.rank(); ++i)
      if (simple_root_value(data, eta, i) > 0)
        return false;
    return true;
  case CoweightClass::level_zero:
    for (int i = 1; i <= data.rank(); ++i)
      if (simple_root_value(data, eta, i) < 0)
        return false;
    return true;
  }
  return false;
}

OrderKind OrderKind::twisted(const FiniteCartanData& data, Coweight eta)
{
  if (!is_appropriately_dominant(data, eta))
    throw std::invalid_argument("twisted order needs an appropriately dominant coweight");
  OrderKind k(Tag::twisted);
  k.eta_ = std::move(eta);
  return k;
}

RootCone OrderKind::cone() const
{
  switch (tag_) {
  case Tag::standard: return RootCone::positive;
  case Tag::opposite: return RootCone::negative;
  case Tag::semi_infinite: return RootCone::semi_infinite;
  case Tag::twisted: break;
  }
  throw std::logic_error("twisted orders have no fixed positivity cone");
}

std::string OrderKind::name() const
{
  switch (tag_) {
  case Tag::standard: return "standard";
  case Tag::opposite: return "opposite";
  case Tag::semi_infinite: return "semi_infinite";
  case Tag::twisted: return "twisted";
  }
  return "unknown";
}

OrderKind parse_order_kind(const FiniteCartanData& data, std::string_view text,
                           const std::optional<Coweight>& eta)
{
  if (text == "std" || text == "standard")
    return OrderKind::standard();
  if (text == "opp" || text == "opposite")
    return OrderKind::opposite();
  if (text == "semi" || text == "semi_infinite" || text == "semi-infinite")
    return OrderKind::semi_infinite();
  if (text == "twisted") {
    if (!eta)
      throw std::invalid_argument("the twisted kind needs a coweight");
    return OrderKind::twisted(data, *eta);
  }
  throw std::invalid_argument("unknown order kind '" + std::string(text) + "'");
}

std::int64_t semi_infinite_length(const WeylElt& u)
{
  // <2 rho, alpha_j^vee> = 2 for every simple coroot
  std::int64_t s = 0;
  for (auto c : u.xi())
    s += c;
  return u.finite_length() + 2 * s;
}

std::int64_t twisted_length(const WeylElt& u, const Coweight& eta)
{
  const FiniteCartanData& data = *u.data();
  require_same_system(data.tag(), eta.system);
  std::int64_t inverted = 0;
  std::int64_t hits = 0;
  for (const auto& pos : data.positive_roots()) {
    std::int64_t p = data.root_coroot_pairing(pos, u.xi());
    bool image_pos = is_positive_finite_root(u.finite_root_image(pos));
    Rational a = finite_pairing(pos, eta);
    // alpha + k delta with k in [0, p - [u alpha > 0]]
    std::int64_t hi = p - (image_pos ? 1 : 0);
    inverted += std::max<std::int64_t>(0, hi + 1);
    hits += count_negative(0, hi, a, eta.d);
    // -alpha + k delta with k in [1, -p - [u alpha < 0]]
    std::int64_t hi_neg = -p - (image_pos ? 0 : 1);
    inverted += std::max<std::int64_t>(0, hi_neg);
    hits += count_negative(1, hi_neg, -a, eta.d);
  }
  return inverted - 2 * hits;
}

std::int64_t length(const OrderKind& kind, const WeylElt& u)
{
  switch (kind.tag()) {
  case OrderKind::Tag::standard: return u.length();
  case OrderKind::Tag::opposite: return -u.length();
  case OrderKind::Tag::semi_infinite: return semi_infinite_length(u);
  case OrderKind::Tag::twisted: return twisted_length(u, kind.eta());
  }
  return 0;
}

bool raises(const OrderKind& kind, const WeylElt& w, const AffineRoot& beta)
{
  const FiniteCartanData& data = *w.data();
  require_positive_root(data, beta);
  if (kind.is_regular())
    return w.act_inverse(beta).in_cone(kind.cone());

  // w <= s_beta w  iff  beta lies in Phi_{w'} xor w' A_eta w'^{-1}, w' = s_beta w,
  // where A_eta is the set of reflections s_gamma with gamma in A'_eta.
  WeylElt wp = WeylElt::reflection(w.data(), beta) * w;
  AffineRoot gamma = wp.act_inverse(beta);
  bool in_inversions = !gamma.is_positive();
  AffineRoot gamma_pos = gamma.is_positive() ? gamma : -gamma;
  bool in_twist = pair(data, gamma_pos, kind.eta()) < 0;
  return in_inversions != in_twist;
}

bool is_cover(const OrderKind& kind, const WeylElt& w, const AffineRoot& beta)
{
  if (!raises(kind, w, beta))
    return false;
  WeylElt target = WeylElt::reflection(w.data(), beta) * w;
  return length(kind, target) == length(kind, w) + 1;
}

std::optional<AffineRoot> reflection_root(const WeylElt& g)
{
  const FiniteCartanData& data = *g.data();
  if (g.is_identity())
    return std::nullopt;
  const auto& roots = data.positive_roots();
  for (std::size_t idx = 0; idx < roots.size(); ++idx) {
    const IntVector& co = data.positive_coroots()[idx];
    // xi must be an integer multiple of alpha^vee
    std::int64_t k = 0;
    bool ok = true;
    bool fixed = false;
    for (int i = 0; i < data.rank() && ok; ++i) {
      if (co[i] == 0) {
        ok = g.xi()[i] == 0;
      } else if (!fixed) {
        if (g.xi()[i] % co[i] != 0)
          ok = false;
        k = g.xi()[i] / co[i];
        fixed = true;
      } else if (g.xi()[i] != k * co[i]) {
        ok = false;
      }
    }
    if (!ok)
      continue;
    WeylElt s = WeylElt::reflection(g.data(), {roots[idx], 0});
    if (s.fin_roots() != g.fin_roots())
      continue;
    AffineRoot beta{roots[idx], k};
    return beta.is_positive() ? beta : -beta;
  }
  return std::nullopt;
}

std::vector<Cover> semi_infinite_covers(const WeylElt& u)
{
  const FiniteCartanData& data = *u.data();
  std::vector<Cover> out;
  std::int64_t base = semi_infinite_length(u);
  std::int64_t base_fin = u.finite_length();
  WeylElt fin = u.finite_part();
  for (std::size_t idx = 0; idx < data.positive_roots().size(); ++idx) {
    const IntVector& alpha = data.positive_roots()[idx];
    // l(s_alpha w) - l(w) + k <2 rho, w^{-1} alpha^vee> must equal 1
    WeylElt sfin = WeylElt::reflection(u.data(), {alpha, 0}) * fin;
    std::int64_t diff = sfin.finite_length() - base_fin;
    IntVector pre = u.finite_coroot_preimage(data.positive_coroots()[idx]);
    std::int64_t h = 0;
    for (auto c : pre)
      h += 2 * c;
    if ((1 - diff) % h != 0)
      continue;
    std::int64_t k = (1 - diff) / h;
    AffineRoot beta{alpha, k};
    if (!beta.is_positive())
      beta = -beta;
    WeylElt target = WeylElt::reflection(u.data(), beta) * u;
    if (semi_infinite_length(target) != base + 1)
      throw std::logic_error("semi-infinite cover enumeration is inconsistent");
    out.push_back({std::move(target), std::move(beta)});
  }
  return out;
}

bool leq_semi_infinite(const WeylElt& x, const WeylElt& y)
{
  require_same_system(x.data()->tag(), y.data()->tag());
  if (x == y)
    return true;
  std::int64_t ly = semi_infinite_length(y);
  if (semi_infinite_length(x) >= ly)
    return false;
  auto px = coweight_profile(x);
  auto py = coweight_profile(y);
  if (!dominates(px, py))
    return false;

  // Every u with x <= u <= y has u omega_i^vee trapped between x omega_i^vee
  // and y omega_i^vee, which confines the search to finitely many elements.
  WeylEltSet seen{x};
  std::deque<WeylElt> queue{x};
  while (!queue.empty()) {
    WeylElt u = std::move(queue.front());
    queue.pop_front();
    if (semi_infinite_length(u) + 1 > ly)
      continue;
    for (auto& c : semi_infinite_covers(u)) {
      if (c.target == y)
        return true;
      if (seen.count(c.target))
        continue;
      auto pz = coweight_profile(c.target);
      if (!dominates(px, pz) || !dominates(pz, py))
        continue;
      seen.insert(c.target);
      queue.push_back(std::move(c.target));
    }
  }
  return false;
}

bool leq(const OrderKind& kind, const WeylElt& x, const WeylElt& y)
{
  switch (kind.tag()) {
  case OrderKind::Tag::standard: return leq_standard(x, y);
  case OrderKind::Tag::opposite: return leq_standard(y, x);
  case OrderKind::Tag::semi_infinite: return leq_semi_infinite(x, y);
  case OrderKind::Tag::twisted: break;
  }
  throw std::invalid_argument("twisted orders are only semi-decidable; use a region search");
}

Semidecision leq_twisted_semidecision(const Coweight& eta, const WeylElt& x, const WeylElt& y,
                                      const std::vector<WeylElt>& region)
{
  if (!is_appropriately_dominant(*x.data(), eta))
    throw std::invalid_argument("twisted order needs an appropriately dominant coweight");
  if (x == y)
    return Semidecision::proved_leq;
  std::vector<std::int64_t> lengths;
  for (const auto& r : region)
    lengths.push_back(twisted_length(r, eta));
  std::int64_t lx = twisted_length(x, eta);
  std::int64_t ly = twisted_length(y, eta);
  if (lx >= ly)
    return Semidecision::inconclusive;

  WeylEltSet seen{x};
  std::deque<std::pair<WeylElt, std::int64_t>> queue{{x, lx}};
  while (!queue.empty()) {
    auto [u, lu] = queue.front();
    queue.pop_front();
    WeylElt uinv = u.inverse();
    for (std::size_t k = 0; k < region.size(); ++k) {
      if (lengths[k] != lu + 1 || seen.count(region[k]))
        continue;
      if (!reflection_root(region[k] * uinv))
        continue;
      if (region[k] == y)
        return Semidecision::proved_leq;
      seen.insert(region[k]);
      queue.emplace_back(region[k], lengths[k]);
    }
  }
  return Semidecision::inconclusive;
}

std::vector<Arrow> hasse_arrows(const OrderKind& kind, const std::vector<WeylElt>& elements)
{
  std::vector<std::int64_t> lengths;
  std::vector<WeylElt> inverses;
  for (const auto& u : elements) {
    lengths.push_back(length(kind, u));
    inverses.push_back(u.inverse());
  }
  std::vector<Arrow> out;
  for (std::size_t a = 0; a < elements.size(); ++a)
    for (std::size_t b = 0; b < elements.size(); ++b) {
      if (lengths[b] != lengths[a] + 1)
        continue;
      auto beta = reflection_root(elements[b] * inverses[a]);
      if (beta)
        out.push_back({a, b, *beta});
    }
  return out;
}

bool diamond_check(const OrderKind& kind, const WeylElt& w, const WeylElt& v, int s)
{
  if (!kind.is_regular())
    throw std::invalid_argument("diamond checks need a decidable order");
  if (w == v || !leq(kind, w, v))
    throw std::invalid_argument("diamond check needs w < v");
  WeylElt g = WeylElt::simple(w.data(), s);
  WeylElt sw = g * w;
  WeylElt sv = g * v;
  bool strict = !(sw == sv) && leq(kind, sw, sv);
  bool a = leq(kind, sw, v) || strict;
  bool b = leq(kind, w, sv) || strict;
  return a && b;
}

} // namespace affdem
