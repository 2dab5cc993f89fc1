#include "affdem/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace affdem {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in affine Weyl group arithmetic");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in affine Weyl group arithmetic");
  return r;
}

IntVector mat_mul(const IntVector& a, const IntVector& b, int n)
{
  IntVector c(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      std::int64_t aik = a[i * n + k];
      if (aik == 0)
        continue;
      for (int j = 0; j < n; ++j)
        c[i * n + j] = checked_add(c[i * n + j], checked_mul(aik, b[k * n + j]));
    }
  return c;
}

IntVector mat_vec(const IntVector& a, std::span<const std::int64_t> v, int n)
{
  IntVector out(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a[i * n + j] != 0 && v[j] != 0)
        out[i] = checked_add(out[i], checked_mul(a[i * n + j], v[j]));
  return out;
}

IntVector identity_matrix(int n)
{
  IntVector m(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i)
    m[i * n + i] = 1;
  return m;
}

// Coroot-coordinate matrix from the root-coordinate matrix of the same map.
IntVector coroot_matrix(const FiniteCartanData& data, const IntVector& roots)
{
  const int n = data.rank();
  IntVector m(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m[i * n + j] = roots[i * n + j] * data.length_scale(i) / data.length_scale(j);
  return m;
}

// Coroot coordinates of the coroot of a (signed) finite root.
IntVector coroot_of(const FiniteCartanData& data, std::span<const std::int64_t> alpha)
{
  bool negative = false;
  int idx = data.root_index(alpha, &negative);
  if (idx < 0)
    throw std::invalid_argument("not a root of " + data.tag().name());
  IntVector co = data.positive_coroots()[idx];
  if (negative)
    for (auto& c : co)
      c = -c;
  return co;
}

} // namespace

// ---------------------------------------------------------------------------
// AffineRoot

bool is_positive_finite_root(std::span<const std::int64_t> alpha)
{
  for (auto c : alpha) {
    if (c > 0)
      return true;
    if (c < 0)
      return false;
  }
  return false;
}

AffineRoot AffineRoot::operator-() const
{
  AffineRoot r{alpha, -k};
  for (auto& c : r.alpha)
    c = -c;
  return r;
}

bool AffineRoot::is_positive() const
{
  return k > 0 || (k == 0 && is_positive_finite_root(alpha));
}

bool AffineRoot::is_semi_infinite_positive() const
{
  return is_positive_finite_root(alpha);
}

bool AffineRoot::in_cone(RootCone cone) const
{
  switch (cone) {
  case RootCone::positive: return is_positive();
  case RootCone::negative: return (-*this).is_positive();
  case RootCone::semi_infinite: return is_semi_infinite_positive();
  }
  return false;
}

AffineRoot simple_affine_root(const FiniteCartanData& data, int i)
{
  const int n = data.rank();
  if (i < 0 || i > n)
    throw std::out_of_range("simple root index out of range");
  AffineRoot r{IntVector(static_cast<std::size_t>(n), 0), 0};
  if (i == 0) {
    for (int k = 0; k < n; ++k)
      r.alpha[k] = -data.highest_root()[k];
    r.k = 1;
  } else {
    r.alpha[i - 1] = 1;
  }
  return r;
}

void require_real_root(const FiniteCartanData& data, const AffineRoot& beta)
{
  if (data.root_index(beta.alpha) < 0)
    throw std::invalid_argument("not a real affine root of " + data.tag().name());
}

Rational pair(const FiniteCartanData& data, const AffineRoot& beta, const Coweight& eta)
{
  require_same_system(data.tag(), eta.system);
  Rational s = eta.d * static_cast<long>(beta.k);
  for (int i = 0; i < data.rank(); ++i)
    if (beta.alpha[i] != 0)
      s += eta.fin[i] * static_cast<long>(beta.alpha[i]);
  return s;
}

// ---------------------------------------------------------------------------
// WeylElt

WeylElt::WeylElt(CartanPtr data)
  : data_(std::move(data))
{
  if (!data_)
    throw std::invalid_argument("null root system");
  const int n = data_->rank();
  fin_ = identity_matrix(n);
  fin_inv_ = fin_;
  xi_.assign(static_cast<std::size_t>(n), 0);
}

WeylElt WeylElt::reflection(CartanPtr data, const AffineRoot& beta)
{
  WeylElt u(data);
  const int n = data->rank();
  IntVector co = coroot_of(*data, beta.alpha);
  // s_alpha(alpha_j) = alpha_j - <alpha_j, alpha^vee> alpha
  for (int j = 0; j < n; ++j) {
    std::int64_t p = 0;
    for (int i = 0; i < n; ++i)
      p += co[i] * data->cartan(i, j);
    for (int i = 0; i < n; ++i)
      u.fin_[i * n + j] -= p * beta.alpha[i];
  }
  u.fin_inv_ = u.fin_;
  for (int i = 0; i < n; ++i)
    u.xi_[i] = checked_mul(beta.k, co[i]);
  return u;
}

WeylElt WeylElt::simple(CartanPtr data, int i)
{
  if (!data)
    throw std::invalid_argument("null root system");
  if (i < 0 || i > data->rank())
    throw std::invalid_argument("generator s" + std::to_string(i) + " out of range for " +
                                data->tag().name() + " affine");
  AffineRoot r = simple_affine_root(*data, i);
  return reflection(std::move(data), r);
}

WeylElt WeylElt::translation(CartanPtr data, IntVector xi)
{
  WeylElt u(data);
  if (static_cast<int>(xi.size()) != u.rank())
    throw std::invalid_argument("translation vector has wrong rank");
  u.xi_ = std::move(xi);
  return u;
}

WeylElt WeylElt::from_word(CartanPtr data, std::span<const int> word)
{
  WeylElt u(data);
  std::vector<WeylElt> gens;
  for (int i = 0; i <= data->rank(); ++i)
    gens.push_back(simple(data, i));
  for (int letter : word) {
    if (letter < 0 || letter > data->rank())
      throw std::invalid_argument("generator s" + std::to_string(letter) + " out of range for " +
                                  data->tag().name() + " affine");
    u = u * gens[letter];
  }
  return u;
}

IntVector WeylElt::fin_coroot_matrix() const
{
  return coroot_matrix(*data_, fin_);
}

bool WeylElt::is_identity() const
{
  return is_finite() && fin_ == identity_matrix(rank());
}

bool WeylElt::is_finite() const
{
  return std::all_of(xi_.begin(), xi_.end(), [](auto c) { return c == 0; });
}

WeylElt WeylElt::finite_part() const
{
  WeylElt u = *this;
  std::fill(u.xi_.begin(), u.xi_.end(), 0);
  return u;
}

WeylElt WeylElt::translation_part() const
{
  return translation(data_, xi_);
}

WeylElt WeylElt::operator*(const WeylElt& other) const
{
  require_same_system(data_->tag(), other.data_->tag());
  const int n = rank();
  WeylElt r;
  r.data_ = data_;
  r.fin_ = mat_mul(fin_, other.fin_, n);
  r.fin_inv_ = mat_mul(other.fin_inv_, fin_inv_, n);
  r.xi_ = other.finite_coroot_preimage(xi_);
  for (int i = 0; i < n; ++i)
    r.xi_[i] = checked_add(r.xi_[i], other.xi_[i]);
  return r;
}

WeylElt WeylElt::inverse() const
{
  WeylElt r;
  r.data_ = data_;
  r.fin_ = fin_inv_;
  r.fin_inv_ = fin_;
  r.xi_ = finite_coroot_image(xi_);
  for (auto& c : r.xi_)
    c = -c;
  return r;
}

IntVector WeylElt::finite_root_image(std::span<const std::int64_t> alpha) const
{
  return mat_vec(fin_, alpha, rank());
}

IntVector WeylElt::finite_root_preimage(std::span<const std::int64_t> alpha) const
{
  return mat_vec(fin_inv_, alpha, rank());
}

IntVector WeylElt::finite_coroot_image(std::span<const std::int64_t> xi) const
{
  return mat_vec(coroot_matrix(*data_, fin_), xi, rank());
}

IntVector WeylElt::finite_coroot_preimage(std::span<const std::int64_t> xi) const
{
  return mat_vec(coroot_matrix(*data_, fin_inv_), xi, rank());
}

AffineRoot WeylElt::act(const AffineRoot& beta) const
{
  std::int64_t shift = data_->root_coroot_pairing(beta.alpha, xi_);
  return {finite_root_image(beta.alpha), checked_add(beta.k, -shift)};
}

AffineRoot WeylElt::act_inverse(const AffineRoot& beta) const
{
  IntVector a = finite_root_preimage(beta.alpha);
  std::int64_t shift = data_->root_coroot_pairing(a, xi_);
  return {std::move(a), checked_add(beta.k, shift)};
}

Weight WeylElt::act(const Weight& lambda) const
{
  require_same_system(data_->tag(), lambda.system);
  const FiniteCartanData& d = *data_;
  const int n = rank();
  Weight mid = lambda;
  if (!is_finite()) {
    // t_xi(lambda) = lambda + m xi - (<lambda, xi> + m (xi|xi)/2) delta
    Rational pairing = 0;
    for (int j = 0; j < n; ++j) {
      if (xi_[j] == 0)
        continue;
      pairing += lambda.fin[j] * static_cast<long>(xi_[j]);
      for (int i = 0; i < n; ++i)
        mid.fin[i] += lambda.level * d.coroot_form(j, i) * static_cast<long>(xi_[j]);
    }
    mid.delta -= pairing + lambda.level * d.coroot_inner(xi_, xi_) / 2;
  }
  Weight out = mid;
  IntVector minv = coroot_matrix(d, fin_inv_);
  for (int i = 0; i < n; ++i) {
    Rational s = 0;
    for (int j = 0; j < n; ++j)
      if (minv[j * n + i] != 0)
        s += mid.fin[j] * static_cast<long>(minv[j * n + i]);
    out.fin[i] = s;
  }
  return out;
}

Coweight WeylElt::act(const Coweight& eta) const
{
  require_same_system(data_->tag(), eta.system);
  const FiniteCartanData& d = *data_;
  const int n = rank();
  Coweight mid = eta;
  if (!is_finite()) {
    // t_xi(eta) = eta + a xi - ((eta|xi) + a (xi|xi)/2) K
    Rational inner = 0;
    for (int j = 0; j < n; ++j) {
      if (xi_[j] == 0)
        continue;
      inner += eta.fin[j] * static_cast<long>(xi_[j]) / d.half_length(j);
      for (int i = 0; i < n; ++i)
        mid.fin[i] += eta.d * static_cast<long>(xi_[j] * d.cartan(j, i));
    }
    mid.k -= inner + eta.d * d.coroot_inner(xi_, xi_) / 2;
  }
  Coweight out = mid;
  for (int i = 0; i < n; ++i) {
    Rational s = 0;
    for (int j = 0; j < n; ++j)
      if (fin_inv_[j * n + i] != 0)
        s += mid.fin[j] * static_cast<long>(fin_inv_[j * n + i]);
    out.fin[i] = s;
  }
  return out;
}

std::vector<AffineRoot> WeylElt::inversions() const
{
  std::vector<AffineRoot> out;
  for (const auto& pos : data_->positive_roots()) {
    for (int sign : {1, -1}) {
      IntVector alpha = pos;
      if (sign < 0)
        for (auto& c : alpha)
          c = -c;
      std::int64_t kmin = sign > 0 ? 0 : 1;
      std::int64_t kmax = data_->root_coroot_pairing(alpha, xi_) -
                          (is_positive_finite_root(finite_root_image(alpha)) ? 1 : 0);
      for (std::int64_t k = kmin; k <= kmax; ++k)
        out.push_back({alpha, k});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t WeylElt::length() const
{
  std::int64_t total = 0;
  for (const auto& pos : data_->positive_roots()) {
    std::int64_t p = data_->root_coroot_pairing(pos, xi_);
    bool image_pos = is_positive_finite_root(finite_root_image(pos));
    // alpha > 0: k in [0, p - (w alpha > 0)]; -alpha: k in [1, -p - (w alpha < 0)]
    std::int64_t up = p - (image_pos ? 1 : 0) + 1;
    std::int64_t down = -p - (image_pos ? 0 : 1);
    total += std::max<std::int64_t>(0, up) + std::max<std::int64_t>(0, down);
  }
  return total;
}

std::int64_t WeylElt::finite_length() const
{
  std::int64_t total = 0;
  for (const auto& pos : data_->positive_roots())
    if (!is_positive_finite_root(finite_root_image(pos)))
      ++total;
  return total;
}

bool WeylElt::is_left_descent(int i) const
{
  return !act_inverse(simple_affine_root(*data_, i)).is_positive();
}

bool WeylElt::is_right_descent(int i) const
{
  return !act(simple_affine_root(*data_, i)).is_positive();
}

std::vector<int> WeylElt::canonical_word() const
{
  std::vector<int> word;
  WeylElt u = *this;
  std::vector<WeylElt> gens;
  for (int i = 0; i <= rank(); ++i)
    gens.push_back(simple(data_, i));
  while (!u.is_identity()) {
    int i = 0;
    while (!u.is_left_descent(i))
      ++i;
    word.push_back(i);
    u = gens[i] * u;
  }
  return word;
}

bool operator==(const WeylElt& a, const WeylElt& b)
{
  if (!a.data_ || !b.data_)
    return a.data_ == b.data_;
  return a.data_->tag() == b.data_->tag() && a.xi_ == b.xi_ && a.fin_ == b.fin_;
}

std::size_t WeylElt::hash() const
{
  std::size_t seed = 0;
  for (auto c : fin_)
    hash_combine(seed, std::hash<std::int64_t>{}(c));
  for (auto c : xi_)
    hash_combine(seed, std::hash<std::int64_t>{}(c));
  return seed;
}

// ---------------------------------------------------------------------------
// Words

ParsedWord parse_word(std::string_view text)
{
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s.push_back(c);
  ParsedWord out;
  if (s.ends_with(":inv")) {
    out.inverse = true;
    s.erase(s.size() - 4);
  }
  if (s.size() >= 2 && s.front() == '[' && s.back() == ']')
    s = s.substr(1, s.size() - 2);
  if (s.empty() || s == "e")
    return out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string_view tok = std::string_view(s).substr(pos, comma == std::string::npos ? std::string::npos
                                                                                     : comma - pos);
    int letter = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), letter);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || letter < 0)
      throw std::invalid_argument("malformed word '" + std::string(text) + "'");
    out.letters.push_back(letter);
    if (comma == std::string::npos)
      break;
    pos = comma + 1;
  }
  return out;
}

WeylElt parse_weyl_element(const CartanPtr& data, std::string_view text)
{
  ParsedWord w = parse_word(text);
  WeylElt u = WeylElt::from_word(data, w.letters);
  return w.inverse ? u.inverse() : u;
}

std::string format_word(std::span<const int> word)
{
  if (word.empty())
    return "e";
  std::string s;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k)
      s += ',';
    s += std::to_string(word[k]);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Standard Bruhat order

bool leq_standard(const WeylElt& x0, const WeylElt& y0)
{
  require_same_system(x0.data()->tag(), y0.data()->tag());
  WeylElt x = x0, y = y0;
  const int n = x.rank();
  std::vector<WeylElt> gens;
  for (int i = 0; i <= n; ++i)
    gens.push_back(WeylElt::simple(x.data(), i));
  std::int64_t lx = x.length(), ly = y.length();
  while (true) {
    if (lx > ly)
      return false;
    if (ly == 0)
      return x.is_identity();
    int i = 0;
    while (!y.is_left_descent(i))
      ++i;
    if (x.is_left_descent(i)) {
      x = gens[i] * x;
      --lx;
    }
    y = gens[i] * y;
    --ly;
  }
}

std::vector<WeylElt> interval_standard(const WeylElt& y)
{
  std::vector<int> word = y.canonical_word();
  WeylEltSet seen{WeylElt(y.data())};
  std::vector<WeylElt> elems{WeylElt(y.data())};
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    WeylElt s = WeylElt::simple(y.data(), *it);
    std::size_t count = elems.size();
    for (std::size_t k = 0; k < count; ++k) {
      WeylElt z = s * elems[k];
      if (seen.insert(z).second)
        elems.push_back(std::move(z));
    }
  }
  sort_canonically(elems);
  return elems;
}

std::vector<WeylElt> ball(const CartanPtr& data, int max_len)
{
  std::vector<WeylElt> gens;
  for (int i = 0; i <= data->rank(); ++i)
    gens.push_back(WeylElt::simple(data, i));
  std::vector<WeylElt> all{WeylElt(data)};
  std::vector<WeylElt> layer = all;
  for (int len = 1; len <= max_len; ++len) {
    WeylEltSet next_set;
    std::vector<WeylElt> next;
    for (const auto& u : layer)
      for (int i = 0; i <= data->rank(); ++i)
        if (!u.is_left_descent(i)) {
          WeylElt z = gens[i] * u;
          if (next_set.insert(z).second)
            next.push_back(std::move(z));
        }
    all.insert(all.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  sort_canonically(all);
  return all;
}

void sort_canonically(std::vector<WeylElt>& elements)
{
  std::vector<std::pair<std::vector<int>, std::size_t>> keys;
  keys.reserve(elements.size());
  for (std::size_t k = 0; k < elements.size(); ++k)
    keys.emplace_back(elements[k].canonical_word(), k);
  std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
    return a.first.size() != b.first.size() ? a.first.size() < b.first.size() : a.first < b.first;
  });
  std::vector<WeylElt> sorted;
  sorted.reserve(elements.size());
  for (const auto& [word, idx] : keys)
    sorted.push_back(std::move(elements[idx]));
  elements = std::move(sorted);
}

} // namespace affdem
