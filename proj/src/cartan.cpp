#include "affdem/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

namespace affdem {

namespace {

std::uint64_t factorial(int n)
{
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k)
    f *= static_cast<std::uint64_t>(k);
  return f;
}

// Bourbaki numbering; entry (i, j) is <alpha_j, alpha_i^vee>.
IntVector cartan_matrix(char letter, int n)
{
  IntVector a(static_cast<std::size_t>(n * n), 0);
  auto at = [&](int i, int j) -> std::int64_t& { return a[(i - 1) * n + (j - 1)]; };
  auto bond = [&](int i, int j) { at(i, j) = -1; at(j, i) = -1; };
  for (int i = 1; i <= n; ++i)
    at(i, i) = 2;

  switch (letter) {
  case 'A':
    for (int i = 1; i < n; ++i)
      bond(i, i + 1);
    break;
  case 'B':
    for (int i = 1; i < n; ++i)
      bond(i, i + 1);
    at(n, n - 1) = -2;  // alpha_n short
    break;
  case 'C':
    for (int i = 1; i < n; ++i)
      bond(i, i + 1);
    at(n - 1, n) = -2;  // alpha_n long
    break;
  case 'D':
    for (int i = 1; i < n - 1; ++i)
      bond(i, i + 1);
    bond(n - 2, n);
    break;
  case 'E':
    bond(1, 3);
    bond(3, 4);
    bond(2, 4);
    for (int i = 4; i < n; ++i)
      bond(i, i + 1);
    break;
  case 'F':
    bond(1, 2);
    bond(2, 3);
    bond(3, 4);
    at(3, 2) = -2;  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
    break;
  case 'G':
    bond(1, 2);
    at(1, 2) = -3;  // alpha_1 short
    break;
  default:
    break;
  }
  return a;
}

std::uint64_t weyl_order(char letter, int n)
{
  switch (letter) {
  case 'A': return factorial(n + 1);
  case 'B':
  case 'C': return (std::uint64_t{1} << n) * factorial(n);
  case 'D': return (std::uint64_t{1} << (n - 1)) * factorial(n);
  case 'E': return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
  case 'F': return 1152;
  case 'G': return 12;
  default: return 0;
  }
}

// Positive roots by height, then with alpha_1 before alpha_2 and so on.
bool root_order(const IntVector& a, const IntVector& b)
{
  auto ha = FiniteCartanData::height(a), hb = FiniteCartanData::height(b);
  return ha != hb ? ha < hb : a > b;
}

// Inverse of an integer matrix over Q by Gauss-Jordan elimination.
RationalVector invert(const IntVector& m, int n)
{
  RationalVector a(static_cast<std::size_t>(n * 2 * n));
  auto at = [&](int i, int j) -> Rational& { return a[i * 2 * n + j]; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      at(i, j) = Rational(static_cast<long>(m[i * n + j]));
    at(i, n + i) = 1;
  }
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && at(pivot, col) == 0)
      ++pivot;
    if (pivot == n)
      throw std::logic_error("singular Cartan matrix");
    if (pivot != col)
      for (int j = 0; j < 2 * n; ++j)
        std::swap(at(pivot, j), at(col, j));
    Rational inv = 1 / at(col, col);
    for (int j = 0; j < 2 * n; ++j)
      at(col, j) *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == col || at(i, col) == 0)
        continue;
      Rational factor = at(i, col);
      for (int j = 0; j < 2 * n; ++j)
        at(i, j) -= factor * at(col, j);
    }
  }
  RationalVector out(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out[i * n + j] = at(i, n + j);
  return out;
}

} // namespace

std::string RootSystemTag::name() const
{
  return std::string(1, letter) + std::to_string(rank);
}

bool is_valid_type(char letter, int rank)
{
  switch (letter) {
  case 'A': return rank >= 1;
  case 'B': return rank >= 2;
  case 'C': return rank >= 2;
  case 'D': return rank >= 4;
  case 'E': return rank >= 6 && rank <= 8;
  case 'F': return rank == 4;
  case 'G': return rank == 2;
  default: return false;
  }
}

RootSystemTag parse_root_system_tag(std::string_view text)
{
  std::string s(text);
  for (std::string_view suffix : {"affine", "~", "^(1)", "(1)"}) {
    if (s.size() > suffix.size() && s.ends_with(suffix)) {
      s.erase(s.size() - suffix.size());
      break;
    }
  }
  if (s.size() < 2 || !std::isalpha(static_cast<unsigned char>(s[0])))
    throw std::invalid_argument("invalid root system tag '" + std::string(text) + "'");
  char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  int rank = 0;
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k])) || rank > 1000)
      throw std::invalid_argument("invalid root system tag '" + std::string(text) + "'");
    rank = rank * 10 + (s[k] - '0');
  }
  if (!is_valid_type(letter, rank))
    throw std::invalid_argument("no irreducible root system of type " + std::string(1, letter) +
                                std::to_string(rank));
  return {letter, rank};
}

std::shared_ptr<const FiniteCartanData> FiniteCartanData::build(char letter, int rank)
{
  letter = static_cast<char>(std::toupper(static_cast<unsigned char>(letter)));
  if (!is_valid_type(letter, rank))
    throw std::invalid_argument("no irreducible root system of type " + std::string(1, letter) +
                                std::to_string(rank));

  std::shared_ptr<FiniteCartanData> out(new FiniteCartanData());
  FiniteCartanData& d = *out;
  const int n = rank;
  d.tag_ = {letter, rank};
  d.cartan_ = cartan_matrix(letter, rank);

  // Relative squared lengths: (alpha_j|alpha_j)/(alpha_i|alpha_i) = a_ij / a_ji.
  RationalVector rel(static_cast<std::size_t>(n));
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  rel[0] = 1;
  seen[0] = true;
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      if (!seen[i])
        continue;
      for (int j = 0; j < n; ++j) {
        if (seen[j] || d.cartan(i, j) == 0)
          continue;
        Rational ratio(static_cast<long>(-d.cartan(i, j)), static_cast<long>(-d.cartan(j, i)));
        ratio.canonicalize();
        rel[j] = rel[i] * ratio;
        seen[j] = true;
        changed = true;
      }
    }
  }

  // Positive roots by closure under root strings.
  std::set<IntVector> known;
  std::vector<IntVector> roots;
  for (int i = 0; i < n; ++i) {
    IntVector e(static_cast<std::size_t>(n), 0);
    e[i] = 1;
    known.insert(e);
    roots.push_back(e);
  }
  for (std::size_t idx = 0; idx < roots.size(); ++idx) {
    const IntVector beta = roots[idx];
    for (int i = 0; i < n; ++i) {
      std::int64_t pairing = 0;  // <beta, alpha_i^vee>
      for (int j = 0; j < n; ++j)
        pairing += beta[j] * d.cartan(i, j);
      std::int64_t p = 0;
      IntVector down = beta;
      while (true) {
        down[i] -= 1;
        if (!known.count(down))
          break;
        ++p;
      }
      if (p - pairing > 0) {
        IntVector up = beta;
        up[i] += 1;
        if (known.insert(up).second)
          roots.push_back(up);
      }
    }
  }
  std::sort(roots.begin(), roots.end(), root_order);
  d.positive_roots_ = roots;
  d.highest_root_ = roots.back();

  // Normalise the form so that (theta|theta) = 2.
  RationalVector form(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      form[i * n + j] = rel[i] * static_cast<long>(d.cartan(i, j)) / 2;
  Rational theta_sq = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      theta_sq += form[i * n + j] * static_cast<long>(d.highest_root_[i] * d.highest_root_[j]);
  Rational scale = 2 / theta_sq;
  for (auto& f : form) {
    f *= scale;
    f.canonicalize();
  }
  d.root_form_ = form;
  d.half_length_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    d.half_length_[i] = form[i * n + i] / 2;
  Rational shortest = *std::min_element(d.half_length_.begin(), d.half_length_.end());
  d.length_scale_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Rational r = d.half_length_[i] / shortest;
    if (!is_integer(r))
      throw std::logic_error("non-integral root length ratio");
    d.length_scale_[i] = r.get_num().get_si();
  }

  d.coroot_form_.resize(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational g = form[i * n + j] / (d.half_length_[i] * d.half_length_[j]);
      g.canonicalize();
      d.coroot_form_[i * n + j] = g;
    }

  // Coroots: alpha^vee = sum c_i (d_i / d_alpha) alpha_i^vee.
  for (const auto& alpha : d.positive_roots_) {
    Rational half_sq = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        half_sq += form[i * n + j] * static_cast<long>(alpha[i] * alpha[j]);
    half_sq /= 2;
    IntVector co(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      Rational c = Rational(static_cast<long>(alpha[i])) * d.half_length_[i] / half_sq;
      c.canonicalize();
      if (!is_integer(c))
        throw std::logic_error("non-integral coroot");
      co[i] = c.get_num().get_si();
    }
    d.positive_coroots_.push_back(std::move(co));
  }
  d.comarks_ = d.positive_coroots_.back();

  d.cartan_inverse_ = invert(d.cartan_, n);

  d.rho_.assign(static_cast<std::size_t>(n), Rational(0));
  for (const auto& alpha : d.positive_roots_)
    for (int i = 0; i < n; ++i)
      d.rho_[i] += Rational(static_cast<long>(alpha[i]), 2);
  for (auto& r : d.rho_)
    r.canonicalize();

  d.weyl_order_ = weyl_order(letter, rank);
  return out;
}

std::int64_t FiniteCartanData::affine_cartan(int i, int j) const
{
  const int n = rank();
  if (i < 0 || j < 0 || i > n || j > n)
    throw std::out_of_range("affine Cartan index out of range");
  if (i > 0 && j > 0)
    return cartan(i - 1, j - 1);
  if (i == 0 && j == 0)
    return 2;
  if (i == 0) {
    // <alpha_j, alpha_0^vee> = -<alpha_j, theta^vee>
    std::int64_t s = 0;
    for (int k = 0; k < n; ++k)
      s += comarks_[k] * cartan(k, j - 1);
    return -s;
  }
  // <alpha_0, alpha_i^vee> = -<theta, alpha_i^vee>
  std::int64_t s = 0;
  for (int k = 0; k < n; ++k)
    s += highest_root_[k] * cartan(i - 1, k);
  return -s;
}

int FiniteCartanData::root_index(std::span<const std::int64_t> alpha, bool* negative) const
{
  if (static_cast<int>(alpha.size()) != rank())
    return -1;
  bool neg = false;
  for (auto c : alpha) {
    if (c < 0) {
      neg = true;
      break;
    }
    if (c > 0)
      break;
  }
  IntVector key(alpha.begin(), alpha.end());
  if (neg)
    for (auto& c : key)
      c = -c;
  auto it = std::lower_bound(positive_roots_.begin(), positive_roots_.end(), key, root_order);
  if (it == positive_roots_.end() || *it != key)
    return -1;
  if (negative)
    *negative = neg;
  return static_cast<int>(it - positive_roots_.begin());
}

std::int64_t FiniteCartanData::root_coroot_pairing(std::span<const std::int64_t> root,
                                                   std::span<const std::int64_t> coroot) const
{
  const int n = rank();
  std::int64_t s = 0;
  for (int i = 0; i < n; ++i) {
    if (coroot[i] == 0)
      continue;
    std::int64_t row = 0;
    for (int j = 0; j < n; ++j)
      row += cartan(i, j) * root[j];
    s += coroot[i] * row;
  }
  return s;
}

Rational FiniteCartanData::coroot_inner(std::span<const std::int64_t> xi,
                                        std::span<const std::int64_t> zeta) const
{
  const int n = rank();
  Rational s = 0;
  for (int i = 0; i < n; ++i) {
    if (xi[i] == 0)
      continue;
    for (int j = 0; j < n; ++j)
      if (zeta[j] != 0)
        s += coroot_form(i, j) * static_cast<long>(xi[i] * zeta[j]);
  }
  return s;
}

std::int64_t FiniteCartanData::height(std::span<const std::int64_t> root)
{
  std::int64_t h = 0;
  for (auto c : root)
    h += c;
  return h;
}

// ---------------------------------------------------------------------------
// Weights and coweights

void require_same_system(const RootSystemTag& a, const RootSystemTag& b)
{
  if (!(a == b))
    throw std::invalid_argument("root system mismatch: " + a.name() + " vs " + b.name());
}

bool operator<(const Weight& a, const Weight& b)
{
  if (a.fin != b.fin)
    return a.fin < b.fin;
  if (a.level != b.level)
    return a.level < b.level;
  return a.delta < b.delta;
}

Weight Weight::operator+(const Weight& other) const
{
  require_same_system(system, other.system);
  Weight r = *this;
  for (std::size_t i = 0; i < fin.size(); ++i)
    r.fin[i] += other.fin[i];
  r.level += other.level;
  r.delta += other.delta;
  return r;
}

Weight Weight::operator-(const Weight& other) const
{
  return *this + other.scaled(-1);
}

Weight Weight::scaled(const Rational& c) const
{
  Weight r = *this;
  for (auto& x : r.fin)
    x *= c;
  r.level *= c;
  r.delta *= c;
  return r;
}

Coweight Coweight::operator+(const Coweight& other) const
{
  require_same_system(system, other.system);
  Coweight r = *this;
  for (std::size_t i = 0; i < fin.size(); ++i)
    r.fin[i] += other.fin[i];
  r.d += other.d;
  r.k += other.k;
  return r;
}

Coweight Coweight::operator-(const Coweight& other) const
{
  return *this + (-other);
}

Coweight Coweight::operator-() const
{
  return scaled(-1);
}

Coweight Coweight::scaled(const Rational& c) const
{
  Coweight r = *this;
  for (auto& x : r.fin)
    x *= c;
  r.d *= c;
  r.k *= c;
  return r;
}

std::size_t WeightHash::operator()(const Weight& w) const
{
  std::size_t seed = hash_value(w.fin);
  hash_combine(seed, hash_value(w.level));
  hash_combine(seed, hash_value(w.delta));
  return seed;
}

std::string_view to_string(CoweightClass c)
{
  switch (c) {
  case CoweightClass::positive: return "positive";
  case CoweightClass::negative: return "negative";
  case CoweightClass::level_zero: return "level_zero";
  }
  return "unknown";
}

CoweightClass classify(const Coweight& eta)
{
  int s = sgn(eta.d);
  return s > 0 ? CoweightClass::positive : s < 0 ? CoweightClass::negative : CoweightClass::level_zero;
}

Weight zero_weight(const FiniteCartanData& data)
{
  return Weight{data.tag(), RationalVector(static_cast<std::size_t>(data.rank()), Rational(0)), 0, 0};
}

Coweight zero_coweight(const FiniteCartanData& data)
{
  return Coweight{data.tag(), RationalVector(static_cast<std::size_t>(data.rank()), Rational(0)), 0, 0};
}

namespace {

void check_node(const FiniteCartanData& data, int i, int lo)
{
  if (i < lo || i > data.rank())
    throw std::out_of_range("node index " + std::to_string(i) + " out of range for " +
                            data.tag().name());
}

} // namespace

Weight fundamental_weight(const FiniteCartanData& data, int i)
{
  check_node(data, i, 0);
  Weight w = zero_weight(data);
  if (i == 0) {
    w.level = 1;
  } else {
    w.fin[i - 1] = 1;
    w.level = static_cast<long>(data.comarks()[i - 1]);
  }
  return w;
}

Weight finite_fundamental_weight(const FiniteCartanData& data, int i)
{
  check_node(data, i, 1);
  Weight w = zero_weight(data);
  w.fin[i - 1] = 1;
  return w;
}

Weight null_root(const FiniteCartanData& data)
{
  Weight w = zero_weight(data);
  w.delta = 1;
  return w;
}

Weight root_weight(const FiniteCartanData& data, std::span<const std::int64_t> alpha, std::int64_t k)
{
  const int n = data.rank();
  Weight w = zero_weight(data);
  for (int j = 0; j < n; ++j) {
    std::int64_t s = 0;
    for (int i = 0; i < n; ++i)
      s += data.cartan(j, i) * alpha[i];
    w.fin[j] = static_cast<long>(s);
  }
  w.delta = static_cast<long>(k);
  return w;
}

Weight simple_root_weight(const FiniteCartanData& data, int i)
{
  check_node(data, i, 0);
  const int n = data.rank();
  IntVector alpha(static_cast<std::size_t>(n), 0);
  if (i == 0) {
    for (int k = 0; k < n; ++k)
      alpha[k] = -data.highest_root()[k];
    return root_weight(data, alpha, 1);
  }
  alpha[i - 1] = 1;
  return root_weight(data, alpha, 0);
}

Coweight fundamental_affine_coweight(const FiniteCartanData& data, int i)
{
  check_node(data, i, 0);
  Coweight c = zero_coweight(data);
  if (i == 0) {
    c.d = 1;
  } else {
    c.fin[i - 1] = 1;
    c.d = static_cast<long>(data.marks()[i - 1]);
  }
  return c;
}

Coweight finite_fundamental_coweight(const FiniteCartanData& data, int i)
{
  check_node(data, i, 1);
  Coweight c = zero_coweight(data);
  c.fin[i - 1] = 1;
  return c;
}

Coweight central_coweight(const FiniteCartanData& data)
{
  Coweight c = zero_coweight(data);
  c.k = 1;
  return c;
}

Coweight degree_coweight(const FiniteCartanData& data)
{
  Coweight c = zero_coweight(data);
  c.d = 1;
  return c;
}

Coweight coroot_coweight(const FiniteCartanData& data, std::span<const std::int64_t> xi)
{
  const int n = data.rank();
  Coweight c = zero_coweight(data);
  for (int j = 0; j < n; ++j) {
    std::int64_t s = 0;
    for (int i = 0; i < n; ++i)
      s += xi[i] * data.cartan(i, j);
    c.fin[j] = static_cast<long>(s);
  }
  return c;
}

Coweight simple_coroot(const FiniteCartanData& data, int i)
{
  check_node(data, i, 0);
  const int n = data.rank();
  IntVector xi(static_cast<std::size_t>(n), 0);
  if (i == 0) {
    for (int k = 0; k < n; ++k)
      xi[k] = -data.comarks()[k];
    Coweight c = coroot_coweight(data, xi);
    c.k = 1;
    return c;
  }
  xi[i - 1] = 1;
  return coroot_coweight(data, xi);
}

Rational pair(const FiniteCartanData& data, const Weight& lambda, const Coweight& eta)
{
  require_same_system(lambda.system, eta.system);
  require_same_system(lambda.system, data.tag());
  const int n = data.rank();
  Rational s = lambda.level * eta.k + lambda.delta * eta.d;
  for (int i = 0; i < n; ++i) {
    if (lambda.fin[i] == 0)
      continue;
    for (int j = 0; j < n; ++j)
      if (eta.fin[j] != 0)
        s += lambda.fin[i] * eta.fin[j] * data.cartan_inverse(j, i);
  }
  return s;
}

Rational simple_coroot_value(const FiniteCartanData& data, const Weight& lambda, int i)
{
  check_node(data, i, 0);
  if (i > 0)
    return lambda.fin[i - 1];
  Rational s = lambda.level;
  for (int k = 0; k < data.rank(); ++k)
    s -= lambda.fin[k] * static_cast<long>(data.comarks()[k]);
  return s;
}

Rational simple_root_value(const FiniteCartanData& data, const Coweight& eta, int i)
{
  check_node(data, i, 0);
  if (i > 0)
    return eta.fin[i - 1];
  Rational s = eta.d;
  for (int k = 0; k < data.rank(); ++k)
    s -= eta.fin[k] * static_cast<long>(data.marks()[k]);
  return s;
}

bool is_dominant_integral(const FiniteCartanData& data, const Weight& lambda)
{
  if (!(lambda.system == data.tag()) || lambda.level <= 0)
    return false;
  for (int i = 0; i <= data.rank(); ++i) {
    Rational v = simple_coroot_value(data, lambda, i);
    if (v < 0 || !is_integer(v))
      return false;
  }
  return true;
}

RationalVector affine_coroot_coordinates(const FiniteCartanData& data, const Coweight& eta)
{
  if (eta.d != 0)
    throw std::domain_error("affine coroot coordinates need <delta, eta> = 0");
  const int n = data.rank();
  RationalVector c(static_cast<std::size_t>(n + 1));
  c[0] = eta.k;
  for (int j = 0; j < n; ++j) {
    Rational g = 0;  // coroot coordinate of the finite part
    for (int i = 0; i < n; ++i)
      if (eta.fin[i] != 0)
        g += data.cartan_inverse(i, j) * eta.fin[i];
    c[j + 1] = g + eta.k * static_cast<long>(data.comarks()[j]);
  }
  return c;
}

} // namespace affdem
