#include "affdem/polytope.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "affdem/simplex.hpp"

namespace affdem {

namespace {

RationalVector coordinates(const Weight& mu)
{
  RationalVector out = mu.fin;
  out.push_back(mu.level);
  out.push_back(mu.delta);
  return out;
}

bool same_elements(std::vector<WeylElt> a, std::vector<WeylElt> b)
{
  if (a.size() != b.size())
    return false;
  WeylEltSet sa(a.begin(), a.end());
  for (const auto& x : b)
    if (!sa.count(x))
      return false;
  return true;
}

} // namespace

DemazurePolytope::DemazurePolytope(Weight lambda, const WeylElt& w)
    : lambda_(std::move(lambda)), requested_(w)
{
  require_same_system(w.data()->tag(), lambda_.system);
  w_ = max_length_rep(w, lambda_);
  interval_ = interval_standard(w_);
  std::map<Weight, std::vector<WeylElt>> by_vertex;
  for (const auto& q : interval_)
    by_vertex[q.act(lambda_)].push_back(q);
  for (auto& [mu, qs] : by_vertex) {
    vertices_.push_back(mu);
    witnesses_.push_back(std::move(qs));
  }
}

bool DemazurePolytope::is_vertex(const Weight& mu) const
{
  return std::binary_search(vertices_.begin(), vertices_.end(), mu);
}

bool DemazurePolytope::contains(const Weight& mu) const
{
  require_same_system(mu.system, lambda_.system);
  RationalVector target = coordinates(mu);
  const std::size_t rows = target.size() + 1;
  std::vector<RationalVector> A(rows, RationalVector(vertices_.size()));
  for (std::size_t k = 0; k < vertices_.size(); ++k) {
    RationalVector c = coordinates(vertices_[k]);
    for (std::size_t r = 0; r < c.size(); ++r)
      A[r][k] = c[r];
    A[rows - 1][k] = 1;
  }
  target.push_back(Rational(1));
  return solve_feasibility(A, target).feasible;
}

std::string_view to_string(Family f)
{
  switch (f) {
  case Family::positive:
    return "positive";
  case Family::negative:
    return "negative";
  default:
    return "level_zero";
  }
}

OrderKind family_kind(Family f)
{
  switch (f) {
  case Family::positive:
    return OrderKind::standard();
  case Family::negative:
    return OrderKind::opposite();
  default:
    return OrderKind::semi_infinite();
  }
}

Coweight family_coweight(const FiniteCartanData& data, Family f, int i)
{
  switch (f) {
  case Family::positive:
    return fundamental_affine_coweight(data, i);
  case Family::negative:
    return -fundamental_affine_coweight(data, i);
  default:
    return finite_fundamental_coweight(data, i);
  }
}

Rational Inequality::slack(const FiniteCartanData& data, const Weight& mu) const
{
  return pair(data, mu, normal) - rhs;
}

bool Inequality::satisfied_by(const FiniteCartanData& data, const Weight& mu) const
{
  return slack(data, mu) >= 0;
}

Inequality make_inequality(const DemazurePolytope& poly, const OrderKind& kind, const Coweight& eta,
                           const WeylElt& v)
{
  WeylElt p = demazure_product(kind, poly.w().inverse(), v).product;
  Family f = kind.tag() == OrderKind::Tag::standard   ? Family::positive
             : kind.tag() == OrderKind::Tag::opposite ? Family::negative
                                                      : Family::level_zero;
  return Inequality{f, -1, v, v.act(eta), pair(*poly.data(), poly.lambda(), p.act(eta))};
}

InequalitySystem inequalities(const DemazurePolytope& poly, int max_length)
{
  if (max_length < 0)
    throw std::invalid_argument("length bound must be nonnegative");
  const CartanPtr& data = poly.data();
  std::vector<WeylElt> candidates = ball(data, max_length);
  InequalitySystem out{poly.lambda().level, {}};
  for (Family f : {Family::positive, Family::negative, Family::level_zero}) {
    OrderKind kind = family_kind(f);
    for (int i = f == Family::level_zero ? 1 : 0; i <= data->rank(); ++i) {
      Coweight eta = family_coweight(*data, f, i);
      EtaContext ctx(data, eta);
      for (const auto& v : candidates) {
        if (!ctx.is_coset_rep(v))
          continue;
        Inequality ineq = make_inequality(poly, kind, eta, v);
        ineq.i = i;
        out.inequalities.push_back(std::move(ineq));
      }
    }
  }
  return out;
}

bool satisfies(const FiniteCartanData& data, const InequalitySystem& system, const Weight& mu)
{
  if (mu.level != system.level)
    return false;
  for (const auto& ineq : system.inequalities)
    if (!ineq.satisfied_by(data, mu))
      return false;
  return true;
}

Face face_vertices(const DemazurePolytope& poly, const EtaContext& ctx, const WeylElt& v)
{
  if (!ctx.is_coset_rep(v))
    throw std::invalid_argument("v is not a coset representative for eta");
  WeylElt winv = poly.w().inverse();
  Face face;
  face.v = v;
  face.normal = v.act(ctx.eta());
  face.regular_product = demazure_product(ctx.regular_kind(), winv, v).product;
  face.twisted_product = demazure_product(ctx.twisted_kind(), winv, v).product;
  face.rhs = pair(*poly.data(), poly.lambda(), face.regular_product.act(ctx.eta()));
  face.rep = ctx.factorize(face.regular_product).rep;
  Factorization tw = ctx.factorize(face.twisted_product);
  face.top = tw.sub;
  face.same_coset = tw.rep == face.rep;
  WeylElt rep_inv = face.rep.inverse();
  for (const auto& y : ctx.interval(face.top)) {
    WeylElt q = v * y.inverse() * rep_inv;
    Weight mu = q.act(poly.lambda());
    face.vertices.push_back(FaceVertex{std::move(q), std::move(mu)});
  }
  return face;
}

std::vector<FaceVertex> face_vertices_brute(const DemazurePolytope& poly, const EtaContext& ctx,
                                            const WeylElt& v)
{
  WeylElt p = demazure_product(ctx.regular_kind(), poly.w().inverse(), v).product;
  const auto& data = *poly.data();
  Rational rhs = pair(data, poly.lambda(), p.act(ctx.eta()));
  Coweight normal = v.act(ctx.eta());
  std::vector<FaceVertex> out;
  for (const auto& q : poly.interval()) {
    Weight mu = q.act(poly.lambda());
    if (pair(data, mu, normal) == rhs)
      out.push_back(FaceVertex{q, std::move(mu)});
  }
  return out;
}

std::vector<Weight> distinct_weights(const std::vector<FaceVertex>& vertices)
{
  std::vector<Weight> out;
  for (const auto& fv : vertices)
    out.push_back(fv.vertex);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<WeylElt> task_intersection(const DemazurePolytope& poly, const EtaContext& ctx, const WeylElt& v)
{
  WeylElt winv = poly.w().inverse();
  WeylElt rep = ctx.factorize(demazure_product(ctx.regular_kind(), winv, v).product).rep;
  WeylElt rep_inv = rep.inverse();
  std::vector<WeylElt> out;
  for (const auto& x : interval_standard(winv)) {
    WeylElt g = rep_inv * x * v;
    if (ctx.in_group(g))
      out.push_back(std::move(g));
  }
  sort_canonically(out);
  return out;
}

bool check_task_farce(const DemazurePolytope& poly, const EtaContext& ctx, const WeylElt& v)
{
  WeylElt twisted = demazure_product(ctx.twisted_kind(), poly.w().inverse(), v).product;
  return same_elements(task_intersection(poly, ctx, v), ctx.interval(ctx.factorize(twisted).sub));
}

WeylElt parabolic_demazure_part(const CartanPtr& data, std::span<const int> reduced_word,
                                const std::vector<int>& J)
{
  std::vector<int> letters;
  for (int i : reduced_word)
    if (std::find(J.begin(), J.end(), i) != J.end())
      letters.push_back(i);
  return demazure_product_word(OrderKind::standard(), letters, WeylElt(data)).product;
}

bool check_classic_intersection(const WeylElt& w, std::span<const int> reduced_word, const std::vector<int>& J)
{
  const CartanPtr& data = w.data();
  if (static_cast<int>(J.size()) > data->rank())
    throw std::invalid_argument("W_J must be finite");
  for (int j : J)
    if (j < 0 || j > data->rank())
      throw std::invalid_argument("node out of range");
  if (WeylElt::from_word(data, reduced_word) != w || static_cast<std::int64_t>(reduced_word.size()) != w.length())
    throw std::invalid_argument("not a reduced word of w");
  std::vector<WeylElt> brute;
  for (const auto& x : interval_standard(w)) {
    bool inside = true;
    for (int letter : x.canonical_word())
      inside = inside && std::find(J.begin(), J.end(), letter) != J.end();
    if (inside)
      brute.push_back(x);
  }
  return same_elements(std::move(brute), interval_standard(parabolic_demazure_part(data, reduced_word, J)));
}

bool check_classic_intersection(const WeylElt& w, const std::vector<int>& J)
{
  return check_classic_intersection(w, w.canonical_word(), J);
}

} // namespace affdem
