#include <doctest.h>

#include <map>
#include <random>

#include "affdem/parabolic.hpp"
#include "support.hpp"

using namespace affdem;
using namespace testing_support;

namespace {

struct GridEta {
  const char* type;
  Coweight eta;
  std::vector<int> J;
};

std::vector<GridEta> grid(const CartanPtr& a2, const CartanPtr& a3)
{
  auto L = [](const CartanPtr& d, int i) { return fundamental_affine_coweight(*d, i); };
  auto w = [](const CartanPtr& d, int i) { return finite_fundamental_coweight(*d, i); };
  return {
      {"A2", L(a2, 0) + L(a2, 1), {2}},
      {"A2", -(L(a2, 1) + L(a2, 2)), {0}},
      {"A2", w(a2, 1), {2}},
      {"A3", L(a3, 0) + L(a3, 2), {1, 3}},
      {"A3", -(L(a3, 1) + L(a3, 3)), {0, 2}},
      {"A3", w(a3, 1) + w(a3, 2), {3}},
  };
}

WeylElt random_in_group(const EtaContext& ctx, std::mt19937_64& rng, int max_letters)
{
  auto gens = ctx.generators();
  WeylElt u(ctx.data());
  if (gens.empty())
    return u;
  int n = static_cast<int>(rng() % static_cast<std::uint64_t>(max_letters + 1));
  for (int k = 0; k < n; ++k)
    u = u * gens[rng() % gens.size()];
  return u;
}

// Breadth-first distances and shortest generator words in the Cayley graph of W(eta).
struct CayleyBall {
  std::vector<WeylElt> elements;
  std::vector<std::vector<int>> words;
  std::map<std::size_t, std::vector<std::size_t>> by_hash;

  const std::vector<int>* find(const WeylElt& u) const
  {
    auto it = by_hash.find(u.hash());
    if (it == by_hash.end())
      return nullptr;
    for (std::size_t k : it->second)
      if (elements[k] == u)
        return &words[k];
    return nullptr;
  }
};

CayleyBall cayley_ball(const EtaContext& ctx, int radius)
{
  auto gens = ctx.generators();
  CayleyBall b;
  b.elements.push_back(WeylElt(ctx.data()));
  b.words.push_back({});
  b.by_hash[b.elements[0].hash()].push_back(0);
  for (std::size_t head = 0; head < b.elements.size(); ++head) {
    if (static_cast<int>(b.words[head].size()) == radius)
      continue;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      WeylElt y = b.elements[head] * gens[g];
      if (b.find(y))
        continue;
      std::vector<int> word = b.words[head];
      word.push_back(static_cast<int>(g));
      b.by_hash[y.hash()].push_back(b.elements.size());
      b.elements.push_back(std::move(y));
      b.words.push_back(std::move(word));
    }
  }
  return b;
}

// Positive roots of Phi^+_eta up to a degree bound.
std::vector<AffineRoot> eta_roots(const EtaContext& ctx, int max_degree)
{
  std::vector<AffineRoot> out;
  const auto& d = *ctx.data();
  for (std::int64_t k = 0; k <= max_degree; ++k)
    for (const auto& alpha : d.positive_roots())
      for (int sign : {1, -1}) {
        IntVector a = alpha;
        for (auto& c : a)
          c *= sign;
        AffineRoot beta{a, k};
        if (ctx.in_positive_roots(beta))
          out.push_back(beta);
      }
  return out;
}

} // namespace

TEST_CASE("classification, vanishing sets and generators")
{
  auto a2 = root_system("A2");
  auto a3 = root_system("A3");
  for (const auto& g : grid(a2, a3)) {
    auto d = g.type[1] == '2' ? a2 : a3;
    EtaContext ctx(d, g.eta);
    CHECK(ctx.vanishing() == g.J);
    for (const auto& s : ctx.generators()) {
      CHECK(stabilizer_membership(s, g.eta));
      CHECK(ctx.group_length(s) == 1);
      CHECK(ctx.in_group(s));
    }
  }

  EtaContext neg(a3, -(fundamental_affine_coweight(*a3, 1) + fundamental_affine_coweight(*a3, 3)));
  CHECK(neg.classification() == CoweightClass::negative);
  CHECK(neg.generator_roots() == std::vector<AffineRoot>{simple_affine_root(*a3, 0), simple_affine_root(*a3, 2)});

  EtaContext lz(a3, finite_fundamental_coweight(*a3, 1) + finite_fundamental_coweight(*a3, 2));
  CHECK(lz.classification() == CoweightClass::level_zero);
  REQUIRE(lz.generator_roots().size() == 2);
  CHECK(lz.generator_roots()[0] == AffineRoot{{0, 0, 1}, 0});
  CHECK(lz.generator_roots()[1] == AffineRoot{{0, 0, -1}, 1});
  CHECK(lz.component_highest_roots() == std::vector<IntVector>{{0, 0, 1}});

  Coweight regular = fundamental_affine_coweight(*a3, 0) + fundamental_affine_coweight(*a3, 1) +
                     fundamental_affine_coweight(*a3, 2) + fundamental_affine_coweight(*a3, 3);
  EtaContext reg(a3, regular);
  CHECK(reg.vanishing().empty());
  CHECK(reg.generators().empty());

  // Level-zero components with a nontrivial highest root.
  EtaContext b(a3, finite_fundamental_coweight(*a3, 3));
  CHECK(b.vanishing() == std::vector<int>{1, 2});
  CHECK(b.component_highest_roots() == std::vector<IntVector>{{1, 1, 0}});
  auto g2 = root_system("G2");
  EtaContext zero(g2, central_coweight(*g2));
  CHECK(zero.component_highest_roots() == std::vector<IntVector>{g2->highest_root()});
}

TEST_CASE("rejections")
{
  auto a2 = root_system("A2");
  CHECK_THROWS_AS(EtaContext(a2, -fundamental_affine_coweight(*a2, 0) + fundamental_affine_coweight(*a2, 1) -
                                       fundamental_affine_coweight(*a2, 2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(EtaContext(a2, -finite_fundamental_coweight(*a2, 1)), std::invalid_argument);
  EtaContext ctx(a2, finite_fundamental_coweight(*a2, 1));
  CHECK_THROWS_AS(ctx.interval(elt(a2, "1")), std::invalid_argument);
  Weight level_zero = finite_fundamental_weight(*a2, 1);
  CHECK_THROWS_AS(max_length_rep(elt(a2, "1"), level_zero), std::invalid_argument);
}

TEST_CASE("canonical generators are exactly the length-one reflections")
{
  auto a2 = root_system("A2");
  auto a3 = root_system("A3");
  for (const auto& g : grid(a2, a3)) {
    auto d = g.type[1] == '2' ? a2 : a3;
    EtaContext ctx(d, g.eta);
    int count = 0;
    for (const auto& beta : eta_roots(ctx, 3)) {
      WeylElt s = WeylElt::reflection(d, beta);
      CHECK(stabilizer_membership(s, g.eta));
      CHECK(ctx.in_group(s));
      if (ctx.group_length(s) == 1) {
        ++count;
        CHECK(std::find(ctx.generator_roots().begin(), ctx.generator_roots().end(), beta) !=
              ctx.generator_roots().end());
      }
    }
    CHECK(count == static_cast<int>(ctx.generator_roots().size()));
  }
}

TEST_CASE("group length equals the Cayley-graph distance")
{
  auto a2 = root_system("A2");
  auto a3 = root_system("A3");
  for (const auto& g : grid(a2, a3)) {
    auto d = g.type[1] == '2' ? a2 : a3;
    EtaContext ctx(d, g.eta);
    CayleyBall ball_ = cayley_ball(ctx, 5);
    for (std::size_t k = 0; k < ball_.elements.size(); ++k) {
      CHECK(ctx.group_length(ball_.elements[k]) == static_cast<std::int64_t>(ball_.words[k].size()));
      CHECK(ctx.in_group(ball_.elements[k]));
      CHECK(stabilizer_membership(ball_.elements[k], g.eta));
    }
  }
}

TEST_CASE("coset representatives agree with a bounded scan of Phi^+_eta")
{
  auto a2 = root_system("A2");
  auto a3 = root_system("A3");
  for (const auto& g : grid(a2, a3)) {
    auto d = g.type[1] == '2' ? a2 : a3;
    EtaContext ctx(d, g.eta);
    auto roots = eta_roots(ctx, 4);
    for (const auto& v : ball(d, g.type[1] == '2' ? 5 : 4)) {
      bool brute = true;
      for (const auto& beta : roots)
        brute = brute && v.act(beta).is_positive();
      CHECK(ctx.is_coset_rep(v) == brute);
    }
    CHECK(ctx.is_coset_rep(WeylElt(d)));
  }
  EtaContext neg(a3, -(fundamental_affine_coweight(*a3, 1) + fundamental_affine_coweight(*a3, 3)));
  CHECK_FALSE(neg.is_coset_rep(elt(a3, "0")));
}

TEST_CASE("factorization and its uniqueness")
{
  auto a2 = root_system("A2");
  auto a3 = root_system("A3");
  std::mt19937_64 rng(7);
  for (const auto& g : grid(a2, a3)) {
    auto d = g.type[1] == '2' ? a2 : a3;
    EtaContext ctx(d, g.eta);
    auto gens = ctx.generators();
    for (int trial = 0; trial < 50; ++trial) {
      WeylElt w = random_element(d, rng, 8);
      Factorization f = ctx.factorize(w);
      CHECK(f.rep * f.sub == w);
      CHECK(ctx.is_coset_rep(f.rep));
      CHECK(ctx.in_group(f.sub));
      for (const auto& s : gens)
        CHECK_FALSE(ctx.is_coset_rep(f.rep * s));
      WeylElt y = random_in_group(ctx, rng, 6);
      Factorization f2 = ctx.factorize(f.rep * y);
      CHECK(f2.rep == f.rep);
      CHECK(f2.sub == y);
      Factorization f3 = ctx.factorize(y);
      CHECK(f3.rep.is_identity());
      CHECK(f3.sub == y);
      Factorization f4 = ctx.factorize(f.rep);
      CHECK(f4.rep == f.rep);
      CHECK(f4.sub.is_identity());
    }
  }
}

TEST_CASE("length identification")
{
  auto a2 = root_system("A2");
  auto a3 = root_system("A3");
  for (const auto& g : grid(a2, a3)) {
    auto d = g.type[1] == '2' ? a2 : a3;
    EtaContext ctx(d, g.eta);
    OrderKind regular = ctx.regular_kind();
    for (const auto& w : ball(d, g.type[1] == '2' ? 6 : 5)) {
      Factorization f = ctx.factorize(w);
      CHECK(twisted_length(w, g.eta) == length(regular, f.rep) + ctx.group_length(f.sub));
    }
  }
}

TEST_CASE("projection to coset representatives preserves the standard order")
{
  auto a2 = root_system("A2");
  auto a3 = root_system("A3");
  for (const auto& g : grid(a2, a3)) {
    if (classify(g.eta) != CoweightClass::positive)
      continue;
    auto d = g.type[1] == '2' ? a2 : a3;
    EtaContext ctx(d, g.eta);
    auto elements = ball(d, 4);
    for (const auto& u : elements)
      for (const auto& w : elements)
        if (leq_standard(u, w))
          CHECK(leq_standard(ctx.factorize(u).rep, ctx.factorize(w).rep));
  }
}

TEST_CASE("stabilizer anomaly and stabilizer decomposition")
{
  auto a3 = root_system("A3");
  Coweight eta = finite_fundamental_coweight(*a3, 1) + finite_fundamental_coweight(*a3, 2);
  EtaContext ctx(a3, eta);
  WeylElt t = WeylElt::translation(a3, {1, -1, 0});
  CHECK(stabilizer_membership(t, eta));
  CHECK_FALSE(ctx.in_group(t));
  CHECK(ctx.in_group(elt(a3, "3")));
  CHECK(stabilizer_membership(elt(a3, "3"), eta));

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    WeylElt u = random_in_group(ctx, rng, 6);
    int shifts = static_cast<int>(rng() % 5) - 2;
    u = u * WeylElt::translation(a3, {shifts, -shifts, 0}) * random_in_group(ctx, rng, 4);
    REQUIRE(stabilizer_membership(u, eta));
    for (int letter : u.finite_part().canonical_word())
      CHECK(letter == 3);
    CHECK(stabilizer_membership(u.translation_part(), eta));
    CHECK(ctx.in_group(u) == (shifts == 0));
    CHECK(ctx.in_group(u) == (u.xi()[0] == 0 && u.xi()[1] == 0));
  }
}

TEST_CASE("intervals in W(eta)")
{
  auto a1 = root_system("A1");
  EtaContext full(a1, central_coweight(*a1));
  CHECK(full.vanishing() == std::vector<int>{1});
  auto full_gens = full.generators();
  CHECK(full.interval(full_gens[0] * full_gens[1]).size() == 4);
  CHECK(full.interval(WeylElt(a1)).size() == 1);

  auto a3 = root_system("A3");
  EtaContext neg(a3, -(fundamental_affine_coweight(*a3, 1) + fundamental_affine_coweight(*a3, 3)));
  auto iv = neg.interval(elt(a3, "0,2"));
  std::vector<WeylElt> expected{WeylElt(a3), elt(a3, "0"), elt(a3, "2"), elt(a3, "0,2")};
  sort_canonically(expected);
  CHECK(iv == expected);

  auto a2 = root_system("A2");
  std::mt19937_64 rng(5);
  for (const auto& g : grid(a2, a3)) {
    auto d = g.type[1] == '2' ? a2 : a3;
    EtaContext ctx(d, g.eta);
    CayleyBall b = cayley_ball(ctx, 4);
    auto gens = ctx.generators();
    for (int trial = 0; trial < 15; ++trial) {
      std::size_t k = rng() % b.elements.size();
      const WeylElt& x = b.elements[k];
      WeylEltSet expect;
      const auto& word = b.words[k];
      for (std::size_t mask = 0; mask < (std::size_t{1} << word.size()); ++mask) {
        WeylElt y(d);
        for (std::size_t p = 0; p < word.size(); ++p)
          if (mask & (std::size_t{1} << p))
            y = y * gens[static_cast<std::size_t>(word[p])];
        expect.insert(y);
      }
      auto got = ctx.interval(x);
      CHECK(got.size() == expect.size());
      for (const auto& y : got)
        CHECK(expect.count(y) == 1);
      if (classify(g.eta) != CoweightClass::level_zero) {
        std::size_t restricted = 0;
        for (const auto& y : interval_standard(x))
          restricted += ctx.in_group(y) ? 1 : 0;
        CHECK(restricted == got.size());
      }
    }
  }
}

TEST_CASE("dominantize")
{
  std::mt19937_64 rng(3);
  for (const char* tag : {"A2", "A3", "B2", "G2"}) {
    auto d = root_system(tag);
    for (int trial = 0; trial < 40; ++trial) {
      Coweight eta = random_coweight(*d, rng);
      if (trial % 3 == 0)
        eta.d = 0;
      Dominantized r = dominantize(d, eta);
      CHECK(is_appropriately_dominant(*d, r.eta));
      CHECK(r.conjugator.act(eta) == r.eta);
    }
  }
}

TEST_CASE("double cosets")
{
  auto a3 = root_system("A3");
  Coweight eta = finite_fundamental_coweight(*a3, 1) + finite_fundamental_coweight(*a3, 2);
  EtaContext ctx(a3, eta);
  Weight lambda = fundamental_weight(*a3, 0);
  auto stab = weight_stabilizer(a3, lambda);
  CHECK(stab.size() == 24);
  for (const auto& x : stab)
    CHECK(x.act(lambda) == lambda);

  std::mt19937_64 rng(13);
  WeylElt t = WeylElt::translation(a3, {1, -1, 0});
  for (int trial = 0; trial < 30; ++trial) {
    WeylElt w1 = random_element(a3, rng, 6);
    CHECK(double_coset_equal(lambda, ctx, w1, w1));
    WeylElt x = stab[rng() % stab.size()];
    WeylElt y = random_in_group(ctx, rng, 5);
    CHECK(double_coset_equal(lambda, ctx, w1, x * w1 * y));
    CHECK(double_coset_equal(lambda, ctx, w1, x * w1 * y * t, RightGroup::stabilizer));

    // W_lambda w1 W_eta = W_lambda w2 W_eta iff w2 eta lies in the W_lambda-orbit of w1 eta.
    WeylElt w2 = random_element(a3, rng, 6);
    bool orbit = false;
    for (const auto& z : stab)
      orbit = orbit || z.act(w1.act(eta)) == w2.act(eta);
    CHECK(double_coset_equal(lambda, ctx, w1, w2, RightGroup::stabilizer) == orbit);
  }

  int tested = 0;
  for (int trial = 0; trial < 400 && tested < 100; ++trial) {
    WeylElt w1 = random_element(a3, rng, 5);
    WeylElt w2 = trial % 2 == 0 ? stab[rng() % stab.size()] * w1 * random_in_group(ctx, rng, 3) * t
                                : random_element(a3, rng, 5);
    if (!leq_semi_infinite(w1, w2))
      continue;
    ++tested;
    if (double_coset_equal(lambda, ctx, w1, w2, RightGroup::stabilizer))
      CHECK(double_coset_equal(lambda, ctx, w1, w2, RightGroup::W_eta));
  }
  CHECK(tested > 20);
}

TEST_CASE("maximal-length coset representatives")
{
  auto a1 = root_system("A1");
  CHECK(max_length_rep(WeylElt(a1), fundamental_weight(*a1, 0)) == elt(a1, "1"));

  auto a2 = root_system("A2");
  std::mt19937_64 rng(17);
  Weight regular = fundamental_weight(*a2, 0) + fundamental_weight(*a2, 1) + fundamental_weight(*a2, 2);
  for (const Weight& lambda : {fundamental_weight(*a2, 0), fundamental_weight(*a2, 0) + fundamental_weight(*a2, 1),
                               regular}) {
    auto stab = weight_stabilizer(a2, lambda);
    for (int trial = 0; trial < 30; ++trial) {
      WeylElt w = random_element(a2, rng, 7);
      WeylElt r = max_length_rep(w, lambda);
      CHECK(r.act(lambda) == w.act(lambda));
      std::int64_t best = -1;
      int count = 0;
      for (const auto& x : stab) {
        std::int64_t l = (w * x).length();
        if (l > best) {
          best = l;
          count = 1;
        } else if (l == best) {
          ++count;
        }
      }
      CHECK(count == 1);
      CHECK(r.length() == best);
      if (lambda == regular)
        CHECK(r == w);
    }
  }
}
