#include <doctest.h>

#include <deque>
#include <random>
#include <unordered_set>

#include "support.hpp"

using namespace affdem;
using namespace testing_support;

namespace {

struct Expected {
  const char* tag;
  std::size_t roots;
};

const Expected kTypes[] = {
  {"A1", 1},  {"A2", 3},   {"A3", 6},   {"A4", 10}, {"A5", 15}, {"A6", 21}, {"B2", 4},
  {"B3", 9},  {"B4", 16},  {"B5", 25},  {"C2", 4},  {"C3", 9},  {"C4", 16}, {"C5", 25},
  {"D4", 12}, {"D5", 20},  {"D6", 30},  {"E6", 36}, {"E7", 63}, {"E8", 120}, {"F4", 24},
  {"G2", 6},
};

// Order of the group generated by the simple reflections, by closure on matrices.
std::size_t finite_group_order(const CartanPtr& data)
{
  std::vector<WeylElt> gens;
  for (int i = 1; i <= data->rank(); ++i)
    gens.push_back(WeylElt::simple(data, i));
  WeylEltSet seen{WeylElt(data)};
  std::deque<WeylElt> queue{WeylElt(data)};
  while (!queue.empty()) {
    WeylElt u = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      WeylElt z = g * u;
      if (seen.insert(z).second)
        queue.push_back(z);
    }
  }
  return seen.size();
}

Rational form_value(const FiniteCartanData& d, const IntVector& x, const IntVector& y)
{
  Rational s = 0;
  for (int i = 0; i < d.rank(); ++i)
    for (int j = 0; j < d.rank(); ++j)
      s += d.root_form(i, j) * static_cast<long>(x[i] * y[j]);
  return s;
}

} // namespace

TEST_CASE("root counts and highest root")
{
  for (const auto& t : kTypes) {
    CAPTURE(t.tag);
    auto d = root_system(t.tag);
    CHECK(d->positive_roots().size() == t.roots);
    const IntVector& theta = d->highest_root();
    CHECK(form_value(*d, theta, theta) == 2);
    for (int i = 0; i < d->rank(); ++i) {
      CHECK(d->cartan(i, i) == 2);
      for (int j = 0; j < d->rank(); ++j)
        if (i != j)
          CHECK(d->cartan(i, j) <= 0);
      // <theta, omega_i^vee> = a_i
      Weight th = root_weight(*d, theta, 0);
      CHECK(pair(*d, th, finite_fundamental_coweight(*d, i + 1)) == theta[i]);
      // <rho, alpha_i^vee> = 1
      Rational r = 0;
      for (int j = 0; j < d->rank(); ++j)
        r += d->rho()[j] * static_cast<long>(d->cartan(i, j));
      CHECK(r == 1);
    }
  }
}

TEST_CASE("small examples")
{
  auto a1 = root_system("A1");
  CHECK(a1->positive_roots().size() == 1);
  CHECK(a1->highest_root() == IntVector{1});
  CHECK(a1->marks() == IntVector{1});

  auto a2 = root_system("A2");
  CHECK(a2->positive_roots() == std::vector<IntVector>{{1, 0}, {0, 1}, {1, 1}});
  CHECK(a2->highest_root() == IntVector{1, 1});

  auto g2 = root_system("G2");
  CHECK(g2->highest_root() == IntVector{3, 2});
  CHECK(g2->comarks() == IntVector{1, 2});
  CHECK(g2->length_scale(0) == 1);
  CHECK(g2->length_scale(1) == 3);

  auto b3 = root_system("B3");
  CHECK(b3->highest_root() == IntVector{1, 2, 2});
  CHECK(b3->comarks() == IntVector{1, 2, 1});
  auto c3 = root_system("C3");
  CHECK(c3->highest_root() == IntVector{2, 2, 1});
  auto f4 = root_system("F4");
  CHECK(f4->highest_root() == IntVector{2, 3, 4, 2});
  auto e8 = root_system("E8");
  CHECK(e8->highest_root() == IntVector{2, 3, 4, 6, 5, 4, 3, 2});
}

TEST_CASE("Weyl group orders")
{
  for (const char* tag : {"A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "D5",
                          "F4", "G2", "E6"}) {
    CAPTURE(tag);
    auto d = root_system(tag);
    CHECK(finite_group_order(d) == d->finite_weyl_order());
  }
  CHECK(root_system("E7")->finite_weyl_order() == 2903040);
  CHECK(root_system("E8")->finite_weyl_order() == 696729600);
}

TEST_CASE("invariant form under finite reflections")
{
  std::mt19937_64 rng(7);
  for (const char* tag : {"A3", "B3", "C3", "D4", "G2", "F4"}) {
    CAPTURE(tag);
    auto d = root_system(tag);
    std::uniform_int_distribution<int> coord(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
      WeylElt u = random_element(d, rng, 8).finite_part();
      IntVector x(static_cast<std::size_t>(d->rank())), y(x.size());
      for (auto& c : x)
        c = coord(rng);
      for (auto& c : y)
        c = coord(rng);
      CHECK(form_value(*d, u.finite_root_image(x), u.finite_root_image(y)) == form_value(*d, x, y));
    }
  }
}

TEST_CASE("pairings of distinguished elements")
{
  auto d = root_system("A3");
  CHECK(pair(*d, fundamental_weight(*d, 0), central_coweight(*d)) == 1);
  CHECK(pair(*d, null_root(*d), degree_coweight(*d)) == 1);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      CHECK(pair(*d, simple_root_weight(*d, i), finite_fundamental_coweight(*d, j)) == (i == j ? 1 : 0));
  for (const char* tag : {"A2", "B3", "C2", "G2", "F4", "E6"}) {
    auto c = root_system(tag);
    for (int i = 0; i <= c->rank(); ++i) {
      Coweight lv = fundamental_affine_coweight(*c, i);
      CHECK(lv.k == 0);
      for (int j = 0; j <= c->rank(); ++j) {
        CHECK(simple_root_value(*c, lv, j) == (i == j ? 1 : 0));
        CHECK(pair(*c, simple_root_weight(*c, j), lv) == (i == j ? 1 : 0));
        CHECK(pair(*c, fundamental_weight(*c, i), simple_coroot(*c, j)) == (i == j ? 1 : 0));
      }
    }
  }
  auto a2 = root_system("A2");
  Coweight l1 = fundamental_affine_coweight(*a2, 1);
  CHECK(l1.fin == RationalVector{1, 0});
  CHECK(l1.d == 1);
  Coweight l0 = fundamental_affine_coweight(*a2, 0);
  CHECK(l0.fin == RationalVector{0, 0});
  CHECK(l0.d == 1);
}

TEST_CASE("bilinearity of the pairing")
{
  std::mt19937_64 rng(11);
  auto d = root_system("B3");
  for (int trial = 0; trial < 50; ++trial) {
    Weight a = random_weight(*d, rng), b = random_weight(*d, rng);
    Coweight x = random_coweight(*d, rng), y = random_coweight(*d, rng);
    Rational c = random_rational(rng);
    CHECK(pair(*d, a + b.scaled(c), x) == pair(*d, a, x) + c * pair(*d, b, x));
    CHECK(pair(*d, a, x + y.scaled(c)) == pair(*d, a, x) + c * pair(*d, a, y));
    CHECK(pair(*d, a, central_coweight(*d)) == a.level);
    CHECK(pair(*d, a, degree_coweight(*d)) == a.delta);
  }
}

TEST_CASE("classification and dominance")
{
  auto d = root_system("A2");
  CHECK(classify(fundamental_affine_coweight(*d, 1)) == CoweightClass::positive);
  CHECK(classify(-fundamental_affine_coweight(*d, 1)) == CoweightClass::negative);
  CHECK(classify(finite_fundamental_coweight(*d, 1)) == CoweightClass::level_zero);
  CHECK(is_dominant_integral(*d, fundamental_weight(*d, 0)));
  CHECK(!is_dominant_integral(*d, finite_fundamental_weight(*d, 1)));
  CHECK(!is_dominant_integral(*d, fundamental_weight(*d, 0) - fundamental_weight(*d, 1).scaled(2)));
}

TEST_CASE("rejections")
{
  CHECK_THROWS_AS(FiniteCartanData::build('D', 3), std::invalid_argument);
  CHECK_THROWS_AS(FiniteCartanData::build('E', 9), std::invalid_argument);
  CHECK_THROWS_AS(FiniteCartanData::build('H', 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_root_system_tag("B1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_root_system_tag("A"), std::invalid_argument);
  CHECK(parse_root_system_tag("A2affine").name() == "A2");
  auto a2 = root_system("A2");
  auto a3 = root_system("A3");
  CHECK_THROWS_AS(pair(*a2, fundamental_weight(*a2, 0), central_coweight(*a3)), std::invalid_argument);
  CHECK_THROWS(fundamental_affine_coweight(*a2, 3));
  CHECK_THROWS_AS(affine_coroot_coordinates(*a2, degree_coweight(*a2)), std::domain_error);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK(parse_rational(" -6/4 ") == Rational(-3, 2));
  CHECK(to_string(Rational(-3, 2)) == "-3/2");
}
