#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "affdem/demazure.hpp"
#include "affdem/grid.hpp"
#include "affdem/polytope.hpp"
#include "fixtures.hpp"
#include "support.hpp"

using namespace affdem;
using namespace testing_support;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Check {
 public:
  void expect(bool ok, const std::string& what)
  {
    ++total_;
    if (!ok) {
      ++failed_;
      if (first_.empty())
        first_ = what;
    }
  }
  Outcome outcome(const std::string& summary) const
  {
    std::ostringstream os;
    os << summary << " [" << (total_ - failed_) << "/" << total_ << "]";
    if (failed_)
      os << " first failure: " << first_;
    return {failed_ == 0, os.str()};
  }

 private:
  std::size_t total_ = 0;
  std::size_t failed_ = 0;
  std::string first_;
};

std::set<fixtures::Edge> arrows_as_edges(const OrderKind& kind, const std::vector<WeylElt>& elems)
{
  std::set<fixtures::Edge> out;
  for (const auto& a : hasse_arrows(kind, elems))
    out.insert({fixtures::hasse_elements()[a.from].word, fixtures::hasse_elements()[a.to].word});
  return out;
}

Outcome hasse_fixtures()
{
  Check c;
  auto d = root_system("A2");
  std::vector<WeylElt> elems;
  for (const auto& e : fixtures::hasse_elements()) {
    WeylElt u = elt(d, e.word);
    elems.push_back(u);
    c.expect(u.length() == e.standard_length, std::string("standard length of ") + e.word);
    c.expect(semi_infinite_length(u) == e.semi_length, std::string("semi-infinite length of ") + e.word);
  }
  c.expect(arrows_as_edges(OrderKind::standard(), elems) == fixtures::standard_arrows(), "standard arrows");
  c.expect(arrows_as_edges(OrderKind::semi_infinite(), elems) == fixtures::semi_infinite_arrows(),
           "semi-infinite arrows");
  for (const auto& [from, to] : fixtures::standard_arrows()) {
    WeylElt x = elt(d, from.c_str());
    auto beta = reflection_root(elt(d, to.c_str()) * x.inverse());
    c.expect(beta && is_cover(OrderKind::standard(), x, *beta), "standard cover " + from + " -> " + to);
  }
  for (const auto& [from, to] : fixtures::semi_infinite_arrows()) {
    WeylElt x = elt(d, from.c_str());
    auto beta = reflection_root(elt(d, to.c_str()) * x.inverse());
    c.expect(beta && is_cover(OrderKind::semi_infinite(), x, *beta), "semi-infinite cover " + from + " -> " + to);
  }
  return c.outcome("ten elements, 12 standard and 10 semi-infinite arrows");
}

Outcome diamond_fixture()
{
  Check c;
  auto d = root_system("A2");
  std::vector<WeylElt> elems{elt(d, "2,1,0"), elt(d, "1,0"), elt(d, "2,0"), elt(d, "0")};
  std::set<std::tuple<std::string, std::string, IntVector>> got;
  for (const auto& a : hasse_arrows(OrderKind::semi_infinite(), elems)) {
    c.expect(a.beta.k == 0, "finite label");
    got.insert({word_of(elems[a.from]), word_of(elems[a.to]), a.beta.alpha});
  }
  std::set<std::tuple<std::string, std::string, IntVector>> expect;
  for (const auto& [from, to, label] : fixtures::diamond_edges())
    expect.insert({from, to, IntVector(label.begin(), label.end())});
  c.expect(got == expect, "diamond edges and labels");
  WeylElt s2 = WeylElt::simple(d, 2);
  c.expect(s2 * elt(d, "1,0") == elt(d, "2,1,0") && s2 * elt(d, "0") == elt(d, "2,0"), "s2 translates the diamond");
  c.expect(diamond_check(OrderKind::semi_infinite(), elt(d, "1,0"), elt(d, "0"), 2), "diamond lemma clauses");
  return c.outcome("four edges with labels a2, a1, a1+a2, a2");
}

Outcome identities()
{
  Check c;
  auto d = root_system("A2");
  WeylElt rhs = WeylElt::simple(d, 1) * WeylElt::translation(d, {-1, -1});
  c.expect(elt(d, "2,1,0") == rhs, "s2 s1 s0 = s1 t(-a1v-a2v)");
  c.expect(word_of(rhs) == "2,1,0", "canonical word of s1 t(-a1v-a2v)");
  int types = 0;
  for (const char* tag : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "D5", "E6", "E7", "E8",
                          "F4", "G2"}) {
    auto t = root_system(tag);
    AffineRoot theta{t->highest_root(), 0};
    IntVector minus_theta_vee(t->comarks().size());
    for (std::size_t k = 0; k < minus_theta_vee.size(); ++k)
      minus_theta_vee[k] = -t->comarks()[k];
    WeylElt s0 = WeylElt::reflection(t, theta) * WeylElt::translation(t, minus_theta_vee);
    c.expect(WeylElt::simple(t, 0) == s0, std::string("s0 = s_theta t(-theta^vee) in ") + tag);
    ++types;
  }
  return c.outcome("A2 identity and s0 in " + std::to_string(types) + " types");
}

Outcome a3_example()
{
  Check c;
  auto d = root_system("A3");
  Coweight eta = -(fundamental_affine_coweight(*d, 1) + fundamental_affine_coweight(*d, 3));
  EtaContext ctx(d, eta);
  c.expect(ctx.vanishing() == std::vector<int>{0, 2}, "J = {0, 2}");
  c.expect(ctx.generator_roots() == std::vector<AffineRoot>{simple_affine_root(*d, 0), simple_affine_root(*d, 2)},
           "W(eta) = <s0, s2>");
  WeylElt w = elt(d, "0,3,2,1,2,0");
  c.expect(demazure_product(OrderKind::opposite(), w.inverse(), WeylElt(d)).product.is_identity(),
           "w^-1 *_- e = e");
  std::vector<WeylElt> expect{WeylElt(d), elt(d, "0"), elt(d, "2"), elt(d, "0,2")};
  sort_canonically(expect);
  std::vector<WeylElt> inter;
  for (const auto& x : interval_standard(w.inverse()))
    if (ctx.in_group(x))
      inter.push_back(x);
  sort_canonically(inter);
  c.expect(inter == expect, "W(eta) cap [e, w^-1] = [e, s0 s2]");
  c.expect(ctx.interval(elt(d, "0,2")) == expect, "[e, s0 s2] in W(eta)");
  Weight regular = zero_weight(*d);
  for (int i = 0; i <= 3; ++i)
    regular = regular + fundamental_weight(*d, i);
  for (const Weight& lambda : {regular, fundamental_weight(*d, 0)}) {
    DemazurePolytope poly(lambda, w);
    c.expect(check_task_farce(poly, ctx, WeylElt(d)), "task check");
  }
  return c.outcome("W(eta) = <s0,s2>, w^-1 *_- e = e, 4-element intersection");
}

Outcome demazure_well_defined()
{
  Check c;
  auto d = root_system("A2");
  std::mt19937_64 rng(2024);
  auto ws = ball(d, 4);
  auto vs = ball(d, 3);
  for (const auto& kind : {OrderKind::standard(), OrderKind::opposite(), OrderKind::semi_infinite()})
    for (const auto& w : ws)
      for (const auto& v : vs) {
        WeylElt rec = demazure_product(kind, w, v).product;
        c.expect(rec == brute_demazure_max(kind, w, v),
                 kind.name() + " " + word_of(w) + " * " + word_of(v) + " recursion vs brute maximum");
        for (int k = 0; k < 5; ++k)
          c.expect(demazure_product_word(kind, random_reduced_word(w, rng), v).product == rec,
                   kind.name() + " reduced-word independence for " + word_of(w));
      }
  return c.outcome("3 kinds x " + std::to_string(ws.size()) + " w x " + std::to_string(vs.size()) + " v");
}

Outcome length_identity()
{
  Check c;
  for (const char* tag : {"A2", "A3"}) {
    auto d = root_system(tag);
    auto elements = ball(d, 6);
    for (const auto& eta : default_grid_coweights(*d)) {
      EtaContext ctx(d, eta);
      OrderKind regular = ctx.regular_kind();
      for (const auto& w : elements) {
        Factorization f = ctx.factorize(w);
        c.expect(twisted_length(w, eta) == length(regular, f.rep) + ctx.group_length(f.sub),
                 std::string(tag) + " " + std::string(to_string(ctx.classification())) + " " + word_of(w));
      }
    }
  }
  return c.outcome("A2 and A3, all w of length <= 6, three classifications");
}

Outcome stabilizer_anomaly()
{
  Check c;
  auto d = root_system("A3");
  Coweight eta = finite_fundamental_coweight(*d, 1) + finite_fundamental_coweight(*d, 2);
  EtaContext ctx(d, eta);
  c.expect(ctx.vanishing() == std::vector<int>{3}, "J = {3}");
  WeylElt t = WeylElt::translation(d, {1, -1, 0});
  c.expect(stabilizer_membership(t, eta), "t stabilizes eta");
  c.expect(!ctx.in_group(t), "t not in (W_J)_af");
  return c.outcome("t(a1v-a2v) fixes wv1+wv2 and lies outside (W_J)_af");
}

Outcome face_grid()
{
  auto a2 = root_system("A2");
  auto a3 = root_system("A3");
  GridSummary s2 = run_face_grid(ball(a2, 5), default_grid_weights(*a2), default_grid_coweights(*a2), 3);
  GridSummary s3 = run_face_grid(random_grid_elements(a3, 20, 6, 20240601), default_grid_weights(*a3),
                                 default_grid_coweights(*a3), 3);
  std::ostringstream os;
  os << "A2 " << s2.cells << " cells, A3 " << s3.cells << " cells; faces "
     << s2.face_agree + s3.face_agree << ", task " << s2.task_farce + s3.task_farce << ", same coset "
     << s2.same_coset + s3.same_coset;
  for (const auto* s : {&s2, &s3})
    if (!s->failures.empty()) {
      const auto& f = s->failures.front();
      os << "; first failure w=" << f.w << " v=" << f.v << " eta=" << f.eta;
    }
  return {s2.all_pass() && s3.all_pass() && s2.cells > 0 && s3.cells > 0, os.str()};
}

Outcome classic_intersection()
{
  Check c;
  auto d = root_system("A2");
  std::vector<std::vector<int>> subsets{{}, {0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}};
  auto elements = ball(d, 7);
  for (const auto& w : elements)
    for (const auto& J : subsets)
      c.expect(check_classic_intersection(w, J), word_of(w));
  return c.outcome(std::to_string(elements.size()) + " elements x 7 subsets");
}

Outcome inequalities_suite()
{
  struct PolySpec {
    CartanPtr data;
    WeylElt w;
    Weight lambda;
  };
  std::vector<PolySpec> polys;
  auto a2 = root_system("A2");
  auto a3 = root_system("A3");
  for (const auto& w : ball(a2, 5))
    for (const auto& lambda : default_grid_weights(*a2))
      polys.push_back({a2, w, lambda});
  for (const auto& w : random_grid_elements(a3, 20, 6, 20240601))
    for (const auto& lambda : default_grid_weights(*a3))
      polys.push_back({a3, w, lambda});

  std::mt19937_64 rng(99);
  std::size_t vertex_checks = 0;
  std::size_t unsound = 0;
  std::size_t samples = 0;
  std::size_t explained = 0;
  std::string logged;
  for (const auto& p : polys) {
    DemazurePolytope poly(p.lambda, p.w);
    InequalitySystem sys = inequalities(poly, 6);
    for (const auto& mu : poly.vertices())
      for (const auto& ineq : sys.inequalities) {
        ++vertex_checks;
        if (!ineq.satisfied_by(*p.data, mu))
          ++unsound;
      }
    int found = 0;
    for (int attempt = 0; found < 50 && attempt < 5000; ++attempt) {
      Weight mu = poly.vertices()[rng() % poly.vertices().size()];
      for (auto& x : mu.fin)
        x += random_rational(rng, 2);
      mu.delta += random_rational(rng, 2);
      if (poly.contains(mu))
        continue;
      ++found;
      ++samples;
      if (!satisfies(*p.data, sys, mu))
        ++explained;
      else if (logged.size() < 200)
        logged += " unexplained sample in " + p.data->tag().name() + " w=" + word_of(p.w) + ";";
    }
  }
  std::ostringstream os;
  os << polys.size() << " polytopes, " << vertex_checks << " vertex checks (" << unsound << " violations), "
     << explained << "/" << samples << " rejected samples explained at L <= 6" << logged;
  return {unsound == 0 && explained * 100 >= samples * 95, os.str()};
}

Outcome diamond_suite()
{
  Check c;
  std::mt19937_64 rng(7);
  auto d = root_system("A2");
  for (const auto& kind : {OrderKind::standard(), OrderKind::opposite(), OrderKind::semi_infinite()}) {
    int done = 0;
    while (done < 500) {
      WeylElt w = random_element(d, rng, 7);
      WeylElt v = w;
      int steps = 1 + static_cast<int>(rng() % 3);
      for (int k = 0; k < steps; ++k) {
        std::vector<WeylElt> ups;
        if (kind.tag() == OrderKind::Tag::semi_infinite) {
          for (const auto& cov : semi_infinite_covers(v))
            ups.push_back(cov.target);
        } else {
          for (const auto& pos : d->positive_roots())
            for (int kk = -8; kk <= 8; ++kk) {
              AffineRoot beta{pos, kk};
              if (!beta.is_positive())
                beta = -beta;
              if (is_cover(kind, v, beta))
                ups.push_back(WeylElt::reflection(d, beta) * v);
            }
        }
        if (ups.empty())
          break;
        v = ups[rng() % ups.size()];
      }
      if (v == w)
        continue;
      c.expect(diamond_check(kind, w, v, static_cast<int>(rng() % 3)), kind.name() + " diamond " + word_of(w));
      ++done;
    }
  }
  std::vector<OrderKind> kinds{OrderKind::standard(), OrderKind::opposite(), OrderKind::semi_infinite()};
  for (const auto& eta : default_grid_coweights(*d))
    kinds.push_back(OrderKind::twisted(*d, eta));
  for (const auto& kind : kinds)
    for (int k = 0; k < 500; ++k) {
      WeylElt u = random_element(d, rng, 10);
      int i = static_cast<int>(rng() % 3);
      std::int64_t delta = length(kind, WeylElt::simple(d, i) * u) - length(kind, u);
      c.expect(delta == 1 || delta == -1, kind.name() + " parity at " + word_of(u));
    }
  return c.outcome("500 diamonds per regular kind, 500 parity cases per kind");
}

} // namespace

int main()
{
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"Hasse fixtures", hasse_fixtures},
      {"diamond fixture", diamond_fixture},
      {"Weyl group identities", identities},
      {"A3 twisted example", a3_example},
      {"Demazure product well-definedness", demazure_well_defined},
      {"length identity", length_identity},
      {"stabilizer anomaly", stabilizer_anomaly},
      {"face theorem grid", face_grid},
      {"parabolic interval intersection", classic_intersection},
      {"inequality soundness and sampled completeness", inequalities_suite},
      {"diamond lemma property suite", diamond_suite},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %d %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
