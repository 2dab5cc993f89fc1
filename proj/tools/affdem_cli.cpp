#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "affdem/affdem.h"

namespace {

using Json = nlohmann::ordered_json;

const char* status_name(affdem_status s)
{
  switch (s) {
  case AFFDEM_OK:
    return "ok";
  case AFFDEM_INVALID_ARGUMENT:
    return "invalid_argument";
  case AFFDEM_DOMAIN:
    return "domain";
  case AFFDEM_PARSE:
    return "parse";
  case AFFDEM_INTERNAL:
    return "internal";
  }
  return "internal";
}

struct Failure {
  affdem_status status;
  std::string message;
};

void check(affdem_status s)
{
  if (s != AFFDEM_OK)
    throw Failure{s, affdem_last_error()};
}

void usage_error(const std::string& message)
{
  throw Failure{AFFDEM_INVALID_ARGUMENT, message};
}

std::string take(char* s)
{
  std::string out(s);
  affdem_string_free(s);
  return out;
}

using Group = std::unique_ptr<affdem_group, decltype(&affdem_group_free)>;
using Elt = std::unique_ptr<affdem_elt, decltype(&affdem_elt_free)>;
using Polytope = std::unique_ptr<affdem_polytope, decltype(&affdem_polytope_free)>;

Group make_group(const std::string& type)
{
  affdem_group* g = nullptr;
  check(affdem_group_create(type.c_str(), &g));
  return Group(g, affdem_group_free);
}

Elt make_elt(const affdem_group* g, const std::string& text)
{
  affdem_elt* e = nullptr;
  check(affdem_elt_parse(g, text.c_str(), &e));
  return Elt(e, affdem_elt_free);
}

Elt adopt(affdem_elt* e)
{
  return Elt(e, affdem_elt_free);
}

std::string word_of(const affdem_elt* e)
{
  char* s = nullptr;
  check(affdem_elt_word(e, &s));
  return take(s);
}

Json json_of(const affdem_elt* e)
{
  char* s = nullptr;
  check(affdem_elt_json(e, &s));
  return Json::parse(take(s));
}

const char* or_null(const std::string& s)
{
  return s.empty() ? nullptr : s.c_str();
}

struct Options {
  std::string type;
  std::string format = "text";
  std::string kind = "std";
  std::string eta;
  std::string lambda;
  std::string w;
  std::string v;
  std::string mu;
  std::string config;
  int max_len = 3;
  int L = 6;
  std::vector<std::string> args;
};

/// Resolves the root system: explicit --type, a leading positional tag when
/// more than `expected` positionals were given, then AFFDEM_TYPE.
std::string resolve_type(Options& o, std::size_t expected)
{
  if (o.args.size() == expected + 1) {
    std::string tag = o.args.front();
    o.args.erase(o.args.begin());
    if (!o.type.empty() && o.type != tag)
      usage_error("conflicting root system tags '" + o.type + "' and '" + tag + "'");
    return tag;
  }
  if (o.args.size() != expected)
    usage_error("expected " + std::to_string(expected) + " positional arguments");
  if (!o.type.empty())
    return o.type;
  if (const char* env = std::getenv("AFFDEM_TYPE"); env && *env)
    return env;
  usage_error("no root system given: use --type or set AFFDEM_TYPE");
  return {};
}

void emit_json(const Options& o, const Json& j)
{
  std::cout << (o.format == "json" ? j.dump() : j.dump(2)) << "\n";
}

void require_format(const Options& o, std::initializer_list<const char*> allowed)
{
  for (const char* f : allowed)
    if (o.format == f)
      return;
  usage_error("format '" + o.format + "' is not supported here");
}

void run_rootsys(Options& o)
{
  require_format(o, {"text", "json"});
  Group g = make_group(resolve_type(o, 0));
  char* s = nullptr;
  check(affdem_group_info_json(g.get(), &s));
  Json info = Json::parse(take(s));
  if (o.format == "json") {
    emit_json(o, info);
    return;
  }
  std::cout << "type " << info["type"].get<std::string>() << " rank " << info["rank"].get<int>() << "\n";
  std::cout << "affine cartan " << info["affine_cartan"].dump() << "\n";
  std::cout << "highest root " << info["highest_root"].dump() << "\n";
  std::cout << "positive roots " << info["positive_roots"].size() << "\n";
  std::cout << "finite weyl order " << info["finite_weyl_order"].get<std::uint64_t>() << "\n";
}

void run_order_cmp(Options& o)
{
  require_format(o, {"text", "json"});
  Group g = make_group(resolve_type(o, 2));
  Elt x = make_elt(g.get(), o.args[0]);
  Elt y = make_elt(g.get(), o.args[1]);
  affdem_order_result r = AFFDEM_NOT_LEQ;
  check(affdem_order_leq(o.kind.c_str(), or_null(o.eta), x.get(), y.get(), &r));
  const char* text = r == AFFDEM_LEQ ? "leq" : r == AFFDEM_NOT_LEQ ? "not_leq" : "inconclusive";
  if (o.format == "json") {
    Json j;
    j["kind"] = o.kind;
    j["x"] = word_of(x.get());
    j["y"] = word_of(y.get());
    j["result"] = text;
    emit_json(o, j);
    return;
  }
  std::cout << text << "\n";
}

void run_order_hasse(Options& o)
{
  require_format(o, {"text", "dot", "json"});
  Group g = make_group(resolve_type(o, 0));
  std::string fmt = o.format == "json" ? "json" : "dot";
  char* s = nullptr;
  check(affdem_order_hasse(g.get(), o.kind.c_str(), or_null(o.eta), o.max_len, fmt.c_str(), &s));
  if (fmt == "json")
    emit_json(o, Json::parse(take(s)));
  else
    std::cout << take(s);
}

void run_demazure(Options& o)
{
  require_format(o, {"text", "json"});
  Group g = make_group(resolve_type(o, 2));
  Elt w = make_elt(g.get(), o.args[0]);
  Elt v = make_elt(g.get(), o.args[1]);
  affdem_elt* p = nullptr;
  affdem_elt* x = nullptr;
  check(affdem_demazure(o.kind.c_str(), or_null(o.eta), w.get(), v.get(), &p, &x));
  Elt product = adopt(p);
  Elt x0 = adopt(x);
  Json pj = json_of(product.get());
  if (o.format == "json") {
    Json j;
    j["kind"] = o.kind;
    j["product"] = pj;
    j["x0"] = json_of(x0.get());
    emit_json(o, j);
    return;
  }
  std::cout << word_of(product.get()) << "\n";
  std::cout << "fin " << pj["fin_matrix"].dump() << " xi " << pj["xi"].dump() << "\n";
  std::cout << "x0 " << word_of(x0.get()) << "\n";
}

void run_eta_classify(Options& o)
{
  require_format(o, {"text", "json"});
  Group g = make_group(resolve_type(o, 0));
  char* s = nullptr;
  check(affdem_eta_classify(g.get(), o.eta.c_str(), &s));
  Json j = Json::parse(take(s));
  if (o.format == "json") {
    emit_json(o, j);
    return;
  }
  std::cout << j["classification"].get<std::string>() << "\n";
  std::cout << "J " << j["J"].dump() << "\n";
  std::cout << "generators " << j["generators"].dump() << "\n";
}

void run_eta_factorize(Options& o)
{
  require_format(o, {"text", "json"});
  Group g = make_group(resolve_type(o, 1));
  Elt w = make_elt(g.get(), o.args[0]);
  char* s = nullptr;
  check(affdem_eta_factorize(g.get(), o.eta.c_str(), w.get(), &s));
  Json j = Json::parse(take(s));
  if (o.format == "json") {
    emit_json(o, j);
    return;
  }
  Elt rep = make_elt(g.get(), j["rep"].dump());
  Elt sub = make_elt(g.get(), j["sub"].dump());
  std::cout << "rep " << word_of(rep.get()) << "\n";
  std::cout << "sub " << word_of(sub.get()) << "\n";
  std::cout << "lengths " << j["rep_length"].get<long long>() << " + " << j["sub_length"].get<long long>()
            << " = " << j["twisted_length"].get<long long>() << "\n";
}

Polytope make_polytope(const affdem_group* g, const Options& o)
{
  if (o.lambda.empty())
    usage_error("--lambda is required");
  Elt w = make_elt(g, o.w);
  affdem_polytope* p = nullptr;
  check(affdem_polytope_create(o.lambda.c_str(), w.get(), &p));
  return Polytope(p, affdem_polytope_free);
}

void run_polytope_vertices(Options& o)
{
  require_format(o, {"text", "json"});
  Group g = make_group(resolve_type(o, 0));
  Polytope p = make_polytope(g.get(), o);
  char* s = nullptr;
  check(affdem_polytope_vertices(p.get(), &s));
  Json j = Json::parse(take(s));
  if (o.format == "json") {
    emit_json(o, j);
    return;
  }
  for (const auto& v : j["vertices"])
    std::cout << v["weight"].dump() << "\n";
}

void run_polytope_inequalities(Options& o)
{
  require_format(o, {"text", "json"});
  Group g = make_group(resolve_type(o, 0));
  Polytope p = make_polytope(g.get(), o);
  char* s = nullptr;
  check(affdem_polytope_inequalities(p.get(), o.L, &s));
  Json j = Json::parse(take(s));
  if (o.format == "json") {
    emit_json(o, j);
    return;
  }
  std::cout << "level " << j["level"].get<std::string>() << "\n";
  for (const auto& ineq : j["inequalities"])
    std::cout << ineq.dump() << "\n";
}

void run_polytope_contains(Options& o)
{
  require_format(o, {"text", "json"});
  Group g = make_group(resolve_type(o, 0));
  if (o.mu.empty())
    usage_error("--mu is required");
  Polytope p = make_polytope(g.get(), o);
  int inside = 0;
  check(affdem_polytope_contains(p.get(), o.mu.c_str(), &inside));
  if (o.format == "json") {
    Json j;
    j["contains"] = inside != 0;
    emit_json(o, j);
    return;
  }
  std::cout << (inside ? "inside" : "outside") << "\n";
}

void run_polytope_face(Options& o)
{
  require_format(o, {"text", "json", "dot"});
  Group g = make_group(resolve_type(o, 0));
  if (o.eta.empty())
    usage_error("--eta is required");
  Polytope p = make_polytope(g.get(), o);
  char* s = nullptr;
  if (o.format == "dot") {
    check(affdem_polytope_faces_dot(p.get(), o.eta.c_str(), o.L, &s));
    std::cout << take(s);
    return;
  }
  Elt v = make_elt(g.get(), o.v);
  check(affdem_polytope_face(p.get(), o.eta.c_str(), v.get(), &s));
  Json j = Json::parse(take(s));
  if (o.format == "json") {
    emit_json(o, j);
    return;
  }
  std::cout << "rhs " << j["rhs"].get<std::string>() << "\n";
  for (const auto& fv : j["vertices"])
    std::cout << fv["weight"].dump() << "\n";
}

void run_grid(Options& o)
{
  require_format(o, {"text", "json"});
  Group g = make_group(resolve_type(o, 0));
  std::string config = o.config;
  if (!config.empty() && config.front() != '{') {
    std::ifstream in(config);
    if (!in)
      usage_error("cannot read grid configuration '" + config + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    config = ss.str();
  }
  char* s = nullptr;
  check(affdem_grid(g.get(), config.c_str(), &s));
  Json j = Json::parse(take(s));
  if (o.format == "json") {
    emit_json(o, j);
  } else {
    std::cout << j["type"].get<std::string>() << " " << j["elements"].get<std::size_t>() << " elements, "
              << j["cells"].get<std::size_t>() << " cells\n";
    std::cout << "face_agree " << j["face_agree"].get<std::size_t>() << "\n";
    std::cout << "task_farce " << j["task_farce"].get<std::size_t>() << "\n";
    std::cout << "same_coset " << j["same_coset"].get<std::size_t>() << "\n";
    for (const auto& f : j["failures"])
      std::cout << "failure " << f.dump() << "\n";
  }
  if (!j["all_pass"].get<bool>())
    throw Failure{AFFDEM_DOMAIN, "grid cells disagree"};
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Affine Weyl groups, Bruhat orders, Demazure products and Demazure polytopes"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--type", o.type, "Root system tag such as A2 or A3affine (default: $AFFDEM_TYPE)");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));

  auto add_kind = [&](CLI::App* c) {
    c->add_option("--kind", o.kind, "std, opp, semi or twisted");
    c->add_option("--eta", o.eta, "Coweight as JSON or shorthand such as -Lv1-Lv3");
  };
  auto add_polytope = [&](CLI::App* c) {
    c->add_option("--lambda", o.lambda, "Dominant integral weight, e.g. L0+L1")->required();
    c->add_option("--w", o.w, "Element w as a word");
  };
  auto add_args = [&](CLI::App* c, const char* help) { c->add_option("args", o.args, help); };
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
    c->add_option("--type", o.type, "Root system tag");
  };

  std::function<void(Options&)> action;
  auto bind = [&](CLI::App* c, void (*f)(Options&)) { c->callback([&action, f] { action = f; }); };

  auto* rootsys = app.add_subcommand("rootsys", "Root system data");
  add_format(rootsys);
  add_args(rootsys, "[type]");
  bind(rootsys, run_rootsys);

  auto* order = app.add_subcommand("order", "Bruhat orders");
  order->require_subcommand(1);
  auto* cmp = order->add_subcommand("cmp", "Decide x <= y");
  add_kind(cmp);
  add_format(cmp);
  add_args(cmp, "[type] x y");
  bind(cmp, run_order_cmp);
  auto* hasse = order->add_subcommand("hasse", "Hasse diagram of a length window");
  add_kind(hasse);
  add_format(hasse);
  hasse->add_option("--max-len", o.max_len, "Standard length bound");
  add_args(hasse, "[type]");
  bind(hasse, run_order_hasse);

  auto* demazure = app.add_subcommand("demazure", "Demazure product w *_kind v");
  add_kind(demazure);
  add_format(demazure);
  add_args(demazure, "[type] w v");
  bind(demazure, run_demazure);

  auto* eta = app.add_subcommand("eta", "Parabolic data of a coweight");
  eta->require_subcommand(1);
  auto* classify = eta->add_subcommand("classify", "Classification, J and generators");
  classify->add_option("--eta", o.eta, "Coweight")->required();
  add_format(classify);
  add_args(classify, "[type]");
  bind(classify, run_eta_classify);
  auto* factorize = eta->add_subcommand("factorize", "w = rep * sub");
  factorize->add_option("--eta", o.eta, "Coweight")->required();
  add_format(factorize);
  add_args(factorize, "[type] w");
  bind(factorize, run_eta_factorize);

  auto* polytope = app.add_subcommand("polytope", "Demazure polytopes");
  polytope->require_subcommand(1);
  auto* vertices = polytope->add_subcommand("vertices", "Vertex set");
  add_polytope(vertices);
  add_format(vertices);
  add_args(vertices, "[type]");
  bind(vertices, run_polytope_vertices);
  auto* ineqs = polytope->add_subcommand("inequalities", "Inequality families");
  add_polytope(ineqs);
  add_format(ineqs);
  ineqs->add_option("--L", o.L, "Length bound for v");
  add_args(ineqs, "[type]");
  bind(ineqs, run_polytope_inequalities);
  auto* contains = polytope->add_subcommand("contains", "Exact membership");
  add_polytope(contains);
  add_format(contains);
  contains->add_option("--mu", o.mu, "Weight to test")->required();
  add_args(contains, "[type]");
  bind(contains, run_polytope_contains);
  auto* face = polytope->add_subcommand("face", "Face F(v, eta), or the face lattice with --format dot");
  add_polytope(face);
  add_format(face);
  face->add_option("--v", o.v, "Coset representative v");
  face->add_option("--eta", o.eta, "Coweight")->required();
  face->add_option("--L", o.L, "Length bound for the face lattice");
  add_args(face, "[type]");
  bind(face, run_polytope_face);

  auto* grid = app.add_subcommand("grid", "Face theorem grid");
  grid->add_option("--config", o.config, "JSON object or path to a JSON file");
  add_format(grid);
  add_args(grid, "[type]");
  bind(grid, run_grid);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    action(o);
  } catch (const Failure& f) {
    Json err;
    err["error"]["status"] = status_name(f.status);
    err["error"]["message"] = f.message;
    std::cout.flush();
    std::cerr << err.dump() << "\n";
    return static_cast<int>(f.status == AFFDEM_OK ? AFFDEM_INTERNAL : f.status);
  } catch (const std::exception& e) {
    Json err;
    err["error"]["status"] = "internal";
    err["error"]["message"] = e.what();
    std::cerr << err.dump() << "\n";
    return AFFDEM_INTERNAL;
  }
  return 0;
}
