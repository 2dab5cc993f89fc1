#include "affdem/affdem.h"

#include <algorithm>
#include <cstring>
#include <exception>
#include <optional>
#include <stdexcept>
#include <string>

#include "affdem/grid.hpp"
#include "affdem/serialize.hpp"

struct affdem_group {
  affdem::CartanPtr data;
};

struct affdem_elt {
  affdem::WeylElt value;
};

struct affdem_polytope {
  affdem::DemazurePolytope value;
};

namespace {

using namespace affdem;

thread_local std::string last_error;

affdem_status fail(affdem_status status, const char* what)
{
  last_error = what;
  return status;
}

template <class F>
affdem_status guarded(F&& body)
{
  try {
    body();
    last_error.clear();
    return AFFDEM_OK;
  } catch (const ParseError& e) {
    return fail(AFFDEM_PARSE, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(AFFDEM_PARSE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(AFFDEM_INVALID_ARGUMENT, e.what());
  } catch (const std::domain_error& e) {
    return fail(AFFDEM_DOMAIN, e.what());
  } catch (const std::overflow_error& e) {
    return fail(AFFDEM_DOMAIN, e.what());
  } catch (const std::exception& e) {
    return fail(AFFDEM_INTERNAL, e.what());
  } catch (...) {
    return fail(AFFDEM_INTERNAL, "unknown error");
  }
}

void require(const void* p, const char* name)
{
  if (!p)
    throw std::invalid_argument(std::string(name) + " must not be null");
}

char* duplicate(const std::string& s)
{
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::optional<Coweight> optional_eta(const FiniteCartanData& data, const char* eta)
{
  if (!eta || !*eta)
    return std::nullopt;
  return parse_coweight(data, eta);
}

OrderKind kind_of(const FiniteCartanData& data, const char* kind, const char* eta)
{
  require(kind, "kind");
  return parse_order_kind(data, kind, optional_eta(data, eta));
}

Coweight required_eta(const FiniteCartanData& data, const char* eta)
{
  require(eta, "eta");
  return parse_coweight(data, eta);
}

std::string word_text(const WeylElt& u)
{
  return u.is_identity() ? "e" : format_word(u.canonical_word());
}

std::vector<Weight> weights_from(const FiniteCartanData& data, const Json& list)
{
  std::vector<Weight> out;
  for (const auto& item : list)
    out.push_back(item.is_string() ? parse_weight(data, item.get<std::string>()) : weight_from_json(data, item));
  return out;
}

std::vector<Coweight> coweights_from(const FiniteCartanData& data, const Json& list)
{
  std::vector<Coweight> out;
  for (const auto& item : list)
    out.push_back(item.is_string() ? parse_coweight(data, item.get<std::string>())
                                   : coweight_from_json(data, item));
  return out;
}

Json cell_json(const GridCell& c)
{
  Json out;
  out["w"] = c.w;
  out["lambda"] = c.lambda;
  out["eta"] = c.eta;
  out["v"] = c.v;
  out["face_agree"] = c.face_agree;
  out["task_farce"] = c.task_farce;
  out["same_coset"] = c.same_coset;
  return out;
}

} // namespace

extern "C" {

const char* affdem_last_error(void)
{
  return last_error.c_str();
}

const char* affdem_version(void)
{
  return "1.0.0";
}

void affdem_string_free(char* s)
{
  delete[] s;
}

affdem_status affdem_group_create(const char* type, affdem_group** out)
{
  return guarded([&] {
    require(type, "type");
    require(out, "out");
    *out = new affdem_group{FiniteCartanData::build(parse_root_system_tag(type))};
  });
}

void affdem_group_free(affdem_group* group)
{
  delete group;
}

affdem_status affdem_group_info_json(const affdem_group* group, char** out)
{
  return guarded([&] {
    require(group, "group");
    require(out, "out");
    *out = duplicate(to_json(*group->data).dump());
  });
}

affdem_status affdem_elt_parse(const affdem_group* group, const char* text, affdem_elt** out)
{
  return guarded([&] {
    require(group, "group");
    require(text, "text");
    require(out, "out");
    *out = new affdem_elt{parse_element(group->data, text)};
  });
}

void affdem_elt_free(affdem_elt* elt)
{
  delete elt;
}

affdem_status affdem_elt_word(const affdem_elt* elt, char** out)
{
  return guarded([&] {
    require(elt, "elt");
    require(out, "out");
    *out = duplicate(word_text(elt->value));
  });
}

affdem_status affdem_elt_json(const affdem_elt* elt, char** out)
{
  return guarded([&] {
    require(elt, "elt");
    require(out, "out");
    *out = duplicate(to_json(elt->value).dump());
  });
}

affdem_status affdem_elt_multiply(const affdem_elt* a, const affdem_elt* b, affdem_elt** out)
{
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = new affdem_elt{a->value * b->value};
  });
}

affdem_status affdem_elt_inverse(const affdem_elt* elt, affdem_elt** out)
{
  return guarded([&] {
    require(elt, "elt");
    require(out, "out");
    *out = new affdem_elt{elt->value.inverse()};
  });
}

affdem_status affdem_elt_equal(const affdem_elt* a, const affdem_elt* b, int* out)
{
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = a->value == b->value ? 1 : 0;
  });
}

affdem_status affdem_elt_length(const affdem_elt* elt, const char* kind, const char* eta, int64_t* out)
{
  return guarded([&] {
    require(elt, "elt");
    require(out, "out");
    *out = length(kind_of(*elt->value.data(), kind, eta), elt->value);
  });
}

affdem_status affdem_order_leq(const char* kind, const char* eta, const affdem_elt* x, const affdem_elt* y,
                               affdem_order_result* out)
{
  return guarded([&] {
    require(x, "x");
    require(y, "y");
    require(out, "out");
    OrderKind k = kind_of(*x->value.data(), kind, eta);
    if (k.is_regular()) {
      *out = leq(k, x->value, y->value) ? AFFDEM_LEQ : AFFDEM_NOT_LEQ;
      return;
    }
    int radius = static_cast<int>(std::max(x->value.length(), y->value.length())) + 2;
    auto region = ball(x->value.data(), radius);
    *out = leq_twisted_semidecision(k.eta(), x->value, y->value, region) == Semidecision::proved_leq
               ? AFFDEM_LEQ
               : AFFDEM_INCONCLUSIVE;
  });
}

affdem_status affdem_order_hasse(const affdem_group* group, const char* kind, const char* eta, int max_len,
                                 const char* format, char** out)
{
  return guarded([&] {
    require(group, "group");
    require(out, "out");
    if (max_len < 0)
      throw std::invalid_argument("max_len must be non-negative");
    std::string fmt = format ? format : "dot";
    if (fmt != "dot" && fmt != "json")
      throw std::invalid_argument("format must be dot or json");
    OrderKind k = kind_of(*group->data, kind, eta);
    std::vector<WeylElt> elements = ball(group->data, max_len);
    sort_canonically(elements);
    auto arrows = hasse_arrows(k, elements);
    *out = duplicate(fmt == "dot" ? hasse_dot(elements, arrows) : hasse_json(k, elements, arrows).dump());
  });
}

affdem_status affdem_demazure(const char* kind, const char* eta, const affdem_elt* w, const affdem_elt* v,
                              affdem_elt** product, affdem_elt** x0)
{
  return guarded([&] {
    require(w, "w");
    require(v, "v");
    require(product, "product");
    DemazureResult r = demazure_product(kind_of(*w->value.data(), kind, eta), w->value, v->value);
    auto* p = new affdem_elt{r.product};
    if (x0)
      *x0 = new affdem_elt{r.x0};
    *product = p;
  });
}

affdem_status affdem_eta_classify(const affdem_group* group, const char* eta, char** out)
{
  return guarded([&] {
    require(group, "group");
    require(out, "out");
    EtaContext ctx(group->data, required_eta(*group->data, eta));
    *out = duplicate(to_json(ctx).dump());
  });
}

affdem_status affdem_eta_factorize(const affdem_group* group, const char* eta, const affdem_elt* w, char** out)
{
  return guarded([&] {
    require(group, "group");
    require(w, "w");
    require(out, "out");
    EtaContext ctx(group->data, required_eta(*group->data, eta));
    Factorization f = ctx.factorize(w->value);
    Json j;
    j["w"] = word_json(w->value);
    j["rep"] = word_json(f.rep);
    j["sub"] = word_json(f.sub);
    j["rep_length"] = length(ctx.regular_kind(), f.rep);
    j["sub_length"] = ctx.group_length(f.sub);
    j["twisted_length"] = twisted_length(w->value, ctx.eta());
    *out = duplicate(j.dump());
  });
}

affdem_status affdem_polytope_create(const char* lambda, const affdem_elt* w, affdem_polytope** out)
{
  return guarded([&] {
    require(lambda, "lambda");
    require(w, "w");
    require(out, "out");
    Weight l = parse_weight(*w->value.data(), lambda);
    *out = new affdem_polytope{DemazurePolytope(l, w->value)};
  });
}

void affdem_polytope_free(affdem_polytope* poly)
{
  delete poly;
}

affdem_status affdem_polytope_vertices(const affdem_polytope* poly, char** out)
{
  return guarded([&] {
    require(poly, "poly");
    require(out, "out");
    *out = duplicate(to_json(poly->value).dump());
  });
}

affdem_status affdem_polytope_inequalities(const affdem_polytope* poly, int max_length, char** out)
{
  return guarded([&] {
    require(poly, "poly");
    require(out, "out");
    if (max_length < 0)
      throw std::invalid_argument("max_length must be non-negative");
    *out = duplicate(to_json(inequalities(poly->value, max_length)).dump());
  });
}

affdem_status affdem_polytope_contains(const affdem_polytope* poly, const char* mu, int* out)
{
  return guarded([&] {
    require(poly, "poly");
    require(mu, "mu");
    require(out, "out");
    *out = poly->value.contains(parse_weight(*poly->value.data(), mu)) ? 1 : 0;
  });
}

affdem_status affdem_polytope_face(const affdem_polytope* poly, const char* eta, const affdem_elt* v, char** out)
{
  return guarded([&] {
    require(poly, "poly");
    require(v, "v");
    require(out, "out");
    EtaContext ctx(poly->value.data(), required_eta(*poly->value.data(), eta));
    *out = duplicate(to_json(face_vertices(poly->value, ctx, v->value)).dump());
  });
}

affdem_status affdem_polytope_faces_dot(const affdem_polytope* poly, const char* eta, int max_length, char** out)
{
  return guarded([&] {
    require(poly, "poly");
    require(out, "out");
    if (max_length < 0)
      throw std::invalid_argument("max_length must be non-negative");
    EtaContext ctx(poly->value.data(), required_eta(*poly->value.data(), eta));
    *out = duplicate(face_lattice_dot(poly->value, ctx, max_length));
  });
}

affdem_status affdem_grid(const affdem_group* group, const char* config, char** out)
{
  return guarded([&] {
    require(group, "group");
    require(out, "out");
    const FiniteCartanData& data = *group->data;
    Json cfg = config && *config ? Json::parse(config) : Json::object();
    if (!cfg.is_object())
      throw ParseError("grid configuration must be a JSON object");
    std::vector<WeylElt> elements;
    if (cfg.contains("random")) {
      const Json& r = cfg["random"];
      elements = random_grid_elements(group->data, r.value("count", 20), r.value("max_len", 6),
                                      r.value("seed", std::uint64_t{1}));
    } else {
      elements = ball(group->data, cfg.value("max_len", 3));
    }
    sort_canonically(elements);
    std::vector<Weight> weights =
        cfg.contains("weights") ? weights_from(data, cfg["weights"]) : default_grid_weights(data);
    std::vector<Coweight> coweights =
        cfg.contains("coweights") ? coweights_from(data, cfg["coweights"]) : default_grid_coweights(data);
    GridSummary s = run_face_grid(elements, weights, coweights, cfg.value("v_max_len", 3), cfg.value("threads", 0u));
    Json j;
    j["type"] = data.tag().name();
    j["elements"] = elements.size();
    j["cells"] = s.cells;
    j["face_agree"] = s.face_agree;
    j["task_farce"] = s.task_farce;
    j["same_coset"] = s.same_coset;
    j["all_pass"] = s.all_pass();
    Json fails = Json::array();
    for (const auto& c : s.failures)
      fails.push_back(cell_json(c));
    j["failures"] = std::move(fails);
    *out = duplicate(j.dump());
  });
}

} // extern "C"
