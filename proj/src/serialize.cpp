#include "affdem/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace affdem {

namespace {

Json int_array(std::span<const std::int64_t> v)
{
  Json out = Json::array();
  for (auto x : v)
    out.push_back(x);
  return out;
}

Json rational_array(const RationalVector& v)
{
  Json out = Json::array();
  for (const auto& x : v)
    out.push_back(to_string(x));
  return out;
}

RationalVector rational_vector_from_json(const Json& j, int rank)
{
  if (!j.is_array() || static_cast<int>(j.size()) != rank)
    throw ParseError("expected an array of " + std::to_string(rank) + " rationals");
  RationalVector out;
  for (const auto& x : j)
    out.push_back(rational_from_json(x));
  return out;
}

struct Term {
  Rational coef;
  std::string symbol;
  int index = -1;
};

// Splits "c*sym+c sym-..." into signed terms.
std::vector<Term> parse_terms(std::string_view text)
{
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s.push_back(c);
  if (s.empty())
    throw ParseError("empty expression");
  std::vector<Term> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw ParseError("expected '+' or '-' in '" + s + "'");
    }
    std::size_t start = pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
      ++pos;
    Term t;
    t.coef = start == pos ? Rational(1) : parse_rational(std::string_view(s).substr(start, pos - start));
    if (pos < s.size() && s[pos] == '*')
      ++pos;
    std::size_t sym = pos;
    while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos])))
      ++pos;
    t.symbol = s.substr(sym, pos - sym);
    std::size_t idx = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (idx != pos)
      t.index = std::stoi(s.substr(idx, pos - idx));
    if (t.symbol.empty() && t.index >= 0)
      throw ParseError("missing symbol in '" + s + "'");
    if (t.symbol.empty() && start == sym)
      throw ParseError("malformed term in '" + s + "'");
    t.coef *= sign;
    out.push_back(std::move(t));
  }
  return out;
}

int checked_index(const FiniteCartanData& data, const Term& t, int first)
{
  if (t.index < first || t.index > data.rank())
    throw ParseError("index out of range in term '" + t.symbol + std::to_string(t.index) + "'");
  return t.index;
}

bool looks_like_json(std::string_view text)
{
  auto it = std::find_if(text.begin(), text.end(), [](char c) { return !std::isspace(static_cast<unsigned char>(c)); });
  return it != text.end() && (*it == '{' || *it == '[' || *it == '"');
}

Json parse_json_text(std::string_view text)
{
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

} // namespace

Json to_json(const Rational& q)
{
  return to_string(q);
}

Json to_json(const Weight& lambda)
{
  Json out;
  out["type"] = lambda.system.name();
  out["fin"] = rational_array(lambda.fin);
  out["level"] = to_string(lambda.level);
  out["delta"] = to_string(lambda.delta);
  return out;
}

Json to_json(const Coweight& eta)
{
  Json out;
  out["type"] = eta.system.name();
  out["fin"] = rational_array(eta.fin);
  out["d"] = to_string(eta.d);
  out["k"] = to_string(eta.k);
  return out;
}

Json to_json(const AffineRoot& beta)
{
  Json out;
  out["alpha"] = int_array(beta.alpha);
  out["k"] = beta.k;
  return out;
}

Json word_json(const WeylElt& u)
{
  Json out = Json::array();
  for (int i : u.canonical_word())
    out.push_back(i);
  return out;
}

Json to_json(const WeylElt& u)
{
  Json out;
  out["word"] = word_json(u);
  const int n = u.rank();
  Json m = Json::array();
  for (int i = 0; i < n; ++i) {
    Json row = Json::array();
    for (int j = 0; j < n; ++j)
      row.push_back(u.fin_roots()[i * n + j]);
    m.push_back(std::move(row));
  }
  out["fin_matrix"] = std::move(m);
  out["xi"] = int_array(u.xi());
  return out;
}

Json to_json(const FiniteCartanData& data)
{
  const int n = data.rank();
  Json out;
  out["type"] = data.tag().name();
  out["rank"] = n;
  Json cartan = Json::array();
  for (int i = 0; i < n; ++i) {
    Json row = Json::array();
    for (int j = 0; j < n; ++j)
      row.push_back(data.cartan(i, j));
    cartan.push_back(std::move(row));
  }
  out["cartan"] = std::move(cartan);
  Json affine = Json::array();
  for (int i = 0; i <= n; ++i) {
    Json row = Json::array();
    for (int j = 0; j <= n; ++j)
      row.push_back(data.affine_cartan(i, j));
    affine.push_back(std::move(row));
  }
  out["affine_cartan"] = std::move(affine);
  Json roots = Json::array();
  for (const auto& r : data.positive_roots())
    roots.push_back(int_array(r));
  out["positive_roots"] = std::move(roots);
  Json coroots = Json::array();
  for (const auto& r : data.positive_coroots())
    coroots.push_back(int_array(r));
  out["positive_coroots"] = std::move(coroots);
  out["highest_root"] = int_array(data.highest_root());
  out["comarks"] = int_array(data.comarks());
  out["finite_weyl_order"] = data.finite_weyl_order();
  return out;
}

Json to_json(const EtaContext& ctx)
{
  Json out;
  out["eta"] = to_json(ctx.eta());
  out["classification"] = std::string(to_string(ctx.classification()));
  out["J"] = ctx.vanishing();
  Json gens = Json::array();
  for (const auto& g : ctx.generator_roots())
    gens.push_back(to_json(g));
  out["generators"] = std::move(gens);
  Json comps = Json::array();
  for (std::size_t c = 0; c < ctx.components().size(); ++c) {
    Json item;
    item["nodes"] = ctx.components()[c];
    item["highest_root"] = int_array(ctx.component_highest_roots()[c]);
    comps.push_back(std::move(item));
  }
  out["components"] = std::move(comps);
  return out;
}

Json to_json(const Inequality& ineq)
{
  Json out;
  out["family"] = std::string(to_string(ineq.family));
  out["i"] = ineq.i;
  out["v"] = word_json(ineq.v);
  out["normal"] = to_json(ineq.normal);
  out["rhs"] = to_string(ineq.rhs);
  return out;
}

Json to_json(const InequalitySystem& system)
{
  Json out;
  out["level"] = to_string(system.level);
  Json list = Json::array();
  for (const auto& ineq : system.inequalities)
    list.push_back(to_json(ineq));
  out["inequalities"] = std::move(list);
  return out;
}

Json to_json(const Face& face)
{
  Json out;
  out["v"] = word_json(face.v);
  out["normal"] = to_json(face.normal);
  out["rhs"] = to_string(face.rhs);
  out["regular_product"] = word_json(face.regular_product);
  out["twisted_product"] = word_json(face.twisted_product);
  out["rep"] = word_json(face.rep);
  out["top"] = word_json(face.top);
  out["same_coset"] = face.same_coset;
  Json verts = Json::array();
  for (const auto& fv : face.vertices) {
    Json item;
    item["q"] = word_json(fv.q);
    item["weight"] = to_json(fv.vertex);
    verts.push_back(std::move(item));
  }
  out["vertices"] = std::move(verts);
  return out;
}

Json to_json(const DemazurePolytope& poly)
{
  Json out;
  out["lambda"] = to_json(poly.lambda());
  out["w"] = word_json(poly.w());
  out["requested_w"] = word_json(poly.requested_w());
  Json verts = Json::array();
  for (std::size_t k = 0; k < poly.vertices().size(); ++k) {
    Json item;
    item["weight"] = to_json(poly.vertices()[k]);
    Json wit = Json::array();
    for (const auto& q : poly.witnesses()[k])
      wit.push_back(word_json(q));
    item["witnesses"] = std::move(wit);
    verts.push_back(std::move(item));
  }
  out["vertices"] = std::move(verts);
  return out;
}

Rational rational_from_json(const Json& j)
{
  try {
    if (j.is_string())
      return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
      return Rational(std::to_string(j.get<long long>()));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  throw ParseError("expected a rational string or an integer");
}

Weight weight_from_json(const FiniteCartanData& data, const Json& j)
{
  if (!j.is_object())
    throw ParseError("weight must be a JSON object");
  if (j.contains("type") && parse_root_system_tag(j["type"].get<std::string>()) != data.tag())
    throw ParseError("weight belongs to another root system");
  Weight out = zero_weight(data);
  if (!j.contains("fin"))
    throw ParseError("weight is missing \"fin\"");
  out.fin = rational_vector_from_json(j["fin"], data.rank());
  if (j.contains("level"))
    out.level = rational_from_json(j["level"]);
  if (j.contains("delta"))
    out.delta = rational_from_json(j["delta"]);
  return out;
}

Weight parse_weight(const FiniteCartanData& data, std::string_view text)
{
  if (looks_like_json(text))
    return weight_from_json(data, parse_json_text(text));
  Weight out = zero_weight(data);
  try {
    for (const auto& t : parse_terms(text)) {
      Weight term = zero_weight(data);
      if (t.symbol == "L" || t.symbol == "Lambda")
        term = fundamental_weight(data, checked_index(data, t, 0));
      else if (t.symbol == "w" || t.symbol == "omega")
        term = finite_fundamental_weight(data, checked_index(data, t, 1));
      else if (t.symbol == "a" || t.symbol == "alpha")
        term = simple_root_weight(data, checked_index(data, t, 0));
      else if ((t.symbol == "delta") && t.index < 0)
        term = null_root(data);
      else if (t.symbol.empty() && t.coef == 0)
        continue;
      else
        throw ParseError("unknown weight symbol '" + t.symbol + "'");
      out = out + term.scaled(t.coef);
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return out;
}

Coweight coweight_from_json(const FiniteCartanData& data, const Json& j)
{
  if (!j.is_object())
    throw ParseError("coweight must be a JSON object");
  if (j.contains("type") && parse_root_system_tag(j["type"].get<std::string>()) != data.tag())
    throw ParseError("coweight belongs to another root system");
  Coweight out = zero_coweight(data);
  if (!j.contains("fin"))
    throw ParseError("coweight is missing \"fin\"");
  out.fin = rational_vector_from_json(j["fin"], data.rank());
  if (j.contains("d"))
    out.d = rational_from_json(j["d"]);
  if (j.contains("k"))
    out.k = rational_from_json(j["k"]);
  return out;
}

Coweight parse_coweight(const FiniteCartanData& data, std::string_view text)
{
  if (looks_like_json(text))
    return coweight_from_json(data, parse_json_text(text));
  Coweight out = zero_coweight(data);
  try {
    for (const auto& t : parse_terms(text)) {
      Coweight term = zero_coweight(data);
      if (t.symbol == "Lv")
        term = fundamental_affine_coweight(data, checked_index(data, t, 0));
      else if (t.symbol == "wv")
        term = finite_fundamental_coweight(data, checked_index(data, t, 1));
      else if (t.symbol == "av")
        term = simple_coroot(data, checked_index(data, t, 0));
      else if (t.symbol == "K" && t.index < 0)
        term = central_coweight(data);
      else if (t.symbol == "d" && t.index < 0)
        term = degree_coweight(data);
      else if (t.symbol.empty() && t.coef == 0)
        continue;
      else
        throw ParseError("unknown coweight symbol '" + t.symbol + "'");
      out = out + term.scaled(t.coef);
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return out;
}

WeylElt element_from_json(const CartanPtr& data, const Json& j)
{
  if (j.is_string())
    return parse_element(data, j.get<std::string>());
  const Json* word = &j;
  if (j.is_object()) {
    if (!j.contains("word"))
      throw ParseError("element object is missing \"word\"");
    word = &j["word"];
    if (word->is_string())
      return parse_element(data, word->get<std::string>());
  }
  if (!word->is_array())
    throw ParseError("element must be a word string, an array of letters or an object with \"word\"");
  std::vector<int> letters;
  for (const auto& x : *word) {
    if (!x.is_number_integer())
      throw ParseError("word letters must be integers");
    letters.push_back(x.get<int>());
  }
  try {
    return WeylElt::from_word(data, letters);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

WeylElt parse_element(const CartanPtr& data, std::string_view text)
{
  if (looks_like_json(text))
    return element_from_json(data, parse_json_text(text));
  try {
    return parse_weyl_element(data, text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string root_label(const FiniteCartanData& data, const AffineRoot& beta)
{
  const int n = data.rank();
  IntVector c(static_cast<std::size_t>(n) + 1);
  c[0] = beta.k;
  for (int i = 1; i <= n; ++i)
    c[i] = beta.alpha[i - 1] + beta.k * data.marks()[i - 1];
  std::string out;
  for (int i = 0; i <= n; ++i) {
    if (c[i] == 0)
      continue;
    if (c[i] < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    if (c[i] != 1 && c[i] != -1)
      out += std::to_string(c[i] < 0 ? -c[i] : c[i]);
    out += "a" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::string hasse_dot(const std::vector<WeylElt>& elements, const std::vector<Arrow>& arrows)
{
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n";
  for (std::size_t k = 0; k < elements.size(); ++k)
    os << "  n" << k << " [label=\"" << format_word(elements[k].canonical_word()) << "\"];\n";
  for (const auto& a : arrows) {
    const auto& data = *elements[a.from].data();
    os << "  n" << a.from << " -> n" << a.to << " [label=\"" << root_label(data, a.beta) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

Json hasse_json(const OrderKind& kind, const std::vector<WeylElt>& elements, const std::vector<Arrow>& arrows)
{
  Json out;
  out["kind"] = kind.name();
  if (!kind.is_regular())
    out["eta"] = to_json(kind.eta());
  Json nodes = Json::array();
  for (const auto& u : elements)
    nodes.push_back(word_json(u));
  out["elements"] = std::move(nodes);
  Json edges = Json::array();
  for (const auto& a : arrows) {
    Json item;
    item["from"] = a.from;
    item["to"] = a.to;
    item["beta"] = to_json(a.beta);
    edges.push_back(std::move(item));
  }
  out["arrows"] = std::move(edges);
  return out;
}

std::string face_lattice_dot(const DemazurePolytope& poly, const EtaContext& ctx, int max_length)
{
  std::map<std::vector<Weight>, std::vector<std::string>> faces;
  faces[poly.vertices()].push_back("P");
  for (const auto& v : ball(poly.data(), max_length)) {
    if (!ctx.is_coset_rep(v))
      continue;
    Face f = face_vertices(poly, ctx, v);
    faces[distinct_weights(f.vertices)].push_back("v=" + format_word(v.canonical_word()));
  }
  std::vector<std::vector<Weight>> sets;
  std::ostringstream os;
  os << "digraph faces {\n  rankdir=BT;\n";
  std::size_t id = 0;
  for (const auto& [verts, labels] : faces) {
    std::string label = std::to_string(verts.size()) + " vertices";
    for (const auto& l : labels)
      label += "\\n" + l;
    os << "  f" << id++ << " [label=\"" << label << "\"];\n";
    sets.push_back(verts);
  }
  auto subset = [](const std::vector<Weight>& a, const std::vector<Weight>& b) {
    return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  for (std::size_t a = 0; a < sets.size(); ++a)
    for (std::size_t b = 0; b < sets.size(); ++b) {
      if (!subset(sets[a], sets[b]))
        continue;
      bool covered = true;
      for (std::size_t c = 0; c < sets.size() && covered; ++c)
        covered = !(subset(sets[a], sets[c]) && subset(sets[c], sets[b]));
      if (covered)
        os << "  f" << a << " -> f" << b << ";\n";
    }
  os << "}\n";
  return os.str();
}

} // namespace affdem
