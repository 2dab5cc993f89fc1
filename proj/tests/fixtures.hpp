#ifndef AFFDEM_TESTS_FIXTURES_HPP
#define AFFDEM_TESTS_FIXTURES_HPP

#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace fixtures {

/// Ten A2-affine elements with their standard and semi-infinite lengths.
struct HasseElement {
  const char* word;
  int standard_length;
  int semi_length;
};

inline const std::vector<HasseElement>& hasse_elements()
{
  static const std::vector<HasseElement> elems = {
    {"e", 0, 0},           {"0", 1, -1},          {"1", 1, 1},       {"1,0", 2, -2},
    {"2,1", 2, 2},         {"2,0", 2, -2},        {"2,1,0", 3, -3},  {"2,1,0,1", 4, -2},
    {"1,2,1,0", 4, -4},    {"0,2,1,0", 4, -4},
  };
  return elems;
}

using Edge = std::pair<std::string, std::string>;

inline const std::set<Edge>& standard_arrows()
{
  static const std::set<Edge> edges = {
    {"e", "1"},         {"e", "0"},         {"1", "2,1"},         {"1", "1,0"},
    {"2,1", "2,1,0"},   {"0", "1,0"},       {"0", "2,0"},         {"1,0", "2,1,0"},
    {"2,0", "2,1,0"},   {"2,1,0", "2,1,0,1"}, {"2,1,0", "1,2,1,0"}, {"2,1,0", "0,2,1,0"},
  };
  return edges;
}

inline const std::set<Edge>& semi_infinite_arrows()
{
  static const std::set<Edge> edges = {
    {"1,2,1,0", "2,1,0"}, {"0,2,1,0", "2,1,0"}, {"2,1,0", "2,1,0,1"}, {"2,1,0", "1,0"},
    {"2,1,0", "2,0"},     {"1,0", "0"},         {"2,0", "0"},         {"0", "e"},
    {"e", "1"},           {"1", "2,1"},
  };
  return edges;
}

/// Semi-infinite diamond: source, target, label in root coordinates.
inline const std::vector<std::tuple<std::string, std::string, std::vector<long>>>& diamond_edges()
{
  static const std::vector<std::tuple<std::string, std::string, std::vector<long>>> edges = {
    {"2,1,0", "1,0", {0, 1}},
    {"1,0", "0", {1, 0}},
    {"2,1,0", "2,0", {1, 1}},
    {"2,0", "0", {0, 1}},
  };
  return edges;
}

} // namespace fixtures

#endif // AFFDEM_TESTS_FIXTURES_HPP
