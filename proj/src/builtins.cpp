#include <map>

#include "singlink/diagram.hpp"
#include "singlink/error.hpp"

namespace singlink {

namespace {

// Closed 2-braids unless noted. Edge names follow the strand positions: a* on the
// left, b* on the right.
const std::map<std::string, std::string, std::less<>>& corpus() {
  static const std::map<std::string, std::string, std::less<>> texts{
      {"unknot", "loop u\n"},
      {"trefoil",
       "X+ a1 b1 a2 b2\n"
       "X+ a2 b2 a3 b3\n"
       "X+ a3 b3 a1 b1\n"},
      {"sing_trefoil",
       "Xs a1 b1 a2 b2\n"
       "X+ a2 b2 a3 b3\n"
       "X+ a3 b3 a1 b1\n"},
      {"sing_trefoil_mirror",
       "Xs a1 b1 a2 b2\n"
       "X- a2 b2 a3 b3\n"
       "X- a3 b3 a1 b1\n"},
      // one singular and one classical crossing between the two components
      {"sing_hopf",
       "Xs a1 b1 a2 b2\n"
       "X+ a2 b2 a1 b1\n"},
      {"sing_trefoil_fig8",
       "X+ p1 q1 p2 q2\n"
       "Xs p2 q2 p3 q3\n"
       "X+ p3 q3 p1 q1\n"},
      {"four_sing_left",
       "Xs a1 b1 a2 b2\n"
       "Xs a2 b2 a3 b3\n"
       "Xs a3 b3 a4 b4\n"
       "Xs a4 b4 a1 b1\n"},
      // a round component e* meeting a component f* with one classical self-crossing
      {"four_sing_right",
       "Xs f6 e4 e1 f1\n"
       "Xs e1 f1 f2 e2\n"
       "Xs e2 f4 f5 e3\n"
       "Xs f3 e3 e4 f4\n"
       "X+ f2 f5 f6 f3\n"},
  };
  return texts;
}

}  // namespace

SingularDiagram builtin_diagram(std::string_view name) {
  auto it = corpus().find(name);
  if (it == corpus().end()) throw Error(ErrorKind::UnknownName, "no built-in diagram '" + std::string(name) + "'");
  return parse_diagram(it->second);
}

const std::vector<std::string>& builtin_diagram_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : corpus()) v.push_back(k);
    return v;
  }();
  return names;
}

}  // namespace singlink
