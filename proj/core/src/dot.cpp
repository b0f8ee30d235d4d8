#include "ixc/dot.hpp"

#include <set>
#include <sstream>
#include <utility>

#include "ixc/structure.hpp"

namespace ixc {

std::string problem_to_dot(const Problem& p) {
  std::ostringstream out;
  out << "graph instance {\n";
  out << "  node [shape=circle];\n";
  for (Msg m = 0; m < p.n; ++m) out << "  m" << m + 1 << " [label=\"" << m + 1 << "\"];\n";

  for (const auto& [a, b] : alignment_sets(p).graph.edges)
    out << "  m" << a + 1 << " -- m" << b + 1 << ";\n";

  std::set<std::pair<Msg, MsgSet>> constraints;
  for (size_t j = 0; j < p.receivers.size(); ++j)
    for (Msg k : p.receivers[j].demands) {
      MsgSet interf = interfering_set(p, static_cast<int>(j), k);
      if (!interf.empty()) constraints.insert({k, std::move(interf)});
    }

  int h = 0;
  for (const auto& [demand, interf] : constraints) {
    ++h;
    out << "  h" << h << " [shape=point, label=\"\"];\n";
    out << "  h" << h << " -- m" << demand + 1 << " [style=dashed];\n";
    for (Msg m : interf) out << "  h" << h << " -- m" << m + 1 << " [style=dashed];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace ixc
