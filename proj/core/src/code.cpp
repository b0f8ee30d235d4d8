#include "ixc/code.hpp"

#include <string>
#include <utility>
#include <vector>

#include "json_util.hpp"

namespace ixc {

std::vector<Violation> verify_code(const Problem& p, const PrecodingAssignment& code) {
  if (static_cast<int>(code.vectors.size()) != p.n)
    throw CoverageError("code covers " + std::to_string(code.vectors.size()) +
                        " messages, problem has " + std::to_string(p.n));
  for (Msg m = 0; m < p.n; ++m)
    if (code.vectors[static_cast<size_t>(m)].size() != code.L)
      throw CoverageError("message " + std::to_string(m + 1) + " has a vector of length " +
                          std::to_string(code.vectors[static_cast<size_t>(m)].size()) +
                          ", code length is " + std::to_string(code.L));

  std::vector<Violation> out;
  for (int j = 0; j < static_cast<int>(p.receivers.size()); ++j) {
    for (Msg k : p.receivers[static_cast<size_t>(j)].demands) {
      const MsgSet interf = interfering_set(p, j, k);
      std::vector<FVector> vs;
      vs.reserve(interf.size());
      for (Msg m : interf) vs.push_back(code.vectors[static_cast<size_t>(m)]);
      const Subspace s = span_of(code.field, code.L, vs);
      if (!s.contains(code.vectors[static_cast<size_t>(k)])) continue;
      Violation v;
      v.receiver = j;
      v.demand = k;
      v.interference = interf;
      v.detail = interf.empty()
                     ? "message " + std::to_string(k + 1) + " is demanded but its vector is zero"
                     : "vector of message " + std::to_string(k + 1) +
                           " lies in the span of its interference " + set_to_string(interf) +
                           " at receiver " + std::to_string(j);
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::string code_to_json(const PrecodingAssignment& code) {
  return detail::code_json(code).dump(2) + "\n";
}

}  // namespace ixc
