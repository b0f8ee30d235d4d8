#include "ixc/problem.hpp"

#include <algorithm>
#include <sstream>

namespace ixc {

MsgSet make_set(std::vector<Msg> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool set_contains(const MsgSet& s, Msg m) {
  return std::binary_search(s.begin(), s.end(), m);
}

MsgSet set_union(const MsgSet& a, const MsgSet& b) {
  MsgSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

MsgSet set_intersect(const MsgSet& a, const MsgSet& b) {
  MsgSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

MsgSet set_minus(const MsgSet& a, const MsgSet& b) {
  MsgSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_subset(const MsgSet& a, const MsgSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string set_to_string(const MsgSet& s) {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) os << ',';
    os << s[i] + 1;
  }
  os << '}';
  return os.str();
}

Problem make_problem(int n, std::vector<Receiver> receivers,
                     std::optional<uint32_t> field_hint) {
  if (n < 1) throw InvariantError("message count must be positive, got " + std::to_string(n));
  for (size_t j = 0; j < receivers.size(); ++j) {
    Receiver& r = receivers[j];
    r.demands = make_set(std::move(r.demands));
    r.side_info = make_set(std::move(r.side_info));
    auto check_range = [&](const MsgSet& s, const char* what) {
      for (Msg m : s)
        if (m < 0 || m >= n)
          throw InvariantError("receiver " + std::to_string(j + 1) + ": " + what + " index " +
                               std::to_string(m + 1) + " outside 1.." + std::to_string(n));
    };
    check_range(r.demands, "demand");
    check_range(r.side_info, "side-information");
    if (r.demands.empty())
      throw InvariantError("receiver " + std::to_string(j + 1) + " demands nothing");
    if (!set_intersect(r.demands, r.side_info).empty())
      throw InvariantError("receiver " + std::to_string(j + 1) +
                           " demands a message it already has");
  }
  return Problem{n, field_hint, std::move(receivers)};
}

Receiver demand_with_interference(int n, Msg d, const MsgSet& interference) {
  MsgSet all;
  all.reserve(static_cast<size_t>(n));
  for (Msg m = 0; m < n; ++m) all.push_back(m);
  MsgSet excluded = set_union(MsgSet{d}, interference);
  return Receiver{{d}, set_minus(all, excluded)};
}

Receiver sink(int n, Msg d) { return demand_with_interference(n, d, {}); }

MsgSet interfering_set(const Problem& p, int j, Msg k) {
  if (j < 0 || j >= static_cast<int>(p.receivers.size()))
    throw InvariantError("receiver id " + std::to_string(j + 1) + " out of range");
  if (k < 0 || k >= p.n) throw InvariantError("message " + std::to_string(k + 1) + " out of range");
  const Receiver& r = p.receivers[static_cast<size_t>(j)];
  if (!set_contains(r.demands, k)) return {};
  MsgSet out;
  for (Msg m = 0; m < p.n; ++m)
    if (m != k && !set_contains(r.side_info, m)) out.push_back(m);
  return out;
}

std::vector<ConflictHyperedge> conflict_hyperedges(const Problem& p) {
  std::vector<ConflictHyperedge> out;
  for (int j = 0; j < static_cast<int>(p.receivers.size()); ++j)
    for (Msg k : p.receivers[static_cast<size_t>(j)].demands) {
      MsgSet interf = interfering_set(p, j, k);
      if (!interf.empty()) out.push_back({k, j, std::move(interf)});
    }
  return out;
}

std::vector<std::pair<Msg, Msg>> conflict_pairs(const Problem& p) {
  std::vector<std::pair<Msg, Msg>> out;
  for (const ConflictHyperedge& h : conflict_hyperedges(p))
    for (Msg a : h.interference)
      out.emplace_back(std::min(a, h.demand), std::max(a, h.demand));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool in_conflict(const std::vector<std::pair<Msg, Msg>>& pairs, Msg a, Msg b) {
  if (a > b) std::swap(a, b);
  return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(a, b));
}

MsgSet demanded_messages(const Problem& p) {
  MsgSet out;
  for (const Receiver& r : p.receivers) out = set_union(out, r.demands);
  return out;
}

Restriction restrict_to(const Problem& p, const MsgSet& subset) {
  if (subset.empty()) throw EmptySubset("restriction to the empty message set");
  for (Msg m : subset)
    if (m < 0 || m >= p.n)
      throw InvariantError("restriction index " + std::to_string(m + 1) + " out of range");

  std::vector<Msg> from_original(static_cast<size_t>(p.n), -1);
  for (size_t i = 0; i < subset.size(); ++i) from_original[static_cast<size_t>(subset[i])] = static_cast<Msg>(i);

  auto project = [&](const MsgSet& s) {
    MsgSet out;
    for (Msg m : s)
      if (from_original[static_cast<size_t>(m)] >= 0) out.push_back(from_original[static_cast<size_t>(m)]);
    return make_set(std::move(out));
  };

  std::vector<Receiver> receivers;
  for (const Receiver& r : p.receivers) {
    MsgSet d = project(r.demands);
    if (d.empty()) continue;
    receivers.push_back(Receiver{std::move(d), project(r.side_info)});
  }
  Restriction out;
  out.problem = make_problem(static_cast<int>(subset.size()), std::move(receivers), p.field_hint);
  out.to_original = subset;
  out.from_original = std::move(from_original);
  return out;
}

}  // namespace ixc
