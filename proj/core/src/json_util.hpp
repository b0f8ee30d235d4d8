#pragma once

// Internal JSON builders shared by certificate/report serialization.
// Message labels are 1-based on the wire, receiver ids are array indices.

#include <string>
#include <utility>

#include "ixc/code.hpp"
#include "ixc/contraction.hpp"
#include "ixc/encoder.hpp"
#include "ixc/inference.hpp"
#include "ixc/oracle.hpp"
#include "ixc/problem.hpp"
#include "ixc/structure.hpp"
#include "json.hpp"

namespace ixc::detail {

inline nlohmann::json code_json(const PrecodingAssignment& code) {
  nlohmann::json j;
  j["L"] = code.L;
  j["q"] = code.field.q;
  nlohmann::json vecs = nlohmann::json::object();
  for (size_t m = 0; m < code.vectors.size(); ++m) {
    nlohmann::json coords = nlohmann::json::array();
    for (int i = 0; i < code.vectors[m].size(); ++i) coords.push_back(code.vectors[m][i]);
    vecs[std::to_string(m + 1)] = std::move(coords);
  }
  j["vectors"] = std::move(vecs);
  return j;
}

inline nlohmann::json msg_set_json(const MsgSet& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (Msg m : s) arr.push_back(m + 1);
  return arr;
}

inline nlohmann::json pair_json(const std::pair<Msg, Msg>& pr) {
  return nlohmann::json::array({pr.first + 1, pr.second + 1});
}

inline const char* pattern_kind_name(PatternKind k) {
  switch (k) {
    case PatternKind::Triangular: return "triangular";
    case PatternKind::Type2: return "type2";
    case PatternKind::Xtype2: return "xtype2";
    case PatternKind::Stic: return "stic";
    case PatternKind::Spic: return "spic";
    case PatternKind::SpicAlignment: return "spic-alignment";
  }
  return "?";
}

inline nlohmann::json witness_json(const Witness& w) {
  nlohmann::json j;
  j["receiver"] = w.receiver;
  j["demand"] = w.demand + 1;
  j["messages"] = msg_set_json(w.messages);
  return j;
}

inline nlohmann::json match_json(const PatternMatch& m) {
  nlohmann::json j;
  j["kind"] = pattern_kind_name(m.kind);
  j["members"] = msg_set_json(m.members);
  if (!m.role_map.empty()) {
    nlohmann::json roles = nlohmann::json::array();
    for (Msg v : m.role_map) roles.push_back(v + 1);
    j["roles"] = roles;
  }
  nlohmann::json ws = nlohmann::json::array();
  for (const Witness& w : m.witnesses) ws.push_back(witness_json(w));
  j["witnesses"] = ws;
  return j;
}

inline nlohmann::json contribution_json(const Contribution& c) {
  nlohmann::json j;
  j["rule"] = c.rule;
  j["dims"] = dims_list(c.dims);
  if (!c.witnesses.empty()) {
    nlohmann::json ws = nlohmann::json::array();
    for (const Witness& w : c.witnesses) ws.push_back(witness_json(w));
    j["witnesses"] = ws;
  }
  if (!c.matches.empty()) {
    nlohmann::json ms = nlohmann::json::array();
    for (const PatternMatch& m : c.matches) ms.push_back(match_json(m));
    j["matches"] = ms;
  }
  if (!c.parents.empty()) {
    nlohmann::json ps = nlohmann::json::array();
    for (const MsgSet& s : c.parents) ps.push_back(msg_set_json(s));
    j["parents"] = ps;
  }
  if (c.link) j["link"] = msg_set_json(*c.link);
  if (c.pair) j["pair"] = pair_json(*c.pair);
  return j;
}

inline nlohmann::json fact_json(const StrictRateFact& f) {
  nlohmann::json j;
  j["subset"] = msg_set_json(f.subset);
  j["allowed_dims"] = dims_list(f.allowed_dims);
  nlohmann::json ss = nlohmann::json::array();
  for (const Contribution& c : f.sources) ss.push_back(contribution_json(c));
  j["sources"] = ss;
  return j;
}

inline nlohmann::json certificate_json(const Certificate& c) {
  nlohmann::json j;
  j["verdict"] = verdict_name(c.verdict);
  j["reason"] = c.reason;
  if (c.subject) j["subject"] = msg_set_json(*c.subject);
  if (c.conflict) j["conflict"] = pair_json(*c.conflict);
  nlohmann::json fs = nlohmann::json::array();
  for (const StrictRateFact& f : c.facts_used) fs.push_back(fact_json(f));
  j["facts"] = fs;
  return j;
}

inline nlohmann::json construct_json(const ConstructResult& r) {
  nlohmann::json j = code_json(r.code);
  j["seed"] = r.seed;
  j["policy"] = policy_name(r.policy);
  j["retries_used"] = r.retries_used;
  return j;
}

inline nlohmann::json oracle_json(const OracleResult& r) {
  nlohmann::json j;
  j["feasible"] = r.feasible;
  j["nodes_explored"] = r.nodes_explored;
  j["witness"] = r.witness ? code_json(*r.witness) : nlohmann::json(nullptr);
  if (r.achievable_dims) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [s, ds] : *r.achievable_dims) {
      nlohmann::json item;
      item["subset"] = msg_set_json(s);
      item["dims"] = nlohmann::json(ds);
      arr.push_back(std::move(item));
    }
    j["achievable_dims"] = std::move(arr);
    j["vacuous"] = r.vacuous;
  }
  return j;
}

}  // namespace ixc::detail
