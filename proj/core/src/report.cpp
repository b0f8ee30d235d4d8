#include "ixc/report.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "ixc/errors.hpp"
#include "json_util.hpp"

namespace ixc {

namespace {

constexpr std::array<PatternKind, 6> kAllKinds = {
    PatternKind::Triangular, PatternKind::Type2,          PatternKind::Xtype2,
    PatternKind::Stic,       PatternKind::Spic,           PatternKind::SpicAlignment,
};

void require(bool ok, const std::string& what) {
  if (!ok) throw InvariantError("pattern failed re-validation: " + what);
}

std::string set_text(const MsgSet& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i] + 1);
  }
  return out + "}";
}

}  // namespace

void validate_patterns(const Problem& p, const std::vector<PatternMatch>& patterns) {
  for (const PatternMatch& m : patterns) {
    require(!m.members.empty(), "empty member list");
    for (Msg x : m.members) require(x >= 0 && x < p.n, "member out of range");
    for (const Witness& w : m.witnesses) {
      require(w.receiver >= 0 && w.receiver < static_cast<int>(p.receivers.size()),
              "witness receiver out of range");
      require(set_contains(p.receivers[static_cast<size_t>(w.receiver)].demands, w.demand),
              "witness demand not demanded at its receiver");
      MsgSet interf = interfering_set(p, w.receiver, w.demand);
      for (Msg x : w.messages)
        require(set_contains(interf, x), "witness message outside the interfering set");
    }
    if (m.kind == PatternKind::Stic) {
      require(m.role_map.size() == 6, "three-triple match needs six roles");
      std::array<Msg, 6> roles;
      std::copy(m.role_map.begin(), m.role_map.end(), roles.begin());
      require(is_stic_role_map(p, roles), "three-triple roles do not satisfy the pattern");
    }
    if (m.kind == PatternKind::Spic) {
      require(m.role_map.size() == 5, "square-pyramid match needs five roles");
      std::array<Msg, 5> roles;
      std::copy(m.role_map.begin(), m.role_map.end(), roles.begin());
      require(is_spic_role_map(p, roles), "square-pyramid roles do not satisfy the pattern");
    }
  }
}

Report analyze(const Problem& p, const AnalyzeOptions& opts) {
  Report r;
  r.n = p.n;
  r.receivers = static_cast<int>(p.receivers.size());
  r.conflicts = conflict_pairs(p);
  r.alignment_sets = alignment_sets(p).sets;
  r.patterns = collect_matches(p);
  validate_patterns(p, r.patterns);
  r.certificate = quick_verdict(p);
  if (r.certificate.verdict == Verdict::Inconclusive && opts.attempt_construction) {
    try {
      r.code = construct_length3_code(p, opts.construction);
    } catch (const NoQualifyingContraction&) {
    } catch (const RetryExhausted&) {
    }
  }
  return r;
}

std::string report_to_json(const Report& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["receivers"] = r.receivers;
  nlohmann::json confs = nlohmann::json::array();
  for (const auto& pr : r.conflicts) confs.push_back(detail::pair_json(pr));
  j["conflicts"] = std::move(confs);
  nlohmann::json sets = nlohmann::json::array();
  for (const MsgSet& s : r.alignment_sets) sets.push_back(detail::msg_set_json(s));
  j["alignment_sets"] = std::move(sets);

  nlohmann::json inv = nlohmann::json::array();
  for (PatternKind k : kAllKinds) {
    nlohmann::json entry;
    entry["kind"] = detail::pattern_kind_name(k);
    nlohmann::json ms = nlohmann::json::array();
    for (const PatternMatch& m : r.patterns)
      if (m.kind == k) ms.push_back(detail::match_json(m));
    entry["count"] = ms.size();
    entry["matches"] = std::move(ms);
    inv.push_back(std::move(entry));
  }
  j["patterns"] = std::move(inv);

  j["certificate"] = detail::certificate_json(r.certificate);
  j["code"] = r.code ? detail::construct_json(*r.code) : nlohmann::json(nullptr);
  j["oracle"] = r.oracle ? detail::oracle_json(*r.oracle) : nlohmann::json(nullptr);
  return j.dump(2) + "\n";
}

std::string report_to_text(const Report& r) {
  std::ostringstream out;
  out << "messages: " << r.n << "\n";
  out << "receivers: " << r.receivers << "\n";
  out << "conflicts (" << r.conflicts.size() << "):";
  for (const auto& pr : r.conflicts) out << " (" << pr.first + 1 << "," << pr.second + 1 << ")";
  out << "\n";
  out << "alignment sets (" << r.alignment_sets.size() << "):";
  for (const MsgSet& s : r.alignment_sets) out << " " << set_text(s);
  out << "\n";
  out << "patterns:\n";
  for (PatternKind k : kAllKinds) {
    out << "  " << detail::pattern_kind_name(k) << ":";
    int count = 0;
    for (const PatternMatch& m : r.patterns)
      if (m.kind == k) {
        out << " " << set_text(m.members);
        ++count;
      }
    if (count == 0) out << " none";
    out << "\n";
  }
  out << "verdict: " << verdict_name(r.certificate.verdict) << "\n";
  if (!r.certificate.reason.empty()) out << "reason: " << r.certificate.reason << "\n";
  if (r.certificate.subject) out << "subject: " << set_text(*r.certificate.subject) << "\n";
  if (r.certificate.conflict)
    out << "conflict: (" << r.certificate.conflict->first + 1 << ","
        << r.certificate.conflict->second + 1 << ")\n";
  if (r.code)
    out << "length-3 code: verified over GF(" << r.code->code.field.q << "), seed "
        << r.code->seed << ", policy " << policy_name(r.code->policy) << ", retries "
        << r.code->retries_used << "\n";
  if (r.oracle) {
    out << "oracle: " << (r.oracle->feasible ? "feasible" : "infeasible") << ", "
        << r.oracle->nodes_explored << " nodes\n";
    if (r.oracle->achievable_dims) {
      for (const auto& [s, ds] : *r.oracle->achievable_dims) {
        out << "  dims " << set_text(s) << ":";
        if (ds.empty()) out << " none";
        for (int d : ds) out << " " << d;
        out << "\n";
      }
    }
  }
  return out.str();
}

}  // namespace ixc
