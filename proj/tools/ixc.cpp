#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "ixc/code.hpp"
#include "ixc/contraction.hpp"
#include "ixc/dot.hpp"
#include "ixc/encoder.hpp"
#include "ixc/errors.hpp"
#include "ixc/gf.hpp"
#include "ixc/inference.hpp"
#include "ixc/oracle.hpp"
#include "ixc/problem.hpp"
#include "ixc/report.hpp"
#include "json.hpp"

namespace {

using namespace ixc;

// Stable machine interface; see README for the table.
constexpr int kOk = 0;
constexpr int kBadInput = 1;
constexpr int kInfeasible = 2;
constexpr int kInconclusive = 3;
constexpr int kRetryExhausted = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot read instance file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Problem load_problem(const std::string& path) { return parse_instance(read_file(path)); }

std::vector<ContractionPolicy> parse_policies(const std::string& csv) {
  std::vector<ContractionPolicy> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto p = policy_from_name(item);
    if (!p) throw SchemaError("unknown contraction policy: " + item);
    out.push_back(*p);
  }
  if (out.empty()) throw SchemaError("no contraction policy given");
  return out;
}

// "2,3,5" is one subset; semicolons separate subsets: "1,2,3;2,4,5".
std::vector<MsgSet> parse_subsets(const std::string& text) {
  std::vector<MsgSet> out;
  std::stringstream groups(text);
  std::string group;
  while (std::getline(groups, group, ';')) {
    MsgSet s;
    std::stringstream ss(group);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        size_t used = 0;
        int label = std::stoi(item, &used);
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
        if (used != item.size()) throw std::invalid_argument(item);
        if (label < 1) throw std::invalid_argument(item);
        s.push_back(label - 1);
      } catch (const std::exception&) {
        throw SchemaError("subsets must be comma-separated 1-based labels, got: " + item);
      }
    }
    if (s.empty()) throw SchemaError("empty subset in --subsets");
    out.push_back(make_set(std::move(s)));
  }
  if (out.empty()) throw SchemaError("no subsets given");
  return out;
}

std::string set_text(const MsgSet& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i] + 1);
  }
  return out + "}";
}

/// Collects the command's artifact and delivers it once, appending wall time
/// only when that was explicitly requested (it breaks byte-level replay).
class Emitter {
 public:
  Emitter() : start_(std::chrono::steady_clock::now()) {}

  bool text = false;
  bool timing = false;
  std::string out_path;

  void deliver_json(nlohmann::json j) const {
    if (timing) j["wall_ms"] = elapsed_ms();
    write(j.dump(2) + "\n");
  }

  void deliver_text(std::string body) const {
    if (timing) body += "wall ms: " + std::to_string(elapsed_ms()) + "\n";
    write(body);
  }

  void deliver_raw(const std::string& body) const { write(body); }

 private:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

  void write(const std::string& body) const {
    if (out_path.empty()) {
      std::cout << body;
      return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw SchemaError("cannot write output file: " + out_path);
    out << body;
  }

  std::chrono::steady_clock::time_point start_;
};

int run_analyze(const std::string& path, const Emitter& em, uint32_t q, uint64_t seed, int retries,
                const std::string& policies) {
  Problem p = load_problem(path);
  AnalyzeOptions opts;
  opts.construction.field = Field::of(q);
  opts.construction.seed = seed;
  opts.construction.max_retries = retries;
  opts.construction.policies = parse_policies(policies);
  Report r = analyze(p, opts);

  if (em.text)
    em.deliver_text(report_to_text(r));
  else
    em.deliver_json(nlohmann::json::parse(report_to_json(r)));

  switch (r.certificate.verdict) {
    case Verdict::Rate1Feasible:
    case Verdict::RateHalfFeasible: return kOk;
    case Verdict::RateThirdInfeasible: return kInfeasible;
    case Verdict::Inconclusive: return r.code ? kOk : kInconclusive;
  }
  return kInconclusive;
}

int run_construct(const std::string& path, const Emitter& em, uint32_t q, uint64_t seed,
                  int retries, const std::string& policies) {
  Problem p = load_problem(path);
  ConstructOptions opts;
  opts.field = Field::of(q);
  opts.seed = seed;
  opts.max_retries = retries;
  opts.policies = parse_policies(policies);
  ConstructResult r = construct_length3_code(p, opts);
  size_t violations = verify_code(p, r.code).size();

  if (em.text) {
    std::ostringstream out;
    out << "length-3 code over GF(" << r.code.field.q << "), seed " << r.seed << ", policy "
        << policy_name(r.policy) << ", retries " << r.retries_used << "\n";
    out << "verified: " << (violations == 0 ? "yes" : "NO") << "\n";
    for (size_t m = 0; m < r.code.vectors.size(); ++m) {
      out << "  " << m + 1 << ":";
      for (int i = 0; i < r.code.vectors[m].size(); ++i) out << " " << r.code.vectors[m][i];
      out << "\n";
    }
    em.deliver_text(out.str());
  } else {
    nlohmann::json j = nlohmann::json::parse(construct_result_to_json(r));
    j["verified"] = violations == 0;
    em.deliver_json(std::move(j));
  }
  return violations == 0 ? kOk : kBadInput;
}

int run_oracle(const std::string& path, const Emitter& em, uint32_t q, int L,
               const std::string& subsets, long long budget, int threads) {
  Problem p = load_problem(path);
  OracleOptions opts;
  opts.field = Field::of(q);
  opts.budget = budget;
  opts.threads = threads;

  OracleResult r = subsets.empty() ? feasible_rate(p, L, opts)
                                   : classify_subset_dims(p, parse_subsets(subsets), L, opts);

  if (em.text) {
    std::ostringstream out;
    out << "L: " << L << "\n";
    out << "q: " << q << "\n";
    out << "feasible: " << (r.feasible ? "yes" : "no") << "\n";
    out << "nodes: " << r.nodes_explored << "\n";
    if (r.witness) out << "witness: present\n";
    if (r.achievable_dims) {
      for (const auto& [s, ds] : *r.achievable_dims) {
        out << "dims " << set_text(s) << ":";
        if (ds.empty()) out << " none";
        for (int d : ds) out << " " << d;
        out << "\n";
      }
      if (r.vacuous) out << "vacuous: yes\n";
    }
    em.deliver_text(out.str());
  } else {
    nlohmann::json j = nlohmann::json::parse(oracle_result_to_json(r));
    j["L"] = L;
    j["q"] = q;
    em.deliver_json(std::move(j));
  }

  if (r.achievable_dims) return r.vacuous ? kInfeasible : kOk;
  return r.feasible ? kOk : kInfeasible;
}

int run_contract(const std::string& path, const Emitter& em, uint64_t seed,
                 const std::string& policies) {
  Problem p = load_problem(path);
  ContractionPolicy policy = parse_policies(policies).front();
  auto [pc, cm] = maximal_contraction(p, policy, seed);

  if (em.text) {
    std::ostringstream out;
    out << "contracted " << cm.source_n << " messages to " << cm.target_n << " in "
        << cm.history.size() << " steps (policy " << policy_name(policy) << ", seed " << seed
        << ")\n";
    out << "forward:";
    for (Msg m : cm.forward) out << " " << m + 1;
    out << "\n";
    em.deliver_text(out.str());
  } else {
    nlohmann::json j;
    j["instance"] = nlohmann::json::parse(instance_to_json(pc));
    j["map"] = nlohmann::json::parse(contraction_map_to_json(cm));
    j["policy"] = policy_name(policy);
    j["seed"] = seed;
    em.deliver_json(std::move(j));
  }
  return kOk;
}

int run_export_dot(const std::string& path, const Emitter& em) {
  em.deliver_raw(problem_to_dot(load_problem(path)));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analyze groupcast index coding instances for rate-1/3 feasibility"};
  app.require_subcommand(1);

  std::string instance;
  std::string out_path;
  bool text = false;
  bool timing = false;
  uint32_t q_construct = 101;
  uint32_t q_oracle = 2;
  int L = 3;
  uint64_t seed = 0;
  int retries = 32;
  std::string policies = "lexicographic,seeded-random";
  std::string subsets;
  long long budget = 1'000'000'000;
  int threads = 1;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("instance", instance, "Instance JSON file")->required();
    cmd->add_option("--out", out_path, "Write the result to this file instead of stdout");
  };
  auto add_text_timing = [&](CLI::App* cmd) {
    cmd->add_flag("--text", text, "Human-readable output instead of JSON");
    cmd->add_flag("--timing", timing, "Append wall time (breaks byte-identical replay)");
  };

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Detect patterns and derive a verdict");
  add_common(analyze_cmd);
  add_text_timing(analyze_cmd);
  analyze_cmd->add_option("--q", q_construct, "Field order for the construction attempt");
  analyze_cmd->add_option("--seed", seed, "Construction seed");
  analyze_cmd->add_option("--retries", retries, "Construction retry cap");
  analyze_cmd->add_option("--policies", policies, "Comma-separated contraction policies");

  CLI::App* construct_cmd = app.add_subcommand("construct", "Build a verified length-3 code");
  add_common(construct_cmd);
  add_text_timing(construct_cmd);
  construct_cmd->add_option("--q", q_construct, "Field order");
  construct_cmd->add_option("--seed", seed, "Assignment seed");
  construct_cmd->add_option("--retries", retries, "Retry cap per contraction");
  construct_cmd->add_option("--policies", policies, "Comma-separated contraction policies");

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "Exhaustive feasibility search");
  add_common(oracle_cmd);
  add_text_timing(oracle_cmd);
  oracle_cmd->add_option("--q", q_oracle, "Field order (2, 3, or 5)");
  oracle_cmd->add_option("--L", L, "Code length (1..4)");
  oracle_cmd->add_option("--subsets", subsets,
                         "Classify span dimensions: \"1,2,3\" or \"1,2,3;2,4,5\"");
  oracle_cmd->add_option("--budget", budget, "Node budget");
  oracle_cmd->add_option("--threads", threads, "Worker cap for classification");

  CLI::App* contract_cmd = app.add_subcommand("contract", "Maximally contract alignment edges");
  add_common(contract_cmd);
  add_text_timing(contract_cmd);
  contract_cmd->add_option("--seed", seed, "Policy seed");
  contract_cmd->add_option("--policies", policies, "Policy (first name is used)");

  CLI::App* dot_cmd = app.add_subcommand("export-dot", "Render the interference structure as DOT");
  add_common(dot_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kBadInput;
  }

  Emitter em;
  em.text = text;
  em.timing = timing;
  em.out_path = out_path;

  try {
    if (app.got_subcommand(analyze_cmd))
      return run_analyze(instance, em, q_construct, seed, retries, policies);
    if (app.got_subcommand(construct_cmd))
      return run_construct(instance, em, q_construct, seed, retries, policies);
    if (app.got_subcommand(oracle_cmd))
      return run_oracle(instance, em, q_oracle, L, subsets, budget, threads);
    if (app.got_subcommand(contract_cmd)) return run_contract(instance, em, seed, policies);
    if (app.got_subcommand(dot_cmd)) return run_export_dot(instance, em);
  } catch (const RetryExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRetryExhausted;
  } catch (const NoQualifyingContraction& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInconclusive;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInconclusive;
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
