#include <string>

#include "ixc/problem.hpp"
#include "json.hpp"

namespace ixc {

namespace {

using nlohmann::json;

MsgSet parse_msg_set(const json& arr, const char* what) {
  if (!arr.is_array()) throw SchemaError(std::string(what) + " must be an array");
  std::vector<Msg> v;
  for (const json& e : arr) {
    if (!e.is_number_integer()) throw SchemaError(std::string(what) + " entries must be integers");
    v.push_back(e.get<int>() - 1);
  }
  return make_set(std::move(v));
}

json msg_set_to_json(const MsgSet& s) {
  json arr = json::array();
  for (Msg m : s) arr.push_back(m + 1);
  return arr;
}

}  // namespace

Problem parse_instance(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("instance must be a JSON object");
  if (!doc.contains("n") || !doc["n"].is_number_integer())
    throw SchemaError("missing or non-integer \"n\"");
  int n = doc["n"].get<int>();

  std::optional<uint32_t> field_hint;
  if (doc.contains("field")) {
    const json& f = doc["field"];
    if (!f.is_object() || !f.contains("q") || !f["q"].is_number_integer())
      throw SchemaError("\"field\" must be an object with integer \"q\"");
    int q = f["q"].get<int>();
    if (q < 2) throw SchemaError("field order must be at least 2");
    field_hint = static_cast<uint32_t>(q);
  }

  if (!doc.contains("receivers") || !doc["receivers"].is_array())
    throw SchemaError("missing or non-array \"receivers\"");
  std::vector<Receiver> receivers;
  for (const json& r : doc["receivers"]) {
    if (!r.is_object()) throw SchemaError("receiver entries must be objects");
    if (!r.contains("demands")) throw SchemaError("receiver missing \"demands\"");
    Receiver rec;
    rec.demands = parse_msg_set(r["demands"], "\"demands\"");
    if (r.contains("side_info")) rec.side_info = parse_msg_set(r["side_info"], "\"side_info\"");
    receivers.push_back(std::move(rec));
  }
  return make_problem(n, std::move(receivers), field_hint);
}

std::string instance_to_json(const Problem& p) {
  json doc;
  doc["n"] = p.n;
  if (p.field_hint) doc["field"] = json{{"q", *p.field_hint}};
  json recs = json::array();
  for (const Receiver& r : p.receivers) {
    json jr;
    jr["demands"] = msg_set_to_json(r.demands);
    jr["side_info"] = msg_set_to_json(r.side_info);
    recs.push_back(std::move(jr));
  }
  doc["receivers"] = std::move(recs);
  return doc.dump(2) + "\n";
}

}  // namespace ixc
