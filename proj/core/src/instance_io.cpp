#include "moipgb/instance_io.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace moipgb {

namespace {

using nlohmann::json;

Integer to_integer(const json& j, const std::string& where) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Integer(j.get<unsigned long long>())
                                  : Integer(j.get<long long>());
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start) throw InvalidInput(where + ": empty integer string");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw InvalidInput(where + ": not an integer: " + s);
    }
    return Integer(s[0] == '+' ? s.substr(1) : s);
  }
  throw InvalidInput(where + ": expected an integer");
}

IntVec to_vec(const json& j, const std::string& where) {
  if (!j.is_array()) throw InvalidInput(where + ": expected an array");
  IntVec v;
  for (std::size_t i = 0; i < j.size(); ++i) {
    v.push_back(to_integer(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return v;
}

IntMat to_mat(const json& j, const std::string& where) {
  if (!j.is_array()) throw InvalidInput(where + ": expected an array of rows");
  std::vector<IntVec> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    rows.push_back(to_vec(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return IntMat(std::move(rows));
}

json from_integer(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() &&
      x <= std::numeric_limits<long long>::max()) {
    return x.convert_to<long long>();
  }
  return x.str();
}

json from_vec(const IntVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(from_integer(x));
  return a;
}

}  // namespace

MoipInstance parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed instance document: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidInput("instance document must be an object");
  for (const char* key : {"A", "b", "C"}) {
    if (!doc.contains(key)) throw InvalidInput(std::string("missing field \"") + key + "\"");
  }
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const auto& k = it.key();
    if (k != "A" && k != "b" && k != "C" && k != "bounds" && k != "slack_indices" &&
        k != "name") {
      throw InvalidInput("unknown field \"" + k + "\"");
    }
  }
  MoipInstance inst;
  inst.A = to_mat(doc["A"], "A");
  inst.b = to_vec(doc["b"], "b");
  inst.C = to_mat(doc["C"], "C");
  if (doc.contains("bounds") && !doc["bounds"].is_null()) {
    inst.bounds = to_vec(doc["bounds"], "bounds");
  }
  if (doc.contains("slack_indices")) {
    for (const auto& x : to_vec(doc["slack_indices"], "slack_indices")) {
      if (x < 0) throw InvalidInput("negative slack index");
      inst.slack_indices.insert(x.convert_to<std::size_t>());
    }
  }
  require_valid(inst);
  return inst;
}

MoipInstance read_instance(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

MoipInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open instance file " + path);
  return read_instance(in);
}

std::string dump_instance(const MoipInstance& inst) {
  json doc;
  doc["A"] = json::array();
  for (const auto& r : inst.A.row_vectors()) doc["A"].push_back(from_vec(r));
  doc["b"] = from_vec(inst.b);
  doc["C"] = json::array();
  for (const auto& r : inst.C.row_vectors()) doc["C"].push_back(from_vec(r));
  if (inst.bounds) doc["bounds"] = from_vec(*inst.bounds);
  if (!inst.slack_indices.empty()) {
    doc["slack_indices"] = json(std::vector<std::size_t>(inst.slack_indices.begin(),
                                                        inst.slack_indices.end()));
  }
  return doc.dump();
}

IntVec parse_vector(const std::string& text) {
  std::string t = text;
  for (char& c : t) {
    if (c == ',' || c == '(' || c == ')' || c == '[' || c == ']') c = ' ';
  }
  std::istringstream in(t);
  IntVec v;
  std::string tok;
  while (in >> tok) v.push_back(to_integer(json(tok), "vector"));
  if (v.empty()) throw InvalidInput("empty vector: " + text);
  return v;
}

}  // namespace moipgb
