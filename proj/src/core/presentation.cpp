#include "core/presentation.hpp"

#include <map>

#include <json.hpp>

namespace mk {

void QuiverPresentation::validate() const {
  if (!field.is_rational()) check_prime(field.p);
  if (nilpotency_cap < 2) throw Error(ErrorKind::Schema, "nilpotency_cap must be >= 2");
  std::map<std::string, int> vidx;
  for (size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].empty()) throw Error(ErrorKind::Schema, "empty vertex name");
    if (!vidx.emplace(vertices[i], static_cast<int>(i)).second)
      throw Error(ErrorKind::Schema, "duplicate vertex name: " + vertices[i]);
  }
  std::map<std::string, int> aidx;
  for (size_t i = 0; i < arrows.size(); ++i) {
    const Arrow& a = arrows[i];
    if (a.name.empty()) throw Error(ErrorKind::Schema, "empty arrow name");
    if (!aidx.emplace(a.name, static_cast<int>(i)).second)
      throw Error(ErrorKind::Schema, "duplicate arrow name: " + a.name);
    if (a.source < 0 || a.source >= static_cast<int>(vertices.size()) || a.target < 0 ||
        a.target >= static_cast<int>(vertices.size()))
      throw Error(ErrorKind::Schema, "arrow endpoint out of range: " + a.name);
  }
  for (const Relation& rel : relations) {
    if (rel.empty()) throw Error(ErrorKind::Schema, "empty relation");
    int src = -1, tgt = -1;
    for (const RelationTerm& t : rel) {
      if (t.arrows.size() < 2)
        throw Error(ErrorKind::Schema,
                    "NonAdmissible: relation term has a path of length < 2");
      for (size_t k = 0; k < t.arrows.size(); ++k) {
        int ai = t.arrows[k];
        if (ai < 0 || ai >= static_cast<int>(arrows.size()))
          throw Error(ErrorKind::Schema, "relation refers to unknown arrow");
        if (k > 0 && arrows[t.arrows[k - 1]].target != arrows[ai].source)
          throw Error(ErrorKind::Schema, "relation path is not composable");
      }
      int s = arrows[t.arrows.front()].source;
      int g = arrows[t.arrows.back()].target;
      if (src < 0) {
        src = s;
        tgt = g;
      } else if (s != src || g != tgt) {
        throw Error(ErrorKind::Schema, "relation terms must share source and target");
      }
    }
  }
}

namespace {
using nlohmann::json;

int lookup(const std::map<std::string, int>& m, const std::string& key, const char* what) {
  auto it = m.find(key);
  if (it == m.end()) throw Error(ErrorKind::Schema, std::string("unknown ") + what + ": " + key);
  return it->second;
}
}  // namespace

QuiverPresentation parse_presentation(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("JSON parse error: ") + e.what());
  }
  QuiverPresentation p;
  try {
    if (!j.is_object()) throw Error(ErrorKind::Schema, "top level must be an object");
    auto fj = j.at("field");
    std::string kind = fj.at("kind").get<std::string>();
    unsigned long ch = fj.at("characteristic").get<unsigned long>();
    if (kind == "rationals") {
      if (ch != 0) throw Error(ErrorKind::Schema, "rationals require characteristic 0");
      p.field = Field{0};
    } else if (kind == "prime_field") {
      check_prime(ch);
      p.field = Field{ch};
    } else {
      throw Error(ErrorKind::Schema, "field.kind must be rationals or prime_field");
    }
    for (const auto& v : j.at("vertices")) p.vertices.push_back(v.get<std::string>());
    std::map<std::string, int> vidx;
    for (size_t i = 0; i < p.vertices.size(); ++i) vidx[p.vertices[i]] = static_cast<int>(i);
    std::map<std::string, int> aidx;
    if (j.contains("arrows"))
      for (const auto& aj : j.at("arrows")) {
        Arrow a;
        a.name = aj.at("name").get<std::string>();
        a.source = lookup(vidx, aj.at("from").get<std::string>(), "vertex");
        a.target = lookup(vidx, aj.at("to").get<std::string>(), "vertex");
        aidx[a.name] = static_cast<int>(p.arrows.size());
        p.arrows.push_back(a);
      }
    if (j.contains("relations"))
      for (const auto& rj : j.at("relations")) {
        Relation rel;
        for (const auto& tj : rj) {
          RelationTerm t;
          t.coeff = p.field.from_rational(parse_rational(tj.at("coeff").get<std::string>()));
          auto path = tj.at("path");
          // wire format composes right-to-left; store in application order
          for (auto it = path.rbegin(); it != path.rend(); ++it)
            t.arrows.push_back(lookup(aidx, it->get<std::string>(), "arrow"));
          rel.push_back(std::move(t));
        }
        p.relations.push_back(std::move(rel));
      }
    p.nilpotency_cap = j.at("nilpotency_cap").get<int>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Schema, std::string("bad presentation: ") + e.what());
  }
  p.validate();
  return p;
}

std::string presentation_to_json(const QuiverPresentation& p) {
  json j;
  j["field"] = {{"kind", p.field.is_rational() ? "rationals" : "prime_field"},
                {"characteristic", p.field.p}};
  j["vertices"] = p.vertices;
  j["arrows"] = json::array();
  for (const Arrow& a : p.arrows)
    j["arrows"].push_back(
        {{"name", a.name}, {"from", p.vertices[a.source]}, {"to", p.vertices[a.target]}});
  j["relations"] = json::array();
  for (const Relation& rel : p.relations) {
    json rj = json::array();
    for (const RelationTerm& t : rel) {
      json path = json::array();
      for (auto it = t.arrows.rbegin(); it != t.arrows.rend(); ++it)
        path.push_back(p.arrows[*it].name);
      rj.push_back({{"coeff", scalar_str(t.coeff)}, {"path", path}});
    }
    j["relations"].push_back(rj);
  }
  j["nilpotency_cap"] = p.nilpotency_cap;
  return j.dump(2);
}

}  // namespace mk
