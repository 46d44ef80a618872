#pragma once

#include "globk/error.hpp"
#include "globk/globular_set.hpp"
#include "globk/omega.hpp"
#include "globk/report.hpp"
#include "globk/testcat.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace globk {

using Json = nlohmann::json;

/// Splits "u|v" at the single '|' outside parentheses, so generated names
/// such as "(a|b)|(c|d)" survive.
inline std::pair<std::string, std::string> split_pair_key(const std::string& key) {
  int depth = 0;
  std::size_t cut = std::string::npos;
  for (std::size_t p = 0; p < key.size(); ++p) {
    char ch = key[p];
    if (ch == '(') ++depth;
    else if (ch == ')') --depth;
    else if (ch == '|' && depth == 0) {
      if (cut != std::string::npos) fail(ErrorKind::ParseError, "ambiguous pair key '" + key + "'");
      cut = p;
    }
  }
  if (cut == std::string::npos) fail(ErrorKind::ParseError, "pair key '" + key + "' has no top-level '|'");
  return {key.substr(0, cut), key.substr(cut + 1)};
}

inline std::pair<Dim, Dim> split_index_key(const std::string& key) {
  Dim i = 0, j = 0;
  char comma = 0;
  std::istringstream in(key);
  if (!(in >> i >> comma >> j) || comma != ',' || !in.eof())
    fail(ErrorKind::ParseError, "operation key '" + key + "' is not of the form \"i,j\"");
  return {i, j};
}

namespace detail {

/// Runs fn and rewraps library type errors as ParseError at `where`.
template <class F>
auto at_path(const std::string& where, F&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, where + ": " + e.what());
  }
}

inline const Json& member(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) fail(ErrorKind::ParseError, where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(ErrorKind::ParseError, where + ": missing \"" + key + "\"");
  return *it;
}

inline CellId cell_id(const GlobularSet& b, Dim d, const std::string& name, const std::string& where) {
  auto id = b.find(d, name);
  if (!id) fail(ErrorKind::MissingCell, where + ": no cell '" + name + "' in dimension " + std::to_string(d));
  return *id;
}

}  // namespace detail

inline RawGlobularSet raw_globular_from_json(const Json& j) {
  RawGlobularSet raw;
  raw.truncation = detail::at_path("/truncation", [&] { return detail::member(j, "truncation", "/").get<Dim>(); });
  raw.cells = detail::at_path("/cells", [&] {
    return detail::member(j, "cells", "/").get<std::vector<std::vector<std::string>>>();
  });
  raw.src = detail::at_path("/src", [&] {
    return detail::member(j, "src", "/").get<std::vector<std::map<std::string, std::string>>>();
  });
  raw.tgt = detail::at_path("/tgt", [&] {
    return detail::member(j, "tgt", "/").get<std::vector<std::map<std::string, std::string>>>();
  });
  return raw;
}

inline GlobularSet globular_from_json(const Json& j) { return validate_globular_set(raw_globular_from_json(j)); }

inline Json to_json(const GlobularSet& b) {
  Json j;
  j["truncation"] = b.truncation();
  j["cells"] = Json::array();
  for (Dim d = 0; d <= b.truncation(); ++d) j["cells"].push_back(b.names(d));
  j["src"] = Json::array();
  j["tgt"] = Json::array();
  for (Dim d = 1; d <= b.truncation(); ++d) {
    Json s = Json::object(), t = Json::object();
    for (CellId u = 0; u < b.size(d); ++u) {
      s[b.name(d, u)] = b.name(d - 1, b.src(d, u));
      t[b.name(d, u)] = b.name(d - 1, b.tgt(d, u));
    }
    j["src"].push_back(std::move(s));
    j["tgt"].push_back(std::move(t));
  }
  return j;
}

inline OmegaStructure omega_from_json(const Json& j) {
  GlobularSet base = globular_from_json(j);
  const Dim n = base.truncation();
  const bool with_inv = j.is_object() && j.contains("inv");
  auto t = OmegaTables::blank(base, with_inv);
  const auto& b = t.base;

  const Json& comp = detail::member(j, "comp", "/");
  if (!comp.is_object()) fail(ErrorKind::ParseError, "/comp: expected an object");
  for (const auto& [key, table] : comp.items()) {
    const std::string where = "/comp/" + key;
    auto [i, jj] = split_index_key(key);
    if (!(i > jj && jj >= 0 && i <= n)) fail(ErrorKind::DimOutOfRange, where + ": index outside truncation");
    if (!table.is_object()) fail(ErrorKind::ParseError, where + ": expected an object");
    for (const auto& [pair, value] : table.items()) {
      auto [u, v] = split_pair_key(pair);
      auto w = detail::at_path(where + "/" + pair, [&] { return value.get<std::string>(); });
      CellId cu = detail::cell_id(b, i, u, where), cv = detail::cell_id(b, i, v, where);
      t.comp_at(i, jj, cu, cv) = detail::cell_id(b, i, w, where);
    }
  }

  const Json& unit = detail::member(j, "unit", "/");
  if (!unit.is_array() || unit.size() != static_cast<std::size_t>(n))
    fail(ErrorKind::ParseError, "/unit: expected " + std::to_string(n) + " tables");
  for (Dim i = 0; i < n; ++i) {
    const std::string where = "/unit/" + std::to_string(i);
    auto table = detail::at_path(where, [&] { return unit[i].get<std::map<std::string, std::string>>(); });
    for (const auto& [u, v] : table) t.unit[i][detail::cell_id(b, i, u, where)] = detail::cell_id(b, i + 1, v, where);
  }

  if (with_inv) {
    const Json& inv = j["inv"];
    if (!inv.is_object()) fail(ErrorKind::ParseError, "/inv: expected an object");
    for (const auto& [key, table] : inv.items()) {
      const std::string where = "/inv/" + key;
      auto [i, jj] = split_index_key(key);
      if (!(i > jj && jj >= 0 && i <= n)) fail(ErrorKind::DimOutOfRange, where + ": index outside truncation");
      auto entries = detail::at_path(where, [&] { return table.get<std::map<std::string, std::string>>(); });
      for (const auto& [u, v] : entries)
        (*t.inv)[i][jj][detail::cell_id(b, i, u, where)] = detail::cell_id(b, i, v, where);
    }
  }
  return OmegaStructure(std::move(t));
}

inline Json to_json(const OmegaStructure& x) {
  Json j = to_json(x.base());
  const Dim n = x.truncation();
  j["comp"] = Json::object();
  for (Dim i = 1; i <= n; ++i)
    for (Dim jj = 0; jj < i; ++jj) {
      Json table = Json::object();
      for (CellId u = 0; u < x.size(i); ++u)
        for (CellId v = 0; v < x.size(i); ++v) {
          CellId w = x.try_compose(i, jj, u, v);
          if (w != kNoCell) table[x.name(i, u) + "|" + x.name(i, v)] = x.name(i, w);
        }
      j["comp"][std::to_string(i) + "," + std::to_string(jj)] = std::move(table);
    }
  j["unit"] = Json::array();
  for (Dim i = 0; i < n; ++i) {
    Json table = Json::object();
    for (CellId u = 0; u < x.size(i); ++u) table[x.name(i, u)] = x.name(i + 1, x.unit(i, u));
    j["unit"].push_back(std::move(table));
  }
  if (x.has_inverses()) {
    j["inv"] = Json::object();
    for (Dim i = 1; i <= n; ++i)
      for (Dim jj = 0; jj < i; ++jj) {
        Json table = Json::object();
        for (CellId u = 0; u < x.size(i); ++u) table[x.name(i, u)] = x.name(i, x.inverse(i, jj, u));
        j["inv"][std::to_string(i) + "," + std::to_string(jj)] = std::move(table);
      }
  }
  return j;
}

inline Json to_json(const Report& r) {
  Json out = Json::array();
  for (const auto& e : r.entries())
    out.push_back({{"check", e.check},
                   {"scope", e.scope},
                   {"status", e.status == Status::Pass ? "PASS" : "FAIL"},
                   {"witness", e.witness}});
  return out;
}

inline Report report_from_json(const Json& j) {
  if (!j.is_array()) fail(ErrorKind::ParseError, "report: expected an array");
  Report r;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string where = "/" + std::to_string(k);
    detail::at_path(where, [&] {
      const auto status = j[k].at("status").get<std::string>();
      if (status != "PASS" && status != "FAIL") fail(ErrorKind::ParseError, where + ": bad status '" + status + "'");
      r.add({j[k].at("check").get<std::string>(), j[k].at("scope").get<std::string>(),
             status == "PASS" ? Status::Pass : Status::Fail, j[k].at("witness").get<std::string>()});
      return 0;
    });
  }
  return r;
}

inline Json to_json(const SmallCategory& c) {
  Json j;
  j["objects"] = c.objects();
  j["arrows"] = Json::array();
  for (const auto& a : c.arrows()) j["arrows"].push_back({{"name", a.name}, {"dom", c.objects()[a.dom]}, {"cod", c.objects()[a.cod]}});
  j["identities"] = Json::object();
  for (std::size_t o = 0; o < c.object_count(); ++o) j["identities"][c.objects()[o]] = c.arrow(c.identity(o)).name;
  j["comp"] = Json::object();
  for (std::size_t g = 0; g < c.arrow_count(); ++g)
    for (std::size_t f : c.into(c.arrow(g).dom)) j["comp"][c.arrow(g).name + "|" + c.arrow(f).name] = c.arrow(c.compose(g, f)).name;
  return j;
}

inline CategoryPtr category_from_json(const Json& j) {
  return detail::at_path("category", [&] {
    auto objects = detail::member(j, "objects", "/").get<std::vector<std::string>>();
    std::map<std::string, std::size_t> obj_index, arrow_index;
    for (std::size_t o = 0; o < objects.size(); ++o)
      if (!obj_index.emplace(objects[o], o).second) fail(ErrorKind::InvalidStructure, "duplicate object '" + objects[o] + "'");
    auto object = [&](const std::string& name) {
      auto it = obj_index.find(name);
      if (it == obj_index.end()) fail(ErrorKind::MissingCell, "no object '" + name + "'");
      return it->second;
    };
    std::vector<Arrow> arrows;
    for (const auto& a : detail::member(j, "arrows", "/")) {
      arrows.push_back({a.at("name").get<std::string>(), object(a.at("dom").get<std::string>()),
                        object(a.at("cod").get<std::string>())});
      if (!arrow_index.emplace(arrows.back().name, arrows.size() - 1).second)
        fail(ErrorKind::InvalidStructure, "duplicate arrow '" + arrows.back().name + "'");
    }
    auto arrow = [&](const std::string& name) {
      auto it = arrow_index.find(name);
      if (it == arrow_index.end()) fail(ErrorKind::MissingCell, "no arrow '" + name + "'");
      return it->second;
    };
    auto id_names = detail::member(j, "identities", "/").get<std::map<std::string, std::string>>();
    std::vector<std::size_t> ids(objects.size(), kNoArrow);
    for (const auto& [o, a] : id_names) ids[object(o)] = arrow(a);
    for (std::size_t o = 0; o < objects.size(); ++o)
      if (ids[o] == kNoArrow) fail(ErrorKind::MissingCell, "no identity for '" + objects[o] + "'");
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> comp;
    for (const auto& [key, value] : detail::member(j, "comp", "/").get<std::map<std::string, std::string>>()) {
      auto [g, f] = split_pair_key(key);
      comp[{arrow(g), arrow(f)}] = arrow(value);
    }
    return std::make_shared<const SmallCategory>(std::move(objects), std::move(arrows), std::move(ids),
                                                 [&](std::size_t g, std::size_t f) {
                                                   auto it = comp.find({g, f});
                                                   return it == comp.end() ? kNoArrow : it->second;
                                                 });
  });
}

inline Json to_json(const Presheaf& f) {
  const auto& c = f.base();
  Json j;
  j["category"] = to_json(c);
  j["values"] = Json::object();
  for (std::size_t o = 0; o < c.object_count(); ++o) j["values"][c.objects()[o]] = f.values(o);
  j["action"] = Json::object();
  for (std::size_t g = 0; g < c.arrow_count(); ++g) {
    const auto& a = c.arrow(g);
    Json table = Json::object();
    for (std::size_t x = 0; x < f.values(a.cod).size(); ++x) table[f.values(a.cod)[x]] = f.values(a.dom)[f.act(g, x)];
    j["action"][a.name] = std::move(table);
  }
  return j;
}

inline Presheaf presheaf_from_json(const Json& j) {
  CategoryPtr c = category_from_json(detail::member(j, "category", "/"));
  return detail::at_path("presheaf", [&] {
    auto value_names = detail::member(j, "values", "/").get<std::map<std::string, std::vector<std::string>>>();
    std::vector<std::vector<std::string>> values(c->object_count());
    for (const auto& [o, vs] : value_names) {
      auto id = c->find_object(o);
      if (!id) fail(ErrorKind::MissingCell, "values for unknown object '" + o + "'");
      values[*id] = vs;
    }
    auto action_names = detail::member(j, "action", "/").get<std::map<std::string, std::map<std::string, std::string>>>();
    std::vector<std::vector<std::size_t>> action(c->arrow_count());
    auto index = [&](std::size_t o, const std::string& v) {
      const auto& vs = values[o];
      auto it = std::find(vs.begin(), vs.end(), v);
      if (it == vs.end()) fail(ErrorKind::MissingCell, "no element '" + v + "' over '" + c->objects()[o] + "'");
      return static_cast<std::size_t>(it - vs.begin());
    };
    for (std::size_t g = 0; g < c->arrow_count(); ++g) {
      const auto& a = c->arrow(g);
      auto it = action_names.find(a.name);
      if (it == action_names.end()) fail(ErrorKind::MissingCell, "no action for '" + a.name + "'");
      action[g].assign(values[a.cod].size(), kNoArrow);
      for (const auto& [from, to] : it->second) action[g][index(a.cod, from)] = index(a.dom, to);
      for (std::size_t v : action[g])
        if (v == kNoArrow) fail(ErrorKind::MissingCell, "action of '" + a.name + "' is not total");
    }
    return Presheaf(c, std::move(values), std::move(action));
  });
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::ParseError, path + ": " + e.what());
  }
}

inline void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::ParseError, "cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

}  // namespace globk
