#include "cfla/harness/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "cfla/carrier.hpp"
#include "cfla/catalog.hpp"
#include "cfla/harness/checks.hpp"

namespace cfla::harness {

namespace {

using nlohmann::json;

template <typename T, typename Key>
const T* find_named(const std::vector<T>& items, const std::string& name, Key key) {
  auto it = std::find_if(items.begin(), items.end(), [&](const T& x) { return key(x) == name; });
  return it == items.end() ? nullptr : &*it;
}

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw ScenarioError(where + ": missing \"" + key + "\"");
  return obj.at(key);
}

std::string require_string(const json& obj, const char* key, const std::string& where) {
  const auto& v = require(obj, key, where);
  if (!v.is_string()) throw ScenarioError(where + ": \"" + key + "\" must be a string");
  return v.get<std::string>();
}

int require_int(const json& obj, const char* key, const std::string& where) {
  const auto& v = require(obj, key, where);
  if (!v.is_number_integer()) throw ScenarioError(where + ": \"" + key + "\" must be an integer");
  return v.get<int>();
}

std::string rational_text(const json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  throw ScenarioError(where + ": membership components are \"num/den\" strings");
}

Membership parse_value(const json& obj, const std::string& where) {
  try {
    return Membership::parse(rational_text(require(obj, "r", where), where),
                             rational_text(require(obj, "w_over_pi", where), where));
  } catch (const ScenarioError&) {
    throw;
  } catch (const std::exception& e) {
    throw ScenarioError(where + ": " + e.what());
  }
}

std::vector<int> int_list(const json& v, const std::string& where) {
  if (!v.is_array()) throw ScenarioError(where + ": expected an integer array");
  std::vector<int> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) throw ScenarioError(where + ": expected an integer array");
    out.push_back(x.get<int>());
  }
  return out;
}

LieAlgebra parse_algebra(const json& a, std::size_t pos) {
  std::string where = "algebras[" + std::to_string(pos) + "]";
  const auto name = require_string(a, "name", where);
  where = "algebra '" + name + "'";
  try {
    const int p = require_int(a, "field", where);
    if (a.contains("catalog")) {
      auto base = make_catalog_algebra(require_string(a, "catalog", where), p);
      return LieAlgebra(name, base.field(), base.constants());
    }
    const int dim = require_int(a, "dim", where);
    const auto& c = require(a, "constants", where);
    std::vector<std::vector<std::vector<int>>> nested;
    if (!c.is_array()) throw ScenarioError(where + ": \"constants\" must be a dim x dim x dim array");
    for (const auto& plane : c) {
      if (!plane.is_array()) throw ScenarioError(where + ": \"constants\" must be a dim x dim x dim array");
      auto& out = nested.emplace_back();
      for (const auto& row : plane) out.push_back(int_list(row, where + ": constants"));
    }
    auto table = StructureConstants::from_nested(nested);
    if (table.dim() != dim) throw ScenarioError(where + ": \"constants\" do not match dim " + std::to_string(dim));
    const auto verdict = validate_algebra(table, p, dim);
    if (!verdict.ok()) throw ScenarioError(where + ": not a Lie algebra: " + describe(verdict));
    return LieAlgebra(name, FieldPrime(p), std::move(table));
  } catch (const ScenarioError&) {
    throw;
  } catch (const std::exception& e) {
    throw ScenarioError(where + ": " + e.what());
  }
}

NamedSet parse_set(const json& f, std::size_t pos, const Scenario& s) {
  std::string where = "fuzzy_sets[" + std::to_string(pos) + "]";
  const auto name = require_string(f, "name", where);
  where = "fuzzy set '" + name + "'";
  const auto alg = require_string(f, "algebra", where);
  if (!s.has_algebra(alg)) throw ScenarioError(where + ": unknown algebra '" + alg + "'");
  const auto& L = s.algebra(alg);
  try {
    const Carrier C(L);
    const Membership dflt = f.contains("default") ? parse_value(f.at("default"), where + ": default") : Membership::zero();
    std::vector<Membership> values(C.size(), dflt);
    std::vector<bool> seen(C.size(), false);
    if (f.contains("entries")) {
      const auto& entries = f.at("entries");
      if (!entries.is_array()) throw ScenarioError(where + ": \"entries\" must be an array");
      for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto entry_where = where + ": entries[" + std::to_string(i) + "]";
        auto coords = int_list(require(entries[i], "element", entry_where), entry_where + ": element");
        if (static_cast<int>(coords.size()) != L.dim()) {
          throw ScenarioError(entry_where + ": element needs " + std::to_string(L.dim()) + " coordinates");
        }
        for (auto& c : coords) c = L.field().reduce(c);
        const auto idx = C.index_of(Element{coords});
        if (seen[idx]) throw ScenarioError(entry_where + ": duplicate element " + to_string(Element{coords}));
        seen[idx] = true;
        values[idx] = parse_value(entries[i], entry_where);
      }
    }
    return {name, alg, ComplexFuzzySet(C, std::move(values))};
  } catch (const ScenarioError&) {
    throw;
  } catch (const std::exception& e) {
    throw ScenarioError(where + ": " + e.what());
  }
}

LieHom parse_hom(const json& h, std::size_t pos, const Scenario& s) {
  std::string where = "homs[" + std::to_string(pos) + "]";
  const auto name = require_string(h, "name", where);
  where = "hom '" + name + "'";
  const auto src = require_string(h, "source", where);
  const auto dst = require_string(h, "target", where);
  if (!s.has_algebra(src)) throw ScenarioError(where + ": unknown algebra '" + src + "'");
  if (!s.has_algebra(dst)) throw ScenarioError(where + ": unknown algebra '" + dst + "'");
  const auto& S = s.algebra(src);
  const auto& T = s.algebra(dst);
  const auto& m = require(h, "matrix", where);
  if (!m.is_array()) throw ScenarioError(where + ": \"matrix\" must be an array");
  std::vector<std::vector<int>> rows;
  if (!m.empty() && m.front().is_array()) {
    for (const auto& row : m) rows.push_back(int_list(row, where + ": matrix"));
  } else {
    const auto flat = int_list(m, where + ": matrix");
    const auto n = static_cast<std::size_t>(S.dim());
    if (flat.size() != n * static_cast<std::size_t>(T.dim())) {
      throw ScenarioError(where + ": matrix needs " + std::to_string(T.dim()) + " x " + std::to_string(S.dim()) +
                          " entries");
    }
    for (std::size_t i = 0; i < flat.size(); i += n) rows.emplace_back(flat.begin() + static_cast<long>(i), flat.begin() + static_cast<long>(i + n));
  }
  try {
    LieHom phi(name, S, T, std::move(rows));
    const auto v = validate_hom(phi);
    if (!v.result.ok()) throw ScenarioError(where + ": not a homomorphism: " + describe(v.result));
    return phi;
  } catch (const ScenarioError&) {
    throw;
  } catch (const std::exception& e) {
    throw ScenarioError(where + ": " + e.what());
  }
}

CheckSpec parse_check(const json& c, std::size_t pos) {
  const std::string where = "checks[" + std::to_string(pos) + "]";
  CheckSpec spec;
  spec.op = require_string(c, "op", where);
  if (c.contains("args")) {
    const auto& args = c.at("args");
    if (!args.is_array()) throw ScenarioError(where + ": \"args\" must be an array");
    for (const auto& a : args) {
      if (a.is_string()) spec.args.push_back(a.get<std::string>());
      else if (a.is_number_integer()) spec.args.push_back(std::to_string(a.get<std::int64_t>()));
      else throw ScenarioError(where + ": \"args\" entries must be strings");
    }
  }
  if (c.contains("expect")) {
    const auto text = require_string(c, "expect", where);
    spec.expect = parse_verdict(text);
    if (!spec.expect) throw ScenarioError(where + ": unknown verdict '" + text + "'");
  }
  return spec;
}

const json& section(const json& doc, const char* key) {
  static const json empty = json::array();
  if (!doc.contains(key)) return empty;
  const auto& v = doc.at(key);
  if (!v.is_array()) throw ScenarioError(std::string("\"") + key + "\" must be an array");
  return v;
}

}  // namespace

const LieAlgebra& Scenario::algebra(const std::string& name) const {
  if (auto* a = find_named(algebras, name, [](const LieAlgebra& x) -> const std::string& { return x.name(); })) return *a;
  throw ScenarioError("unknown algebra '" + name + "'");
}

const NamedSet& Scenario::fuzzy_set(const std::string& name) const {
  if (auto* f = find_named(fuzzy_sets, name, [](const NamedSet& x) -> const std::string& { return x.name; })) return *f;
  throw ScenarioError("unknown fuzzy set '" + name + "'");
}

const LieHom& Scenario::hom(const std::string& name) const {
  if (auto* h = find_named(homs, name, [](const LieHom& x) -> const std::string& { return x.name(); })) return *h;
  throw ScenarioError("unknown hom '" + name + "'");
}

bool Scenario::has_algebra(const std::string& name) const {
  return find_named(algebras, name, [](const LieAlgebra& x) -> const std::string& { return x.name(); }) != nullptr;
}
bool Scenario::has_fuzzy_set(const std::string& name) const {
  return find_named(fuzzy_sets, name, [](const NamedSet& x) -> const std::string& { return x.name; }) != nullptr;
}
bool Scenario::has_hom(const std::string& name) const {
  return find_named(homs, name, [](const LieHom& x) -> const std::string& { return x.name(); }) != nullptr;
}

void Scenario::add_algebra(const LieAlgebra& L) {
  if (has_algebra(L.name())) {
    const auto& existing = algebra(L.name());
    if (existing.p() != L.p() || !(existing.constants() == L.constants())) {
      throw ScenarioError("algebra '" + L.name() + "' is defined twice with different tables");
    }
    return;
  }
  algebras.push_back(L);
}

void Scenario::add_fuzzy_set(std::string name, const LieAlgebra& L, ComplexFuzzySet set) {
  if (has_fuzzy_set(name)) throw ScenarioError("fuzzy set '" + name + "' is defined twice");
  if (set.p() != L.p() || set.dim() != L.dim()) throw ScenarioError("fuzzy set '" + name + "' does not live on '" + L.name() + "'");
  add_algebra(L);
  fuzzy_sets.push_back({std::move(name), L.name(), std::move(set)});
}

void Scenario::add_hom(const LieHom& phi) {
  if (has_hom(phi.name())) throw ScenarioError("hom '" + phi.name() + "' is defined twice");
  add_algebra(phi.source());
  add_algebra(phi.target());
  homs.push_back(phi);
}

Scenario parse_scenario(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ScenarioError("scenario must be a JSON object");
  Scenario s;
  const auto& algebras = section(doc, "algebras");
  for (std::size_t i = 0; i < algebras.size(); ++i) {
    auto L = parse_algebra(algebras[i], i);
    if (s.has_algebra(L.name())) throw ScenarioError("algebra '" + L.name() + "' is defined twice");
    s.algebras.push_back(std::move(L));
  }
  const auto& sets = section(doc, "fuzzy_sets");
  for (std::size_t i = 0; i < sets.size(); ++i) {
    auto f = parse_set(sets[i], i, s);
    if (s.has_fuzzy_set(f.name)) throw ScenarioError("fuzzy set '" + f.name + "' is defined twice");
    s.fuzzy_sets.push_back(std::move(f));
  }
  const auto& homs = section(doc, "homs");
  for (std::size_t i = 0; i < homs.size(); ++i) {
    auto h = parse_hom(homs[i], i, s);
    if (s.has_hom(h.name())) throw ScenarioError("hom '" + h.name() + "' is defined twice");
    s.homs.push_back(std::move(h));
  }
  const auto& checks = section(doc, "checks");
  for (std::size_t i = 0; i < checks.size(); ++i) {
    auto c = parse_check(checks[i], i);
    try {
      validate_check(s, c);
    } catch (const std::exception& e) {
      throw ScenarioError("checks[" + std::to_string(i) + "] (" + c.op + "): " + e.what());
    }
    s.checks.push_back(std::move(c));
  }
  return s;
}

Scenario parse_scenario_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ScenarioError(e.what());
  }
  return parse_scenario(doc);
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot open scenario '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_scenario_text(buf.str());
  } catch (const ScenarioError& e) {
    throw ScenarioError(path.string() + ": " + e.what());
  }
}

ordered_json to_json(const Membership& m) {
  ordered_json j;
  j["r"] = format_rational(m.r());
  j["w_over_pi"] = format_rational(m.w_over_pi());
  return j;
}

ordered_json to_json(const Element& e) { return ordered_json(e.coords); }

ordered_json to_json(const Witness& w) {
  ordered_json j;
  j["condition"] = w.condition;
  auto elems = ordered_json::array();
  for (const auto& e : w.elements) elems.push_back(to_json(e));
  j["elements"] = std::move(elems);
  if (w.scalar) j["scalar"] = *w.scalar;
  auto vals = ordered_json::array();
  for (const auto& v : w.values) vals.push_back(to_json(v));
  j["values"] = std::move(vals);
  if (!w.indices.empty()) j["indices"] = w.indices;
  if (!w.detail.empty()) j["detail"] = w.detail;
  return j;
}

ordered_json to_json(const CheckResult& r) {
  ordered_json j;
  j["verdict"] = std::string(to_string(r.verdict));
  if (r.witness) j["witness"] = to_json(*r.witness);
  return j;
}

ordered_json to_json(const Scenario& s) {
  ordered_json doc;
  auto algebras = ordered_json::array();
  for (const auto& L : s.algebras) {
    ordered_json a;
    a["name"] = L.name();
    a["field"] = L.p();
    a["dim"] = L.dim();
    a["constants"] = L.constants().nested();
    algebras.push_back(std::move(a));
  }
  doc["algebras"] = std::move(algebras);

  auto sets = ordered_json::array();
  for (const auto& f : s.fuzzy_sets) {
    const auto& L = s.algebra(f.algebra);
    const Carrier C(L);
    std::vector<std::pair<Membership, std::size_t>> counts;
    for (const auto& v : f.set.values()) {
      auto it = std::find_if(counts.begin(), counts.end(), [&](const auto& c) { return c.first == v; });
      if (it == counts.end()) counts.emplace_back(v, 1);
      else ++it->second;
    }
    Membership dflt = counts.empty() ? Membership::zero() : counts.front().first;
    std::size_t best = 0;
    for (const auto& [v, n] : counts) {
      if (n > best) {
        best = n;
        dflt = v;
      }
    }
    ordered_json j;
    j["name"] = f.name;
    j["algebra"] = f.algebra;
    j["default"] = to_json(dflt);
    auto entries = ordered_json::array();
    for (std::size_t i = 0; i < C.size(); ++i) {
      if (f.set[i] == dflt) continue;
      ordered_json e;
      e["element"] = to_json(C.element(i));
      e["r"] = format_rational(f.set[i].r());
      e["w_over_pi"] = format_rational(f.set[i].w_over_pi());
      entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    sets.push_back(std::move(j));
  }
  doc["fuzzy_sets"] = std::move(sets);

  auto homs = ordered_json::array();
  for (const auto& h : s.homs) {
    ordered_json j;
    j["name"] = h.name();
    j["source"] = h.source().name();
    j["target"] = h.target().name();
    j["matrix"] = h.matrix();
    homs.push_back(std::move(j));
  }
  doc["homs"] = std::move(homs);

  auto checks = ordered_json::array();
  for (const auto& c : s.checks) {
    ordered_json j;
    j["op"] = c.op;
    j["args"] = c.args;
    if (c.expect) j["expect"] = std::string(to_string(*c.expect));
    checks.push_back(std::move(j));
  }
  doc["checks"] = std::move(checks);
  return doc;
}

void write_scenario(const Scenario& s, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ScenarioError("cannot write '" + path.string() + "'");
  out << to_json(s).dump(2) << '\n';
  if (!out) throw ScenarioError("write to '" + path.string() + "' failed");
}

}  // namespace cfla::harness
