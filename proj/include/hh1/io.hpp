#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "models.hpp"

namespace hh1 {

using json = nlohmann::json;

// Malformed or inconsistent input data.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline json vec_json(const Vec& v) { return json(v); }

inline json vecs_json(const std::vector<Vec>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(v);
  return a;
}

inline const json& field_of(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline std::size_t index_of(const json& j, std::size_t bound, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0 || static_cast<std::size_t>(j.get<long long>()) >= bound)
    throw InputError(std::string(what) + " out of range");
  return static_cast<std::size_t>(j.get<long long>());
}

inline Elem scalar_of(const json& j, const Field& F) {
  if (!j.is_number_integer()) throw InputError("scalar is not an integer");
  const long long v = j.get<long long>();
  if (v < 0 || v >= static_cast<long long>(F.p())) throw InputError("scalar outside 0..p-1");
  return static_cast<Elem>(v);
}

inline Vec vec_of(const json& j, const Field& F, std::size_t n, const char* what) {
  if (!j.is_array() || j.size() != n) throw InputError(std::string(what) + " must be an array of length " + std::to_string(n));
  Vec v;
  for (const auto& e : j) v.push_back(scalar_of(e, F));
  return v;
}

inline Field field_from(const json& j) {
  const json& p = field_of(j, "p");
  if (!p.is_number_integer() || p.get<long long>() < 3 || !is_prime(static_cast<std::uint64_t>(p.get<long long>())))
    throw InputError("p must be an odd prime >= 3");
  return Field(static_cast<std::uint32_t>(p.get<long long>()));
}

inline std::vector<std::string> labels_from(const json& j) {
  const json& l = field_of(j, "labels");
  if (!l.is_array()) throw InputError("labels must be an array");
  std::vector<std::string> out;
  for (const auto& s : l) {
    if (!s.is_string()) throw InputError("labels must be strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

}  // namespace detail

inline json to_json(const Algebra& a) {
  auto sc = a.structure_constants();
  std::sort(sc.begin(), sc.end(), [](const StructureConstant& x, const StructureConstant& y) {
    return std::tie(x.i, x.j, x.k) < std::tie(y.i, y.j, y.k);
  });
  json mult = json::array();
  for (const auto& s : sc) mult.push_back({s.i, s.j, s.k, s.c});
  json j;
  j["p"] = a.p();
  j["labels"] = a.labels();
  j["unit"] = a.unit();
  j["mult"] = std::move(mult);
  j["radical_gens"] = a.radical_gens() ? detail::vecs_json(*a.radical_gens()) : json(nullptr);
  j["counit"] = a.counit() ? json(*a.counit()) : json(nullptr);
  return j;
}

inline Algebra algebra_from_json(const json& j, std::string name = "json") {
  if (!j.is_object()) throw InputError("algebra JSON must be an object");
  const Field F = detail::field_from(j);
  auto labels = detail::labels_from(j);
  const std::size_t n = labels.size();
  if (n == 0) throw InputError("algebra must have at least one basis element");
  const Vec unit = detail::vec_of(detail::field_of(j, "unit"), F, n, "unit");
  const json& m = detail::field_of(j, "mult");
  if (!m.is_array()) throw InputError("mult must be an array");
  std::vector<StructureConstant> mult;
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  for (const auto& t : m) {
    if (!t.is_array() || t.size() != 4) throw InputError("mult entries must be [i, j, k, c]");
    StructureConstant s{detail::index_of(t[0], n, "mult index"), detail::index_of(t[1], n, "mult index"),
                        detail::index_of(t[2], n, "mult index"), detail::scalar_of(t[3], F)};
    seen.emplace_back(s.i, s.j, s.k);
    mult.push_back(s);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) throw InputError("duplicate mult triple");
  std::optional<std::vector<Vec>> radical;
  if (const json& r = detail::field_of(j, "radical_gens"); !r.is_null()) {
    if (!r.is_array()) throw InputError("radical_gens must be an array or null");
    radical.emplace();
    for (const auto& v : r) radical->push_back(detail::vec_of(v, F, n, "radical generator"));
  }
  std::optional<Vec> counit;
  if (const json& c = detail::field_of(j, "counit"); !c.is_null()) counit = detail::vec_of(c, F, n, "counit");
  try {
    return make_algebra(F, labels, mult, unit, radical, counit, std::nullopt, std::move(name));
  } catch (const AlgebraError& e) {
    throw InputError(std::string("algebra validation failed: ") + e.what());
  }
}

inline json to_json(const HH1Presentation& h) {
  json br = json::array();
  for (const auto& row : h.bracket_table) {
    json r = json::array();
    for (const auto& v : row) r.push_back(v);
    br.push_back(std::move(r));
  }
  json j;
  j["algebra"] = h.algebra;
  j["dim_der"] = h.der.dim();
  j["dim_ider"] = h.ider.dim();
  j["dim_hh1"] = h.dim();
  j["bracket_table"] = std::move(br);
  j["pmap_table"] = detail::vecs_json(h.pmap_table);
  j["complement_labels"] = h.labels;
  return j;
}

inline json to_json(const RestrictedLie& L) {
  json br = json::array();
  for (const auto& s : L.structure_constants()) br.push_back({s.i, s.j, s.k, s.c});
  std::vector<Vec> pm;
  for (std::size_t i = 0; i < L.dim(); ++i) pm.push_back(L.pmap_basis(i));
  json j;
  j["p"] = L.p();
  j["labels"] = L.labels();
  j["bracket"] = std::move(br);
  j["pmap"] = detail::vecs_json(pm);
  return j;
}

inline RestrictedLie lie_from_json(const json& j) {
  if (!j.is_object()) throw InputError("Lie JSON must be an object");
  const Field F = detail::field_from(j);
  auto labels = detail::labels_from(j);
  const std::size_t n = labels.size();
  std::vector<std::vector<Vec>> br(n, std::vector<Vec>(n, Vec(n, 0)));
  const json& b = detail::field_of(j, "bracket");
  if (!b.is_array()) throw InputError("bracket must be an array");
  for (const auto& t : b) {
    if (!t.is_array() || t.size() != 4) throw InputError("bracket entries must be [i, j, k, c]");
    br[detail::index_of(t[0], n, "bracket index")][detail::index_of(t[1], n, "bracket index")]
      [detail::index_of(t[2], n, "bracket index")] = detail::scalar_of(t[3], F);
  }
  const json& pm = detail::field_of(j, "pmap");
  if (!pm.is_array() || pm.size() != n) throw InputError("pmap must have one row per basis element");
  std::vector<Vec> pmap;
  for (const auto& v : pm) pmap.push_back(detail::vec_of(v, F, n, "pmap row"));
  try {
    return make_restricted_lie(F, std::move(labels), std::move(br), std::move(pmap), "json");
  } catch (const LieError& e) {
    throw InputError(std::string("Lie validation failed: ") + e.what());
  }
}

inline json to_json(const TorusReport& t) {
  json certs = json::array();
  for (const auto& c : t.certificates)
    certs.push_back({{"element", c.element}, {"p_power", c.p_power}, {"commutes_with_all", c.commutes_with_all}});
  json j;
  j["basis"] = detail::vecs_json(t.basis);
  j["dim"] = t.dim();
  j["greedy_dim"] = t.greedy_dim;
  j["exhaustive_dim"] = t.exhaustive_dim ? json(*t.exhaustive_dim) : json(nullptr);
  j["candidates"] = t.candidates;
  j["toral_count"] = t.toral_count;
  j["maximality_status"] = to_string(t.status);
  j["certificates"] = std::move(certs);
  return j;
}

inline json to_json(const Fingerprint& f) {
  json j;
  j["p"] = f.p;
  j["dim"] = f.dim;
  j["derived_series"] = f.derived_series;
  j["lower_central_series"] = f.lower_central_series;
  j["center_dim"] = f.center_dim;
  j["is_simple"] = f.is_simple;
  j["mu_greedy"] = f.mu_greedy;
  j["mu_exhaustive"] = f.mu_exhaustive ? json(*f.mu_exhaustive) : json(nullptr);
  j["nullcone"] = f.nullcone ? json(*f.nullcone) : json(nullptr);
  return j;
}

}  // namespace hh1
