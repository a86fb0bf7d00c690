#include "adjrep/fixtures.hpp"

#include <map>
#include <mutex>

#include "adjrep/error.hpp"
#include "adjrep/fixture_data.hpp"

namespace adjrep {

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : fixture_data::all()) out.push_back(k);
  return out;
}

const Json& fixture(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, Json> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  const auto& all = fixture_data::all();
  auto raw = all.find(name);
  if (raw == all.end()) throw InputError("unknown fixture '" + name + "'");
  return cache.emplace(name, Json::parse(raw->second)).first->second;
}

HPolytope fixture_polytope(const std::string& name) {
  const Json& j = fixture(name);
  if (!j.contains("polytope")) throw InputError("fixture '" + name + "' has no polytope");
  return polytope_from_json(j["polytope"]);
}

RegistryPtr fixture_registry(const std::string& name) {
  const Json& j = fixture(name);
  if (!j.contains("vars")) throw InputError("fixture '" + name + "' has no variable list");
  return make_registry(j["vars"].get<std::vector<std::string>>());
}

Poly fixture_poly(const std::string& name, const std::string& key) {
  const Json& j = fixture(name);
  if (!j.contains(key)) throw InputError("fixture '" + name + "' has no field '" + key + "'");
  if (j[key].is_object()) return poly_from_json(j[key]);
  return poly_from_json(j[key], fixture_registry(name));
}

PolyMatrix fixture_matrix(const std::string& name, const std::string& key) {
  const Json& j = fixture(name);
  if (!j.contains(key)) throw InputError("fixture '" + name + "' has no field '" + key + "'");
  auto reg = fixture_registry(name);
  PolyMatrix m = matrix_from_json(Json{{"rows", j[key]}}, reg);
  if (!j.value("affine_entries", false)) return m;
  PolyMatrix h(reg, m.size());
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < m.size(); ++c) h.set(r, c, m(r, c).homogenize(0, 1));
  }
  return h;
}

}  // namespace adjrep
