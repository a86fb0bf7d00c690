#pragma once

#include <string>
#include <vector>

#include "adjrep/json_io.hpp"

namespace adjrep {

/// Built-in fixtures, embedded from data/fixtures at build time.
std::vector<std::string> fixture_names();
/// Parsed fixture; throws InputError for an unknown name.
const Json& fixture(const std::string& name);

HPolytope fixture_polytope(const std::string& name);
/// Registry from the fixture's "vars" field.
RegistryPtr fixture_registry(const std::string& name);
/// A polynomial stored as text under `key`; {"vars", "text"} objects carry their own registry.
Poly fixture_poly(const std::string& name, const std::string& key);
/// A printed matrix; affine entries are homogenized with x0.
PolyMatrix fixture_matrix(const std::string& name, const std::string& key = "printed_matrix");

}  // namespace adjrep
