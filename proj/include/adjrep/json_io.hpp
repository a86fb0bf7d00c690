#pragma once

#include <json.hpp>

#include "adjrep/arrangements3d.hpp"
#include "adjrep/assoc.hpp"
#include "adjrep/poly.hpp"
#include "adjrep/poly_matrix.hpp"
#include "adjrep/polytope.hpp"

namespace adjrep {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);
Json to_json(const QVector& v);
QVector qvector_from_json(const Json& j);
Json to_json(const QMatrix& m);
QMatrix qmatrix_from_json(const Json& j);

/// {"vars": [...], "terms": [{"exps": [...], "coeff": "p/q"}], "text": "..."}
Json to_json(const Poly& p);
/// Accepts the term form or {"vars", "text"}. With `reg` the variables are
/// remapped onto it by name.
Poly poly_from_json(const Json& j, const RegistryPtr& reg = nullptr);

/// {"vars": [...], "rows": [["entry", ...], ...]}
Json to_json(const PolyMatrix& m);
PolyMatrix matrix_from_json(const Json& j, const RegistryPtr& reg = nullptr);

/// {"dim", "name", "facets": [{"normal", "offset"}], "chart"?}; also accepts
/// {"homogeneous_facets", "chart"} or a 2-dim {"vertices"} list.
Json to_json(const HPolytope& p);
HPolytope polytope_from_json(const Json& j);

/// {"points": [[4 rationals], [4 rationals]], "facets": [i, j]}
Json to_json(const Line3& l);
Line3 line_from_json(const Json& j);
LineArrangement lines_from_json(const Json& j);

Json to_json(const NiceCertificate& c);
Json to_json(const Flat& f);
Json to_json(const Triangulation& t);
Json to_json(const ObstructionWitness& w);

}  // namespace adjrep
