#pragma once

#include <json.hpp>

#include "addact/models.hpp"

namespace addact {

// Algebra object: {"kind":"structure_constants","dim":N,"basis_names":[...],
// "table":[{"i":1,"j":1,"product":[[k,"scalar"],...]},...]} or
// {"kind":"family","name":...,"params":{...}}.
LocalAlgebra algebra_from_json(const nlohmann::json& j);
nlohmann::ordered_json algebra_to_json(const LocalAlgebra& a);

// Pair object: {"algebra":<algebra>,"subspace":{"basis":[["scalar",...],...]},
// "mode":"hypersurface"|"projective_space"}; a bare family object naming a
// pair model is also accepted.
HPair pair_from_json(const nlohmann::json& j);
nlohmann::ordered_json pair_to_json(const HPair& p);

// {"basis":[["scalar",...],...]} spanning a subspace of Q(i)^dim.
Subspace subspace_from_json(const nlohmann::json& j, int dim);

// {"kind":"family","name":"quadric_pair","params":{"n":3}}; the name may
// also carry a full textual id like "socle_extension(cubic_pair,1)".
ModelId model_id_from_family_json(const nlohmann::json& j);

nlohmann::ordered_json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

nlohmann::ordered_json verdict_to_json(const Verdict& v);
Verdict verdict_from_json(const nlohmann::json& j);

}  // namespace addact
