#pragma once

#include <json.hpp>

#include "majolab/clifford.hpp"
#include "majolab/matcore.hpp"
#include "majolab/reps.hpp"

namespace majolab {

/// {"rows": n, "cols": m, "re": [...], "im": [...]}, row-major.
nlohmann::json to_json(const CMatrix& m);
CMatrix cmatrix_from_json(const nlohmann::json& j);

/// {"dim": "D2" | "D4", "gammas": [CMatrix, ...]}
nlohmann::json to_json(const GammaSet& g);
GammaSet gamma_set_from_json(const nlohmann::json& j);

/// A GammaSet object with optional "to_majorana" and "charge_conjugation" matrices.
RepSpec custom_rep_from_json(const nlohmann::json& j, std::string name);

/// Entries rounded to 12 decimals with signed zeros cleared, for byte-stable output.
nlohmann::json to_stable_json(const CMatrix& m);

}  // namespace majolab
