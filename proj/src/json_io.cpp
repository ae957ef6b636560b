#include "majolab/json_io.hpp"

#include <cmath>

#include "majolab/errors.hpp"

namespace majolab {

namespace {

double stable(double v) {
  double r = std::round(v * 1e12) / 1e12;
  if (r == 0.0) r = 0.0;  // drops the sign of -0
  return r;
}

std::size_t read_size(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned()) throw UsageError(std::string("matrix JSON: missing or bad '") + key + "'");
  return j[key].get<std::size_t>();
}

std::vector<double> read_numbers(const nlohmann::json& j, const char* key, std::size_t count) {
  if (!j.contains(key) || !j[key].is_array()) throw UsageError(std::string("matrix JSON: missing array '") + key + "'");
  const auto& a = j[key];
  if (a.size() != count) throw UsageError(std::string("matrix JSON: '") + key + "' has the wrong length");
  std::vector<double> out;
  out.reserve(count);
  for (const auto& v : a) {
    if (!v.is_number()) throw UsageError(std::string("matrix JSON: non-numeric entry in '") + key + "'");
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

nlohmann::json to_json(const CMatrix& m) {
  nlohmann::json re = nlohmann::json::array(), im = nlohmann::json::array();
  for (const auto& v : m.entries()) {
    re.push_back(v.real());
    im.push_back(v.imag());
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"re", re}, {"im", im}};
}

nlohmann::json to_stable_json(const CMatrix& m) {
  nlohmann::json re = nlohmann::json::array(), im = nlohmann::json::array();
  for (const auto& v : m.entries()) {
    re.push_back(stable(v.real()));
    im.push_back(stable(v.imag()));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"re", re}, {"im", im}};
}

CMatrix cmatrix_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw UsageError("matrix JSON: expected an object");
  const std::size_t rows = read_size(j, "rows"), cols = read_size(j, "cols");
  const auto re = read_numbers(j, "re", rows * cols);
  const auto im = read_numbers(j, "im", rows * cols);
  std::vector<cplx> e(rows * cols);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = {re[i], im[i]};
  return CMatrix::from_row_major(rows, cols, std::move(e));
}

nlohmann::json to_json(const GammaSet& g) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& m : g.gammas()) arr.push_back(to_json(m));
  return {{"dim", std::string(to_string(g.dim()))}, {"gammas", arr}};
}

GammaSet gamma_set_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_string())
    throw UsageError("gamma set JSON: missing 'dim'");
  if (!j.contains("gammas") || !j["gammas"].is_array()) throw UsageError("gamma set JSON: missing 'gammas'");
  std::vector<CMatrix> g;
  for (const auto& m : j["gammas"]) g.push_back(cmatrix_from_json(m));
  return GammaSet(dim_from_string(j["dim"].get<std::string>()), std::move(g));
}

RepSpec custom_rep_from_json(const nlohmann::json& j, std::string name) {
  GammaSet g = gamma_set_from_json(j);
  std::optional<CMatrix> s, sc;
  if (j.contains("to_majorana")) s = cmatrix_from_json(j["to_majorana"]);
  if (j.contains("charge_conjugation")) sc = cmatrix_from_json(j["charge_conjugation"]);
  if (!s && !sc) {
    // gamma checks only: S_C left empty
    RepSpec r{std::move(name), RepKind::Custom, std::move(g), std::nullopt, CMatrix()};
    return r;
  }
  return make_custom(std::move(name), std::move(g), std::move(s), std::move(sc));
}

}  // namespace majolab
