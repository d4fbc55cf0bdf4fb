#pragma once

#include <memory>
#include <optional>
#include <vector>

#include <json.hpp>

#include "rankdesigns/am.hpp"
#include "rankdesigns/codes.hpp"
#include "rankdesigns/designs.hpp"

namespace rankdesigns::io {

using nlohmann::json;

/// A parsed code file. `matrix` is always present; vector codes also keep
/// their generator and the basis used to expand them.
struct CodeFile {
  std::shared_ptr<const Field> field;
  std::shared_ptr<const ExtField> ext;  // set when the field object has "m"
  std::optional<VectorCode> vector;
  std::vector<Elem> gamma;
  MatrixCode matrix;
};

json field_to_json(const Field& f, const ExtField* ext = nullptr);
std::shared_ptr<const Field> field_from_json(const json& j);

/// {"field", "kind": "matrix", "n", "m", "basis": [[row-major entries], ...]}
json code_to_json(const MatrixCode& c);
/// {"field", "kind": "vector", "n", "m", "generator": [[...], ...], "gamma": [...]}
json code_to_json(const VectorCode& c, std::span<const Elem> gamma);
CodeFile code_from_json(const json& j);

/// {"q", "n", "r", "blocks": [[[rref row], ...], ...]}, plus "t" and
/// "lambda" once verified.
json design_to_json(const DesignInstance& d);
DesignInstance design_from_json(const json& j);

json subspace_to_json(const Subspace& s);
json distribution_to_json(const WeightDistribution& w);
json report_to_json(const AMReport& r);

}  // namespace rankdesigns::io
