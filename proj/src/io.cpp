#include "rankdesigns/io.hpp"

#include <string>

#include "rankdesigns/error.hpp"

namespace rankdesigns::io {

namespace {

const json& member(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + "." + key + ": missing");
  return *it;
}

std::uint64_t unsigned_at(const json& j, const std::string& where) {
  if (!j.is_number_unsigned()) throw ParseError(where + ": expected a non-negative integer");
  return j.get<std::uint64_t>();
}

std::uint64_t unsigned_member(const json& j, const std::string& key, const std::string& where) {
  return unsigned_at(member(j, key, where), where + "." + key);
}

std::vector<Elem> elems_at(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  std::vector<Elem> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    auto v = unsigned_at(j[i], where + "[" + std::to_string(i) + "]");
    if (v > 0xffffffffu) throw ParseError(where + "[" + std::to_string(i) + "]: out of range");
    out.push_back(static_cast<Elem>(v));
  }
  return out;
}

template <typename Fn>
auto rethrow_as_parse(const std::string& where, Fn fn) {
  try {
    return fn();
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(where + ": " + e.what());
  }
}

std::vector<std::vector<Elem>> rows_of(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of arrays");
  std::vector<std::vector<Elem>> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(elems_at(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

template <typename F>
json rows_to_json(const Matrix<F>& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    rows.push_back(std::vector<Elem>(row.begin(), row.end()));
  }
  return rows;
}

std::shared_ptr<const ExtField> ext_from_json(const std::shared_ptr<const Field>& base, const json& j) {
  if (!j.contains("m")) return nullptr;
  auto m = unsigned_member(j, "m", "field");
  std::vector<Elem> modulus;
  if (j.contains("ext_modulus")) modulus = elems_at(j["ext_modulus"], "field.ext_modulus");
  return rethrow_as_parse("field.ext_modulus",
                          [&] { return ExtField::make(base, static_cast<unsigned>(m), std::move(modulus)); });
}

}  // namespace

json field_to_json(const Field& f, const ExtField* ext) {
  json j{{"p", f.characteristic()}, {"e", f.degree()}, {"modulus", f.modulus()}};
  if (ext) {
    j["m"] = ext->degree();
    j["ext_modulus"] = ext->modulus();
  }
  return j;
}

std::shared_ptr<const Field> field_from_json(const json& j) {
  auto p = unsigned_member(j, "p", "field");
  auto e = j.contains("e") ? unsigned_member(j, "e", "field") : 1;
  std::vector<Elem> modulus;
  if (j.contains("modulus")) modulus = elems_at(j["modulus"], "field.modulus");
  return rethrow_as_parse("field", [&] {
    return Field::make(static_cast<unsigned>(p), static_cast<unsigned>(e), std::move(modulus));
  });
}

json code_to_json(const MatrixCode& c) {
  json basis = json::array();
  for (const auto& b : c.basis()) basis.push_back(std::vector<Elem>(b.entries().begin(), b.entries().end()));
  return json{{"field", field_to_json(c.field())},
              {"kind", "matrix"},
              {"n", c.rows()},
              {"m", c.cols()},
              {"basis", basis}};
}

json code_to_json(const VectorCode& c, std::span<const Elem> gamma) {
  return json{{"field", field_to_json(c.ext().base(), &c.ext())},
              {"kind", "vector"},
              {"n", c.length()},
              {"m", c.ext().degree()},
              {"generator", rows_to_json(c.generator())},
              {"gamma", std::vector<Elem>(gamma.begin(), gamma.end())}};
}

CodeFile code_from_json(const json& j) {
  auto field = field_from_json(member(j, "field", "code"));
  const json& kind = member(j, "kind", "code");
  if (!kind.is_string()) throw ParseError("code.kind: expected a string");
  const std::size_t n = unsigned_member(j, "n", "code");
  const std::size_t m = unsigned_member(j, "m", "code");
  if (n == 0 || m == 0) throw ParseError("code: n and m must be positive");

  if (kind == "matrix") {
    auto rows = rows_of(member(j, "basis", "code"), "code.basis");
    std::vector<FqMatrix> basis;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      std::string where = "code.basis[" + std::to_string(i) + "]";
      basis.push_back(rethrow_as_parse(where, [&] { return FqMatrix(field, n, m, rows[i]); }));
    }
    auto code = rethrow_as_parse("code.basis", [&] { return MatrixCode(field, n, m, std::move(basis)); });
    return CodeFile{field, ext_from_json(field, j["field"]), std::nullopt, {}, std::move(code)};
  }
  if (kind == "vector") {
    const json& fj = j["field"];
    if (!fj.contains("m")) throw ParseError("code.field.m: missing (required for vector codes)");
    auto ext = ext_from_json(field, fj);
    if (ext->degree() != m) throw ParseError("code.m: disagrees with field.m");
    auto rows = rows_of(member(j, "generator", "code"), "code.generator");
    std::vector<Elem> flat;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != n) throw ParseError("code.generator[" + std::to_string(i) + "]: expected n entries");
      flat.insert(flat.end(), rows[i].begin(), rows[i].end());
    }
    auto vc = rethrow_as_parse("code.generator",
                               [&] { return VectorCode(ext, ExtMatrix(ext, rows.size(), n, std::move(flat))); });
    std::vector<Elem> gamma = j.contains("gamma") ? elems_at(j["gamma"], "code.gamma") : polynomial_basis(*ext);
    auto mc = rethrow_as_parse("code.gamma", [&] { return expand(vc, gamma); });
    return CodeFile{field, ext, std::move(vc), std::move(gamma), std::move(mc)};
  }
  throw ParseError("code.kind: expected \"matrix\" or \"vector\"");
}

json subspace_to_json(const Subspace& s) { return rows_to_json(s.basis()); }

json design_to_json(const DesignInstance& d) {
  json blocks = json::array();
  for (const auto& b : d.blocks()) blocks.push_back(subspace_to_json(b));
  json j{{"q", d.q()}, {"n", d.ambient()}, {"r", d.block_dim()}, {"blocks", blocks}};
  if (d.strength()) j["t"] = *d.strength();
  if (d.lambda()) j["lambda"] = d.lambda()->get_str();
  return j;
}

DesignInstance design_from_json(const json& j) {
  auto q = unsigned_member(j, "q", "design");
  auto field = rethrow_as_parse("design.q", [&] { return Field::of_order(q); });
  const std::size_t n = unsigned_member(j, "n", "design");
  const std::size_t r = unsigned_member(j, "r", "design");
  const json& bj = member(j, "blocks", "design");
  if (!bj.is_array()) throw ParseError("design.blocks: expected an array");
  std::vector<Subspace> blocks;
  for (std::size_t i = 0; i < bj.size(); ++i) {
    std::string where = "design.blocks[" + std::to_string(i) + "]";
    auto rows = rows_of(bj[i], where);
    std::vector<Elem> flat;
    for (const auto& row : rows) {
      if (row.size() != n) throw ParseError(where + ": rows must have n entries");
      flat.insert(flat.end(), row.begin(), row.end());
    }
    blocks.push_back(rethrow_as_parse(where, [&] { return Subspace::span(FqMatrix(field, rows.size(), n, flat)); }));
  }
  return rethrow_as_parse("design.blocks", [&] { return DesignInstance(field, n, r, std::move(blocks)); });
}

json distribution_to_json(const WeightDistribution& w) {
  json counts = json::array();
  for (const auto& c : w.counts()) counts.push_back(c.get_str());
  return json{{"counts", counts}};
}

json report_to_json(const AMReport& r) {
  auto levels = [](const std::vector<AMLevel>& ls) {
    json out = json::array();
    for (const auto& l : ls)
      out.push_back(json{{"u", l.u}, {"mu", l.mu.get_str()}, {"blocks", l.design.blocks().size()},
                         {"design", design_to_json(l.design)}});
    return out;
  };
  return json{{"n", r.n},
              {"m", r.m},
              {"q", r.q},
              {"k", r.k},
              {"t", r.t},
              {"d", r.d},
              {"dual_d", r.dual_d},
              {"w", r.w},
              {"w_star", r.w_star},
              {"hypothesis_holds", r.hypothesis.holds},
              {"dual_weights_in_window", r.hypothesis.dual_weights_in_window},
              {"weights", distribution_to_json(r.hypothesis.weights)},
              {"dual_weights", distribution_to_json(r.hypothesis.dual_weights)},
              {"dual_brute_forced", r.hypothesis.dual_brute_forced},
              {"primal_designs", levels(r.primal)},
              {"dual_designs", levels(r.dual)},
              {"notes", r.notes}};
}

}  // namespace rankdesigns::io
