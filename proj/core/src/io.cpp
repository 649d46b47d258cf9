#include "cliffilt/io.hpp"

#include "cliffilt/error.hpp"

namespace cliffilt::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object holding '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

std::size_t count(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw ParseError(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

const json& array(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  return j;
}

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("invalid structure: ") + e.what());
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON value: ") + e.what());
  }
}

std::vector<std::size_t> counts(const json& j, const char* what) {
  std::vector<std::size_t> out;
  for (const auto& e : array(j, what)) out.push_back(count(e, what));
  return out;
}

std::vector<Matrix> matrices(const json& j, const char* what) {
  std::vector<Matrix> out;
  for (const auto& e : array(j, what)) out.push_back(matrix_from_json(e));
  return out;
}

json matrices_json(const std::vector<Matrix>& ms) {
  json out = json::array();
  for (const auto& m : ms) out.push_back(to_json(m));
  return out;
}

using Table = std::vector<std::vector<Matrix>>;

json table_json(const Table& t) {
  json out = json::array();
  for (const auto& row : t) out.push_back(matrices_json(row));
  return out;
}

Table table(const json& j, const char* what) {
  Table out;
  for (const auto& row : array(j, what)) out.push_back(matrices(row, what));
  return out;
}

// Nested objects may appear bare or as full documents.
void accept_schema(const json& j) {
  if (j.is_object() && j.contains("schema") && j["schema"] != kSchema)
    throw ParseError("unsupported schema: " + j["schema"].dump());
}

}  // namespace

json to_json(const Rational& r) { return r.str(); }

json to_json(const Matrix& m) {
  json entries = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (const auto& e : m.row(r)) row.push_back(e.str());
    entries.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

json to_json(const CliffordAlgebra& a) { return {{"n", a.generators()}, {"gram", to_json(a.gram())}}; }

json to_json(const CliffordSupermodule& m) {
  std::vector<Matrix> eo, oe;
  for (std::size_t i = 0; i < m.generators(); ++i) {
    eo.push_back(m.gamma_eo(i));
    oe.push_back(m.gamma_oe(i));
  }
  return document("module", {{"algebra", to_json(m.algebra())},
                             {"dim_even", m.dim_even()},
                             {"dim_odd", m.dim_odd()},
                             {"gamma_eo", matrices_json(eo)},
                             {"gamma_oe", matrices_json(oe)}});
}

json to_json(const SuperFiltration& f) {
  json levels = json::array();
  for (const auto& s : f.levels()) levels.push_back(to_json(s.basis()));
  return document("filtration", {{"module", to_json(f.module())}, {"levels", std::move(levels)}});
}

json to_json(const OffShellRep& r) {
  return document("offshell", {{"algebra", to_json(r.algebra())},
                               {"dims", r.stored_dims()},
                               {"shifts", matrices_json(r.stored_shifts())},
                               {"q", table_json(r.stored_q())}});
}

json to_json(const BiSupermodule& m) {
  json gp = json::array(), gm = json::array();
  for (std::size_t i = 0; i < m.plus_generators(); ++i) {
    json blocks = json::array();
    for (std::size_t c = 0; c < 4; ++c) blocks.push_back(to_json(m.gamma_plus(i, static_cast<int>(c / 2), static_cast<int>(c % 2))));
    gp.push_back(std::move(blocks));
  }
  for (std::size_t j = 0; j < m.minus_generators(); ++j) {
    json blocks = json::array();
    for (std::size_t c = 0; c < 4; ++c) blocks.push_back(to_json(m.gamma_minus(j, static_cast<int>(c / 2), static_cast<int>(c % 2))));
    gm.push_back(std::move(blocks));
  }
  return document("bimodule", {{"plus", to_json(m.plus_algebra())},
                               {"minus", to_json(m.minus_algebra())},
                               {"dims", m.dims()},
                               {"gamma_plus", std::move(gp)},
                               {"gamma_minus", std::move(gm)}});
}

json to_json(const Bifiltration& f) {
  json levels = json::array();
  for (const auto& row : f.levels()) {
    json r = json::array();
    for (const auto& s : row) r.push_back(to_json(s.basis()));
    levels.push_back(std::move(r));
  }
  return document("bifiltration", {{"module", to_json(f.module())}, {"levels", std::move(levels)}});
}

json to_json(const BiGradedRep& r) {
  json qp = json::array(), qm = json::array();
  for (const auto& t : r.stored_qp()) qp.push_back(table_json(t));
  for (const auto& t : r.stored_qm()) qm.push_back(table_json(t));
  return document("bigraded", {{"plus", to_json(r.plus_algebra())},
                               {"minus", to_json(r.minus_algebra())},
                               {"dims", r.stored_dims()},
                               {"sigma", table_json(r.stored_sigma())},
                               {"tau", table_json(r.stored_tau())},
                               {"qp", std::move(qp)},
                               {"qm", std::move(qm)}});
}

json to_json(const AdinkraGraph& g) {
  json vertices = json::array(), edges = json::array();
  for (const auto& v : g.vertices) {
    json vec = json::array();
    for (const auto& e : v.vector) vec.push_back(e.str());
    vertices.push_back({{"parity", static_cast<int>(v.parity)}, {"height", v.height}, {"vector", std::move(vec)}});
  }
  for (const auto& e : g.edges)
    edges.push_back({{"from", e.from}, {"to", e.to}, {"generator", e.generator + 1}, {"sign", e.sign}});
  return document("graph", {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}});
}

json to_json(const InvariantReport& r) {
  json summands = json::array();
  for (const auto& s : r.summands)
    summands.push_back({{"gr_dims", s.gr_dims}, {"source_dims", s.source_dims}, {"status", to_string(s.status)}});
  return document("invariants",
                  {{"gr_dims", r.gr_dims}, {"source_dims", r.source_dims}, {"summands", std::move(summands)}});
}

json to_json(const Certificate& c) { return document("certificate", c.to_json()); }

json document(const std::string& type, json body) {
  body["schema"] = kSchema;
  body["type"] = type;
  return body;
}

std::string document_type(const json& doc) {
  if (!doc.is_object()) throw ParseError("document must be a JSON object");
  const auto s = doc.find("schema");
  if (s == doc.end() || *s != kSchema) throw ParseError(std::string("document schema must be \"") + kSchema + "\"");
  const auto t = doc.find("type");
  if (t == doc.end() || !t->is_string()) throw ParseError("document has no type");
  return t->get<std::string>();
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw ParseError("rational must be a string \"p/q\" or an integer");
  return Rational::parse(j.get<std::string>());
}

Matrix matrix_from_json(const json& j) {
  const std::size_t rows = count(field(j, "rows"), "rows");
  const std::size_t cols = count(field(j, "cols"), "cols");
  const json& entries = array(field(j, "entries"), "entries");
  if (entries.size() != rows) throw ParseError("matrix entries do not match its row count");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = array(entries[r], "matrix row");
    if (row.size() != cols) throw ParseError("matrix row does not match its column count");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from_json(row[c]);
  }
  return m;
}

std::shared_ptr<const CliffordAlgebra> algebra_from_json(const json& j) {
  return guarded([&] {
    const std::size_t n = count(field(j, "n"), "n");
    if (!j.contains("gram")) return std::make_shared<const CliffordAlgebra>(n);
    Matrix gram = matrix_from_json(j["gram"]);
    if (gram.rows() != n) throw ParseError("gram size does not match n");
    return std::make_shared<const CliffordAlgebra>(std::move(gram));
  });
}

ModulePtr module_from_json(const json& j) {
  accept_schema(j);
  return guarded([&] {
    return std::make_shared<const CliffordSupermodule>(
        algebra_from_json(field(j, "algebra")), count(field(j, "dim_even"), "dim_even"),
        count(field(j, "dim_odd"), "dim_odd"), matrices(field(j, "gamma_eo"), "gamma_eo"),
        matrices(field(j, "gamma_oe"), "gamma_oe"));
  });
}

SuperFiltration filtration_from_json(const json& j) {
  accept_schema(j);
  return guarded([&] {
    ModulePtr m = module_from_json(field(j, "module"));
    std::vector<Subspace> levels;
    for (const auto& l : array(field(j, "levels"), "levels")) levels.push_back(Subspace::span(matrix_from_json(l)));
    return SuperFiltration(std::move(m), std::move(levels));
  });
}

OffShellRep offshell_from_json(const json& j) {
  accept_schema(j);
  return guarded([&] {
    return OffShellRep(algebra_from_json(field(j, "algebra")), counts(field(j, "dims"), "dims"),
                       matrices(field(j, "shifts"), "shifts"), table(field(j, "q"), "q"));
  });
}

BiModulePtr bimodule_from_json(const json& j) {
  accept_schema(j);
  return guarded([&] {
    const auto d = counts(field(j, "dims"), "dims");
    if (d.size() != 4) throw ParseError("bimodule dims must have four entries");
    auto blocks = [&](const char* key) {
      std::vector<BiSupermodule::Blocks> out;
      for (const auto& g : array(field(j, key), key)) {
        const auto ms = matrices(g, key);
        if (ms.size() != 4) throw ParseError(std::string(key) + " needs four blocks per generator");
        out.push_back({ms[0], ms[1], ms[2], ms[3]});
      }
      return out;
    };
    return std::make_shared<const BiSupermodule>(algebra_from_json(field(j, "plus")), algebra_from_json(field(j, "minus")),
                                                 std::array<std::size_t, 4>{d[0], d[1], d[2], d[3]},
                                                 blocks("gamma_plus"), blocks("gamma_minus"));
  });
}

Bifiltration bifiltration_from_json(const json& j) {
  accept_schema(j);
  return guarded([&] {
    BiModulePtr m = bimodule_from_json(field(j, "module"));
    std::vector<std::vector<Subspace>> levels;
    for (const auto& row : array(field(j, "levels"), "levels")) {
      levels.emplace_back();
      for (const auto& l : array(row, "levels")) levels.back().push_back(Subspace::span(matrix_from_json(l)));
    }
    return Bifiltration(std::move(m), std::move(levels));
  });
}

BiGradedRep bigraded_from_json(const json& j) {
  accept_schema(j);
  return guarded([&] {
    std::vector<std::vector<std::size_t>> dims;
    for (const auto& row : array(field(j, "dims"), "dims")) dims.push_back(counts(row, "dims"));
    std::vector<Table> qp, qm;
    for (const auto& t : array(field(j, "qp"), "qp")) qp.push_back(table(t, "qp"));
    for (const auto& t : array(field(j, "qm"), "qm")) qm.push_back(table(t, "qm"));
    return BiGradedRep(algebra_from_json(field(j, "plus")), algebra_from_json(field(j, "minus")), std::move(dims),
                       table(field(j, "sigma"), "sigma"), table(field(j, "tau"), "tau"), std::move(qp), std::move(qm));
  });
}

AdinkraGraph graph_from_json(const json& j) {
  accept_schema(j);
  return guarded([&] {
    AdinkraGraph g;
    for (const auto& v : array(field(j, "vertices"), "vertices")) {
      GraphVertex out;
      const auto par = count(field(v, "parity"), "parity");
      if (par > 1) throw ParseError("parity must be 0 or 1");
      out.parity = par == 0 ? Parity::Even : Parity::Odd;
      out.height = field(v, "height").get<int>();
      for (const auto& e : array(field(v, "vector"), "vector")) out.vector.push_back(rational_from_json(e));
      g.vertices.push_back(std::move(out));
    }
    for (const auto& e : array(field(j, "edges"), "edges")) {
      GraphEdge out{count(field(e, "from"), "from"), count(field(e, "to"), "to"), count(field(e, "generator"), "generator"),
                    field(e, "sign").get<int>()};
      if (out.generator == 0) throw ParseError("generator indices are 1-based");
      --out.generator;
      if (out.from >= g.vertices.size() || out.to >= g.vertices.size()) throw ParseError("edge endpoint out of range");
      if (out.sign != 1 && out.sign != -1) throw ParseError("edge sign must be 1 or -1");
      g.edges.push_back(out);
    }
    return g;
  });
}

}  // namespace cliffilt::io
