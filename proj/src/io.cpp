#include "crossprod/io.hpp"

#include "crossprod/cuntz.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace crossprod::io {

std::string tool_version() { return "xprod 1.0.0"; }

const char* to_string(SpecKind k) {
  switch (k) {
    case SpecKind::PartialAction: return "partial-action";
    case SpecKind::GradedAlgebra: return "graded-algebra";
    case SpecKind::Cuntz: return "cuntz";
    case SpecKind::WienerHopf: return "wiener-hopf";
  }
  return "?";
}

namespace {

void only(const Json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!obj.is_object()) throw SpecError(where + ": expected an object");
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw SpecError(where + ": unknown field '" + key + "'");
  }
}

const Json& need(const Json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) throw SpecError(where + ": missing field '" + key + "'");
  return obj.at(key);
}

int get_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw SpecError(where + ": expected an integer");
  return j.get<int>();
}

std::string get_string(const Json& j, const std::string& where) {
  if (!j.is_string()) throw SpecError(where + ": expected a string");
  return j.get<std::string>();
}

std::vector<int> int_list(const Json& j, const std::string& where) {
  if (!j.is_array()) throw SpecError(where + ": expected an array");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(get_int(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<std::vector<int>> int_table(const Json& j, const std::string& where) {
  if (!j.is_array()) throw SpecError(where + ": expected an array of rows");
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(int_list(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

Options parse_options(const Json& j) {
  const std::string where = "options";
  only(j, {"window", "depth", "eps", "seed", "attempts"}, where);
  Options o;
  if (j.contains("window")) {
    o.window = get_int(j["window"], "options.window");
    if (*o.window < 1 || *o.window > kMaxWindow)
      throw SpecError("options.window must lie in 1.." + std::to_string(kMaxWindow));
  }
  if (j.contains("depth")) {
    o.depth = get_int(j["depth"], "options.depth");
    if (*o.depth < 1 || *o.depth > kMaxDepth)
      throw SpecError("options.depth must lie in 1.." + std::to_string(kMaxDepth));
  }
  if (j.contains("eps")) {
    if (!j["eps"].is_number() || j["eps"].get<double>() <= 0) throw SpecError("options.eps must be a positive number");
    o.eps = j["eps"].get<double>();
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) throw SpecError("options.seed must be a non-negative integer");
    o.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("attempts")) {
    o.attempts = get_int(j["attempts"], "options.attempts");
    if (*o.attempts < 1) throw SpecError("options.attempts must be >= 1");
  }
  return o;
}

GroupWindow parse_group(const Json& j) {
  const std::string where = "group";
  if (!j.is_object()) throw SpecError("group: expected an object");
  const auto type = get_string(need(j, "type", where), "group.type");
  auto window = [&] {
    const int L = get_int(need(j, "window", where), "group.window");
    if (L < 0 || L > kMaxWindow) throw SpecError("group.window must lie in 0.." + std::to_string(kMaxWindow));
    return L;
  };
  if (type == "trivial") {
    only(j, {"type"}, where);
    return GroupWindow::finite(FiniteGroup::trivial());
  }
  if (type == "cyclic") {
    only(j, {"type", "order"}, where);
    const int n = get_int(need(j, "order", where), "group.order");
    if (n < 1) throw SpecError("group.order must be positive");
    return GroupWindow::finite(FiniteGroup::cyclic(n));
  }
  if (type == "table") {
    only(j, {"type", "order", "table"}, where);
    FiniteGroup g(int_table(need(j, "table", where), "group.table"));
    if (j.contains("order") && get_int(j["order"], "group.order") != g.order())
      throw SpecError("group.order does not match the table");
    return GroupWindow::finite(std::move(g));
  }
  if (type == "free") {
    only(j, {"type", "rank", "window"}, where);
    const int rank = get_int(need(j, "rank", where), "group.rank");
    if (rank < 1) throw SpecError("group.rank must be positive");
    return GroupWindow::free(rank, window());
  }
  if (type == "integers") {
    only(j, {"type", "window"}, where);
    return GroupWindow::integers(window());
  }
  throw SpecError("group.type must be one of trivial, cyclic, table, free, integers");
}

Json group_to_json(const GroupWindow& G) {
  switch (G.kind()) {
    case GroupWindow::Kind::Finite:
      if (G.size() == 1) return Json{{"type", "trivial"}};
      return Json{{"type", "table"}, {"order", G.finite_group().order()}, {"table", G.finite_group().table()}};
    case GroupWindow::Kind::Free: return Json{{"type", "free"}, {"rank", G.rank()}, {"window", G.window()}};
    case GroupWindow::Kind::Integers: return Json{{"type", "integers"}, {"window", G.window()}};
  }
  return {};
}

std::size_t block_index(const FdAlgebra& A, const Json& j, const std::string& where) {
  const int b = get_int(j, where);
  if (b < 1 || static_cast<std::size_t>(b) > A.block_count())
    throw SpecError(where + ": block " + std::to_string(b) + " out of range 1.." + std::to_string(A.block_count()));
  return static_cast<std::size_t>(b - 1);
}

PartialAutomorphism parse_auto(const FdAlgebra& A, const Json& j, const std::string& where,
                               std::initializer_list<const char*> allowed) {
  only(j, allowed, where);
  PartialAutomorphism f;
  const auto& map = need(j, "map", where);
  if (!map.is_array()) throw SpecError(where + ".map: expected an array of [source, target] pairs");
  for (std::size_t k = 0; k < map.size(); ++k) {
    const std::string w = where + ".map[" + std::to_string(k) + "]";
    if (!map[k].is_array() || map[k].size() != 2) throw SpecError(w + ": expected [source, target]");
    const auto src = block_index(A, map[k][0], w);
    const auto tgt = block_index(A, map[k][1], w);
    if (f.source.count(src) || f.target.count(tgt)) throw SpecError(w + ": block used twice");
    f.source.insert(src);
    f.target.insert(tgt);
    f.blockMap[src] = tgt;
  }
  for (auto b : f.source) {
    const auto n = static_cast<Eigen::Index>(A.size(b));
    f.unitaries[b] = ComplexMatrix::Identity(n, n);
  }
  if (j.contains("unitaries")) {
    const auto& us = j["unitaries"];
    if (!us.is_array()) throw SpecError(where + ".unitaries: expected an array");
    for (std::size_t k = 0; k < us.size(); ++k) {
      const std::string w = where + ".unitaries[" + std::to_string(k) + "]";
      only(us[k], {"block", "matrix"}, w);
      const auto b = block_index(A, need(us[k], "block", w), w + ".block");
      if (!f.source.count(b)) throw SpecError(w + ": block is not in the domain");
      f.unitaries[b] = matrix_from_json(need(us[k], "matrix", w), w + ".matrix");
    }
  }
  if (auto d = f.defect(A); !d.empty()) throw SpecError(where + ": " + d);
  return f;
}

Json auto_to_json(const FdAlgebra& A, const PartialAutomorphism& f) {
  Json j;
  Json map = Json::array();
  for (const auto& [s, t] : f.blockMap) map.push_back({s + 1, t + 1});
  j["map"] = map;
  Json us = Json::array();
  for (const auto& [b, u] : f.unitaries) {
    const auto n = static_cast<Eigen::Index>(A.size(b));
    if (u.rows() == n && u.isApprox(ComplexMatrix::Identity(n, n), 1e-15)) continue;
    us.push_back(Json{{"block", b + 1}, {"matrix", matrix_to_json(u)}});
  }
  if (!us.empty()) j["unitaries"] = us;
  return j;
}

void check_header(const Json& j) {
  if (!j.is_object()) throw SpecError("spec: expected a JSON object");
  const auto& v = need(j, "schemaVersion", "spec");
  if (!v.is_number_integer() || v.get<int>() != kSchemaVersion)
    throw SpecError("spec: schemaVersion must be " + std::to_string(kSchemaVersion));
}

PartialActionSystem parse_system(const Json& j) {
  only(j, {"schemaVersion", "kind", "name", "algebra", "group", "action", "generators", "options"}, "spec");
  PartialActionSystem sys;
  sys.name = j.contains("name") ? get_string(j["name"], "name") : "unnamed";
  const auto sizes = int_list(need(j, "algebra", "spec"), "algebra");
  if (sizes.empty()) throw SpecError("algebra: at least one block required");
  for (int s : sizes)
    if (s < 1) throw SpecError("algebra: block sizes must be positive");
  sys.algebra = FdAlgebra(sizes);
  sys.group = parse_group(need(j, "group", "spec"));
  const bool has_action = j.contains("action"), has_gens = j.contains("generators");
  if (has_action == has_gens) throw SpecError("spec: give exactly one of 'action' and 'generators'");

  if (has_gens) {
    if (sys.group.is_finite()) throw SpecError("generators: only for free or integers groups");
    const auto& gens = j["generators"];
    if (!gens.is_array()) throw SpecError("generators: expected an array");
    std::vector<PartialAutomorphism> thetas;
    for (std::size_t k = 0; k < gens.size(); ++k)
      thetas.push_back(parse_auto(sys.algebra, gens[k], "generators[" + std::to_string(k) + "]", {"map", "unitaries"}));
    if (static_cast<int>(thetas.size()) != sys.group.rank())
      throw SpecError("generators: expected " + std::to_string(sys.group.rank()) + " automorphisms");
    auto built = free_product_action(sys.algebra, thetas, sys.group.window());
    built.name = sys.name;
    return built;
  }

  const auto& action = j["action"];
  if (!action.is_array()) throw SpecError("action: expected an array");
  const auto G = sys.group.size();
  sys.ideals.assign(G, Ideal{});
  sys.autos.assign(G, PartialAutomorphism::empty());
  std::vector<bool> seen(G, false);
  for (std::size_t k = 0; k < action.size(); ++k) {
    const std::string where = "action[" + std::to_string(k) + "]";
    const auto label = get_string(need(action[k], "element", where), where + ".element");
    std::size_t s = 0;
    try {
      s = sys.group.parse(label);
    } catch (const std::exception& e) {
      throw SpecError(where + ".element: " + e.what());
    }
    if (seen[s]) throw SpecError(where + ": element " + label + " listed twice");
    seen[s] = true;
    sys.autos[s] = parse_auto(sys.algebra, action[k], where, {"element", "map", "unitaries"});
    sys.ideals[s] = sys.autos[s].target;
  }
  for (std::size_t s = 0; s < G; ++s)
    if (!seen[s]) throw SpecError("action: no entry for element " + sys.group.label(s));
  return sys;
}

GradedMatrixAlgebra parse_graded(const Json& j) {
  only(j, {"schemaVersion", "kind", "name", "dim", "group", "grading", "options"}, "spec");
  GradedMatrixAlgebra g;
  const int dim = get_int(need(j, "dim", "spec"), "dim");
  if (dim < 1) throw SpecError("dim must be positive");
  g.dim = static_cast<std::size_t>(dim);
  g.group = parse_group(need(j, "group", "spec"));
  const auto& grading = need(j, "grading", "spec");
  if (!grading.is_array()) throw SpecError("grading: expected an array");
  g.grading.assign(g.group.size(), {});
  std::vector<bool> seen(g.group.size(), false);
  for (std::size_t k = 0; k < grading.size(); ++k) {
    const std::string where = "grading[" + std::to_string(k) + "]";
    only(grading[k], {"element", "basis"}, where);
    const auto label = get_string(need(grading[k], "element", where), where + ".element");
    std::size_t s = 0;
    try {
      s = g.group.parse(label);
    } catch (const std::exception& e) {
      throw SpecError(where + ".element: " + e.what());
    }
    if (seen[s]) throw SpecError(where + ": element " + label + " listed twice");
    seen[s] = true;
    const auto& basis = need(grading[k], "basis", where);
    if (!basis.is_array()) throw SpecError(where + ".basis: expected an array of matrices");
    for (std::size_t b = 0; b < basis.size(); ++b) {
      auto m = matrix_from_json(basis[b], where + ".basis[" + std::to_string(b) + "]");
      if (m.rows() != dim || m.cols() != dim)
        throw SpecError(where + ".basis[" + std::to_string(b) + "]: expected " + std::to_string(dim) + "x" +
                        std::to_string(dim));
      g.grading[s].push_back(std::move(m));
    }
  }
  return g;
}

}  // namespace

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(row);
  }
  return rows;
}

ComplexMatrix matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw SpecError(where + ": expected a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (!j[0].is_array() || j[0].empty()) throw SpecError(where + ": rows must be non-empty arrays");
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  ComplexMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) throw SpecError(where + ": ragged rows");
    for (Eigen::Index c = 0; c < cols; ++c) {
      const auto& e = row[static_cast<std::size_t>(c)];
      if (e.is_number()) {
        m(r, c) = e.get<double>();
      } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
        m(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
      } else {
        throw SpecError(where + ": entries are numbers or [re, im]");
      }
    }
  }
  return m;
}

SystemSpec parse_spec(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("malformed JSON: ") + e.what());
  }
  check_header(j);
  SystemSpec spec;
  spec.raw = j;
  const auto kind = get_string(need(j, "kind", "spec"), "kind");
  spec.name = j.contains("name") ? get_string(j["name"], "name") : "unnamed";
  if (j.contains("options")) spec.options = parse_options(j["options"]);
  try {
    if (kind == "partial-action") {
      spec.kind = SpecKind::PartialAction;
      spec.system = parse_system(j);
    } else if (kind == "graded-algebra") {
      spec.kind = SpecKind::GradedAlgebra;
      spec.graded = parse_graded(j);
    } else if (kind == "cuntz") {
      spec.kind = SpecKind::Cuntz;
      only(j, {"schemaVersion", "kind", "name", "n", "transitions", "options"}, "spec");
      spec.n = get_int(need(j, "n", "spec"), "n");
      if (spec.n < 1) throw SpecError("n must be >= 1");
      if (j.contains("transitions")) {
        spec.ck = int_table(j["transitions"], "transitions");
        (void)CuntzSignature::toeplitz_ck(spec.ck);
        if (static_cast<int>(spec.ck.size()) != spec.n) throw SpecError("transitions: expected an n x n matrix");
      }
    } else if (kind == "wiener-hopf") {
      spec.kind = SpecKind::WienerHopf;
      only(j, {"schemaVersion", "kind", "name", "qlo", "options"}, "spec");
      spec.qlo = get_string(need(j, "qlo", "spec"), "qlo");
      (void)make_qlo(spec.qlo);
    } else {
      throw SpecError("kind must be one of partial-action, graded-algebra, cuntz, wiener-hopf");
    }
  } catch (const SpecError&) {
    throw;
  } catch (const std::exception& e) {
    throw SpecError(e.what());
  }
  return spec;
}

SystemSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str());
}

Json system_to_json(const PartialActionSystem& sys) {
  Json j;
  j["schemaVersion"] = kSchemaVersion;
  j["kind"] = "partial-action";
  j["name"] = sys.name;
  j["algebra"] = sys.algebra.blockSizes;
  j["group"] = group_to_json(sys.group);
  Json action = Json::array();
  for (std::size_t s = 0; s < sys.group.size(); ++s) {
    Json a{{"element", sys.group.label(s)}};
    const Json f = auto_to_json(sys.algebra, sys.autos[s]);
    for (const auto& [k, v] : f.items()) a[k] = v;
    action.push_back(a);
  }
  j["action"] = action;
  return j;
}

Json graded_to_json(const GradedMatrixAlgebra& g, const std::string& name) {
  Json j;
  j["schemaVersion"] = kSchemaVersion;
  j["kind"] = "graded-algebra";
  j["name"] = name;
  j["dim"] = g.dim;
  j["group"] = group_to_json(g.group);
  Json grading = Json::array();
  for (std::size_t s = 0; s < g.grading.size(); ++s) {
    Json basis = Json::array();
    for (const auto& m : g.grading[s]) basis.push_back(matrix_to_json(m));
    grading.push_back(Json{{"element", g.group.label(s)}, {"basis", basis}});
  }
  j["grading"] = grading;
  return j;
}

Json report_to_json(const Report& r, const Json& spec) {
  Json j;
  j["toolVersion"] = tool_version();
  j["spec"] = spec;
  Json checks = Json::array();
  for (const auto& c : r.checks())
    checks.push_back(Json{{"name", c.name},
                          {"paperAnchor", c.anchor},
                          {"verdict", to_string(c.verdict)},
                          {"witness", c.witness},
                          {"timingMs", c.timingMs}});
  j["checks"] = checks;
  j["summary"] = Json{{"pass", r.count(Verdict::Pass)},
                      {"fail", r.count(Verdict::Fail)},
                      {"skip", r.count(Verdict::Skip)},
                      {"verdict", r.passed() ? "pass" : "fail"}};
  j["notes"] = r.notes();
  return j;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

}  // namespace crossprod::io
