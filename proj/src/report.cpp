#include "report.hpp"

#include <algorithm>
#include <sstream>

#include "liedd/rmatrix.hpp"

namespace liedd::report {

namespace {

Json header(const std::string& kind) {
  Json j;
  j["schema"] = kSchema;
  j["report"] = kind;
  return j;
}

Json strings(const std::vector<std::string>& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(s);
  return a;
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json conditions_json(const std::vector<Condition>& conditions) {
  Json a = Json::array();
  for (const auto& c : conditions) {
    Json roots = Json::array();
    for (const auto& r : c.roots) roots.push_back(to_string(r));
    a.push_back({{"poly", c.poly.to_string()}, {"roots", roots}});
  }
  return a;
}

Json brackets_json(const LieAlgebra& g) {
  Json a = Json::array();
  const auto& labels = g.labels();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      const Vector& v = g.bracket_basis(i, j);
      if (is_zero(v)) continue;
      a.push_back({{"bracket", "[" + labels[i] + ", " + labels[j] + "]"}, {"value", g.element_to_string(v)}});
    }
  }
  return a;
}

Json dims(const Series& s) {
  Json a = Json::array();
  for (const auto& t : s.terms) a.push_back(t.dim());
  return a;
}

Json optional_size(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

std::string verdict_name(MYBESolution::Verdict v) {
  switch (v) {
    case MYBESolution::Verdict::NoSolution: return "NoSolution";
    case MYBESolution::Verdict::Unique: return "Unique";
    case MYBESolution::Verdict::AllScalars: return "AllScalars";
  }
  return "";
}

Status parse_status(const std::string& s) {
  if (s == "Holds") return Status::Holds;
  if (s == "Fails") return Status::Fails;
  if (s == "Conditional") return Status::Conditional;
  throw Error(ErrorKind::Parse, "unknown status '" + s + "'");
}

Scalar parse_entry(const Json& e, const ParseOptions& opts) {
  if (e.is_number_integer()) return Scalar(e.get<long>());
  if (e.is_string()) return parse_scalar(e.get<std::string>(), opts);
  throw Error(ErrorKind::Parse, "matrix entries must be integers or scalar literals");
}

Matrix parse_matrix(const Json& rows, std::size_t n, const ParseOptions& opts) {
  if (!rows.is_array() || rows.size() != n) {
    throw Error(ErrorKind::Parse, "expected " + std::to_string(n) + " matrix rows");
  }
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!rows[r].is_array() || rows[r].size() != n) {
      throw Error(ErrorKind::Parse, "row " + std::to_string(r + 1) + " needs " + std::to_string(n) + " entries");
    }
    for (std::size_t c = 0; c < n; ++c) m(r, c) = parse_entry(rows[r][c], opts);
  }
  return m;
}

// ------------------------------------------------------------ rendering

std::string scalar_text(const Json& v) {
  if (v.is_null()) return "-";
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (const auto& e : v) out += (out.empty() ? "" : ", ") + scalar_text(e);
    return out.empty() ? "(none)" : out;
  }
  return v.dump();
}

bool is_flat(const Json& v) {
  if (!v.is_array()) return !v.is_object();
  return std::all_of(v.begin(), v.end(), [](const Json& e) { return !e.is_array() && !e.is_object(); });
}

void render_table(std::ostream& out, const Json& rows, const std::string& pad) {
  if (rows.empty()) return;
  std::vector<std::string> keys;
  for (const auto& [k, v] : rows.front().items()) keys.push_back(k);
  std::vector<std::size_t> width(keys.size());
  for (std::size_t c = 0; c < keys.size(); ++c) width[c] = keys[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < keys.size(); ++c) width[c] = std::max(width[c], scalar_text(row[keys[c]]).size());
  }
  auto line = [&](auto cell) {
    std::string s = pad;
    for (std::size_t c = 0; c < keys.size(); ++c) {
      std::string t = cell(c);
      if (c + 1 < keys.size()) t.resize(width[c] + 2, ' ');
      s += t;
    }
    out << s << "\n";
  };
  line([&](std::size_t c) { return keys[c]; });
  for (const auto& row : rows) line([&](std::size_t c) { return scalar_text(row[keys[c]]); });
}

void render_value(std::ostream& out, const std::string& key, const Json& v, const std::string& pad);

void render_object(std::ostream& out, const Json& obj, const std::string& pad) {
  for (const auto& [k, v] : obj.items()) render_value(out, k, v, pad);
}

void render_value(std::ostream& out, const std::string& key, const Json& v, const std::string& pad) {
  if (is_flat(v)) {
    out << pad << key << ": " << scalar_text(v) << "\n";
    return;
  }
  if (v.is_object()) {
    out << pad << key << ":\n";
    render_object(out, v, pad + "  ");
    return;
  }
  const bool uniform_rows = std::all_of(v.begin(), v.end(), [](const Json& e) {
    return e.is_object() && std::all_of(e.begin(), e.end(), [](const Json& x) { return is_flat(x); });
  });
  out << pad << key << ":\n";
  if (uniform_rows) {
    render_table(out, v, pad + "  ");
    return;
  }
  for (const auto& e : v) {
    if (e.is_object()) {
      std::ostringstream item;
      render_object(item, e, pad + "    ");
      std::string s = item.str();
      s.replace(0, pad.size() + 4, pad + "  - ");
      out << s;
    } else if (e.is_array()) {
      out << pad << "  [" << scalar_text(e) << "]\n";
    } else {
      out << pad << "  " << scalar_text(e) << "\n";
    }
  }
}

std::string render_text(const Json& j) {
  std::ostringstream out;
  if (j.value("report", "") == "check-paper") {
    for (const auto& r : j["rows"]) {
      out << "[" << r["result"].get<std::string>() << "] criterion " << r["criterion"].get<int>() << " ("
          << r["title"].get<std::string>() << "): " << r["detail"].get<std::string>() << "\n";
    }
    out << j["passed"].get<int>() << "/" << j["rows"].size() << " criteria passed\n";
    return out.str();
  }
  for (const auto& [k, v] : j.items()) {
    if (k == "schema" || k == "report") continue;
    if (k == "rows") {
      render_table(out, v, "");
    } else {
      render_value(out, k, v, "");
    }
  }
  return out.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_cell(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (const auto& e : v) out += (out.empty() ? "" : "; ") + csv_cell(e);
    return out;
  }
  return v.dump();
}

void flatten(const Json& v, const std::string& path, std::vector<std::pair<std::string, std::string>>& out) {
  if (v.is_object()) {
    for (const auto& [k, e] : v.items()) flatten(e, path.empty() ? k : path + "." + k, out);
  } else if (v.is_array() && !is_flat(v)) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], path + "." + std::to_string(i + 1), out);
  } else {
    out.emplace_back(path, csv_cell(v));
  }
}

std::string render_csv(const Json& j) {
  std::ostringstream out;
  if (j.contains("rows")) {
    const Json& rows = j["rows"];
    if (rows.empty()) return "";
    std::string line;
    for (const auto& [k, v] : rows.front().items()) line += (line.empty() ? "" : ",") + csv_field(k);
    out << line << "\n";
    for (const auto& row : rows) {
      line.clear();
      bool first = true;
      for (const auto& [k, v] : row.items()) {
        line += (first ? "" : ",") + csv_field(csv_cell(v));
        first = false;
      }
      out << line << "\n";
    }
    return out.str();
  }
  std::vector<std::pair<std::string, std::string>> fields;
  flatten(j, "", fields);
  out << "field,value\n";
  for (const auto& [k, v] : fields) out << csv_field(k) << "," << csv_field(v) << "\n";
  return out.str();
}

}  // namespace

Json catalog_list(const Catalog& catalog) {
  Json j = header("catalog");
  Json rows = Json::array();
  for (const auto& e : catalog.entries()) {
    std::string dim;
    std::vector<std::string> params = e.params;
    if (e.integer_params.empty()) {
      dim = std::to_string(catalog.get(e.name).dim());
    } else {
      dim = e.integer_params.front();
      params.insert(params.begin(), e.integer_params.begin(), e.integer_params.end());
    }
    std::string p;
    for (const auto& s : params) p += (p.empty() ? "" : " ") + s;
    rows.push_back({{"name", e.name}, {"dim", dim}, {"params", p}, {"recipe", to_string(e.recipe)}, {"summary", e.summary}});
  }
  j["rows"] = std::move(rows);
  return j;
}

Json show(const LieAlgebra& g) {
  Json j = header("show");
  j["name"] = g.name();
  j["dim"] = g.dim();
  j["params"] = strings(g.params());
  j["basis"] = strings(g.labels());
  j["brackets"] = brackets_json(g);
  return j;
}

Json invariants(const LieAlgebra& g) {
  Json j = header("invariants");
  j["name"] = g.name();
  j["dim"] = g.dim();
  j["params"] = strings(g.params());
  const Series lcs = lower_central_series(g);
  const Series ds = derived_series(g);
  j["lower_central_series"] = dims(lcs);
  j["derived_series"] = dims(ds);
  j["nilpotency_class"] = optional_size(nilpotency_class(g));
  j["solvability_class"] = optional_size(solvability_class(g));
  j["center_dim"] = center(g).dim();
  j["abelian"] = is_abelian(g);
  j["nilpotent"] = is_nilpotent(g);
  j["metabelian"] = is_metabelian(g);
  j["center_by_metabelian"] = is_center_by_metabelian(g);
  j["characteristically_nilpotent"] = g.is_parametric() ? Json(nullptr) : Json(is_characteristically_nilpotent(g));
  const DerivationSpace der = derivation_space(g);
  j["der_dim"] = der.dim();
  j["der_exceptional"] = strings(der.exceptional.to_strings());
  ExceptionalSet series_ex = lcs.exceptional;
  series_ex.merge(ds.exceptional);
  j["series_exceptional"] = strings(series_ex.to_strings());
  return j;
}

Json derivations(const LieAlgebra& g, const std::optional<Scalar>& t) {
  const DerivationSpace ds = t ? generalized_derivation_space(g, *t) : derivation_space(g);
  Json j = header("derivations");
  j["name"] = g.name();
  j["kind"] = t ? "generalized" : "ordinary";
  if (t) j["t"] = t->to_string();
  j["dim"] = ds.dim();
  j["exceptional"] = strings(ds.exceptional.to_strings());
  Json basis = Json::array();
  for (std::size_t i = 0; i < ds.basis.size(); ++i) {
    basis.push_back({{"map", "D" + std::to_string(i + 1)}, {"matrix", matrix_json(ds.basis[i])}});
  }
  j["basis"] = std::move(basis);
  return j;
}

Json identity(const LieAlgebra& g, const IdentityReport& r) {
  Json j = header("identity");
  j["name"] = g.name();
  j["identity"] = to_string(r.identity);
  j["quantifier"] = to_string(r.quantifier);
  j["status"] = to_string(r.status);
  if (r.witness) {
    Json maps = Json::array();
    for (std::size_t m : r.witness->maps) maps.push_back("D" + std::to_string(m + 1));
    Json elems = Json::array();
    for (std::size_t e : r.witness->elements) elems.push_back(g.labels()[e]);
    j["witness"] = {{"maps", maps}, {"elements", elems}};
    j["value"] = g.element_to_string(r.value);
  } else {
    j["witness"] = nullptr;
    j["value"] = nullptr;
  }
  j["conditions"] = conditions_json(r.conditions);
  j["exceptional"] = strings(r.exceptional.to_strings());
  j["swept_maps"] = r.swept_maps;
  Json maps = Json::array();
  for (std::size_t i = 0; i < r.map_basis.size(); ++i) {
    maps.push_back({{"map", "D" + std::to_string(i + 1)}, {"matrix", matrix_json(r.map_basis[i])}});
  }
  j["map_basis"] = std::move(maps);
  return j;
}

IdentityReport identity_from_json(const LieAlgebra& g, const Json& j) {
  if (j.value("schema", 0) != kSchema || j.value("report", "") != "identity") {
    throw Error(ErrorKind::Parse, "not an identity report of schema " + std::to_string(kSchema));
  }
  std::vector<std::string> extra;
  const ParseOptions opts{g.params(), &extra};
  auto label_index = [&](const std::string& s) {
    const auto& labels = g.labels();
    const auto it = std::find(labels.begin(), labels.end(), s);
    if (it == labels.end()) throw Error(ErrorKind::Parse, "unknown basis label '" + s + "'");
    return static_cast<std::size_t>(it - labels.begin());
  };
  IdentityReport r;
  r.identity = parse_identity_id(j.at("identity").get<std::string>());
  r.quantifier = parse_quantifier_kind(j.at("quantifier").get<std::string>());
  r.status = parse_status(j.at("status").get<std::string>());
  if (!j.at("witness").is_null()) {
    Witness w;
    for (const auto& m : j["witness"].at("maps")) w.maps.push_back(std::stoul(m.get<std::string>().substr(1)) - 1);
    for (const auto& e : j["witness"].at("elements")) w.elements.push_back(label_index(e.get<std::string>()));
    r.witness = std::move(w);
    r.value = g.parse_element(j.at("value").get<std::string>(), &extra);
  }
  for (const auto& c : j.at("conditions")) {
    Condition cond;
    cond.poly = parse_scalar(c.at("poly").get<std::string>(), opts).numerator();
    for (const auto& root : c.at("roots")) cond.roots.push_back(parse_scalar(root.get<std::string>()).rational());
    r.conditions.push_back(std::move(cond));
  }
  for (const auto& e : j.at("exceptional")) r.exceptional.add(parse_scalar(e.get<std::string>(), opts).numerator());
  r.swept_maps = j.at("swept_maps").get<std::size_t>();
  for (const auto& m : j.at("map_basis")) r.map_basis.push_back(parse_matrix(m.at("matrix"), g.dim(), opts));
  return r;
}

Json rmatrix(const LieAlgebra& g, const LinearMap& r, const std::optional<Vector>& z, bool with_double) {
  Json j = header("rmatrix");
  j["name"] = g.name();
  if (z) j["z"] = g.element_to_string(*z);
  j["r"] = matrix_json(r);
  const RMatrixCheck check = is_classical_rmatrix(g, r);
  Json classical;
  classical["status"] = to_string(check.status);
  if (check.witness) {
    const auto& w = *check.witness;
    classical["witness"] = strings({g.labels()[w[0]], g.labels()[w[1]], g.labels()[w[2]]});
    classical["value"] = g.element_to_string(check.value);
  } else {
    classical["witness"] = nullptr;
    classical["value"] = nullptr;
  }
  classical["conditions"] = conditions_json(check.conditions);
  j["classical"] = std::move(classical);

  const MYBESolution m = mybe_solve(g, r);
  Json mybe;
  mybe["verdict"] = verdict_name(m.verdict);
  mybe["lambda"] = m.verdict == MYBESolution::Verdict::Unique ? Json(m.lambda.to_string()) : Json(nullptr);
  mybe["exceptional"] = strings(m.exceptional.to_strings());
  j["mybe"] = std::move(mybe);

  const bool derivation = is_derivation(g, r).holds;
  if (derivation || check.status == Status::Holds) {
    const DoubleMode mode = derivation ? DoubleMode::Derivation : DoubleMode::RMatrix;
    Json d;
    d["mode"] = derivation ? "derivation" : "rmatrix";
    try {
      const LieAlgebra dbl = build_double(g, r, mode);
      if (dbl.dim() == 3 && !dbl.is_parametric()) d["r31"] = recognize_r31(dbl);
      d["abelian"] = is_abelian(dbl);
      if (with_double) d["brackets"] = brackets_json(dbl);
    } catch (const Error& e) {
      d["error"] = e.what();
    }
    j["double"] = std::move(d);
  } else {
    j["double"] = nullptr;
  }
  return j;
}

Json table1(const std::vector<TableRow>& rows) {
  Json j = header("table1");
  Json out = Json::array();
  for (const auto& r : rows) {
    Json row;
    row["algebra"] = r.label;
    for (std::size_t c = 0; c < 4; ++c) row["(" + std::to_string(c + 1) + ")"] = r.marks[c] ? "+" : "-";
    out.push_back(std::move(row));
  }
  j["rows"] = std::move(out);
  return j;
}

Json check_paper(const std::vector<CriterionResult>& results) {
  Json j = header("check-paper");
  Json rows = Json::array();
  int passed = 0;
  for (const auto& r : results) {
    passed += r.passed ? 1 : 0;
    rows.push_back({{"criterion", r.number}, {"title", r.title}, {"result", r.passed ? "PASS" : "FAIL"}, {"detail", r.detail}});
  }
  j["passed"] = passed;
  j["rows"] = std::move(rows);
  return j;
}

LinearMap parse_map(const std::string& text, const LieAlgebra& g, std::vector<std::string>* extend) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("map file: ") + e.what());
  }
  return parse_matrix(j, g.dim(), ParseOptions{g.params(), extend});
}

std::string render(const Json& j, Format f) {
  switch (f) {
    case Format::Json: return j.dump(2) + "\n";
    case Format::Csv: return render_csv(j);
    case Format::Text: return render_text(j);
  }
  return "";
}

Format parse_format(const std::string& text) {
  if (text == "text") return Format::Text;
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  throw Error(ErrorKind::Usage, "unknown format '" + text + "' (text, json, csv)");
}

}  // namespace liedd::report
