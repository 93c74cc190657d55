#include "dgrep/io.hpp"

#include <fstream>
#include <sstream>

#include "dgrep/error.hpp"

namespace dgrep {

namespace {

std::string key_of(Element x) { return std::to_string(x.g) + "," + std::to_string(x.alpha); }

std::size_t get_count(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  const Json& v = j.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long>() >= 0))
    throw ParseError(std::string("field \"") + key + "\" must be a nonnegative integer");
  return v.get<std::size_t>();
}

Table table_from_json(const Json& j, std::size_t rows, std::size_t cols, std::size_t bound, const char* what) {
  if (!j.is_array() || j.size() != rows) throw ParseError(std::string(what) + ": expected " + std::to_string(rows) + " rows");
  Table t;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) throw ParseError(std::string(what) + ": row has the wrong length");
    std::vector<std::size_t> r;
    for (const auto& e : row) {
      if (!e.is_number_integer() || e.get<long>() < 0 || e.get<std::size_t>() >= bound)
        throw ParseError(std::string(what) + ": entry out of range");
      r.push_back(e.get<std::size_t>());
    }
    t.push_back(std::move(r));
  }
  return t;
}

Scalar scalar_from_json(const Json& j, Field f) {
  if (j.is_string()) {
    try {
      return Scalar::parse(j.get<std::string>(), f);
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
  }
  if (j.is_number_integer()) return Scalar(j.get<long>(), f);
  throw ParseError("scalar must be a string like \"-3/4\" or an integer");
}

std::vector<Matrix> operator_table(const Json& j, const Digroup& d, std::size_t dim, Field f, const char* what) {
  if (!j.is_object()) throw ParseError(std::string(what) + " must be an object keyed by \"g,a\"");
  if (j.size() != d.size())
    throw ParseError(std::string(what) + ": expected " + std::to_string(d.size()) + " operators");
  std::vector<Matrix> out;
  for (Element x : d.elements()) {
    std::string k = key_of(x);
    if (!j.contains(k)) throw ParseError(std::string(what) + ": missing operator for " + k);
    out.push_back(matrix_from_json(j.at(k), dim, dim, f));
  }
  return out;
}

}  // namespace

Field field_from_json(const Json& j) {
  if (j.is_string()) return parse_field(j.get<std::string>());
  if (j.is_number_integer() && j.get<long>() > 1 && j.get<long>() < (1L << 31))
    return Field::prime(static_cast<std::uint32_t>(j.get<long>()));
  throw ParseError("field must be \"rational\" or a prime");
}

Json field_to_json(Field f) {
  if (f.is_rational()) return "rational";
  return f.p;
}

Field parse_field(const std::string& text) {
  if (text == "rational" || text == "Q") return Field::rational();
  if (text.empty() || text.size() > 9 || text.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("field must be \"rational\" or a prime, got \"" + text + "\"");
  try {
    return Field::prime(static_cast<std::uint32_t>(std::stoul(text)));
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vector_to_json(m.row(i)));
  return rows;
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, Field f) {
  if (!j.is_array() || j.size() != rows)
    throw ParseError("matrix: expected " + std::to_string(rows) + " rows");
  Matrix m(rows, cols, f);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = j[i];
    if (!row.is_array() || row.size() != cols) throw ParseError("matrix: expected " + std::to_string(cols) + " columns");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = scalar_from_json(row[c], f);
  }
  return m;
}

Json vector_to_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(s.str());
  return a;
}

Vector vector_from_json(const Json& j, std::size_t n, Field f) {
  if (!j.is_array() || j.size() != n) throw ParseError("vector: expected length " + std::to_string(n));
  Vector v;
  for (const auto& e : j) v.push_back(scalar_from_json(e, f));
  return v;
}

Json digroup_to_json(const Digroup& d) {
  Json j;
  j["group"] = {{"order", d.group_order()}, {"mul", d.group().table()}};
  j["halo_size"] = d.halo_size();
  if (d.action().is_trivial()) j["action"] = "trivial";
  else j["action"] = d.action().table();
  return j;
}

Digroup digroup_from_json(const Json& j, bool validate) {
  if (!j.is_object() || !j.contains("group")) throw ParseError("digroup: missing \"group\"");
  const Json& g = j.at("group");
  FiniteGroup group;
  if (g.contains("cyclic")) {
    std::size_t n = get_count(g, "cyclic");
    if (n == 0) throw ParseError("digroup: cyclic order must be positive");
    group = FiniteGroup::cyclic(n);
  } else if (g.contains("symmetric")) {
    std::size_t n = get_count(g, "symmetric");
    if (n == 0 || n > 4) throw ParseError("digroup: symmetric degree must be 1..4");
    group = FiniteGroup::symmetric(n);
  } else {
    std::size_t n = get_count(g, "order");
    if (n == 0) throw ParseError("digroup: group order must be positive");
    if (!g.contains("mul")) throw ParseError("digroup: missing \"mul\"");
    Table mul = table_from_json(g.at("mul"), n, n, n, "mul");
    group = validate ? FiniteGroup::from_table(std::move(mul)) : FiniteGroup::from_table_unchecked(std::move(mul));
  }
  std::size_t m = get_count(j, "halo_size");
  if (m == 0) throw ParseError("digroup: halo_size must be positive");
  if (!j.contains("action") || (j.at("action").is_string() && j.at("action") == "trivial"))
    return Digroup(GAction::trivial(std::move(group), m));
  Table act = table_from_json(j.at("action"), group.order(), m, m, "action");
  return Digroup(validate ? GAction::from_table(std::move(group), std::move(act))
                          : GAction::from_table_unchecked(std::move(group), std::move(act)));
}

Json representation_to_json(const Representation& r) {
  Json j;
  j["digroup"] = digroup_to_json(r.digroup());
  j["dim"] = r.dim();
  j["field"] = field_to_json(r.field());
  Json lambda = Json::object(), rho = Json::object();
  for (Element x : r.digroup().elements()) {
    lambda[key_of(x)] = matrix_to_json(r.lambda(x));
    rho[key_of(x)] = matrix_to_json(r.rho(x));
  }
  j["lambda"] = std::move(lambda);
  j["rho"] = std::move(rho);
  return j;
}

Representation representation_from_json(const Json& j, std::optional<Field> field, bool validate) {
  if (!j.is_object()) throw ParseError("representation must be a JSON object");
  if (!j.contains("digroup")) throw ParseError("representation: missing \"digroup\"");
  Digroup d = digroup_from_json(j.at("digroup"), validate);
  std::size_t dim = get_count(j, "dim");
  Field f = field ? *field : (j.contains("field") ? field_from_json(j.at("field")) : Field::rational());
  if (!j.contains("lambda") || !j.contains("rho")) throw ParseError("representation: missing \"lambda\" or \"rho\"");
  Representation r(d, dim, operator_table(j.at("lambda"), d, dim, f, "lambda"),
                   operator_table(j.at("rho"), d, dim, f, "rho"), f);
  if (validate) {
    Report rep = check_representation(r);
    if (const Check* bad = rep.first_failure())
      throw AxiomFailure("representation fails " + bad->name + " at " + bad->counterexample);
  }
  return r;
}

Json ses_to_json(const SesFile& s) {
  Json basis = Json::array();
  for (const auto& v : s.w_basis) basis.push_back(vector_to_json(v));
  return {{"V", representation_to_json(s.v)}, {"W_basis", basis}};
}

SesFile ses_from_json(const Json& j, std::optional<Field> field, bool validate) {
  if (!j.is_object() || !j.contains("V") || !j.contains("W_basis"))
    throw ParseError("SES file needs \"V\" and \"W_basis\"");
  SesFile s{representation_from_json(j.at("V"), field, validate), {}};
  const Json& b = j.at("W_basis");
  if (!b.is_array()) throw ParseError("W_basis must be an array of vectors");
  for (const auto& v : b) s.w_basis.push_back(vector_from_json(v, s.v.dim(), s.v.field()));
  return s;
}

Json report_to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json e = {{"name", c.name}, {"ok", c.ok}};
    if (!c.ok) e["counterexample"] = c.counterexample;
    checks.push_back(std::move(e));
  }
  return {{"ok", r.ok()}, {"checks", checks}};
}

Json family_to_json(const Digroup& d, const CocycleFamily& c) {
  Json j = Json::object();
  for (Element x : d.elements()) j[key_of(x)] = matrix_to_json(c.at(d, x));
  return j;
}

Json algebra_to_json(const FDAlgebra& a) {
  Json structure = Json::array();
  for (const auto& row : a.structure) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(vector_to_json(v));
    structure.push_back(std::move(r));
  }
  return {{"basis_labels", a.basis_labels}, {"structure", structure}, {"unit", vector_to_json(a.unit)}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace dgrep
