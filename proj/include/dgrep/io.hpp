#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dgrep/algebra.hpp"
#include "dgrep/digroup.hpp"
#include "dgrep/error.hpp"
#include "dgrep/ext.hpp"
#include "dgrep/halo.hpp"
#include "dgrep/matrix.hpp"
#include "dgrep/report.hpp"
#include "dgrep/representation.hpp"

namespace dgrep {

using Json = nlohmann::json;

/// "rational" or a prime given as a number or numeric string.
Field field_from_json(const Json& j);
Json field_to_json(Field f);
Field parse_field(const std::string& text);

Json matrix_to_json(const Matrix& m);
/// Entries may be canonical strings ("3/4") or integers.
Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, Field f);
Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j, std::size_t n, Field f);

/// {"group": {"order", "mul"} | {"cyclic": n} | {"symmetric": n}, "halo_size": m,
///  "action": [[...]] | "trivial"}
Json digroup_to_json(const Digroup& d);
/// validate=false skips the group and action law checks.
Digroup digroup_from_json(const Json& j, bool validate = true);

/// {"digroup", "dim", "field", "lambda": {"g,a": matrix}, "rho": {...}}
Json representation_to_json(const Representation& r);
/// `field` overrides the file's field. validate=true rejects inputs failing the axioms
/// (including singular rho) with AxiomFailure.
Representation representation_from_json(const Json& j, std::optional<Field> field = std::nullopt,
                                        bool validate = true);

/// {"V": representation, "W_basis": [[...], ...]}
struct SesFile {
  Representation v;
  std::vector<Vector> w_basis;
};
Json ses_to_json(const SesFile& s);
SesFile ses_from_json(const Json& j, std::optional<Field> field = std::nullopt, bool validate = true);

Json report_to_json(const Report& r);
Json family_to_json(const Digroup& d, const CocycleFamily& c);
Json algebra_to_json(const FDAlgebra& a);

Json read_json_file(const std::string& path);
/// Serializes with sorted keys and a trailing newline.
std::string dump(const Json& j);

}  // namespace dgrep
