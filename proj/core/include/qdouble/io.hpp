#pragma once

#include <Eigen/Dense>
#include <complex>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "qdouble/cochain.hpp"
#include "qdouble/cyclotomic.hpp"
#include "qdouble/group.hpp"
#include "qdouble/groupoid.hpp"

namespace qdouble::io {

using json = nlohmann::ordered_json;

/// Parses a JSON file; errors carry the path and the parser's position info.
json read_json_file(const std::string& path);
/// Writes with two-space indentation and a trailing newline (byte-stable).
void write_json_file(const std::string& path, const json& j);

/// "%.12g" rendering used for every floating-point value we emit.
std::string format_double(double v);
/// A complex number as ["re", "im"] strings.
json complex_to_json(const std::complex<double>& z);

/// Group files: {"name": string, "order": n, "table": [[int;n];n]} with the
/// identity at index 0; the full group axiom suite runs before acceptance.
FiniteGroup group_from_json(const json& j, const std::string& context);
FiniteGroup load_group_file(const std::string& path);
json group_to_json(const FiniteGroup& g);

/// Groupoid files: {"objects": n, "morphisms": [{"src": int, "dst": int}],
/// "compose": [[int]] with -1 where undefined}.  Identities are derived
/// (the unique idempotent at each object) and all axioms are validated.
Groupoid groupoid_from_json(const json& j, const std::string& context);
Groupoid load_groupoid_file(const std::string& path);
json groupoid_to_json(const Groupoid& g);

/// Cocycle files: {"group": name-or-path, "degree": n, "phases": nested
/// array} with axis order [g_n][...][g_1] (outermost axis = last-applied
/// slot) and innermost entries "p/q" ("0/1" trivial, "1/2" = -1).
struct CocycleFile {
  std::string group;
  int degree;
  std::vector<Phase> phases;  // flattened, g_n-major
};
CocycleFile cocycle_file_from_json(const json& j, const std::string& context);
CocycleFile load_cocycle_file(const std::string& path);

/// Materializes a loaded cocycle file on the one-object groupoid of its
/// group (no cocycle-condition check here; see cochain_report).
Cochain cochain_from_file(const CocycleFile& file, const Groupoid& one_object_base);
json cocycle_to_json(const Cochain& c, const std::string& group_name);

/// {"cocycle": bool, "normalized": bool, "violation": tuple-or-null}.
json cochain_report(const Cochain& c);

/// A cochain on an arbitrary groupoid, listed tuple by tuple in canonical
/// enumeration order: {"degree": n, "values": [{"tuple": [...],
/// "value": "p/q"}]} (degree 0 tuples hold the object id).
json cochain_values_json(const Cochain& c);

/// {"conductor": N, "coeffs": ["a/b", ...]}; integer values additionally
/// carry {"int": k}.
json cyclotomic_to_json(const Cyclotomic& v);

/// Representation files for induction: {"dim": d, "matrices": [m_0, ...]}
/// with one row-major matrix of [re, im] pairs per group element of the
/// centralizer, identity first.
struct RepFile {
  int dim;
  std::vector<Eigen::MatrixXcd> matrices;
};
RepFile rep_file_from_json(const json& j, const std::string& context);
RepFile load_rep_file(const std::string& path);
json rep_to_json(const std::vector<Eigen::MatrixXcd>& matrices);

}  // namespace qdouble::io
