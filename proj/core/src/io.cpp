#include "qdouble/io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace qdouble::io {

namespace {

[[noreturn]] void fail(const std::string& context, const std::string& what) {
  throw std::invalid_argument(context + ": " + what);
}

int require_int(const json& j, const char* key, const std::string& context) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    fail(context, std::string("missing integer field \"") + key + "\"");
  }
  return j[key].get<int>();
}

std::string require_string(const json& j, const char* key,
                           const std::string& context) {
  if (!j.contains(key) || !j[key].is_string()) {
    fail(context, std::string("missing string field \"") + key + "\"");
  }
  return j[key].get<std::string>();
}

void flatten_phases(const json& node, int levels, int width,
                    std::vector<Phase>& out, const std::string& context) {
  if (levels == 0) {
    if (!node.is_string()) {
      fail(context, "innermost phase entries must be \"p/q\" strings");
    }
    out.push_back(Phase::parse(node.get<std::string>()));
    return;
  }
  if (!node.is_array() || static_cast<int>(node.size()) != width) {
    fail(context, "phases array has the wrong shape");
  }
  for (const json& child : node) {
    flatten_phases(child, levels - 1, width, out, context);
  }
}

json nest_phases(const Cochain& c, std::vector<int>& tuple, int slot, int width) {
  if (slot == static_cast<int>(tuple.size())) {
    return json(c(std::span<const int>(tuple)).str());
  }
  json arr = json::array();
  for (int g = 0; g < width; ++g) {
    tuple[slot] = g;
    arr.push_back(nest_phases(c, tuple, slot + 1, width));
  }
  return arr;
}

std::string rational_str(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open " + path);
  }
  try {
    return json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) {
    throw std::invalid_argument("cannot write " + path);
  }
  out << text;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

json complex_to_json(const std::complex<double>& z) {
  return json::array({format_double(z.real()), format_double(z.imag())});
}

FiniteGroup group_from_json(const json& j, const std::string& context) {
  const std::string name = require_string(j, "name", context);
  const int order = require_int(j, "order", context);
  if (order <= 0) fail(context, "order must be positive");
  if (!j.contains("table") || !j["table"].is_array() ||
      static_cast<int>(j["table"].size()) != order) {
    fail(context, "table must be an order x order array");
  }
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(order) * order);
  for (const json& row : j["table"]) {
    if (!row.is_array() || static_cast<int>(row.size()) != order) {
      fail(context, "table must be an order x order array");
    }
    for (const json& e : row) {
      if (!e.is_number_integer()) fail(context, "table entries must be integers");
      flat.push_back(e.get<int>());
    }
  }
  return FiniteGroup(name, std::move(flat));
}

FiniteGroup load_group_file(const std::string& path) {
  return group_from_json(read_json_file(path), path);
}

json group_to_json(const FiniteGroup& g) {
  json table = json::array();
  for (int h = 0; h < g.order(); ++h) {
    json row = json::array();
    for (int k = 0; k < g.order(); ++k) row.push_back(g.mul(h, k));
    table.push_back(std::move(row));
  }
  return json{{"name", g.name()}, {"order", g.order()}, {"table", std::move(table)}};
}

Groupoid groupoid_from_json(const json& j, const std::string& context) {
  const int objects = require_int(j, "objects", context);
  if (!j.contains("morphisms") || !j["morphisms"].is_array()) {
    fail(context, "missing morphisms array");
  }
  std::vector<int> src, dst;
  for (const json& m : j["morphisms"]) {
    src.push_back(require_int(m, "src", context));
    dst.push_back(require_int(m, "dst", context));
  }
  const int count = static_cast<int>(src.size());
  if (!j.contains("compose") || !j["compose"].is_array() ||
      static_cast<int>(j["compose"].size()) != count) {
    fail(context, "compose must be a morphisms x morphisms array");
  }
  std::vector<std::int32_t> table;
  table.reserve(static_cast<std::size_t>(count) * count);
  for (const json& row : j["compose"]) {
    if (!row.is_array() || static_cast<int>(row.size()) != count) {
      fail(context, "compose must be a morphisms x morphisms array");
    }
    for (const json& e : row) {
      if (!e.is_number_integer()) fail(context, "compose entries must be integers");
      table.push_back(e.get<std::int32_t>());
    }
  }
  // Identities are not stored in the file: recover each as the unique
  // idempotent automorphism at its object.
  std::vector<int> identities(objects, -1);
  for (int m = 0; m < count; ++m) {
    if (src[m] == dst[m] && table[static_cast<std::size_t>(m) * count + m] == m) {
      if (src[m] >= 0 && src[m] < objects) {
        if (identities[src[m]] != -1) {
          fail(context, "object " + std::to_string(src[m]) +
                            " has two idempotent automorphisms");
        }
        identities[src[m]] = m;
      }
    }
  }
  for (int x = 0; x < objects; ++x) {
    if (identities[x] == -1) {
      fail(context, "object " + std::to_string(x) + " has no identity");
    }
  }
  return Groupoid(objects, std::move(src), std::move(dst), std::move(identities),
                  std::move(table));
}

Groupoid load_groupoid_file(const std::string& path) {
  return groupoid_from_json(read_json_file(path), path);
}

json groupoid_to_json(const Groupoid& g) {
  json morphisms = json::array();
  for (int m = 0; m < g.num_morphisms(); ++m) {
    morphisms.push_back(json{{"src", g.src(m)}, {"dst", g.dst(m)}});
  }
  json compose = json::array();
  for (int a = 0; a < g.num_morphisms(); ++a) {
    json row = json::array();
    for (int b = 0; b < g.num_morphisms(); ++b) row.push_back(g.try_compose(a, b));
    compose.push_back(std::move(row));
  }
  return json{{"objects", g.num_objects()},
              {"morphisms", std::move(morphisms)},
              {"compose", std::move(compose)}};
}

CocycleFile cocycle_file_from_json(const json& j, const std::string& context) {
  CocycleFile out;
  out.group = require_string(j, "group", context);
  out.degree = require_int(j, "degree", context);
  if (out.degree < 1 || out.degree > 4) {
    fail(context, "degree must be between 1 and 4");
  }
  if (!j.contains("phases") || !j["phases"].is_array() || j["phases"].empty()) {
    fail(context, "missing phases array");
  }
  const int width = static_cast<int>(j["phases"].size());
  flatten_phases(j["phases"], out.degree, width, out.phases, context);
  return out;
}

CocycleFile load_cocycle_file(const std::string& path) {
  return cocycle_file_from_json(read_json_file(path), path);
}

Cochain cochain_from_file(const CocycleFile& file, const Groupoid& one_object_base) {
  if (one_object_base.num_objects() != 1) {
    throw std::invalid_argument("cocycle files require a one-object groupoid");
  }
  const int n = one_object_base.num_morphisms();
  std::size_t expected = 1;
  for (int i = 0; i < file.degree; ++i) expected *= static_cast<std::size_t>(n);
  if (file.phases.size() != expected) {
    throw std::invalid_argument("cocycle file has " +
                                std::to_string(file.phases.size()) +
                                " phases, expected " + std::to_string(expected));
  }
  return Cochain(one_object_base, file.degree, [&](std::span<const int> t) {
    // Axis order [g_n][...][g_1]: tuple slot 0 (the last-applied morphism)
    // is the outermost axis.
    std::size_t index = 0;
    for (int v : t) index = index * static_cast<std::size_t>(n) + v;
    return file.phases[index];
  });
}

json cocycle_to_json(const Cochain& c, const std::string& group_name) {
  if (c.base().num_objects() != 1) {
    throw std::invalid_argument("cocycle_to_json requires a one-object groupoid");
  }
  if (c.degree() < 1) {
    throw std::invalid_argument("cocycle_to_json requires degree >= 1");
  }
  std::vector<int> tuple(c.degree(), 0);
  return json{{"group", group_name},
              {"degree", c.degree()},
              {"phases", nest_phases(c, tuple, 0, c.base().num_morphisms())}};
}

json cochain_report(const Cochain& c) {
  json report{{"cocycle", c.is_cocycle()}, {"normalized", c.normalized()}};
  const auto violation = c.first_violation();
  report["violation"] = violation ? json(*violation) : json(nullptr);
  return report;
}

json cochain_values_json(const Cochain& c) {
  json values = json::array();
  for_each_composable(c.base(), c.degree(), [&](std::span<const int> t) {
    values.push_back(json{{"tuple", std::vector<int>(t.begin(), t.end())},
                          {"value", c(t).str()}});
  });
  return json{{"degree", c.degree()}, {"values", std::move(values)}};
}

json cyclotomic_to_json(const Cyclotomic& v) {
  // Coefficients are listed against e^{2 pi i k / N} for k = 0..N-1; the
  // canonical form only populates exponents below phi(N).
  json coeffs = json::array();
  for (const Rational& r : v.coeffs()) coeffs.push_back(rational_str(r));
  for (int k = static_cast<int>(v.coeffs().size()); k < v.conductor(); ++k) {
    coeffs.push_back("0/1");
  }
  json out{{"conductor", v.conductor()}, {"coeffs", std::move(coeffs)}};
  if (v.is_rational() &&
      boost::multiprecision::denominator(v.as_rational()) == 1) {
    out["int"] = v.as_integer();
  }
  return out;
}

RepFile rep_file_from_json(const json& j, const std::string& context) {
  RepFile out;
  out.dim = require_int(j, "dim", context);
  if (out.dim <= 0) fail(context, "dim must be positive");
  if (!j.contains("matrices") || !j["matrices"].is_array()) {
    fail(context, "missing matrices array");
  }
  for (const json& mj : j["matrices"]) {
    if (!mj.is_array() || static_cast<int>(mj.size()) != out.dim) {
      fail(context, "each matrix must be dim x dim");
    }
    Eigen::MatrixXcd m(out.dim, out.dim);
    for (int r = 0; r < out.dim; ++r) {
      const json& row = mj[r];
      if (!row.is_array() || static_cast<int>(row.size()) != out.dim) {
        fail(context, "each matrix must be dim x dim");
      }
      for (int cidx = 0; cidx < out.dim; ++cidx) {
        const json& e = row[cidx];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() ||
            !e[1].is_number()) {
          fail(context, "matrix entries must be [re, im] pairs");
        }
        m(r, cidx) = std::complex<double>(e[0].get<double>(), e[1].get<double>());
      }
    }
    out.matrices.push_back(std::move(m));
  }
  return out;
}

RepFile load_rep_file(const std::string& path) {
  return rep_file_from_json(read_json_file(path), path);
}

json rep_to_json(const std::vector<Eigen::MatrixXcd>& matrices) {
  json out = json::array();
  for (const Eigen::MatrixXcd& m : matrices) {
    json mj = json::array();
    for (long r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (long c = 0; c < m.cols(); ++c) {
        row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
      }
      mj.push_back(std::move(row));
    }
    out.push_back(std::move(mj));
  }
  return out;
}

}  // namespace qdouble::io
