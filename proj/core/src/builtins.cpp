#include "qdouble/builtins.hpp"

#include <charconv>
#include <stdexcept>
#include <vector>

namespace qdouble::builtins {

namespace {

bool has_prefix(const std::string& s, const char* prefix) {
  return s.rfind(prefix, 0) == 0;
}

int parse_count(const std::string& spec, std::size_t offset) {
  int n = 0;
  const char* first = spec.data() + offset;
  const char* last = spec.data() + spec.size();
  const auto [ptr, ec] = std::from_chars(first, last, n);
  if (ec != std::errc() || ptr != last || n <= 0) {
    throw std::invalid_argument("builtin group spec has a bad count: " + spec);
  }
  return n;
}

}  // namespace

bool is_group_spec(const std::string& spec) {
  return has_prefix(spec, "cyclic:") || has_prefix(spec, "product:") ||
         has_prefix(spec, "symmetric:") || has_prefix(spec, "dihedral:");
}

FiniteGroup make_group(const std::string& spec) {
  if (has_prefix(spec, "cyclic:")) {
    return build_cyclic(parse_count(spec, 7));
  }
  if (has_prefix(spec, "symmetric:")) {
    return build_symmetric(parse_count(spec, 10));
  }
  if (has_prefix(spec, "dihedral:")) {
    return build_dihedral(parse_count(spec, 9));
  }
  if (has_prefix(spec, "product:")) {
    std::vector<std::string> factors;
    std::size_t begin = 8;
    while (begin <= spec.size()) {
      const std::size_t comma = spec.find(',', begin);
      if (comma == std::string::npos) {
        factors.push_back(spec.substr(begin));
        break;
      }
      factors.push_back(spec.substr(begin, comma - begin));
      begin = comma + 1;
    }
    if (factors.size() < 2) {
      throw std::invalid_argument("product spec needs at least two factors: " + spec);
    }
    FiniteGroup acc = make_group(factors[0]);
    for (std::size_t i = 1; i < factors.size(); ++i) {
      acc = build_product(acc, make_group(factors[i]));
    }
    // Name the group by the flat spec so the name round-trips (the fold
    // would otherwise nest one "product:" prefix per factor).
    return FiniteGroup(spec, acc.table());
  }
  throw std::invalid_argument("unknown builtin group: " + spec);
}

bool is_cocycle_spec(const std::string& spec) {
  return has_prefix(spec, "cocycle:");
}

std::string cocycle_group_spec(const std::string& spec) {
  if (spec == "cocycle:z2cubed-omega") return "product:cyclic:2,cyclic:2,cyclic:2";
  if (spec == "cocycle:klein-thetaV") return "product:cyclic:2,cyclic:2";
  throw std::invalid_argument("unknown builtin cocycle: " + spec);
}

int cocycle_degree(const std::string& spec) {
  if (spec == "cocycle:z2cubed-omega") return 3;
  if (spec == "cocycle:klein-thetaV") return 2;
  throw std::invalid_argument("unknown builtin cocycle: " + spec);
}

Cochain make_cocycle(const std::string& spec, const Groupoid& one_object_base) {
  const int order = spec == "cocycle:z2cubed-omega"   ? 8
                    : spec == "cocycle:klein-thetaV" ? 4
                                                      : 0;
  if (order == 0) {
    throw std::invalid_argument("unknown builtin cocycle: " + spec);
  }
  if (one_object_base.num_objects() != 1 ||
      one_object_base.num_morphisms() != order) {
    throw std::invalid_argument("builtin cocycle " + spec +
                                " needs the one-object groupoid of its group");
  }
  if (spec == "cocycle:z2cubed-omega") {
    // Element index 4*u_a + 2*u_b + u_c; omega(u,v,w) = (-1)^{u_a v_b w_c}.
    return Cochain(one_object_base, 3, [](std::span<const int> t) {
      const int bit = ((t[0] >> 2) & 1) * ((t[1] >> 1) & 1) * (t[2] & 1);
      return bit ? Phase(1, 2) : Phase::one();
    });
  }
  // Element index 2*u_a + u_b; theta(u,v) = (-1)^{u_a v_b}.
  return Cochain(one_object_base, 2, [](std::span<const int> t) {
    const int bit = ((t[0] >> 1) & 1) * (t[1] & 1);
    return bit ? Phase(1, 2) : Phase::one();
  });
}

}  // namespace qdouble::builtins
