#include "qdouble/run.hpp"

#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qdouble/algebra.hpp"
#include "qdouble/builtins.hpp"

namespace qdouble::run {

namespace {

using io::json;

FiniteGroup resolve_group(const std::string& spec) {
  if (builtins::is_group_spec(spec)) return builtins::make_group(spec);
  return io::load_group_file(spec);
}

std::string tuple_str(const std::vector<int>& t) {
  std::ostringstream s;
  s << "(";
  for (std::size_t i = 0; i < t.size(); ++i) s << (i ? ", " : "") << t[i];
  s << ")";
  return s.str();
}

void require_cocycle(const Cochain& c, const std::string& what) {
  if (const auto v = c.first_violation()) {
    throw std::invalid_argument(what + ": not a cocycle, first violation at " +
                                tuple_str(*v));
  }
  if (!c.normalized()) {
    throw std::invalid_argument(what + ": cocycle is not normalized");
  }
}

json labels_json(const LoopGroupoid& loop) {
  return json{{"object_loop", loop.object_loop}, {"morphism_g", loop.morphism_g}};
}

/// Retraction data for a connected groupoid rooted at a chosen object,
/// with connectors found breadth first.
RetractionData rooted_retraction_data(const Groupoid& g, int root) {
  RetractionData data;
  data.basepoint.assign(g.num_objects(), root);
  data.to_basepoint.assign(g.num_objects(), -1);
  data.to_basepoint[root] = g.identity_at(root);
  std::vector<int> queue{root};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const int y = queue[qi];
    for (int m : g.from(y)) {
      const int z = g.dst(m);
      if (data.to_basepoint[z] == -1) {
        // f_z = f_y after m^-1 : z -> y -> root.
        data.to_basepoint[z] = g.compose(data.to_basepoint[y], g.inverse(m));
        queue.push_back(z);
      }
    }
  }
  for (int y = 0; y < g.num_objects(); ++y) {
    if (data.to_basepoint[y] == -1) {
      throw std::invalid_argument("rooted_retraction_data: groupoid is not connected");
    }
  }
  return data;
}

json cmd_check_cocycle(const RunConfig& config) {
  const Problem p = load_problem(config);
  json report{{"group", p.group.name()}, {"degree", p.cochain.degree()}};
  report.update(io::cochain_report(p.cochain));
  return report;
}

json cmd_transgress(const RunConfig& config) {
  if (config.times < 1 || config.times > 3) {
    throw std::invalid_argument("transgress: --times must be 1, 2 or 3");
  }
  const Problem p = load_problem(config);
  require_cocycle(p.cochain, "transgress");
  if (p.cochain.degree() < config.times) {
    throw std::invalid_argument("transgress: cocycle degree " +
                                std::to_string(p.cochain.degree()) +
                                " is smaller than --times " +
                                std::to_string(config.times));
  }
  std::vector<std::unique_ptr<LoopGroupoid>> loops;
  const Groupoid* base = p.delooping.get();
  Cochain current = p.cochain;
  for (int k = 0; k < config.times; ++k) {
    loops.push_back(std::make_unique<LoopGroupoid>(loop_groupoid(*base)));
    current = transgress(current, *loops.back());
    base = &loops.back()->gpd;
  }
  json report{{"group", p.group.name()},
              {"times", config.times},
              {"degree", current.degree()},
              {"loop_groupoid", io::groupoid_to_json(loops.back()->gpd)},
              {"labels", labels_json(*loops.back())}};
  report["cochain"] = io::cochain_values_json(current);
  report["is_cocycle"] = current.is_cocycle();
  report["normalized"] = current.normalized();
  return report;
}

/// The three irreducible counts of a twisted algebra: the exact center
/// dimension, the double-loop integral, and the group-level closed form
/// (commuting pairs for a degree-2 twist on a one-object base, commuting
/// triples for the transgressed twist of a double).  Asserts equality.
json counts_json(const TwistedAlgebra& algebra, const Problem& p, bool is_double) {
  const int center = algebra.center_dimension();
  const int integral = count_irreps(algebra.base(), algebra.twist());
  const int closed = is_double ? double_rank_formula(p.group, p.cochain)
                               : group_count_formula(p.group, p.cochain);
  if (center != integral || center != closed) {
    throw std::logic_error("irreducible counts disagree: center " +
                           std::to_string(center) + ", integral " +
                           std::to_string(integral) + ", closed form " +
                           std::to_string(closed));
  }
  return json{{"center", center},
              {"transgression_integral", integral},
              {"closed_form", closed}};
}

/// Builds the algebra a problem describes: the twisted double for a
/// degree-3 cochain, the twisted group algebra for a degree-2 cochain.
struct LoadedAlgebra {
  Problem problem;
  std::unique_ptr<DrinfeldDouble> dbl;        // degree 3 only
  std::unique_ptr<TwistedAlgebra> group_alg;  // degree 2 only
  const TwistedAlgebra* algebra;
  bool is_double;
};

LoadedAlgebra load_algebra(const RunConfig& config) {
  Problem p = load_problem(config);
  require_cocycle(p.cochain, config.command);
  LoadedAlgebra out{std::move(p), nullptr, nullptr, nullptr, false};
  if (out.problem.cochain.degree() == 3) {
    out.dbl = std::make_unique<DrinfeldDouble>(
        drinfeld_double(out.problem.group, out.problem.cochain));
    out.algebra = &out.dbl->algebra;
    out.is_double = true;
  } else if (out.problem.cochain.degree() == 2) {
    out.group_alg = std::make_unique<TwistedAlgebra>(*out.problem.delooping,
                                                     out.problem.cochain);
    out.algebra = out.group_alg.get();
  } else {
    throw std::invalid_argument(config.command +
                                ": need a degree-2 or degree-3 cocycle");
  }
  return out;
}

json decomposition_json(const TwistedAlgebra& algebra, const Decomposition& dec,
                        const json& counts) {
  const CharacterContext ctx = make_character_context(algebra);
  json irreps = json::array();
  for (const AlgebraRep& r : dec.irreps) {
    const TwistedCharacter chi = character(r, ctx);
    json char_values = json::array();
    for (const auto& [gamma, value] : chi.values) {
      (void)gamma;
      char_values.push_back(io::complex_to_json(value));
    }
    irreps.push_back(json{{"dim", r.dim}, {"character", std::move(char_values)}});
  }
  return json{{"dimension", algebra.dim()},
              {"irreps", std::move(irreps)},
              {"counts", counts}};
}

json cmd_double(const RunConfig& config) {
  Problem p = load_problem(config);
  require_cocycle(p.cochain, "double");
  if (p.cochain.degree() != 3) {
    throw std::invalid_argument("double: need a degree-3 cocycle");
  }
  const DrinfeldDouble dbl = drinfeld_double(p.group, p.cochain);
  const Groupoid& lg = dbl.loop->gpd;
  const int rank = double_rank_formula(p.group, p.cochain);
  const int center = dbl.algebra.center_dimension();
  if (rank != center) {
    throw std::logic_error("double: rank formula " + std::to_string(rank) +
                           " disagrees with center dimension " +
                           std::to_string(center));
  }
  return json{{"group", p.group.name()},
              {"order", p.group.order()},
              {"dimension", dbl.algebra.dim()},
              {"loop_objects", lg.num_objects()},
              {"loop_components", lg.num_components()},
              {"product_table_cross_checked", true},
              {"rank", rank},
              {"center", center}};
}

json cmd_irreps(const RunConfig& config) {
  const LoadedAlgebra la = load_algebra(config);
  const json counts = counts_json(*la.algebra, la.problem, la.is_double);
  const Decomposition dec = decompose(*la.algebra, config.seed);
  if (dec.center_dimension != counts["center"].get<int>()) {
    throw std::logic_error("irreps: decomposition center disagrees with counts");
  }
  json report = decomposition_json(*la.algebra, dec, counts);
  report["group"] = la.problem.group.name();
  report["twist_degree"] = la.problem.cochain.degree();
  return report;
}

json cmd_count(const RunConfig& config) {
  const LoadedAlgebra la = load_algebra(config);
  const json counts = counts_json(*la.algebra, la.problem, la.is_double);
  const int value = counts["center"].get<int>();
  json report{{"group", la.problem.group.name()},
              {"twist_degree", la.problem.cochain.degree()}};
  if (la.is_double) {
    report["rank"] = value;
    report["routes"] = json{{"commuting_triples", counts["closed_form"]},
                            {"loop_integral", counts["transgression_integral"]},
                            {"center", counts["center"]}};
  } else {
    report["count"] = value;
    report["routes"] = json{{"commuting_pairs", counts["closed_form"]},
                            {"loop_integral", counts["transgression_integral"]},
                            {"center", counts["center"]}};
  }
  return report;
}

json cmd_characters(const RunConfig& config) {
  const LoadedAlgebra la = load_algebra(config);
  const TwistedAlgebra& algebra = *la.algebra;
  const json counts = counts_json(algebra, la.problem, la.is_double);
  const Decomposition dec = decompose(algebra, config.seed);
  const CharacterContext ctx = make_character_context(algebra);

  std::vector<TwistedCharacter> chars;
  chars.reserve(dec.irreps.size());
  for (const AlgebraRep& r : dec.irreps) chars.push_back(character(r, ctx));

  // Gram matrix of the characters; must be the identity within 1e-6.
  double gram_dev = 0.0;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    for (std::size_t j = 0; j < chars.size(); ++j) {
      const std::complex<double> ip = char_inner_product(chars[i], chars[j]);
      gram_dev = std::max(gram_dev, std::abs(ip - (i == j ? 1.0 : 0.0)));
    }
  }
  if (gram_dev > 1e-6) {
    throw std::logic_error("characters: Gram matrix deviates from identity by " +
                           std::to_string(gram_dev));
  }

  const Groupoid& base = algebra.base();
  const std::vector<int> autos = base.automorphisms();
  json auto_list = json::array();
  for (int m : autos) {
    json entry{{"id", m}};
    if (la.is_double) {
      entry["x"] = la.dbl->loop->object_loop[base.src(m)];
      entry["g"] = la.dbl->loop->morphism_g[m];
    }
    auto_list.push_back(std::move(entry));
  }

  json table = json::array();
  for (std::size_t i = 0; i < chars.size(); ++i) {
    json row = json::array();
    for (int m : autos) row.push_back(io::complex_to_json(chars[i].values.at(m)));
    table.push_back(json{{"dim", dec.irreps[i].dim}, {"values", std::move(row)}});
  }

  json report{{"group", la.problem.group.name()},
              {"twist_degree", la.problem.cochain.degree()},
              {"dimension", algebra.dim()},
              {"counts", counts},
              {"automorphisms", std::move(auto_list)},
              {"characters", std::move(table)},
              {"gram_identity_deviation", io::format_double(gram_dev)}};

  if (la.is_double) {
    // Elliptic covariance: every irreducible character, read as a function
    // of commuting pairs (x, g), transforms under conjugation by the
    // six-omega ratio (verified exactly against the double transgression).
    const EllipticContext ectx =
        make_elliptic_context(la.problem.group, la.problem.cochain);
    double worst = 0.0;
    for (const TwistedCharacter& chi : chars) {
      std::map<std::pair<int, int>, std::complex<double>> values;
      for (const auto& [m, v] : chi.values) {
        values[{la.dbl->loop->object_loop[base.src(m)],
                la.dbl->loop->morphism_g[m]}] = v;
      }
      const EllipticCheck check = elliptic_character_check(ectx, values);
      worst = std::max(worst, check.worst_residual);
      if (!check.passed) {
        throw std::logic_error("characters: elliptic covariance fails with residual " +
                               io::format_double(check.worst_residual));
      }
    }
    report["elliptic"] = json{{"passed", true},
                              {"worst_residual", io::format_double(worst)}};
  }
  return report;
}

json cmd_induce(const RunConfig& config) {
  const LoadedAlgebra la = load_algebra(config);
  if (!la.is_double) {
    throw std::invalid_argument("induce: need a degree-3 cocycle (a double)");
  }
  const FiniteGroup& g = la.problem.group;
  if (config.at < 0 || config.at >= g.order()) {
    throw std::invalid_argument("induce: --at must name a group element");
  }
  if (config.rep.empty()) {
    throw std::invalid_argument("induce: --rep <file> is required");
  }
  const LoopGroupoid& loop = *la.dbl->loop;
  const Groupoid& lg = loop.gpd;

  // The loop object of the chosen element and its connected component.
  const int at_object = loop.loop_object[config.at];
  std::vector<int> comp_objects;
  for (int x = 0; x < lg.num_objects(); ++x) {
    if (lg.components()[x] == lg.components()[at_object]) comp_objects.push_back(x);
  }
  Subgroupoid comp = full_subgroupoid(lg, comp_objects);
  Cochain comp_twist(*comp.gpd, 2, [&](std::span<const int> t) {
    return la.dbl->algebra.twist()(
        {comp.morphism_to_parent[t[0]], comp.morphism_to_parent[t[1]]});
  });
  const TwistedAlgebra comp_algebra(*comp.gpd, std::move(comp_twist));

  int local_at = -1;
  for (std::size_t i = 0; i < comp.object_to_parent.size(); ++i) {
    if (comp.object_to_parent[i] == at_object) local_at = static_cast<int>(i);
  }
  const RetractionData data = rooted_retraction_data(*comp.gpd, local_at);

  // The representation file lists one matrix per centralizer element of
  // the chosen element, ascending (identity first) — the element order of
  // the basepoint automorphism algebra.
  const AutAlgebra centralizer = aut_algebra(comp_algebra, local_at);
  const io::RepFile rep_file = io::load_rep_file(config.rep);
  if (static_cast<int>(rep_file.matrices.size()) != centralizer.aut.group.order()) {
    throw std::invalid_argument(
        "induce: expected one matrix per centralizer element (" +
        std::to_string(centralizer.aut.group.order()) + "), got " +
        std::to_string(rep_file.matrices.size()));
  }
  AlgebraRep rho{&centralizer.algebra, rep_file.dim, rep_file.matrices};
  rho.validate(1e-9);

  const AlgebraRep induced = dpr_induce(comp_algebra, data, rho);
  const AlgebraRep extended = extend_by_zero(la.dbl->algebra, comp, induced);
  const CharacterContext ctx = make_character_context(la.dbl->algebra);
  const TwistedCharacter chi = character(extended, ctx);
  const int hom_self = rep_hom_dimension(extended, extended, ctx);

  json char_values = json::array();
  for (const auto& [gamma, value] : chi.values) {
    (void)gamma;
    char_values.push_back(io::complex_to_json(value));
  }
  return json{{"group", g.name()},
              {"at", config.at},
              {"centralizer_order", centralizer.aut.group.order()},
              {"input_dim", rho.dim},
              {"induced_dim", induced.dim},
              {"hom_self", hom_self},
              {"irreducible", hom_self == 1},
              {"character", std::move(char_values)}};
}

}  // namespace

Problem load_problem(const RunConfig& config) {
  std::string group_spec = config.group;
  const std::string& cocycle_spec = config.cocycle;

  std::optional<io::CocycleFile> file;
  if (!cocycle_spec.empty() && !builtins::is_cocycle_spec(cocycle_spec)) {
    file = io::load_cocycle_file(cocycle_spec);
  }
  if (group_spec.empty()) {
    if (builtins::is_cocycle_spec(cocycle_spec)) {
      group_spec = builtins::cocycle_group_spec(cocycle_spec);
    } else if (file) {
      group_spec = file->group;
    } else {
      throw std::invalid_argument("no group given (--group or a cocycle that names one)");
    }
  }
  FiniteGroup group = resolve_group(group_spec);

  // When the cocycle names its own group, the two sources must agree.
  if (!config.group.empty()) {
    std::optional<FiniteGroup> implied;
    if (builtins::is_cocycle_spec(cocycle_spec)) {
      implied = builtins::make_group(builtins::cocycle_group_spec(cocycle_spec));
    } else if (file && !file->group.empty() && file->group != config.group) {
      implied = resolve_group(file->group);
    }
    if (implied && (implied->order() != group.order() ||
                    implied->table() != group.table())) {
      throw std::invalid_argument("--group disagrees with the cocycle's group");
    }
  }

  auto dl = std::make_unique<Groupoid>(delooping(group));
  Cochain cochain = Cochain::trivial(*dl, 3);
  if (builtins::is_cocycle_spec(cocycle_spec)) {
    cochain = builtins::make_cocycle(cocycle_spec, *dl);
  } else if (file) {
    cochain = io::cochain_from_file(*file, *dl);
  }
  return Problem{std::move(group), std::move(dl), std::move(cochain)};
}

io::json run_command(const RunConfig& config) {
  if (config.command == "check-cocycle") return cmd_check_cocycle(config);
  if (config.command == "transgress") return cmd_transgress(config);
  if (config.command == "double") return cmd_double(config);
  if (config.command == "irreps") return cmd_irreps(config);
  if (config.command == "count") return cmd_count(config);
  if (config.command == "characters") return cmd_characters(config);
  if (config.command == "induce") return cmd_induce(config);
  throw std::invalid_argument("unknown command: " + config.command);
}

int run_cli(const RunConfig& config) {
  try {
    io::write_json_file(config.out, run_command(config));
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace qdouble::run
