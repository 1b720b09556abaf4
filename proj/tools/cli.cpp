#include "cli.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "cutideal/calculus.hpp"
#include "cutideal/io.hpp"

namespace cutideal::cli {

namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string graph, other, binomial, order = "degrevlex", format = "text", emit_graph;
  Vertex i = 0, j = 0;
  int degree_bound = 4;
  int cases = 5;
  bool raw = false;
  std::uint64_t seed = 1;
};

TermOrder parse_order(const std::string& name) {
  if (name == "degrevlex") return TermOrder::degrevlex();
  if (name == "lex") return TermOrder::lex();
  throw Usage("unknown order '" + name + "'");
}

void print_ideal(const Ideal& ideal, const std::string& format, std::ostream& out) {
  if (format == "json")
    out << ideal_to_json(ideal) << '\n';
  else
    out << format_ideal_text(ideal);
}

int report(const Report& r, std::ostream& out) {
  out << r.format();
  return r.ok() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized cut ideals of labelled graphs with multiplicities", "cutideal"};
  app.require_subcommand(1, 1);
  Options o;
  std::function<int()> action;

  auto graph_arg = [&](CLI::App* sub, std::string& target, const char* name) {
    sub->add_option(name, target, "graph JSON file")->required();
  };
  auto pair_args = [&](CLI::App* sub) {
    sub->add_option("i", o.i, "first vertex")->required();
    sub->add_option("j", o.j, "second vertex")->required();
  };
  auto format_flag = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };

  auto* matrix = app.add_subcommand("matrix", "exponent matrix of the monomial map");
  graph_arg(matrix, o.graph, "graph");
  matrix->callback([&] {
    action = [&] {
      out << format_matrix(exponent_matrix(read_graph_file(o.graph)));
      return 0;
    };
  });

  auto* ideal = app.add_subcommand("ideal", "reduced Groebner basis of the cut ideal");
  graph_arg(ideal, o.graph, "graph");
  ideal->add_option("--order", o.order, "degrevlex or lex")->check(CLI::IsMember({"degrevlex", "lex"}));
  format_flag(ideal);
  ideal->callback([&] {
    action = [&] {
      const Ideal i = toric_ideal(read_graph_file(o.graph));
      print_ideal(o.order == "degrevlex" ? i : reduced_groebner(i, parse_order(o.order)), o.format, out);
      return 0;
    };
  });

  auto* dim = app.add_subcommand("dim", "dimension of the affine cut variety");
  graph_arg(dim, o.graph, "graph");
  dim->callback([&] {
    action = [&] {
      out << rank(exponent_matrix(read_graph_file(o.graph))) << '\n';
      return 0;
    };
  });

  auto* coll = app.add_subcommand("collapse", "identify two non-adjacent vertices");
  graph_arg(coll, o.graph, "graph");
  pair_args(coll);
  coll->add_option("--emit-graph", o.emit_graph, "also write the collapsed graph here");
  coll->callback([&] {
    action = [&] {
      const CollapseResult c = collapse(read_graph_file(o.graph), o.i, o.j);
      const std::string json = graph_to_json(c.graph);
      out << "kind: " << to_string(c.kind) << '\n' << json << '\n';
      if (!o.emit_graph.empty()) {
        std::ofstream file(o.emit_graph);
        if (!(file << json << '\n')) throw Usage("cannot write " + o.emit_graph);
      }
      return 0;
    };
  });

  auto* coll_ideal = app.add_subcommand("collapse-ideal", "cut ideal of a collapse by kill/substitute");
  graph_arg(coll_ideal, o.graph, "graph");
  pair_args(coll_ideal);
  format_flag(coll_ideal);
  coll_ideal->callback([&] {
    action = [&] {
      print_ideal(collapse_ideal(read_graph_file(o.graph), o.i, o.j), o.format, out);
      return 0;
    };
  });

  auto* uni = app.add_subcommand("union", "cut ideal of a disjoint union by composition");
  graph_arg(uni, o.graph, "left");
  graph_arg(uni, o.other, "right");
  uni->add_option("--degree-bound", o.degree_bound, "largest composed degree")->check(CLI::PositiveNumber);
  uni->add_flag("--raw", o.raw, "print the composed binomials instead of the reduced basis");
  format_flag(uni);
  uni->callback([&] {
    action = [&] {
      const Ideal composed = union_ideal(read_graph_file(o.graph), read_graph_file(o.other), o.degree_bound);
      print_ideal(o.raw ? composed : reduced_groebner(composed, TermOrder::degrevlex()), o.format, out);
      return 0;
    };
  });

  auto* member = app.add_subcommand("member", "is a binomial in the cut ideal");
  graph_arg(member, o.graph, "graph");
  member->add_option("binomial", o.binomial, "e.g. \"r{1|23}*r{3|12} - r{2|13}*r{123|.}\"")->required();
  member->callback([&] {
    action = [&] {
      const Graph g = read_graph_file(o.graph);
      const bool yes = membership(g, parse_binomial(o.binomial, g.vertex_count()));
      out << (yes ? "yes" : "no") << '\n';
      return yes ? 0 : 1;
    };
  });

  auto* verify = app.add_subcommand("verify", "cross-check the calculus against direct computation");
  verify->require_subcommand(1, 1);
  auto* v_coll = verify->add_subcommand("collapse", "matrix identity and kill/substitute for one collapse");
  graph_arg(v_coll, o.graph, "graph");
  pair_args(v_coll);
  v_coll->callback([&] {
    action = [&] { return report(verify_collapse(read_graph_file(o.graph), o.i, o.j), out); };
  });
  auto* v_union = verify->add_subcommand("union", "column mixing and composed union ideal");
  graph_arg(v_union, o.graph, "left");
  graph_arg(v_union, o.other, "right");
  v_union->add_option("--degree-bound", o.degree_bound, "largest composed degree")->check(CLI::PositiveNumber);
  v_union->callback([&] {
    action = [&] {
      return report(verify_union(read_graph_file(o.graph), read_graph_file(o.other), o.degree_bound), out);
    };
  });
  auto* v_mult = verify->add_subcommand("multiplicity", "random multiplicities leave the cut ideal unchanged");
  graph_arg(v_mult, o.graph, "graph");
  v_mult->add_option("--seed", o.seed, "random seed");
  v_mult->add_option("--cases", o.cases, "number of random multiplicity maps")->check(CLI::PositiveNumber);
  v_mult->callback([&] {
    action = [&] { return report(verify_multiplicity(read_graph_file(o.graph), o.seed, o.cases), out); };
  });
  auto* v_mat = verify->add_subcommand("matrices", "multiplicity, relabel and collapse matrix identities");
  graph_arg(v_mat, o.graph, "graph");
  v_mat->add_option("--seed", o.seed, "random seed");
  v_mat->callback([&] {
    action = [&] { return report(verify_matrices(read_graph_file(o.graph), o.seed), out); };
  });

  std::vector<const char*> argv{"cutideal"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    return action();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return 2;
}

}  // namespace cutideal::cli
