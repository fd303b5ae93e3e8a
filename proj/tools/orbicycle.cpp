// orbicycle: exact cycle polynomials, orbital chromatic polynomials,
// reciprocity checks and desk-scale reciprocal-pair search.
//
// Points in cycle notation are 1-indexed on the command line and in output;
// JSON graph edges are 0-indexed.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "orbicycle/graph.hpp"
#include "orbicycle/group.hpp"
#include "orbicycle/group_polys.hpp"
#include "orbicycle/json_io.hpp"
#include "orbicycle/reciprocity.hpp"
#include "orbicycle/roots.hpp"
#include "orbicycle/search.hpp"

namespace {

using namespace orbicycle;
using nlohmann::json;

constexpr int kExitUsage = 64;
constexpr int kExitDomain = 65;

struct SuiteTable {
  bool all_pass = true;
  void row(const std::string& name, bool pass, const std::string& detail = "") {
    all_pass = all_pass && pass;
    std::printf("[%s] %s%s%s\n", pass ? "pass" : "FAIL", name.c_str(),
                detail.empty() ? "" : ": ", detail.c_str());
  }
};

void suite_parity(SuiteTable& table, long long cap) {
  for (const char* spec : {"A3", "A4", "A5", "A6", "A7", "C3", "C5", "C7", "D5", "wr(C3,C3)"}) {
    PermutationGroup g = named_group(spec, cap);
    table.row(std::string("parity ") + spec, check_parity(g).pass && !g.has_odd_element());
  }
}

void suite_product(SuiteTable& table, long long cap) {
  for (const char* spec :
       {"prod(S3,C2)", "prod(S4,A4)", "prod(C4,D4)", "prod(C2,C3)", "prod(S3,S4)"}) {
    GroupSpec parsed = parse_group_spec(spec);
    PermutationGroup g = named_group(parsed, cap);
    IntPoly enumerated = cycle_polynomial(g);
    IntPoly left = closed_form(parsed.parts[0]);
    IntPoly right = closed_form(parsed.parts[1]);
    table.row(std::string("product ") + spec,
              enumerated == closed_form(parsed) && enumerated == left * right);
  }
}

void suite_wreath(SuiteTable& table, long long cap) {
  for (const char* spec :
       {"wr(S3,S2)", "wr(C2,C2)", "wr(C3,C3)", "wr(C2,S3)", "wr(S3,C3)"}) {
    GroupSpec parsed = parse_group_spec(spec);
    table.row(std::string("wreath ") + spec,
              cycle_polynomial(named_group(parsed, cap)) == closed_form(parsed));
  }
  IntPoly f = closed_form(parse_group_spec("wr(S3,S2)"));
  table.row("wreath roots of F for wr(S3,S2) are -1,-2,-3",
            f.eval(-3) == 0 && negative_root_run(f) == 3);
  IntPoly g = closed_form(parse_group_spec("wr(C3,S5)"));
  table.row("wreath wr(C3,S5) has root -2", g.eval(-2) == 0);
}

void suite_pgl(SuiteTable& table, long long cap) {
  for (int p : {3, 5, 7, 11}) {
    GroupSpec spec;
    spec.kind = GroupSpec::Kind::PGL2;
    spec.n = p;
    table.row("pgl closed form vs enumeration, p = " + std::to_string(p),
              cycle_polynomial(named_group(spec, cap)) == closed_form(spec));
  }
  GroupSpec p3;
  p3.kind = GroupSpec::Kind::PGL2;
  p3.n = 3;
  table.row("pgl PGL2(3) equals the S4 closed form", closed_form(p3) == rising_factorial(4));
  GroupSpec p5;
  p5.kind = GroupSpec::Kind::PGL2;
  p5.n = 5;
  table.row("pgl PGL2(5) attains the set-transitive equality at 2",
            closed_form(p5).eval(2) == Int(7) * 120);
}

void suite_star_theorem(SuiteTable& table, long long cap) {
  for (int k = 1; k <= 3; ++k) {
    GroupSpec sk;
    sk.kind = GroupSpec::Kind::Symmetric;
    sk.n = k;
    bool all_ok = true;
    for (const auto& top : enumerate_subgroups(named_group(sk, cap), cap)) {
      StarTheoremReport rep = check_star_theorem(k, top, cap);
      all_ok = all_ok && rep.is_reciprocal && rep.eq1_holds;
    }
    table.row("star-theorem converse family, k = " + std::to_string(k), all_ok);
  }
  for (int n : {3, 5}) {
    bool all_ok = true;
    for (const Graph& tree : enumerate_trees(n)) {
      PermutationGroup aut = automorphism_group(tree);
      for (const auto& sub : enumerate_subgroups(aut, cap)) {
        bool recip = check_reciprocal(tree, sub).is_reciprocal;
        bool expect = star_theorem_bounds_hold(tree, sub);
        all_ok = all_ok && recip == expect && (!recip || tree_equation_holds(sub));
      }
    }
    table.row("star-theorem tree sweep, n = " + std::to_string(n), all_ok);
  }
}

void suite_paper_examples(SuiteTable& table, long long cap) {
  table.row("F for S4", cycle_polynomial(named_group("S4", cap)).to_string() ==
                            "x^4 + 6x^3 + 11x^2 + 6x");
  table.row("F for C6", cycle_polynomial(named_group("C6", cap)).to_string() ==
                            "x^6 + x^3 + 2x^2 + 2x");
  IntPoly d4_factored = IntPoly::x() * IntPoly(std::vector<Int>{1, 1}) *
                        IntPoly(std::vector<Int>{2, 1, 1});
  table.row("F for D4 factors as x(x+1)(x^2+x+2)",
            cycle_polynomial(named_group("D4", cap)) == d4_factored);

  ReciprocityReport cyc4 = check_reciprocal(build_graph("Cyc4"), named_group("D4", cap));
  IntPoly cyc4_orbital = IntPoly::x() * IntPoly(std::vector<Int>{-1, 1}) *
                         IntPoly(std::vector<Int>{2, -1, 1});
  table.row("(Cyc4, D4) reciprocal with the displayed polynomials",
            cyc4.is_reciprocal && cyc4.orbital == cyc4_orbital && cyc4.t == 2 && cyc4.t0 == 2);

  PermutationGroup path_swap = PermutationGroup::from_generators(
      3, {Permutation::from_cycles(3, {{0, 2}})}, cap);
  ReciprocityReport path3 = check_reciprocal(build_graph("Path3"), path_swap);
  table.row("(Path3, C2) reciprocal with the displayed polynomials",
            path3.is_reciprocal &&
                path3.orbital == IntPoly(std::vector<Int>{0, 0, -1, 1}) &&
                cycle_polynomial(path_swap) == IntPoly(std::vector<Int>{0, 0, 1, 1}));

  bool null_ok = true, complete_ok = true;
  for (const auto& sub : enumerate_subgroups(named_group("S4", cap), cap)) {
    null_ok = null_ok &&
              check_reciprocal(null_graph(4), sub).is_reciprocal == !sub.has_odd_element();
    complete_ok = complete_ok &&
                  check_reciprocal(complete_graph(4), sub).is_reciprocal == (sub.order() == 24);
  }
  table.row("null graph corollary over the subgroups of S4", null_ok);
  table.row("complete graph corollary over the subgroups of S4", complete_ok);

  ReciprocityReport k33 = check_reciprocal(build_graph("Kmulti(3,3)"), named_group("wr(S3,S2)", cap));
  table.row("(K33, S3 wr S2) is not a reciprocal pair", !k33.is_reciprocal);

  bool knm_ok = true;
  for (int n = 3; n <= 5; ++n)
    for (int m = n; m <= 5; ++m) {
      GroupSpec spec = parse_group_spec("prod(S" + std::to_string(n) + ",S" + std::to_string(m) + ")");
      ReciprocityReport rep =
          check_reciprocal(complete_multipartite({n, m}), named_group(spec, cap));
      knm_ok = knm_ok && !rep.edge_lemma_holds && !rep.is_reciprocal;
    }
  table.row("K(n,m) with S_n x S_m fails the edge lemma for 2 < n <= m <= 5", knm_ok);

  Graph three_k3 = build_graph("union(K3,K3,K3)");
  ReciprocityReport wr_s3s3 = check_reciprocal(three_k3, named_group("wr(S3,S3)", cap));
  table.row("(3K3, S3 wr S3) passes the edge lemma but is not reciprocal",
            wr_s3s3.edge_lemma_holds && !wr_s3s3.is_reciprocal);
  ReciprocityReport wr_s3c3 = check_reciprocal(three_k3, named_group("wr(S3,C3)", cap));
  table.row("(3K3, S3 wr C3) is a reciprocal pair", wr_s3c3.is_reciprocal);

  for (int m = 1; m <= 3; ++m) {
    JoinFamilyReport rep = check_join_family(m, cap);
    table.row("join family m = " + std::to_string(m),
              rep.is_reciprocal && rep.factorization_holds);
  }
}

int run_verify(const std::string& suite, long long cap) {
  SuiteTable table;
  bool known = false;
  if (suite == "parity" || suite == "all") suite_parity(table, cap), known = true;
  if (suite == "product" || suite == "all") suite_product(table, cap), known = true;
  if (suite == "wreath" || suite == "all") suite_wreath(table, cap), known = true;
  if (suite == "pgl" || suite == "all") suite_pgl(table, cap), known = true;
  if (suite == "star-theorem" || suite == "all") suite_star_theorem(table, cap), known = true;
  if (suite == "paper-examples" || suite == "all") suite_paper_examples(table, cap), known = true;
  if (!known) {
    std::cerr << "unknown suite '" << suite
              << "' (expected parity, product, wreath, pgl, star-theorem, paper-examples, all)\n";
    return kExitUsage;
  }
  return table.all_pass ? 0 : 1;
}

void print_poly(const IntPoly& p, bool as_json) {
  if (as_json)
    std::cout << json{{"poly", poly_to_json(p)}, {"text", p.to_string()}}.dump() << "\n";
  else
    std::cout << p.to_string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orbicycle: cycle polynomials, orbital chromatic polynomials and reciprocal pairs"};
  app.require_subcommand(1);
  long long cap = default_order_cap();

  std::string group_arg, graph_arg, suite_arg, out_path;
  bool use_closed = false, as_json = false, conventional = false, numeric = false;
  double tol = 1e-10;
  SearchConfig cfg;
  bool no_filters = false;
  cfg.threads = std::max(1u, std::thread::hardware_concurrency());

  auto* cycle_poly = app.add_subcommand("cycle-poly", "cycle polynomial of a group");
  cycle_poly->add_option("groupspec", group_arg)->required();
  cycle_poly->add_flag("--closed-form", use_closed, "use the closed form, no enumeration");
  cycle_poly->add_flag("--json", as_json);

  auto* cyc_index = app.add_subcommand("cycle-index", "cycle index (unnormalized)");
  cyc_index->add_option("groupspec", group_arg)->required();
  cyc_index->add_flag("--json", as_json);

  auto* parker = app.add_subcommand("parker", "Parker vector");
  parker->add_option("groupspec", group_arg)->required();
  parker->add_flag("--conventional", conventional, "multiply entry k by k");
  parker->add_flag("--json", as_json);

  auto* fixed = app.add_subcommand("fixed-point", "fixed point polynomial");
  fixed->add_option("groupspec", group_arg)->required();
  fixed->add_flag("--json", as_json);

  auto* chromatic = app.add_subcommand("chromatic", "chromatic polynomial of a graph");
  chromatic->add_option("graphspec", graph_arg)->required();
  chromatic->add_flag("--json", as_json);

  auto* orbital = app.add_subcommand("orbital", "orbital chromatic polynomial");
  orbital->add_option("graphspec", graph_arg)->required();
  orbital->add_option("groupspec", group_arg)->required();
  orbital->add_flag("--json", as_json);

  auto* check = app.add_subcommand("check", "reciprocal pair check (exit 0 yes, 1 no, 2 not invariant)");
  check->add_option("graphspec", graph_arg)->required();
  check->add_option("groupspec", group_arg)->required();
  check->add_flag("--json", as_json);

  auto* roots_cmd = app.add_subcommand("roots", "root structure of the cycle polynomial");
  roots_cmd->add_option("groupspec", group_arg)->required();
  roots_cmd->add_flag("--numeric", numeric, "CSV of numeric roots: re,im,residual");
  roots_cmd->add_option("--tol", tol, "residual tolerance for numeric roots");

  auto* search = app.add_subcommand("search", "exhaustive reciprocal-pair search");
  search->add_option("--n", cfg.n, "vertex count")->required();
  search->add_option("--max-aut", cfg.max_aut_order, "subgroup enumeration cap");
  search->add_flag("--no-filters", no_filters, "disable edge-bound and edge-lemma pruning");
  search->add_option("--threads", cfg.threads, "worker threads");
  search->add_option("--out", out_path, "write certificates to this JSON file");

  auto* verify = app.add_subcommand("verify", "run a named identity suite");
  verify->add_option("suite", suite_arg, "parity|product|wreath|pgl|star-theorem|paper-examples|all")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << (e.what() ? e.what() : "usage error") << "\n";
    return kExitUsage;
  }

  try {
    if (cycle_poly->parsed()) {
      GroupSpec spec = parse_group_spec(group_arg);
      print_poly(use_closed ? closed_form(spec) : cycle_polynomial(named_group(spec, cap)), as_json);
    } else if (cyc_index->parsed()) {
      CycleIndex z = cycle_index(named_group(group_arg, cap));
      if (as_json)
        std::cout << cycle_index_to_json(z).dump() << "\n";
      else
        std::cout << z.to_string() << "\n";
    } else if (parker->parsed()) {
      PermutationGroup g = named_group(group_arg, cap);
      std::vector<Rat> vec = parker_vector(cycle_index(g), g.order(), conventional);
      if (as_json) {
        json arr = json::array();
        for (const Rat& r : vec) arr.push_back(r.str());
        std::cout << json{{"parker", arr}}.dump() << "\n";
      } else {
        for (size_t i = 0; i < vec.size(); ++i)
          std::cout << (i ? " " : "") << vec[i].str();
        std::cout << "\n";
      }
    } else if (fixed->parsed()) {
      PermutationGroup g = named_group(group_arg, cap);
      print_poly(fixed_point_polynomial(cycle_index(g)), as_json);
    } else if (chromatic->parsed()) {
      Graph g = build_graph(graph_arg);
      IntPoly p = chromatic_polynomial(g);
      if (as_json)
        std::cout << json{{"graph", graph_to_json(g)}, {"chromatic_poly", poly_to_json(p)}}.dump()
                  << "\n";
      else
        std::cout << p.to_string() << "\n";
    } else if (orbital->parsed()) {
      print_poly(orbital_chromatic_polynomial(build_graph(graph_arg), named_group(group_arg, cap)),
                 as_json);
    } else if (check->parsed()) {
      Graph graph = build_graph(graph_arg);
      PermutationGroup g = named_group(group_arg, cap);
      if (!is_invariant(graph, g)) {
        std::cerr << "NotInvariant: the graph is not invariant under the group\n";
        return 2;
      }
      ReciprocityReport rep = check_reciprocal(graph, g, group_arg);
      if (as_json) {
        std::cout << json{{"graph", graph_to_json(graph)},
                          {"group", group_arg},
                          {"group_order", rep.group_order},
                          {"orbital_poly", poly_to_json(rep.orbital)},
                          {"reflected_cycle_poly", poly_to_json(rep.reflected)},
                          {"is_reciprocal", rep.is_reciprocal},
                          {"edge_lemma_holds", rep.edge_lemma_holds},
                          {"transpositions", rep.t},
                          {"nonedge_transpositions", rep.t0},
                          {"first_mismatch", rep.first_mismatch}}
                         .dump()
                  << "\n";
      } else {
        std::cout << "orbital:   " << rep.orbital.to_string() << "\n";
        std::cout << "reflected: " << rep.reflected.to_string() << "\n";
        std::cout << (rep.is_reciprocal ? "reciprocal" : "not reciprocal") << "\n";
      }
      return rep.is_reciprocal ? 0 : 1;
    } else if (roots_cmd->parsed()) {
      IntPoly f = cycle_polynomial(named_group(group_arg, cap));
      if (numeric) {
        std::cout << "re,im,residual\n";
        char buf[128];
        for (const RootApprox& r : complex_roots(f, tol)) {
          std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.3g", r.re, r.im, r.residual);
          std::cout << buf << "\n";
        }
      } else {
        auto [zero_mult, rest] = strip_zero_roots(f);
        std::cout << "degree: " << f.degree() << "\n";
        std::cout << "root 0 multiplicity: " << zero_mult << "\n";
        std::cout << "negative integer root run: " << negative_root_run(f) << "\n";
        (void)rest;
      }
    } else if (search->parsed()) {
      if (no_filters) {
        cfg.use_edge_bound = false;
        cfg.use_edge_lemma = false;
      }
      SearchResult result = find_reciprocal_pairs(cfg);
      json out = certificates_to_json(result.certificates);
      if (out_path.empty()) {
        std::cout << out.dump(2) << "\n";
      } else {
        std::ofstream file(out_path);
        if (!file) fail("BadSpec", "cannot open output file " + out_path);
        file << out.dump(2) << "\n";
      }
      std::cerr << result.certificates.size() << " certificate(s)";
      if (!result.skipped.empty())
        std::cerr << ", " << result.skipped.size() << " graph(s) skipped (automorphism cap)";
      std::cerr << "\n";
      for (const auto& note : result.skipped) std::cerr << "  skipped: " << note << "\n";
    } else if (verify->parsed()) {
      return run_verify(suite_arg, cap);
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";  // what() is already "Kind: message"
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return 0;
}
