// Command-line front end: graph generation, transforms, structural
// parameters, Alon-Tarsi computations, certificates, and the reproduction
// harness. JSON on stdout unless noted.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "atgraph/alon_tarsi.hpp"
#include "atgraph/coefficient.hpp"
#include "atgraph/errors.hpp"
#include "atgraph/io.hpp"
#include "atgraph/repro.hpp"
#include "atgraph/structure.hpp"
#include "atgraph/transforms.hpp"

namespace {

using atgraph::Graph;

std::string read_all(const std::string& source) {
  if (source == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(source);
  if (!in) throw atgraph::Error("cannot open '" + source + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Graph load_graph(const std::string& source) {
  return atgraph::parse_graph(read_all(source));
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw atgraph::Error("cannot open '" + path + "' for writing");
  out << text;
}

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << '\n'; }

atgraph::FKind parse_op(const std::string& op) {
  auto kind = atgraph::parse_fkind(op);
  if (!kind) throw atgraph::Error("unknown operation '" + op + "'");
  return *kind;
}

std::vector<int> parse_targets(const std::string& text, int order) {
  std::vector<int> targets;
  if (text.rfind("all:", 0) == 0) {
    int value = std::stoi(text.substr(4));
    targets.assign(static_cast<size_t>(order), value);
    return targets;
  }
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) targets.push_back(std::stoi(item));
  return targets;
}

// Shared flags: most verbs read one graph; a few need a second.
struct CommonArgs {
  std::string input = "-";
  std::string partner;
  std::string emit_dot;
};

void add_input(CLI::App* cmd, CommonArgs& args, bool with_partner = false) {
  cmd->add_option("--in", args.input, "input graph (path or '-')");
  if (with_partner)
    cmd->add_option("--with", args.partner, "partner graph (path)")
        ->required();
}

void emit_graph(const Graph& g, const CommonArgs& args) {
  print_json(atgraph::graph_to_json(g));
  if (!args.emit_dot.empty())
    write_output(args.emit_dot, atgraph::to_dot(g));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph transforms, degeneracy, and Alon-Tarsi machinery"};
  app.require_subcommand(1);
  std::uint64_t seed = 12345;
  app.add_option("--seed", seed, "seed for randomized corpora")
      ->capture_default_str();

  // gen
  auto* gen = app.add_subcommand("gen", "generate a named family");
  std::string family;
  int gen_n = 0, gen_a = 0, gen_b = 0, gen_c = 0;
  CommonArgs gen_args;
  gen->add_option("--family", family, "path|cycle|star|complete|theta")
      ->required();
  gen->add_option("--n", gen_n, "order parameter (leaves for star)");
  gen->add_option("--a", gen_a, "theta path length a");
  gen->add_option("--b", gen_b, "theta path length b");
  gen->add_option("--c", gen_c, "theta path length c");
  gen->add_option("--emit-dot", gen_args.emit_dot, "also write DOT here");
  gen->callback([&] {
    Graph g;
    if (family == "path") g = atgraph::path(gen_n);
    else if (family == "cycle") g = atgraph::cycle(gen_n);
    else if (family == "star") g = atgraph::star(gen_n);
    else if (family == "complete") g = atgraph::complete(gen_n);
    else if (family == "theta") g = atgraph::theta(gen_a, gen_b, gen_c);
    else throw atgraph::Error("unknown family '" + family + "'");
    emit_graph(g, gen_args);
  });

  // build
  auto* build = app.add_subcommand(
      "build", "parse and validate a graph (JSON or edge list)");
  CommonArgs build_args;
  std::string build_format = "json";
  add_input(build, build_args);
  build->add_option("--out-format", build_format, "json|edgelist")
      ->capture_default_str();
  build->add_option("--emit-dot", build_args.emit_dot, "also write DOT here");
  build->callback([&] {
    Graph g = load_graph(build_args.input);
    if (build_format == "edgelist") {
      std::cout << atgraph::to_edgelist(g);
      if (!build_args.emit_dot.empty())
        write_output(build_args.emit_dot, atgraph::to_dot(g));
    } else {
      emit_graph(g, build_args);
    }
  });

  // transform
  auto* transform = app.add_subcommand("transform", "apply S, R, Q or T");
  CommonArgs tr_args;
  std::string tr_op;
  transform->add_option("--op", tr_op, "S|R|Q|T")->required();
  add_input(transform, tr_args);
  transform->add_option("--emit-dot", tr_args.emit_dot, "also write DOT here");
  transform->callback([&] {
    emit_graph(atgraph::apply(parse_op(tr_op), load_graph(tr_args.input)),
               tr_args);
  });

  // fsum
  auto* fsum = app.add_subcommand("fsum", "F-sum of two graphs");
  CommonArgs fsum_args;
  std::string fsum_op;
  fsum->add_option("--op", fsum_op, "S|R|Q|T")->required();
  add_input(fsum, fsum_args, true);
  fsum->add_option("--emit-dot", fsum_args.emit_dot, "also write DOT here");
  fsum->callback([&] {
    Graph g = load_graph(fsum_args.input);
    Graph h = load_graph(fsum_args.partner);
    emit_graph(atgraph::f_sum(g, h, parse_op(fsum_op)), fsum_args);
  });

  // cartesian
  auto* product = app.add_subcommand("cartesian", "Cartesian product");
  CommonArgs prod_args;
  add_input(product, prod_args, true);
  product->add_option("--emit-dot", prod_args.emit_dot, "also write DOT here");
  product->callback([&] {
    emit_graph(atgraph::cartesian(load_graph(prod_args.input),
                                  load_graph(prod_args.partner)),
               prod_args);
  });

  // degeneracy
  auto* degen = app.add_subcommand("degeneracy", "degeneracy and peel order");
  CommonArgs degen_args;
  add_input(degen, degen_args);
  degen->callback([&] {
    auto info = atgraph::degeneracy(load_graph(degen_args.input));
    print_json({{"degeneracy", info.degeneracy},
                {"coloring_number", info.coloring_number},
                {"elimination_order", info.elimination_order}});
  });

  // core
  auto* core = app.add_subcommand("core", "prune degree-<=1 vertices");
  CommonArgs core_args;
  add_input(core, core_args);
  core->add_option("--emit-dot", core_args.emit_dot, "also write DOT here");
  core->callback([&] {
    emit_graph(atgraph::core_of(load_graph(core_args.input)), core_args);
  });

  // classify
  auto* classify = app.add_subcommand("classify", "classify the core");
  CommonArgs cls_args;
  add_input(classify, cls_args);
  classify->callback([&] {
    Graph g = load_graph(cls_args.input);
    auto cls = atgraph::classify_core(atgraph::core_of(g));
    print_json({{"core_class", atgraph::to_string(cls)}});
  });

  // at2
  auto* at2 = app.add_subcommand("at2", "is AT(G) = 2 (connected input)");
  CommonArgs at2_args;
  add_input(at2, at2_args);
  at2->callback([&] {
    print_json(
        {{"at_equals_two", atgraph::at_equals_two(load_graph(at2_args.input))}});
  });

  // choosable2
  auto* ch2 = app.add_subcommand("choosable2",
                                 "is G 2-choosable (connected input)");
  CommonArgs ch2_args;
  add_input(ch2, ch2_args);
  ch2->callback([&] {
    print_json(
        {{"two_choosable", atgraph::two_choosable(load_graph(ch2_args.input))}});
  });

  // chromatic
  auto* chrom = app.add_subcommand("chromatic", "exact chromatic number");
  CommonArgs chrom_args;
  atgraph::ChromaticOptions chrom_opts;
  add_input(chrom, chrom_args);
  chrom->add_option("--max-colors", chrom_opts.max_colors)
      ->capture_default_str();
  chrom->callback([&] {
    print_json({{"chromatic",
                 atgraph::chromatic_number(load_graph(chrom_args.input),
                                           chrom_opts)}});
  });

  // density
  auto* density = app.add_subcommand("density", "maximum subgraph density");
  CommonArgs dens_args;
  add_input(density, dens_args);
  density->callback([&] {
    auto d = atgraph::max_density(load_graph(dens_args.input));
    print_json({{"density", d.to_string()},
                {"ceil", d.ceil_ratio()},
                {"witness", d.witness}});
  });

  // diff
  auto* diff = app.add_subcommand(
      "diff", "Eulerian subdigraph difference of an orientation");
  CommonArgs diff_args;
  std::string arcs_path;
  add_input(diff, diff_args);
  diff->add_option("--arcs", arcs_path,
                   "orientation as JSON [[tail,head],...]; default: "
                   "degeneracy-order orientation");
  diff->callback([&] {
    Graph g = load_graph(diff_args.input);
    atgraph::Orientation d;
    if (arcs_path.empty()) {
      auto cert = atgraph::at_upper_bound(g);
      d = atgraph::make_orientation(g, cert.arcs);
    } else {
      auto j = nlohmann::json::parse(read_all(arcs_path));
      std::vector<atgraph::Arc> arcs;
      for (const auto& pair : j) arcs.push_back({pair[0], pair[1]});
      d = atgraph::make_orientation(g, arcs);
    }
    auto result = atgraph::eulerian_diff(d);
    print_json({{"even", result.even_count},
                {"odd", result.odd_count},
                {"diff", result.diff()}});
  });

  // coeff
  auto* coeff = app.add_subcommand("coeff", "graph polynomial coefficient");
  CommonArgs coeff_args;
  std::string targets_spec;
  add_input(coeff, coeff_args);
  coeff->add_option("--targets", targets_spec,
                    "comma-separated exponents, or all:<k>")
      ->required();
  coeff->callback([&] {
    Graph g = load_graph(coeff_args.input);
    auto targets = parse_targets(targets_spec, g.order());
    print_json({{"coefficient", atgraph::monomial_coefficient(g, targets)}});
  });

  // at-exact
  auto* exact = app.add_subcommand("at-exact", "exact Alon-Tarsi number");
  CommonArgs exact_args;
  atgraph::SearchOptions search_opts;
  add_input(exact, exact_args);
  exact->add_option("--budget", search_opts.budget, "node expansion budget")
      ->capture_default_str();
  exact->callback([&] {
    Graph g = load_graph(exact_args.input);
    try {
      auto result = atgraph::at_exact(g, search_opts);
      print_json({{"at", result.k},
                  {"certificate",
                   atgraph::certificate_to_json(result.certificate)}});
    } catch (const atgraph::BudgetExceeded& e) {
      print_json({{"budget_exceeded", true},
                  {"lower", e.lower()},
                  {"upper", e.upper()}});
      std::exit(2);
    }
  });

  // at-bounds
  auto* bounds = app.add_subcommand("at-bounds", "lower and upper AT bounds");
  CommonArgs bounds_args;
  add_input(bounds, bounds_args);
  bounds->callback([&] {
    Graph g = load_graph(bounds_args.input);
    print_json({{"lower", atgraph::at_lower_bound(g)},
                {"upper",
                 atgraph::certificate_to_json(atgraph::at_upper_bound(g))}});
  });

  // certify
  auto* certify = app.add_subcommand("certify", "emit an AT certificate");
  CommonArgs cert_args;
  std::string method = "degeneracy";
  std::string graph_out;
  certify->add_option("--method", method, "degeneracy|subdivision|ssum")
      ->capture_default_str();
  add_input(certify, cert_args);
  certify->add_option("--with", cert_args.partner,
                      "partner graph for --method ssum");
  certify->add_option("--graph-out", graph_out,
                      "write the certified graph (S(G) or the S-sum) here");
  certify->callback([&] {
    Graph g = load_graph(cert_args.input);
    atgraph::Certificate cert;
    Graph subject = g;
    if (method == "degeneracy") {
      cert = atgraph::at_upper_bound(g);
    } else if (method == "subdivision") {
      cert = atgraph::subdivision_orientation(g);
      subject = atgraph::subdivision(g);
    } else if (method == "ssum") {
      if (cert_args.partner.empty())
        throw atgraph::Error("--method ssum needs --with");
      Graph h = load_graph(cert_args.partner);
      auto h_at = atgraph::at_exact(h);
      auto d_h = atgraph::make_orientation(h, h_at.certificate.arcs);
      cert = atgraph::s_sum_orientation(g, h, d_h);
      subject = atgraph::f_sum(g, h, atgraph::FKind::S);
    } else {
      throw atgraph::Error("unknown method '" + method + "'");
    }
    print_json(atgraph::certificate_to_json(cert));
    if (!graph_out.empty())
      write_output(graph_out, atgraph::graph_to_json(subject).dump(2) + "\n");
  });

  // verify
  auto* verify = app.add_subcommand("verify", "check a certificate");
  CommonArgs verify_args;
  std::string cert_path;
  verify->add_option("certificate", cert_path, "certificate JSON path")
      ->required();
  add_input(verify, verify_args);
  verify->callback([&] {
    Graph g = load_graph(verify_args.input);
    auto cert = atgraph::certificate_from_json(
        nlohmann::json::parse(read_all(cert_path)));
    std::string reason;
    bool ok = atgraph::verify_certificate(g, cert, &reason);
    print_json({{"ok", ok}, {"reason", reason}});
    if (!ok) std::exit(1);
  });

  // dot
  auto* dot = app.add_subcommand("dot", "emit DOT");
  CommonArgs dot_args;
  add_input(dot, dot_args);
  dot->callback(
      [&] { std::cout << atgraph::to_dot(load_graph(dot_args.input)); });

  // reproduce
  auto* repro = app.add_subcommand("reproduce", "re-derive the result tables");
  std::string target = "all";
  atgraph::ReproOptions repro_opts;
  bool as_json = false, as_table = false;
  repro->add_option("--target", target, "result id or 'all'")
      ->capture_default_str();
  repro->add_option("--nmax", repro_opts.nmax)->capture_default_str();
  repro->add_option("--mmax", repro_opts.mmax)->capture_default_str();
  repro->add_option("--sample", repro_opts.sample)->capture_default_str();
  repro->add_option("--budget", repro_opts.budget)->capture_default_str();
  repro->add_flag("--json", as_json, "JSON report");
  repro->add_flag("--table", as_table, "plain table (default)");
  repro->add_flag("--progress", repro_opts.progress, "progress on stderr");
  repro->callback([&] {
    repro_opts.seed = seed;
    auto report = target == "all" ? atgraph::run_all(repro_opts)
                                  : atgraph::run_repro(target, repro_opts);
    if (as_json)
      print_json(atgraph::report_to_json(report));
    else
      std::cout << atgraph::report_to_table(report);
    std::exit(report.exit_code());
  });

  // list targets
  auto* targets_cmd = app.add_subcommand("targets", "list reproduction ids");
  targets_cmd->callback([&] {
    for (const auto& id : atgraph::repro_target_ids()) std::cout << id << '\n';
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const atgraph::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
