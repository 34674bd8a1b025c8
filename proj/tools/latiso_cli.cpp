// latiso: command-line front end for minimal sets of the l1 lattice.
//
// Exit codes: 0 success, 1 bad input, 2 internal inconsistency.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "latiso/latiso.hpp"

namespace {

using namespace latiso;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kInconsistent = 2;

unsigned default_threads() {
  if (const char* env = std::getenv("LATISO_THREADS")) {
    try {
      const int t = std::stoi(env);
      if (t > 0) return static_cast<unsigned>(t);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

VertexSet read_set(const std::string& path) {
  VertexSet a = parse_set_json(read_input(path));
  if (a.empty()) throw Error(ErrorKind::EmptySet, "set file has no vertices");
  return a;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

void print_component(std::ostream& os, const ComponentSummary& s) {
  if (s.isolated) {
    os << "isolated; grading " << s.grading_min << "; height " << s.height << '\n';
    return;
  }
  os << "gradings " << s.grading_min << ".." << s.grading_max << "; height " << s.height;
  if (s.member_count) os << "; members " << *s.member_count;
  os << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vertex-isoperimetric minimal sets of the l1 integer lattice"};
  app.require_subcommand(1);
  unsigned threads = default_threads();
  app.add_option("--threads", threads, "worker threads (default from LATISO_THREADS, else 1)")
      ->check(CLI::PositiveNumber);

  std::int64_t n = 0;
  std::string path, spec;
  bool as_json = false, as_ascii = false, as_svg = false, as_dot = false;
  bool certificate = false, count_only = false, verify = false, show_enc = false;
  std::int64_t cap = kDefaultOracleCap;

  auto* ww_cmd = app.add_subcommand("ww", "print the first n Wang-Wang vertices");
  ww_cmd->add_option("n", n)->required();
  auto* ww_fmt = ww_cmd->add_option_group("format");
  ww_fmt->add_flag("--json", as_json);
  ww_fmt->add_flag("--ascii", as_ascii);
  ww_fmt->add_flag("--svg", as_svg);
  ww_fmt->require_option(0, 1);

  auto* check_cmd = app.add_subcommand("check", "decide minimality of a set file");
  check_cmd->add_option("file", path, "set file, or - for stdin")->required();
  check_cmd->add_flag("--certificate", certificate, "print the full certificate as JSON");

  auto* box_cmd = app.add_subcommand("box", "box facts: B:a,b  Bhat:a,b  or a,b,c,d");
  box_cmd->add_option("spec", spec)->required();

  auto* enum_cmd = app.add_subcommand("enum", "classes of minimal sets of size n");
  enum_cmd->add_option("n", n)->required();
  enum_cmd->add_flag("--count-only", count_only);

  auto* graph_cmd = app.add_subcommand("graph", "graph of minimal sets up to size n_max");
  graph_cmd->add_option("n_max", n)->required();
  auto* graph_fmt = graph_cmd->add_option_group("format");
  graph_fmt->add_flag("--dot", as_dot);
  graph_fmt->add_flag("--json", as_json);
  graph_fmt->require_option(0, 1);

  auto* comp_cmd = app.add_subcommand("component", "component of a box from its excess");
  comp_cmd->add_option("spec", spec)->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force minimal sets of size n");
  oracle_cmd->add_option("n", n)->required();
  oracle_cmd->add_flag("--verify", verify, "compare every candidate with the minimality tests");
  oracle_cmd->add_option("--cap", cap, "largest size allowed")->capture_default_str();

  auto* render_cmd = app.add_subcommand("render", "draw a set file");
  render_cmd->add_option("file", path, "set file, or - for stdin")->required();
  render_cmd->add_flag("--svg", as_svg);
  render_cmd->add_flag("--show-enc", show_enc, "outline the rest of the enclosing box");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  const EnumerationOptions eopts{threads};
  try {
    if (app.got_subcommand(ww_cmd)) {
      const VertexSet a = ww(n);
      if (as_ascii) {
        std::cout << render_ascii(a);
      } else if (as_svg) {
        std::cout << render_svg(a);
      } else {
        std::cout << set_to_json(a) << '\n';
      }
    } else if (app.got_subcommand(check_cmd)) {
      const VertexSet a = read_set(path);
      const auto cert = minimality_certificate(a);
      if (certificate) {
        std::cout << certificate_json(cert).dump(1) << '\n';
      } else if (cert.verdict) {
        std::cout << "minimal\n";
      } else if (cert.boundary_size != cert.enc_boundary_size) {
        std::cout << "not minimal (boundary " << cert.boundary_size << " > "
                  << cert.enc_boundary_size << " of enclosing box)\n";
      } else if (cert.n_removed == 0) {
        std::cout << "not minimal (E = " << cert.enc_excess << ")\n";
      } else {
        std::cout << "not minimal (N = " << cert.n_removed << ", E = " << cert.enc_excess << ")\n";
      }
    } else if (app.got_subcommand(box_cmd)) {
      const Box b = parse_box_spec(spec);
      const StandardForm f = standard_form(b);
      const std::int64_t exc = box_excess(f);
      std::cout << "box " << b << '\n'
                << "standard form " << f << '\n'
                << "size " << box_size(f) << '\n'
                << "boundary " << box_boundary_size(f) << '\n'
                << "excess " << exc << '\n'
                << "corners " << corners(b).size() << '\n'
                << "minimal=" << yes_no(exc >= 0) << '\n'
                << "efficient=" << yes_no(is_efficient_form(f)) << '\n'
                << "dead=" << yes_no(exc >= 0 && !is_efficient_form(f)) << '\n';
    } else if (app.got_subcommand(enum_cmd)) {
      const auto classes = enumerate_minimal_classes(n, eopts);
      if (count_only) {
        std::cout << classes.size() << '\n';
      } else {
        for (const auto& c : classes) {
          std::cout << Json{{"id", node_id(c)},
                            {"vertices", vertices_json(c.canonical)},
                            {"flags", flags_json(c.flags)}}
                           .dump()
                    << '\n';
        }
      }
    } else if (app.got_subcommand(graph_cmd)) {
      const MinGraph g = build_graph(n, eopts);
      if (as_dot) {
        std::cout << graph_to_dot(g);
      } else if (as_json) {
        std::cout << graph_to_json(g) << '\n';
      } else {
        const auto comps = components(g);
        std::cout << "nodes " << g.nodes.size() << "\nedges " << g.edges.size() << "\ncomponents "
                  << comps.size() << "\nisolated " << isolated_vertices(g).size() << '\n';
      }
    } else if (app.got_subcommand(comp_cmd)) {
      print_component(std::cout, classify_component_of_box(parse_box_spec(spec)));
    } else if (app.got_subcommand(oracle_cmd)) {
      const OracleOptions oopts{cap, threads};
      if (verify) {
        const auto res = verify_characterization(n, oopts);
        std::cout << "candidates " << res.candidates_examined << "\nmin boundary "
                  << res.min_boundary << '\n'
                  << res.discrepancies.size() << " discrepancies\n";
        for (const auto& d : res.discrepancies) std::cout << "  " << d << '\n';
        if (!res.ok) return kInconsistent;
      } else {
        const auto rep = brute_minimal_classes(n, oopts);
        std::cout << "candidates " << rep.candidates_examined << "\nmin boundary "
                  << rep.min_boundary << "\nclasses " << rep.classes.size() << '\n';
        if (rep.certification_fallback) std::cout << "certification fallback: window search\n";
        for (const auto& c : rep.classes) std::cout << "  " << set_to_json(c) << '\n';
      }
    } else if (app.got_subcommand(render_cmd)) {
      const VertexSet a = read_set(path);
      std::cout << (as_svg ? render_svg(a, show_enc) : render_ascii(a, show_enc));
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInconsistent;
  }
  return kOk;
}
