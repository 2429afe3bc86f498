#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "kgraph/export.hpp"
#include "kgraph/homology.hpp"
#include "kgraph/io.hpp"
#include "kgraph/quotient.hpp"
#include "kgraph/simplex.hpp"
#include "kgraph/surfaces.hpp"

using namespace kgraph;

namespace {

// Domain failures exit 2; anything that stops us reading the input exits 1.
struct Failure {
  int code;
  std::string message;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw Failure{1, "cannot open '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Model read_model(const std::string& path) { return model_from_json(parse_json(read_input(path))); }

void print_reports(const std::vector<VertexSetReport>& reports) {
  for (const auto& r : reports) {
    std::cout << "violated: " << r.predicate;
    for (const auto& w : r.witness) std::cout << ' ' << w;
    std::cout << '\n';
  }
}

int run_validate(const std::string& file) {
  const auto model = read_model(file);
  std::vector<VertexSetReport> reports;
  if (const auto* g = std::get_if<FiniteKGraph>(&model)) {
    reports = validate_kgraph(*g);
  } else if (const auto* s = std::get_if<Skeleton2Graph>(&model)) {
    reports = validate_skeleton(*s);
  } else {
    const auto& m = std::get<MarkedSkeleton>(model);
    reports = validate_skeleton(m.skeleton);
    if (reports.empty()) check_marking(m);
  }
  if (!reports.empty()) {
    print_reports(reports);
    return 2;
  }
  std::cout << "valid\n";
  return 0;
}

ChainComplex complex_of(const Model& model) {
  if (const auto* g = std::get_if<FiniteKGraph>(&model)) return chain_complex(*g);
  if (const auto* s = std::get_if<Skeleton2Graph>(&model)) return chain_complex(*s);
  return chain_complex(std::get<MarkedSkeleton>(model).skeleton);
}

int run_homology(const std::string& file, bool as_json) {
  const auto complex = complex_of(read_model(file));
  const auto groups = homology(complex);
  if (as_json) {
    std::cout << dump(to_json(groups, euler_characteristic(complex)));
  } else {
    for (std::size_t n = 0; n < groups.size(); ++n) {
      std::cout << "H_" << n << " = " << groups[n].to_string() << '\n';
    }
  }
  return 0;
}

int run_export(const std::string& format, const std::string& file) {
  const auto model = read_model(file);
  if (format == "json") {
    std::cout << dump(to_json(model));
    return 0;
  }
  const auto* g = std::get_if<FiniteKGraph>(&model);
  const Skeleton2Graph* s = std::get_if<Skeleton2Graph>(&model);
  if (const auto* m = std::get_if<MarkedSkeleton>(&model)) s = &m->skeleton;
  if (format == "dot") {
    std::cout << (g ? export_dot(*g) : export_dot(*s));
  } else {
    std::cout << (g ? export_off(*g) : export_off(*s));
  }
  return 0;
}

int run_build(const std::string& what, std::size_t k, std::size_t n, const std::string& spec) {
  if (what == "simplex") {
    std::cout << dump(to_json(build_simplex(k)));
  } else if (what == "sphere") {
    std::cout << dump(to_json(build_sphere(k)));
  } else if (what == "wedge") {
    std::cout << dump(to_json(build_wedge(k, n)));
  } else {
    const auto summands = parse_surface_spec(spec);
    std::cout << dump(to_json(compact_surface(summands)));
  }
  return 0;
}

int run_quotient(const std::string& file, const std::string& relation_file) {
  const auto model = read_model(file);
  const auto* graph = std::get_if<FiniteKGraph>(&model);
  if (!graph) throw Failure{1, "quotient needs a category document"};
  const auto relation = relation_from_json(parse_json(read_input(relation_file)));
  try {
    std::cout << dump(to_json(quotient(*graph, relation)));
  } catch (const NotACongruence& e) {
    std::cout << "not a congruence: condition " << e.verdict().violated;
    for (const auto& w : e.verdict().witness) std::cout << ' ' << w;
    std::cout << '\n';
    return 2;
  }
  return 0;
}

int run_connected_sum(const std::string& a, const std::string& b) {
  auto marked = [](const std::string& path) {
    auto model = read_model(path);
    const auto* m = std::get_if<MarkedSkeleton>(&model);
    if (!m) throw Failure{1, "'" + path + "' is not a marked skeleton (needs u, v and square)"};
    return *m;
  };
  std::cout << dump(to_json(connected_sum(marked(a), marked(b))));
  return 0;
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse:
    case ErrorCode::Malformed:
      return 1;
    default:
      return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Build, check and measure higher-rank graphs"};
  app.require_subcommand(1);

  std::size_t k = 0;
  std::size_t n = 1;
  bool count_only = false;
  bool as_json = false;
  std::string file;
  std::string other;
  std::string what;
  std::string spec;

  auto* placings = app.add_subcommand("placings", "List the k-placings (or count them)");
  placings->add_option("--k", k, "Rank")->required();
  placings->add_flag("--count", count_only, "Print only the number of placings");

  auto* build = app.add_subcommand("build", "Build a simplex, sphere, wedge or surface");
  build->add_option("kind", what, "simplex | sphere | wedge | surface")
      ->required()
      ->check(CLI::IsMember({"simplex", "sphere", "wedge", "surface"}));
  build->add_option("--k", k, "Rank");
  build->add_option("--n", n, "Number of spheres in a wedge");
  build->add_option("--spec", spec, "Surface summands, e.g. T,T,P");

  auto* validate = app.add_subcommand("validate", "Check the k-graph or skeleton axioms");
  validate->add_option("file", file, "Model document, - for stdin")->required();

  auto* quot = app.add_subcommand("quotient", "Quotient a category by a relation");
  quot->add_option("file", file, "Category document, - for stdin")->required();
  quot->add_option("--relation", other, "Relation document")->required();

  auto* sum = app.add_subcommand("connected-sum", "Connected sum of two marked skeletons");
  sum->add_option("a", file, "First marked skeleton")->required();
  sum->add_option("b", other, "Second marked skeleton")->required();

  auto* hom = app.add_subcommand("homology", "Integral homology of the realisation");
  hom->add_option("file", file, "Model document, - for stdin")->required();
  hom->add_flag("--json", as_json, "Emit JSON");

  auto* exp = app.add_subcommand("export", "Write a model as DOT, OFF or canonical JSON");
  exp->add_option("format", what, "dot | off | json")
      ->required()
      ->check(CLI::IsMember({"dot", "off", "json"}));
  exp->add_option("file", file, "Model document, - for stdin")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*placings) {
      const auto all = enumerate_placings(k);
      if (count_only) {
        std::cout << all.size() << '\n';
      } else {
        for (const auto& f : all) std::cout << placing_label(f) << '\n';
      }
      return 0;
    }
    if (*build) {
      if (what == "surface" && spec.empty()) throw Failure{1, "build surface needs --spec"};
      return run_build(what, k, n, spec);
    }
    if (*validate) return run_validate(file);
    if (*quot) return run_quotient(file, other);
    if (*sum) return run_connected_sum(file, other);
    if (*hom) return run_homology(file, as_json);
    if (*exp) return run_export(what, file);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.code;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.code());
  }
  return 0;
}
