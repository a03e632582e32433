#include "simtri/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "simtri/error.hpp"
#include "simtri/graph.hpp"
#include "simtri/io.hpp"
#include "simtri/oracles.hpp"
#include "simtri/order.hpp"
#include "simtri/recognizer.hpp"

namespace simtri {
namespace {

constexpr int kAccept = 0;
constexpr int kReject = 1;
constexpr int kInputError = 2;

struct GlobalOptions {
  std::size_t limit = 6;
  std::uint64_t seed = 1;
  bool quiet = false;
};

class Session {
 public:
  Session(std::istream& in, std::ostream& out, std::ostream& err, const GlobalOptions& options)
      : in_(in), out_(out), err_(err), options_(options) {}

  template <typename Parse>
  auto with_input(const std::string& path, Parse parse) {
    if (path == "-") return parse(in_);
    std::ifstream file(path);
    if (!file) throw Error("cannot open '" + path + "'");
    return parse(file);
  }

  Graph load_graph(const std::string& path) {
    return with_input(path, [](std::istream& s) { return parse_graph(s); });
  }
  PartialOrder load_order(const std::string& path) {
    return with_input(path, [](std::istream& s) { return parse_order(s); });
  }

  // Human-readable output, suppressed by --quiet.
  std::ostream& say() { return options_.quiet ? null_ : out_; }
  std::ostream& err() { return err_; }
  std::ostream& raw() { return out_; }
  const GlobalOptions& options() const { return options_; }

 private:
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
  GlobalOptions options_;
  std::ostringstream null_;
};

std::string tuple_string(std::span<const Vertex> vertices) {
  std::string text = "(";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) text += ',';
    text += std::to_string(vertices[i]);
  }
  return text + ")";
}

std::string anticycle_string(const Anticycle& cycle) {
  std::ostringstream text;
  text << 2 * cycle.half_length() << "-anticycle:";
  for (std::size_t i = 0; i < cycle.half_length(); ++i) {
    text << " a" << i << '=' << cycle.a[i] << " b" << i << '=' << cycle.b[i];
  }
  return text.str();
}

void print_intervals(std::ostream& out, const IntervalRepresentation& intervals) {
  for (std::size_t v = 0; v < intervals.size(); ++v) {
    const auto& iv = intervals[static_cast<Vertex>(v)];
    out << "  " << v << ": [" << iv.left << ", " << iv.right << "]\n";
  }
}

int cmd_recognize(Session& s, const std::string& path, bool witness) {
  const Graph graph = s.load_graph(path);
  std::vector<std::string> pruned;
  PruneObserver observer;
  if (witness) {
    observer = [&](std::span<const Vertex> prefix, const PatternWitness& w) {
      pruned.push_back("prefix " + tuple_string(prefix) + ": " + std::string(w.pattern) + " at " +
                       tuple_string(w.vertices));
    };
  }
  const auto result = recognize(graph, observer);
  if (!result) {
    s.say() << "not a simple-triangle graph\n";
    for (const auto& line : pruned) s.say() << line << '\n';
    return kReject;
  }
  s.say() << "apex ordering: " << to_string(result->ordering) << '\n';
  return kAccept;
}

int cmd_represent(Session& s, const std::string& path, const std::string& output, const std::string& format) {
  const Graph graph = s.load_graph(path);
  const auto result = recognize(graph);
  if (!result) {
    s.say() << "not a simple-triangle graph\n";
    return kReject;
  }
  const auto fmt = format == "svg" ? RepresentationFormat::svg : RepresentationFormat::structured;
  std::string document = emit_representation(result->triangles, fmt);
  if (fmt == RepresentationFormat::structured) document += '\n';
  if (output.empty() || output == "-") {
    s.raw() << document;
  } else {
    std::ofstream file(output);
    if (!file) throw Error("cannot write '" + output + "'");
    file << document;
  }
  return kAccept;
}

int cmd_check_ordering(Session& s, const std::string& path, const std::string& ordering_text) {
  const Graph graph = s.load_graph(path);
  const VertexOrdering ordering = parse_ordering(ordering_text);
  if (ordering.size() != graph.size()) throw SizeMismatch("ordering does not cover the graph's vertices");
  auto yes_no = [](bool b) { return b ? "yes" : "no"; };
  s.say() << "cocomparability: " << yes_no(is_cocomparability_ordering(graph, ordering)) << '\n';
  s.say() << "C4 rule: " << yes_no(fulfills_c4_rule(graph, ordering)) << '\n';
  bool clean = true;
  for (const OrderedPattern* pattern : {&patterns::cpc(), &patterns::p1(), &patterns::p2()}) {
    const auto found = find_pattern(graph, ordering, *pattern);
    clean = clean && !found;
    s.say() << pattern->name << ": " << (found ? tuple_string(*found) : std::string("none")) << '\n';
  }
  s.say() << "apex ordering: " << yes_no(clean) << '\n';
  return clean ? kAccept : kReject;
}

int cmd_order_recognize(Session& s, const std::string& path) {
  const PartialOrder order = s.load_order(path);
  if (const auto witness = recognize_linear_interval_order(order)) {
    s.say() << "linear-interval order\n";
    s.say() << "extension: " << to_string(witness->extension) << '\n';
    s.say() << "intervals:\n";
    print_intervals(s.say(), witness->intervals);
    return kAccept;
  }
  s.say() << "not a linear-interval order\n";
  const auto extensions = linear_extensions(order);
  if (!extensions.empty()) {
    const auto cycle = find_anticycle_of_half_length(order, extensions.front(), 2);
    s.say() << "extension " << to_string(extensions.front()) << " has " << anticycle_string(*cycle) << '\n';
  }
  return kReject;
}

int cmd_order_intervals(Session& s, const std::string& path, const std::string& extension_text) {
  const PartialOrder order = s.load_order(path);
  const LinearExtension extension = parse_ordering(extension_text);
  const auto result = build_interval_representation(order, extension);
  if (const auto* intervals = std::get_if<IntervalRepresentation>(&result)) {
    s.say() << "intervals:\n";
    print_intervals(s.say(), *intervals);
    return kAccept;
  }
  s.say() << "stalled: " << anticycle_string(std::get<Anticycle>(result)) << '\n';
  return kReject;
}

int cmd_oracle_verify(Session& s, const std::string& path) {
  const Graph graph = s.load_graph(path);
  OracleLimits limits;
  limits.max_vertices = s.options().limit;
  auto yes_no = [](bool b) { return b ? "yes" : "no"; };

  const bool recognized = recognize(graph).has_value();
  const bool geometric = geometric_search_realization(graph, limits).has_value();
  const bool corollary1 = corollary1_check(graph, limits);
  bool agree = recognized == geometric && recognized == corollary1;
  s.say() << "recognize: " << yes_no(recognized) << '\n';
  s.say() << "geometric search: " << yes_no(geometric) << '\n';
  s.say() << "alternating + transitive orientations: " << yes_no(corollary1) << '\n';
  if (recognized) {
    const bool corollary2 = corollary2_check(graph, limits);
    agree = agree && corollary2;
    s.say() << "every transitive orientation of the complement extends: " << yes_no(corollary2) << '\n';
  }

  // Random orderings: the four ordering conditions must coincide.
  std::mt19937_64 rng(s.options().seed);
  const Graph co = complement(graph);
  std::vector<Vertex> perm(graph.size());
  std::size_t mismatches = 0;
  constexpr std::size_t kSamples = 200;
  for (std::size_t i = 0; i < kSamples; ++i) {
    for (std::size_t v = 0; v < perm.size(); ++v) perm[v] = static_cast<Vertex>(v);
    std::shuffle(perm.begin(), perm.end(), rng);
    if (!evaluate_apex_conditions(graph, co, VertexOrdering(perm)).all_agree()) ++mismatches;
  }
  agree = agree && mismatches == 0;
  s.say() << "ordering conditions disagree on " << mismatches << " of " << kSamples << " random orderings (seed "
          << s.options().seed << ")\n";
  s.say() << (agree ? "agreement" : "DISAGREEMENT") << '\n';
  return agree ? kAccept : kReject;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Recognize simple-triangle graphs and linear-interval orders", "simtri"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions options;
  app.add_option("--limit", options.limit, "Oracle size cap (vertices)")->capture_default_str();
  app.add_option("--seed", options.seed, "Seed for randomized checks")->capture_default_str();
  app.add_flag("--quiet", options.quiet, "Only report through the exit code");

  std::string graph_path;
  std::string order_path;
  std::string ordering_text;
  std::string output;
  std::string format = "structured";
  bool witness = false;

  auto* recognize_cmd = app.add_subcommand("recognize", "Test a graph for an apex ordering");
  recognize_cmd->add_option("graph", graph_path, "Graph file, '-' for stdin")->required();
  recognize_cmd->add_flag("--witness", witness, "Print the pattern that discarded each tried prefix");

  auto* represent_cmd = app.add_subcommand("represent", "Emit a triangle representation");
  represent_cmd->add_option("graph", graph_path, "Graph file, '-' for stdin")->required();
  represent_cmd->add_option("-o,--output", output, "Output file (default stdout)");
  represent_cmd->add_option("--format", format, "structured or svg")
      ->check(CLI::IsMember({"structured", "svg"}))
      ->capture_default_str();

  auto* check_cmd = app.add_subcommand("check-ordering", "Report the ordering conditions for one ordering");
  check_cmd->add_option("graph", graph_path, "Graph file, '-' for stdin")->required();
  check_cmd->add_option("ordering", ordering_text, "Comma-separated vertex ordering")->required();

  auto* order_cmd = app.add_subcommand("order", "Linear-interval order tools");
  order_cmd->require_subcommand(1);
  auto* order_recognize = order_cmd->add_subcommand("recognize", "Test an order for a 2+2-rule extension");
  order_recognize->add_option("order", order_path, "Order file, '-' for stdin")->required();
  auto* order_intervals = order_cmd->add_subcommand("intervals", "Build intervals for a given extension");
  order_intervals->add_option("order", order_path, "Order file, '-' for stdin")->required();
  order_intervals->add_option("extension", ordering_text, "Comma-separated linear extension")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force cross-checks");
  oracle_cmd->require_subcommand(1);
  auto* oracle_verify = oracle_cmd->add_subcommand("verify", "Compare recognition with the oracles");
  oracle_verify->add_option("graph", graph_path, "Graph file, '-' for stdin")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kAccept : kInputError;
  }

  Session session(in, out, err, options);
  try {
    if (*recognize_cmd) return cmd_recognize(session, graph_path, witness);
    if (*represent_cmd) return cmd_represent(session, graph_path, output, format);
    if (*check_cmd) return cmd_check_ordering(session, graph_path, ordering_text);
    if (*order_recognize) return cmd_order_recognize(session, order_path);
    if (*order_intervals) return cmd_order_intervals(session, order_path, ordering_text);
    if (*oracle_verify) return cmd_oracle_verify(session, graph_path);
  } catch (const Error& e) {
    err << "simtri: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace simtri
