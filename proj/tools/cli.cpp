#include "cli.hpp"

#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "stag/connectivity.hpp"
#include "stag/error.hpp"
#include "stag/factorization.hpp"
#include "stag/generators.hpp"
#include "stag/io.hpp"
#include "stag/isomorphism.hpp"
#include "stag/oracles.hpp"
#include "stag/params.hpp"
#include "stag/recognition.hpp"
#include "stag/spanning_trees.hpp"
#include "stag/stag.hpp"

namespace stag::cli {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

enum Exit { kOk = 0, kNotAStag = 1, kInputError = 2, kGuard = 3 };

struct Options {
  std::string input;
  std::string output;
  std::string format;
  std::uint64_t seed = 0;
  std::size_t max_trees = kDefaultMaxTrees;
  int max_n = kDefaultMaxN;
  bool oracle = false;
  bool json = false;
  std::size_t budget = 3;
  int n = 6;
  int m = 8;
  bool two_connected = false;
  bool multi_block = false;
};

// Outcome of one subcommand before it is reported.
struct Outcome {
  int code = kOk;
  std::string status = "ok";
  std::vector<std::string> outputs;
  Json details = Json::object();
};

class Session {
 public:
  Session(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

  Graph input() const {
    if (opt_.input.empty()) throw Error(ErrorKind::InvalidArgument, "--input is required");
    return read_graph_file(opt_.input);
  }

  // Writes to --output when given, else to stdout unless the verdict owns it.
  void emit(Outcome& o, const std::string& text, const std::string& path = {}) {
    const std::string target = path.empty() ? opt_.output : path;
    if (!target.empty()) {
      write_text_file(target, text);
      o.outputs.push_back(target);
    } else if (!opt_.json) {
      out_ << text;
    }
  }

  GraphFormat output_format(GraphFormat fallback) const {
    if (!opt_.format.empty()) {
      if (opt_.format == "edgelist" || opt_.format == "txt") return GraphFormat::EdgeList;
      if (opt_.format == "json") return GraphFormat::Json;
      if (opt_.format == "dot") return GraphFormat::Dot;
      throw Error(ErrorKind::InvalidArgument, "unknown format " + opt_.format);
    }
    if (!opt_.output.empty()) return format_from_path(opt_.output);
    return fallback;
  }

  void no_oracle(const char* command) const {
    if (opt_.oracle) throw Error(ErrorKind::InvalidArgument, std::string("no oracle variant for ") + command);
  }

  const Options& opt() const { return opt_; }

 private:
  const Options& opt_;
  std::ostream& out_;
};

std::string stag_text(const StagGraph& s, GraphFormat f) {
  switch (f) {
    case GraphFormat::Json:
      return stag_to_json(s);
    case GraphFormat::Dot:
      return stag_to_dot(s);
    case GraphFormat::EdgeList:
      break;
  }
  return to_edge_list(s.graph);
}

Outcome cmd_aux(Session& s) {
  const Graph g = s.input();
  const StagGraph aux = s.opt().oracle ? brute_force_stag(g, s.opt().max_trees) : build_stag(g, s.opt().max_trees);
  Outcome o;
  o.details["vertices"] = aux.vertex_count();
  o.details["edges"] = aux.graph.edge_count();
  s.emit(o, stag_text(aux, s.output_format(GraphFormat::Json)));
  return o;
}

Outcome cmd_count(Session& s) {
  const Graph g = s.input();
  std::string count;
  if (s.opt().oracle) {
    count = std::to_string(brute_force_trees(g).size());
  } else {
    if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "graph is not connected");
    count = count_spanning_trees(g).str();
  }
  Outcome o;
  o.details["count"] = count;
  s.emit(o, count + "\n");
  return o;
}

Outcome cmd_trees(Session& s) {
  const Graph g = s.input();
  const auto trees = s.opt().oracle ? brute_force_trees(g) : enumerate_spanning_trees(g, s.opt().max_trees);
  if (trees.size() > s.opt().max_trees) throw Error(ErrorKind::TooManyTrees, "tree count exceeds --max-trees");
  Outcome o;
  o.details["count"] = trees.size();
  std::string text;
  if (s.output_format(GraphFormat::EdgeList) == GraphFormat::Json) {
    Json j = Json::array();
    for (const auto& t : trees) j.push_back(t.edges());
    text = j.dump() + "\n";
  } else {
    for (const auto& t : trees) text += format_tree(t) + "\n";
  }
  s.emit(o, text);
  return o;
}

Outcome cmd_blocks(Session& s) {
  s.no_oracle("blocks");
  const Graph g = s.input();
  if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "graph is not connected");
  const auto d = block_decomposition(g);
  Json j;
  j["blocks"] = Json::array();
  for (const auto& b : d.blocks) {
    Json block;
    block["vertices"] = Json::array();
    for (VertexId v : b.host_vertices) block["vertices"].push_back(g.name(v));
    block["edges"] = b.host_edges;
    j["blocks"].push_back(std::move(block));
  }
  j["cut_vertices"] = Json::array();
  for (VertexId v : d.cut_vertices) j["cut_vertices"].push_back(g.name(v));
  j["block_cut_tree"] = Json::array();
  for (const auto& [b, v] : d.block_cut_tree) j["block_cut_tree"].push_back(Json::array({b, g.name(v)}));
  Outcome o;
  o.details["blocks"] = d.blocks.size();
  s.emit(o, j.dump(2) + "\n");
  return o;
}

Outcome cmd_factor(Session& s) {
  s.no_oracle("factor");
  const Graph g = s.input();
  const Factorization f = prime_factorize(g);
  Outcome o;
  o.details["factors"] = f.factors.size();
  o.details["prime"] = f.factors.size() <= 1;
  Json coords;
  coords["factors"] = Json::array();
  for (const auto& factor : f.factors) {
    Json names = Json::array();
    for (const auto& n : factor.names()) names.push_back(n);
    coords["factors"].push_back(std::move(names));
  }
  coords["coordinates"] = Json::object();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    Json tuple = Json::array();
    for (std::size_t i = 0; i < f.factors.size(); ++i)
      tuple.push_back(f.factors[i].name(f.coordinates[static_cast<std::size_t>(v)][i]));
    coords["coordinates"][g.name(v)] = std::move(tuple);
  }
  if (s.opt().output.empty()) {
    std::string text;
    for (std::size_t i = 0; i < f.factors.size(); ++i)
      text += "# factor " + std::to_string(i + 1) + "\n" + to_edge_list(f.factors[i]);
    s.emit(o, text);
    return o;
  }
  // --output is a path prefix: <prefix>.factor<i>.txt plus <prefix>.coordinates.json
  for (std::size_t i = 0; i < f.factors.size(); ++i)
    s.emit(o, to_edge_list(f.factors[i]), s.opt().output + ".factor" + std::to_string(i + 1) + ".txt");
  s.emit(o, coords.dump(2) + "\n", s.opt().output + ".coordinates.json");
  return o;
}

Json verdict_record(const InversionVerdict& v) {
  Json j;
  j["is_stag"] = v.is_stag;
  j["n"] = v.n;
  j["m"] = v.m;
  j["factors"] = v.factors;
  j["verification"] = v.verification;
  if (!v.reason.empty()) j["reason"] = v.reason;
  return j;
}

Outcome cmd_invert(Session& s) {
  const Graph h = s.input();
  const InversionVerdict v = try_invert(h);
  Outcome o;
  o.details = verdict_record(v);
  if (s.opt().oracle) {
    const bool found = brute_force_is_stag(h).has_value();
    o.details["oracle"] = found ? "stag" : "none";
    if (found != v.is_stag) {
      o.code = kNotAStag;
      o.status = "oracle_disagrees";
    }
  }
  if (!v.is_stag) {
    if (o.code == kOk) {
      o.code = kNotAStag;
      o.status = "not_a_stag";
    }
    return o;
  }
  s.emit(o, serialize(*v.preimage, s.output_format(GraphFormat::EdgeList)));
  return o;
}

Outcome cmd_preimages(Session& s) {
  s.no_oracle("preimages");
  const Graph g = s.input();
  const auto graphs = enumerate_preimages(g, s.opt().budget);
  Outcome o;
  o.details["count"] = graphs.size();
  if (s.opt().output.empty()) {
    std::string text;
    for (std::size_t i = 0; i < graphs.size(); ++i)
      text += "# preimage " + std::to_string(i + 1) + "\n" + to_edge_list(graphs[i]);
    s.emit(o, text);
    return o;
  }
  const GraphFormat f = s.opt().format.empty() ? GraphFormat::EdgeList : s.output_format(GraphFormat::EdgeList);
  const char* ext = f == GraphFormat::Json ? ".json" : f == GraphFormat::Dot ? ".dot" : ".txt";
  for (std::size_t i = 0; i < graphs.size(); ++i)
    s.emit(o, serialize(graphs[i], f), s.opt().output + "." + std::to_string(i + 1) + ext);
  return o;
}

Outcome cmd_params(Session& s) {
  s.no_oracle("params");
  const Graph g = s.input();
  const ParamReport r = param_report(g, s.opt().max_trees, s.opt().max_n);
  Outcome o;
  o.details["all_hold"] = r.all_hold();
  if (!r.all_hold()) {
    o.code = kNotAStag;
    o.status = "violated";
  }
  const bool as_json = s.output_format(GraphFormat::EdgeList) == GraphFormat::Json;
  s.emit(o, as_json ? report_to_json(r) : report_to_text(r));
  return o;
}

Outcome cmd_roundtrip(Session& s) {
  const Graph g = s.input();
  const StagGraph aux = s.opt().oracle ? brute_force_stag(g, s.opt().max_trees) : build_stag(g, s.opt().max_trees);
  const InversionVerdict v = try_invert(aux.graph);
  Outcome o;
  o.details = verdict_record(v);
  o.details["aux_vertices"] = aux.vertex_count();
  if (!v.is_stag) {
    o.code = kNotAStag;
    o.status = "failed";
    return o;
  }
  const bool same = are_isomorphic(build_stag(*v.preimage, s.opt().max_trees).graph, aux.graph);
  o.details["roundtrip"] = same ? "iso" : "failed";
  if (!same) {
    o.code = kNotAStag;
    o.status = "failed";
  }
  s.emit(o, to_edge_list(*v.preimage));
  return o;
}

Outcome cmd_random(Session& s) {
  s.no_oracle("random");
  const auto& opt = s.opt();
  Graph g = opt.multi_block      ? random_multi_block_graph(opt.n, opt.seed, opt.max_trees)
            : opt.two_connected ? random_two_connected_graph(opt.n, opt.m, opt.seed)
                                : random_connected_graph(opt.n, opt.m, opt.seed);
  Outcome o;
  o.details["n"] = g.vertex_count();
  o.details["m"] = g.edge_count();
  s.emit(o, serialize(g, s.output_format(GraphFormat::EdgeList)));
  return o;
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::TooLarge:
    case ErrorKind::TooManyTrees:
      return kGuard;
    case ErrorKind::NotAStag:
    case ErrorKind::NoWitness:
    case ErrorKind::ValidationFailed:
      return kNotAStag;
    default:
      return kInputError;
  }
}

void add_common(CLI::App* sub, Options& opt, bool needs_input) {
  auto* in = sub->add_option("-i,--input", opt.input, "input graph (.txt edge list or .json)");
  if (needs_input) in->required();
  sub->add_option("-o,--output", opt.output, "output path; format follows the extension");
  sub->add_option("--format", opt.format, "output format: edgelist, json or dot");
  sub->add_option("--seed", opt.seed, "random seed")->default_val(0);
  sub->add_option("--max-trees", opt.max_trees, "spanning tree guard")->default_val(kDefaultMaxTrees);
  sub->add_option("--max-n", opt.max_n, "vertex guard for exhaustive cut and cycle search")->default_val(kDefaultMaxN);
  sub->add_flag("--oracle", opt.oracle, "use the brute-force reference implementation");
  sub->add_flag("--json", opt.json, "print a JSON verdict to stdout");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Spanning tree auxiliary graphs: build, count, factor, recognize and invert."};
  app.require_subcommand(1);
  const std::vector<std::pair<std::string, std::function<Outcome(Session&)>>> commands = {
      {"aux", cmd_aux},         {"count", cmd_count},         {"trees", cmd_trees},
      {"blocks", cmd_blocks},   {"factor", cmd_factor},       {"invert", cmd_invert},
      {"preimages", cmd_preimages}, {"params", cmd_params},   {"verify-roundtrip", cmd_roundtrip},
      {"random", cmd_random},
  };
  const std::map<std::string, std::string> help = {
      {"aux", "build the STAG of a graph"},
      {"count", "count spanning trees (Matrix-Tree theorem)"},
      {"trees", "list spanning trees as sorted edge ids"},
      {"blocks", "block decomposition and cut vertices"},
      {"factor", "prime factorization under the Cartesian product"},
      {"invert", "decide whether a graph is a STAG and reconstruct a minimal preimage"},
      {"preimages", "extend a minimal preimage by pendant paths"},
      {"params", "degree, diameter and clique relations between G and its STAG"},
      {"verify-roundtrip", "invert the STAG of G and compare"},
      {"random", "seeded random graph"},
  };
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, fn] : commands) {
    auto* sub = app.add_subcommand(name, help.at(name));
    add_common(sub, opt, name != "random");
    subs[name] = sub;
  }
  subs["preimages"]->add_option("--budget", opt.budget, "number of graphs")->default_val(3);
  subs["random"]->add_option("--n", opt.n, "vertices")->default_val(6);
  subs["random"]->add_option("--m", opt.m, "edges")->default_val(8);
  subs["random"]->add_flag("--two-connected", opt.two_connected, "grow by ear additions");
  subs["random"]->add_flag("--multi-block", opt.multi_block, "glue several blocks (--n is the vertex cap)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kInputError;
  }

  std::string name;
  std::function<Outcome(Session&)> fn;
  for (const auto& [n, f] : commands)
    if (subs[n]->parsed()) {
      name = n;
      fn = f;
    }

  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    Session session(opt, out);
    o = fn(session);
  } catch (const Error& e) {
    o = Outcome{exit_code(e.kind()), e.kind() == ErrorKind::NotAStag ? "not_a_stag" : "error", {}, Json::object()};
    o.details["error"] = std::string(to_string(e.kind()));
    o.details["message"] = e.what();
    if (!opt.json) err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    o = Outcome{kInputError, "error", {}, Json::object()};
    o.details["message"] = e.what();
    if (!opt.json) err << "error: " << e.what() << "\n";
  }
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (opt.json) {
    Json v;
    std::string echo;
    for (int i = 1; i < argc; ++i) echo += (i > 1 ? " " : "") + std::string(argv[i]);
    v["command"] = echo;
    v["status"] = o.status;
    v["outputs"] = o.outputs;
    v["details"] = o.details;
    v["elapsed_ms"] = std::round(ms * 1000.0) / 1000.0;
    out << v.dump() << "\n";
  } else if (o.code == kNotAStag && name == "invert") {
    out << "not_a_stag: " << o.details.value("reason", std::string("no preimage")) << "\n";
  }
  return o.code;
}

}  // namespace stag::cli
