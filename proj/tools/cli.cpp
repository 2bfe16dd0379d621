#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mcds/bounds.hpp"
#include "mcds/constructions.hpp"
#include "mcds/enumeration.hpp"
#include "mcds/io.hpp"
#include "mcds/search.hpp"
#include "mcds/structure.hpp"

namespace mcds::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Where a subcommand gets its graph(s) from: a file / stdin, or one of the
/// built-in constructions.
struct SourceOptions {
  std::string input;
  std::string format = "auto";
  std::size_t t = 0;
  std::size_t k = 0;
  bool base = false;
  bool clique_x = false;
};

void add_source_options(CLI::App* cmd, SourceOptions& o, bool with_input = true) {
  if (with_input) {
    cmd->add_option("--input", o.input, "graph6 or edge-list file, '-' for stdin");
    cmd->add_option("--format", o.format, "input format")->check(CLI::IsMember({"auto", "graph6", "edges"}));
  }
  cmd->add_option("--t", o.t, "construction layer size");
  cmd->add_option("--k", o.k, "number of blocks");
  cmd->add_flag("--base", o.base, "use the base graph G_t instead of the composite");
  cmd->add_flag("--clique-x", o.clique_x, "keep the clique on X");
}

struct Loaded {
  Graph graph;
  std::optional<Construction> construction;
};

bool has_construction(const SourceOptions& o) { return o.t != 0 || o.base || o.k != 0; }

Construction build(const SourceOptions& o) {
  try {
    if (o.base) {
      if (o.k != 0) throw UsageError("--base and --k are mutually exclusive");
      return base_graph({o.t, o.clique_x});
    }
    if (o.k == 0) throw UsageError("construction needs --k (or --base)");
    return composite({o.t, o.k, o.clique_x});
  } catch (const GraphError& e) {
    throw UsageError(e.what());
  }
}

std::vector<Loaded> load(const SourceOptions& o, std::istream& in) {
  if (has_construction(o)) {
    if (!o.input.empty()) throw UsageError("--input cannot be combined with construction flags");
    auto c = build(o);
    Graph g = c.graph;
    return {Loaded{std::move(g), std::move(c)}};
  }
  if (o.input.empty()) throw UsageError("no input: pass --input FILE|- or construction flags (--t ...)");
  std::string text;
  if (o.input == "-") {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream file(o.input);
    if (!file) throw UsageError("cannot open " + o.input);
    text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  }
  std::optional<io::Format> fmt;
  if (o.format == "graph6") fmt = io::Format::kGraph6;
  if (o.format == "edges") fmt = io::Format::kEdgeList;
  std::vector<Loaded> out;
  for (auto& g : io::read_graphs(text, fmt)) out.push_back(Loaded{std::move(g), std::nullopt});
  return out;
}

std::size_t size_limit(bool force) {
  if (force) return kHardSizeLimit;
  if (const char* env = std::getenv("MCDS_FORCE_LIMIT"); env != nullptr && *env != '\0') {
    std::size_t value = 0;
    const std::string_view sv(env);
    const auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), value);
    if (ec != std::errc{} || ptr != sv.data() + sv.size()) throw UsageError("MCDS_FORCE_LIMIT must be an integer");
    return value;
  }
  return kDefaultSizeLimit;
}

std::vector<Vertex> parse_vertex_list(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Vertex v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      throw UsageError("bad vertex '" + item + "' in list '" + text + "'");
    }
    out.push_back(v);
  }
  return out;
}

VertexSet resolve_attachment(const std::string& spec, const Loaded& loaded) {
  if (spec == "X") {
    if (!loaded.construction) throw UsageError("--attach X needs a construction source");
    return loaded.construction->x;
  }
  const auto list = parse_vertex_list(spec);
  for (Vertex v : list) {
    if (v >= loaded.graph.order()) throw UsageError("attachment vertex " + std::to_string(v) + " out of range");
  }
  return VertexSet(loaded.graph.order(), list);
}

std::string render_set(const VertexSet& s, const Loaded& loaded, bool labels) {
  std::string out;
  s.for_each([&](Vertex v) {
    if (!out.empty()) out += ' ';
    out += labels && loaded.construction ? loaded.construction->labels[v] : std::to_string(v);
  });
  return out;
}

// construct ------------------------------------------------------------------

struct ConstructOptions {
  SourceOptions source;
  std::string format = "edges";
  bool rotation = false;
};

int cmd_construct(const ConstructOptions& o, std::ostream& out) {
  if (!has_construction(o.source)) throw UsageError("construct needs --t");
  const auto c = build(o.source);
  if (o.format == "graph6") {
    out << io::emit_graph6(c.graph) << '\n';
  } else if (o.format == "dot") {
    const std::string name = o.source.base ? "G" + std::to_string(o.source.t)
                                           : "G" + std::to_string(o.source.t) + "_" + std::to_string(o.source.k);
    out << io::emit_dot(c.graph, std::span<const std::string>(c.labels), name);
  } else {
    out << io::emit_edge_list(c.graph);
  }
  if (o.rotation) {
    if (o.source.base || o.source.t != 3 || o.source.clique_x) {
      throw UsageError("--rotation applies to the composite with --t 3 and no --clique-x");
    }
    const auto rot = planar_rotation_g3k(o.source.k);
    out << "rotation\n";
    for (Vertex v = 0; v < c.graph.order(); ++v) {
      out << c.labels[v] << ':';
      for (Vertex w : rot.rotation(v)) out << ' ' << c.labels[w];
      out << '\n';
    }
    const auto faces = trace_faces(c.graph, rot);
    const long chi = euler_characteristic(c.graph, rot);
    out << "euler V=" << c.graph.order() << " E=" << c.graph.edge_count() << " F=" << faces.size() << " V-E+F=" << chi
        << (chi == 2 ? " PASS" : " FAIL") << '\n';
    if (chi != 2) return kExitAbort;
  }
  return kExitOk;
}

// count / enumerate ----------------------------------------------------------

struct CountOptions {
  SourceOptions source;
  bool filter_x = false;
  bool block = false;
  std::string attach;
  bool force = false;
  bool json = false;
  bool labels = false;
};

EnumerationResult count_one(const CountOptions& o, const Loaded& loaded, EnumerationMode mode) {
  EnumerationRequest req;
  req.mode = mode;
  req.size_limit = size_limit(o.force);
  if (o.filter_x) {
    if (!loaded.construction) throw UsageError("--filter-x applies to constructions only");
    req.intersect_filter = loaded.construction->x;
  }
  if (o.block) {
    if (o.attach.empty()) throw UsageError("--block needs --attach");
    return block_mcds(BlockSpec{loaded.graph, resolve_attachment(o.attach, loaded)}, req);
  }
  if (!o.attach.empty()) throw UsageError("--attach requires --block");
  if (loaded.graph.order() >= 3 && loaded.graph.order() <= std::min(req.size_limit, kHardSizeLimit) &&
      is_connected(loaded.graph)) {
    req.forced = cut_vertices(loaded.graph);
  }
  return enumerate_mcds(loaded.graph, req);
}

int cmd_count(const CountOptions& o, std::istream& in, std::ostream& out) {
  for (const auto& loaded : load(o.source, in)) {
    const auto result = count_one(o, loaded, EnumerationMode::kCountOnly);
    if (o.json) {
      nlohmann::ordered_json j;
      j["graph6"] = io::emit_graph6(loaded.graph);
      j["order"] = loaded.graph.order();
      j["count"] = result.count.str();
      out << j.dump() << '\n';
    } else {
      out << result.count.str() << '\n';
    }
  }
  return kExitOk;
}

int cmd_enumerate(const CountOptions& o, std::istream& in, std::ostream& out) {
  for (const auto& loaded : load(o.source, in)) {
    EnumerationResult result = count_one(o, loaded, EnumerationMode::kStreamSets);
    for (const auto& s : result.sets) {
      if (o.json) {
        out << nlohmann::json(s.members()).dump() << '\n';
      } else {
        out << render_set(s, loaded, o.labels) << '\n';
      }
    }
    if (result.truncated) out << "# truncated after " << result.sets.size() << " sets\n";
    out << "# count " << result.count.str() << '\n';
  }
  return kExitOk;
}

// verify ---------------------------------------------------------------------

struct VerifyOptions {
  bool lemma1 = false;
  std::size_t t_max = 5;
  bool product = false;
  std::size_t t = 3;
  std::size_t k = 2;
  bool corollary = false;
  bool force = false;
};

class Report {
 public:
  explicit Report(std::ostream& out) : out_(out) {}
  void check(bool ok, const std::string& line) {
    out_ << (ok ? "PASS " : "FAIL ") << line << '\n';
    all_ok_ = all_ok_ && ok;
  }
  [[nodiscard]] bool ok() const { return all_ok_; }

 private:
  std::ostream& out_;
  bool all_ok_ = true;
};

int cmd_verify(VerifyOptions o, std::ostream& out) {
  if (!o.lemma1 && !o.product && !o.corollary) o.lemma1 = o.product = o.corollary = true;
  const std::size_t limit = size_limit(o.force);
  Report report(out);
  if (o.lemma1) {
    if (o.t_max < 2) throw UsageError("--t-max must be at least 2");
    for (std::size_t t = 2; t <= o.t_max; ++t) {
      const auto g = base_graph({t, true});
      EnumerationRequest req;
      req.intersect_filter = g.x;
      req.size_limit = limit;
      const BigInt counted = enumerate_mcds(g.graph, req).count;
      const BigInt expected = bounds::f(t);
      report.check(counted == expected,
                   "lemma1 t=" + std::to_string(t) + " enumerated=" + counted.str() + " f(t)=" + expected.str());
      EnumerationRequest block_req;
      block_req.size_limit = limit;
      const BigInt block = block_mcds(base_block(t), block_req).count;
      report.check(block == expected,
                   "block t=" + std::to_string(t) + " block_mcds(G_t-E(X),X)=" + block.str() + " f(t)=" + expected.str());
    }
  }
  if (o.product) {
    if (o.k < 2) throw UsageError("--product needs --k >= 2");
    const auto c = composite({o.t, o.k, false});
    const BigInt brute = count_mcds(c.graph, limit);
    const BigInt via_blocks = composite_count_via_blocks(base_block(o.t), o.k);
    BigInt formula = 1;
    for (std::size_t i = 0; i < o.k; ++i) formula *= bounds::f(o.t);
    report.check(brute == formula && via_blocks == formula,
                 "product t=" + std::to_string(o.t) + " k=" + std::to_string(o.k) + " brute=" + brute.str() +
                     " blocks=" + via_blocks.str() + " f(t)^k=" + formula.str());
  }
  if (o.corollary) {
    const auto c = composite({3, 3, false});
    report.check(is_bipartite(c.graph).has_value(), "corollary bipartite composite(3,3)");
    const auto d = degeneracy(c.graph);
    report.check(d.value == 3, "corollary degeneracy=" + std::to_string(d.value));
    const auto cuts = cut_vertices(c.graph);
    report.check(cuts == VertexSet(c.graph.order(), {0}), "corollary cut_vertices=" + cuts.to_string());
    for (std::size_t k = 1; k <= 3; ++k) {
      const auto ck = composite({3, k, false});
      const auto rot = planar_rotation_g3k(k);
      const auto faces = trace_faces(ck.graph, rot).size();
      const long chi = euler_characteristic(ck.graph, rot);
      report.check(chi == 2, "corollary euler k=" + std::to_string(k) + " V=" + std::to_string(ck.graph.order()) +
                                 " E=" + std::to_string(ck.graph.edge_count()) + " F=" + std::to_string(faces));
    }
    const auto rate = bounds::growth_rate(3);
    report.check(std::abs(rate.rate - 1.472) < 5e-4, "corollary rate=" + rate.rendered);
  }
  return report.ok() ? kExitOk : kExitAbort;
}

// rate / threshold -----------------------------------------------------------

int cmd_rate(std::size_t t_max, bool json, std::ostream& out) {
  if (t_max < 2) throw UsageError("--t-max must be at least 2");
  const std::size_t best = bounds::best_t(t_max);
  for (std::size_t t = 2; t <= t_max; ++t) {
    const auto r = bounds::growth_rate(t);
    if (json) {
      nlohmann::ordered_json j;
      j["t"] = t;
      j["f"] = r.count.str();
      j["order"] = r.block_order;
      j["rate"] = r.rate;
      j["rendered"] = r.rendered;
      j["argmax"] = t == best;
      out << j.dump() << '\n';
    } else {
      std::ostringstream line;
      line << "t=" << t << " f=" << r.count.str() << " order=" << r.block_order << " rate=" << std::fixed
           << std::setprecision(6) << r.rate << " (" << r.rendered << ")" << (t == best ? " *" : "");
      out << line.str() << '\n';
    }
  }
  return kExitOk;
}

int cmd_threshold(std::size_t order, bool json, std::ostream& out) {
  if (order < 1) throw UsageError("--order must be at least 1");
  const BigInt c = bounds::threshold(order);
  if (json) {
    nlohmann::ordered_json j;
    j["order"] = order;
    j["threshold"] = c.str();
    out << j.dump() << '\n';
  } else {
    out << c.str() << '\n';
  }
  return kExitOk;
}

// search ---------------------------------------------------------------------

struct SearchOptions {
  std::string input;
  std::size_t generate = 6;
  std::string policy = "all";
  std::string attach;
  std::string mode = "beat-t4";
  unsigned jobs = 1;
  bool json = true;
  bool timing = false;
  bool no_product_check = false;
};

search::ThresholdMode parse_mode(const std::string& mode) {
  if (mode == "beat-t4") return search::ThresholdMode::beat_t4();
  constexpr std::string_view prefix = "min-count:";
  if (mode.starts_with(prefix)) {
    const std::string digits = mode.substr(prefix.size());
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw UsageError("bad --mode " + mode);
    }
    return search::ThresholdMode::at_least(BigInt(digits));
  }
  throw UsageError("--mode must be beat-t4 or min-count:N");
}

int cmd_search(const SearchOptions& o, std::istream& in, std::ostream& out) {
  search::SearchConfig config;
  if (o.policy == "all") {
    config.policy = search::AttachmentPolicy::all();
  } else if (o.policy == "full") {
    config.policy = search::AttachmentPolicy::full();
  } else {
    if (o.attach.empty()) throw UsageError("--policy explicit needs --attach 'a,b;c,d'");
    std::vector<std::vector<Vertex>> sets;
    std::stringstream ss(o.attach);
    std::string item;
    while (std::getline(ss, item, ';')) sets.push_back(parse_vertex_list(item));
    config.policy = search::AttachmentPolicy::explicit_sets(std::move(sets));
  }
  config.mode = parse_mode(o.mode);
  config.jobs = std::max(1U, o.jobs);
  config.output = &out;
  config.include_timing = o.timing;
  config.product_check = !o.no_product_check;

  std::ifstream file;
  if (!o.input.empty()) {
    if (o.input == "-") {
      config.input = &in;
    } else {
      file.open(o.input);
      if (!file) throw UsageError("cannot open " + o.input);
      config.input = &file;
    }
  } else {
    if (o.generate < 1 || o.generate > search::kGeneratorMaxOrder) {
      throw UsageError("--generate must be in [1, " + std::to_string(search::kGeneratorMaxOrder) + "]");
    }
    config.generator_max_order = o.generate;
  }
  return search::exit_code(search::search_stream(config));
}

// properties -----------------------------------------------------------------

int cmd_properties(const SourceOptions& source, bool json, std::istream& in, std::ostream& out) {
  for (const auto& loaded : load(source, in)) {
    const Graph& g = loaded.graph;
    const bool connected = is_connected(g);
    const bool bipartite = is_bipartite(g).has_value();
    const auto d = degeneracy(g);
    const auto cuts = cut_vertices(g);
    std::vector<std::string> cut_names;
    cuts.for_each([&](Vertex v) {
      cut_names.push_back(loaded.construction ? loaded.construction->labels[v] : std::to_string(v));
    });
    if (json) {
      nlohmann::ordered_json j;
      j["graph6"] = io::emit_graph6(g);
      j["order"] = g.order();
      j["edges"] = g.edge_count();
      j["connected"] = connected;
      j["bipartite"] = bipartite;
      j["degeneracy"] = d.value;
      j["cut_vertices"] = cut_names;
      out << j.dump() << '\n';
    } else {
      std::string cut_text;
      for (const auto& name : cut_names) cut_text += (cut_text.empty() ? "" : ",") + name;
      out << "order=" << g.order() << " edges=" << g.edge_count() << " connected=" << (connected ? "yes" : "no")
          << " bipartite=" << (bipartite ? "yes" : "no") << " degeneracy=" << d.value << " cut={" << cut_text
          << "}\n";
    }
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimal connected dominating set toolkit", "mcds"};
  app.require_subcommand(1);

  ConstructOptions construct_opts;
  auto* construct = app.add_subcommand("construct", "build G_t or G_t^k");
  add_source_options(construct, construct_opts.source, false);
  construct->add_option("--format", construct_opts.format, "output format")
      ->check(CLI::IsMember({"graph6", "edges", "dot"}));
  construct->add_flag("--rotation", construct_opts.rotation, "emit the plane rotation system (t = 3)");

  CountOptions count_opts;
  auto* count = app.add_subcommand("count", "count minimal connected dominating sets");
  CountOptions enum_opts;
  auto* enumerate = app.add_subcommand("enumerate", "list minimal connected dominating sets");
  for (auto [cmd, opts] : {std::pair{count, &count_opts}, std::pair{enumerate, &enum_opts}}) {
    add_source_options(cmd, opts->source);
    cmd->add_flag("--filter-x", opts->filter_x, "keep sets meeting X (constructions only)");
    cmd->add_flag("--block", opts->block, "count per-block solutions with a hub on --attach");
    cmd->add_option("--attach", opts->attach, "attachment set: X or v1,v2,...");
    cmd->add_flag("--force", opts->force, "lift the brute-force size guard");
    cmd->add_flag("--json", opts->json, "JSON lines output");
  }
  enumerate->add_flag("--labels", enum_opts.labels, "print construction labels");

  VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "re-check the construction's counting claims");
  verify->add_flag("--lemma1", verify_opts.lemma1, "X-intersecting counts of G_t equal f(t)");
  verify->add_option("--t-max", verify_opts.t_max, "largest t for --lemma1");
  verify->add_flag("--product", verify_opts.product, "composite count equals f(t)^k");
  verify->add_option("--t", verify_opts.t, "t for --product");
  verify->add_option("--k", verify_opts.k, "k for --product");
  verify->add_flag("--corollary", verify_opts.corollary, "bipartite, 3-degenerate, plane G_3^k");
  verify->add_flag("--force", verify_opts.force, "lift the brute-force size guard");

  std::size_t rate_t_max = 10;
  bool rate_json = false;
  auto* rate = app.add_subcommand("rate", "growth rate f(t)^(1/(2t+1)) table");
  rate->add_option("--t-max", rate_t_max, "largest t");
  rate->add_flag("--json", rate_json, "JSON lines output");

  std::size_t threshold_order = 0;
  bool threshold_json = false;
  auto* threshold = app.add_subcommand("threshold", "least block count of a given order that beats t = 4");
  threshold->add_option("--order", threshold_order, "block order m")->required();
  threshold->add_flag("--json", threshold_json, "JSON output");

  SearchOptions search_opts;
  auto* search_cmd = app.add_subcommand("search", "search candidate base graphs");
  search_cmd->add_option("--input", search_opts.input, "graph6 stream, '-' for stdin (default: internal generator)");
  search_cmd->add_option("--generate", search_opts.generate, "internal generator: orders 1..N (N <= 7)");
  search_cmd->add_option("--policy", search_opts.policy, "attachment policy")
      ->check(CLI::IsMember({"all", "full", "explicit"}));
  search_cmd->add_option("--attach", search_opts.attach, "explicit attachment sets 'a,b;c,d'");
  search_cmd->add_option("--mode", search_opts.mode, "beat-t4 or min-count:N");
  search_cmd->add_option("--jobs", search_opts.jobs, "parallel workers");
  search_cmd->add_flag("--json", search_opts.json, "JSON lines output (always on)");
  search_cmd->add_flag("--timing", search_opts.timing, "include elapsed time in the summary");
  search_cmd->add_flag("--no-product-check", search_opts.no_product_check, "skip the k = 2 brute-force check");

  SourceOptions properties_source;
  bool properties_json = false;
  auto* properties = app.add_subcommand("properties", "bipartiteness, degeneracy and cut vertices");
  add_source_options(properties, properties_source);
  properties->add_flag("--json", properties_json, "JSON lines output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*construct) return cmd_construct(construct_opts, out);
    if (*count) return cmd_count(count_opts, in, out);
    if (*enumerate) return cmd_enumerate(enum_opts, in, out);
    if (*verify) return cmd_verify(verify_opts, out);
    if (*rate) return cmd_rate(rate_t_max, rate_json, out);
    if (*threshold) return cmd_threshold(threshold_order, threshold_json, out);
    if (*search_cmd) return cmd_search(search_opts, in, out);
    if (*properties) return cmd_properties(properties_source, properties_json, in, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GuardError& e) {
    err << "guard: " << e.what() << " (pass --force or set MCDS_FORCE_LIMIT)\n";
    return kExitGuard;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitAbort;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitAbort;
  }
  return kExitUsage;
}

}  // namespace mcds::cli
