#include "mcds/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <thread>

#include "json.hpp"
#include "mcds/bounds.hpp"
#include "mcds/constructions.hpp"
#include "mcds/io.hpp"
#include "mcds/structure.hpp"

namespace mcds::search {

namespace {

Graph graph_from_canonical(std::size_t n, const std::string& bits) {
  std::vector<Edge> edges;
  std::size_t pos = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (bits[pos++] == '1') edges.emplace_back(i, j);
    }
  }
  return make_graph(n, edges);
}

BigInt pow_big(const BigInt& base, std::size_t exp) {
  BigInt out = 1;
  for (std::size_t i = 0; i < exp; ++i) out *= base;
  return out;
}

/// c1^(1/m1) > c2^(1/m2), compared exactly.
bool rate_greater(const BigInt& c1, std::size_t m1, const BigInt& c2, std::size_t m2) {
  return pow_big(c1, m2) > pow_big(c2, m1);
}

}  // namespace

std::vector<Graph> generate_connected(std::size_t n) {
  if (n < 1) throw GraphError("generate_connected needs n >= 1");
  if (n > kGeneratorMaxOrder) {
    throw GuardError("internal generator limited to order " + std::to_string(kGeneratorMaxOrder) +
                     "; feed larger candidates as a graph6 stream");
  }
  if (n == 1) return {make_graph(1, std::vector<Edge>{})};

  // Every connected graph has a vertex whose removal leaves it connected, so
  // extending each smaller class by one vertex reaches every class.
  std::map<std::string, bool> seen;
  for (const Graph& smaller : generate_connected(n - 1)) {
    std::vector<Edge> base(smaller.edges().begin(), smaller.edges().end());
    const auto fresh = static_cast<Vertex>(n - 1);
    for (std::uint64_t nbrs = 1; nbrs < (std::uint64_t{1} << (n - 1)); ++nbrs) {
      std::vector<Edge> edges = base;
      for (Vertex v = 0; v < n - 1; ++v) {
        if ((nbrs >> v) & 1U) edges.emplace_back(v, fresh);
      }
      seen.emplace(canonical_form(make_graph(n, edges)), true);
    }
  }
  std::vector<Graph> out;
  out.reserve(seen.size());
  for (const auto& entry : seen) out.push_back(graph_from_canonical(n, entry.first));
  return out;
}

std::string AttachmentPolicy::name() const {
  switch (kind) {
    case Kind::kAllNonempty:
      return "all";
    case Kind::kFullVertexSet:
      return "full";
    case Kind::kExplicit:
      return "explicit";
  }
  return "unknown";
}

CandidateEvaluation evaluate_candidate(const Graph& h, const AttachmentPolicy& policy) {
  const std::size_t m = h.order();
  std::vector<std::vector<Vertex>> candidates;
  switch (policy.kind) {
    case AttachmentPolicy::Kind::kAllNonempty:
      if (m > kAllPolicyMaxOrder) {
        throw GuardError("attachment policy 'all' limited to blocks of order " + std::to_string(kAllPolicyMaxOrder));
      }
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
        candidates.push_back(VertexSet::from_mask(m, mask).members());
      }
      break;
    case AttachmentPolicy::Kind::kFullVertexSet:
      candidates.push_back(VertexSet::full(m).members());
      break;
    case AttachmentPolicy::Kind::kExplicit:
      candidates = policy.sets;
      break;
  }

  CandidateEvaluation out;
  std::vector<Vertex> best_list;
  for (const auto& list : candidates) {
    const bool in_range = std::all_of(list.begin(), list.end(), [&](Vertex v) { return v < m; });
    if (list.empty() || !in_range) {
      ++out.skipped;
      continue;
    }
    BlockSpec block{h, VertexSet(m, list)};
    if (!is_connected(hub_augmented(block))) {
      ++out.skipped;
      continue;
    }
    ++out.evaluated;
    const BigInt c = block_mcds(block).count;
    auto sorted = block.attachment.members();
    if (!out.attachment || c > out.count || (c == out.count && sorted < best_list)) {
      out.count = c;
      out.attachment = block.attachment;
      best_list = std::move(sorted);
    }
  }
  return out;
}

std::string ThresholdMode::name() const {
  return kind == Kind::kBeatT4 ? "beat-t4" : "min-count:" + min_count.str();
}

BigInt ThresholdMode::threshold_for(std::size_t order) const {
  return kind == Kind::kBeatT4 ? bounds::threshold(order) : min_count;
}

namespace {

struct Input {
  std::size_t seq = 0;
  std::size_t line = 0;
  std::optional<Graph> graph;
  std::string graph6;
  std::string error;
};

struct Outcome {
  std::optional<CandidateEvaluation> evaluation;
  std::optional<SearchHit> hit;
  std::string error;
};

Outcome evaluate_input(const Input& in, const SearchConfig& config) {
  Outcome out;
  if (!in.graph) {
    out.error = in.error;
    return out;
  }
  try {
    out.evaluation = evaluate_candidate(*in.graph, config.policy);
  } catch (const std::exception& e) {
    out.error = e.what();
    return out;
  }
  const auto& ev = *out.evaluation;
  if (!ev.attachment) return out;
  const std::size_t m = in.graph->order();
  const BigInt needed = config.mode.threshold_for(m);
  const bool hit = config.mode.kind == ThresholdMode::Kind::kBeatT4 ? bounds::beats_t4(ev.count, m)
                                                                    : ev.count >= needed;
  if (!hit) return out;

  SearchHit h;
  h.seq = in.seq;
  h.graph6 = in.graph6;
  h.order = m;
  h.attachment = ev.attachment->members();
  h.count = ev.count;
  h.threshold = needed;
  h.rate = bounds::block_rate(ev.count, m);
  h.product_check = "skipped";
  if (config.product_check && 2 * m + 1 <= kProductCheckMaxOrder) {
    const BlockSpec block{*in.graph, *ev.attachment};
    const BigInt composed = count_mcds(compose(block, 2), kHardSizeLimit);
    h.product_check = composed == ev.count * ev.count ? "verified" : "mismatch";
  }
  out.hit = std::move(h);
  return out;
}

std::vector<Outcome> evaluate_batch(const std::vector<Input>& batch, const SearchConfig& config) {
  std::vector<Outcome> outcomes(batch.size());
  const unsigned jobs = std::max(1U, config.jobs);
  if (jobs == 1 || batch.size() <= 1) {
    for (std::size_t i = 0; i < batch.size(); ++i) outcomes[i] = evaluate_input(batch[i], config);
    return outcomes;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> workers;
  for (unsigned w = 0; w < std::min<std::size_t>(jobs, batch.size()); ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < batch.size(); i = next++) outcomes[i] = evaluate_input(batch[i], config);
    });
  }
  workers.clear();
  return outcomes;
}

nlohmann::ordered_json vertex_list(const std::vector<Vertex>& vs) {
  auto arr = nlohmann::ordered_json::array();
  for (Vertex v : vs) arr.push_back(v);
  return arr;
}

}  // namespace

SearchSummary search_stream(const SearchConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  SearchSummary summary;
  std::ostream* out = config.output;

  std::vector<Graph> generated;
  std::size_t generated_pos = 0;
  if (config.input == nullptr) {
    for (std::size_t n = 1; n <= config.generator_max_order; ++n) {
      for (auto& g : generate_connected(n)) generated.push_back(std::move(g));
    }
  }
  std::optional<io::Graph6Reader> reader;
  if (config.input != nullptr) reader.emplace(*config.input);

  const std::size_t batch_size = std::max(1U, config.jobs) * 32;
  std::size_t seq = 0;
  bool exhausted = false;
  while (!exhausted) {
    std::vector<Input> batch;
    while (batch.size() < batch_size) {
      Input in;
      if (reader) {
        auto rec = reader->next();
        if (!rec) {
          exhausted = true;
          break;
        }
        in.seq = ++seq;
        in.line = rec->line_number;
        try {
          in.graph = io::parse_graph6(rec->text);
          in.graph6 = io::emit_graph6(*in.graph);
        } catch (const ParseError& e) {
          in.error = e.what();
        }
      } else {
        if (generated_pos == generated.size()) {
          exhausted = true;
          break;
        }
        in.seq = ++seq;
        in.line = in.seq;
        in.graph = std::move(generated[generated_pos++]);
        in.graph6 = io::emit_graph6(*in.graph);
      }
      batch.push_back(std::move(in));
    }
    if (reader && reader->failed()) {
      summary.aborted = true;
      break;
    }

    const auto outcomes = evaluate_batch(batch, config);
    for (std::size_t i = 0; i < batch.size(); ++i) {
      const auto& in = batch[i];
      const auto& oc = outcomes[i];
      if (!oc.evaluation) {
        summary.skipped_inputs.push_back({in.line, oc.error});
        continue;
      }
      ++summary.processed;
      summary.attachments_evaluated += oc.evaluation->evaluated;
      summary.attachments_skipped += oc.evaluation->skipped;
      const auto& ev = *oc.evaluation;
      const std::size_t m = in.graph->order();
      if (ev.attachment && (!summary.best || rate_greater(ev.count, m, summary.best->count, summary.best->order))) {
        summary.best = BestSeen{in.seq, in.graph6, m, ev.attachment->members(), ev.count,
                                bounds::block_rate(ev.count, m)};
      }
      if (oc.hit) {
        ++summary.hits;
        if (out != nullptr) *out << hit_json(*oc.hit) << '\n' << std::flush;
      }
    }
  }

  summary.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (out != nullptr) *out << summary_json(summary, config) << '\n' << std::flush;
  return summary;
}

int exit_code(const SearchSummary& summary) {
  if (summary.aborted) return 1;
  return summary.skipped_inputs.empty() ? 0 : 2;
}

std::string hit_json(const SearchHit& hit) {
  nlohmann::ordered_json j;
  j["seq"] = hit.seq;
  j["graph6"] = hit.graph6;
  j["order"] = hit.order;
  j["attachment"] = vertex_list(hit.attachment);
  j["count"] = hit.count.str();
  j["threshold"] = hit.threshold.str();
  j["rate"] = hit.rate;
  j["product_check"] = hit.product_check;
  return j.dump();
}

std::string summary_json(const SearchSummary& summary, const SearchConfig& config) {
  nlohmann::ordered_json s;
  s["processed"] = summary.processed;
  s["hits"] = summary.hits;
  s["mode"] = config.mode.name();
  s["policy"] = config.policy.name();
  s["attachments_evaluated"] = summary.attachments_evaluated;
  s["attachments_skipped"] = summary.attachments_skipped;
  nlohmann::ordered_json skipped = nlohmann::ordered_json::array();
  for (const auto& sk : summary.skipped_inputs) skipped.push_back({{"line", sk.line}, {"error", sk.error}});
  s["skipped_inputs"] = skipped;
  if (summary.best) {
    const auto& b = *summary.best;
    s["best"] = {{"seq", b.seq},         {"graph6", b.graph6}, {"order", b.order},
                 {"attachment", vertex_list(b.attachment)}, {"count", b.count.str()}, {"rate", b.rate}};
  } else {
    s["best"] = nullptr;
  }
  s["aborted"] = summary.aborted;
  if (config.include_timing) s["elapsed_ms"] = summary.elapsed_ms;
  nlohmann::ordered_json line;
  line["summary"] = s;
  return line.dump();
}

}  // namespace mcds::search
