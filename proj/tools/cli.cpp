#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "linkc/linkc.hpp"

namespace linkc::cli {
namespace {

const std::map<std::string, Command, std::less<>> kCommands{
    {"score", Command::kScore},       {"sweep", Command::kSweep},
    {"prune", Command::kPrune},       {"truss", Command::kTruss},
    {"sparsify", Command::kSparsify}, {"betweenness", Command::kBetweenness},
    {"eval", Command::kEval},         {"gen", Command::kGen},
};

std::string_view name_of(Command command) {
  for (const auto& [name, value] : kCommands) {
    if (value == command) return name;
  }
  return "?";
}

// Writes to `path`, or to `fallback` when the path is empty or "-".
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty() || path == "-") return;
    file_.open(path);
    if (!file_) throw IoError("cannot open " + path + " for writing");
    stream_ = &file_;
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

HopWeights weights_of(const RunConfig& c) { return {c.weights[0], c.weights[1], c.weights[2]}; }

void write_optional(const std::string& path, const auto& writer) {
  if (path.empty()) return;
  std::ofstream file(path);
  if (!file) throw IoError("cannot open " + path + " for writing");
  writer(file);
}

void add_input(CLI::App* sub, RunConfig& c) {
  sub->add_option("-i,--input", c.input, "edge list file")->required();
}

void add_output(CLI::App* sub, RunConfig& c, const std::string& what) {
  sub->add_option("-o,--output", c.output, what + " (default: standard output)");
}

void add_weights(CLI::App* sub, RunConfig& c) {
  sub->add_option_function<std::vector<double>>(
         "-w,--weights",
         [&c](const std::vector<double>& w) {
           if (w.size() != 3) throw CLI::ValidationError("--weights", "expected three values");
           std::copy(w.begin(), w.end(), c.weights.begin());
         },
         "hop weights w1,w2,w3")
      ->delimiter(',')
      ->expected(3);
}

void add_threads(CLI::App* sub, RunConfig& c) {
  sub->add_option("-t,--threads", c.threads, "worker threads (0: hardware concurrency)");
}

// Rebuilds a score table from a CSV written by the score command, reweighting
// the stored hop strengths.
EdgeScoreTable read_scores(const std::string& path, const Graph& g, const HopWeights& weights) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::vector<std::array<double, 3>> strengths(g.edge_count());
  std::vector<bool> seen(g.edge_count(), false);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 || line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream row(line);
    for (std::string field; std::getline(row, field, ',');) fields.push_back(field);
    if (fields.size() != 9) throw ParseError(line_no, "expected 9 fields");
    const auto u = g.find_vertex(fields[0]);
    const auto v = g.find_vertex(fields[1]);
    if (!u || !v || *u == *v) throw ParseError(line_no, "edge not in graph");
    const auto e = g.find_edge(*u, *v);
    if (!e) throw ParseError(line_no, "edge not in graph");
    try {
      for (std::size_t hop = 0; hop < 3; ++hop) strengths[*e][hop] = std::stod(fields[2 + hop]);
    } catch (const std::logic_error&) {
      throw ParseError(line_no, "bad number");
    }
    seen[*e] = true;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw ParseError(line_no, "scores do not cover every edge");
  }
  return EdgeScoreTable::from_strengths(std::move(strengths), weights);
}

int execute(const RunConfig& c, std::ostream& out) {
  const auto load = [&] { return load_edge_list_file(c.input); };
  switch (c.command) {
    case Command::kScore: {
      const Graph g = load();
      const auto scores = score_all(g, weights_of(c), c.threads);
      Sink sink(c.output, out);
      write_scores_csv(sink.get(), g, scores);
      return kOk;
    }
    case Command::kPrune: {
      const Graph g = load();
      const auto scores = c.scores.empty() ? score_all(g, weights_of(c), c.threads)
                                           : read_scores(c.scores, g, weights_of(c));
      const auto curve = mdcore_sweep(g, scores);
      write_optional(c.density_output, [&](std::ostream& f) { write_density_csv(f, curve); });
      Sink sink(c.output, out);
      write_edge_list(sink.get(), prune(g, curve));
      return kOk;
    }
    case Command::kTruss: {
      const Graph g = load();
      const auto result = maximal_community_truss(g);
      write_optional(c.levels_output, [&](std::ostream& f) { write_level_clusters_csv(f, result); });
      Sink sink(c.output, out);
      write_communities(sink.get(), g, result.communities);
      return kOk;
    }
    case Command::kSparsify: {
      const Graph g = load();
      Sink sink(c.output, out);
      write_edge_list(sink.get(), sparsify_local(g, c.exponent));
      return kOk;
    }
    case Command::kBetweenness: {
      const Graph g = load();
      Sink sink(c.output, out);
      write_edge_values_csv(sink.get(), g, edge_betweenness(g, c.threads), "betweenness");
      return kOk;
    }
    case Command::kSweep: {
      const Graph g = load();
      const auto truth = load_communities_file(c.truth, g, {.delimiter = std::nullopt, .skip_unknown_vertices = true});
      const auto reports = run_weight_ablation(g, truth, c.threads);
      if (!c.density_output.empty() || !c.levels_output.empty()) {
        const auto curve = mdcore_sweep(g, score_all(g, weights_of(c), c.threads));
        write_optional(c.density_output, [&](std::ostream& f) { write_density_csv(f, curve); });
        const Graph pruned = prune(g, curve);
        if (pruned.edge_count() > 0) {
          const auto result = maximal_community_truss(pruned);
          write_optional(c.levels_output, [&](std::ostream& f) { write_level_clusters_csv(f, result); });
        } else {
          write_optional(c.levels_output, [](std::ostream& f) { f << "k,clusters\n"; });
        }
      }
      Sink sink(c.output, out);
      write_report_csv_header(sink.get());
      for (const auto& r : reports) write_report_csv_row(sink.get(), r);
      return kOk;
    }
    case Command::kEval: {
      const Graph g = load();
      const auto truth = load_communities_file(c.truth, g, {.delimiter = std::nullopt, .skip_unknown_vertices = true});
      Sink sink(c.output, out);
      if (!c.detected.empty()) {
        const auto detected = load_communities_file(c.detected, g);
        const auto f = f_score(detected, truth);
        sink.get() << "detected: " << detected.community_count() << '\n'
                   << "ground truth: " << truth.community_count() << '\n'
                   << "f-score: ";
        if (f) {
          sink.get() << *f << '\n';
        } else {
          sink.get() << "--\n";
        }
        return kOk;
      }
      PipelineParams params;
      params.weights = weights_of(c);
      params.sparsify_exponent = c.exponent;
      params.threads = c.threads;
      write_report_text(sink.get(), run_pipeline(g, truth, parse_pruning_method(c.method), params));
      return kOk;
    }
    case Command::kGen: {
      const auto planted =
          planted_partition(GeneratorSpec::equal(c.n, c.communities, c.p_in, c.p_out, c.seed));
      write_optional(c.truth_output,
                     [&](std::ostream& f) { write_communities(f, planted.graph, planted.truth); });
      Sink sink(c.output, out);
      write_edge_list(sink.get(), planted.graph);
      return kOk;
    }
  }
  return kFailure;
}

}  // namespace

std::string describe(const RunConfig& c) {
  std::ostringstream s;
  s << "command=" << name_of(c.command) << " input=" << c.input << " truth=" << c.truth
    << " detected=" << c.detected << " scores=" << c.scores << " output=" << (c.output.empty() ? "-" : c.output)
    << " method=" << c.method << " weights=" << c.weights[0] << ',' << c.weights[1] << ','
    << c.weights[2] << " exponent=" << c.exponent << " n=" << c.n
    << " communities=" << c.communities << " p_in=" << c.p_in << " p_out=" << c.p_out
    << " seed=" << c.seed << " threads=" << c.threads;
  return s.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (!args.empty() && !args.front().starts_with('-') && !kCommands.contains(args.front())) {
    err << "linkc: unknown command '" << args.front() << "'\n";
    return kUnknownCommand;
  }

  RunConfig c;
  CLI::App app{"Link cohesion scoring, MDCore pruning and truss community detection", "linkc"};
  app.require_subcommand(1, 1);

  auto* score = app.add_subcommand("score", "score every edge and write a CSV");
  add_input(score, c);
  add_output(score, c, "score CSV");
  add_weights(score, c);
  add_threads(score, c);

  auto* sweep = app.add_subcommand("sweep", "MDCore pipeline for all seven binary hop weightings");
  add_input(sweep, c);
  sweep->add_option("--truth", c.truth, "ground-truth communities")->required();
  add_output(sweep, c, "ablation CSV");
  sweep->add_option("--density-output", c.density_output, "density curve CSV");
  sweep->add_option("--levels-output", c.levels_output, "per-level cluster counts CSV");
  add_weights(sweep, c);
  add_threads(sweep, c);

  auto* prune_cmd = app.add_subcommand("prune", "keep the MDCore edges");
  add_input(prune_cmd, c);
  add_output(prune_cmd, c, "pruned edge list");
  prune_cmd->add_option("--scores", c.scores, "reuse hop strengths from a score CSV");
  prune_cmd->add_option("--density-output", c.density_output, "density curve CSV");
  add_weights(prune_cmd, c);
  add_threads(prune_cmd, c);

  auto* truss = app.add_subcommand("truss", "maximal-community truss clusters");
  add_input(truss, c);
  add_output(truss, c, "vertex/community list");
  truss->add_option("--levels-output", c.levels_output, "per-level cluster counts CSV");

  auto* sparsify = app.add_subcommand("sparsify", "local Jaccard sparsification");
  add_input(sparsify, c);
  add_output(sparsify, c, "sparsified edge list");
  sparsify->add_option("-e,--exponent", c.exponent, "keep ceil(degree^e) edges per vertex");

  auto* betweenness = app.add_subcommand("betweenness", "edge betweenness centrality");
  add_input(betweenness, c);
  add_output(betweenness, c, "betweenness CSV");
  add_threads(betweenness, c);

  auto* eval = app.add_subcommand("eval", "run a pipeline and score it against ground truth");
  add_input(eval, c);
  eval->add_option("--truth", c.truth, "ground-truth communities")->required();
  eval->add_option("--detected", c.detected, "score these communities instead of running a pipeline");
  eval->add_option("-m,--method", c.method, "original, sparsify or mdcore");
  add_output(eval, c, "report");
  add_weights(eval, c);
  eval->add_option("-e,--exponent", c.exponent, "sparsify exponent");
  add_threads(eval, c);

  auto* gen = app.add_subcommand("gen", "planted-partition random graph");
  gen->add_option("--n", c.n, "vertex count")->required();
  gen->add_option("--communities", c.communities, "community count")->required();
  gen->add_option("--p-in", c.p_in, "within-community edge probability")->required();
  gen->add_option("--p-out", c.p_out, "between-community edge probability")->required();
  gen->add_option("--seed", c.seed, "random seed");
  add_output(gen, c, "edge list");
  gen->add_option("--truth-output", c.truth_output, "planted communities");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "linkc: " << e.what() << '\n';
    return kUsage;
  }
  for (auto* sub : app.get_subcommands()) c.command = kCommands.find(sub->get_name())->second;

  err << "linkc: " << describe(c) << '\n';
  try {
    weights_of(c).validate();
    return execute(c, out);
  } catch (const IoError& e) {
    err << "linkc: " << e.what() << '\n';
    return kMissingFile;
  } catch (const ParseError& e) {
    err << "linkc: " << e.what() << '\n';
    return kMalformedInput;
  } catch (const InvalidArgument& e) {
    err << "linkc: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "linkc: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace linkc::cli
