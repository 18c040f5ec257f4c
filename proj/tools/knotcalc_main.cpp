#include <CLI11.hpp>
#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>

#include "knotcalc/freegroup.hpp"
#include "knotcalc/goeritz.hpp"
#include "knotcalc/indices.hpp"
#include "knotcalc/tables.hpp"

namespace {

using namespace knotcalc;

KnotDiagram diagram_from_flags(const std::string& pd, const std::string& braid) {
  if (!pd.empty() && !braid.empty())
    throw CLI::ValidationError("--pd and --braid are mutually exclusive");
  if (!pd.empty()) return parse_pd(pd);
  if (!braid.empty()) return parse_braid(braid);
  throw CLI::ValidationError("one of --pd or --braid is required");
}

void write_out(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream os(out_path);
  if (!os) throw std::runtime_error("cannot open output file: " + out_path);
  os << payload;
}

std::vector<std::int64_t> parse_primes(const std::string& csv) {
  std::vector<std::int64_t> primes;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    std::size_t comma = csv.find(',', pos);
    if (comma == std::string::npos) comma = csv.size();
    primes.push_back(std::stoll(csv.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return primes;
}

int run(int argc, char** argv) {
  CLI::App app{"Alexander invariants, Nakanishi/MQ index bounds, and free-group "
               "witness checks for knot group presentations"};
  app.require_subcommand(1);

  std::string pd, braid, dataset, word_text, format = "text", out_path, primes_csv;
  std::uint64_t seed = 1;
  int iters = 1000, depth = 2, p = 3, q = 5;

  auto add_diagram_flags = [&](CLI::App* cmd) {
    cmd->add_option("--pd", pd, "PD code, e.g. \"X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)\"");
    cmd->add_option("--braid", braid, "braid word, e.g. \"braid(2; 1 1 1)\"");
  };

  auto* cmd_parse = app.add_subcommand("parse", "parse a diagram and print its Wirtinger presentation");
  add_diagram_flags(cmd_parse);

  auto* cmd_alex = app.add_subcommand("alexander", "compute the Alexander polynomial");
  add_diagram_flags(cmd_alex);

  auto* cmd_nak = app.add_subcommand("nakanishi", "certified bounds on the Nakanishi index");
  add_diagram_flags(cmd_nak);
  cmd_nak->add_option("--primes", primes_csv, "battery primes, e.g. 2,3,5");

  auto* cmd_mq = app.add_subcommand("mq", "MQ index bounds from computed m plus metadata");
  add_diagram_flags(cmd_mq);
  std::optional<bool> mq_fibered;
  std::optional<int> mq_u, mq_rank, mq_hint;
  cmd_mq->add_option("--fibered", mq_fibered, "fibered flag (true/false)");
  cmd_mq->add_option("--u", mq_u, "unknotting number");
  cmd_mq->add_option("--rank", mq_rank, "rank of the knot group");
  cmd_mq->add_option("--hint-upper", mq_hint, "literature upper bound for a");
  cmd_mq->add_option("--primes", primes_csv, "battery primes");
  cmd_mq->add_option("--format", format, "json|csv|text");

  auto* cmd_kpq = app.add_subcommand("kpq", "classify the connected sum of (2,p) and (2,q) torus knots");
  cmd_kpq->add_option("--p", p, "odd, |p| >= 3")->required();
  cmd_kpq->add_option("--q", q, "odd, |q| >= 3")->required();
  cmd_kpq->add_option("--format", format, "json|csv|text");

  auto* cmd_lemma = app.add_subcommand("lemma-check", "randomized witness-identity checks");
  cmd_lemma->add_option("--seed", seed, "RNG seed");
  cmd_lemma->add_option("--iters", iters, "iteration count")->check(CLI::PositiveNumber);

  auto* cmd_depth = app.add_subcommand("derived-depth", "derived-series depth of a free-group word");
  cmd_depth->add_option("--word", word_text, "word, e.g. \"[x,y]\" or \"xyXY\"")->required();
  cmd_depth->add_option("--depth", depth, "maximum depth to test")->check(CLI::PositiveNumber);

  auto* cmd_s4 = app.add_subcommand("section4", "classify a dataset against the embedded 26/19 lists");
  cmd_s4->add_option("--dataset", dataset, "JSONL knot dataset")->required();
  cmd_s4->add_option("--primes", primes_csv, "battery primes");
  cmd_s4->add_option("--format", format, "json|csv|text");
  cmd_s4->add_option("--out", out_path, "output path (default stdout)");

  auto* cmd_emit = app.add_subcommand("emit", "run the pipeline and emit per-knot reports");
  cmd_emit->add_option("--dataset", dataset, "JSONL knot dataset")->required();
  cmd_emit->add_option("--primes", primes_csv, "battery primes");
  cmd_emit->add_option("--format", format, "json|csv|text");
  cmd_emit->add_option("--out", out_path, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  PipelineOptions options;
  if (!primes_csv.empty()) options.primes = parse_primes(primes_csv);

  if (cmd_parse->parsed()) {
    KnotDiagram d = diagram_from_flags(pd, braid);
    GroupPresentation g = wirtinger_presentation(d);
    std::cout << "crossings: " << d.crossing_count() << ", edges: " << d.arc_count()
              << "\n";
    std::cout << "generators: " << g.generator_count << "\n";
    for (std::size_t i = 0; i < g.relators.size(); ++i)
      std::cout << "relator " << i + 1 << ": " << format_word(g.relators[i]) << "\n";
    return 0;
  }
  if (cmd_alex->parsed()) {
    KnotDiagram d = diagram_from_flags(pd, braid);
    LaurentPoly delta = alexander_polynomial(alexander_matrix(wirtinger_presentation(d)));
    std::cout << to_string(delta) << "\n";
    return 0;
  }
  if (cmd_nak->parsed()) {
    KnotDiagram d = diagram_from_flags(pd, braid);
    AlexanderData a = alexander_matrix(wirtinger_presentation(d));
    LaurentPoly delta = alexander_polynomial(a);
    auto battery = default_battery(delta, options.primes);
    IndexBounds m = nakanishi_bounds(a, battery);
    std::cout << "delta: " << to_string(delta) << "\n";
    std::cout << "m in [" << m.lower << ", " << m.upper << "]\n";
    return 0;
  }
  if (cmd_mq->parsed()) {
    KnotDiagram d = diagram_from_flags(pd, braid);
    AlexanderData a = alexander_matrix(wirtinger_presentation(d));
    IndexReport rep;
    rep.name = d.name().empty() ? "knot" : d.name();
    rep.delta = alexander_polynomial(a);
    rep.fibered = mq_fibered;
    auto battery = default_battery(rep.delta, options.primes);
    rep.m_bounds = nakanishi_bounds(a, battery);
    bool nontrivial = !rep.delta.is_one() || (mq_u && *mq_u >= 1);
    MqResult mq = mq_bounds_traced(rep.m_bounds, mq_fibered, mq_u, mq_rank, nontrivial, mq_hint);
    rep.a_bounds = mq.a;
    rep.a_bounds_prior = mq.a_prior;
    rep.rules = mq.rules;
    write_out(out_path, report_emit(rep, parse_report_format(format)));
    return 0;
  }
  if (cmd_kpq->parsed()) {
    IndexReport rep = kpq_classify(p, q);
    write_out(out_path, report_emit(rep, parse_report_format(format)));
    return 0;
  }
  if (cmd_lemma->parsed()) {
    WordSampler sampler(seed, 6);
    int passed = 0;
    for (int i = 0; i < iters; ++i) {
      Word a = sampler.sample_up_to(8), b = sampler.sample_up_to(8);
      Word c = sampler.sample_up_to(8), dd = sampler.sample_up_to(8);
      LemmaWitness w = lemma_witness(a, b, c, dd);
      Word lhs = commutator(word_product(c, a), word_product(dd, b));
      Word rhs = word_product(w.witness, commutator(a, b));
      std::set<int> y_gens = c.generators_used();
      for (int g : dd.generators_used()) y_gens.insert(g);
      bool ok = lhs == rhs && w.decomposition.evaluate({c, dd}) == w.witness &&
                kill_generators(w.witness, y_gens).empty();
      if (ok) ++passed;
    }
    std::cout << "lemma witness identity: " << passed << "/" << iters << " passed\n";
    return passed == iters ? 0 : 1;
  }
  if (cmd_depth->parsed()) {
    Word w = parse_word(word_text);
    int rank = std::max(w.max_generator(), 1);
    DerivedDepth dd = derived_depth(w, rank, depth);
    std::cout << dd.to_string() << "\n";
    return 0;
  }
  if (cmd_s4->parsed()) {
    auto records = load_dataset(dataset);
    auto reports = run_pipeline(records, options);
    Section4Report s4 = reproduce_section4(reports);
    write_out(out_path, report_emit(s4, parse_report_format(format)));
    return s4.mismatches.empty() ? 0 : 1;
  }
  if (cmd_emit->parsed()) {
    auto records = load_dataset(dataset);
    auto reports = run_pipeline(records, options);
    std::sort(reports.begin(), reports.end(),
              [](const IndexReport& x, const IndexReport& y) {
                return knot_name_less(x.name, y.name);
              });
    write_out(out_path, report_emit(reports, parse_report_format(format)));
    bool any_error = false;
    for (const auto& r : reports) any_error = any_error || r.error.has_value();
    return any_error ? 1 : 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
