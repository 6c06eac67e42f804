#include "msd/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "msd/bounds.hpp"
#include "msd/detector.hpp"
#include "msd/dist.hpp"
#include "msd/errors.hpp"
#include "msd/simd/kernels.hpp"
#include "msd/simulator.hpp"
#include "msd/textlab.hpp"
#include "table.hpp"

namespace msd::cli {
namespace {

using nlohmann::json;

/// Bad flags or unreadable/invalid input files; exits with kExitUsage.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string out;
  std::string format = "csv";
  bool strict = false;
  bool lenient = false;
  std::string simd = "auto";
};

struct Output {
  std::vector<Table> tables;
  json config;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json_file(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": parse error at byte " + std::to_string(e.byte) + ": " +
                     e.what());
  }
}

std::vector<double> probability_array(const json& value, const std::string& where) {
  if (!value.is_array()) throw InputError(where + ": expected a JSON array of probabilities");
  std::vector<double> probs;
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (!value[i].is_number()) {
      throw InputError(where + ": probs[" + std::to_string(i) + "] is not a number");
    }
    probs.push_back(value[i].get<double>());
  }
  return probs;
}

Categorical make_categorical(std::vector<double> probs, const std::string& where) {
  try {
    return Categorical(std::move(probs));
  } catch (const DomainError& e) {
    throw InputError(where + ": " + e.what());
  }
}

Categorical read_distribution(const std::string& path) {
  return make_categorical(probability_array(parse_json_file(path), path), path);
}

DependenceSpec parse_dependence(const json& value, const std::string& where) {
  const json* blocks = &value;
  if (value.is_object()) {
    const auto it = value.find("blocks");
    if (it == value.end()) throw InputError(where + ": missing field \"blocks\"");
    blocks = &*it;
  }
  if (!blocks->is_array()) throw InputError(where + ": \"blocks\" must be an array");
  std::vector<DependenceBlock> out;
  for (std::size_t j = 0; j < blocks->size(); ++j) {
    const json& b = (*blocks)[j];
    const std::string field = where + ": blocks[" + std::to_string(j) + "]";
    if (!b.is_object()) throw InputError(field + " must be an object {\"c\", \"rho\"}");
    const auto c = b.find("c");
    const auto rho = b.find("rho");
    if (c == b.end() || !c->is_number_unsigned()) {
      throw InputError(field + ".c must be a positive integer");
    }
    if (rho == b.end() || !rho->is_number()) throw InputError(field + ".rho must be a number");
    out.push_back({c->get<std::size_t>(), rho->get<double>()});
  }
  try {
    return DependenceSpec(std::move(out));
  } catch (const DomainError& e) {
    throw InputError(where + ": " + e.what());
  }
}

json dependence_json(const DependenceSpec& dep) {
  json blocks = json::array();
  for (const auto& b : dep.blocks()) blocks.push_back({{"c", b.count}, {"rho", b.rho}});
  return {{"blocks", blocks}};
}

void require_delta_epsilon(double delta, std::optional<double> epsilon) {
  if (!(delta > 0.0)) throw InputError("delta must be > 0");
  if (!(delta <= 1.0)) throw InputError("delta must be <= 1");
  if (epsilon) {
    if (!(*epsilon >= 0.5)) throw InputError("epsilon must be >= 0.5");
    if (!(*epsilon < 1.0)) throw InputError("epsilon must be < 1");
  }
}

json base_config(const std::string& command, const GlobalOptions& g) {
  return {{"command", command}, {"seed", g.seed}, {"format", g.format},
          {"parse_mode", g.lenient ? "lenient" : "strict"}};
}

// ---- tv ------------------------------------------------------------------

struct TvArgs {
  std::string p;
  std::string q;
};

Output cmd_tv(const TvArgs& a, const GlobalOptions& g) {
  const Categorical p = read_distribution(a.p);
  const Categorical q = read_distribution(a.q);
  if (p.support_size() != q.support_size()) {
    throw InputError("distributions have different support sizes (" +
                     std::to_string(p.support_size()) + " vs " +
                     std::to_string(q.support_size()) + ")");
  }
  const double tv = tv_distance(p, q);
  const ChernoffResult c = chernoff(p, q);
  Output o;
  o.config = base_config("tv", g);
  o.config["p"] = a.p;
  o.config["q"] = a.q;
  Table t{"report", {"support_size", "tv", "chernoff", "chernoff_alpha", "disjoint", "auroc_upper"}, {}};
  t.add({std::uint64_t{p.support_size()}, tv, c.information,
         c.disjoint ? Cell{} : Cell{c.alpha}, c.disjoint, auroc_upper(tv)});
  o.tables.push_back(std::move(t));
  return o;
}

// ---- bounds --------------------------------------------------------------

struct BoundsArgs {
  double delta = 0.0;
  double epsilon = 0.0;
  std::string dependence;
};

Output cmd_bounds(const BoundsArgs& a, const GlobalOptions& g, std::ostream& err) {
  require_delta_epsilon(a.delta, a.epsilon);
  Output o;
  o.config = base_config("bounds", g);
  o.config["delta"] = a.delta;
  o.config["epsilon"] = a.epsilon;

  Table t{"bounds",
          {"regime", "n", "association", "tv_lower", "auroc_upper", "precondition_met"},
          {}};
  const std::uint64_t n_iid = sample_complexity_iid(a.delta, a.epsilon);
  const std::vector<std::size_t> at_iid{static_cast<std::size_t>(n_iid)};
  const auto iid_point = auroc_vs_n_curve(a.delta, at_iid).front();
  t.add({std::string("iid"), n_iid, 0.0, iid_point.tv_lower, iid_point.auroc_upper, true});

  if (!a.dependence.empty()) {
    const DependenceSpec dep = parse_dependence(parse_json_file(a.dependence), a.dependence);
    o.config["dependence"] = dependence_json(dep);
    const auto res = sample_complexity_noniid(a.delta, a.epsilon, dep);
    if (!res.concentration_precondition_met) {
      err << "warning: delta <= association / n (" << format_double(res.association) << " / "
          << res.n << "); the non-IID concentration bound does not certify this n\n";
    }
    const std::vector<std::size_t> at{static_cast<std::size_t>(res.n)};
    const auto point = auroc_vs_n_curve(a.delta, at).front();
    t.add({std::string("noniid"), res.n, res.association, point.tv_lower, point.auroc_upper,
           res.concentration_precondition_met});
  }
  o.tables.push_back(std::move(t));
  return o;
}

// ---- curve ---------------------------------------------------------------

struct CurveArgs {
  double delta = 0.0;
  std::vector<std::size_t> n_values;
  std::size_t fpr_points = 101;
  std::string roc_out;
};

Output cmd_curve(const CurveArgs& a, const GlobalOptions& g, Output& roc_side) {
  require_delta_epsilon(a.delta, std::nullopt);
  if (a.n_values.empty()) throw InputError("--n needs at least one sample count");
  for (std::size_t n : a.n_values) {
    if (n == 0) throw InputError("--n values must be >= 1");
  }
  if (a.fpr_points < 2) throw InputError("--fpr-points must be >= 2");

  Output o;
  o.config = base_config("curve", g);
  o.config["delta"] = a.delta;
  o.config["n"] = a.n_values;
  o.config["fpr_points"] = a.fpr_points;

  const auto points = auroc_vs_n_curve(a.delta, a.n_values);
  Table summary{"points", {"n", "tv_lower", "auroc_upper"}, {}};
  Table roc{"roc_upper", {"n", "fpr", "tpr_upper"}, {}};
  const auto grid = uniform_fpr_grid(a.fpr_points);
  for (const auto& p : points) {
    summary.add({std::uint64_t{p.n}, p.tv_lower, p.auroc_upper});
    for (const auto& r : roc_upper_curve(p.tv_lower, grid)) {
      roc.add({std::uint64_t{p.n}, r.fpr, r.tpr_upper});
    }
  }
  o.tables.push_back(std::move(summary));
  if (a.roc_out.empty()) {
    o.tables.push_back(std::move(roc));
  } else {
    roc_side.config = o.config;
    roc_side.tables.push_back(std::move(roc));
  }
  return o;
}

// ---- simulate ------------------------------------------------------------

struct SimulateArgs {
  std::string config;
  bool no_timing = false;
  unsigned threads = 0;
};

ExperimentConfig parse_experiment(const json& cfg, const std::string& where) {
  if (!cfg.is_object()) throw InputError(where + ": config must be a JSON object");
  auto field = [&](const char* name) -> const json& {
    const auto it = cfg.find(name);
    if (it == cfg.end()) throw InputError(where + ": missing field \"" + name + "\"");
    return *it;
  };
  Categorical m = make_categorical(probability_array(field("m"), where + ": m"), where + ": m");
  Categorical h = make_categorical(probability_array(field("h"), where + ": h"), where + ": h");
  if (m.support_size() != h.support_size()) {
    throw InputError(where + ": m and h have different support sizes");
  }
  ExperimentConfig out{std::move(m), std::move(h), {}, 1000, std::nullopt, 0, 1};
  const json& n_values = field("n_values");
  if (!n_values.is_array() || n_values.empty()) {
    throw InputError(where + ": n_values must be a nonempty array");
  }
  for (std::size_t i = 0; i < n_values.size(); ++i) {
    if (!n_values[i].is_number_unsigned() || n_values[i].get<std::size_t>() == 0) {
      throw InputError(where + ": n_values[" + std::to_string(i) + "] must be a positive integer");
    }
    out.n_values.push_back(n_values[i].get<std::size_t>());
  }
  const json& trials = field("trials_per_class");
  if (!trials.is_number_unsigned() || trials.get<std::size_t>() == 0) {
    throw InputError(where + ": trials_per_class must be a positive integer");
  }
  out.trials_per_class = trials.get<std::size_t>();
  if (const auto it = cfg.find("seed"); it != cfg.end()) {
    if (!it->is_number_unsigned()) throw InputError(where + ": seed must be a nonnegative integer");
    out.seed = it->get<std::uint64_t>();
  }
  if (const auto it = cfg.find("threads"); it != cfg.end()) {
    if (!it->is_number_unsigned()) throw InputError(where + ": threads must be a positive integer");
    out.threads = std::max(1u, it->get<unsigned>());
  }
  if (const auto it = cfg.find("dependence"); it != cfg.end() && !it->is_null()) {
    out.dependence = parse_dependence(*it, where + ": dependence");
  }
  return out;
}

Output cmd_simulate(const SimulateArgs& a, const GlobalOptions& g) {
  ExperimentConfig cfg = parse_experiment(parse_json_file(a.config), a.config);
  if (g.seed_given) cfg.seed = g.seed;
  if (a.threads > 0) cfg.threads = a.threads;
  for (std::size_t i = 1; i < cfg.n_values.size(); ++i) {
    if (cfg.n_values[i] <= cfg.n_values[i - 1]) {
      throw InputError(a.config + ": n_values must be strictly ascending");
    }
  }

  Output o;
  o.config = base_config("simulate", g);
  o.config["seed"] = cfg.seed;
  o.config["m"] = std::vector<double>(cfg.m.probs().begin(), cfg.m.probs().end());
  o.config["h"] = std::vector<double>(cfg.h.probs().begin(), cfg.h.probs().end());
  o.config["n_values"] = cfg.n_values;
  o.config["trials_per_class"] = cfg.trials_per_class;
  o.config["dependence"] = cfg.dependence ? dependence_json(*cfg.dependence) : json(nullptr);
  o.config["simd"] = std::string(simd::isa_name(simd::active().isa));

  const ExperimentResult res = run_experiment(cfg);
  Table t{"rows", {"n", "empirical_auroc", "auroc_upper_exact", "auroc_upper_chernoff"}, {}};
  if (!a.no_timing) t.columns.push_back("wall_time_seconds");
  for (const auto& row : res.rows) {
    std::vector<Cell> cells{std::uint64_t{row.n}, row.empirical_auroc,
                            row.auroc_upper_exact ? Cell{*row.auroc_upper_exact} : Cell{},
                            row.auroc_upper_chernoff};
    if (!a.no_timing) cells.emplace_back(row.wall_time_seconds);
    t.add(std::move(cells));
  }
  o.tables.push_back(std::move(t));
  return o;
}

// ---- corpus --------------------------------------------------------------

struct CorpusArgs {
  std::vector<std::string> files;
  std::vector<std::size_t> orders{1, 2, 3, 4};
  std::vector<std::size_t> lengths;
  std::vector<std::size_t> ks{1, 2};
  std::size_t prefix_length = 0;
  double train_frac = 0.7;
  std::string space = "tfidf";
  std::size_t min_df = 2;
  double learning_rate = 0.1;
  std::size_t epochs = 500;
  double l2 = 1e-4;
};

textlab::LabeledSplit load_corpora(const CorpusArgs& a, const GlobalOptions& g,
                                   std::ostream& err) {
  const auto mode = g.lenient ? textlab::ParseMode::Lenient : textlab::ParseMode::Strict;
  std::vector<std::vector<textlab::Document>> parts;
  for (const auto& file : a.files) {
    auto loaded = textlab::load_jsonl_file(file, mode);
    if (loaded.skipped_lines > 0) {
      err << "warning: " << file << ": skipped " << loaded.skipped_lines << " malformed line(s)\n";
    }
    parts.push_back(std::move(loaded.documents));
  }
  const auto docs = textlab::merge_corpora(std::move(parts));
  auto split = textlab::split_by_label(docs);
  if (split.human.empty() || split.machine.empty()) {
    throw InputError("corpus needs documents of both labels (human " +
                     std::to_string(split.human.size()) + ", machine " +
                     std::to_string(split.machine.size()) + ")");
  }
  return split;
}

textlab::ClassifierConfig classifier_config(const CorpusArgs& a, const GlobalOptions& g) {
  textlab::ClassifierConfig c;
  c.space = a.space == "counts" ? textlab::FeatureSpace::Counts : textlab::FeatureSpace::TfIdf;
  c.min_df = a.min_df;
  c.train.learning_rate = a.learning_rate;
  c.train.epochs = a.epochs;
  c.train.l2 = a.l2;
  c.train.seed = g.seed;
  return c;
}

json corpus_config(const std::string& sub, const CorpusArgs& a, const GlobalOptions& g) {
  json c = base_config("corpus " + sub, g);
  c["files"] = a.files;
  return c;
}

json classifier_json(const CorpusArgs& a) {
  return {{"train_frac", a.train_frac}, {"space", a.space},   {"min_df", a.min_df},
          {"learning_rate", a.learning_rate}, {"epochs", a.epochs}, {"l2", a.l2}};
}

Output cmd_tv_by_order(const CorpusArgs& a, const GlobalOptions& g, std::ostream& err) {
  for (std::size_t order : a.orders) {
    if (order < textlab::kMinNGramOrder || order > textlab::kMaxNGramOrder) {
      throw InputError("--orders values must lie in [1, 6]");
    }
  }
  const auto corpus = load_corpora(a, g, err);
  Output o;
  o.config = corpus_config("tv-by-order", a, g);
  o.config["orders"] = a.orders;
  Table t{"rows", {"order", "tv", "auroc_upper", "support_overlap"}, {}};
  for (const auto& row : textlab::best_auroc_by_order(corpus.human, corpus.machine, a.orders)) {
    t.add({std::uint64_t{row.order}, row.tv, row.auroc_upper, row.support_overlap});
  }
  o.tables.push_back(std::move(t));
  return o;
}

Output cmd_train_ablate(const CorpusArgs& a, const GlobalOptions& g, std::ostream& err) {
  if (a.lengths.empty()) throw InputError("--lengths needs at least one prefix length");
  const auto corpus = load_corpora(a, g, err);
  Output o;
  o.config = corpus_config("train-ablate", a, g);
  o.config["lengths"] = a.lengths;
  o.config["classifier"] = classifier_json(a);
  const auto rows = textlab::auroc_vs_prefix_length(corpus.human, corpus.machine, a.lengths,
                                                    {a.train_frac, g.seed},
                                                    classifier_config(a, g));
  Table t{"rows", {"length", "test_auroc"}, {}};
  for (const auto& row : rows) t.add({std::uint64_t{row.length}, row.test_auroc});
  o.tables.push_back(std::move(t));
  return o;
}

Output cmd_pairwise(const CorpusArgs& a, const GlobalOptions& g, std::ostream& err) {
  if (a.ks.empty()) throw InputError("--k needs at least one tuple size");
  for (std::size_t k : a.ks) {
    if (k == 0) throw InputError("--k values must be >= 1");
  }
  const auto corpus = load_corpora(a, g, err);
  Output o;
  o.config = corpus_config("pairwise", a, g);
  o.config["k"] = a.ks;
  o.config["prefix_length"] = a.prefix_length;
  o.config["classifier"] = classifier_json(a);
  const auto rows = textlab::auroc_vs_tuple_size(corpus.human, corpus.machine, a.ks,
                                                 {a.train_frac, g.seed},
                                                 classifier_config(a, g), a.prefix_length);
  Table t{"rows", {"k", "test_auroc", "train_tuples", "test_tuples"}, {}};
  for (const auto& row : rows) {
    t.add({std::uint64_t{row.k}, row.test_auroc, std::uint64_t{row.train_tuples},
           std::uint64_t{row.test_tuples}});
  }
  o.tables.push_back(std::move(t));
  return o;
}

void add_classifier_options(CLI::App* sub, CorpusArgs& a) {
  sub->add_option("--train-frac", a.train_frac, "Training fraction per class")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  sub->add_option("--space", a.space, "Feature space")
      ->check(CLI::IsMember({"tfidf", "counts"}))
      ->capture_default_str();
  sub->add_option("--min-df", a.min_df, "Minimum document frequency for the vocabulary")
      ->capture_default_str();
  sub->add_option("--lr", a.learning_rate, "Gradient descent learning rate")
      ->capture_default_str();
  sub->add_option("--epochs", a.epochs, "Gradient descent epochs")->capture_default_str();
  sub->add_option("--l2", a.l2, "L2 penalty")->capture_default_str();
}

void emit(const Output& o, const GlobalOptions& g, const std::string& path, std::ostream& out) {
  const std::string text =
      render(o.tables, o.config, g.format == "json" ? Format::Json : Format::Csv);
  if (path.empty()) {
    out << text;
  } else {
    write_atomically(path, text);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"msdetect: multi-sample detection limits, simulation and corpus experiments",
               "msdetect"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  auto* seed_opt = app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--out", g.out, "Write data output to this file (atomically)");
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  auto* strict = app.add_flag("--strict", g.strict, "Reject malformed corpus lines (default)");
  app.add_flag("--lenient", g.lenient, "Skip malformed corpus lines")->excludes(strict);
  app.add_option("--simd", g.simd, "Kernel variant")
      ->check(CLI::IsMember({"auto", "scalar", "avx2", "neon"}))
      ->capture_default_str();

  TvArgs tv_args;
  auto* tv = app.add_subcommand("tv", "TV distance, Chernoff information and AUROC ceiling");
  tv->add_option("p", tv_args.p, "JSON array of probabilities")->required();
  tv->add_option("q", tv_args.q, "JSON array of probabilities")->required();

  BoundsArgs bounds_args;
  auto* bounds = app.add_subcommand("bounds", "Samples needed to reach a target AUROC");
  bounds->add_option("--delta", bounds_args.delta, "Single-sample TV distance")->required();
  bounds->add_option("--epsilon", bounds_args.epsilon, "Target AUROC")->required();
  bounds->add_option("--dependence", bounds_args.dependence,
                     "JSON file {\"blocks\": [{\"c\": int, \"rho\": real}, ...]}");

  CurveArgs curve_args;
  auto* curve = app.add_subcommand("curve", "AUROC ceiling against the number of samples");
  curve->add_option("--delta", curve_args.delta, "Single-sample TV distance")->required();
  curve->add_option("--n", curve_args.n_values, "Comma-separated sample counts")
      ->required()
      ->delimiter(',');
  curve->add_option("--fpr-points", curve_args.fpr_points, "ROC grid size")
      ->capture_default_str();
  curve->add_option("--roc-out", curve_args.roc_out,
                    "Write the ROC upper curves to this file instead of appending them");

  SimulateArgs sim_args;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo AUROC of the likelihood-ratio detector");
  simulate->add_option("config", sim_args.config, "Experiment JSON file")->required();
  simulate->add_flag("--no-timing", sim_args.no_timing, "Omit the wall_time_seconds column");
  simulate->add_option("--threads", sim_args.threads, "Worker threads (overrides config)");

  CorpusArgs corpus_args;
  auto* corpus = app.add_subcommand("corpus", "Experiments on labeled JSONL corpora");
  corpus->require_subcommand(1);
  auto* tv_by_order = corpus->add_subcommand("tv-by-order", "Plug-in n-gram TV per order");
  tv_by_order->add_option("files", corpus_args.files, "JSONL corpus files")->required();
  tv_by_order->add_option("--orders", corpus_args.orders, "Comma-separated n-gram orders")
      ->delimiter(',');
  auto* ablate = corpus->add_subcommand("train-ablate", "Test AUROC against prefix length");
  ablate->add_option("files", corpus_args.files, "JSONL corpus files")->required();
  ablate->add_option("--lengths", corpus_args.lengths, "Comma-separated prefix lengths")
      ->required()
      ->delimiter(',');
  add_classifier_options(ablate, corpus_args);
  auto* pairwise = corpus->add_subcommand("pairwise", "Test AUROC against documents per decision");
  pairwise->add_option("files", corpus_args.files, "JSONL corpus files")->required();
  pairwise->add_option("--k", corpus_args.ks, "Comma-separated tuple sizes")->delimiter(',');
  pairwise->add_option("--prefix-length", corpus_args.prefix_length,
                       "Keep only the first L tokens of each document (0 = all)");
  add_classifier_options(pairwise, corpus_args);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  g.seed_given = seed_opt->count() > 0;

  try {
    if (g.simd != "auto") {
      const auto isa = simd::parse_isa(g.simd);
      if (!isa || !simd::isa_available(*isa)) {
        throw InputError("SIMD variant '" + g.simd + "' is not available on this machine");
      }
      simd::select(*isa);
    }

    Output result;
    Output roc_side;
    if (tv->parsed()) {
      result = cmd_tv(tv_args, g);
    } else if (bounds->parsed()) {
      result = cmd_bounds(bounds_args, g, err);
    } else if (curve->parsed()) {
      result = cmd_curve(curve_args, g, roc_side);
    } else if (simulate->parsed()) {
      result = cmd_simulate(sim_args, g);
    } else if (tv_by_order->parsed()) {
      result = cmd_tv_by_order(corpus_args, g, err);
    } else if (ablate->parsed()) {
      result = cmd_train_ablate(corpus_args, g, err);
    } else if (pairwise->parsed()) {
      result = cmd_pairwise(corpus_args, g, err);
    }
    emit(result, g, g.out, out);
    if (!roc_side.tables.empty()) emit(roc_side, g, curve_args.roc_out, out);
    return kExitOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}

}  // namespace msd::cli
