// Acceptance checks AC1..AC11. Prints one PASS/FAIL line per criterion and
// exits nonzero when any criterion fails or overruns its time budget.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <unistd.h>
#include <vector>

#include "json.hpp"
#include "msd/bounds.hpp"
#include "msd/cli.hpp"
#include "msd/detector.hpp"
#include "msd/dist.hpp"
#include "msd/simulator.hpp"
#include "msd/textlab.hpp"
#include "synthetic.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using msd::Categorical;
using msd::Label;

namespace {

/// Collects failed sub-checks; the criterion passes when none failed.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    failed_ += !ok;
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool ok() const { return failed_ == 0 && total_ > 0; }
  std::string summary() const {
    std::ostringstream s;
    s << (total_ - failed_) << "/" << total_ << " checks";
    for (const auto& n : notes_) s << "; " << n;
    for (const auto& f : failures_) s << "; FAILED: " << f;
    return s.str();
  }

 private:
  std::size_t total_ = 0, failed_ = 0;
  std::vector<std::string> failures_, notes_;
};

std::string num(double v) {
  std::ostringstream s;
  s.precision(17);
  s << v;
  return s.str();
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = msd::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

unsigned worker_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  auto ranks = [](const std::vector<double>& v) {
    std::vector<std::size_t> order(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return v[a] < v[b]; });
    std::vector<double> r(v.size());
    for (std::size_t i = 0; i < order.size();) {
      std::size_t j = i;
      while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
      for (std::size_t k = i; k <= j; ++k) r[order[k]] = (i + j) / 2.0 + 1.0;
      i = j + 1;
    }
    return r;
  };
  const auto rx = ranks(x), ry = ranks(y);
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) mx += rx[i] / n, my += ry[i] / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

// ---------------------------------------------------------------------------

void ac1(Checks& c) {
  const double a = msd::auroc_upper(0.1);
  c.expect(std::abs(a - 0.595) <= 1e-12, "auroc_upper(0.1) = " + num(a));
  c.expect(std::round(a * 10.0) / 10.0 == 0.6, "one-decimal rounding is 0.6");

  const auto r = cli({"curve", "--delta", "0.1", "--n", "1,10,100,300,1000", "--format", "json"});
  c.expect(r.code == 0, "curve exit code " + std::to_string(r.code) + " " + r.err);
  if (r.code != 0) return;
  const auto rows = json::parse(r.out)["points"];
  c.expect(rows.size() == 5, "five curve rows");
  double prev = -1.0, prev_tv = -1.0;
  for (const auto& row : rows) {
    const double au = row["auroc_upper"].get<double>(), tv = row["tv_lower"].get<double>();
    c.expect(au >= prev, "row n=" + num(row["n"].get<double>()) + " below previous row");
    c.expect(tv >= prev_tv, "tv_lower nondecreasing at n=" + num(row["n"].get<double>()));
    c.expect(std::abs(au - (0.5 + tv - tv * tv / 2)) <= 1e-12, "row follows the ceiling formula");
    prev = au;
    prev_tv = tv;
  }
  c.expect(std::abs(rows[0]["auroc_upper"].get<double>() - 0.595) <= 1e-12, "n=1 row is 0.595");
  c.note("curve auroc column: " + num(rows[0]["auroc_upper"].get<double>()) + " .. " +
         num(prev));
}

void ac2(Checks& c) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> size(1, 12);
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t k = size(rng);
    const auto p = msd::testing::random_categorical(k, rng, 0.15);
    const auto q = msd::testing::random_categorical(k, rng, 0.15);
    const auto r = msd::min_error_bruteforce(p, q);
    const double gap = std::abs(r.min_error - (1.0 - msd::tv_distance(p, q)));
    worst = std::max(worst, gap);
    c.expect(gap <= 1e-12, "pair " + std::to_string(t) + " gap " + num(gap));
    // Independent evaluation of the likelihood-ratio region's error.
    double err = 0.0;
    for (std::size_t s = 0; s < k; ++s) err += p[s] >= q[s] ? q[s] : p[s];
    c.expect(r.lr_region_optimal && std::abs(err - r.min_error) <= 1e-12,
             "LR region not optimal for pair " + std::to_string(t));
  }
  c.note("max |min_error - (1 - tv)| = " + num(worst));
}

void ac3(Checks& c) {
  std::mt19937_64 rng(3031);
  std::uniform_int_distribution<std::size_t> size(2, 4);
  for (int t = 0; t < 200; ++t) {
    const std::size_t k = size(rng);
    const auto p = msd::testing::random_categorical(k, rng, 0.1);
    const auto q = msd::testing::random_categorical(k, rng, 0.1);
    double prev = 0.0;
    for (std::size_t n = 1; n <= 8; ++n) {
      const double tv = msd::product_tv_exact(p, q, n);
      c.expect(tv >= prev - 1e-12, "pair " + std::to_string(t) + " decreases at n=" +
                                       std::to_string(n));
      prev = tv;
    }
  }
  const double b = msd::product_tv_exact(Categorical::bernoulli(0.6), Categorical::bernoulli(0.5), 2);
  c.expect(std::abs(b - 0.11) <= 1e-15, "Bernoulli n=2 gives " + num(b));
  c.note("Bernoulli(0.6)/(0.5) n=2: " + num(b));
}

std::vector<std::pair<double, double>> delta_epsilon_grid() {
  std::vector<std::pair<double, double>> g;
  for (int i = 0; i < 20; ++i) {
    for (int j = 0; j < 20; ++j) g.emplace_back(0.05 * (i + 1), 0.5 + 0.49 * (j + 1) / 20.0);
  }
  return g;
}

void ac4(Checks& c) {
  const auto n = msd::sample_complexity_iid(0.1, 0.9);
  c.expect(n == 300, "sample_complexity_iid(0.1, 0.9) = " + std::to_string(n));
  for (const auto& [delta, eps] : delta_epsilon_grid()) {
    const auto m = msd::sample_complexity_iid(delta, eps);
    auto ceiling = [&](std::uint64_t k) { return msd::auroc_upper(msd::tv_tensor_lower(k, delta)); };
    c.expect(ceiling(m) >= eps, "n* misses eps at delta=" + num(delta) + " eps=" + num(eps));
    c.expect(m == 1 || ceiling(m - 1) < eps,
             "n*-1 already reaches eps at delta=" + num(delta) + " eps=" + num(eps));
  }
}

void ac5(Checks& c) {
  for (const auto& [delta, eps] : delta_epsilon_grid()) {
    const auto r = msd::sample_complexity_noniid(delta, eps, msd::DependenceSpec::iid(1));
    const auto expect =
        static_cast<std::uint64_t>(std::ceil(std::log(8.0 / (1.0 - eps)) / (delta * delta)));
    c.expect(r.n == expect, "collapse at delta=" + num(delta) + " eps=" + num(eps) + ": " +
                                std::to_string(r.n) + " vs " + std::to_string(expect));
  }
  std::mt19937_64 rng(5055);
  std::uniform_int_distribution<std::size_t> count(1, 30), nblocks(1, 6);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> delta_d(0.02, 1.0), eps_d(0.5, 0.999);
  for (int t = 0; t < 100; ++t) {
    std::vector<msd::DependenceBlock> blocks(nblocks(rng));
    for (auto& b : blocks) b = {count(rng), unit(rng)};
    const double delta = delta_d(rng), eps = eps_d(rng);
    const auto n0 = msd::sample_complexity_noniid(delta, eps, msd::DependenceSpec(blocks)).n;
    const std::size_t j = t % blocks.size();
    auto rho_up = blocks;
    rho_up[j].rho = rho_up[j].rho + (1.0 - rho_up[j].rho) * unit(rng);
    auto c_up = blocks;
    c_up[j].count += count(rng);
    const auto n_rho = msd::sample_complexity_noniid(delta, eps, msd::DependenceSpec(rho_up)).n;
    const auto n_c = msd::sample_complexity_noniid(delta, eps, msd::DependenceSpec(c_up)).n;
    c.expect(n_rho >= n0, "raising rho lowered n in spec " + std::to_string(t));
    c.expect(n_c >= n0, "raising c lowered n in spec " + std::to_string(t));
  }
}

void ac6(Checks& c) {
  const std::size_t trials = 100000;
  msd::ExperimentConfig cfg{Categorical::bernoulli(0.6), Categorical::bernoulli(0.5),
                            {1, 2, 3, 5, 10, 20, 50, 100, 300}, trials, std::nullopt, 6, worker_threads()};
  const auto res = msd::run_experiment(cfg);
  const double slack = msd::monte_carlo_slack(trials);
  const double exact1 = msd::exact_lr_auroc(cfg.m, cfg.h, 1);
  c.expect(std::abs(exact1 - 0.55) <= 1e-12, "enumerated n=1 AUROC " + num(exact1));
  c.expect(std::abs(res.rows[0].empirical_auroc - exact1) <= 0.01,
           "n=1 empirical " + num(res.rows[0].empirical_auroc));
  c.expect(res.rows.back().empirical_auroc >= 0.9,
           "n=300 empirical " + num(res.rows.back().empirical_auroc));
  std::size_t bounded = 0;
  for (const auto& row : res.rows) {
    if (!row.auroc_upper_exact) continue;
    ++bounded;
    c.expect(row.empirical_auroc <= *row.auroc_upper_exact + slack,
             "n=" + std::to_string(row.n) + " empirical above exact ceiling");
  }
  c.expect(bounded >= 5, "rows within the enumeration budget");
  c.note("n=1 " + num(res.rows[0].empirical_auroc) + ", n=300 " +
         num(res.rows.back().empirical_auroc) + ", " + std::to_string(bounded) +
         " rows under the exact ceiling");
}

void ac7(Checks& c) {
  const std::size_t trials = 100000, block = 10;
  const std::vector<std::size_t> ns{10, 50, 100, 300};
  auto run = [&](std::optional<msd::DependenceSpec> dep, std::vector<std::size_t> n_values) {
    msd::ExperimentConfig cfg{Categorical::bernoulli(0.6), Categorical::bernoulli(0.5),
                              std::move(n_values), trials, std::move(dep), 7, worker_threads()};
    return msd::run_experiment(cfg).rows;
  };
  const double slack = msd::monte_carlo_slack(trials);
  const auto indep = run(msd::DependenceSpec({{block, 0.0}}), ns);
  const auto half = run(msd::DependenceSpec({{block, 0.5}}), ns);
  const auto full = run(msd::DependenceSpec({{block, 1.0}}), ns);
  std::vector<std::size_t> reduced;
  for (std::size_t n : ns) reduced.push_back(n / block);
  const auto iid_reduced = run(std::nullopt, reduced);
  std::ostringstream s;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    c.expect(half[i].empirical_auroc <= indep[i].empirical_auroc + slack,
             "rho=0.5 beats rho=0 at n=" + std::to_string(ns[i]));
    c.expect(std::abs(full[i].empirical_auroc - iid_reduced[i].empirical_auroc) <= slack,
             "rho=1 at n=" + std::to_string(ns[i]) + " is " + num(full[i].empirical_auroc) +
                 " vs IID n/c " + num(iid_reduced[i].empirical_auroc));
    s << "n=" << ns[i] << ": " << indep[i].empirical_auroc << "/" << half[i].empirical_auroc
      << "/" << full[i].empirical_auroc << " ";
  }
  c.note("rho 0/0.5/1 AUROC " + s.str());
}

void ac8(Checks& c) {
  std::mt19937_64 rng(8088);
  const auto src_h = msd::testing::random_bigram_source(8, rng);
  const auto src_m = msd::testing::random_bigram_source(8, rng);
  const auto human = msd::testing::synthetic_corpus(src_h, Label::Human, 200, 50, 81, "h");
  const auto machine = msd::testing::synthetic_corpus(src_m, Label::Machine, 200, 50, 82, "m");
  const std::vector<std::size_t> orders{1, 2, 3, 4};
  const auto rows = msd::textlab::best_auroc_by_order(human, machine, orders);
  std::ostringstream s;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0) {
      c.expect(rows[i].auroc_upper >= rows[i - 1].auroc_upper,
               "order " + std::to_string(rows[i].order) + " below previous order");
    }
    s << rows[i].auroc_upper << " ";
  }
  c.note("bigram-source AUROC ceiling by order " + s.str());

  const auto [m, h] = msd::testing::pair_with_tv(10, 0.3);
  const auto uh = msd::testing::synthetic_corpus(msd::testing::unigram_source(h), Label::Human,
                                                 1000, 100, 83, "h");
  const auto um = msd::testing::synthetic_corpus(msd::testing::unigram_source(m), Label::Machine,
                                                 1000, 100, 84, "m");
  const auto est = msd::textlab::estimate_corpus_tv(uh, um, 1);
  c.expect(est.human_total >= 100000 && est.machine_total >= 100000, "token counts");
  c.expect(std::abs(est.tv - 0.3) <= 0.03, "plug-in TV " + num(est.tv));
  c.note("plug-in TV at true 0.3: " + num(est.tv));
}

void ac9(Checks& c) {
  const auto [m, h] = msd::testing::pair_with_tv(10, 0.1);
  const auto human = msd::testing::synthetic_corpus(msd::testing::unigram_source(h), Label::Human,
                                                    300, 128, 91, "h");
  const auto machine = msd::testing::synthetic_corpus(msd::testing::unigram_source(m),
                                                      Label::Machine, 300, 128, 92, "m");
  const std::vector<std::size_t> lengths{1, 2, 4, 8, 16, 32, 64, 128};
  const auto rows = msd::textlab::auroc_vs_prefix_length(human, machine, lengths, {0.7, 9});
  std::vector<double> x, y;
  std::ostringstream s;
  for (const auto& r : rows) {
    x.push_back(static_cast<double>(r.length));
    y.push_back(r.test_auroc);
    s << r.test_auroc << " ";
  }
  const double rho = spearman(x, y);
  c.expect(rows.size() >= 5, "at least five lengths");
  c.expect(rho > 0.9, "Spearman " + num(rho));
  c.note("Spearman(L, AUROC) = " + num(rho) + " over " + s.str());

  const std::vector<std::size_t> ks{1, 2};
  const auto tuples =
      msd::textlab::auroc_vs_tuple_size(human, machine, ks, {0.7, 9}, {}, /*prefix_length=*/16);
  c.expect(tuples[1].test_auroc >= tuples[0].test_auroc - 0.02,
           "k=2 " + num(tuples[1].test_auroc) + " vs k=1 " + num(tuples[0].test_auroc));
  c.note("pairwise AUROC k=1 " + num(tuples[0].test_auroc) + ", k=2 " +
         num(tuples[1].test_auroc));
}

void ac10(Checks& c) {
  std::mt19937_64 rng(1010);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<std::size_t> rows_d(2, 10), cols_d(1, 8);
  std::bernoulli_distribution keep(0.6), coin(0.5);
  double worst = 0.0;
  for (int t = 0; t < 50; ++t) {
    const std::size_t rows = rows_d(rng), cols = cols_d(rng);
    msd::textlab::SparseMatrix x(cols);
    std::vector<Label> y(rows);
    for (std::size_t r = 0; r < rows; ++r) {
      std::vector<std::uint32_t> idx;
      std::vector<double> val;
      for (std::uint32_t j = 0; j < cols; ++j) {
        if (keep(rng)) idx.push_back(j), val.push_back(2.0 * u(rng));
      }
      x.append_row(idx, val);
      y[r] = coin(rng) ? Label::Machine : Label::Human;
    }
    std::vector<double> w(cols);
    for (auto& v : w) v = u(rng);
    const double b = u(rng), l2 = 0.5 * (u(rng) + 1.0);
    std::vector<double> gw(cols);
    double gb = 0.0;
    msd::textlab::logistic_gradient(w, b, x, y, l2, gw, gb);
    const double h = 1e-5;
    for (std::size_t j = 0; j <= cols; ++j) {
      auto wp = w, wm = w;
      double bp = b, bm = b;
      if (j < cols) wp[j] += h, wm[j] -= h;
      else bp += h, bm -= h;
      const double fd = (msd::textlab::logistic_loss(wp, bp, x, y, l2) -
                         msd::textlab::logistic_loss(wm, bm, x, y, l2)) /
                        (2 * h);
      const double diff = std::abs(fd - (j < cols ? gw[j] : gb));
      worst = std::max(worst, diff);
      c.expect(diff < 1e-6, "instance " + std::to_string(t) + " coordinate " + std::to_string(j));
    }
  }
  c.note("max |analytic - finite difference| = " + num(worst));

  std::uniform_int_distribution<int> level(0, 8);
  std::uniform_int_distribution<std::size_t> len(1, 60);
  double worst_auc = 0.0;
  for (int t = 0; t < 500; ++t) {
    std::vector<double> a(len(rng)), b(len(rng));
    const double shift = (t % 4) * 0.25;
    for (auto& v : a) v = level(rng) * 0.5 + shift;
    for (auto& v : b) v = level(rng) * 0.5;
    const auto roc = msd::roc_from_scores(a, b);
    const double diff = std::abs(roc.auroc - roc.auroc_trapezoid);
    worst_auc = std::max(worst_auc, diff);
    c.expect(diff <= 1e-9, "score set " + std::to_string(t));
  }
  c.note("max |trapezoid - Mann-Whitney| = " + num(worst_auc));
}

void ac11(Checks& c) {
  const fs::path dir = fs::temp_directory_path() / ("msd_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  auto write = [&](const std::string& name, const std::string& content) {
    std::ofstream(dir / name) << content;
    return (dir / name).string();
  };
  const auto p = write("p.json", "[0.2, 0.5, 0.3]");
  const auto q = write("q.json", "[0.4, 0.4, 0.2]");
  const auto dep = write("dep.json", R"({"blocks": [{"c": 10, "rho": 0.5}]})");
  const auto sim = write("sim.json", R"({"m": [0.4, 0.6], "h": [0.5, 0.5], "n_values": [1, 5, 20],
      "trials_per_class": 2000, "seed": 3, "dependence": {"blocks": [{"c": 4, "rho": 0.3}]}})");

  std::mt19937_64 rng(1111);
  const auto [m, h] = msd::testing::pair_with_tv(10, 0.3);
  std::string corpus;
  for (const auto& d : msd::testing::synthetic_corpus(msd::testing::unigram_source(h),
                                                      Label::Human, 40, 20, 1, "h")) {
    corpus += json{{"id", d.id}, {"text", d.text}, {"label", "human"}}.dump() + "\n";
  }
  for (const auto& d : msd::testing::synthetic_corpus(msd::testing::unigram_source(m),
                                                      Label::Machine, 40, 20, 2, "m")) {
    corpus += json{{"id", d.id}, {"text", d.text}, {"label", "machine"}}.dump() + "\n";
  }
  const auto corpus_file = write("corpus.jsonl", corpus);

  const std::vector<std::vector<std::string>> commands{
      {"tv", p, q},
      {"--format", "json", "tv", p, q},
      {"bounds", "--delta", "0.1", "--epsilon", "0.9", "--dependence", dep},
      {"curve", "--delta", "0.1", "--n", "1,10,100,300,1000"},
      {"--seed", "5", "simulate", sim, "--no-timing"},
      {"--format", "json", "simulate", sim, "--no-timing"},
      {"corpus", "tv-by-order", corpus_file, "--orders", "1,2,3,4"},
      {"--seed", "2", "corpus", "train-ablate", corpus_file, "--lengths", "2,5,10,20", "--epochs",
       "100"},
      {"--seed", "2", "corpus", "pairwise", corpus_file, "--k", "1,2,3", "--epochs", "100"},
  };
  for (const auto& args : commands) {
    const auto a = cli(args), b = cli(args);
    std::string label;
    for (const auto& s : args) label += (s.find('/') == std::string::npos ? s : "<file>") + " ";
    c.expect(a.code == 0 && b.code == 0, label + "failed: " + a.err);
    c.expect(!a.out.empty() && a.out == b.out, label + "differs between runs");
  }

  // The same through --out: the written files must match byte for byte.
  auto slurp = [](const fs::path& f) {
    std::ifstream in(f, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  const auto out1 = (dir / "a.csv").string(), out2 = (dir / "b.csv").string();
  cli({"--out", out1, "--seed", "9", "simulate", sim, "--no-timing"});
  cli({"--out", out2, "--seed", "9", "simulate", sim, "--no-timing"});
  c.expect(!slurp(out1).empty() && slurp(out1) == slurp(out2), "--out files differ");

  // With the timing column present, everything but that column must agree.
  auto strip_timing = [](const std::string& text) {
    std::istringstream in(text);
    std::string line, out;
    while (std::getline(in, line)) {
      if (!line.empty() && line[0] != '#') line = line.substr(0, line.rfind(','));
      out += line + "\n";
    }
    return out;
  };
  const auto t1 = cli({"simulate", sim}), t2 = cli({"simulate", sim});
  c.expect(t1.out.find("wall_time_seconds") != std::string::npos, "timing column present");
  c.expect(strip_timing(t1.out) == strip_timing(t2.out), "simulate differs outside timing column");
  c.note(std::to_string(commands.size()) + " commands run twice");
  fs::remove_all(dir);
}

struct Criterion {
  const char* id;
  const char* title;
  double budget_seconds;
  std::function<void(Checks&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "AUROC ceiling anchor and monotone bound curve", 1.0, ac1},
      {"AC2", "Le Cam tightness on 1000 random pairs", 60.0, ac2},
      {"AC3", "tensorized TV nondecreasing; Bernoulli n=2 is 0.11", 60.0, ac3},
      {"AC4", "IID sample complexity and ceiling tightness grid", 1.0, ac4},
      {"AC5", "non-IID closed form collapse and monotonicity", 1.0, ac5},
      {"AC6", "simulation agrees with exact and guaranteed AUROC", 300.0, ac6},
      {"AC7", "non-IID degradation and rho=1 sample reduction", 300.0, ac7},
      {"AC8", "n-gram order trend and plug-in TV consistency", 120.0, ac8},
      {"AC9", "prefix length and pairwise augmentation trends", 300.0, ac9},
      {"AC10", "gradient and AUROC numerical hygiene", 60.0, ac10},
      {"AC11", "CLI determinism", 60.0, ac11},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Checks checks;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.body(checks);
    } catch (const std::exception& e) {
      checks.expect(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < cr.budget_seconds;
    const bool pass = checks.ok() && in_time;
    failed += !pass;
    std::cout << (pass ? "PASS " : "FAIL ") << cr.id << " " << cr.title << " ("
              << checks.summary() << "; " << secs << " s of " << cr.budget_seconds << " s"
              << (in_time ? "" : ", over budget") << ")" << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
