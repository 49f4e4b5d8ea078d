#include <algorithm>
#include <numeric>

#include "normcov/clique.hpp"
#include "normcov/errors.hpp"
#include "normcov/rng.hpp"
#include "normcov/search.hpp"
#include "parallel.hpp"

namespace normcov {

AlphaOmegaReport sample_alpha_omega(std::size_t c, std::size_t trials, std::uint64_t seed,
                                    const AlphaOmegaOptions& options) {
  if (c < 1 || c > 12) throw InputError("sample_alpha_omega: c must be in 1..12");
  if (trials == 0) throw InputError("sample_alpha_omega: trials must be >= 1");
  if (options.node_budget == 0) throw InputError("sample_alpha_omega: node budget must be positive");
  const LabeledRB gc = build_gc(c);

  AlphaOmegaReport report;
  report.c = c;
  report.n = gc.rb.order();
  report.seed = seed;
  report.options = options;
  report.trials.resize(trials);

  CliqueOptions clique_options;
  clique_options.budget = SearchBudget::nodes(options.node_budget);
  clique_options.max_vertices = std::max<std::size_t>(clique_options.max_vertices, report.n);

  detail::parallel_for(trials, [&](std::size_t t) {
    AlphaOmegaTrial& trial = report.trials[t];
    trial.trial = t;
    trial.seed = derive_seed(seed, t);
    const Graph g = realize_type(gc.rb, RandomPairs{options.probability, trial.seed});
    const CliqueResult omega = maximum_clique(g, clique_options);
    const CliqueResult alpha = maximum_stable_set(g, clique_options);
    trial.omega = omega.size;
    trial.alpha = alpha.size;
    trial.omega_exact = omega.exact;
    trial.alpha_exact = alpha.exact;
  });

  std::size_t below = 0;
  for (const auto& trial : report.trials) {
    report.max_omega = std::max(report.max_omega, trial.omega);
    report.max_alpha = std::max(report.max_alpha, trial.alpha);
    if (trial.complete()) ++report.complete_trials;
    if (trial.complete() && trial.omega < 4 * c && trial.alpha < 4 * c) ++below;
  }
  report.fraction_below_4c = static_cast<double>(below) / static_cast<double>(trials);
  return report;
}

MnozicaReport mnozica_estimate(std::size_t c, std::uint64_t samples, std::uint64_t seed) {
  if (c < 1 || c > kMaxGcLevel) throw InputError("mnozica_estimate: c out of range");
  const std::size_t n = static_cast<std::size_t>(gc_order(c));
  const std::size_t k = 4 * c;
  if (k > n) {
    throw PreconditionError("mnozica_estimate: 4c = " + std::to_string(k) + " exceeds |G_c| = " + std::to_string(n));
  }
  if (samples == 0) throw InputError("mnozica_estimate: samples must be >= 1");
  const LabeledRB gc = build_gc(c);

  // Dense colour table while it stays small.
  std::vector<Color> table;
  const bool dense = n <= 4096;
  if (dense) {
    table.assign(n * n, Color::none);
    for (Vertex v = 0; v < n; ++v) {
      for (const Vertex w : gc.rb.blue_neighbours(v)) table[v * n + w] = Color::blue;
      for (const Vertex w : gc.rb.red_neighbours(v)) table[v * n + w] = Color::red;
    }
  }
  auto colour = [&](Vertex u, Vertex v) { return dense ? table[u * n + v] : gc.rb.color(u, v); };

  struct ChunkStats {
    std::uint64_t min_non_blue = ~std::uint64_t{0};
    std::uint64_t min_non_red = ~std::uint64_t{0};
    std::uint64_t sum_non_blue = 0;
    std::uint64_t sum_non_red = 0;
  };
  const std::uint64_t chunks = (samples + kMnozicaChunk - 1) / kMnozicaChunk;
  std::vector<ChunkStats> stats(chunks);
  const std::uint64_t total_pairs = static_cast<std::uint64_t>(k) * (k - 1) / 2;

  detail::parallel_for(chunks, [&](std::size_t chunk) {
    Rng rng(derive_seed(seed, chunk));
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::vector<std::size_t> swaps(k);
    ChunkStats& st = stats[chunk];
    const std::uint64_t begin = chunk * kMnozicaChunk;
    const std::uint64_t end = std::min(samples, begin + kMnozicaChunk);
    for (std::uint64_t sample = begin; sample < end; ++sample) {
      // Partial Fisher-Yates; undone afterwards so every sample starts from
      // the identity permutation.
      for (std::size_t i = 0; i < k; ++i) {
        swaps[i] = i + static_cast<std::size_t>(rng.below(n - i));
        std::swap(perm[i], perm[swaps[i]]);
      }
      std::uint64_t blue = 0;
      std::uint64_t red = 0;
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a + 1; b < k; ++b) {
          const Color col = colour(perm[a], perm[b]);
          blue += col == Color::blue ? 1 : 0;
          red += col == Color::red ? 1 : 0;
        }
      }
      for (std::size_t i = k; i-- > 0;) std::swap(perm[i], perm[swaps[i]]);
      st.min_non_blue = std::min(st.min_non_blue, total_pairs - blue);
      st.min_non_red = std::min(st.min_non_red, total_pairs - red);
      st.sum_non_blue += total_pairs - blue;
      st.sum_non_red += total_pairs - red;
    }
  });

  MnozicaReport report;
  report.c = c;
  report.n = n;
  report.subset_size = k;
  report.samples = samples;
  report.seed = seed;
  report.total_pairs = total_pairs;
  report.min_non_blue = ~std::uint64_t{0};
  report.min_non_red = ~std::uint64_t{0};
  std::uint64_t sum_blue = 0;
  std::uint64_t sum_red = 0;
  for (const auto& st : stats) {
    report.min_non_blue = std::min(report.min_non_blue, st.min_non_blue);
    report.min_non_red = std::min(report.min_non_red, st.min_non_red);
    sum_blue += st.sum_non_blue;
    sum_red += st.sum_non_red;
  }
  report.mean_non_blue = static_cast<double>(sum_blue) / static_cast<double>(samples);
  report.mean_non_red = static_cast<double>(sum_red) / static_cast<double>(samples);
  report.reference = 4.1 * static_cast<double>(c * c);
  return report;
}

}  // namespace normcov
