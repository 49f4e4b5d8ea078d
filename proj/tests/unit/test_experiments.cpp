#include <doctest.h>

#include <cstdlib>

#include "normcov/errors.hpp"
#include "normcov/io.hpp"
#include "normcov/search.hpp"

using namespace normcov;

TEST_CASE("alpha/omega sampling") {
  const AlphaOmegaReport report = sample_alpha_omega(5, 20, 1234);
  CHECK(report.n == 46);
  REQUIRE(report.trials.size() == 20);
  CHECK(report.complete_trials == 20);
  for (const auto& t : report.trials) {
    CHECK(t.omega >= 5);  // the cover cliques survive every realization
    CHECK(t.alpha >= 5);
  }
  AlphaOmegaOptions full;
  full.probability = 1.0;
  const AlphaOmegaReport dense = sample_alpha_omega(4, 3, 1, full);
  for (const auto& t : dense.trials) CHECK(t.omega >= 4);
  CHECK_THROWS_AS(sample_alpha_omega(13, 1, 1), InputError);
}

TEST_CASE("alpha/omega sampling is reproducible and thread-count independent") {
  const std::string a = dump_json(to_json(sample_alpha_omega(6, 6, 99)));
  setenv("NCL_THREADS", "1", 1);
  const std::string b = dump_json(to_json(sample_alpha_omega(6, 6, 99)));
  unsetenv("NCL_THREADS");
  CHECK(a == b);
  CHECK(a != dump_json(to_json(sample_alpha_omega(6, 6, 100))));
}

TEST_CASE("4c-subset estimator") {
  CHECK_THROWS_AS(mnozica_estimate(1, 10, 1), PreconditionError);
  const MnozicaReport r = mnozica_estimate(4, 5000, 7);
  CHECK(r.subset_size == 16);
  CHECK(r.total_pairs == 120);
  CHECK(r.min_non_blue <= r.total_pairs);
  CHECK(r.min_non_red <= r.total_pairs);
  CHECK(r.mean_non_blue >= static_cast<double>(r.min_non_blue));
  CHECK(r.mean_non_red <= static_cast<double>(r.total_pairs));

  const std::string a = dump_json(to_json(mnozica_estimate(6, 3000, 5)));
  setenv("NCL_THREADS", "1", 1);
  const std::string b = dump_json(to_json(mnozica_estimate(6, 3000, 5)));
  unsetenv("NCL_THREADS");
  CHECK(a == b);
}
