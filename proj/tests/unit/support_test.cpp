// Copyright 2026 The qsonus Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <atomic>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qsonus/parallel.hpp"
#include "qsonus/random.hpp"
#include "qsonus/sweep.hpp"

namespace {

using namespace qsonus;

TEST(CounterRng, DeterministicAndSplit) {
  CounterRng a(1, 2, 0), b(1, 2, 0), c(1, 2, 1), d(1, 3, 0), e(2, 2, 0);
  std::set<std::uint64_t> firsts;
  for (auto* r : {&c, &d, &e}) firsts.insert((*r)());
  const auto va = a();
  EXPECT_EQ(va, b());
  EXPECT_EQ(firsts.size(), 3u);
  EXPECT_EQ(firsts.count(va), 0u);
  EXPECT_EQ(a.counter(), 1u);
}

TEST(CounterRng, UniformMoments) {
  CounterRng r(7, 7);
  double sum = 0.0, sq = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = r.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
    sq += u * u;
  }
  EXPECT_NEAR(sum / n, 0.5, 0.005);
  EXPECT_NEAR(sq / n - (sum / n) * (sum / n), 1.0 / 12.0, 0.002);
  const double v = r.uniform(-3.0, -1.0);
  EXPECT_GE(v, -3.0);
  EXPECT_LT(v, -1.0);
}

class WithThreads : public ::testing::Test {
 protected:
  void TearDown() override { unsetenv("QSONUS_THREADS"); }
};

TEST_F(WithThreads, EnvironmentSetsPoolSize) {
  setenv("QSONUS_THREADS", "3", 1);
  EXPECT_EQ(worker_count(), 3u);
  setenv("QSONUS_THREADS", "zero", 1);
  EXPECT_GE(worker_count(), 1u);
}

TEST_F(WithThreads, VisitsEveryIndexOnce) {
  setenv("QSONUS_THREADS", "4", 1);
  std::vector<std::atomic<int>> hits(1000);
  parallel_for(hits.size(), [&](std::size_t i) { ++hits[i]; });
  for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
  parallel_for(0, [](std::size_t) { FAIL(); });
}

TEST_F(WithThreads, RethrowsWorkerException) {
  setenv("QSONUS_THREADS", "4", 1);
  EXPECT_THROW(parallel_for(100, [](std::size_t i) {
                 if (i == 57) throw std::runtime_error("boom");
               }),
               std::runtime_error);
}

TEST_F(WithThreads, SweepIndependentOfPoolSize) {
  const auto signal = synth_speech_like(1.0, 8000, 2);
  SweepConfig cfg;
  cfg.n_qubits = 13;
  cfg.shots_per_frame = {5, 50};
  cfg.epsilons = {0.0, 0.1};
  cfg.realizations = 3;
  std::string out[2];
  const char* sizes[] = {"1", "4"};
  for (int i = 0; i < 2; ++i) {
    setenv("QSONUS_THREADS", sizes[i], 1);
    std::ostringstream os;
    write_sweep_csv(os, sweep_measurements(signal, cfg));
    out[i] = os.str();
  }
  EXPECT_EQ(out[0], out[1]);
}

}  // namespace
