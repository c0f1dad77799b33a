#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "lcdk/checker.hpp"
#include "lcdk/events.hpp"
#include "lcdk/gen.hpp"
#include "lcdk/model.hpp"
#include "lcdk/semipublic.hpp"
#include "lcdk/term.hpp"

namespace {

const std::vector<std::string> kAtoms{"a", "b", "c", "d", "e"};

void BM_TermLeq(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<std::pair<lcdk::Term, lcdk::Term>> pairs;
  for (int i = 0; i < 64; ++i)
    pairs.emplace_back(lcdk::random_term(rng, kAtoms, static_cast<int>(state.range(0))),
                       lcdk::random_term(rng, kAtoms, static_cast<int>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [s, t] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(lcdk::term_leq(s, t));
  }
}
BENCHMARK(BM_TermLeq)->Arg(4)->Arg(6)->Arg(8);

void BM_Rtc(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::size_t n = static_cast<std::size_t>(state.range(0));
  lcdk::Relation r(n);
  for (std::size_t i = 0; i < 4 * n; ++i) r.set(rng() % n, rng() % n);
  for (auto _ : state) benchmark::DoNotOptimize(r.rtc());
}
BENCHMARK(BM_Rtc)->Arg(64)->Arg(128)->Arg(256);

void BM_Eval(benchmark::State& state) {
  std::mt19937_64 rng(3);
  lcdk::Model m = lcdk::random_model(17, static_cast<std::size_t>(state.range(0)),
                                     {"a", "b", "c"}, lcdk::Model::Mode::S5);
  lcdk::Formula f = lcdk::random_static_formula(rng, {"p", "q", "r"}, {"a", "b", "c"}, 8, 2);
  for (auto _ : state) benchmark::DoNotOptimize(lcdk::eval(m, f));
}
BENCHMARK(BM_Eval)->Arg(16)->Arg(64);

void BM_UpdateModel(benchmark::State& state) {
  std::mt19937_64 rng(4);
  lcdk::Model m = lcdk::random_model(23, static_cast<std::size_t>(state.range(0)),
                                     {"a", "b", "c"}, lcdk::Model::Mode::S5);
  lcdk::ReadingMap beta = lcdk::random_reading_map(rng, {"a", "b", "c"});
  for (auto _ : state) benchmark::DoNotOptimize(lcdk::update_model(m, beta));
}
BENCHMARK(BM_UpdateModel)->Arg(16)->Arg(64);

void BM_ProductUpdate(benchmark::State& state) {
  std::mt19937_64 rng(5);
  lcdk::Model m = lcdk::random_model(29, static_cast<std::size_t>(state.range(0)),
                                     {"a", "b", "c"}, lcdk::Model::Mode::S5);
  lcdk::EventModel em = lcdk::random_event_model(rng, {"a", "b", "c"}, 3);
  for (auto _ : state) benchmark::DoNotOptimize(lcdk::product_update(m, em));
}
BENCHMARK(BM_ProductUpdate)->Arg(10)->Arg(20);

void BM_ReduceEvent(benchmark::State& state) {
  std::mt19937_64 rng(6);
  auto em = std::make_shared<lcdk::EventModel>(
      lcdk::random_event_model(rng, {"a", "b", "c"}, 3));
  lcdk::Formula phi =
      lcdk::random_static_formula(rng, {"p", "q"}, {"a", "b", "c"},
                                  static_cast<int>(state.range(0)), 2);
  lcdk::Formula f = lcdk::Formula::event(em, em->events[0], phi);
  for (auto _ : state) benchmark::DoNotOptimize(lcdk::reduce_event(f));
}
BENCHMARK(BM_ReduceEvent)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
