#include <benchmark/benchmark.h>

#include <random>

#include "gtw/morphisms.hpp"
#include "gtw/presentations.hpp"
#include "gtw/stallings.hpp"
#include "gtw/words.hpp"

namespace {

std::vector<gtw::Word> random_generators(int count, int len) {
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> letter(0, 3);
  std::vector<gtw::Word> out;
  gtw::Alphabet a(2);
  while (static_cast<int>(out.size()) < count) {
    std::vector<gtw::Letter> raw;
    for (int i = 0; i < len; ++i) raw.push_back(gtw::letter_from_key(letter(rng)));
    gtw::Word w(a, raw);
    if (!w.empty()) out.push_back(w);
  }
  return out;
}

void bm_fold(benchmark::State& state) {
  auto gens = random_generators(static_cast<int>(state.range(0)), 20);
  for (auto _ : state)
    benchmark::DoNotOptimize(gtw::CoreGraph::from_generators(gtw::Alphabet(2), gens));
}
BENCHMARK(bm_fold)->Arg(4)->Arg(16)->Arg(64);

void bm_enumerate(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(gtw::enumerate_words(gtw::Alphabet(2), static_cast<int>(state.range(0))));
}
BENCHMARK(bm_enumerate)->Arg(6)->Arg(8)->Arg(10);

void bm_todd_coxeter(benchmark::State& state) {
  gtw::Presentation p(gtw::Alphabet(1),
                      {gtw::Word(gtw::Alphabet(1), std::vector<gtw::Letter>(state.range(0), 1))});
  for (auto _ : state) benchmark::DoNotOptimize(gtw::todd_coxeter(p, {}));
}
BENCHMARK(bm_todd_coxeter)->Arg(60)->Arg(300)->Arg(1500);

void bm_fix_approx(benchmark::State& state) {
  gtw::Alphabet a(2);
  gtw::FreeEndo phi(a, {gtw::parse_word(a, "ab"), gtw::parse_word(a, "b")});
  for (auto _ : state)
    benchmark::DoNotOptimize(gtw::fix_subgroup_approx({phi}, static_cast<int>(state.range(0))));
}
BENCHMARK(bm_fix_approx)->Arg(8)->Arg(10)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
