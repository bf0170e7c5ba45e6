#include <benchmark/benchmark.h>

#include <vector>

#include "gdnp/embedding.hpp"
#include "gdnp/generators.hpp"
#include "gdnp/presentations.hpp"
#include "gdnp/rewriter.hpp"

namespace {

using namespace gdnp;

std::vector<Term> sample_terms(std::size_t leaves, std::size_t count) {
  Sampler s({Letter(1), Letter(2)}, 42 + leaves);
  std::vector<Term> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(s.term(leaves));
  return out;
}

void BM_Phi(benchmark::State& state) {
  const auto terms = sample_terms(static_cast<std::size_t>(state.range(0)), 256);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(phi(terms[i++ % terms.size()]));
}
BENCHMARK(BM_Phi)->DenseRange(4, 10, 2);

// Fresh normalizer per iteration, so cached tableau images do not carry over.
void BM_NormalizeEmbedCold(benchmark::State& state) {
  const auto terms = sample_terms(static_cast<std::size_t>(state.range(0)), 256);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(normalize_embed(terms[i++ % terms.size()]));
}
BENCHMARK(BM_NormalizeEmbedCold)->DenseRange(4, 10, 2);

void BM_NormalizeRewriteCold(benchmark::State& state) {
  const auto terms = sample_terms(static_cast<std::size_t>(state.range(0)), 256);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(normalize_rewrite(terms[i++ % terms.size()]));
}
BENCHMARK(BM_NormalizeRewriteCold)->DenseRange(4, 10, 2);

// Shared normalizers over a batch of distinct terms, the intended usage.
void BM_NormalizeEmbedBatch(benchmark::State& state) {
  const auto terms = sample_terms(static_cast<std::size_t>(state.range(0)), 256);
  for (auto _ : state) {
    Embedder embedder;
    for (const auto& t : terms) benchmark::DoNotOptimize(embedder.normalize(t));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(terms.size()));
}
BENCHMARK(BM_NormalizeEmbedBatch)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_NormalizeRewriteBatch(benchmark::State& state) {
  const auto terms = sample_terms(static_cast<std::size_t>(state.range(0)), 256);
  for (auto _ : state) {
    Rewriter rewriter;
    for (const auto& t : terms) benchmark::DoNotOptimize(rewriter.normalize(t));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(terms.size()));
}
BENCHMARK(BM_NormalizeRewriteBatch)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_PbwCheck(benchmark::State& state) {
  const std::vector<Letter> gens{Letter(1), Letter(2)};
  const Term ab = Term::circ(Term::leaf(Letter(1)), Term::leaf(Letter(2)));
  const Term ba = Term::circ(Term::leaf(Letter(2)), Term::leaf(Letter(1)));
  const std::vector<CPoly> rel{phi(ab) - phi(ba)};
  for (auto _ : state) benchmark::DoNotOptimize(pbw_check(rel, Bounds{4, 2}, gens));
}
BENCHMARK(BM_PbwCheck)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
