#include <coordctl/coordination.hpp>
#include <coordctl/fsm.hpp>
#include <coordctl/minext.hpp>
#include <coordctl/supervisory.hpp>

#include <benchmark/benchmark.h>

#include <random>
#include <string>

using namespace coordctl;

namespace {

// Random deterministic generator with states 0..n-1 over `alphabet`.
Generator random_generator(std::mt19937& rng, const EventSet& alphabet, std::size_t n, const std::string& name) {
    std::bernoulli_distribution edge(0.6);
    std::bernoulli_distribution mark(0.3);
    std::uniform_int_distribution<StateId> target(0, static_cast<StateId>(n - 1));
    Generator g(alphabet, name);
    for (std::size_t i = 0; i < n; ++i) {
        g.add_state(std::to_string(i), i == 0 || mark(rng));
    }
    g.set_initial(0);
    for (StateId s = 0; s < n; ++s) {
        for (EventId e = 0; e < alphabet.size(); ++e) {
            if (edge(rng)) {
                g.add_transition(s, e, target(rng));
            }
        }
    }
    return g;
}

EventSet local_alphabet(const std::string& prefix, std::size_t private_events) {
    EventSet sigma;
    for (std::size_t i = 0; i < private_events; ++i) {
        sigma.add({prefix + std::to_string(i), i % 3 != 2});
    }
    sigma.add({"s0", true});
    sigma.add({"s1", false});
    return sigma;
}

// Set cover instance with m subsets over n ground elements, each subset
// covering roughly a third of the ground set.
SetCoverInstance random_cover(std::mt19937& rng, std::size_t n, std::size_t m) {
    SetCoverInstance inst;
    for (std::size_t i = 0; i < n; ++i) {
        inst.ground.push_back("e" + std::to_string(i));
    }
    std::bernoulli_distribution pick(0.35);
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<std::string> members;
        for (std::size_t i = 0; i < n; ++i) {
            if (pick(rng) || i % m == j) {
                members.push_back(inst.ground[i]);
            }
        }
        inst.collection.emplace_back("c" + std::to_string(j), members);
    }
    inst.budget = m;
    return inst;
}

void BM_SyncProduct(benchmark::State& state) {
    std::mt19937 rng(7);
    auto n = static_cast<std::size_t>(state.range(0));
    auto g1 = random_generator(rng, local_alphabet("a", 3), n, "G1");
    auto g2 = random_generator(rng, local_alphabet("b", 3), n, "G2");
    for (auto _ : state) {
        benchmark::DoNotOptimize(sync_product(g1, g2));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SyncProduct)->RangeMultiplier(2)->Range(8, 256);

void BM_Projection(benchmark::State& state) {
    std::mt19937 rng(11);
    auto sigma = local_alphabet("a", 4);
    auto g = random_generator(rng, sigma, static_cast<std::size_t>(state.range(0)), "G");
    EventSet keep;
    keep.add(sigma[0]);
    keep.add(*sigma.find("s0"));
    keep.add(*sigma.find("s1"));
    Limits limits;
    limits.determinization_cap = 1u << 22;
    for (auto _ : state) {
        benchmark::DoNotOptimize(project_onto(g, keep, limits));
    }
}
BENCHMARK(BM_Projection)->RangeMultiplier(2)->Range(8, 128);

void BM_SupC(benchmark::State& state) {
    std::mt19937 rng(13);
    auto sigma = local_alphabet("a", 4);
    auto n = static_cast<std::size_t>(state.range(0));
    auto plant = random_generator(rng, sigma, n, "L");
    auto spec = random_generator(rng, sigma, n / 2 + 1, "K");
    for (auto _ : state) {
        benchmark::DoNotOptimize(sup_c(spec, plant, sigma.uncontrollable()));
    }
}
BENCHMARK(BM_SupC)->RangeMultiplier(2)->Range(8, 128);

void BM_DecomposabilitySetCover(benchmark::State& state) {
    std::mt19937 rng(17);
    auto reduced = setcover_to_cd(random_cover(rng, static_cast<std::size_t>(state.range(0)), 4));
    auto shared = shared_events(reduced.alphabets);
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_conditionally_decomposable(reduced.spec, reduced.alphabets, shared));
    }
    state.counters["states"] = static_cast<double>(reduced.spec.num_states());
}
BENCHMARK(BM_DecomposabilitySetCover)->DenseRange(2, 8, 2);

void BM_ExactMinExtension(benchmark::State& state) {
    std::mt19937 rng(19);
    auto m = static_cast<std::size_t>(state.range(0));
    auto reduced = setcover_to_cd(random_cover(rng, 5, m));
    std::size_t nodes = 0;
    for (auto _ : state) {
        auto r = exact_min_extension(reduced.spec, reduced.alphabets);
        nodes = r.nodes_explored;
        benchmark::DoNotOptimize(r);
    }
    state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_ExactMinExtension)->DenseRange(2, 6, 1)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
