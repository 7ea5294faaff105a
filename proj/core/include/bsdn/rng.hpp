// Seeded RNG streams for reproducible simulation runs.
//
// Every random draw in a run comes from a stream derived from the run's
// master seed by `derive_seed(master, purpose)`, where `purpose` is a short
// stable string ("overlay", "jitter", "workload", ...). Adding a new stream
// never perturbs the sequences of existing ones. The generator itself is
// splitmix64, chosen so the exact sequences are reproducible from this file
// alone (cross-language ports included).

#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace bsdn {

inline uint64_t splitmix64_next(uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// FNV-1a over the purpose string, mixed into the master seed.
inline uint64_t derive_seed(uint64_t master, std::string_view purpose, uint64_t index = 0) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : purpose) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    uint64_t s = master ^ h;
    s ^= index * 0x9E3779B97F4A7C15ULL;
    // one mixing round so adjacent (master, index) pairs decorrelate
    return splitmix64_next(s);
}

class Rng {
public:
    Rng() : state_(0x853c49e6748fea9bULL) {}
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() { return splitmix64_next(state_); }

    // [0, 1)
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // uniform in [0, bound), bound > 0; Lemire's unbiased rejection method
    uint64_t next_below(uint64_t bound) {
        if (bound <= 1) return 0;
        __uint128_t m = static_cast<__uint128_t>(next_u64()) * bound;
        auto lo = static_cast<uint64_t>(m);
        if (lo < bound) {
            uint64_t threshold = (0ULL - bound) % bound;
            while (lo < threshold) {
                m = static_cast<__uint128_t>(next_u64()) * bound;
                lo = static_cast<uint64_t>(m);
            }
        }
        return static_cast<uint64_t>(m >> 64);
    }

    double uniform(double lo, double hi) { return lo + next_double() * (hi - lo); }

    bool bernoulli(double p) { return next_double() < p; }

    // Box-Muller; one fresh pair per call keeps the draw count predictable.
    double gaussian(double mean, double sigma) {
        double u1 = next_double();
        double u2 = next_double();
        if (u1 < 1e-300) u1 = 1e-300;
        double r = std::sqrt(-2.0 * std::log(u1));
        return mean + sigma * r * std::cos(6.283185307179586 * u2);
    }

    // Exponential with the given rate (events per unit).
    double exponential(double rate) {
        double u = next_double();
        if (u < 1e-300) u = 1e-300;
        return -std::log(u) / rate;
    }

    uint64_t state() const { return state_; }

private:
    uint64_t state_;
};

// Sample k distinct indices from [0, n) in selection order (k <= n).
// Partial Fisher-Yates over an index vector; O(n) setup.
template <typename OutVec>
void sample_without_replacement(Rng& rng, uint32_t n, uint32_t k, OutVec& out) {
    out.clear();
    if (k == 0 || n == 0) return;
    if (k > n) k = n;
    std::vector<uint32_t> idx(n);
    for (uint32_t i = 0; i < n; ++i) idx[i] = i;
    for (uint32_t i = 0; i < k; ++i) {
        uint32_t j = i + static_cast<uint32_t>(rng.next_below(n - i));
        std::swap(idx[i], idx[j]);
        out.push_back(idx[i]);
    }
}

}  // namespace bsdn
