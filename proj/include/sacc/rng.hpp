#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace sacc {

// xoshiro-free deterministic RNG: splitmix64 seeding + a fixed uniform
// mapping, so streams are reproducible independent of the standard library's
// distribution implementations.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        // splitmix64
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // uniform integer in [0, n)
    uint64_t below(uint64_t n) { return n == 0 ? 0 : next_u64() % n; }

    int range(int lo, int hi_inclusive) {
        return lo + static_cast<int>(below(static_cast<uint64_t>(hi_inclusive - lo + 1)));
    }

    // derived stream, e.g. per-epoch shuffles from (seed, epoch)
    static Rng derive(uint64_t seed, uint64_t stream) {
        Rng mixer(seed);
        mixer.state_ ^= 0x5851f42d4c957f2dULL * (stream + 1);
        mixer.next_u64();
        return mixer;
    }

    template <typename T>
    void shuffle(std::vector<T>& values) {
        for (size_t i = values.size(); i > 1; i--) {
            size_t j = below(i);
            std::swap(values[i - 1], values[j]);
        }
    }

private:
    uint64_t state_;
};

}  // namespace sacc
