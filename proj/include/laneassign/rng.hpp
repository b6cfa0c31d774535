#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace laneassign {

// Seeded RNG with self-contained transforms. std::mt19937_64 output is fixed
// by the standard; the distribution transforms are ours, so identical seeds
// give identical streams on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // [0, 1)
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // inclusive bounds
    int uniform_int(int lo, int hi) {
        if (hi <= lo) return lo;
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    // Box-Muller, one value per call
    double normal(double mean, double sigma) {
        double u1 = 1.0 - uniform();
        double u2 = uniform();
        return mean + sigma * std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = next() % i;
            std::swap(v[i - 1], v[j]);
        }
    }

    // k distinct indices from [0, n), order randomized
    std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k) {
        std::vector<std::size_t> idx(n);
        for (std::size_t i = 0; i < n; ++i) idx[i] = i;
        shuffle(idx);
        if (k < n) idx.resize(k);
        return idx;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace laneassign
