#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace grelu {

/// Deterministic random source. mt19937_64 output is fully specified by the
/// standard; the distributions below are hand-rolled so results are identical
/// across standard libraries.
class Rng {
 public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next_u64() { return eng_(); }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    // uniform in [lo, hi)
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // uniform integer in [0, n) by rejection, unbiased
    uint64_t below(uint64_t n);

    // standard normal via Box-Muller (one draw per call, cached pair)
    double normal();

    // Fisher-Yates shuffle
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // k distinct draws from [0, n) without replacement, in draw order
    std::vector<int> sample_without_replacement(int n, int k);

    // stream derived from (seed, stream index); used for per-epoch dropout
    static uint64_t mix(uint64_t seed, uint64_t stream);

 private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace grelu
