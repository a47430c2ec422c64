#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace wmn {

// mt19937_64 plus rejection-sampled bounded draws. std::uniform_int_distribution
// and std::sample are implementation-defined, so seeded sequences produced here
// stay identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n; // 2^64 mod n
        std::uint64_t v = eng_();
        while (v < threshold) {
            v = eng_();
        }
        return v % n;
    }

    // Uniform in [lo, hi], inclusive.
    int int_in(int lo, int hi) {
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    // Uniform in [0, 1).
    double unit() {
        return static_cast<double>(eng_() >> 11) * (1.0 / 9007199254740992.0);
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[below(i)]);
        }
    }

private:
    std::mt19937_64 eng_;
};

} // namespace wmn
