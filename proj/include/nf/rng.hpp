#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>

namespace nf {

// Deterministic random source. Every distribution is derived from the raw
// mt19937 32-bit stream so that identical seeds give byte-identical results
// regardless of the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed)
        : seed_(seed), gen_(mix(seed)) {}

    std::uint32_t next_u32() { return gen_(); }

    // [0,1) with 24 bits of resolution.
    float uniform() {
        return static_cast<float>(next_u32() >> 8) * (1.0f / 16777216.0f);
    }

    float uniform(float lo, float hi) { return lo + (hi - lo) * uniform(); }

    // [0,n)
    int uniform_int(int n) {
        if (n <= 0) throw std::invalid_argument("Rng::uniform_int: n must be positive");
        return static_cast<int>(next_u32() % static_cast<std::uint32_t>(n));
    }

    float normal(float mean = 0.0f, float sd = 1.0f) {
        if (have_spare_) {
            have_spare_ = false;
            return mean + sd * spare_;
        }
        double u1 = 0.0;
        do { u1 = static_cast<double>(uniform()); } while (u1 <= 0.0);
        const double u2 = static_cast<double>(uniform());
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * 3.14159265358979323846 * u2;
        spare_ = static_cast<float>(r * std::sin(a));
        have_spare_ = true;
        return mean + sd * static_cast<float>(r * std::cos(a));
    }

    // Index sampled from unnormalized nonnegative weights.
    int categorical(std::span<const float> weights) {
        if (weights.empty()) throw std::invalid_argument("Rng::categorical: empty weights");
        double total = 0.0;
        for (float w : weights) total += static_cast<double>(w);
        if (!(total > 0.0)) throw std::invalid_argument("Rng::categorical: weights sum to zero");
        const double x = static_cast<double>(uniform()) * total;
        double cum = 0.0;
        for (std::size_t i = 0; i < weights.size(); ++i) {
            cum += static_cast<double>(weights[i]);
            if (x < cum) return static_cast<int>(i);
        }
        return static_cast<int>(weights.size()) - 1;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
            const int j = uniform_int(i + 1);
            std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)]);
        }
    }

    // Independent stream for a sub-task; stable under the parent's draw order.
    Rng derive(std::uint64_t stream) const {
        return Rng(mix64(seed_ + 0x9e3779b97f4a7c15ULL * (stream + 1)));
    }

    std::uint64_t seed() const { return seed_; }

private:
    static std::uint64_t mix64(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    static std::uint32_t mix(std::uint64_t seed) {
        const std::uint64_t m = mix64(seed);
        return static_cast<std::uint32_t>(m ^ (m >> 32));
    }

    std::uint64_t seed_ = 0;
    std::mt19937 gen_;
    bool have_spare_ = false;
    float spare_ = 0.0f;
};

}  // namespace nf
