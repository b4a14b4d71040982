#pragma once

#include <cstdint>
#include <random>

namespace skewspec {

// splitmix64; used to derive well-separated stream seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d4a2ca9409a8ffULL;
    return z ^ (z >> 31);
}

// Counter-seeded stream RNG: stream k of seed s is mt19937_64 seeded with the
// (k+1)-th splitmix64 output of s. Gaussians via Box-Muller on explicit
// 53-bit uniforms, so draws are reproducible for a given (seed, stream)
// independent of the standard library.
class StreamRng {
  public:
    explicit StreamRng(std::uint64_t seed, std::uint64_t stream = 0) {
        std::uint64_t s = seed;
        std::uint64_t derived = 0;
        for (std::uint64_t i = 0; i <= stream; ++i) derived = splitmix64(s);
        gen_.seed(derived);
    }

    double uniform01() {  // in (0,1)
        return (double(gen_() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
    }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u = uniform01(), v = uniform01();
        double r = std::sqrt(-2.0 * std::log(u));
        double a = 6.28318530717958647692 * v;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    std::uint64_t raw() { return gen_(); }

  private:
    std::mt19937_64 gen_;
    double spare_ = 0;
    bool have_spare_ = false;
};

}  // namespace skewspec
