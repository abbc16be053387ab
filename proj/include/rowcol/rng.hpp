#ifndef ROWCOL_RNG_HPP
#define ROWCOL_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace rowcol {

/// Seeded generator with explicit uniform->normal conversion so streams are
/// reproducible for a fixed seed. Independent streams via stream(seed, index).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    static Rng stream(std::uint64_t seed, std::uint64_t index) {
        // splitmix64 on (seed, index) so per-task streams do not overlap
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        z = z ^ (z >> 31);
        return Rng(z);
    }

    std::uint64_t next_u64() { return eng_(); }

    /// uniform in [0, 1)
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    /// uniform in (0, 1]
    double uniform01_pos() { return (static_cast<double>(eng_() >> 11) + 1.0) * 0x1.0p-53; }

    /// standard real normal, Box-Muller
    double normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        const double u1 = uniform01_pos();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        cached_ = r * std::sin(a);
        have_cached_ = true;
        return r * std::cos(a);
    }

    /// complex standard normal CN(0,1): E|z|^2 = 1
    std::complex<double> cnormal() {
        const double s = 0.70710678118654752440084436210485;
        const double re = normal() * s;
        const double im = normal() * s;
        return {re, im};
    }

    /// integer in [0, n)
    std::uint64_t below(std::uint64_t n) {
        return n == 0 ? 0 : eng_() % n;
    }

private:
    std::mt19937_64 eng_;
    double cached_ = 0.0;
    bool have_cached_ = false;
};

} // namespace rowcol

#endif
