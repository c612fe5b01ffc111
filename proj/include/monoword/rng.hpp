#pragma once

// Counter-based random numbers: the i-th draw of stream s under seed k is a
// pure function of (k, s, i), so results never depend on thread scheduling.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>

namespace monoword {

inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream) : key_(splitmix64(seed) ^ splitmix64(~stream)) {}

    std::uint64_t next_u64() { return splitmix64(key_ + splitmix64(counter_++)); }

    // Uniform on the open interval (0, 1).
    double uniform() { return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53; }

    // Two independent standard normals; `u1` in (0, 1) sets the radius so
    // callers can stratify it.
    static std::pair<double, double> box_muller(double u1, double u2)
    {
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * std::numbers::pi * u2;
        return {r * std::cos(a), r * std::sin(a)};
    }

    std::uint64_t counter() const { return counter_; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace monoword
