#pragma once

// Shared basics: slotted time, error types, deterministic RNG, parallel helper.

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <random>
#include <stdexcept>

namespace schedlab {

using slot_t = std::int64_t; // time measured in whole scheduling slots

// A caller violated an operation contract (illegal action, bad scheduler
// decision, mismatched checkpoint header, ...).
struct ContractError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed external input: task set files, tables, config files.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Random generation could not satisfy the requested constraints.
struct GenerationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Stable derivation of independent seed substreams from a master seed.
inline std::uint64_t derive_seed(std::uint64_t base,
                                 std::initializer_list<std::uint64_t> path) {
    std::uint64_t s = splitmix64(base ^ 0x5851f42d4c957f2dULL);
    for (auto p : path) s = splitmix64(s ^ (p + 0x9e3779b97f4a7c15ULL));
    return s;
}

// Deterministic RNG. Wraps mt19937_64 (whose sequence is pinned by the
// standard) and avoids std distributions, whose output is
// implementation-defined.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // Unbiased integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw ContractError("Rng::below: n must be positive");
        const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % n;
    }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform01() { return double(next_u64() >> 11) * 0x1.0p-53; }

    // Inclusive integer range.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        if (lo > hi) throw ContractError("Rng::uniform_int: empty range");
        return lo + std::int64_t(below(std::uint64_t(hi - lo) + 1));
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Number of failures before the first success, P(success) = rho.
    std::int64_t geometric(double rho) {
        if (rho <= 0.0 || rho > 1.0)
            throw ContractError("Rng::geometric: rho must be in (0,1]");
        if (rho == 1.0) return 0;
        double u = uniform01();
        return std::int64_t(std::log1p(-u) / std::log1p(-rho));
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(i)]);
    }

  private:
    std::mt19937_64 eng_;
};

// Runs body(0..n-1) on up to `threads` workers. threads <= 1 runs inline.
// Work items must be independent; output slots should be preallocated by
// index so results are order-independent.
void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t)>& body);

} // namespace schedlab
