#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace ghz {

// Counter-based generator (splitmix64, v1). Small state, cheap substream
// derivation by shot index, so parallel shot loops stay order-independent.
class Rng {
  public:
    static constexpr std::string_view kName = "splitmix64";
    static constexpr int kVersion = 1;

    explicit Rng(uint64_t seed) : state_(seed) {}

    static Rng substream(uint64_t seed, uint64_t stream) {
        Rng r(mix(seed) ^ mix(stream + 0x9E3779B97F4A7C15ull));
        return r;
    }

    uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        return mix(state_);
    }

    // Uniform in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Draws an index with the given (not necessarily normalized) weights.
    size_t pick(const std::vector<double>& weights);

  private:
    static uint64_t mix(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    uint64_t state_;
};

}  // namespace ghz
