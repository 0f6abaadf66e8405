#pragma once

#include <cstdint>

namespace bellcheck {

/// SplitMix64 finalizer (Steele, Lea & Flood 2014).
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Key of an independent stream derived from a master seed and a stream id.
constexpr std::uint64_t derive_stream_key(std::uint64_t master_seed, std::uint64_t stream) {
    return mix64(master_seed ^ mix64(stream + 0x9e3779b97f4a7c15ULL));
}

/// SplitMix64 stream with O(1) random access: draw i depends only on the
/// stream key and i, so any partition of the index range across workers
/// reproduces the same values.
class CounterStream {
  public:
    static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

    constexpr explicit CounterStream(std::uint64_t key) : key_(key) {}

    constexpr std::uint64_t bits(std::uint64_t index) const { return mix64(key_ + (index + 1) * kGamma); }

    /// Uniform double in [0, 1) with 53 random bits.
    constexpr double uniform(std::uint64_t index) const {
        return static_cast<double>(bits(index) >> 11) * 0x1.0p-53;
    }

  private:
    std::uint64_t key_;
};

}  // namespace bellcheck
