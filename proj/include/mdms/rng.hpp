#pragma once

#include <cstdint>

namespace mdms {

/**
 * RngStream — splittable counter-based 64-bit generator.
 *
 * A stream is identified by (seed, stream_id). The generator is a Weyl
 * sequence with a per-stream odd increment, pushed through the splitmix64
 * finalizer. Distinct stream ids get distinct increments, so (run, agent)
 * streams are statistically independent without any coordination, and the
 * same (seed, stream_id) reproduces the exact same bit sequence on every
 * platform and every run.
 *
 * Deliberately not backed by std::mt19937 / std::*_distribution: the
 * standard distributions are implementation-defined, which would break
 * byte-identical Monte-Carlo reproduction across toolchains. All
 * distribution transforms live in processes.hpp and use only arithmetic
 * and libm.
 *
 * Value semantics: one stream is owned by exactly one agent or run at a
 * time. Copying forks the sequence (both copies continue identically).
 */
class RngStream {
public:
    RngStream() : RngStream(0, 0) {}

    RngStream(std::uint64_t seed, std::uint64_t stream_id)
        : state_(mix64(seed ^ mix64(stream_id + 0x9E3779B97F4A7C15ULL))),
          increment_(make_increment(stream_id, seed)),
          seed_(seed),
          stream_id_(stream_id) {}

    /// Next 64 random bits.
    std::uint64_t next_u64() {
        state_ += increment_;
        return mix64(state_);
    }

    /// Uniform double in [0, 1), 53-bit resolution.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in (0, 1); rejects the exact-zero draw.
    double next_double_open() {
        double u;
        do {
            u = next_double();
        } while (u == 0.0);
        return u;
    }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

private:
    // splitmix64 finalizer (Vigna).
    static constexpr std::uint64_t mix64(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ULL;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBULL;
        z ^= z >> 31;
        return z;
    }

    // Per-stream Weyl increment: odd, with enough bit transitions that the
    // finalizer mixes well (same fixup as SplittableRandom's mixGamma).
    static constexpr std::uint64_t make_increment(std::uint64_t stream_id,
                                                  std::uint64_t seed) {
        std::uint64_t g = mix64(stream_id * 0xD1342543DE82EF95ULL + seed) | 1ULL;
        int transitions = popcount64(g ^ (g >> 1));
        if (transitions < 24) g ^= 0xAAAAAAAAAAAAAAAAULL;
        return g;
    }

    static constexpr int popcount64(std::uint64_t v) {
        int n = 0;
        while (v != 0) {
            v &= v - 1;
            ++n;
        }
        return n;
    }

    std::uint64_t state_;
    std::uint64_t increment_;
    std::uint64_t seed_;
    std::uint64_t stream_id_;
};

}  // namespace mdms
