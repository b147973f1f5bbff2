#pragma once

#include <array>
#include <cstdint>

namespace swld {

// Philox4x32-10 counter-based generator. A stream is addressed by a 64-bit key
// and three counter words; the fourth counter word is the block index within
// the stream, so (seed, a, b, c) names an independent reproducible stream.
class RngStream {
public:
    RngStream(uint64_t seed, uint32_t a = 0, uint32_t b = 0, uint32_t c = 0);

    uint64_t next_u64();
    // Uniform on [0, 1) with 53 random bits.
    double uniform();
    // Uniform on (0, 1].
    double uniform_pos() { return 1.0 - uniform(); }
    double normal();

private:
    void refill();

    std::array<uint32_t, 2> key_;
    std::array<uint32_t, 4> ctr_;
    std::array<uint32_t, 4> buf_{};
    int pos_ = 4;
};

std::array<uint32_t, 4> philox4x32_10(std::array<uint32_t, 4> ctr, std::array<uint32_t, 2> key);

uint64_t splitmix64(uint64_t x);

// Seed of trial `index` under a master seed.
uint64_t trial_seed(uint64_t master, uint64_t index);

}  // namespace swld
