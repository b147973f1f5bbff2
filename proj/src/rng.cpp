#include "swld/rng.hpp"

#include <cmath>
#include <numbers>

namespace swld {

namespace {
constexpr uint32_t kMul0 = 0xD2511F53u;
constexpr uint32_t kMul1 = 0xCD9E8D57u;
constexpr uint32_t kWeyl0 = 0x9E3779B9u;
constexpr uint32_t kWeyl1 = 0xBB67AE85u;
}  // namespace

std::array<uint32_t, 4> philox4x32_10(std::array<uint32_t, 4> c, std::array<uint32_t, 2> k) {
    for (int round = 0; round < 10; ++round) {
        uint64_t p0 = static_cast<uint64_t>(kMul0) * c[0];
        uint64_t p1 = static_cast<uint64_t>(kMul1) * c[2];
        uint32_t hi0 = static_cast<uint32_t>(p0 >> 32), lo0 = static_cast<uint32_t>(p0);
        uint32_t hi1 = static_cast<uint32_t>(p1 >> 32), lo1 = static_cast<uint32_t>(p1);
        c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
        k[0] += kWeyl0;
        k[1] += kWeyl1;
    }
    return c;
}

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

uint64_t trial_seed(uint64_t master, uint64_t index) {
    return splitmix64(splitmix64(master) ^ (index + 1) * 0x9E3779B97F4A7C15ull);
}

RngStream::RngStream(uint64_t seed, uint32_t a, uint32_t b, uint32_t c)
    : key_{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32)}, ctr_{a, b, c, 0} {}

void RngStream::refill() {
    buf_ = philox4x32_10(ctr_, key_);
    ++ctr_[3];
    pos_ = 0;
}

uint64_t RngStream::next_u64() {
    if (pos_ > 2) refill();
    uint64_t v = (static_cast<uint64_t>(buf_[pos_]) << 32) | buf_[pos_ + 1];
    pos_ += 2;
    return v;
}

double RngStream::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double RngStream::normal() {
    double u1 = uniform_pos();
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace swld
