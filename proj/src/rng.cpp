#include "qet/rng.hpp"

#include <bit>
#include <random>

namespace qet {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed) : seed_(seed) {
    std::uint64_t x = seed;
    for (auto &word : s_) {
        x += 0x9e3779b97f4a7c15ULL;
        word = splitmix64(x);
    }
}

Rng::result_type Rng::operator()() {
    const std::uint64_t result = std::rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = std::rotl(s_[3], 45);
    return result;
}

double Rng::uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

double Rng::normal() {
    std::normal_distribution<double> dist(0.0, 1.0);
    return dist(*this);
}

Rng Rng::child(std::uint64_t index) const {
    return Rng(splitmix64(seed_) ^ splitmix64(index + 0x9e3779b97f4a7c15ULL));
}

}  // namespace qet
