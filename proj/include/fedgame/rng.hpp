#pragma once

#include <cstdint>
#include <random>

namespace fedgame {

// All randomness in the project flows from one root seed through
// split_seed(): every consumer (client, round, repeat, ...) derives its own
// stream from (root, tag, index) so runs replay bit-exactly and streams stay
// independent of evaluation order.

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t split_seed(std::uint64_t root, std::uint64_t a, std::uint64_t b = 0) {
    return splitmix64(splitmix64(splitmix64(root) ^ a) ^ b);
}

inline std::mt19937_64 make_rng(std::uint64_t root, std::uint64_t a = 0, std::uint64_t b = 0) {
    return std::mt19937_64(split_seed(root, a, b));
}

}  // namespace fedgame
