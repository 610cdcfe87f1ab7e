#include "subseq/level.hpp"

#include <algorithm>
#include <stdexcept>

namespace subseq {

LevelParams LevelParams::alphabet_aware(unsigned k, std::size_t sigma, std::size_t n) {
    const unsigned cap = std::max(1u, ceil_log(std::max<std::size_t>(sigma, 1), k));
    return {k, cap, n};
}

unsigned ceil_log(std::uint64_t value, unsigned k) {
    unsigned x = 0;
    std::uint64_t power = 1;
    while (power < value) {
        power *= k;
        ++x;
    }
    return x;
}

unsigned level(std::size_t i, const LevelParams& p) {
    if (i == 0) throw std::invalid_argument("level is undefined for state 0");
    unsigned x = 0;
    while (i % p.k == 0 && (!p.cap || x < *p.cap)) {
        i /= p.k;
        ++x;
    }
    return x;
}

std::optional<std::size_t> level_step(std::size_t s, const LevelParams& p) {
    const unsigned l = level(s, p);
    if (p.cap && l >= *p.cap) return std::nullopt;
    // Below the cap, level(x) > l exactly when k^(l+1) divides x.
    std::size_t block = 1;
    for (unsigned i = 0; i <= l; ++i) block *= p.k;
    return (s / block + 1) * block - s;
}

std::optional<std::size_t> bar(std::size_t s, const LevelParams& p) {
    const auto step = level_step(s, p);
    if (!step || s + *step > p.n) return std::nullopt;
    return s + *step;
}

}  // namespace subseq
