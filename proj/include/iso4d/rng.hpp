#pragma once
#include <cstdint>
#include <random>

#include "poly.hpp"

namespace iso4d {

// Deterministic random rationals for identity testing: numerators are small
// nonzero integers, denominators come from a fixed prime list so that sample
// arithmetic stays cheap and reproducible across platforms.
class RatSampler {
public:
    explicit RatSampler(uint64_t seed) : rng_(seed) {}

    Rat next() {
        static const int dens[] = {1, 2, 3, 5, 7};
        int num = 0;
        while (num == 0) num = static_cast<int>(rng_() % 41) - 20;
        int den = dens[rng_() % 5];
        Rat r(num, den);
        r.canonicalize();
        return r;
    }

    // Nonzero rational distinct from every entry of `avoid`.
    template <class Container>
    Rat next_avoiding(const Container& avoid) {
        for (int tries = 0; tries < 1000; ++tries) {
            Rat r = next();
            bool ok = true;
            for (const auto& a : avoid)
                if (r == a) ok = false;
            if (ok) return r;
        }
        throw iso4d_error("RatSampler: could not avoid exclusion set");
    }

    uint64_t raw() { return rng_(); }

private:
    std::mt19937_64 rng_;
};

}  // namespace iso4d
