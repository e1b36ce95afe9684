#pragma once

#include <random>

#include "riordan/rational.hpp"
#include "riordan/series.hpp"

namespace riordan {

// Deterministic sampling for the seeded verification suites.
inline Rational random_rational(std::mt19937_64& rng, long max_num = 20, long max_den = 20) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(std::mt19937_64& rng, long max_num = 20,
                                        long max_den = 20) {
    for (;;) {
        Rational r = random_rational(rng, max_num, max_den);
        if (!r.is_zero()) return r;
    }
}

// Random series with the given constant term.
inline Series random_series(std::mt19937_64& rng, const Rational& head, int order,
                            long max_num = 20, long max_den = 20) {
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    c[0] = head;
    for (int k = 1; k <= order; ++k)
        c[static_cast<std::size_t>(k)] = random_rational(rng, max_num, max_den);
    return Series(std::move(c));
}

}  // namespace riordan
