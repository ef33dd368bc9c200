#pragma once

#include "hachow/field.hpp"

#include <random>

namespace testing_support {

inline hachow::FieldElement random_element(std::mt19937_64& rng, long span = 9, long den_span = 4) {
    std::uniform_int_distribution<long> num(-span, span);
    std::uniform_int_distribution<long> den(1, den_span);
    return hachow::FieldElement(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
}

inline hachow::FieldElement random_nonzero(std::mt19937_64& rng, long span = 9, long den_span = 4) {
    for (;;) {
        hachow::FieldElement x = random_element(rng, span, den_span);
        if (!x.is_zero()) return x;
    }
}

// Nonzero and different from 1.
inline hachow::FieldElement random_generic(std::mt19937_64& rng, long span = 9, long den_span = 4) {
    for (;;) {
        hachow::FieldElement x = random_element(rng, span, den_span);
        if (!x.is_zero() && !x.is_one()) return x;
    }
}

}  // namespace testing_support
