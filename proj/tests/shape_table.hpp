#pragma once

// Rank tables for F = Q(i) (r1 = 0, r2 = 1), written out row by row.
// Every (p, n) with 0 <= p <= 5, 0 <= n <= 10 not listed here is "0".

#include <map>
#include <string>
#include <utility>

namespace shape_table {

using Key = std::pair<int, int>;  // (p, n)

inline const std::map<Key, std::string> chow = {
    {{0, 0}, "Q"}, {{1, 1}, "F^x (x) Q"}, {{2, 3}, "Q^1"}, {{3, 5}, "Q^1"}, {{4, 7}, "Q^1"}, {{5, 9}, "Q^1"},
};

inline const std::map<Key, std::string> deligne = {
    {{0, 0}, "R^1"},    {{0, 1}, "R(-1)^1"}, {{1, 1}, "R(0)^1"}, {{2, 1}, "R(1)^1"},
    {{3, 1}, "R(2)^1"}, {{4, 1}, "R(3)^1"},  {{5, 1}, "R(4)^1"},
};

inline const std::map<Key, std::string> arithmetic = {
    {{0, 0}, "CH^0(F)_Q = Q"},
    {{1, 1}, "F^x (x) Q"},
    {{2, 3}, "Q^1"},
    {{3, 5}, "Q^1"},
    {{4, 7}, "Q^1"},
    {{5, 9}, "Q^1"},
    {{1, 0}, "H^1_D(F, R(1))/im(rho_Be)"},
    {{2, 2}, "H^1_D(F, R(2))/im(rho_Be)"},
    {{3, 4}, "H^1_D(F, R(3))/im(rho_Be)"},
    {{4, 6}, "H^1_D(F, R(4))/im(rho_Be)"},
    {{5, 8}, "H^1_D(F, R(5))/im(rho_Be)"},
};

inline const std::map<Key, std::string> arithmetic_tw = {
    {{0, 0}, "Q"},
    {{1, 1}, "extension 0 -> D_TW^0(F, 1) -> * -> F^x (x) Q -> 0"},
    {{2, 3}, "extension 0 -> D_TW^0(F, 2) -> * -> Q^1 -> 0"},
    {{3, 5}, "extension 0 -> D_TW^0(F, 3) -> * -> Q^1 -> 0"},
    {{4, 7}, "extension 0 -> D_TW^0(F, 4) -> * -> Q^1 -> 0"},
    {{5, 9}, "extension 0 -> D_TW^0(F, 5) -> * -> Q^1 -> 0"},
    {{1, 0}, "H^1_D(F, R(1))/im(rho_Be)"},
    {{2, 2}, "H^1_D(F, R(2))/im(rho_Be)"},
    {{3, 4}, "H^1_D(F, R(3))/im(rho_Be)"},
    {{4, 6}, "H^1_D(F, R(4))/im(rho_Be)"},
    {{5, 8}, "H^1_D(F, R(5))/im(rho_Be)"},
};

inline std::string lookup(const std::map<Key, std::string>& t, int p, int n) {
    auto it = t.find({p, n});
    return it == t.end() ? "0" : it->second;
}

}  // namespace shape_table
