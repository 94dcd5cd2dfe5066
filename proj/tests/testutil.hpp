// Shared helpers for the test suites: terse vector literals and seeded
// random set generators.

#pragma once

#include <random>
#include <vector>

#include "maxvec/mechanism.hpp"
#include "maxvec/random.hpp"
#include "maxvec/vec.hpp"

namespace testutil {

using maxvec::Instance;
using maxvec::Rational;
using maxvec::Vec;
using maxvec::VectorSet;

/// Builds a vector from integers: V({3, 1}) is (3, 1).
inline Vec V(const std::vector<long>& coords) {
    std::vector<Rational> r(coords.begin(), coords.end());
    return Vec(std::move(r));
}

/// Builds a vector from exact decimal strings: VS({"2.5", "1"}).
inline Vec VS(const std::vector<std::string>& coords) {
    std::vector<Rational> r;
    r.reserve(coords.size());
    for (const auto& c : coords) r.push_back(Rational::from_string(c));
    return Vec(std::move(r));
}

inline VectorSet rows(const std::vector<std::vector<long>>& data) {
    VectorSet out;
    out.reserve(data.size());
    for (const auto& row : data) out.push_back(V(row));
    return out;
}

/// Random set with coordinates drawn from {1/d, 2/d, ..., max_value/d}.
inline VectorSet random_set(std::mt19937_64& rng, std::size_t n, std::size_t k,
                            long max_value, long denominator = 1) {
    VectorSet out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> coords;
        coords.reserve(k);
        for (std::size_t j = 0; j < k; ++j) {
            coords.push_back(Rational(maxvec::uniform_int(rng, 1, max_value), denominator));
        }
        out.push_back(Vec(std::move(coords)));
    }
    return out;
}

/// Random instance whose per-dimension values are all distinct (the DV
/// property holds); bids double as truthful valuations.
inline Instance random_dv_instance(std::mt19937_64& rng, std::size_t n, std::size_t k,
                                   long max_value) {
    Instance instance;
    instance.k = k;
    std::vector<std::vector<long>> columns(k);
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<char> used(static_cast<std::size_t>(max_value) + 1, false);
        for (std::size_t i = 0; i < n; ++i) {
            long v = maxvec::uniform_int(rng, 1, max_value);
            while (used[static_cast<std::size_t>(v)]) {
                v = maxvec::uniform_int(rng, 1, max_value);
            }
            used[static_cast<std::size_t>(v)] = true;
            columns[j].push_back(v);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> coords;
        coords.reserve(k);
        for (std::size_t j = 0; j < k; ++j) coords.push_back(Rational(columns[j][i]));
        instance.bids.push_back(Vec(std::move(coords)));
    }
    instance.valuations = instance.bids;
    return instance;
}

}  // namespace testutil
