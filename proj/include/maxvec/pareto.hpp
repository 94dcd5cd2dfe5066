/**
 * @file pareto.hpp
 * @brief MAX / MIN / WMAX set operators over vector multisets.
 *
 * max_set is the direct pairwise definition and doubles as the oracle for
 * max_set_fast, which dispatches on dimension: a sort-and-sweep for k = 2,
 * a sorted staircase for k = 3, and divide-and-conquer on the first
 * coordinate for k >= 4. Both retain duplicates of undominated vectors;
 * deduplication is a mechanism-layer concern.
 */

#pragma once

#include "maxvec/vec.hpp"

namespace maxvec {

/**
 * @brief Members of s not dominated by any other member, in input order.
 *
 * Direct O(n^2 k) pairwise scan; the reference implementation.
 */
VectorSet max_set(const VectorSet& s);

/**
 * @brief Same members as max_set(s), computed with the fast paths.
 *
 * Output order is the input order (the operator acts as a filter).
 */
VectorSet max_set_fast(const VectorSet& s);

/// Members of s that dominate no other member, in input order.
VectorSet min_set(const VectorSet& s);

/// Members of s not strongly dominated by any member, in input order.
VectorSet wmax_set(const VectorSet& s);

}  // namespace maxvec
