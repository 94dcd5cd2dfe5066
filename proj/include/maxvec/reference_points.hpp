/**
 * @file reference_points.hpp
 * @brief Reference points (local upper bounds) of a vector set.
 *
 * The reference points T(S) are the minimal grid points not strongly
 * dominated by any member of S: a new strictly positive vector v becomes
 * maximal when added to S exactly when v strongly dominates some point of
 * T(S). Three routes compute the same set and cross-check each other:
 *
 *  - reference_points:            prune-and-enumerate over the coordinate
 *                                 grid, then keep the minimal survivors;
 *  - reference_points_2d:         the staircase construction, k = 2 only;
 *  - reference_points_vmax_oracle: enumeration of per-maximum coordinate
 *                                 selections (exponential; test oracle).
 */

#pragma once

#include <cstddef>

#include "maxvec/vec.hpp"

namespace maxvec {

/// Per-dimension sorted value lists: 0 together with every coordinate
/// value occurring in the source set, duplicate-free.
struct GridDomain {
    std::vector<std::vector<Rational>> dims;

    static GridDomain from_set(const VectorSet& s);

    std::size_t dimension_count() const { return dims.size(); }
    const std::vector<Rational>& dim_values(std::size_t j) const { return dims[j]; }
};

/// The reference points of a set, in canonical lexicographic order, plus
/// the distinct maxima they were derived from.
struct ReferencePointSet {
    VectorSet points;
    VectorSet source_set_max;
};

inline constexpr std::size_t kDefaultGridBudget = 2'000'000;
inline constexpr std::size_t kDefaultTupleBudget = 1'000'000;

/**
 * @brief Reference points via the grid characterization.
 *
 * Filters candidates against the maxima of s only (equivalent to filtering
 * against all of s) and enumerates the grid dimension by dimension,
 * visiting only values of still-uncovered maxima; every minimal survivor
 * is reachable that way. Throws EmptySetError on empty input and
 * BudgetError when the enumeration exceeds `budget` nodes.
 */
ReferencePointSet reference_points(const VectorSet& s,
                                   std::size_t budget = kDefaultGridBudget);

/**
 * @brief Staircase construction for k = 2.
 *
 * With the distinct maxima sorted by first coordinate, the reference
 * points are the corner points below and between consecutive maxima plus
 * the two axis points. Throws DimensionError unless k = 2.
 */
ReferencePointSet reference_points_2d(const VectorSet& s);

/**
 * @brief Enumeration oracle: for every assignment of one coordinate index
 *        per maximum, take the coordinatewise maximum of the selected
 *        axis projections, then keep the minimal results.
 *
 * Requires k^|MAX(s)| <= budget, else throws BudgetError.
 */
ReferencePointSet reference_points_vmax_oracle(const VectorSet& s,
                                               std::size_t budget = kDefaultTupleBudget);

/**
 * @brief Membership test: would v be maximal if added to the source set?
 *
 * True iff v strongly dominates some reference point. Meaningful for
 * strictly positive v not already maximal in the source set.
 */
bool is_maximal_if_added(const Vec& v, const ReferencePointSet& t);

/**
 * @brief Largest grid value strictly below `a` in dimension `dim_index`.
 *
 * The grid for a dimension is 0 plus the coordinate values of s, so the
 * result exists for every a > 0. Throws DomainError for a <= 0.
 */
Rational grid_value_below(const VectorSet& s, std::size_t dim_index, const Rational& a);

/// Coordinatewise maximum of a nonempty set.
Vec coordinatewise_max(const VectorSet& s);

}  // namespace maxvec
