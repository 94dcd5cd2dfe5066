/**
 * @file vec.hpp
 * @brief k-dimensional exact-rational vectors and dominance relations.
 */

#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "maxvec/rational.hpp"

namespace maxvec {

/**
 * @brief A k-dimensional vector of exact rationals (a valuation, bid,
 *        payment or utility).
 */
class Vec {
public:
    Vec() = default;
    explicit Vec(std::vector<Rational> coords) : coords_(std::move(coords)) {}
    Vec(std::initializer_list<Rational> coords) : coords_(coords) {}

    /// The zero vector of dimension k.
    static Vec zero(std::size_t k) { return Vec(std::vector<Rational>(k)); }

    std::size_t dim() const { return coords_.size(); }
    const Rational& operator[](std::size_t j) const { return coords_[j]; }
    Rational& operator[](std::size_t j) { return coords_[j]; }
    const std::vector<Rational>& coords() const { return coords_; }

    /// True iff every coordinate is strictly positive.
    bool strictly_positive() const;

    /// Componentwise sum; throws DimensionError on mismatch.
    friend Vec operator+(const Vec& a, const Vec& b);
    /// Componentwise difference; throws DimensionError on mismatch.
    friend Vec operator-(const Vec& a, const Vec& b);

    friend bool operator==(const Vec& a, const Vec& b) { return a.coords_ == b.coords_; }
    friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Vec& v);

private:
    std::vector<Rational> coords_;
};

/**
 * @brief The outcome of comparing two vectors of equal dimension.
 *
 * compare(x, y) and compare(y, x) are mirror images, and exactly one value
 * holds for any pair.
 */
enum class DominanceRelation {
    Equal,
    StronglyDominates,       ///< x > y in every coordinate
    DominatesNotStrongly,    ///< x >= y everywhere, x != y, with at least one tie
    IsStronglyDominated,     ///< mirror of StronglyDominates
    IsDominatedNotStrongly,  ///< mirror of DominatesNotStrongly
    Incomparable,            ///< each vector is strictly larger somewhere
};

/// The relation seen from the other vector's side.
DominanceRelation mirror(DominanceRelation r);

/// Human-readable name of a relation.
std::string to_string(DominanceRelation r);

/// Classifies x against y. Throws DimensionError on dimension mismatch.
DominanceRelation compare(const Vec& x, const Vec& y);

/// x >= y in every coordinate.
bool weakly_dominates(const Vec& x, const Vec& y);
/// x >= y in every coordinate and x != y.
bool dominates(const Vec& x, const Vec& y);
/// x > y in every coordinate.
bool strongly_dominates(const Vec& x, const Vec& y);
/// Each of x, y is strictly larger than the other in some coordinate.
bool incomparable(const Vec& x, const Vec& y);

/// Lexicographic order on coordinates; used for canonical set orderings.
bool lex_less(const Vec& a, const Vec& b);

/// A finite multiset of vectors sharing one dimension.
using VectorSet = std::vector<Vec>;

/**
 * @brief The common dimension of a set's members.
 *
 * Returns 0 for an empty set; throws DimensionError if members disagree.
 */
std::size_t uniform_dimension(const VectorSet& s);

/// A lexicographically sorted copy of the set.
VectorSet sorted_lex(VectorSet s);

/// A sorted copy with exact duplicates collapsed.
VectorSet distinct_sorted(VectorSet s);

/// Multiset equality, ignoring member order.
bool set_equal(const VectorSet& a, const VectorSet& b);

/// True iff the sorted, deduplicated set contains v (binary search).
bool sorted_contains(const VectorSet& sorted_set, const Vec& v);

}  // namespace maxvec
