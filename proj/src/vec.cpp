#include "maxvec/vec.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "maxvec/errors.hpp"

namespace maxvec {

namespace {

void require_same_dim(const Vec& a, const Vec& b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("vector dimensions differ: " + std::to_string(a.dim()) +
                             " vs " + std::to_string(b.dim()));
    }
}

}  // namespace

bool Vec::strictly_positive() const {
    for (const Rational& c : coords_) {
        if (!c.is_positive()) return false;
    }
    return true;
}

Vec operator+(const Vec& a, const Vec& b) {
    require_same_dim(a, b);
    std::vector<Rational> out;
    out.reserve(a.dim());
    for (std::size_t j = 0; j < a.dim(); ++j) out.push_back(a[j] + b[j]);
    return Vec(std::move(out));
}

Vec operator-(const Vec& a, const Vec& b) {
    require_same_dim(a, b);
    std::vector<Rational> out;
    out.reserve(a.dim());
    for (std::size_t j = 0; j < a.dim(); ++j) out.push_back(a[j] - b[j]);
    return Vec(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const Vec& v) {
    os << '(';
    for (std::size_t j = 0; j < v.dim(); ++j) {
        if (j != 0) os << ',';
        os << v[j];
    }
    return os << ')';
}

DominanceRelation mirror(DominanceRelation r) {
    switch (r) {
        case DominanceRelation::StronglyDominates: return DominanceRelation::IsStronglyDominated;
        case DominanceRelation::DominatesNotStrongly: return DominanceRelation::IsDominatedNotStrongly;
        case DominanceRelation::IsStronglyDominated: return DominanceRelation::StronglyDominates;
        case DominanceRelation::IsDominatedNotStrongly: return DominanceRelation::DominatesNotStrongly;
        default: return r;
    }
}

std::string to_string(DominanceRelation r) {
    switch (r) {
        case DominanceRelation::Equal: return "equal";
        case DominanceRelation::StronglyDominates: return "strongly-dominates";
        case DominanceRelation::DominatesNotStrongly: return "dominates-not-strongly";
        case DominanceRelation::IsStronglyDominated: return "is-strongly-dominated";
        case DominanceRelation::IsDominatedNotStrongly: return "is-dominated-not-strongly";
        case DominanceRelation::Incomparable: return "incomparable";
    }
    return "?";
}

DominanceRelation compare(const Vec& x, const Vec& y) {
    require_same_dim(x, y);
    bool any_lt = false, any_gt = false, any_eq = false;
    for (std::size_t j = 0; j < x.dim(); ++j) {
        if (x[j] < y[j]) {
            any_lt = true;
        } else if (x[j] > y[j]) {
            any_gt = true;
        } else {
            any_eq = true;
        }
        if (any_lt && any_gt) return DominanceRelation::Incomparable;
    }
    if (!any_lt && !any_gt) return DominanceRelation::Equal;
    if (any_gt) {
        return any_eq ? DominanceRelation::DominatesNotStrongly
                      : DominanceRelation::StronglyDominates;
    }
    return any_eq ? DominanceRelation::IsDominatedNotStrongly
                  : DominanceRelation::IsStronglyDominated;
}

bool weakly_dominates(const Vec& x, const Vec& y) {
    require_same_dim(x, y);
    for (std::size_t j = 0; j < x.dim(); ++j) {
        if (x[j] < y[j]) return false;
    }
    return true;
}

bool dominates(const Vec& x, const Vec& y) {
    return weakly_dominates(x, y) && x != y;
}

bool strongly_dominates(const Vec& x, const Vec& y) {
    require_same_dim(x, y);
    for (std::size_t j = 0; j < x.dim(); ++j) {
        if (x[j] <= y[j]) return false;
    }
    return true;
}

bool incomparable(const Vec& x, const Vec& y) {
    return compare(x, y) == DominanceRelation::Incomparable;
}

bool lex_less(const Vec& a, const Vec& b) {
    const std::size_t n = std::min(a.dim(), b.dim());
    for (std::size_t j = 0; j < n; ++j) {
        if (a[j] < b[j]) return true;
        if (a[j] > b[j]) return false;
    }
    return a.dim() < b.dim();
}

std::size_t uniform_dimension(const VectorSet& s) {
    if (s.empty()) return 0;
    const std::size_t k = s.front().dim();
    for (const Vec& v : s) {
        if (v.dim() != k) {
            throw DimensionError("set members have mixed dimensions");
        }
    }
    return k;
}

VectorSet sorted_lex(VectorSet s) {
    std::sort(s.begin(), s.end(), lex_less);
    return s;
}

VectorSet distinct_sorted(VectorSet s) {
    std::sort(s.begin(), s.end(), lex_less);
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

bool set_equal(const VectorSet& a, const VectorSet& b) {
    if (a.size() != b.size()) return false;
    return sorted_lex(a) == sorted_lex(b);
}

bool sorted_contains(const VectorSet& sorted_set, const Vec& v) {
    return std::binary_search(sorted_set.begin(), sorted_set.end(), v, lex_less);
}

}  // namespace maxvec
