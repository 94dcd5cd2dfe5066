#include "maxvec/reference_points.hpp"

#include <algorithm>

#include "maxvec/errors.hpp"
#include "maxvec/pareto.hpp"

namespace maxvec {

namespace {

/// Online minima filter: holds the minimal elements of everything
/// inserted so far, collapsing duplicates.
class MinimaAccumulator {
public:
    void insert(const Vec& c) {
        for (const Vec& kept : elems_) {
            if (weakly_dominates(c, kept)) return;
        }
        std::erase_if(elems_, [&](const Vec& kept) { return dominates(kept, c); });
        elems_.push_back(c);
    }

    VectorSet take_sorted() {
        std::sort(elems_.begin(), elems_.end(), lex_less);
        return std::move(elems_);
    }

private:
    VectorSet elems_;
};

VectorSet distinct_maxima(const VectorSet& s) {
    return distinct_sorted(max_set_fast(s));
}

struct GridSearch {
    const VectorSet& maxima;
    std::size_t k;
    std::size_t budget;
    std::size_t nodes = 0;
    std::vector<char> covered;
    std::vector<Rational> prefix;
    MinimaAccumulator out;

    GridSearch(const VectorSet& m, std::size_t dim, std::size_t node_budget)
        : maxima(m), k(dim), budget(node_budget), covered(m.size(), false) {
        prefix.reserve(dim);
    }

    // Enumerates grid vectors not strongly dominated by any maximum. At
    // each level only 0 and the level-coordinates of still-uncovered
    // maxima are tried: any survivor using another value weakly dominates
    // one reachable this way, so no minimal survivor is missed.
    void run(std::size_t level) {
        if (++nodes > budget) {
            throw BudgetError("reference-point grid enumeration exceeded budget of " +
                              std::to_string(budget) + " nodes");
        }
        if (level + 1 == k) {
            Rational last(0);
            for (std::size_t u = 0; u < maxima.size(); ++u) {
                if (!covered[u]) last = std::max(last, maxima[u][level]);
            }
            prefix.push_back(last);
            out.insert(Vec(prefix));
            prefix.pop_back();
            return;
        }

        std::vector<Rational> values;
        values.push_back(Rational(0));
        for (std::size_t u = 0; u < maxima.size(); ++u) {
            if (!covered[u]) values.push_back(maxima[u][level]);
        }
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());

        for (const Rational& v : values) {
            std::vector<std::size_t> newly;
            for (std::size_t u = 0; u < maxima.size(); ++u) {
                if (!covered[u] && maxima[u][level] <= v) {
                    covered[u] = true;
                    newly.push_back(u);
                }
            }
            prefix.push_back(v);
            run(level + 1);
            prefix.pop_back();
            for (std::size_t u : newly) covered[u] = false;
        }
    }
};

}  // namespace

GridDomain GridDomain::from_set(const VectorSet& s) {
    const std::size_t k = uniform_dimension(s);
    GridDomain g;
    g.dims.resize(k);
    for (std::size_t j = 0; j < k; ++j) {
        auto& vals = g.dims[j];
        vals.push_back(Rational(0));
        for (const Vec& v : s) vals.push_back(v[j]);
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    }
    return g;
}

ReferencePointSet reference_points(const VectorSet& s, std::size_t budget) {
    if (s.empty()) {
        throw EmptySetError("reference points of the empty set are not defined");
    }
    const std::size_t k = uniform_dimension(s);
    VectorSet maxima = distinct_maxima(s);

    GridSearch search(maxima, k, budget);
    search.run(0);

    ReferencePointSet result;
    result.points = search.out.take_sorted();
    result.source_set_max = std::move(maxima);
    return result;
}

ReferencePointSet reference_points_2d(const VectorSet& s) {
    if (s.empty()) {
        throw EmptySetError("reference points of the empty set are not defined");
    }
    if (uniform_dimension(s) != 2) {
        throw DimensionError("staircase construction requires dimension 2");
    }
    // Distinct maxima in lex order: first coordinates strictly increase,
    // second coordinates strictly decrease.
    VectorSet maxima = distinct_maxima(s);

    ReferencePointSet result;
    result.points.reserve(maxima.size() + 1);
    result.points.push_back(Vec{Rational(0), maxima.front()[1]});
    for (std::size_t l = 1; l < maxima.size(); ++l) {
        result.points.push_back(Vec{maxima[l - 1][0], maxima[l][1]});
    }
    result.points.push_back(Vec{maxima.back()[0], Rational(0)});
    result.source_set_max = std::move(maxima);
    return result;
}

ReferencePointSet reference_points_vmax_oracle(const VectorSet& s, std::size_t budget) {
    if (s.empty()) {
        throw EmptySetError("reference points of the empty set are not defined");
    }
    const std::size_t k = uniform_dimension(s);
    VectorSet maxima = distinct_maxima(s);
    const std::size_t m = maxima.size();

    std::size_t tuples = 1;
    for (std::size_t i = 0; i < m; ++i) {
        if (tuples > budget / k) {
            throw BudgetError("coordinate-selection enumeration needs more than " +
                              std::to_string(budget) + " tuples");
        }
        tuples *= k;
    }

    MinimaAccumulator out;
    std::vector<std::size_t> selection(m, 0);
    while (true) {
        std::vector<Rational> coords(k, Rational(0));
        for (std::size_t i = 0; i < m; ++i) {
            const std::size_t j = selection[i];
            coords[j] = std::max(coords[j], maxima[i][j]);
        }
        out.insert(Vec(std::move(coords)));

        std::size_t pos = 0;
        while (pos < m && ++selection[pos] == k) {
            selection[pos] = 0;
            ++pos;
        }
        if (pos == m) break;
    }

    ReferencePointSet result;
    result.points = out.take_sorted();
    result.source_set_max = std::move(maxima);
    return result;
}

bool is_maximal_if_added(const Vec& v, const ReferencePointSet& t) {
    for (const Vec& point : t.points) {
        if (strongly_dominates(v, point)) return true;
    }
    return false;
}

Rational grid_value_below(const VectorSet& s, std::size_t dim_index, const Rational& a) {
    if (!a.is_positive()) {
        throw DomainError("grid_value_below requires a strictly positive threshold");
    }
    const std::size_t k = uniform_dimension(s);
    if (dim_index >= k) {
        throw DimensionError("dimension index out of range");
    }
    Rational best(0);  // 0 always belongs to the grid and lies below a
    for (const Vec& v : s) {
        if (v[dim_index] < a && v[dim_index] > best) best = v[dim_index];
    }
    return best;
}

Vec coordinatewise_max(const VectorSet& s) {
    if (s.empty()) {
        throw EmptySetError("coordinatewise maximum of the empty set is not defined");
    }
    uniform_dimension(s);
    Vec out = s.front();
    for (const Vec& v : s) {
        for (std::size_t j = 0; j < out.dim(); ++j) out[j] = std::max(out[j], v[j]);
    }
    return out;
}

}  // namespace maxvec
