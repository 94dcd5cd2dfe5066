#include "maxvec/pareto.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

namespace maxvec {

namespace {

VectorSet apply_keep_mask(const VectorSet& s, const std::vector<char>& keep) {
    VectorSet out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (keep[i]) out.push_back(s[i]);
    }
    return out;
}

// ---- k = 1 -----------------------------------------------------------

std::vector<char> maxima_mask_1d(const VectorSet& s) {
    Rational best = s.front()[0];
    for (const Vec& v : s) best = std::max(best, v[0]);
    std::vector<char> keep(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) keep[i] = s[i][0] == best;
    return keep;
}

// ---- k = 2: sort by (x desc, y desc) and sweep ------------------------

// Shared sweep over entries sorted by (x desc, y desc). Entry exposes
// x(), y() (totally ordered) and idx.
template <typename Entry>
void sweep_sorted_2d(const std::vector<Entry>& entries, std::vector<char>& keep) {
    const Entry* best = nullptr;  // max y over strictly larger first coordinates
    std::size_t i = 0;
    while (i < entries.size()) {
        // One group of equal first coordinate; its head has the largest y.
        std::size_t group_end = i;
        while (group_end < entries.size() && entries[group_end].x() == entries[i].x()) {
            ++group_end;
        }
        const auto& head_y = entries[i].y();
        const bool head_kept = best == nullptr || head_y > best->y();
        for (std::size_t g = i; g < group_end; ++g) {
            keep[entries[g].idx] = head_kept && entries[g].y() == head_y;
        }
        if (head_kept) best = &entries[i];
        i = group_end;
    }
}

std::vector<char> maxima_mask_2d(const VectorSet& s) {
    std::vector<char> keep(s.size(), false);

    // Exact integer fast path: machine-word keys sort with far better
    // locality than GMP values, and comparing them is still exact.
    bool all_machine_ints = true;
    for (const Vec& v : s) {
        if (!v[0].is_machine_int() || !v[1].is_machine_int()) {
            all_machine_ints = false;
            break;
        }
    }
    if (all_machine_ints) {
        struct IntEntry {
            long xv, yv;
            std::uint32_t idx;
            long x() const { return xv; }
            long y() const { return yv; }
        };
        std::vector<IntEntry> entries;
        entries.reserve(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            entries.push_back({s[i][0].machine_int(), s[i][1].machine_int(),
                               static_cast<std::uint32_t>(i)});
        }
        std::sort(entries.begin(), entries.end(), [](const IntEntry& a, const IntEntry& b) {
            if (a.xv != b.xv) return a.xv > b.xv;
            return a.yv > b.yv;
        });
        sweep_sorted_2d(entries, keep);
        return keep;
    }

    struct RefEntry {
        const Rational* xp;
        const Rational* yp;
        std::size_t idx;
        const Rational& x() const { return *xp; }
        const Rational& y() const { return *yp; }
    };
    std::vector<RefEntry> entries;
    entries.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        entries.push_back({&s[i][0], &s[i][1], i});
    }
    std::sort(entries.begin(), entries.end(), [](const RefEntry& a, const RefEntry& b) {
        if (*a.xp != *b.xp) return *a.xp > *b.xp;
        return *a.yp > *b.yp;
    });
    sweep_sorted_2d(entries, keep);
    return keep;
}

// ---- k = 3: sweep over x with a 2D staircase of (y, z) maxima ----------

class Staircase2D {
public:
    // True iff some stored (y', z') has y' >= y and z' >= z.
    bool weakly_dominated(const Rational& y, const Rational& z) const {
        auto it = points_.lower_bound(y);
        return it != points_.end() && it->second >= z;
    }

    void insert(const Rational& y, const Rational& z) {
        if (weakly_dominated(y, z)) return;
        // Drop entries made redundant by (y, z); they sit immediately at
        // or left of y, since z-values grow towards smaller y.
        auto it = points_.upper_bound(y);
        while (it != points_.begin()) {
            auto prev = std::prev(it);
            if (prev->second > z) break;
            it = points_.erase(prev);
        }
        points_.emplace(y, z);
    }

private:
    std::map<Rational, Rational> points_;  // y -> z, z strictly decreasing in y
};

std::vector<char> maxima_mask_3d(const VectorSet& s) {
    std::vector<std::size_t> order(s.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (s[a][0] != s[b][0]) return s[a][0] > s[b][0];
        if (s[a][1] != s[b][1]) return s[a][1] > s[b][1];
        return s[a][2] > s[b][2];
    });

    std::vector<char> keep(s.size(), false);
    Staircase2D seen;
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t group_end = i;
        const Rational& x = s[order[i]][0];
        while (group_end < order.size() && s[order[group_end]][0] == x) ++group_end;

        // Within an equal-x group, dominance reduces to 2D dominance on
        // (y, z); resolve it with the same sweep before consulting the
        // staircase of strictly larger x.
        bool have_best = false;
        Rational best_z;
        std::size_t g = i;
        while (g < group_end) {
            std::size_t sub_end = g;
            const Rational& y = s[order[g]][1];
            while (sub_end < group_end && s[order[sub_end]][1] == y) ++sub_end;

            const Rational& head_z = s[order[g]][2];
            const bool in_group_max = !have_best || head_z > best_z;
            if (in_group_max && !seen.weakly_dominated(y, head_z)) {
                for (std::size_t q = g; q < sub_end; ++q) {
                    keep[order[q]] = s[order[q]][2] == head_z;
                }
            }
            if (!have_best || head_z > best_z) {
                best_z = head_z;
                have_best = true;
            }
            g = sub_end;
        }
        for (std::size_t q = i; q < group_end; ++q) {
            if (keep[order[q]]) seen.insert(s[order[q]][1], s[order[q]][2]);
        }
        i = group_end;
    }
    return keep;
}

// ---- general k: divide and conquer on the first remaining coordinate ---

constexpr std::size_t kNaiveCutoff = 32;

// Weak dominance restricted to coordinates d..k-1.
bool suffix_weakly_dominates(const Vec& a, const Vec& b, std::size_t d) {
    for (std::size_t j = d; j < a.dim(); ++j) {
        if (a[j] < b[j]) return false;
    }
    return true;
}

bool suffix_equal(const Vec& a, const Vec& b, std::size_t d) {
    for (std::size_t j = d; j < a.dim(); ++j) {
        if (a[j] != b[j]) return false;
    }
    return true;
}

std::vector<std::size_t> maxima_indices_naive(const VectorSet& s,
                                              std::vector<std::size_t> idx,
                                              std::size_t d) {
    std::vector<std::size_t> out;
    for (std::size_t i : idx) {
        bool dominated = false;
        for (std::size_t j : idx) {
            if (j == i) continue;
            if (suffix_weakly_dominates(s[j], s[i], d) && !suffix_equal(s[j], s[i], d)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(i);
    }
    return out;
}

std::vector<std::size_t> maxima_indices_dc(const VectorSet& s,
                                           std::vector<std::size_t> idx,
                                           std::size_t d) {
    const std::size_t k = s.front().dim();
    if (idx.empty()) return idx;
    if (d + 1 == k) {
        Rational best = s[idx.front()][d];
        for (std::size_t i : idx) best = std::max(best, s[i][d]);
        std::vector<std::size_t> out;
        for (std::size_t i : idx) {
            if (s[i][d] == best) out.push_back(i);
        }
        return out;
    }
    if (idx.size() <= kNaiveCutoff) {
        return maxima_indices_naive(s, std::move(idx), d);
    }

    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return s[a][d] > s[b][d]; });
    const Rational& max_val = s[idx.front()][d];
    const Rational& min_val = s[idx.back()][d];
    if (max_val == min_val) {
        // Every first coordinate ties; dominance lives in the suffix.
        return maxima_indices_dc(s, std::move(idx), d + 1);
    }

    // Split so that every high-side value strictly exceeds every low-side
    // value, keeping equal values together.
    const Rational& pivot = s[idx[idx.size() / 2]][d];
    const Rational split = (pivot == max_val) ? max_val : pivot;
    std::vector<std::size_t> high, low;
    for (std::size_t i : idx) {
        if (split == max_val ? s[i][d] == max_val : s[i][d] > split) {
            high.push_back(i);
        } else {
            low.push_back(i);
        }
    }

    std::vector<std::size_t> max_high = maxima_indices_dc(s, std::move(high), d);
    std::vector<std::size_t> max_low = maxima_indices_dc(s, std::move(low), d);

    // A low-side survivor is dominated exactly when some high-side maximum
    // weakly dominates its suffix past d (the first coordinate is already
    // strictly larger).
    std::vector<std::size_t> out = max_high;
    for (std::size_t l : max_low) {
        bool dominated = false;
        for (std::size_t h : max_high) {
            if (suffix_weakly_dominates(s[h], s[l], d + 1)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(l);
    }
    return out;
}

std::vector<char> maxima_mask_general(const VectorSet& s) {
    std::vector<std::size_t> idx(s.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<std::size_t> kept = maxima_indices_dc(s, std::move(idx), 0);
    std::vector<char> keep(s.size(), false);
    for (std::size_t i : kept) keep[i] = true;
    return keep;
}

}  // namespace

VectorSet max_set(const VectorSet& s) {
    uniform_dimension(s);
    std::vector<char> keep(s.size(), true);
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = 0; j < s.size(); ++j) {
            if (j != i && dominates(s[j], s[i])) {
                keep[i] = false;
                break;
            }
        }
    }
    return apply_keep_mask(s, keep);
}

VectorSet max_set_fast(const VectorSet& s) {
    const std::size_t k = uniform_dimension(s);
    if (s.empty()) return {};
    std::vector<char> keep;
    switch (k) {
        case 1: keep = maxima_mask_1d(s); break;
        case 2: keep = maxima_mask_2d(s); break;
        case 3: keep = maxima_mask_3d(s); break;
        default: keep = maxima_mask_general(s); break;
    }
    return apply_keep_mask(s, keep);
}

VectorSet min_set(const VectorSet& s) {
    uniform_dimension(s);
    std::vector<char> keep(s.size(), true);
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = 0; j < s.size(); ++j) {
            if (j != i && dominates(s[i], s[j])) {
                keep[i] = false;
                break;
            }
        }
    }
    return apply_keep_mask(s, keep);
}

VectorSet wmax_set(const VectorSet& s) {
    uniform_dimension(s);
    std::vector<char> keep(s.size(), true);
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = 0; j < s.size(); ++j) {
            if (j != i && strongly_dominates(s[j], s[i])) {
                keep[i] = false;
                break;
            }
        }
    }
    return apply_keep_mask(s, keep);
}

}  // namespace maxvec
