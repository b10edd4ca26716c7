#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "hooklab/shapes.hpp"

namespace hooklab {

/// Filling of a skew shape; entries are stored row-major over
/// shape().cells(). Reverse plane partitions allow 0, every other family
/// uses positive entries.
class Tableau {
public:
    Tableau() = default;
    Tableau(SkewShape shape, std::vector<int> entries)
        : shape_(std::move(shape)), entries_(std::move(entries)) {
        if (entries_.size() != static_cast<std::size_t>(shape_.size()))
            throw std::invalid_argument("entry count does not match shape size");
    }

    const SkewShape& shape() const { return shape_; }
    const std::vector<int>& entries() const { return entries_; }

    int entry(Cell u) const {
        auto cs = shape_.cells();
        for (std::size_t i = 0; i < cs.size(); ++i)
            if (cs[i] == u) return entries_[i];
        throw std::invalid_argument("cell outside tableau shape");
    }

    /// |T| = sum of entries
    long weight() const {
        long acc = 0;
        for (int e : entries_) acc += e;
        return acc;
    }

    /// m(T) = maximal entry (0 for the empty tableau)
    int max_entry() const {
        int m = 0;
        for (int e : entries_) m = std::max(m, e);
        return m;
    }

    auto operator<=>(const Tableau&) const = default;

private:
    SkewShape shape_;
    std::vector<int> entries_;
};

/// Shape of T_{<=k} joined with the inner shape. Fails unless the cells with
/// entry <= k form a partition prefix, which every increasing-family tableau
/// satisfies.
inline Partition shape_le(const Tableau& t, int k) {
    const auto& inner = t.shape().inner();
    const auto& outer = t.shape().outer();
    std::vector<int> rows(static_cast<std::size_t>(outer.length()), 0);
    for (int i = 1; i <= outer.length(); ++i) rows[static_cast<std::size_t>(i - 1)] = inner.part(i);
    auto cs = t.shape().cells();
    for (std::size_t idx = 0; idx < cs.size(); ++idx)
        if (t.entries()[idx] <= k) ++rows[static_cast<std::size_t>(cs[idx].row - 1)];
    // the marked cells joined with inner must be left-justified rows
    for (std::size_t idx = 0; idx < cs.size(); ++idx)
        if (t.entries()[idx] <= k && cs[idx].col > rows[static_cast<std::size_t>(cs[idx].row - 1)])
            throw std::invalid_argument("entries <= k do not form a partition prefix");
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i] > rows[i - 1])
            throw std::invalid_argument("entries <= k do not form a partition prefix");
    return Partition(std::move(rows));
}

/// a(T_{>=k}) = number of entries >= k
inline int count_ge(const Tableau& t, int k) {
    int acc = 0;
    for (int e : t.entries())
        if (e >= k) ++acc;
    return acc;
}

/// lambda / nu(T_{<=k-1}), the subshape holding the entries >= k.
inline SkewShape shape_ge(const Tableau& t, int k) {
    return SkewShape(t.shape().outer(), shape_le(t, k - 1));
}

namespace detail {

struct Grid {
    SkewShape sh;
    std::vector<Cell> cells;                 // row-major
    std::vector<int> left, up;               // index of neighbor or -1
    explicit Grid(const SkewShape& s) : sh(s), cells(s.cells()) {
        std::map<Cell, int> index;
        for (std::size_t i = 0; i < cells.size(); ++i) index[cells[i]] = static_cast<int>(i);
        left.assign(cells.size(), -1);
        up.assign(cells.size(), -1);
        for (std::size_t i = 0; i < cells.size(); ++i) {
            auto it = index.find({cells[i].row, cells[i].col - 1});
            if (it != index.end()) left[i] = it->second;
            it = index.find({cells[i].row - 1, cells[i].col});
            if (it != index.end()) up[i] = it->second;
        }
    }
};

}  // namespace detail

/// Standard Young tableaux: entries 1..n, each exactly once, strictly
/// increasing along rows and columns.
inline std::vector<Tableau> enum_syt(const SkewShape& sh) {
    detail::Grid g(sh);
    int n = static_cast<int>(g.cells.size());
    std::vector<int> entries(g.cells.size(), 0);
    std::vector<Tableau> out;
    auto rec = [&](auto&& self, int next) -> void {
        if (next > n) {
            out.emplace_back(sh, entries);
            return;
        }
        for (std::size_t i = 0; i < g.cells.size(); ++i) {
            if (entries[i] != 0) continue;
            if (g.left[i] >= 0 && entries[static_cast<std::size_t>(g.left[i])] == 0) continue;
            if (g.up[i] >= 0 && entries[static_cast<std::size_t>(g.up[i])] == 0) continue;
            entries[i] = next;
            self(self, next + 1);
            entries[i] = 0;
        }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end());
    return out;
}

/// Standard increasing tableaux, enumerated as chains
/// mu = nu_0 -> nu_1 -> ... -> nu_m = lambda of rook-strip covers; the cells
/// of nu_k / nu_{k-1} receive entry k.
inline std::vector<Tableau> enum_sit(const SkewShape& sh) {
    const Partition& lambda = sh.outer();
    detail::Grid g(sh);
    std::map<Cell, std::size_t> index;
    for (std::size_t i = 0; i < g.cells.size(); ++i) index[g.cells[i]] = i;

    std::vector<int> entries(g.cells.size(), 0);
    std::vector<Tableau> out;
    auto rec = [&](auto&& self, const Partition& cur, int step) -> void {
        if (cur == lambda) {
            out.emplace_back(sh, entries);
            return;
        }
        for (const Partition& nxt : rook_strip_extensions(cur, lambda)) {
            for (int i = 1; i <= nxt.length(); ++i)
                if (nxt.part(i) > cur.part(i)) entries[index.at({i, nxt.part(i)})] = step;
            self(self, nxt, step + 1);
            for (int i = 1; i <= nxt.length(); ++i)
                if (nxt.part(i) > cur.part(i)) entries[index.at({i, nxt.part(i)})] = 0;
        }
    };
    rec(rec, sh.inner(), 1);
    std::sort(out.begin(), out.end());
    return out;
}

/// Barely standard Young tableaux: SITs with m(T) = n - 1, i.e. exactly one
/// entry repeated twice.
inline std::vector<Tableau> enum_bsyt(const SkewShape& sh) {
    std::vector<Tableau> out;
    for (const Tableau& t : enum_sit(sh))
        if (t.max_entry() == static_cast<int>(sh.size()) - 1) out.push_back(t);
    return out;
}

inline std::vector<Tableau> enum_bsyt_k(const SkewShape& sh, int k) {
    std::vector<Tableau> out;
    for (const Tableau& t : enum_bsyt(sh)) {
        int reps = 0;
        for (int e : t.entries())
            if (e == k) ++reps;
        if (reps == 2) out.push_back(t);
    }
    return out;
}

/// Semistandard Young tableaux of shape mu with entries in [d]: weakly
/// increasing rows, strictly increasing columns.
inline std::vector<Tableau> enum_ssyt_maxentry(const SkewShape& sh, int d) {
    detail::Grid g(sh);
    std::vector<int> entries(g.cells.size(), 0);
    std::vector<Tableau> out;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == g.cells.size()) {
            out.emplace_back(sh, entries);
            return;
        }
        int lo = 1;
        if (g.left[i] >= 0) lo = std::max(lo, entries[static_cast<std::size_t>(g.left[i])]);
        if (g.up[i] >= 0) lo = std::max(lo, entries[static_cast<std::size_t>(g.up[i])] + 1);
        for (int v = lo; v <= d; ++v) {
            entries[i] = v;
            self(self, i + 1);
        }
        entries[i] = 0;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

enum class Family { SSYT, RPP, IT };

/// All members of the family with |T| <= maxWeight. SSYT/IT entries >= 1,
/// RPP entries >= 0.
inline std::vector<Tableau> enum_weight_bounded(Family family, const SkewShape& sh, long maxWeight) {
    detail::Grid g(sh);
    std::vector<int> entries(g.cells.size(), 0);
    std::vector<Tableau> out;

    auto min_entry = [&](std::size_t i) {
        int lo = family == Family::RPP ? 0 : 1;
        int l = g.left[i], u = g.up[i];
        switch (family) {
            case Family::RPP:
                if (l >= 0) lo = std::max(lo, entries[static_cast<std::size_t>(l)]);
                if (u >= 0) lo = std::max(lo, entries[static_cast<std::size_t>(u)]);
                break;
            case Family::SSYT:
                if (l >= 0) lo = std::max(lo, entries[static_cast<std::size_t>(l)]);
                if (u >= 0) lo = std::max(lo, entries[static_cast<std::size_t>(u)] + 1);
                break;
            case Family::IT:
                if (l >= 0) lo = std::max(lo, entries[static_cast<std::size_t>(l)] + 1);
                if (u >= 0) lo = std::max(lo, entries[static_cast<std::size_t>(u)] + 1);
                break;
        }
        return lo;
    };

    // cheapest possible completion from cell i on, given current entries
    auto min_completion = [&](std::size_t i) {
        long acc = 0;
        std::vector<int> saved(entries.begin() + static_cast<long>(i), entries.end());
        for (std::size_t j = i; j < g.cells.size(); ++j) {
            entries[j] = min_entry(j);
            acc += entries[j];
        }
        std::copy(saved.begin(), saved.end(), entries.begin() + static_cast<long>(i));
        return acc;
    };

    auto rec = [&](auto&& self, std::size_t i, long used) -> void {
        if (i == g.cells.size()) {
            out.emplace_back(sh, entries);
            return;
        }
        if (used + min_completion(i) > maxWeight) return;
        for (int v = min_entry(i);; ++v) {
            entries[i] = v;
            long nowUsed = used + v;
            if (nowUsed + min_completion(i + 1) > maxWeight) break;
            self(self, i + 1, nowUsed);
        }
        entries[i] = 0;
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

/// Minimal standard increasing tableau M_lambda(i,j) = i + j - 1; its weight
/// is s(lambda).
inline Tableau minimal_increasing(const Partition& lambda) {
    SkewShape sh(lambda, Partition());
    std::vector<int> entries;
    for (Cell u : sh.cells()) entries.push_back(u.row + u.col - 1);
    return Tableau(sh, std::move(entries));
}

/// Set-valued filling: each cell carries a nonempty set, with
/// max T(u) <= min T(right of u) and max T(u) < min T(below u).
class SetValuedTableau {
public:
    SetValuedTableau() = default;
    SetValuedTableau(SkewShape shape, std::vector<std::vector<int>> sets)
        : shape_(std::move(shape)), sets_(std::move(sets)) {
        if (sets_.size() != static_cast<std::size_t>(shape_.size()))
            throw std::invalid_argument("set count does not match shape size");
        for (auto& s : sets_) {
            if (s.empty()) throw std::invalid_argument("cells must carry nonempty sets");
            std::sort(s.begin(), s.end());
        }
    }

    const SkewShape& shape() const { return shape_; }
    const std::vector<std::vector<int>>& sets() const { return sets_; }

    /// ne(T) = total number of entries
    long num_entries() const {
        long acc = 0;
        for (const auto& s : sets_) acc += static_cast<long>(s.size());
        return acc;
    }

    bool is_valid() const {
        detail::Grid g(shape_);
        for (std::size_t i = 0; i < g.cells.size(); ++i) {
            if (g.left[i] >= 0 && sets_[static_cast<std::size_t>(g.left[i])].back() > sets_[i].front())
                return false;
            if (g.up[i] >= 0 && sets_[static_cast<std::size_t>(g.up[i])].back() >= sets_[i].front())
                return false;
        }
        return true;
    }

    auto operator<=>(const SetValuedTableau&) const = default;

private:
    SkewShape shape_;
    std::vector<std::vector<int>> sets_;
};

/// All semistandard set-valued tableaux with entry sets inside [d].
inline std::vector<SetValuedTableau> enum_ssvt(const SkewShape& sh, int d) {
    detail::Grid g(sh);
    std::vector<std::vector<int>> sets(g.cells.size());
    std::vector<SetValuedTableau> out;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == g.cells.size()) {
            out.emplace_back(sh, sets);
            return;
        }
        int lo = 1;
        if (g.left[i] >= 0) lo = std::max(lo, sets[static_cast<std::size_t>(g.left[i])].back());
        if (g.up[i] >= 0) lo = std::max(lo, sets[static_cast<std::size_t>(g.up[i])].back() + 1);
        int span = d - lo + 1;
        if (span <= 0) return;
        for (int mask = 1; mask < (1 << span); ++mask) {
            sets[i].clear();
            for (int b = 0; b < span; ++b)
                if (mask & (1 << b)) sets[i].push_back(lo + b);
            self(self, i + 1);
        }
        sets[i].clear();
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace hooklab
