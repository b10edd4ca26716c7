#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "hooklab/shapes.hpp"

namespace hooklab {

/// Permutation of [n] in one-line notation.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> oneLine) : w_(std::move(oneLine)) {
        std::vector<bool> seen(w_.size() + 1, false);
        for (int v : w_) {
            if (v < 1 || v > static_cast<int>(w_.size()) || seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("not a permutation in one-line notation");
            seen[static_cast<std::size_t>(v)] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> w(static_cast<std::size_t>(n));
        std::iota(w.begin(), w.end(), 1);
        return Permutation(std::move(w));
    }

    /// "1432" (single digits) or "1,4,3,2".
    static Permutation parse(const std::string& text) {
        std::vector<int> w;
        if (text.find(',') != std::string::npos) {
            std::size_t pos = 0;
            while (pos < text.size()) {
                auto comma = text.find(',', pos);
                if (comma == std::string::npos) comma = text.size();
                w.push_back(std::stoi(text.substr(pos, comma - pos)));
                pos = comma + 1;
            }
        } else {
            for (char c : text) {
                if (c < '1' || c > '9') throw std::invalid_argument("bad permutation literal");
                w.push_back(c - '0');
            }
        }
        return Permutation(std::move(w));
    }

    int size() const { return static_cast<int>(w_.size()); }
    int operator()(int i) const { return w_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& one_line() const { return w_; }

    /// R(w) = { (i, w_j) : i < j, w_i > w_j }
    std::vector<Cell> rothe() const {
        std::vector<Cell> out;
        for (int i = 1; i <= size(); ++i)
            for (int j = i + 1; j <= size(); ++j)
                if ((*this)(i) > (*this)(j)) out.push_back({i, (*this)(j)});
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Cells of R(w) whose east, south and southeast neighbors are outside R(w).
    std::vector<Cell> essential_set() const {
        auto r = rothe();
        auto inR = [&](Cell u) { return std::binary_search(r.begin(), r.end(), u); };
        std::vector<Cell> out;
        for (Cell u : r)
            if (!inR({u.row + 1, u.col}) && !inR({u.row, u.col + 1}) && !inR({u.row + 1, u.col + 1}))
                out.push_back(u);
        return out;
    }

    int descent_count() const {
        int acc = 0;
        for (int i = 1; i < size(); ++i)
            if ((*this)(i) > (*this)(i + 1)) ++acc;
        return acc;
    }

    bool is_grassmannian() const { return descent_count() <= 1; }

    /// 2143-avoiding.
    bool is_vexillary() const { return !contains_pattern({2, 1, 4, 3}); }

    /// 132-avoiding.
    bool is_dominant() const { return !contains_pattern({1, 3, 2}); }

    /// Shape mu(w) of a vexillary permutation: the row counts of the Rothe
    /// diagram, sorted decreasingly.
    Partition shape_mu() const {
        if (!is_vexillary()) throw std::invalid_argument("shape is defined for vexillary permutations");
        std::vector<int> rows(static_cast<std::size_t>(size()), 0);
        for (Cell u : rothe()) ++rows[static_cast<std::size_t>(u.row - 1)];
        std::sort(rows.begin(), rows.end(), std::greater<>());
        return Partition(std::move(rows));
    }

    /// Smallest partition containing R(w): the union of the [1..i] x [1..j]
    /// rectangles over the essential set.
    Partition supershape() const {
        if (!is_vexillary()) throw std::invalid_argument("supershape is defined for vexillary permutations");
        auto ess = essential_set();
        int rows = 0;
        for (Cell u : ess) rows = std::max(rows, u.row);
        std::vector<int> parts(static_cast<std::size_t>(rows), 0);
        for (Cell u : ess)
            for (int i = 1; i <= u.row; ++i)
                parts[static_cast<std::size_t>(i - 1)] = std::max(parts[static_cast<std::size_t>(i - 1)], u.col);
        return Partition(std::move(parts));
    }

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < w_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(w_[i]);
        }
        return out;
    }

    auto operator<=>(const Permutation&) const = default;

private:
    bool contains_pattern(const std::vector<int>& pat) const {
        int k = static_cast<int>(pat.size());
        std::vector<int> idx(static_cast<std::size_t>(k));
        auto rec = [&](auto&& self, int depth, int start) -> bool {
            if (depth == k) {
                for (int a = 0; a < k; ++a)
                    for (int b = a + 1; b < k; ++b) {
                        bool valueOrder = w_[static_cast<std::size_t>(idx[static_cast<std::size_t>(a)])] <
                                          w_[static_cast<std::size_t>(idx[static_cast<std::size_t>(b)])];
                        if (valueOrder != (pat[static_cast<std::size_t>(a)] < pat[static_cast<std::size_t>(b)]))
                            return false;
                    }
                return true;
            }
            for (int i = start; i < size(); ++i) {
                idx[static_cast<std::size_t>(depth)] = i;
                if (self(self, depth + 1, i + 1)) return true;
            }
            return false;
        };
        return rec(rec, 0, 0);
    }

    std::vector<int> w_;
};

/// Grassmannian permutation in S_N with descent at d attached to mu:
/// w_i = i + mu_{d-i+1} for i <= d, remaining values ascending.
inline Permutation grassmannian_perm(const Partition& mu, int d, int N) {
    if (mu.length() > d) throw std::invalid_argument("mu has more than d parts");
    if (mu.part(1) > N - d) throw std::invalid_argument("mu too wide for S_N with descent d");
    std::vector<int> w;
    std::vector<bool> used(static_cast<std::size_t>(N) + 1, false);
    for (int i = 1; i <= d; ++i) {
        int v = i + mu.part(d - i + 1);
        w.push_back(v);
        used[static_cast<std::size_t>(v)] = true;
    }
    for (int v = 1; v <= N; ++v)
        if (!used[static_cast<std::size_t>(v)]) w.push_back(v);
    return Permutation(std::move(w));
}

/// w(n,k) = (1, 2, ..., k, n+k, n+k-1, ..., k+1) in S_{n+k}.
inline Permutation w_nk(int n, int k) {
    std::vector<int> w;
    for (int i = 1; i <= k; ++i) w.push_back(i);
    for (int v = n + k; v >= k + 1; --v) w.push_back(v);
    return Permutation(std::move(w));
}

}  // namespace hooklab
