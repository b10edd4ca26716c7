#pragma once

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hooklab/rational.hpp"

namespace hooklab {

/// 1-based matrix coordinates: row grows downward, column rightward.
struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

/// c(u) = j - i
inline int content(Cell u) { return u.col - u.row; }

/// Integer partition, weakly decreasing positive parts, no trailing zeros.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
                throw std::invalid_argument("parts must be weakly decreasing and positive");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Comma-separated parts, e.g. "4,4,2"; an empty string (or "0") is the
    /// empty partition.
    static Partition parse(const std::string& text) {
        std::vector<int> parts;
        std::stringstream in(text);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            if (tok.empty()) continue;
            parts.push_back(std::stoi(tok));
        }
        if (parts.size() == 1 && parts[0] == 0) parts.clear();
        return Partition(std::move(parts));
    }

    int length() const { return static_cast<int>(parts_.size()); }
    long size() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }
    bool empty() const { return parts_.empty(); }

    /// 1-based part access; rows past the last part have size 0.
    int part(int i) const {
        if (i < 1) throw std::invalid_argument("row index must be positive");
        return i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }

    const std::vector<int>& parts() const { return parts_; }

    bool contains(Cell u) const { return u.row >= 1 && u.col >= 1 && u.col <= part(u.row); }

    bool contains(const Partition& mu) const {
        for (int i = 1; i <= mu.length(); ++i)
            if (mu.part(i) > part(i)) return false;
        return true;
    }

    Partition conjugate() const {
        std::vector<int> conj(parts_.empty() ? 0 : static_cast<std::size_t>(parts_[0]), 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
        return Partition(std::move(conj));
    }

    /// h(u) = lambda_i - i + lambda'_j - j + 1
    int hook(Cell u) const {
        if (!contains(u)) throw std::invalid_argument("hook of a cell outside the shape");
        return part(u.row) - u.row + conjugate().part(u.col) - u.col + 1;
    }

    std::vector<Cell> cells() const {
        std::vector<Cell> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int i = 1; i <= length(); ++i)
            for (int j = 1; j <= part(i); ++j) out.push_back({i, j});
        return out;
    }

    /// b = sum (i-1) * lambda_i
    long b_stat() const {
        long acc = 0;
        for (int i = 1; i <= length(); ++i) acc += static_cast<long>(i - 1) * part(i);
        return acc;
    }

    /// s = sum over cells of (i + j - 1) = b(lambda) + b(lambda') + |lambda|
    long s_stat() const { return b_stat() + conjugate().b_stat() + size(); }

    Rational hook_product() const {
        Rational acc(1);
        for (Cell u : cells()) acc *= hook(u);
        return acc;
    }

    std::string str() const {
        if (parts_.empty()) return "0";
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(parts_[i]);
        }
        return out;
    }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// delta_d = (d-1, d-2, ..., 1); empty for d <= 1.
inline Partition staircase(int d) {
    std::vector<int> parts;
    for (int p = d - 1; p >= 1; --p) parts.push_back(p);
    return Partition(std::move(parts));
}

/// The long convention (n+1, n, ..., 1) used by the Dyck-path embedding.
inline Partition staircase_long(int n) {
    std::vector<int> parts;
    for (int p = n + 1; p >= 1; --p) parts.push_back(p);
    return Partition(std::move(parts));
}

/// nu covers mu in the rook-strip order: mu subset nu, nu != mu, and the
/// cells of nu/mu lie in pairwise distinct rows and columns.
inline bool covers_rc(const Partition& nu, const Partition& mu) {
    if (!nu.contains(mu) || nu == mu) return false;
    std::vector<int> cols;
    for (int i = 1; i <= nu.length(); ++i) {
        int added = nu.part(i) - mu.part(i);
        if (added > 1) return false;
        if (added == 1) cols.push_back(nu.part(i));
    }
    std::sort(cols.begin(), cols.end());
    return std::adjacent_find(cols.begin(), cols.end()) == cols.end();
}

/// All nu with covers_rc(nu, mu) and nu inside bound. Boxes addable in a
/// single rook strip sit at the top row of each equal run of parts.
inline std::vector<Partition> rook_strip_extensions(const Partition& mu, const Partition& bound) {
    std::vector<int> addable;
    for (int i = 1; i <= mu.length() + 1; ++i) {
        bool corner = (i == 1) || mu.part(i) < mu.part(i - 1);
        if (corner && mu.part(i) + 1 <= bound.part(i)) addable.push_back(i);
    }
    std::vector<Partition> out;
    int m = static_cast<int>(addable.size());
    for (int mask = 1; mask < (1 << m); ++mask) {
        std::vector<int> parts;
        int len = mu.length();
        for (int b = 0; b < m; ++b)
            if (mask & (1 << b)) len = std::max(len, addable[static_cast<std::size_t>(b)]);
        for (int i = 1; i <= len; ++i) parts.push_back(mu.part(i));
        for (int b = 0; b < m; ++b)
            if (mask & (1 << b)) ++parts[static_cast<std::size_t>(addable[static_cast<std::size_t>(b)] - 1)];
        out.emplace_back(std::move(parts));
    }
    std::sort(out.begin(), out.end());
    return out;
}

class SkewShape {
public:
    SkewShape() = default;

    SkewShape(Partition outer, Partition inner)
        : outer_(std::move(outer)), inner_(std::move(inner)) {
        if (!outer_.contains(inner_))
            throw std::invalid_argument("inner shape not contained in outer shape");
    }

    /// "4,4,2/2,1" or a plain partition "4,4,2".
    static SkewShape parse(const std::string& text) {
        auto slash = text.find('/');
        if (slash == std::string::npos) return SkewShape(Partition::parse(text), Partition());
        return SkewShape(Partition::parse(text.substr(0, slash)),
                         Partition::parse(text.substr(slash + 1)));
    }

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    long size() const { return outer_.size() - inner_.size(); }

    bool contains(Cell u) const { return outer_.contains(u) && !inner_.contains(u); }

    std::vector<Cell> cells() const {
        std::vector<Cell> out;
        for (int i = 1; i <= outer_.length(); ++i)
            for (int j = inner_.part(i) + 1; j <= outer_.part(i); ++j) out.push_back({i, j});
        return out;
    }

    std::string str() const {
        return inner_.empty() ? outer_.str() : outer_.str() + "/" + inner_.str();
    }

    auto operator<=>(const SkewShape&) const = default;

private:
    Partition outer_;
    Partition inner_;
};

inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int maxPart) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, maxPart); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k) {
        auto p = partitions_of(k);
        out.insert(out.end(), p.begin(), p.end());
    }
    return out;
}

/// All mu contained in lambda.
inline std::vector<Partition> subdiagrams(const Partition& lambda) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int row) -> void {
        if (row > lambda.length()) {
            out.emplace_back(std::vector<int>(cur));
            return;
        }
        int hi = std::min(lambda.part(row), row == 1 ? lambda.part(1) : cur[static_cast<std::size_t>(row - 2)]);
        for (int v = hi; v >= 0; --v) {
            cur.push_back(v);
            self(self, row + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace hooklab
