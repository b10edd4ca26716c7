#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "hooklab/poly.hpp"
#include "hooklab/shapes.hpp"

namespace hooklab {

/// Cell subset of an ambient partition, reachable from the inner shape by
/// excited moves. Cells are kept sorted so diagrams compare as values.
struct Diagram {
    Partition ambient;
    std::vector<Cell> cells;

    Diagram() = default;
    Diagram(Partition amb, std::vector<Cell> cs) : ambient(std::move(amb)), cells(std::move(cs)) {
        std::sort(cells.begin(), cells.end());
    }

    long size() const { return static_cast<long>(cells.size()); }
    bool contains(Cell u) const { return std::binary_search(cells.begin(), cells.end(), u); }

    auto operator<=>(const Diagram&) const = default;
};

namespace detail {

inline std::vector<Cell> initial_cells(const SkewShape& sh) {
    return SkewShape(sh.inner(), Partition()).cells();
}

inline bool in_set(const std::vector<Cell>& sorted, Cell u) {
    return std::binary_search(sorted.begin(), sorted.end(), u);
}

/// u is active in S if the three cells completing its 2x2 square to the
/// southeast are free cells of lambda.
inline bool is_active(const Partition& lambda, const std::vector<Cell>& S, Cell u) {
    for (Cell v : {Cell{u.row + 1, u.col}, Cell{u.row, u.col + 1}, Cell{u.row + 1, u.col + 1}})
        if (!lambda.contains(v) || in_set(S, v)) return false;
    return true;
}

inline std::vector<Cell> with_cell(std::vector<Cell> S, Cell add) {
    S.insert(std::upper_bound(S.begin(), S.end(), add), add);
    return S;
}

inline std::vector<Cell> without_cell(std::vector<Cell> S, Cell del) {
    S.erase(std::find(S.begin(), S.end(), del));
    return S;
}

}  // namespace detail

/// Closure of the inner shape under type I moves, together with the excited
/// peak set of each diagram. The peak update
///   pi(D') = pi(D) - (i,j+1) - (i+1,j) + (i,j)
/// must agree along every move sequence; a disagreement throws.
inline std::map<std::vector<Cell>, std::vector<Cell>> excited_closure(const SkewShape& sh) {
    const Partition& lambda = sh.outer();
    std::map<std::vector<Cell>, std::vector<Cell>> seen;
    std::vector<std::vector<Cell>> work{detail::initial_cells(sh)};
    seen[work[0]] = {};
    while (!work.empty()) {
        std::vector<Cell> S = std::move(work.back());
        work.pop_back();
        std::vector<Cell> peaks = seen.at(S);
        for (Cell u : S) {
            if (!detail::is_active(lambda, S, u)) continue;
            auto S2 = detail::with_cell(detail::without_cell(S, u), {u.row + 1, u.col + 1});
            std::vector<Cell> p2 = peaks;
            for (Cell drop : {Cell{u.row, u.col + 1}, Cell{u.row + 1, u.col}}) {
                auto it = std::find(p2.begin(), p2.end(), drop);
                if (it != p2.end()) p2.erase(it);
            }
            p2 = detail::with_cell(std::move(p2), u);
            auto it = seen.find(S2);
            if (it == seen.end()) {
                seen.emplace(S2, std::move(p2));
                work.push_back(std::move(S2));
            } else if (it->second != p2) {
                throw std::logic_error("excited peak set depends on the move order");
            }
        }
    }
    return seen;
}

inline std::vector<Diagram> excited_diagrams(const SkewShape& sh) {
    std::vector<Diagram> out;
    for (const auto& [cells, peaks] : excited_closure(sh)) out.emplace_back(sh.outer(), cells);
    return out;
}

inline std::vector<std::pair<Diagram, std::vector<Cell>>> excited_peaks(const SkewShape& sh) {
    std::vector<std::pair<Diagram, std::vector<Cell>>> out;
    for (const auto& [cells, peaks] : excited_closure(sh))
        out.emplace_back(Diagram(sh.outer(), cells), peaks);
    return out;
}

/// Closure under both move types; type II adds (i+1,j+1) while keeping (i,j).
inline std::vector<Diagram> generalized_excited_diagrams(const SkewShape& sh) {
    const Partition& lambda = sh.outer();
    std::set<std::vector<Cell>> seen;
    std::vector<std::vector<Cell>> work{detail::initial_cells(sh)};
    seen.insert(work[0]);
    while (!work.empty()) {
        std::vector<Cell> S = std::move(work.back());
        work.pop_back();
        for (Cell u : S) {
            if (!detail::is_active(lambda, S, u)) continue;
            Cell target{u.row + 1, u.col + 1};
            for (bool keep : {false, true}) {
                auto S2 = keep ? detail::with_cell(S, target)
                               : detail::with_cell(detail::without_cell(S, u), target);
                if (seen.insert(S2).second) work.push_back(std::move(S2));
            }
        }
    }
    std::vector<Diagram> out;
    for (const auto& cells : seen) out.emplace_back(sh.outer(), cells);
    return out;
}

/// D(lambda/mu) as the disjoint union of {D u S : S subset pi(D)} over the
/// ordinary excited diagrams. True iff the union reproduces the move closure
/// and the 2^{|pi|} counts add up without collision.
inline bool check_no_characterization(const SkewShape& sh) {
    auto closure = excited_closure(sh);
    std::set<std::vector<Cell>> built;
    long predicted = 0;
    for (const auto& [cells, peaks] : closure) {
        int p = static_cast<int>(peaks.size());
        predicted += 1L << p;
        for (int mask = 0; mask < (1 << p); ++mask) {
            std::vector<Cell> S = cells;
            for (int b = 0; b < p; ++b)
                if (mask & (1 << b)) S = detail::with_cell(std::move(S), peaks[static_cast<std::size_t>(b)]);
            built.insert(std::move(S));
        }
    }
    if (static_cast<long>(built.size()) != predicted) return false;
    auto gen = generalized_excited_diagrams(sh);
    if (static_cast<long>(gen.size()) != predicted) return false;
    for (const Diagram& d : gen)
        if (!built.count(d.cells)) return false;
    return true;
}

/// P(lambda/mu) = { pi(D) u S : D excited, S subset lambda minus D }.
inline std::vector<std::vector<Cell>> pleasant_diagrams(const SkewShape& sh) {
    std::set<std::vector<Cell>> out;
    for (const auto& [cells, peaks] : excited_closure(sh)) {
        std::vector<Cell> free;
        for (Cell u : sh.outer().cells())
            if (!detail::in_set(cells, u)) free.push_back(u);
        int f = static_cast<int>(free.size());
        for (long mask = 0; mask < (1L << f); ++mask) {
            std::vector<Cell> S = peaks;
            for (int b = 0; b < f; ++b) {
                Cell c = free[static_cast<std::size_t>(b)];
                if ((mask & (1L << b)) && !detail::in_set(peaks, c))
                    S = detail::with_cell(std::move(S), c);
            }
            out.insert(std::move(S));
        }
    }
    return {out.begin(), out.end()};
}

/// Predicted |P(lambda/mu)| = sum over excited D of 2^(|lambda/mu| - |pi(D)|).
inline long pleasant_count_formula(const SkewShape& sh) {
    long acc = 0;
    for (const auto& [cells, peaks] : excited_closure(sh))
        acc += 1L << (sh.size() - static_cast<long>(peaks.size()));
    return acc;
}

// ---------------------------------------------------------------------------
// Lattice-path counting

/// Delannoy number D(m,n): paths with steps (1,0),(0,1),(1,1).
inline long long delannoy_count(int m, int n) {
    std::vector<std::vector<long long>> f(static_cast<std::size_t>(m) + 1,
                                          std::vector<long long>(static_cast<std::size_t>(n) + 1, 0));
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= n; ++j) {
            if (i == 0 && j == 0) { f[0][0] = 1; continue; }
            long long v = 0;
            if (i > 0) v += f[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
            if (j > 0) v += f[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)];
            if (i > 0 && j > 0) v += f[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
            f[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
        }
    return f[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)];
}

/// Little Schroeder number s_n: paths (0,0) -> (n,n) with Delannoy steps that
/// stay weakly above the diagonal and place no (1,1) step on it.
inline long long schroeder(int n) {
    // f[x][y], y >= x
    std::vector<std::vector<long long>> f(static_cast<std::size_t>(n) + 1,
                                          std::vector<long long>(static_cast<std::size_t>(n) + 1, 0));
    f[0][0] = 1;
    for (int y = 0; y <= n; ++y)
        for (int x = 0; x <= y; ++x) {
            if (x == 0 && y == 0) continue;
            long long v = 0;
            if (x > 0) v += f[static_cast<std::size_t>(x - 1)][static_cast<std::size_t>(y)];
            if (y > 0 && y - 1 >= x) v += f[static_cast<std::size_t>(x)][static_cast<std::size_t>(y - 1)];
            if (x > 0 && y > 0 && x - 1 != y - 1) v += f[static_cast<std::size_t>(x - 1)][static_cast<std::size_t>(y - 1)];
            f[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = v;
        }
    return f[static_cast<std::size_t>(n)][static_cast<std::size_t>(n)];
}

/// Delannoy paths A -> B with cells inside lambda (matrix coordinates: steps
/// move right, up, or diagonally up-right).
inline long long eta(Cell a, Cell b, const Partition& lambda) {
    if (!lambda.contains(a) || !lambda.contains(b)) return 0;
    std::map<Cell, long long> f;
    for (int r = a.row; r >= b.row; --r)
        for (int c = 1; c <= lambda.part(r); ++c) {
            Cell u{r, c};
            long long v = (u == a) ? 1 : 0;
            auto add = [&](Cell w) {
                auto it = f.find(w);
                if (it != f.end()) v += it->second;
            };
            add({r, c - 1});
            add({r + 1, c});
            add({r + 1, c - 1});
            f[u] = v;
        }
    auto it = f.find(b);
    return it == f.end() ? 0 : it->second;
}

inline UniPoly<Rational> eta_beta(Cell a, Cell b, const Partition& lambda);

/// eta with each (1,1) step weighted by the given beta.
inline Rational eta_beta_at(Cell a, Cell b, const Partition& lambda, const Rational& beta) {
    return eta_beta(a, b, lambda)(beta);
}

/// Same count with each (1,1) step weighted by a formal beta.
inline UniPoly<Rational> eta_beta(Cell a, Cell b, const Partition& lambda) {
    using P = UniPoly<Rational>;
    if (!lambda.contains(a) || !lambda.contains(b)) return P();
    P beta = P::variable();
    std::map<Cell, P> f;
    for (int r = a.row; r >= b.row; --r)
        for (int c = 1; c <= lambda.part(r); ++c) {
            Cell u{r, c};
            P v = (u == a) ? P(1) : P();
            auto get = [&](Cell w) {
                auto it = f.find(w);
                return it != f.end() ? it->second : P();
            };
            v += get({r, c - 1});
            v += get({r + 1, c});
            v += beta * get({r + 1, c - 1});
            f[u] = v;
        }
    auto it = f.find(b);
    return it == f.end() ? P() : it->second;
}

template <typename T>
inline T det_laplace(const std::vector<std::vector<T>>& m) {
    std::size_t n = m.size();
    if (n == 0) return T(1);
    if (n == 1) return m[0][0];
    T acc(0);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<T>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<T> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        T term = m[0][j] * det_laplace(minor);
        if (j % 2 == 0)
            acc = acc + term;
        else
            acc = acc - term;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Dyck paths and high-peak polynomials

/// L_n(x) = sum over Dyck paths of length 2n of x^(number of high peaks);
/// L_n(2) = s_n.
inline UniPoly<Rational> dyck_high_peak_poly(int n) {
    std::vector<Rational> coeffs;
    std::vector<int> steps;  // +1 up, -1 down
    auto record = [&](int highPeaks) {
        if (static_cast<std::size_t>(highPeaks) >= coeffs.size())
            coeffs.resize(static_cast<std::size_t>(highPeaks) + 1, Rational(0));
        coeffs[static_cast<std::size_t>(highPeaks)] += 1;
    };
    auto rec = [&](auto&& self, int pos, int height) -> void {
        if (pos == 2 * n) {
            if (height != 0) return;
            int hp = 0;
            int h = 0;
            for (int i = 0; i + 1 < 2 * n; ++i) {
                h += steps[static_cast<std::size_t>(i)];
                if (steps[static_cast<std::size_t>(i)] == 1 && steps[static_cast<std::size_t>(i + 1)] == -1 && h > 1)
                    ++hp;
            }
            record(hp);
            return;
        }
        if (2 * n - pos - 1 >= height + 1) {
            steps.push_back(1);
            self(self, pos + 1, height + 1);
            steps.pop_back();
        }
        if (height > 0) {
            steps.push_back(-1);
            self(self, pos + 1, height - 1);
            steps.pop_back();
        }
    };
    if (n == 0) return UniPoly<Rational>(1);
    rec(rec, 0, 0);
    return UniPoly<Rational>(std::move(coeffs));
}

/// Tuple polynomial via x^C(k,2) * L_{n,k}(x) = det[ L_{n+i+j-2}(x) ].
inline UniPoly<Rational> dyck_tuple_poly(int n, int k) {
    using P = UniPoly<Rational>;
    std::vector<std::vector<P>> m(static_cast<std::size_t>(k), std::vector<P>(static_cast<std::size_t>(k)));
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
            m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = dyck_high_peak_poly(n + i + j - 2);
    P det = det_laplace(m);
    auto [quot, rem] = det.divmod(P::monomial(Rational(1), static_cast<int>(binomial2(k))));
    if (!rem.is_zero()) throw std::logic_error("tuple determinant is not divisible by x^C(k,2)");
    return quot;
}

struct ThickZigzagReport {
    long long direct_count = 0;       // |D(delta_{n+2k}/delta_n)| by move closure
    long long det_value = 0;          // 2^{-C(k,2)} det[ s_{n-2+i+j} ]
    UniPoly<Rational> high_peak_poly; // L_n
    UniPoly<Rational> tuple_poly;     // L_{n,k}
};

inline ThickZigzagReport thick_zigzag(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("thick zigzag needs n, k >= 1");
    ThickZigzagReport rep;
    SkewShape sh(staircase(n + 2 * k), staircase(n));
    rep.direct_count = static_cast<long long>(generalized_excited_diagrams(sh).size());

    std::vector<std::vector<long long>> m(static_cast<std::size_t>(k), std::vector<long long>(static_cast<std::size_t>(k)));
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
            m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = schroeder(n - 2 + i + j);
    long long det = det_laplace(m);
    long long denom = 1LL << binomial2(k);
    if (det % denom != 0) throw std::logic_error("Schroeder determinant not divisible by 2^C(k,2)");
    rep.det_value = det / denom;

    rep.high_peak_poly = dyck_high_peak_poly(n);
    rep.tuple_poly = dyck_tuple_poly(n, k);
    return rep;
}

}  // namespace hooklab
