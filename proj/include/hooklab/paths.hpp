#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "hooklab/diagrams.hpp"
#include "hooklab/shapes.hpp"

namespace hooklab {

/// Family of monotone lattice paths in matrix coordinates. Every step moves
/// right (0,+1), up (-1,0), or diagonally up-right (-1,+1); paths are stored
/// as cell sequences.
struct PathFamily {
    std::vector<std::vector<Cell>> paths;
    auto operator<=>(const PathFamily&) const = default;
};

namespace detail {

inline bool is_path_step(Cell a, Cell b) {
    int dr = b.row - a.row, dc = b.col - a.col;
    return (dr == 0 && dc == 1) || (dr == -1 && dc == 0) || (dr == -1 && dc == 1);
}

inline bool is_diag_step(Cell a, Cell b) { return b.row == a.row - 1 && b.col == a.col + 1; }

/// Splits a set of cells into border strips: layer = length of the maximal
/// NW diagonal chain inside the set, then each layer into runs of
/// consecutive (right/up/diagonal) steps, ordered SW to NE.
inline std::vector<std::vector<Cell>> border_strips(const std::set<Cell>& cells) {
    std::map<Cell, int> depth;
    for (Cell u : cells) {
        auto it = depth.find({u.row - 1, u.col - 1});
        depth[u] = it == depth.end() ? 1 : it->second + 1;
    }
    int layers = 0;
    for (auto& [u, d] : depth) layers = std::max(layers, d);
    std::vector<std::vector<Cell>> out;
    for (int k = 1; k <= layers; ++k) {
        std::vector<Cell> layer;
        for (auto& [u, d] : depth)
            if (d == k) layer.push_back(u);
        std::sort(layer.begin(), layer.end(), [](Cell a, Cell b) {
            return a.col != b.col ? a.col < b.col : a.row > b.row;
        });
        std::vector<Cell> run;
        for (Cell u : layer) {
            if (!run.empty() && !is_path_step(run.back(), u)) {
                out.push_back(std::move(run));
                run.clear();
            }
            run.push_back(u);
        }
        if (!run.empty()) out.push_back(std::move(run));
    }
    return out;
}

}  // namespace detail

/// Lattice-path model of the generalized excited diagrams of a skew shape.
/// Strip endpoints A_i, B_i are the fixed cells delimiting the part of each
/// border strip of lambda minus mu that excited moves can ever vacate; the
/// cells beyond them are covered the same way by every diagram and form the
/// margin. The construction is validated operationally: the number of valid
/// path families must equal |D(lambda/mu)| on every shape we test.
class PathModel {
public:
    explicit PathModel(const SkewShape& sh) : sh_(sh) {
        build_occupiable();
        build_strips();
    }

    const SkewShape& shape() const { return sh_; }
    const std::vector<std::pair<Cell, Cell>>& endpoints() const { return endpoints_; }
    const std::set<Cell>& margin() const { return margin_; }

    /// Cells some diagram can occupy beyond the fixed inner shape.
    const std::set<Cell>& occupiable() const { return occupiable_; }

    /// Path family covering exactly lambda minus (D and margin): the border
    /// strips of the complement, clipped at the strip windows.
    PathFamily to_paths(const Diagram& d) const {
        std::set<Cell> complement;
        for (Cell u : sh_.outer().cells())
            if (!d.contains(u)) complement.insert(u);
        std::set<Cell> used;
        PathFamily fam;
        for (const auto& [a, b] : endpoints_) {
            std::vector<Cell> path{a};
            used.insert(a);
            while (path.back() != b) {
                Cell x = path.back();
                Cell next{0, 0};
                for (Cell cand : {Cell{x.row - 1, x.col}, Cell{x.row, x.col + 1}, Cell{x.row - 1, x.col + 1}}) {
                    if (complement.count(cand) && !used.count(cand) && !margin_.count(cand)) {
                        next = cand;
                        break;
                    }
                }
                if (next.row == 0) throw std::logic_error("stuck while tracing the complement of a diagram");
                path.push_back(next);
                used.insert(next);
            }
            fam.paths.push_back(std::move(path));
        }
        // every complement cell must be either covered or margin
        for (Cell u : complement)
            if (!used.count(u) && !margin_.count(u))
                throw std::logic_error("complement cell missed by the path family");
        return fam;
    }

    /// Inverse map: validates the family and returns the diagram whose
    /// complement the paths cover. Invalid families throw.
    Diagram from_paths(const PathFamily& fam) const {
        if (fam.paths.size() != endpoints_.size())
            throw std::invalid_argument("wrong number of paths for this shape");
        std::set<Cell> covered = margin_;
        for (std::size_t k = 0; k < fam.paths.size(); ++k) {
            const auto& p = fam.paths[k];
            if (p.empty() || p.front() != endpoints_[k].first || p.back() != endpoints_[k].second)
                throw std::invalid_argument("path does not join its strip endpoints");
            for (Cell u : p) {
                if (!sh_.outer().contains(u)) throw std::invalid_argument("path leaves the ambient shape");
                if (!covered.insert(u).second) throw std::invalid_argument("paths intersect");
            }
            for (std::size_t i = 0; i + 1 < p.size(); ++i)
                if (!detail::is_path_step(p[i], p[i + 1]))
                    throw std::invalid_argument("path contains an invalid step");
        }
        check_forbidden(fam, covered);
        std::vector<Cell> cells;
        for (Cell u : sh_.outer().cells())
            if (!covered.count(u)) cells.push_back(u);
        return Diagram(sh_.outer(), std::move(cells));
    }

    /// All families of nonintersecting Delannoy paths A_i -> B_i inside
    /// lambda without the forbidden corner configuration.
    std::vector<PathFamily> enumerate_valid_families() const {
        std::vector<PathFamily> out;
        PathFamily fam;
        std::set<Cell> used;
        auto rec = [&](auto&& self, std::size_t k) -> void {
            if (k == endpoints_.size()) {
                std::set<Cell> covered = margin_;
                for (const auto& p : fam.paths) covered.insert(p.begin(), p.end());
                try {
                    check_forbidden(fam, covered);
                } catch (const std::invalid_argument&) {
                    return;
                }
                out.push_back(fam);
                return;
            }
            auto [a, b] = endpoints_[k];
            std::vector<Cell> path{a};
            auto walk = [&](auto&& go, Cell x) -> void {
                if (x == b) {
                    fam.paths.push_back(path);
                    self(self, k + 1);
                    fam.paths.pop_back();
                    return;
                }
                for (Cell cand : {Cell{x.row, x.col + 1}, Cell{x.row - 1, x.col}, Cell{x.row - 1, x.col + 1}}) {
                    if (cand.row < b.row || cand.col > b.col) continue;
                    if (!sh_.outer().contains(cand) || used.count(cand)) continue;
                    path.push_back(cand);
                    used.insert(cand);
                    go(go, cand);
                    used.erase(cand);
                    path.pop_back();
                }
            };
            if (used.count(a)) return;
            used.insert(a);
            walk(walk, a);
            used.erase(a);
        };
        rec(rec, 0);
        return out;
    }

    /// LGV-style determinant bound det[eta(A_i, B_j)] >= |D(lambda/mu)|.
    long long det_bound() const {
        std::size_t k = endpoints_.size();
        std::vector<std::vector<long long>> m(k, std::vector<long long>(k, 0));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                m[i][j] = eta(endpoints_[i].first, endpoints_[j].second, sh_.outer());
        return det_laplace(m);
    }

    /// Same determinant with (1,1) steps weighted by beta.
    UniPoly<Rational> det_bound_beta() const {
        std::size_t k = endpoints_.size();
        std::vector<std::vector<UniPoly<Rational>>> m(k, std::vector<UniPoly<Rational>>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                m[i][j] = eta_beta(endpoints_[i].first, endpoints_[j].second, sh_.outer());
        return det_laplace(m);
    }

    /// Cells where a path turns up-then-right, excluding the base traversal:
    /// these coincide with the excited peaks of the encoded diagram.
    std::vector<Cell> high_peaks(const PathFamily& fam) const {
        std::vector<Cell> out;
        for (std::size_t k = 0; k < fam.paths.size(); ++k) {
            std::set<Cell> base(base_paths_.paths[k].begin(), base_paths_.paths[k].end());
            const auto& p = fam.paths[k];
            for (std::size_t i = 1; i + 1 < p.size(); ++i) {
                bool upIn = p[i].row == p[i - 1].row - 1 && p[i].col == p[i - 1].col;
                bool rightOut = p[i + 1].row == p[i].row && p[i + 1].col == p[i].col + 1;
                if (upIn && rightOut && !base.count(p[i])) out.push_back(p[i]);
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    const PathFamily& base_paths() const { return base_paths_; }

    /// Replace the labeled high peaks by diagonal steps.
    PathFamily drop_peaks(const PathFamily& fam, const std::vector<Cell>& labeled) const {
        PathFamily out;
        std::set<Cell> drop(labeled.begin(), labeled.end());
        for (const auto& p : fam.paths) {
            std::vector<Cell> q;
            for (Cell u : p)
                if (!drop.count(u)) q.push_back(u);
            out.paths.push_back(std::move(q));
        }
        return out;
    }

private:
    /// Flags every cell that some diagram can occupy. Cell (i,j) of mu can
    /// slide along its diagonal down to row M(i,j) = min(last ambient row of
    /// the diagonal, M(i+1,j)-1, M(i,j+1)).
    void build_occupiable() {
        const Partition& mu = sh_.inner();
        const Partition& lambda = sh_.outer();
        std::map<Cell, int> maxRow;
        for (int i = mu.length(); i >= 1; --i) {
            for (int j = mu.part(i); j >= 1; --j) {
                int c = j - i;
                int bound = i;
                while (lambda.contains(Cell{bound + 1, bound + 1 + c})) ++bound;
                auto below = maxRow.find({i + 1, j});
                if (below != maxRow.end()) bound = std::min(bound, below->second - 1);
                auto right = maxRow.find({i, j + 1});
                if (right != maxRow.end()) bound = std::min(bound, right->second);
                maxRow[{i, j}] = bound;
            }
        }
        for (auto& [u, m] : maxRow)
            for (int r = u.row; r <= m; ++r) occupiable_.insert({r, r + u.col - u.row});
    }

    void build_strips() {
        auto skewCells = sh_.cells();
        std::set<Cell> skew(skewCells.begin(), skewCells.end());
        auto strips = detail::border_strips(skew);
        for (int s = 0; s < static_cast<int>(strips.size()); ++s) {
            const auto& strip = strips[static_cast<std::size_t>(s)];
            int first = -1, last = -1;
            for (int i = 0; i < static_cast<int>(strip.size()); ++i) {
                if (occupiable_.count(strip[static_cast<std::size_t>(i)])) {
                    if (first < 0) first = i;
                    last = i;
                }
            }
            if (first < 0) {
                for (Cell u : strip) {
                    margin_.insert(u);
                    margin_owner_[u] = s;
                }
                continue;
            }
            if (first == 0 || last + 1 == static_cast<int>(strip.size()))
                throw std::logic_error("strip has no fixed endpoint cell");
            endpoints_.emplace_back(strip[static_cast<std::size_t>(first - 1)],
                                    strip[static_cast<std::size_t>(last + 1)]);
            strip_order_.push_back(s);
            for (int i = 0; i < first - 1; ++i) {
                margin_.insert(strip[static_cast<std::size_t>(i)]);
                margin_owner_[strip[static_cast<std::size_t>(i)]] = s;
            }
            for (int i = last + 2; i < static_cast<int>(strip.size()); ++i) {
                margin_.insert(strip[static_cast<std::size_t>(i)]);
                margin_owner_[strip[static_cast<std::size_t>(i)]] = s;
            }
        }
        base_paths_ = to_paths(Diagram(sh_.outer(), detail::initial_cells(sh_)));
    }

    /// Forbidden corner configuration: both elbow cells of a (1,1) step must
    /// lie in the ambient shape, the right elbow must be free, and the upper
    /// elbow may only be covered by a strictly inner strip. Fitted to the
    /// move-closure bijection and frozen; the family-count tests guard it.
    void check_forbidden(const PathFamily& fam, const std::set<Cell>&) const {
        std::map<Cell, int> owner = margin_owner_;
        for (std::size_t k = 0; k < fam.paths.size(); ++k)
            for (Cell u : fam.paths[k]) owner[u] = strip_order_[k];
        for (std::size_t k = 0; k < fam.paths.size(); ++k) {
            const auto& p = fam.paths[k];
            for (std::size_t i = 0; i + 1 < p.size(); ++i) {
                if (!detail::is_diag_step(p[i], p[i + 1])) continue;
                Cell up{p[i].row - 1, p[i].col};
                Cell right{p[i].row, p[i].col + 1};
                if (!sh_.outer().contains(up) || !sh_.outer().contains(right))
                    throw std::invalid_argument("diagonal step along the boundary");
                if (owner.count(right))
                    throw std::invalid_argument("diagonal step next to a covered right elbow");
                auto it = owner.find(up);
                if (it != owner.end() && it->second >= strip_order_[k])
                    throw std::invalid_argument("diagonal step under an outer path");
            }
        }
    }

    SkewShape sh_;
    std::set<Cell> occupiable_;
    std::set<Cell> margin_;
    std::map<Cell, int> margin_owner_;   // strip order of every forced cell
    std::vector<std::pair<Cell, Cell>> endpoints_;
    std::vector<int> strip_order_;       // global strip order of each path
    PathFamily base_paths_;
};

/// Checks the bijection between 0/1-labeled rectilinear path families (one
/// family per ordinary excited diagram, peaks labeled) and the Delannoy
/// families encoding the generalized diagrams. Also checks that high peaks
/// coincide with excited peaks.
inline bool labeled_paths_bijection(const SkewShape& sh) {
    PathModel model(sh);
    std::set<std::vector<Cell>> reached;
    long labeled_total = 0;
    for (const auto& [diag, peaks] : excited_peaks(sh)) {
        PathFamily fam = model.to_paths(diag);
        for (const auto& p : fam.paths)
            for (std::size_t i = 0; i + 1 < p.size(); ++i)
                if (detail::is_diag_step(p[i], p[i + 1])) return false;  // rectilinear expected
        std::vector<Cell> hp = model.high_peaks(fam);
        std::vector<Cell> expect = peaks;
        std::sort(expect.begin(), expect.end());
        if (hp != expect) return false;
        int np = static_cast<int>(hp.size());
        labeled_total += 1L << np;
        for (int mask = 0; mask < (1 << np); ++mask) {
            std::vector<Cell> labeled;
            for (int b = 0; b < np; ++b)
                if (mask & (1 << b)) labeled.push_back(hp[static_cast<std::size_t>(b)]);
            Diagram img = model.from_paths(model.drop_peaks(fam, labeled));
            reached.insert(img.cells);
        }
    }
    auto gen = generalized_excited_diagrams(sh);
    if (static_cast<long>(reached.size()) != labeled_total) return false;
    if (gen.size() != reached.size()) return false;
    for (const Diagram& d : gen)
        if (!reached.count(d.cells)) return false;
    return true;
}

}  // namespace hooklab
