#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "hooklab/diagrams.hpp"
#include "hooklab/paths.hpp"
#include "hooklab/permutations.hpp"
#include "hooklab/poly.hpp"
#include "hooklab/shapes.hpp"
#include "hooklab/tableaux.hpp"

namespace hooklab {

/// Evaluation data for factorial Grothendieck polynomials: d variables, the
/// parameter sequence y_1, y_2, ... and the deformation scalar beta. K is
/// any field scalar (Rational or a formal RatFunc).
template <typename K>
struct EvalContext {
    int d = 0;
    std::vector<K> y;  // y[j-1] holds y_j
    K beta = K(0);

    const K& y_at(int j) const {
        if (j < 1 || j > static_cast<int>(y.size()))
            throw std::invalid_argument("y index out of range: " + std::to_string(j));
        return y[static_cast<std::size_t>(j - 1)];
    }
};

/// y_j = j
template <typename K>
EvalContext<K> natural_context(int d, int maxIndex, const K& beta) {
    EvalContext<K> ctx{d, {}, beta};
    for (int j = 1; j <= maxIndex; ++j) ctx.y.push_back(K(j));
    return ctx;
}

/// y_j = q^j
template <typename K>
EvalContext<K> geometric_context(int d, int maxIndex, const K& q, const K& beta) {
    EvalContext<K> ctx{d, {}, beta};
    K p = K(1);
    for (int j = 1; j <= maxIndex; ++j) {
        p = K(p * q);
        ctx.y.push_back(p);
    }
    return ctx;
}

// x (+) y = x + y + beta*x*y,  x (-) y = (x - y)/(1 + beta*y)
template <typename K>
K oplus(const K& a, const K& b, const K& beta) {
    return K(a + b + beta * a * b);
}

template <typename K>
K ominus(const K& a, const K& b, const K& beta) {
    K den = K(K(1) + beta * b);
    if (den == K(0)) throw pole_error("ominus at 1 + beta*y = 0");
    return K(K(a - b) / den);
}

template <typename K>
K oneg(const K& b, const K& beta) {
    return ominus(K(0), b, beta);
}

/// [x|y]^k = (x (+) y_1) ... (x (+) y_k)
template <typename K>
K bracket(const K& x, const EvalContext<K>& ctx, int k) {
    K acc(1);
    for (int i = 1; i <= k; ++i) acc = K(acc * oplus(x, ctx.y_at(i), ctx.beta));
    return acc;
}

/// Vanishing point of G_mu: y_lambda = ((-)y_{lambda_1+d}, ..., (-)y_{lambda_d+1}).
template <typename K>
std::vector<K> y_lambda_point(const Partition& lambda, const EvalContext<K>& ctx) {
    if (lambda.length() > ctx.d) throw std::invalid_argument("lambda has more than d parts");
    std::vector<K> x;
    for (int i = 1; i <= ctx.d; ++i)
        x.push_back(oneg(ctx.y_at(lambda.part(i) + ctx.d - i + 1), ctx.beta));
    return x;
}

template <typename K>
K rat_beta_power(const K& beta, long e) {
    if (e >= 0) {
        K acc(1);
        for (long i = 0; i < e; ++i) acc = K(acc * beta);
        return acc;
    }
    if (beta == K(0)) throw pole_error("negative power of beta = 0");
    K acc(1);
    for (long i = 0; i < -e; ++i) acc = K(acc / beta);
    return acc;
}

/// Set-valued tableau sum:
///   G_mu(x|y) = sum over SSVT_d(mu) of beta^(ne(T)-|mu|) prod (x_r (+) y_{r+c(u)})
template <typename K>
K g_tableau(const Partition& mu, const std::vector<K>& x, const EvalContext<K>& ctx) {
    if (mu.length() > ctx.d) return K(0);
    if (static_cast<int>(x.size()) < ctx.d) throw std::invalid_argument("need d values of x");
    SkewShape sh(mu, Partition());
    auto cells = sh.cells();
    K total(0);
    for (const SetValuedTableau& t : enum_ssvt(sh, ctx.d)) {
        K term = rat_beta_power<K>(ctx.beta, t.num_entries() - mu.size());
        for (std::size_t i = 0; i < cells.size(); ++i)
            for (int r : t.sets()[i])
                term = K(term * oplus(x[static_cast<std::size_t>(r - 1)],
                                      ctx.y_at(r + content(cells[i])), ctx.beta));
        total = K(total + term);
    }
    return total;
}

/// Bialternant form:
///   G_mu(x|y) = det([x_i|y]^(mu_j + d - j) (1+beta x_i)^(j-1)) / prod_{i<j}(x_i - x_j)
template <typename K>
K g_determinant(const Partition& mu, const std::vector<K>& x, const EvalContext<K>& ctx) {
    int d = ctx.d;
    if (mu.length() > d) return K(0);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            if (x[static_cast<std::size_t>(i)] == x[static_cast<std::size_t>(j)])
                throw std::invalid_argument("repeated x values: use g_tableau instead");
    std::vector<std::vector<K>> m(static_cast<std::size_t>(d), std::vector<K>(static_cast<std::size_t>(d), K(0)));
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j) {
            K e = bracket(x[static_cast<std::size_t>(i - 1)], ctx, mu.part(j) + d - j);
            K pw(1);
            for (int t = 0; t < j - 1; ++t)
                pw = K(pw * (K(1) + ctx.beta * x[static_cast<std::size_t>(i - 1)]));
            m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = K(e * pw);
        }
    K det = det_laplace(m);
    K vandermonde(1);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            vandermonde = K(vandermonde * (x[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(j)]));
    return K(det / vandermonde);
}

/// Factorial Schur s_mu(x|y) by its own bialternant, used as the beta = 0
/// cross-check: det[(x_i|y)^(mu_j+d-j)] / prod (x_i - x_j) with
/// (x|y)^k = (x-y_1)...(x-y_k).
template <typename K>
K factorial_schur(const Partition& mu, const std::vector<K>& x, const EvalContext<K>& ctx) {
    int d = ctx.d;
    if (mu.length() > d) return K(0);
    std::vector<std::vector<K>> m(static_cast<std::size_t>(d), std::vector<K>(static_cast<std::size_t>(d), K(0)));
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j) {
            K acc(1);
            for (int t = 1; t <= mu.part(j) + d - j; ++t)
                acc = K(acc * (x[static_cast<std::size_t>(i - 1)] - ctx.y_at(t)));
            m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = acc;
        }
    K det = det_laplace(m);
    K vandermonde(1);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            vandermonde = K(vandermonde * (x[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(j)]));
    return K(det / vandermonde);
}

/// prod over (i,j) in lambda of (y_{d+j-lambda'_j} (-) y_{lambda_i+d-i+1}),
/// the value of G_lambda at its own vanishing point.
template <typename K>
K ic_product(const Partition& lambda, const EvalContext<K>& ctx) {
    Partition conj = lambda.conjugate();
    K acc(1);
    for (Cell u : lambda.cells())
        acc = K(acc * ominus(ctx.y_at(ctx.d + u.col - conj.part(u.col)),
                             ctx.y_at(lambda.part(u.row) + ctx.d - u.row + 1), ctx.beta));
    return acc;
}

/// wt(lambda/mu) = prod_i (1 + beta y_{mu_i+d-i+1}) / (1 + beta y_{lambda_i+d-i+1})
template <typename K>
K wt_ratio(const Partition& lambda, const Partition& mu, const EvalContext<K>& ctx) {
    K acc(1);
    for (int i = 1; i <= ctx.d; ++i) {
        K num = K(K(1) + ctx.beta * ctx.y_at(mu.part(i) + ctx.d - i + 1));
        K den = K(K(1) + ctx.beta * ctx.y_at(lambda.part(i) + ctx.d - i + 1));
        if (den == K(0)) throw pole_error("wt ratio pole");
        acc = K(acc * num / den);
    }
    return acc;
}

template <typename K>
K g_one(const std::vector<K>& x, const EvalContext<K>& ctx) {
    return g_tableau(Partition({1}), x, ctx);
}

/// All nu with nu -> mu (rook-strip covers), length at most d.
inline std::vector<Partition> pieri_covers(const Partition& mu, int d) {
    std::vector<int> parts(static_cast<std::size_t>(d), mu.part(1) + 1);
    std::vector<Partition> all = rook_strip_extensions(mu, Partition(std::move(parts)));
    return all;
}

/// LHS - RHS of the Pieri rule
///   G_mu(x|y) (1 + beta G_1(x|y)) = (1 + beta G_1(y_mu|y)) sum_{nu -> mu or nu = mu} beta^{|nu/mu|} G_nu(x|y)
template <typename K>
K pieri_residual(const Partition& mu, const std::vector<K>& x, const EvalContext<K>& ctx) {
    K lhs = K(g_tableau(mu, x, ctx) * (K(1) + ctx.beta * g_one(x, ctx)));
    auto yMu = y_lambda_point(mu, ctx);
    K factor = K(K(1) + ctx.beta * g_one(yMu, ctx));
    K sum = g_tableau(mu, x, ctx);
    for (const Partition& nu : pieri_covers(mu, ctx.d))
        sum = K(sum + rat_beta_power<K>(ctx.beta, nu.size() - mu.size()) * g_tableau(nu, x, ctx));
    return K(lhs - factor * sum);
}

/// LHS - RHS of the rewritten Pieri rule (the nu = mu term cancelled):
///   G_mu (G_1(x|y) - G_1(y_mu|y)) / (1 + beta G_1(y_mu|y)) = sum_{nu -> mu} beta^{|nu/mu|-1} G_nu
template <typename K>
K pieri_residual_rewritten(const Partition& mu, const std::vector<K>& x, const EvalContext<K>& ctx) {
    auto yMu = y_lambda_point(mu, ctx);
    K den = K(K(1) + ctx.beta * g_one(yMu, ctx));
    if (den == K(0)) throw pole_error("Pieri denominator vanishes");
    K lhs = K(g_tableau(mu, x, ctx) * K(g_one(x, ctx) - g_one(yMu, ctx)) / den);
    K sum(0);
    for (const Partition& nu : pieri_covers(mu, ctx.d))
        sum = K(sum + rat_beta_power<K>(ctx.beta, nu.size() - mu.size() - 1) * g_tableau(nu, x, ctx));
    return K(lhs - sum);
}

/// LHS - RHS of the evaluated Pieri rule
///   G_mu(y_lambda|y) (wt(lambda/mu) - 1) = sum_{nu -> mu} beta^{|nu/mu|} G_nu(y_lambda|y)
template <typename K>
K pieri_residual_at_lambda(const Partition& lambda, const Partition& mu, const EvalContext<K>& ctx) {
    auto yl = y_lambda_point(lambda, ctx);
    K lhs = K(g_tableau(mu, yl, ctx) * (wt_ratio(lambda, mu, ctx) - K(1)));
    K sum(0);
    for (const Partition& nu : pieri_covers(mu, ctx.d))
        sum = K(sum + rat_beta_power<K>(ctx.beta, nu.size() - mu.size()) * g_tableau(nu, yl, ctx));
    return K(lhs - sum);
}

// ---------------------------------------------------------------------------
// Double Grothendieck polynomials of vexillary permutations

/// KMY diagram sum: GG_w(x,y) = sum over D(lambda(w)/mu(w)) of
/// beta^{|D|-|mu|} prod_{(i,j) in D} (x_i (+) y_j).
template <typename K>
K double_groth_vexillary(const Permutation& w, const std::vector<K>& x, const std::vector<K>& y,
                         const K& beta) {
    if (!w.is_vexillary()) throw std::invalid_argument("double Grothendieck sum needs a vexillary permutation");
    Partition mu = w.shape_mu(), lambda = w.supershape();
    SkewShape sh(lambda, mu);
    K total(0);
    for (const Diagram& d : generalized_excited_diagrams(sh)) {
        K term = rat_beta_power<K>(beta, d.size() - mu.size());
        for (Cell u : d.cells)
            term = K(term * oplus(x[static_cast<std::size_t>(u.row - 1)],
                                  y[static_cast<std::size_t>(u.col - 1)], beta));
        total = K(total + term);
    }
    return total;
}

/// Same value through ordinary excited diagrams and their peaks:
/// sum over E of beta^{|D|-|mu|} prod_peaks (1 + beta(x_i (+) y_j)) prod_D (x_i (+) y_j).
template <typename K>
K double_groth_vexillary_peaks(const Permutation& w, const std::vector<K>& x, const std::vector<K>& y,
                               const K& beta) {
    if (!w.is_vexillary()) throw std::invalid_argument("double Grothendieck sum needs a vexillary permutation");
    Partition mu = w.shape_mu(), lambda = w.supershape();
    SkewShape sh(lambda, mu);
    K total(0);
    for (const auto& [d, peaks] : excited_peaks(sh)) {
        K term = rat_beta_power<K>(beta, d.size() - mu.size());
        for (Cell u : peaks)
            term = K(term * (K(1) + beta * oplus(x[static_cast<std::size_t>(u.row - 1)],
                                                 y[static_cast<std::size_t>(u.col - 1)], beta)));
        for (Cell u : d.cells)
            term = K(term * oplus(x[static_cast<std::size_t>(u.row - 1)],
                                  y[static_cast<std::size_t>(u.col - 1)], beta));
        total = K(total + term);
    }
    return total;
}

/// GG_w(x, 0) expanded as a polynomial: monomial exponent vector in x mapped
/// to its coefficient in beta.
inline std::map<std::vector<int>, UniPoly<Rational>> double_groth_y0_expansion(const Permutation& w) {
    if (!w.is_vexillary()) throw std::invalid_argument("expansion needs a vexillary permutation");
    Partition mu = w.shape_mu(), lambda = w.supershape();
    SkewShape sh(lambda, mu);
    std::map<std::vector<int>, UniPoly<Rational>> out;
    for (const Diagram& d : generalized_excited_diagrams(sh)) {
        std::vector<int> exps(static_cast<std::size_t>(lambda.length()), 0);
        for (Cell u : d.cells) ++exps[static_cast<std::size_t>(u.row - 1)];
        auto mono = UniPoly<Rational>::monomial(Rational(1), static_cast<int>(d.size() - mu.size()));
        auto it = out.find(exps);
        if (it == out.end())
            out.emplace(std::move(exps), mono);
        else
            it->second += mono;
    }
    return out;
}

/// Principal specialization Gamma_w(beta) = GG_w(1, 0) as a polynomial in
/// beta, from the generalized-diagram sum.
inline UniPoly<Rational> principal_specialization(const Permutation& w) {
    if (!w.is_vexillary()) throw std::invalid_argument("principal specialization needs a vexillary permutation");
    Partition mu = w.shape_mu(), lambda = w.supershape();
    SkewShape sh(lambda, mu);
    UniPoly<Rational> total;
    for (const Diagram& d : generalized_excited_diagrams(sh))
        total += UniPoly<Rational>::monomial(Rational(1), static_cast<int>(d.size() - mu.size()));
    return total;
}

/// The second summation form: sum over E of beta^{|D|-|mu|} (1+beta)^{|pi(D)|}.
inline UniPoly<Rational> principal_specialization_peaks(const Permutation& w) {
    if (!w.is_vexillary()) throw std::invalid_argument("principal specialization needs a vexillary permutation");
    Partition mu = w.shape_mu(), lambda = w.supershape();
    SkewShape sh(lambda, mu);
    UniPoly<Rational> total;
    UniPoly<Rational> onePlus(std::vector<Rational>{Rational(1), Rational(1)});
    for (const auto& [d, peaks] : excited_peaks(sh)) {
        UniPoly<Rational> term = UniPoly<Rational>::monomial(Rational(1), static_cast<int>(d.size() - mu.size()));
        for (std::size_t i = 0; i < peaks.size(); ++i) term *= onePlus;
        total += term;
    }
    return total;
}

/// Coefficient-wise comparison Gamma_w(beta) <= det[eta_beta(A_i, B_j)].
inline bool gamma_det_bound_holds(const Permutation& w) {
    Partition mu = w.shape_mu(), lambda = w.supershape();
    PathModel model(SkewShape(lambda, mu));
    UniPoly<Rational> gamma = principal_specialization(w);
    UniPoly<Rational> bound = model.det_bound_beta();
    int deg = std::max(gamma.degree(), bound.degree());
    for (int t = 0; t <= deg; ++t)
        if (gamma.coefficient(t) > bound.coefficient(t)) return false;
    return true;
}

/// Gamma_{w(n,k)}(1) against the Schroeder-number determinant.
inline bool gamma_wnk_check(int n, int k) {
    Permutation w = w_nk(n, k);
    if (!w.is_vexillary()) return false;
    UniPoly<Rational> gamma = principal_specialization(w);
    Rational lhs = gamma(Rational(1));
    std::vector<std::vector<long long>> m(static_cast<std::size_t>(k), std::vector<long long>(static_cast<std::size_t>(k)));
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
            m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = schroeder(n - 2 + i + j);
    long long det = det_laplace(m);
    long long denom = 1LL << binomial2(k);
    return det % denom == 0 && lhs == Rational(static_cast<long>(det / denom));
}

}  // namespace hooklab
