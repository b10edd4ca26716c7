#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "hooklab/diagrams.hpp"
#include "hooklab/grothendieck.hpp"
#include "hooklab/paths.hpp"
#include "hooklab/poly.hpp"
#include "hooklab/sampler.hpp"
#include "hooklab/series.hpp"
#include "hooklab/shapes.hpp"
#include "hooklab/tableaux.hpp"

namespace hooklab {

/// Outcome of one identity verification. Both sides are always computed by
/// independent code paths (tableau side vs diagram/product side); pass means
/// equality under the mode's notion (exact value, exact rational function,
/// coefficientwise series match, or tolerance for the numeric mode).
struct VerificationReport {
    std::string identity;
    std::string shape;
    int d = 0;
    std::string mode;
    int trials = 0;
    std::uint64_t seed = 0;
    int truncation = 0;
    std::string lhs;
    std::string rhs;
    bool pass = false;
    std::string error_bound = "0";
    std::string note;
    double runtime_seconds = 0.0;
};

namespace detail {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

inline int y_span(const SkewShape& sh, int d) { return sh.outer().part(1) + d + 2; }

}  // namespace detail

// ---------------------------------------------------------------------------
// Shared evaluators. The SIT sum is the tableau side of every K-hook formula;
// the diagram sum and closed products are the opposite sides. They share only
// shapes and scalar arithmetic.

/// sum over SIT(lambda/mu) of prod_k ( prod_i (1+b y_{nu_i(T_<k)+d-i+1})/(1+b y_{lambda_i+d-i+1}) - 1 )^{-1}
template <typename K>
K sit_sum(const SkewShape& sh, const EvalContext<K>& ctx) {
    const Partition& lambda = sh.outer();
    if (lambda.length() > ctx.d) throw std::invalid_argument("need d >= l(lambda)");
    K total(0);
    for (const Tableau& t : enum_sit(sh)) {
        K term(1);
        for (int k = 1; k <= t.max_entry(); ++k) {
            K w = wt_ratio(lambda, shape_le(t, k - 1), ctx);
            K f = K(w - K(1));
            if (f == K(0)) throw pole_error("SIT factor vanished");
            term = K(term / f);
        }
        total = K(total + term);
    }
    return total;
}

/// sum over D(lambda/mu) of b^{|D|-|lambda|} prod_{(i,j) in lambda \ D}
/// (1 + b y_{lambda_i+d-i+1}) / (y_{d+j-lambda'_j} - y_{lambda_i+d-i+1})
template <typename K>
K diagram_sum(const SkewShape& sh, const EvalContext<K>& ctx) {
    const Partition& lambda = sh.outer();
    Partition conj = lambda.conjugate();
    K total(0);
    for (const Diagram& dgr : generalized_excited_diagrams(sh)) {
        K term = rat_beta_power(ctx.beta, dgr.size() - lambda.size());
        for (Cell u : lambda.cells()) {
            if (dgr.contains(u)) continue;
            K num = K(K(1) + ctx.beta * ctx.y_at(lambda.part(u.row) + ctx.d - u.row + 1));
            K den = K(ctx.y_at(ctx.d + u.col - conj.part(u.col)) -
                      ctx.y_at(lambda.part(u.row) + ctx.d - u.row + 1));
            if (den == K(0)) throw pole_error("diagram denominator vanished");
            term = K(term * num / den);
        }
        total = K(total + term);
    }
    return total;
}

/// Straight-shape product side:
/// (1/b^n) prod_i (1 + b y_{lambda_i+d-i+1})^{lambda_i} prod_{(i,j)} 1/(y_{d+j-lambda'_j}-y_{lambda_i+d-i+1})
template <typename K>
K straight_product(const Partition& lambda, const EvalContext<K>& ctx) {
    Partition conj = lambda.conjugate();
    K total = rat_beta_power(ctx.beta, -lambda.size());
    for (int i = 1; i <= ctx.d; ++i) {
        K f = K(K(1) + ctx.beta * ctx.y_at(lambda.part(i) + ctx.d - i + 1));
        for (int t = 0; t < lambda.part(i); ++t) total = K(total * f);
    }
    for (Cell u : lambda.cells()) {
        K den = K(ctx.y_at(ctx.d + u.col - conj.part(u.col)) -
                  ctx.y_at(lambda.part(u.row) + ctx.d - u.row + 1));
        if (den == K(0)) throw pole_error("product denominator vanished");
        total = K(total / den);
    }
    return total;
}

/// Tableau side of the q-identities: sum q^{|T|} prod_k 1/(1 - q^{a(T_{>=k})})
/// over SIT(lambda/mu), as an exact rational function of q. This is also the
/// generating function of increasing tableaux I_{lambda/mu}(q).
inline RatFunc<Rational> sit_q_sum(const SkewShape& sh) {
    using Poly = UniPoly<Rational>;
    RatFunc<Rational> total(0);
    for (const Tableau& t : enum_sit(sh)) {
        RatFunc<Rational> term(Poly::monomial(Rational(1), static_cast<int>(t.weight())));
        for (int k = 1; k <= t.max_entry(); ++k) {
            int a = count_ge(t, k);
            term = term / RatFunc<Rational>(Poly(1) - Poly::monomial(Rational(1), a));
        }
        total += term;
    }
    return total;
}

/// Diagram side of the skew q-identity: sum over D of prod q^h/(1-q^h).
inline RatFunc<Rational> diagram_q_sum(const SkewShape& sh) {
    using Poly = UniPoly<Rational>;
    RatFunc<Rational> total(0);
    for (const Diagram& dgr : generalized_excited_diagrams(sh)) {
        RatFunc<Rational> term(1);
        for (Cell u : sh.outer().cells()) {
            if (dgr.contains(u)) continue;
            int h = sh.outer().hook(u);
            term = term * RatFunc<Rational>(Poly::monomial(Rational(1), h),
                                            Poly(1) - Poly::monomial(Rational(1), h));
        }
        total += term;
    }
    return total;
}

/// Excited-diagram-with-peaks form of the same sum. Summing q^h/(1-q^h) over
/// the optional peak inclusions collapses every peak cell to a bare
/// 1/(1-q^h), so the q^h-product runs over lambda minus D minus pi(D):
/// sum over E of prod_{pi(D)} 1/(1-q^h) prod_{lambda \ (D u pi(D))} q^h/(1-q^h).
inline RatFunc<Rational> excited_peaks_q_sum(const SkewShape& sh) {
    using Poly = UniPoly<Rational>;
    RatFunc<Rational> total(0);
    for (const auto& [dgr, peaks] : excited_peaks(sh)) {
        RatFunc<Rational> term(1);
        for (Cell u : peaks) {
            int h = sh.outer().hook(u);
            term = term / RatFunc<Rational>(Poly(1) - Poly::monomial(Rational(1), h));
        }
        for (Cell u : sh.outer().cells()) {
            if (dgr.contains(u) || std::find(peaks.begin(), peaks.end(), u) != peaks.end()) continue;
            int h = sh.outer().hook(u);
            term = term * RatFunc<Rational>(Poly::monomial(Rational(1), h),
                                            Poly(1) - Poly::monomial(Rational(1), h));
        }
        total += term;
    }
    return total;
}

/// Reverse-plane-partition generating function via excited peaks:
/// sum over E of q^{c(D)} prod_{lambda \ D} 1/(1-q^h), c(D) = sum of hooks over pi(D).
inline RatFunc<Rational> rpp_q_sum_excited(const SkewShape& sh) {
    using Poly = UniPoly<Rational>;
    RatFunc<Rational> total(0);
    for (const auto& [dgr, peaks] : excited_peaks(sh)) {
        int c = 0;
        for (Cell u : peaks) c += sh.outer().hook(u);
        RatFunc<Rational> term(Poly::monomial(Rational(1), c));
        for (Cell u : sh.outer().cells()) {
            if (dgr.contains(u)) continue;
            int h = sh.outer().hook(u);
            term = term / RatFunc<Rational>(Poly(1) - Poly::monomial(Rational(1), h));
        }
        total += term;
    }
    return total;
}

/// Pleasant-diagram form: sum over P(lambda/mu) of prod_{(i,j) in S} q^h/(1-q^h).
inline RatFunc<Rational> rpp_q_sum_pleasant(const SkewShape& sh) {
    using Poly = UniPoly<Rational>;
    RatFunc<Rational> total(0);
    for (const auto& cells : pleasant_diagrams(sh)) {
        RatFunc<Rational> term(1);
        for (Cell u : cells) {
            int h = sh.outer().hook(u);
            term = term * RatFunc<Rational>(Poly::monomial(Rational(1), h),
                                            Poly(1) - Poly::monomial(Rational(1), h));
        }
        total += term;
    }
    return total;
}

/// f(1/q) for a rational function of q.
inline RatFunc<Rational> substitute_inverse(const RatFunc<Rational>& f) {
    using Poly = UniPoly<Rational>;
    auto reverse = [](const Poly& p, int upTo) {
        std::vector<Rational> c(static_cast<std::size_t>(upTo) + 1, Rational(0));
        for (int t = 0; t <= p.degree(); ++t) c[static_cast<std::size_t>(upTo - t)] = p.coefficient(t);
        return Poly(std::move(c));
    };
    int m = std::max(f.num().degree(), f.den().degree());
    if (f.is_zero()) return f;
    return RatFunc<Rational>(reverse(f.num(), m), reverse(f.den(), m));
}

// ---------------------------------------------------------------------------
// Straight-shape verifiers

/// f^lambda = n! / prod h(u)
inline VerificationReport verify_hlf(const Partition& lambda) {
    detail::Stopwatch timer;
    VerificationReport rep{.identity = "hlf", .shape = lambda.str(), .mode = "exact-count"};
    long count = static_cast<long>(enum_syt(SkewShape(lambda, Partition())).size());
    Rational rhs = factorial(lambda.size()) / lambda.hook_product();
    rep.lhs = std::to_string(count);
    rep.rhs = to_string(rhs);
    rep.pass = Rational(count) == rhs;
    rep.runtime_seconds = timer.seconds();
    return rep;
}

/// Littlewood: sum over column-strict fillings with entries >= 0 of q^{|T|}
/// equals q^{b(lambda)} prod 1/(1-q^h); enumerated with entries >= 1 and
/// shifted by q^{-n}.
inline VerificationReport verify_qhlf(const Partition& lambda, int order) {
    detail::Stopwatch timer;
    VerificationReport rep{.identity = "q-hlf", .shape = lambda.str(), .mode = "truncated-series"};
    rep.truncation = order;
    long n = lambda.size();
    SkewShape sh(lambda, Partition());
    TruncSeries lhs = TruncSeries::zero(order);
    for (const Tableau& t : enum_weight_bounded(Family::SSYT, sh, order + n))
        lhs.add_term(static_cast<int>(t.weight() - n), Rational(1));
    TruncSeries rhs = TruncSeries::monomial(Rational(1), static_cast<int>(lambda.b_stat()), order);
    for (Cell u : lambda.cells()) rhs *= TruncSeries::geometric(lambda.hook(u), order);
    rep.lhs = lhs.str();
    rep.rhs = rhs.str();
    rep.pass = lhs.agrees_with(rhs, order);
    rep.runtime_seconds = timer.seconds();
    return rep;
}

/// Straight-shape I(q) = q^{s(lambda)} R(q) = q^{s(lambda)} prod 1/(1-q^h).
inline VerificationReport verify_it_rpp(const Partition& lambda, int order) {
    detail::Stopwatch timer;
    VerificationReport rep{.identity = "it-rpp", .shape = lambda.str(), .mode = "truncated-series"};
    rep.truncation = order;
    SkewShape sh(lambda, Partition());
    long s = lambda.s_stat();
    TruncSeries it = TruncSeries::zero(order);
    for (const Tableau& t : enum_weight_bounded(Family::IT, sh, order))
        it.add_term(static_cast<int>(t.weight()), Rational(1));
    TruncSeries rppShifted = TruncSeries::zero(order);
    for (const Tableau& t : enum_weight_bounded(Family::RPP, sh, order - s))
        rppShifted.add_term(static_cast<int>(t.weight() + s), Rational(1));
    TruncSeries hooks = TruncSeries::monomial(Rational(1), static_cast<int>(s), order);
    for (Cell u : lambda.cells()) hooks *= TruncSeries::geometric(lambda.hook(u), order);
    rep.lhs = it.str();
    rep.rhs = hooks.str();
    rep.pass = it.agrees_with(rppShifted, order) && it.agrees_with(hooks, order);
    rep.runtime_seconds = timer.seconds();
    return rep;
}

/// K-theoretic hook-length formula at y_i = i, exact in formal beta.
inline VerificationReport verify_khlf(const Partition& lambda, int d) {
    detail::Stopwatch timer;
    VerificationReport rep{.identity = "k-hlf", .shape = lambda.str(), .d = d, .mode = "exact-beta"};
    using K = BetaFunc;
    SkewShape sh(lambda, Partition());
    auto ctx = natural_context<K>(d, detail::y_span(sh, d), K::variable());
    K lhs = sit_sum(sh, ctx);
    // (1/(-b)^n) prod_i (1 + b(lambda_i+d-i+1))^{lambda_i} prod 1/h
    long n = lambda.size();
    K rhs = rat_beta_power(K(K(0) - K::variable()), -n);
    for (int i = 1; i <= lambda.length(); ++i) {
        K f = K(K(1) + K::variable() * K(lambda.part(i) + d - i + 1));
        for (int t = 0; t < lambda.part(i); ++t) rhs = K(rhs * f);
    }
    rhs = K(rhs / K(lambda.hook_product()));
    rep.lhs = lhs.str("b");
    rep.rhs = rhs.str("b");
    rep.pass = lhs == rhs;
    rep.runtime_seconds = timer.seconds();
    return rep;
}

/// q-analogue over standard increasing tableaux, exact in q:
/// sum q^{|T|} prod 1/(1-q^{a(T>=k)}) = q^{s(lambda)} prod 1/(1-q^h).
inline VerificationReport verify_qkhlf_cor(const Partition& lambda) {
    detail::Stopwatch timer;
    VerificationReport rep{.identity = "q-k-hlf-sit", .shape = lambda.str(), .mode = "exact-q"};
    using Poly = UniPoly<Rational>;
    SkewShape sh(lambda, Partition());
    RatFunc<Rational> lhs = sit_q_sum(sh);
    RatFunc<Rational> rhs(Poly::monomial(Rational(1), static_cast<int>(lambda.s_stat())));
    for (Cell u : lambda.cells())
        rhs = rhs / RatFunc<Rational>(Poly(1) - Poly::monomial(Rational(1), lambda.hook(u)));
    rep.lhs = lhs.str("q");
    rep.rhs = rhs.str("q");
    rep.pass = lhs == rhs;
    rep.runtime_seconds = timer.seconds();
    return rep;
}

/// Multivariate K-HLF at random distinct y points (beta stays formal, so
/// each trial is an exact rational-function identity in beta).
inline VerificationReport verify_khlf_multivariate(const Partition& lambda, int d, int trials,
                                                   std::uint64_t seed) {
    detail::Stopwatch timer;
    VerificationReport rep{.identity = "k-hlf-multivariate", .shape = lambda.str(), .d = d,
                           .mode = "random-multivariate"};
    rep.trials = trials;
    rep.seed = seed;
    SkewShape sh(lambda, Partition());
    int span = detail::y_span(sh, d);
    PointSampler sampler(seed);
    const long bound = 1000000;
    rep.pass = true;
    int resampleBudget = 50;
    {
        // trial 0: the y_i = i point with beta kept formal
        using K = BetaFunc;
        auto ctx = natural_context<K>(d, span, K::variable());
        K lhs = sit_sum(sh, ctx);
        K rhs = straight_product(lambda, ctx);
        rep.lhs = lhs.str("b");
        rep.rhs = rhs.str("b");
        rep.pass = lhs == rhs;
    }
    for (int trial = 1; trial < trials && rep.pass; ++trial) {
        while (true) {
            try {
                EvalContext<Rational> ctx{d, {}, Rational(0)};
                ctx.y = sampler.distinct_family(span, bound);
                ctx.beta = sampler.rational_point(bound);
                rep.pass = rep.pass && sit_sum(sh, ctx) == straight_product(lambda, ctx);
                break;
            } catch (const pole_error&) {
                if (--resampleBudget < 0) throw;
            }
        }
    }
    // Schwartz-Zippel: conservative degree estimate for the cleared identity
    long sitCount = static_cast<long>(enum_sit(sh).size());
    Rational degreeEstimate(4 * (d + 2) * lambda.size() * (sitCount + 1) + 4 * lambda.size() + 8);
    rep.error_bound = to_string(rat_pow(degreeEstimate / bound, trials));
    rep.runtime_seconds = timer.seconds();
    return rep;
}

/// Numeric mode for the infinite increasing-tableau sum. The series
/// converges absolutely exactly when every stay-factor is < 1, i.e. for
/// beta in (-1/(lambda_1+d), 0); other beta report mode-unsupported.
inline VerificationReport verify_infinite_khlf(const Partition& lambda, int d, const Rational& beta,
                                               int truncation, const Rational& tol) {
    detail::Stopwatch timer;
    VerificationReport rep{.identity = "k-hlf-infinite", .shape = lambda.str(), .d = d,
                           .mode = "numeric-truncated"};
    rep.truncation = truncation;
    if (!(beta < 0) || !(Rational(1) + beta * Rational(lambda.part(1) + d) > 0)) {
        rep.pass = false;
        rep.note = "mode unsupported: the increasing-tableau series converges only for beta in (-1/(lambda_1+d), 0)";
        rep.runtime_seconds = timer.seconds();
        return rep;
    }
    SkewShape sh(lambda, Partition());
    auto ctx = natural_context<Rational>(d, detail::y_span(sh, d), beta);

    // Partial sums over increasing tableaux via the gap decomposition: an IT
    // is an SIT plus a nonnegative gap before each entry, a stay at nu(T_<k)
    // weighing r_k = 1/wt(lambda/nu) < 1 in the convergent regime. Bounding
    // every gap by G keeps each tableau's contribution an exact finite
    // geometric sum, and the partial sums increase monotonically to the
    // series value as G grows.
    auto partial = [&](int G) {
        Rational total(0);
        for (const Tableau& t : enum_sit(sh)) {
            Rational term(1);
            for (int k = 1; k <= t.max_entry(); ++k) {
                Rational r = Rational(1) / wt_ratio(lambda, shape_le(t, k - 1), ctx);
                term *= r * (Rational(1) - rat_pow(r, G + 1)) / (Rational(1) - r);
            }
            total += term;
        }
        return total;
    };

    Rational s1 = partial(truncation), s2 = partial(2 * truncation);
    Rational closed = straight_product(lambda, ctx);
    Rational step = s2 - s1, err = s2 - closed;
    auto absQ = [](Rational v) { return v < 0 ? Rational(-v) : v; };
    rep.lhs = to_string(s2);
    rep.rhs = to_string(closed);
    rep.error_bound = to_string(absQ(err));
    rep.pass = absQ(step) < tol && absQ(err) < tol;
    rep.runtime_seconds = timer.seconds();
    return rep;
}

/// q-K-HLF: exact in formal beta at a random rational q, exact in formal q
/// at a random rational beta, plus the beta -> infinity limit against the
/// SIT q-identity.
inline VerificationReport verify_qkhlf(const Partition& lambda, int d, std::uint64_t seed) {
    detail::Stopwatch timer;
    VerificationReport rep{.identity = "q-k-hlf", .shape = lambda.str(), .d = d,
                           .mode = "exact-beta+exact-q"};
    rep.seed = seed;
    using K = BetaFunc;
    SkewShape sh(lambda, Partition());
    int span = detail::y_span(sh, d);
    PointSampler sampler(seed);
    long n = lambda.size();
    Partition conj = lambda.conjugate();
    long mExp = 0;  // m(lambda) = -sum (d + j - lambda'_j)
    for (Cell u : lambda.cells()) mExp -= d + u.col - conj.part(u.col);

    bool pass = true;

    {  // formal beta at rational q
        Rational q = Rational(1) / Rational(1 + sampler.next_int(40));
        EvalContext<K> ctx{d, {}, K::variable()};
        Rational p(1);
        for (int j = 1; j <= span; ++j) {
            p *= q;
            ctx.y.push_back(K(p));
        }
        K lhs = sit_sum(sh, ctx);
        K rhs = rat_beta_power(K::variable(), -n) * K(rat_pow(q, mExp));
        for (int i = 1; i <= lambda.length(); ++i) {
            K f = K(K(1) + K::variable() * K(rat_pow(q, lambda.part(i) + d - i + 1)));
            for (int t = 0; t < lambda.part(i); ++t) rhs = K(rhs * f);
        }
        for (Cell u : lambda.cells()) rhs = K(rhs / K(Rational(1) - rat_pow(q, lambda.hook(u))));
        pass = pass && lhs == rhs;
        rep.lhs = lhs.str("b");
        rep.rhs = rhs.str("b");

        // beta -> infinity recovers the SIT q-identity at the same q
        Rational limit = lhs.limit_at_infinity();
        Rational target(0);
        for (const Tableau& t : enum_sit(sh)) {
            Rational term = rat_pow(q, t.weight());
            for (int k = 1; k <= t.max_entry(); ++k)
                term /= Rational(1) - rat_pow(q, count_ge(t, k));
            target += term;
        }
        pass = pass && limit == target;
    }

    {  // formal q at rational beta
        using Q = RatFunc<Rational>;
        Rational beta = Rational(sampler.next_int(30));
        EvalContext<Q> ctx = geometric_context<Q>(d, span, Q::variable(), Q(beta));
        Q lhs = sit_sum(sh, ctx);
        Q qv = Q::variable();
        Q rhs = rat_beta_power(Q(beta), -n) * qv.pow(mExp);
        for (int i = 1; i <= lambda.length(); ++i) {
            Q f = Q(Q(1) + Q(beta) * qv.pow(lambda.part(i) + d - i + 1));
            for (int t = 0; t < lambda.part(i); ++t) rhs = Q(rhs * f);
        }
        for (Cell u : lambda.cells()) rhs = Q(rhs / (Q(1) - qv.pow(lambda.hook(u))));
        pass = pass && lhs == rhs;
    }

    rep.pass = pass;
    rep.runtime_seconds = timer.seconds();
    return rep;
}

/// Coefficient extraction from beta^n * (SIT sum): the constant term recovers
/// the hook-length formula; the beta^1 coefficient ties standard and barely
/// standard tableaux together. Three routes must agree: Laurent extraction,
/// the SYT/BSYT combinatorial sum, and the product side.
inline VerificationReport verify_beta_coefficients(const Partition& lambda, int d) {
    detail::Stopwatch timer;
    VerificationReport rep{.identity = "beta-coefficients", .shape = lambda.str(), .d = d,
                           .mode = "exact-beta"};
    using K = BetaFunc;
    using Poly = UniPoly<Rational>;
    SkewShape sh(lambda, Partition());
    long n = lambda.size();
    auto ctx = natural_context<K>(d, detail::y_span(sh, d), K::variable());
    K normalized = sit_sum(sh, ctx) * K(Poly::monomial(Rational(1), static_cast<int>(n)));

    Rational sign = (n % 2 == 0) ? Rational(1) : Rational(-1);
    Rational c0 = normalized.laurent_coefficient(0);
    Rational c1 = normalized.laurent_coefficient(1);

    long fLambda = static_cast<long>(enum_syt(sh).size());
    bool hlfRecovered = sign * c0 * factorial(n) == Rational(fLambda) &&
                        Rational(fLambda) == factorial(n) / lambda.hook_product();

    // P2(kappa) = sum_i (kappa_i + d - i + 1)^2
    auto p2 = [&](const Partition& kappa) {
        Rational acc(0);
        for (int i = 1; i <= d; ++i) {
            Rational v(kappa.part(i) + d - i + 1);
            acc += v * v;
        }
        return acc;
    };

    // Laurent route
    Rational routeA = sign * factorial(n) * c1;
    // SYT/BSYT route:
    //   1/2 f h_n P2(lambda) + 1/4 f n(n+1)
    //   - 1/2 sum_{nu < lambda} f^nu f^{lambda/nu} P2(nu)/(n-|nu|)
    //   - sum_k (n-k) |BSYT_k(lambda)|
    Rational routeB = Rational(fLambda) * harmonic(n) * p2(lambda) / 2 +
                      Rational(fLambda) * Rational(n) * Rational(n + 1) / 4;
    for (const Partition& nu : subdiagrams(lambda)) {
        if (nu == lambda) continue;
        long fNu = static_cast<long>(enum_syt(SkewShape(nu, Partition())).size());
        long fSkew = static_cast<long>(enum_syt(SkewShape(lambda, nu)).size());
        routeB -= Rational(fNu) * Rational(fSkew) * p2(nu) / (Rational(2) * Rational(n - nu.size()));
    }
    for (int k = 1; k < n; ++k)
        routeB -= Rational(n - k) * Rational(static_cast<long>(enum_bsyt_k(sh, k).size()));
    // product route: f sum_i lambda_i (lambda_i + d - i + 1)
    Rational routeC(0);
    for (int i = 1; i <= lambda.length(); ++i)
        routeC += Rational(lambda.part(i)) * Rational(lambda.part(i) + d - i + 1);
    routeC *= fLambda;

    rep.lhs = to_string(routeA);
    rep.rhs = to_string(routeB) + " | " + to_string(routeC);
    rep.pass = hlfRecovered && routeA == routeB && routeA == routeC;
    rep.runtime_seconds = timer.seconds();
    return rep;
}

// ---------------------------------------------------------------------------
// Skew-shape verifiers

/// Naruse: f^{lambda/mu} = n! sum over excited diagrams of prod 1/h.
inline VerificationReport verify_nhlf(const SkewShape& sh) {
    detail::Stopwatch timer;
    VerificationReport rep{.identity = "nhlf", .shape = sh.str(), .mode = "exact-count"};
    long count = static_cast<long>(enum_syt(sh).size());
    Rational rhs(0);
    for (const Diagram& dgr : excited_diagrams(sh)) {
        Rational term(1);
        for (Cell u : sh.outer().cells())
            if (!dgr.contains(u)) term /= sh.outer().hook(u);
        rhs += term;
    }
    rhs *= factorial(sh.size());
    rep.lhs = std::to_string(count);
    rep.rhs = to_string(rhs);
    rep.pass = Rational(count) == rhs;
    rep.runtime_seconds = timer.seconds();
    return rep;
}

/// Skew Littlewood: sum over column-strict fillings (entries >= 0) of
/// q^{|T|} = sum over excited diagrams of prod q^{lambda'_j - i}/(1 - q^h).
inline VerificationReport verify_qnhlf(const SkewShape& sh, int order) {
    detail::Stopwatch timer;
    VerificationReport rep{.identity = "q-nhlf", .shape = sh.str(), .mode = "truncated-series"};
    rep.truncation = order;
    long n = sh.size();
    TruncSeries lhs = TruncSeries::zero(order);
    for (const Tableau& t : enum_weight_bounded(Family::SSYT, sh, order + n))
        lhs.add_term(static_cast<int>(t.weight() - n), Rational(1));
    Partition conj = sh.outer().conjugate();
    TruncSeries rhs = TruncSeries::zero(order);
    for (const Diagram& dgr : excited_diagrams(sh)) {
        TruncSeries term = TruncSeries::constant(Rational(1), order);
        for (Cell u : sh.outer().cells()) {
            if (dgr.contains(u)) continue;
            term *= TruncSeries::monomial(Rational(1), conj.part(u.col) - u.row, order);
            term *= TruncSeries::geometric(sh.outer().hook(u), order);
        }
        rhs += term;
    }
    rep.lhs = lhs.str();
    rep.rhs = rhs.str();
    rep.pass = lhs.agrees_with(rhs, order);
    rep.runtime_seconds = timer.seconds();
    return rep;
}

/// Reverse plane partitions of skew shape: the pleasant-diagram sum and the
/// excited-peaks sum both reproduce the enumeration, and the increasing
/// tableau generating function satisfies the reciprocity
/// I(q) = (-1)^n q^N R(1/q) with N >= 0 recovered as the degree offset.
inline VerificationReport verify_rpp_formulas(const SkewShape& sh, int order) {
    detail::Stopwatch timer;
    VerificationReport rep{.identity = "rpp-skew", .shape = sh.str(), .mode = "truncated-series"};
    rep.truncation = order;
    TruncSeries rpp = TruncSeries::zero(order);
    for (const Tableau& t : enum_weight_bounded(Family::RPP, sh, order))
        rpp.add_term(static_cast<int>(t.weight()), Rational(1));
    RatFunc<Rational> pleasant = rpp_q_sum_pleasant(sh);
    RatFunc<Rational> peaksForm = rpp_q_sum_excited(sh);
    bool pass = rpp.agrees_with(TruncSeries::expand(pleasant, order), order) &&
                rpp.agrees_with(TruncSeries::expand(peaksForm, order), order) &&
                pleasant == peaksForm;

    // IT series from enumeration agrees with the SIT-sum rational function
    TruncSeries it = TruncSeries::zero(order);
    for (const Tableau& t : enum_weight_bounded(Family::IT, sh, order))
        it.add_term(static_cast<int>(t.weight()), Rational(1));
    RatFunc<Rational> itExact = sit_q_sum(sh);
    pass = pass && it.agrees_with(TruncSeries::expand(itExact, order), order);

    // reciprocity between the increasing and weak generating functions
    long n = sh.size();
    RatFunc<Rational> ratio = itExact / substitute_inverse(pleasant);
    auto [coef, deg] = ratio.as_monomial();
    Rational sign = (n % 2 == 0) ? Rational(1) : Rational(-1);
    pass = pass && coef == sign && deg >= 0;
    rep.note = "reciprocity offset N = " + std::to_string(deg);
    rep.lhs = rpp.str();
    rep.rhs = peaksForm.str("q");
    rep.pass = pass;
    rep.runtime_seconds = timer.seconds();
    return rep;
}

/// Skew K-theoretic hook formula at y_i = i, exact in formal beta:
/// SIT sum = sum over D of (-b)^{|D|-|lambda|} prod (1 + b(lambda_i+d-i+1))/h.
inline VerificationReport verify_knhlf(const SkewShape& sh, int d) {
    detail::Stopwatch timer;
    VerificationReport rep{.identity = "k-nhlf", .shape = sh.str(), .d = d, .mode = "exact-beta"};
    using K = BetaFunc;
    auto ctx = natural_context<K>(d, detail::y_span(sh, d), K::variable());
    K lhs = sit_sum(sh, ctx);
    const Partition& lambda = sh.outer();
    K minusBeta = K(K(0) - K::variable());
    K rhs(0);
    for (const Diagram& dgr : generalized_excited_diagrams(sh)) {
        K term = rat_beta_power(minusBeta, dgr.size() - lambda.size());
        for (Cell u : lambda.cells()) {
            if (dgr.contains(u)) continue;
            K num = K(K(1) + K::variable() * K(lambda.part(u.row) + d - u.row + 1));
            term = K(term * num / K(lambda.hook(u)));
        }
        rhs = K(rhs + term);
    }
    rep.lhs = lhs.str("b");
    rep.rhs = rhs.str("b");
    rep.pass = lhs == rhs;
    rep.runtime_seconds = timer.seconds();
    return rep;
}

/// Exact q-identity for skew shapes: the SIT q-sum equals the generalized
/// diagram sum and the excited-peaks rewriting.
inline VerificationReport verify_skew_q(const SkewShape& sh) {
    detail::Stopwatch timer;
    VerificationReport rep{.identity = "skew-q", .shape = sh.str(), .mode = "exact-q"};
    RatFunc<Rational> lhs = sit_q_sum(sh);
    RatFunc<Rational> rhs = diagram_q_sum(sh);
    RatFunc<Rational> rhsPeaks = excited_peaks_q_sum(sh);
    rep.lhs = lhs.str("q");
    rep.rhs = rhs.str("q");
    rep.pass = lhs == rhs && lhs == rhsPeaks;
    rep.runtime_seconds = timer.seconds();
    return rep;
}

/// Evaluation of G_mu at the vanishing point of lambda as a diagram sum
/// (the equivariant Chevalley bridge), with the beta = -1 specialization
/// cross-checked in plain rational arithmetic.
inline VerificationReport verify_skew_chevalley(const SkewShape& sh, int d, int trials,
                                                std::uint64_t seed) {
    detail::Stopwatch timer;
    VerificationReport rep{.identity = "skew-chevalley", .shape = sh.str(), .d = d,
                           .mode = "random-multivariate"};
    rep.trials = trials;
    rep.seed = seed;
    const Partition& lambda = sh.outer();
    const Partition& mu = sh.inner();
    Partition conj = lambda.conjugate();
    PointSampler sampler(seed);
    const long bound = 1000000;
    int span = detail::y_span(sh, d);
    bool pass = true;
    int resampleBudget = 60;

    auto diagramSide = [&](auto&& ctx) {
        using K = std::decay_t<decltype(ctx.beta)>;
        K total(0);
        for (const Diagram& dgr : generalized_excited_diagrams(sh)) {
            K term = rat_beta_power(ctx.beta, dgr.size() - mu.size());
            for (Cell u : dgr.cells)
                term = K(term * ominus(ctx.y_at(d + u.col - conj.part(u.col)),
                                       ctx.y_at(lambda.part(u.row) + d - u.row + 1), ctx.beta));
            total = K(total + term);
        }
        return total;
    };

    {
        // trial 0: y_i = i with beta formal
        using K = BetaFunc;
        auto ctx = natural_context<K>(d, span, K::variable());
        K lhs = g_tableau(mu, y_lambda_point(lambda, ctx), ctx);
        K rhs = diagramSide(ctx);
        rep.lhs = lhs.str("b");
        rep.rhs = rhs.str("b");
        pass = lhs == rhs;
    }
    for (int trial = 1; trial < trials && pass; ++trial) {
        while (true) {
            try {
                EvalContext<Rational> ctx{d, {}, Rational(0)};
                ctx.y = sampler.distinct_family(span, bound);
                ctx.beta = sampler.rational_point(bound);
                Rational lhs = g_tableau(mu, y_lambda_point(lambda, ctx), ctx);
                pass = pass && lhs == diagramSide(ctx);
                break;
            } catch (const pole_error&) {
                if (--resampleBudget < 0) throw;
            }
        }
        while (true) {
            try {
                // beta = -1 form with the bare (y_a - y_b)/(1 - y_b) factors;
                // needs its own points since y_i = i puts a pole at y_1
                EvalContext<Rational> flat{d, {}, Rational(-1)};
                flat.y = sampler.distinct_family(span, bound);
                Rational lhsFlat = g_tableau(mu, y_lambda_point(lambda, flat), flat);
                Rational rhsFlat(0);
                for (const Diagram& dgr : generalized_excited_diagrams(sh)) {
                    Rational term = (dgr.size() - mu.size()) % 2 == 0 ? Rational(1) : Rational(-1);
                    for (Cell u : dgr.cells) {
                        Rational yb = flat.y_at(lambda.part(u.row) + d - u.row + 1);
                        Rational den = Rational(1) - yb;
                        if (den == 0) throw pole_error("beta=-1 denominator vanished");
                        term *= (flat.y_at(d + u.col - conj.part(u.col)) - yb) / den;
                    }
                    rhsFlat += term;
                }
                pass = pass && lhsFlat == rhsFlat;
                break;
            } catch (const pole_error&) {
                if (--resampleBudget < 0) throw;
            }
        }
    }
    long dCount = static_cast<long>(generalized_excited_diagrams(sh).size());
    Rational degreeEstimate(4 * (d + 2) * (lambda.size() + 1) * (dCount + 1) + 8);
    rep.error_bound = to_string(rat_pow(degreeEstimate / bound, trials));
    rep.pass = pass;
    rep.runtime_seconds = timer.seconds();
    return rep;
}

/// Multivariate skew identity at random y points, beta formal.
inline VerificationReport verify_knhlf_multivariate(const SkewShape& sh, int d, int trials,
                                                    std::uint64_t seed) {
    detail::Stopwatch timer;
    VerificationReport rep{.identity = "k-nhlf-multivariate", .shape = sh.str(), .d = d,
                           .mode = "random-multivariate"};
    rep.trials = trials;
    rep.seed = seed;
    int span = detail::y_span(sh, d);
    PointSampler sampler(seed);
    const long bound = 1000000;
    bool pass = true;
    int resampleBudget = 50;
    {
        // trial 0: y_i = i with beta formal
        using K = BetaFunc;
        auto ctx = natural_context<K>(d, span, K::variable());
        K lhs = sit_sum(sh, ctx);
        K rhs = diagram_sum(sh, ctx);
        rep.lhs = lhs.str("b");
        rep.rhs = rhs.str("b");
        pass = lhs == rhs;
    }
    for (int trial = 1; trial < trials && pass; ++trial) {
        while (true) {
            try {
                EvalContext<Rational> ctx{d, {}, Rational(0)};
                ctx.y = sampler.distinct_family(span, bound);
                ctx.beta = sampler.rational_point(bound);
                pass = pass && sit_sum(sh, ctx) == diagram_sum(sh, ctx);
                break;
            } catch (const pole_error&) {
                if (--resampleBudget < 0) throw;
            }
        }
    }
    long sitCount = static_cast<long>(enum_sit(sh).size());
    Rational degreeEstimate(4 * (d + 2) * sh.outer().size() * (sitCount + 1) + 8);
    rep.error_bound = to_string(rat_pow(degreeEstimate / bound, trials));
    rep.pass = pass;
    rep.runtime_seconds = timer.seconds();
    return rep;
}

/// q-analogue of the skew identity: y_j = q^j. Exact in formal beta at one
/// random rational q, then random rational (q, beta) points.
inline VerificationReport verify_qknhlf(const SkewShape& sh, int d, int trials, std::uint64_t seed) {
    detail::Stopwatch timer;
    VerificationReport rep{.identity = "q-k-nhlf", .shape = sh.str(), .d = d,
                           .mode = "exact-beta+random-multivariate"};
    rep.seed = seed;
    rep.trials = trials;
    PointSampler sampler(seed);
    int span = detail::y_span(sh, d);
    bool pass = true;
    {  // formal beta, rational q
        using K = BetaFunc;
        Rational q = Rational(1) / Rational(1 + sampler.next_int(40));
        EvalContext<K> ctx{d, {}, K::variable()};
        Rational p(1);
        for (int j = 1; j <= span; ++j) {
            p *= q;
            ctx.y.push_back(K(p));
        }
        K lhs = sit_sum(sh, ctx);
        K rhs = diagram_sum(sh, ctx);
        rep.lhs = lhs.str("b");
        rep.rhs = rhs.str("b");
        pass = pass && lhs == rhs;
    }
    int resampleBudget = 50;
    const long bound = 1000000;
    for (int trial = 1; trial < trials && pass; ++trial) {
        while (true) {
            try {
                Rational q = Rational(sampler.next_int(bound)) / Rational(bound + 1);
                EvalContext<Rational> ctx{d, {}, sampler.rational_point(bound)};
                Rational p(1);
                for (int j = 1; j <= span; ++j) {
                    p *= q;
                    ctx.y.push_back(p);
                }
                pass = pass && sit_sum(sh, ctx) == diagram_sum(sh, ctx);
                break;
            } catch (const pole_error&) {
                if (--resampleBudget < 0) throw;
            }
        }
    }
    long sitCount = static_cast<long>(enum_sit(sh).size());
    Rational degreeEstimate(8 * (d + 2) * (sh.outer().size() + 1) * (sitCount + 1) + 8);
    rep.error_bound = to_string(rat_pow(degreeEstimate / bound, std::max(1, trials - 1)));
    rep.pass = pass;
    rep.runtime_seconds = timer.seconds();
    return rep;
}

/// Okounkov-Olshanski: f^{lambda/mu} = n! sum over SSYT_d(mu) of
/// prod_{(i,j) in mu} (lambda_{d+1-T(i,j)} + i - j) prod_{lambda} 1/h.
inline VerificationReport verify_oof(const SkewShape& sh, int d) {
    detail::Stopwatch timer;
    VerificationReport rep{.identity = "oof", .shape = sh.str(), .d = d, .mode = "exact-count"};
    const Partition& lambda = sh.outer();
    const Partition& mu = sh.inner();
    long count = static_cast<long>(enum_syt(sh).size());
    SkewShape muShape(mu, Partition());
    auto muCells = muShape.cells();
    Rational sum(0);
    for (const Tableau& t : enum_ssyt_maxentry(muShape, d)) {
        Rational term(1);
        for (std::size_t i = 0; i < muCells.size(); ++i) {
            int r = t.entries()[i];
            term *= Rational(lambda.part(d + 1 - r) + muCells[i].row - muCells[i].col);
        }
        sum += term;
    }
    Rational rhs = factorial(sh.size()) * sum / lambda.hook_product();
    rep.lhs = std::to_string(count);
    rep.rhs = to_string(rhs);
    rep.pass = Rational(count) == rhs;
    rep.runtime_seconds = timer.seconds();
    return rep;
}

/// K-theoretic Okounkov-Olshanski, exact in formal beta; its left side is the
/// same SIT sum as the skew hook formula, its right side runs over set-valued
/// tableaux of the inner shape.
inline VerificationReport verify_koof(const SkewShape& sh, int d) {
    detail::Stopwatch timer;
    VerificationReport rep{.identity = "k-oof", .shape = sh.str(), .d = d, .mode = "exact-beta"};
    using K = BetaFunc;
    const Partition& lambda = sh.outer();
    const Partition& mu = sh.inner();
    auto ctx = natural_context<K>(d, detail::y_span(sh, d), K::variable());
    K lhs = sit_sum(sh, ctx);

    K beta = K::variable();
    K minusBeta = K(K(0) - beta);
    SkewShape muShape(mu, Partition());
    auto muCells = muShape.cells();
    K sum(0);
    for (const SetValuedTableau& t : enum_ssvt(muShape, d)) {
        K term = rat_beta_power(minusBeta, t.num_entries() - lambda.size());
        for (std::size_t i = 0; i < muCells.size(); ++i)
            for (int r : t.sets()[i]) {
                K num(lambda.part(d + 1 - r) + muCells[i].row - muCells[i].col);
                K den = K(K(1) + beta * K(lambda.part(d + 1 - r) + r));
                term = K(term * num / den);
            }
        sum = K(sum + term);
    }
    K rhs = sum / K(lambda.hook_product());
    for (int i = 1; i <= lambda.length(); ++i) {
        K f = K(K(1) + beta * K(lambda.part(i) + d - i + 1));
        for (int t = 0; t < lambda.part(i); ++t) rhs = K(rhs * f);
    }
    rep.lhs = lhs.str("b");
    rep.rhs = rhs.str("b");
    rep.pass = lhs == rhs;
    rep.runtime_seconds = timer.seconds();
    return rep;
}

/// Vanishing of G_mu at the evaluation point of lambda (zero unless mu is
/// contained in lambda; the explicit product at mu = lambda), at random
/// points.
inline VerificationReport verify_vanishing(const Partition& mu, const Partition& lambda, int d,
                                           int trials, std::uint64_t seed) {
    detail::Stopwatch timer;
    VerificationReport rep{.identity = "vanishing", .shape = mu.str() + " @ " + lambda.str(),
                           .d = d, .mode = "random-multivariate"};
    rep.trials = trials;
    rep.seed = seed;
    if (lambda.length() > d) throw std::invalid_argument("need l(lambda) <= d");
    bool contained = lambda.contains(mu);
    if (contained && !(mu == lambda))
        throw std::invalid_argument("vanishing covers mu not contained in lambda, or mu = lambda");
    PointSampler sampler(seed);
    const long bound = 1000000;
    int span = std::max(lambda.part(1), mu.part(1)) + d + 2;
    bool pass = true;
    int resampleBudget = 50;
    for (int trial = 0; trial < trials && pass; ++trial) {
        while (true) {
            try {
                EvalContext<Rational> ctx{d, {}, Rational(0)};
                ctx.y = sampler.distinct_family(span, bound);
                ctx.beta = Rational(sampler.next_int(60));
                auto x = y_lambda_point(lambda, ctx);
                Rational val = g_tableau(mu, x, ctx);
                Rational expect = mu == lambda ? ic_product(lambda, ctx) : Rational(0);
                if (trial == 0) {
                    rep.lhs = to_string(val);
                    rep.rhs = to_string(expect);
                }
                pass = pass && val == expect;
                break;
            } catch (const pole_error&) {
                if (--resampleBudget < 0) throw;
            }
        }
    }
    Rational degreeEstimate(8 * (d + 2) * (mu.size() + lambda.size() + 2));
    rep.error_bound = to_string(rat_pow(degreeEstimate / bound, trials));
    rep.pass = pass;
    rep.runtime_seconds = timer.seconds();
    return rep;
}

/// Pieri rule residuals at random points (all three forms).
inline VerificationReport verify_pieri(const Partition& mu, int d, int trials, std::uint64_t seed) {
    detail::Stopwatch timer;
    VerificationReport rep{.identity = "pieri", .shape = mu.str(), .d = d,
                           .mode = "random-multivariate"};
    rep.trials = trials;
    rep.seed = seed;
    PointSampler sampler(seed);
    const long bound = 1000000;
    int span = mu.part(1) + d + 4;
    bool pass = true;
    int resampleBudget = 50;
    for (int trial = 0; trial < trials && pass; ++trial) {
        while (true) {
            try {
                EvalContext<Rational> ctx{d, {}, Rational(0)};
                ctx.y = sampler.distinct_family(span, bound);
                ctx.beta = Rational(sampler.next_int(60));
                std::vector<Rational> x = sampler.distinct_family(d, bound);
                Rational r1 = pieri_residual(mu, x, ctx);
                Rational r2 = pieri_residual_rewritten(mu, x, ctx);
                pass = pass && r1 == 0 && r2 == 0;
                // evaluated form, against the lambda that adds one box on top
                // of every addable row of mu
                std::vector<int> lp;
                for (int i = 1; i <= std::min(d, mu.length() + 1); ++i) lp.push_back(mu.part(i) + 1);
                Partition lambda(std::move(lp));
                Rational r3 = pieri_residual_at_lambda(lambda, mu, ctx);
                pass = pass && r3 == 0;
                if (trial == 0) {
                    rep.lhs = to_string(r1);
                    rep.rhs = "0";
                }
                break;
            } catch (const pole_error&) {
                if (--resampleBudget < 0) throw;
            }
        }
    }
    Rational degreeEstimate(16 * (d + 2) * (mu.size() + 4));
    rep.error_bound = to_string(rat_pow(degreeEstimate / bound, trials));
    rep.pass = pass;
    rep.runtime_seconds = timer.seconds();
    return rep;
}

/// Bundle of structural properties of the factorial Grothendieck polynomial:
/// tableau/determinant agreement, symmetry, classical reductions, and the
/// rescaling identity, at random points.
inline VerificationReport verify_g_properties(const Partition& mu, int d, int trials,
                                              std::uint64_t seed) {
    detail::Stopwatch timer;
    VerificationReport rep{.identity = "g-properties", .shape = mu.str(), .d = d,
                           .mode = "random-multivariate"};
    rep.trials = trials;
    rep.seed = seed;
    PointSampler sampler(seed);
    const long bound = 1000000;
    int span = mu.part(1) + d + 3;
    bool pass = true;
    int resampleBudget = 60;
    for (int trial = 0; trial < trials && pass; ++trial) {
        while (true) {
            try {
                EvalContext<Rational> ctx{d, {}, Rational(0)};
                ctx.y = sampler.distinct_family(span, bound);
                ctx.beta = Rational(sampler.next_int(40));
                std::vector<Rational> x = sampler.distinct_family(d, bound);
                Rational viaTab = g_tableau(mu, x, ctx);
                pass = pass && viaTab == g_determinant(mu, x, ctx);
                std::vector<Rational> xs = x;
                std::rotate(xs.begin(), xs.begin() + 1, xs.end());
                pass = pass && viaTab == g_tableau(mu, xs, ctx);

                EvalContext<Rational> beta0{d, {}, Rational(0)};
                for (const Rational& v : ctx.y) beta0.y.push_back(-v);
                EvalContext<Rational> plain{d, ctx.y, Rational(0)};
                pass = pass && g_tableau(mu, x, beta0) == factorial_schur(mu, x, plain);

                // rescaling towards beta = -1
                EvalContext<Rational> atMinusOne{d, ctx.y, Rational(-1)};
                EvalContext<Rational> scaled{d, {}, ctx.beta};
                for (const Rational& v : ctx.y) scaled.y.push_back(-v / ctx.beta);
                std::vector<Rational> xScaled;
                for (const Rational& v : x) xScaled.push_back(-v / ctx.beta);
                Rational lhs = g_tableau(mu, x, atMinusOne);
                Rational rhs = rat_pow(-ctx.beta, mu.size()) * g_tableau(mu, xScaled, scaled);
                pass = pass && lhs == rhs;
                if (trial == 0) {
                    rep.lhs = to_string(viaTab);
                    rep.rhs = to_string(viaTab);
                }
                break;
            } catch (const pole_error&) {
                if (--resampleBudget < 0) throw;
            }
        }
    }
    Rational degreeEstimate(16 * (d + 2) * (mu.size() + 2));
    rep.error_bound = to_string(rat_pow(degreeEstimate / bound, trials));
    rep.pass = pass;
    rep.runtime_seconds = timer.seconds();
    return rep;
}

}  // namespace hooklab
