#pragma once

/**
 * @file motzkin.hpp
 * @brief Generalized Motzkin numbers, weighted lattice paths, J-fractions.
 *
 * The triangle M_{n,k} is defined by M_{0,0} = 1 and
 *
 *   M_{n+1,k} = M_{n,k-1} + sigma_k M_{n,k} + tau_{k+1} M_{n,k+1},
 *
 * with M_{n,k} = 0 outside 0 <= k <= n. Combinatorially M_{n,k} is the
 * total weight of first-quadrant paths from (0,0) to (n,k) built from
 * horizontal (H), diagonal-up (U) and diagonal-down (D) unit steps. The
 * step weights consistent with the recurrence are
 *
 *   H at height k  -> sigma_k
 *   U              -> 1
 *   D from height k -> tau_k
 *
 * (sigma on the horizontal steps, not the up steps: with sigma = 0 the
 * horizontal steps are eliminated and the column M_{2n,0} reduces to a sum
 * over Dyck paths, which is how the classical Euler-number path model
 * works out).
 *
 * For the column k = 0 the generating function is the J-fraction
 *
 *   sum_n M_{n,0} z^n = 1/(1 - sigma_0 z - tau_1 z^2/(1 - sigma_1 z - ...))
 *
 * which also gives the moments of any random variable whose orthogonal
 * polynomials have recurrence coefficients s_k = sigma_k, t_k = tau_k.
 */

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eulerpath/orthopoly.hpp"
#include "eulerpath/polynomial.hpp"
#include "eulerpath/rational.hpp"
#include "eulerpath/series.hpp"

namespace eulerpath {

/// Weight rules (sigma_k)_{k>=0}, (tau_k)_{k>=1} for the Motzkin triangle
/// and the path model. Mirrors ThreeTermCoeffs, which it coincides with
/// indexwise for moment sequences.
class WeightSpec {
public:
    using Rule = std::function<XPoly(std::size_t)>;

    WeightSpec(Rule sigma, Rule tau) : sigma_(std::move(sigma)), tau_(std::move(tau)) {}

    static WeightSpec unit() {
        return WeightSpec([](std::size_t) { return XPoly(Rational(1)); },
                          [](std::size_t) { return XPoly(Rational(1)); });
    }

    /// sigma_k = x - p/2, tau_k = -k(k+p-1)/4: column 0 is E_n^(p)(x).
    static WeightSpec euler(unsigned p) { return from_coeffs(euler_coeffs(p)); }

    /// sigma_k = x - 1/2, tau_k = -k^4/(4(2k+1)(2k-1)): column 0 is B_n(x).
    static WeightSpec bernoulli() { return from_coeffs(bernoulli_coeffs()); }

    /// sigma_k = 0, tau_k = -k^2/4: column 0 is E_n / 2^n (Dyck paths only).
    static WeightSpec dyck_euler() {
        return WeightSpec([](std::size_t) { return XPoly(); },
                          [](std::size_t k) {
                              const long long kk = static_cast<long long>(k);
                              return XPoly(Rational(-kk * kk, 4));
                          });
    }

    /// sigma_k = 0, tau_k = -k^2: column 0 is the integer Euler numbers.
    static WeightSpec integer_euler() { return from_coeffs(carlitz_coeffs()); }

    static WeightSpec from_coeffs(const ThreeTermCoeffs& c) {
        return WeightSpec([c](std::size_t k) { return c.s(k); },
                          [c](std::size_t k) { return c.t(k); });
    }

    XPoly sigma(std::size_t k) const { return sigma_(k); }

    XPoly tau(std::size_t k) const {
        if (k == 0) throw std::invalid_argument("tau_0 is not part of the weight triple");
        return tau_(k);
    }

private:
    Rule sigma_;
    Rule tau_;
};

/// Triangular table M_{n,k}, 0 <= k <= n <= depth.
class MotzkinTable {
public:
    explicit MotzkinTable(std::size_t depth) : depth_(depth), rows_(depth + 1) {
        for (std::size_t n = 0; n <= depth; ++n) rows_[n].resize(n + 1);
    }

    std::size_t depth() const { return depth_; }

    const XPoly& at(std::size_t n, std::size_t k) const {
        if (n > depth_ || k > n) throw std::out_of_range("Motzkin table index");
        return rows_[n][k];
    }

    /// Column k = 0 as a moment sequence.
    std::vector<XPoly> column0() const {
        std::vector<XPoly> out;
        out.reserve(depth_ + 1);
        for (const auto& row : rows_) out.push_back(row[0]);
        return out;
    }

    friend MotzkinTable motzkin_table(const WeightSpec& w, std::size_t depth);

private:
    std::size_t depth_;
    std::vector<std::vector<XPoly>> rows_;
};

inline MotzkinTable motzkin_table(const WeightSpec& w, std::size_t depth) {
    MotzkinTable table(depth);
    table.rows_[0][0] = XPoly(Rational(1));
    for (std::size_t n = 0; n < depth; ++n) {
        const auto& row = table.rows_[n];
        auto& next = table.rows_[n + 1];
        for (std::size_t k = 0; k <= n + 1; ++k) {
            XPoly acc;
            if (k >= 1 && k - 1 <= n) acc += row[k - 1];
            if (k <= n) acc += w.sigma(k) * row[k];
            if (k + 1 <= n) acc += w.tau(k + 1) * row[k + 1];
            next[k] = std::move(acc);
        }
    }
    return table;
}

/// Column 0 of the Euler-weight triangle: E_0^(p)(x) .. E_N^(p)(x) by the
/// Motzkin recurrence alone.
inline std::vector<XPoly> euler_motzkin(unsigned p, std::size_t n_max) {
    return motzkin_table(WeightSpec::euler(p), n_max).column0();
}

/// Column 0 of the Bernoulli-weight triangle: B_0(x) .. B_N(x).
inline std::vector<XPoly> bernoulli_motzkin(std::size_t n_max) {
    return motzkin_table(WeightSpec::bernoulli(), n_max).column0();
}

/// A first-quadrant H/U/D path, stored as its step string.
struct LatticePath {
    std::string steps;

    bool has_horizontal() const { return steps.find('H') != std::string::npos; }

    /// Heights h_0 = 0 .. h_n; throws if a step is unknown or dips below 0.
    std::vector<std::size_t> heights() const {
        std::vector<std::size_t> h{0};
        for (char c : steps) {
            std::size_t cur = h.back();
            switch (c) {
                case 'H': h.push_back(cur); break;
                case 'U': h.push_back(cur + 1); break;
                case 'D':
                    if (cur == 0) throw std::invalid_argument("path dips below the axis");
                    h.push_back(cur - 1);
                    break;
                default: throw std::invalid_argument("unknown step in path");
            }
        }
        return h;
    }

    friend bool operator==(const LatticePath& a, const LatticePath& b) { return a.steps == b.steps; }
};

namespace detail {

inline void enumerate_paths_rec(std::size_t remaining, std::size_t height, std::size_t target,
                                std::string& acc, std::vector<LatticePath>& out) {
    if (remaining == 0) {
        if (height == target) out.push_back(LatticePath{acc});
        return;
    }
    // Prune branches that can no longer reach the target height.
    const std::size_t dist = height > target ? height - target : target - height;
    if (dist > remaining) return;
    for (char step : {'H', 'U', 'D'}) {  // lexicographic H < U < D
        if (step == 'D' && height == 0) continue;
        acc.push_back(step);
        enumerate_paths_rec(remaining - 1, step == 'U' ? height + 1 : step == 'D' ? height - 1 : height,
                            target, acc, out);
        acc.pop_back();
    }
}

}  // namespace detail

/// All first-quadrant H/U/D paths from (0,0) to (n,k), in lexicographic
/// step order with H < U < D. Exhaustive and duplicate-free.
inline std::vector<LatticePath> enumerate_paths(std::size_t n, std::size_t k) {
    std::vector<LatticePath> out;
    std::string acc;
    acc.reserve(n);
    detail::enumerate_paths_rec(n, 0, k, acc, out);
    return out;
}

/// Product of per-step weights: H at height k carries sigma_k, U carries 1,
/// D from height k carries tau_k.
inline XPoly path_weight(const LatticePath& path, const WeightSpec& w) {
    XPoly acc(Rational(1));
    const auto h = path.heights();
    for (std::size_t j = 0; j < path.steps.size(); ++j) {
        switch (path.steps[j]) {
            case 'H': acc *= w.sigma(h[j]); break;
            case 'U': break;
            case 'D': acc *= w.tau(h[j]); break;
            default: throw std::invalid_argument("unknown step in path");
        }
    }
    return acc;
}

/// True iff the enumerated weighted sum reproduces the table entry M_{n,k}.
inline bool weighted_sum_check(std::size_t n, std::size_t k, const WeightSpec& w) {
    XPoly sum;
    for (const auto& path : enumerate_paths(n, k)) sum += path_weight(path, w);
    return sum == motzkin_table(w, n).at(n, k);
}

/// Expands the truncated J-fraction
///   1/(1 - s_0 z - t_1 z^2/(1 - s_1 z - t_2 z^2/(1 - ...)))
/// to the given order, bottom-up over truncated series. ceil(order/2)
/// levels are evaluated; deeper levels cannot reach z^order.
inline std::vector<XPoly> jfraction_series(const ThreeTermCoeffs& c, std::size_t order) {
    const std::size_t levels = (order + 1) / 2;
    Series frac = Series::constant(XPoly(Rational(1)), order);
    for (std::size_t j = levels; j-- > 0;) {
        Series denom = Series::constant(XPoly(Rational(1)), order);
        if (order >= 1) {
            Series lin(order);
            lin.set_coeff(1, c.s(j));
            denom = denom - lin;
        }
        if (order >= 2) {
            denom = denom - frac.shifted_up(2).scaled(c.t(j + 1));
        }
        frac = denom.inverse();
    }
    return frac.coefficients();
}

}  // namespace eulerpath
