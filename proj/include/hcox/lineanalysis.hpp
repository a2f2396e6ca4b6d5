#pragma once

// One-dimensional sections of Q2(n): the real-axis point set L(n), its
// closed form, the brute-force multiset construction, 1D cut-and-project
// comparison, and the decomposition of planar points along two root lines.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hcox/fragment.hpp"
#include "hcox/golden.hpp"

namespace hcox {

namespace detail {

inline void sort_real(std::vector<GoldenInt>& v) {
    std::sort(v.begin(), v.end(), RealLess{});
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace detail

/// Values gamma in Z[tau], sorted by real value.
struct LineSet {
    int n = 0;
    std::vector<GoldenInt> values;

    std::size_t size() const { return values.size(); }
    bool contains(GoldenInt x) const { return std::binary_search(values.begin(), values.end(), x, RealLess{}); }
    friend bool operator==(const LineSet& x, const LineSet& y) { return x.values == y.values; }
};

/// Closed interval with exact endpoints.
struct Window1D {
    GoldenInt lo;
    GoldenInt hi;

    static Window1D symmetric(Int n) { return {GoldenInt{-n}, GoldenInt{n}}; }
    bool contains(GoldenInt x) const { return real_leq(lo, x) && real_leq(x, hi); }
};

/// Minimal |a| + 2|b| + 2|c| over all (a, b, c) with (a + c) + (b - c) tau = y.
/// The cost is piecewise linear and convex in c with breakpoints y1, -y2, 0.
inline Int line_cost(GoldenInt y) {
    const Int y1 = y.a();
    const Int y2 = y.b();
    auto cost = [&](Int c) {
        return std::abs(checked::sub(y1, c)) + 2 * std::abs(checked::add(y2, c)) + 2 * std::abs(c);
    };
    return std::min({cost(0), cost(y1), cost(checked::neg(y2))});
}

/// {(a + c) + (b - c) tau : |a| + 2|b| + 2|c| <= n}
inline LineSet line_closed_form(int n) {
    if (n < 0) throw std::invalid_argument("hcox: n must be non-negative");
    std::vector<GoldenInt> vals;
    for (Int b = -n / 2; b <= n / 2; ++b)
        for (Int c = -n / 2; c <= n / 2; ++c) {
            const Int rest = n - 2 * std::abs(b) - 2 * std::abs(c);
            if (rest < 0) continue;
            for (Int a = -rest; a <= rest; ++a) vals.emplace_back(a + c, b - c);
        }
    detail::sort_real(vals);
    return {n, std::move(vals)};
}

/// Sums of at most n roots xi^j that land on the real axis.
inline LineSet line_bruteforce(int n) {
    if (n < 0) throw std::invalid_argument("hcox: n must be non-negative");
    std::array<CycloInt, 10> rts;
    for (int j = 0; j < 10; ++j) rts[static_cast<std::size_t>(j)] = CycloInt::xi_pow(j);

    std::unordered_set<GoldenInt> found;
    std::vector<CycloInt> partial{CycloInt{}};
    auto visit = [&](const CycloInt& s) {
        if (s.is_real()) found.insert(s.p());
    };
    visit(CycloInt{});
    // multisets as non-decreasing index sequences of length <= n
    auto recurse = [&](auto&& self, int start, int depth) -> void {
        if (depth == n) return;
        for (int j = start; j < 10; ++j) {
            const CycloInt s = partial.back() + rts[static_cast<std::size_t>(j)];
            visit(s);
            partial.push_back(s);
            self(self, j, depth + 1);
            partial.pop_back();
        }
    };
    recurse(recurse, 0, 0);
    std::vector<GoldenInt> vals(found.begin(), found.end());
    detail::sort_real(vals);
    return {n, std::move(vals)};
}

/// Real-axis section of an H2 fragment, as exact Z[tau] values.
inline LineSet line_from_fragment(const Fragment& f) {
    std::vector<GoldenInt> vals;
    for (const auto& x : cyclo_points(f))
        if (x.is_real()) vals.push_back(x.p());
    detail::sort_real(vals);
    return {f.n, std::move(vals)};
}

struct Level {
    int level = 0;
    std::vector<GoldenInt> points;
};

/// Points of level m = L(m) \ L(m-1), m = 0..n.
inline std::vector<Level> levels(int n) {
    std::vector<Level> out;
    LineSet prev;
    for (int m = 0; m <= n; ++m) {
        LineSet cur = line_closed_form(m);
        Level lv{m, {}};
        for (const auto& x : cur.values)
            if (m == 0 || !prev.contains(x)) lv.points.push_back(x);
        out.push_back(std::move(lv));
        prev = std::move(cur);
    }
    return out;
}

/// {x in Z[tau] : x in region, x' in window}.
inline std::vector<GoldenInt> sigma_1d(const Window1D& window, const Window1D& region) {
    const double sqrt5 = std::sqrt(5.0);
    // x - x' = x2 sqrt5
    const double x2_lo = (region.lo.value() - window.hi.value()) / sqrt5;
    const double x2_hi = (region.hi.value() - window.lo.value()) / sqrt5;
    std::vector<GoldenInt> out;
    for (Int x2 = static_cast<Int>(std::floor(x2_lo)) - 1; x2 <= static_cast<Int>(std::ceil(x2_hi)) + 1; ++x2) {
        const double t = static_cast<double>(x2) * kTau;
        const Int x1_lo = static_cast<Int>(std::floor(region.lo.value() - t)) - 1;
        const Int x1_hi = static_cast<Int>(std::ceil(region.hi.value() - t)) + 1;
        for (Int x1 = x1_lo; x1 <= x1_hi; ++x1) {
            const GoldenInt x{x1, x2};
            if (region.contains(x) && window.contains(x.conj())) out.push_back(x);
        }
    }
    detail::sort_real(out);
    return out;
}

/// Sigma([-n, n]) cap [-n, n] minus L(n).
inline std::vector<GoldenInt> deficiencies_1d(int n) {
    const auto line = line_closed_form(n);
    const auto w = Window1D::symmetric(n);
    std::vector<GoldenInt> out;
    for (const auto& x : sigma_1d(w, w))
        if (!line.contains(x)) out.push_back(x);
    return out;
}

struct MnNn {
    Int m = 0;
    Int n = 0;
};

/// M_n = max (b - c) over 2|b| + 2|c| <= n, and N_n = floor((2n - 1)/sqrt5).
inline MnNn mn_nn(int n) {
    if (n < 1) throw std::invalid_argument("hcox: n must be at least 1");
    MnNn r;
    r.m = n % 2 == 0 ? n / 2 : (n - 1) / 2;
    // largest k >= 0 with 5 k^2 <= (2n - 1)^2
    const Int num = 2 * static_cast<Int>(n) - 1;
    Int k = static_cast<Int>(std::floor(static_cast<double>(num) / std::sqrt(5.0)));
    while (checked::mul(5, checked::mul(k + 1, k + 1)) <= checked::mul(num, num)) ++k;
    while (k > 0 && checked::mul(5, checked::mul(k, k)) > checked::mul(num, num)) --k;
    r.n = k;
    return r;
}

/// Multiplicities n_0..n_9 of the roots xi^j in a root sum.
using RootSumWitness = std::array<Int, 10>;

inline CycloInt evaluate(const RootSumWitness& w) {
    CycloInt s;
    for (int j = 0; j < 10; ++j) s += GoldenInt{w[static_cast<std::size_t>(j)]} * CycloInt::xi_pow(j);
    return s;
}

/// A shortest root-sum witness for every point of Q2(n), keyed by the planar point.
inline std::unordered_map<CycloInt, RootSumWitness> root_sum_witnesses(int n) {
    std::unordered_map<CycloInt, RootSumWitness> out;
    std::vector<std::pair<CycloInt, RootSumWitness>> level{{CycloInt{}, RootSumWitness{}}};
    out.emplace(CycloInt{}, RootSumWitness{});
    std::array<CycloInt, 10> rts;
    for (int j = 0; j < 10; ++j) rts[static_cast<std::size_t>(j)] = CycloInt::xi_pow(j);
    for (int m = 1; m <= n; ++m) {
        std::vector<std::pair<CycloInt, RootSumWitness>> next;
        for (const auto& [x, w] : level)
            for (std::size_t j = 0; j < 10; ++j) {
                const CycloInt y = x + rts[j];
                if (out.count(y)) continue;
                RootSumWitness wy = w;
                ++wy[j];
                out.emplace(y, wy);
                next.emplace_back(y, wy);
            }
        level = std::move(next);
    }
    return out;
}

struct Decomposition {
    int rotation = 0;     // x = xi^rotation (y + z xi)
    GoldenInt y;          // on the xi^rotation line
    GoldenInt z;          // coefficient on the xi^(rotation+1) line
    std::array<Int, 3> abc1{};  // y = (a1 + c1) + (b1 - c1) tau
    std::array<Int, 3> abc2{};  // z = (a2 + c2) + (b2 - c2) tau
    Int f = 0;            // |a1| + 2|b1| + 2|c1|
    Int g = 0;            // |a2| + 2|b2| + 2|c2|
    bool within_bound = false;
};

namespace detail {

/// Minimises |u - c| + 2|c - v| + 2|c| over the breakpoints {0, u, v};
/// ties go to the smaller |c|.
inline std::pair<Int, Int> minimise_breakpoints(Int u, Int v) {
    auto cost = [&](Int c) { return std::abs(u - c) + 2 * std::abs(c - v) + 2 * std::abs(c); };
    Int best_c = 0;
    Int best = cost(0);
    for (Int c : {u, v}) {
        const Int k = cost(c);
        if (k < best || (k == best && std::abs(c) < std::abs(best_c))) {
            best = k;
            best_c = c;
        }
    }
    return {best_c, best};
}

}  // namespace detail

/// Splits x in Q2(n) as x = xi^j (y + z xi) with y, z in L(n). The rotation j
/// brings x into the closed cone spanned by xi^0 and xi^1; the witness is
/// rotated with it and reduced to beta_0..beta_4 with x = sum beta_j xi^j.
/// Then y = (beta0 - beta2) - tau (beta3 + beta4) and
/// z = (beta1 + beta4) + tau (beta2 + beta3), and c1, c2 are chosen at the
/// breakpoints of the two piecewise-linear costs.
inline Decomposition decompose(const CycloInt& x, const RootSumWitness& witness, int n) {
    if (evaluate(witness) != x) throw std::invalid_argument("hcox: witness does not evaluate to the point");
    Decomposition d;
    CycloInt rotated = x;
    const CycloInt xi_inv = CycloInt::xi_pow(9);
    int j = 0;
    for (; j < 10; ++j) {
        if (rotated.p().sign() != Sign::negative && rotated.q().sign() != Sign::negative) break;
        rotated = rotated * xi_inv;
    }
    if (j == 10) throw std::logic_error("hcox: no rotation into the fundamental cone");
    d.rotation = j;

    RootSumWitness w{};
    for (std::size_t k = 0; k < 10; ++k) w[k] = witness[(k + static_cast<std::size_t>(j)) % 10];
    std::array<Int, 5> beta{};
    for (std::size_t k = 0; k < 5; ++k) beta[k] = w[k] - w[k + 5];

    d.y = GoldenInt{beta[0] - beta[2], -(beta[3] + beta[4])};
    d.z = GoldenInt{beta[1] + beta[4], beta[2] + beta[3]};
    if (d.y != rotated.p() || d.z != rotated.q()) throw std::logic_error("hcox: beta reduction mismatch");

    // f(c1) = |(b0 - b2) - c1| + 2|c1 - (b3 + b4)| + 2|c1|
    const auto [c1, f] = detail::minimise_breakpoints(beta[0] - beta[2], beta[3] + beta[4]);
    // g(c2) = |(b1 + b4) - c2| + 2|c2 + (b2 + b3)| + 2|c2|
    const auto [c2, g] = detail::minimise_breakpoints(beta[1] + beta[4], -(beta[2] + beta[3]));
    d.abc1 = {beta[0] - beta[2] - c1, c1 - (beta[3] + beta[4]), c1};
    d.abc2 = {beta[1] + beta[4] - c2, c2 + beta[2] + beta[3], c2};
    d.f = f;
    d.g = g;
    d.within_bound = f <= n && g <= n;
    return d;
}

struct ScalingReport {
    bool tau_scaling = false;   // tau L(n) subset of L(2n)
    bool repetitivity = false;  // L(r) + L(s) subset of L(r + s) for r + s = n
    std::optional<GoldenInt> counterexample;
};

inline ScalingReport scaling_check(int n) {
    ScalingReport r;
    const auto base = line_closed_form(n);
    const auto doubled = line_closed_form(2 * n);
    r.tau_scaling = true;
    for (const auto& x : base.values)
        if (!doubled.contains(GoldenInt::tau() * x)) {
            r.tau_scaling = false;
            r.counterexample = x;
            break;
        }
    r.repetitivity = true;
    const auto target = line_closed_form(n);
    for (int s = 0; s <= n && r.repetitivity; ++s) {
        const auto lr = line_closed_form(n - s);
        const auto ls = line_closed_form(s);
        for (const auto& p : lr.values) {
            for (const auto& x : ls.values)
                if (!target.contains(p + x)) {
                    r.repetitivity = false;
                    r.counterexample = p + x;
                    break;
                }
            if (!r.repetitivity) break;
        }
    }
    return r;
}

/// Smallest gap between consecutive values (exact differences, embedded at the end).
inline double min_gap(const std::vector<GoldenInt>& sorted) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < sorted.size(); ++i) best = std::min(best, (sorted[i] - sorted[i - 1]).value());
    return best;
}

struct DistanceComparison {
    double d_line = 0;
    double d_sigma = 0;
    bool ok = false;
};

inline DistanceComparison min_distance_compare(int n) {
    if (n < 1) throw std::invalid_argument("hcox: n must be at least 1");
    DistanceComparison r;
    r.d_line = min_gap(line_closed_form(n).values);
    const auto w = Window1D::symmetric(n);
    r.d_sigma = min_gap(sigma_1d(w, w));
    r.ok = r.d_line >= r.d_sigma - 1e-9;
    return r;
}

}  // namespace hcox
