#pragma once

// Planar cut-and-project sets with ten-fold symmetry over the module
// M = Z[tau] alpha_1 + Z[tau] alpha_2, with the star map as the internal
// space embedding and the regular decagon D(n) as window.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <vector>

#include "hcox/affine.hpp"
#include "hcox/fragment.hpp"
#include "hcox/golden.hpp"

namespace hcox {

/// Regular decagon with vertices n xi^j, j = 0..9.
struct DecagonWindow {
    Int radius = 1;

    CycloInt vertex(int j) const { return GoldenInt{radius} * CycloInt::xi_pow(j); }

    std::array<std::complex<double>, 10> vertices() const {
        std::array<std::complex<double>, 10> v;
        for (int j = 0; j < 10; ++j) v[static_cast<std::size_t>(j)] = vertex(j).embed();
        return v;
    }

    /// Exact membership. Edge j runs from V_j to V_{j+1} counterclockwise, so
    /// interior points satisfy Im(conj(e_j) (x - V_j)) >= 0; Im(p + q xi) has
    /// the sign of q.
    bool contains(const CycloInt& x) const {
        for (int j = 0; j < 10; ++j) {
            const CycloInt v = vertex(j);
            const CycloInt e = vertex(j + 1) - v;
            if ((e.complex_conj() * (x - v)).q().sign() == Sign::negative) return false;
        }
        return true;
    }
};

/// Floating half-plane test against the decagon n exp(i j pi/5); points within
/// tol of an edge count as inside.
inline bool decagon_contains(std::complex<double> p, Int n, double tol = 1e-9) {
    if (n < 1) throw std::invalid_argument("hcox: decagon radius must be at least 1");
    const auto v = DecagonWindow{n}.vertices();
    for (std::size_t j = 0; j < 10; ++j) {
        const auto a = v[j];
        const auto b = v[(j + 1) % 10];
        const auto e = b - a;
        const double cross = e.real() * (p - a).imag() - e.imag() * (p - a).real();
        if (cross < -tol * std::abs(e)) return false;
    }
    return true;
}

inline bool decagon_contains(const CycloInt& x, Int n) { return DecagonWindow{n}.contains(x); }

/// (x1 + tau x2) alpha_1 + (x3 + tau x4) alpha_2 with alpha_1 = 1, alpha_2 = xi^4.
inline CycloInt module_element(Int x1, Int x2, Int x3, Int x4) {
    static const CycloInt alpha2 = CycloInt::xi_pow(4);
    return CycloInt{GoldenInt{x1, x2}} + GoldenInt{x3, x4} * alpha2;
}

struct CutProjectSet2D {
    int n = 0;
    std::vector<CycloInt> points;  // canonical order

    std::size_t size() const { return points.size(); }
    bool contains(const CycloInt& x) const { return std::binary_search(points.begin(), points.end(), x); }
};

/// Sigma(D(n)) cap D(n): module points x with x and x* both in D(n).
/// Enumerates the box |x_i| <= 2n, which contains every such point.
inline CutProjectSet2D sigma_2d(int n, std::size_t cap = 50'000'000) {
    if (n < 1) throw std::invalid_argument("hcox: n must be at least 1");
    const Int b = 2 * static_cast<Int>(n);
    const double side = static_cast<double>(2 * b + 1);
    if (side * side * side * side > static_cast<double>(cap))
        throw ResourceLimitError("hcox: enumeration box too large for n = " + std::to_string(n));
    const DecagonWindow window{n};
    const double reach = static_cast<double>(n) + 1e-9;
    CutProjectSet2D out{n, {}};
    for (Int x1 = -b; x1 <= b; ++x1)
        for (Int x2 = -b; x2 <= b; ++x2)
            for (Int x3 = -b; x3 <= b; ++x3)
                for (Int x4 = -b; x4 <= b; ++x4) {
                    const CycloInt x = module_element(x1, x2, x3, x4);
                    // cheap rejection outside the circumscribed circle
                    if (std::abs(x.embed()) > reach) continue;
                    const CycloInt xs = x.star();
                    if (std::abs(xs.embed()) > reach) continue;
                    if (window.contains(x) && window.contains(xs)) out.points.push_back(x);
                }
    std::sort(out.points.begin(), out.points.end());
    return out;
}

/// Points of Sigma(D(n)) cap D(n) that are missing from Q2(n).
inline std::vector<CycloInt> deficiencies_2d(int n, const CutProjectSet2D& sigma, const Fragment& q) {
    if (q.group != GroupId::H2 || q.n != n || sigma.n != n)
        throw std::invalid_argument("hcox: mismatched inputs for 2D deficiency report");
    const auto qpts = cyclo_points(q);
    std::vector<CycloInt> out;
    std::set_difference(sigma.points.begin(), sigma.points.end(), qpts.begin(), qpts.end(), std::back_inserter(out));
    return out;
}

inline std::vector<CycloInt> deficiencies_2d(int n) { return deficiencies_2d(n, sigma_2d(n), generate(GroupId::H2, n)); }

/// Minimal pairwise distance in the plane.
inline double min_pair_distance(const std::vector<CycloInt>& pts) {
    std::vector<std::complex<double>> z;
    z.reserve(pts.size());
    for (const auto& p : pts) z.push_back(p.embed());
    std::sort(z.begin(), z.end(), [](auto a, auto b) { return a.real() < b.real(); });
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = i + 1; j < z.size() && z[j].real() - z[i].real() < best; ++j)
            best = std::min(best, std::abs(z[j] - z[i]));
    return best;
}

}  // namespace hcox
