#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "hcox/lineanalysis.hpp"

using namespace hcox;

namespace {

const GoldenInt tau = GoldenInt::tau();
const GoldenInt taup = GoldenInt::tau_conj();

Int cost_by_search(GoldenInt y, Int range) {
    Int best = -1;
    for (Int c = -range; c <= range; ++c) {
        const Int a = y.a() - c;
        const Int b = y.b() + c;
        const Int k = std::abs(a) + 2 * std::abs(b) + 2 * std::abs(c);
        if (best < 0 || k < best) best = k;
    }
    return best;
}

std::vector<GoldenInt> sorted(std::vector<GoldenInt> v) {
    std::sort(v.begin(), v.end(), RealLess{});
    return v;
}

}  // namespace

TEST(Line, LevelTwo) {
    const auto lv = levels(2);
    ASSERT_EQ(lv.size(), 3u);
    EXPECT_EQ(lv[0].points, (std::vector<GoldenInt>{0}));
    EXPECT_EQ(lv[1].points, sorted({1, -1}));
    EXPECT_EQ(lv[2].points, sorted({2, -2, tau, -tau, taup, -taup}));
    EXPECT_EQ(line_closed_form(2).size(), 9u);
}

TEST(Line, ClosedFormEqualsBruteForce) {
    for (int n = 0; n <= 8; ++n) EXPECT_EQ(line_closed_form(n), line_bruteforce(n)) << n;
}

TEST(Line, ClosedFormEqualsFragmentSection) {
    for (int n = 0; n <= 5; ++n) EXPECT_EQ(line_closed_form(n), line_from_fragment(generate(GroupId::H2, n))) << n;
}

TEST(Line, CostMatchesSearchAndMembership) {
    for (Int a = -8; a <= 8; ++a)
        for (Int b = -8; b <= 8; ++b) {
            const GoldenInt y{a, b};
            const Int k = line_cost(y);
            EXPECT_EQ(k, cost_by_search(y, 40)) << y.str();
            for (int n = 0; n <= 6; ++n) EXPECT_EQ(line_closed_form(n).contains(y), k <= n) << y.str() << " " << n;
        }
}

TEST(Line, SymmetricAndNested) {
    for (int n = 1; n <= 8; ++n) {
        const auto l = line_closed_form(n), prev = line_closed_form(n - 1);
        for (const auto& x : l.values) EXPECT_TRUE(l.contains(-x));
        for (const auto& x : prev.values) EXPECT_TRUE(l.contains(x));
    }
}

TEST(Line, Window) {
    const auto w = Window1D::symmetric(2);
    EXPECT_TRUE(w.contains(2));
    EXPECT_TRUE(w.contains(-2));
    EXPECT_TRUE(w.contains(tau));
    EXPECT_FALSE(w.contains(GoldenInt{0, 2}));
    EXPECT_FALSE(w.contains(GoldenInt{-1, 2}));
}

TEST(Line, CutProjectMatchesDefinition) {
    for (int n = 1; n <= 6; ++n) {
        const auto w = Window1D::symmetric(n);
        std::vector<GoldenInt> want;
        for (Int x1 = -4 * n; x1 <= 4 * n; ++x1)
            for (Int x2 = -4 * n; x2 <= 4 * n; ++x2) {
                const GoldenInt x{x1, x2};
                const double v = x.value(), vc = x.conj().value();
                if (std::abs(v) <= n + 1e-9 && std::abs(vc) <= n + 1e-9) want.push_back(x);
            }
        EXPECT_EQ(sigma_1d(w, w), sorted(want)) << n;
    }
}

TEST(Line, Deficiencies) {
    EXPECT_TRUE(deficiencies_1d(1).empty());
    EXPECT_TRUE(deficiencies_1d(2).empty());
    const auto d3 = deficiencies_1d(3);
    EXPECT_EQ(d3, sorted({GoldenInt{-1, 2}, GoldenInt{1, -2}}));
    for (int n = 3; n <= 12; ++n) {
        const auto d = deficiencies_1d(n);
        EXPECT_FALSE(d.empty()) << n;
        // inside the window, and missing from the line set
        const auto l = line_closed_form(n);
        for (const auto& x : d) {
            EXPECT_FALSE(l.contains(x));
            EXPECT_TRUE(Window1D::symmetric(n).contains(x.conj()));
        }
    }
    // the line set never leaves the window set
    for (int n = 1; n <= 10; ++n) {
        const auto w = Window1D::symmetric(n);
        const auto s = sigma_1d(w, w);
        for (const auto& x : line_closed_form(n).values) EXPECT_TRUE(std::binary_search(s.begin(), s.end(), x, RealLess{}));
    }
}

TEST(Line, MnNn) {
    const auto m3 = mn_nn(3);
    EXPECT_EQ(m3.m, 1);
    EXPECT_EQ(m3.n, 2);
    for (int n = 3; n <= 20; ++n) {
        const auto r = mn_nn(n);
        EXPECT_EQ(r.m, n / 2);
        EXPECT_EQ(r.n, static_cast<Int>(std::floor((2.0 * n - 1) / std::sqrt(5.0))));
        EXPECT_LT(r.m, r.n) << n;
    }
    // M_n is the maximal b - c over 2|b| + 2|c| <= n
    for (int n = 1; n <= 12; ++n) {
        Int best = 0;
        for (Int b = -n; b <= n; ++b)
            for (Int c = -n; c <= n; ++c)
                if (2 * std::abs(b) + 2 * std::abs(c) <= n) best = std::max(best, b - c);
        EXPECT_EQ(mn_nn(n).m, best);
    }
}

TEST(Line, Scaling) {
    for (int n = 1; n <= 10; ++n) {
        const auto r = scaling_check(n);
        EXPECT_TRUE(r.tau_scaling) << n;
        EXPECT_TRUE(r.repetitivity) << n;
    }
}

TEST(Line, MinimalDistance) {
    for (int n = 1; n <= 10; ++n) {
        const auto r = min_distance_compare(n);
        EXPECT_TRUE(r.ok) << n;
        EXPECT_GE(r.d_line, r.d_sigma - 1e-9);
    }
    EXPECT_DOUBLE_EQ(min_distance_compare(1).d_line, 1.0);
}

TEST(Decompose, WithinBoundsUpToFour) {
    for (int n = 1; n <= 4; ++n) {
        const auto w = root_sum_witnesses(n);
        const auto pts = cyclo_points(generate(GroupId::H2, n));
        EXPECT_EQ(w.size(), pts.size());
        for (const auto& x : pts) {
            const auto d = decompose(x, w.at(x), n);
            EXPECT_TRUE(d.within_bound) << x.str();
            // x = xi^j (y + z xi), with y and z in L(n)
            EXPECT_EQ(CycloInt::xi_pow(d.rotation) * CycloInt(d.y, d.z), x);
            EXPECT_TRUE(line_closed_form(n).contains(d.y));
            EXPECT_TRUE(line_closed_form(n).contains(d.z));
            EXPECT_EQ(GoldenInt(d.abc1[0] + d.abc1[2], d.abc1[1] - d.abc1[2]), d.y);
            EXPECT_EQ(GoldenInt(d.abc2[0] + d.abc2[2], d.abc2[1] - d.abc2[2]), d.z);
            EXPECT_EQ(d.f, std::abs(d.abc1[0]) + 2 * std::abs(d.abc1[1]) + 2 * std::abs(d.abc1[2]));
            EXPECT_EQ(d.f, line_cost(d.y));
            EXPECT_EQ(d.g, line_cost(d.z));
        }
    }
}

TEST(Decompose, FixedAxesFailAtOne) {
    // xi^2 = -1 + tau xi: tau is not in L(1), so the cone rotation is needed
    EXPECT_FALSE(line_closed_form(1).contains(tau));
    const auto w = root_sum_witnesses(1);
    const auto d = decompose(CycloInt::xi_pow(2), w.at(CycloInt::xi_pow(2)), 1);
    EXPECT_EQ(d.rotation, 1);
    EXPECT_TRUE(d.within_bound);
}

TEST(Decompose, ConeBoundFailsAtFive) {
    // observed: 20 points of Q2(5) need cost 6 on one axis
    const int n = 5;
    const auto w = root_sum_witnesses(n);
    std::size_t fails = 0;
    for (const auto& x : cyclo_points(generate(GroupId::H2, n)))
        if (!decompose(x, w.at(x), n).within_bound) ++fails;
    EXPECT_EQ(fails, 20u);
    const CycloInt x{GoldenInt{-2, 3}, GoldenInt{-3, 2}};
    ASSERT_TRUE(w.count(x));
    const auto d = decompose(x, w.at(x), n);
    EXPECT_EQ(d.rotation, 0);
    EXPECT_EQ(line_cost(GoldenInt{-2, 3}), 6);
    EXPECT_FALSE(d.within_bound);
}

TEST(Decompose, RejectsWrongWitness) {
    EXPECT_THROW(decompose(CycloInt::xi_pow(1), RootSumWitness{}, 1), std::invalid_argument);
}
