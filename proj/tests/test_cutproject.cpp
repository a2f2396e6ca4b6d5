#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "hcox/cutproject.hpp"
#include "hcox/lineanalysis.hpp"

using namespace hcox;

namespace {

std::vector<CycloInt> sorted(std::vector<CycloInt> v) {
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<CycloInt> times(const std::vector<CycloInt>& v, const CycloInt& s) {
    std::vector<CycloInt> out;
    for (const auto& x : v) out.push_back(x * s);
    return sorted(out);
}

}  // namespace

TEST(Decagon, FloatingExamples) {
    for (Int n = 1; n <= 5; ++n) {
        EXPECT_TRUE(decagon_contains(std::complex<double>{0, 0}, n));
        EXPECT_TRUE(decagon_contains((GoldenInt{n} * CycloInt::xi_pow(3)).embed(), n));
        const double a = 2 * M_PI / 10;
        EXPECT_FALSE(decagon_contains(std::polar(1.01 * n, a), n));
        EXPECT_TRUE(decagon_contains(std::polar(0.99 * n, a), n));
        // edge midpoint sits at the apothem
        EXPECT_TRUE(decagon_contains(std::polar(n * std::cos(M_PI / 10), M_PI / 10), n));
        EXPECT_FALSE(decagon_contains(std::polar(n * std::cos(M_PI / 10) * 1.001, M_PI / 10), n));
    }
    EXPECT_THROW(decagon_contains(std::complex<double>{0, 0}, 0), std::invalid_argument);
}

TEST(Decagon, ExactAgreesWithFloatingAwayFromTheBoundary) {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<Int> d(-6, 6);
    for (int i = 0; i < 20000; ++i) {
        const CycloInt x = module_element(d(rng), d(rng), d(rng), d(rng));
        const auto z = x.embed();
        for (Int n = 1; n <= 4; ++n) {
            const bool exact = decagon_contains(x, n);
            if (exact != decagon_contains(z, n, 0.0)) {
                // only possible within rounding of an edge
                EXPECT_TRUE(decagon_contains(z, n, 1e-9) && !decagon_contains(z, n, -1e-9)) << x.str();
            }
        }
    }
    // vertices and edge points are inside exactly
    for (int j = 0; j < 10; ++j) {
        EXPECT_TRUE(decagon_contains(GoldenInt{3} * CycloInt::xi_pow(j), 3));
        EXPECT_TRUE(decagon_contains(CycloInt::xi_pow(j) + CycloInt::xi_pow(j + 1), 2));
        EXPECT_FALSE(decagon_contains(GoldenInt{0, 2} * CycloInt::xi_pow(j), 3));
    }
}

TEST(Decagon, ModuleElement) {
    EXPECT_EQ(module_element(1, 0, 0, 0), CycloInt::xi_pow(0));
    EXPECT_EQ(module_element(0, 0, 1, 0), CycloInt::xi_pow(4));
    EXPECT_EQ(module_element(0, 1, 0, 1), GoldenInt::tau() * (CycloInt::xi_pow(0) + CycloInt::xi_pow(4)));
}

TEST(Sigma2D, SmallWindowsCoincideWithTheFragment) {
    for (int n = 1; n <= 2; ++n) {
        EXPECT_EQ(sigma_2d(n).points, cyclo_points(generate(GroupId::H2, n))) << n;
        EXPECT_TRUE(deficiencies_2d(n).empty());
    }
    EXPECT_EQ(sigma_2d(1).size(), 11u);
}

TEST(Sigma2D, ContainsTheFragmentAndDefinesItsMembers) {
    for (int n = 1; n <= 5; ++n) {
        const auto s = sigma_2d(n);
        const auto q = cyclo_points(generate(GroupId::H2, n));
        EXPECT_TRUE(std::includes(s.points.begin(), s.points.end(), q.begin(), q.end())) << n;
        for (const auto& x : s.points) {
            EXPECT_TRUE(decagon_contains(x, n));
            EXPECT_TRUE(decagon_contains(x.star(), n));
        }
        EXPECT_EQ(times(s.points, CycloInt::xi()), s.points);
        EXPECT_EQ(times(s.points, CycloInt{GoldenInt{-1}}), s.points);
    }
}

TEST(Sigma2D, BoxBoundIsLooseEnough) {
    // enlarging the coordinate box by one finds nothing new
    for (int n = 1; n <= 3; ++n) {
        const Int b = 2 * n + 1;
        std::vector<CycloInt> found;
        for (Int x1 = -b; x1 <= b; ++x1)
            for (Int x2 = -b; x2 <= b; ++x2)
                for (Int x3 = -b; x3 <= b; ++x3)
                    for (Int x4 = -b; x4 <= b; ++x4) {
                        const CycloInt x = module_element(x1, x2, x3, x4);
                        if (decagon_contains(x, n) && decagon_contains(x.star(), n)) found.push_back(x);
                    }
        EXPECT_EQ(sorted(found), sigma_2d(n).points) << n;
    }
}

TEST(Sigma2D, DeficienciesFromThree) {
    const auto d3 = deficiencies_2d(3);
    EXPECT_FALSE(d3.empty());
    EXPECT_TRUE(std::binary_search(d3.begin(), d3.end(), CycloInt{GoldenInt{-1, 2}}));
    EXPECT_EQ(times(d3, CycloInt::xi()), d3);
    EXPECT_GT(sigma_2d(3).size(), generate(GroupId::H2, 3).size());
    for (int n = 3; n <= 5; ++n) {
        const auto d = deficiencies_2d(n);
        EXPECT_FALSE(d.empty()) << n;
        // real-axis members are the 1D deficiencies
        std::vector<GoldenInt> real;
        for (const auto& x : d)
            if (x.is_real()) real.push_back(x.p());
        std::sort(real.begin(), real.end(), RealLess{});
        EXPECT_EQ(real, deficiencies_1d(n)) << n;
    }
}

TEST(Sigma2D, MinimalDistances) {
    for (int n = 1; n <= 5; ++n) {
        const double dq = min_pair_distance(cyclo_points(generate(GroupId::H2, n)));
        const double ds = min_pair_distance(sigma_2d(n).points);
        EXPECT_GE(dq, ds - 1e-9) << n;
    }
    EXPECT_NEAR(min_pair_distance(cyclo_points(generate(GroupId::H2, 1))), 2 * std::sin(M_PI / 10), 1e-12);
}

TEST(Sigma2D, ResourceLimit) { EXPECT_THROW(sigma_2d(8, 1000), ResourceLimitError); }
