#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "hcox/affine.hpp"
#include "hcox/verify.hpp"

using namespace hcox;

namespace {

const GoldenInt tau = GoldenInt::tau();
const GoldenInt taup = GoldenInt::tau_conj();

std::vector<CoeffRow> fixture(GroupId g) {
    return load_table(std::string(HCOX_FIXTURES_DIR) + "/" + detail::fixture_name(g));
}

OmegaVector om(GroupId g, std::vector<GoldenInt> c) { return {g, std::move(c)}; }

}  // namespace

TEST(Affine, ExtendedCartanMatricesMatchWrittenForms) {
    EXPECT_EQ(extended_cartan(GroupId::A2).entries, (GoldenMatrix{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}));
    EXPECT_EQ(extended_cartan(GroupId::H2).entries,
              (GoldenMatrix{{2, taup, taup}, {taup, 2, -tau}, {taup, -tau, 2}}));
    EXPECT_EQ(extended_cartan(GroupId::H3).entries,
              (GoldenMatrix{{2, 0, taup, 0}, {0, 2, -1, 0}, {taup, -1, 2, -tau}, {0, 0, -tau, 2}}));
    EXPECT_EQ(extended_cartan(GroupId::H4).entries, (GoldenMatrix{{2, taup, 0, 0, 0},
                                                                  {taup, 2, -1, 0, 0},
                                                                  {0, -1, 2, -1, 0},
                                                                  {0, 0, -1, 2, -tau},
                                                                  {0, 0, 0, -tau, 2}}));
}

TEST(Affine, HighestRootExpansions) {
    // H3: tau a1 + 2tau a2 + tau^2 a3; H4: 2tau a1 + sqrt5 tau^2 a2 + 2tau^3 a3 + tau^4 a4
    const GoldenInt t2 = tau * tau, t3 = t2 * tau, t4 = t3 * tau;
    EXPECT_EQ(highest_root(GroupId::H3).coords, (std::vector<GoldenInt>{tau, 2 * tau, t2}));
    const GoldenInt sqrt5_tau2 = (2 * tau - 1) * t2;
    EXPECT_EQ(highest_root(GroupId::H4).coords, (std::vector<GoldenInt>{2 * tau, sqrt5_tau2, 2 * t3, t4}));
}

TEST(Affine, ExtendedMatricesSatisfyAllConditions) {
    for (GroupId g : kAllGroups) {
        const auto r = verify_conditions(extended_cartan(g));
        EXPECT_TRUE(r.all()) << name(g);
        EXPECT_TRUE(r.det.is_zero());
        // the finite matrices are nondegenerate
        EXPECT_FALSE(determinant(cartan(g).entries).is_zero());
    }
    auto bad = extended_cartan(GroupId::H2);
    bad.entries(0, 1) = tau;
    const auto r = verify_conditions(bad);
    EXPECT_FALSE(r.symmetric);
    EXPECT_FALSE(r.off_diagonal_nonpositive);
}

TEST(Affine, CoxeterExponents) {
    EXPECT_EQ(coxeter_exponent(2), 1u);
    EXPECT_EQ(coxeter_exponent(0), 2u);
    EXPECT_EQ(coxeter_exponent(-1), 3u);
    EXPECT_EQ(coxeter_exponent(-tau), 5u);
    EXPECT_EQ(coxeter_exponent(taup), 5u);
    EXPECT_FALSE(coxeter_exponent(-2).has_value());
}

TEST(Affine, GroupIdentitiesHoldWithMinimalOrders) {
    for (GroupId g : kAllGroups)
        for (bool ext : {false, true}) {
            const auto checks = verify_identities(g, ext);
            const std::size_t k = rank(g) + (ext ? 1 : 0);
            EXPECT_EQ(checks.size(), k * (k + 1) / 2);
            for (const auto& c : checks) EXPECT_TRUE(c.ok) << name(g) << " " << c.left << c.right << " " << c.found;
        }
    // (r0 r1)^5 = 1 in H2^aff
    const auto h2 = verify_identities(GroupId::H2, true);
    auto it = std::find_if(h2.begin(), h2.end(), [](const auto& c) { return c.left == "r0" && c.right == "r1"; });
    ASSERT_NE(it, h2.end());
    EXPECT_EQ(it->cartan_entry, taup);
    EXPECT_EQ(it->found, 5u);
}

TEST(Affine, AffineReflectionIsAnInvolutionFixingHalfRootHyperplane) {
    for (GroupId g : kAllGroups) {
        const auto r = affine_reflection(g);
        EXPECT_TRUE(r.then_after(r).is_identity()) << name(g);
        // alpha_H maps to 0 and 0 to alpha_H
        EXPECT_TRUE(r(highest_root_omega(g)).is_zero());
        EXPECT_EQ(r(OmegaVector::zero(g)), highest_root_omega(g));
        const auto r0 = root_reflection(g);
        EXPECT_EQ(r0(highest_root_omega(g)), -highest_root_omega(g));
    }
}

TEST(Affine, TranslationFormulas) {
    const auto t2 = translation(GroupId::H2);
    EXPECT_EQ(t2(om(GroupId::H2, {1, 2})), om(GroupId::H2, {1 - taup, 2 - taup}));
    const auto t4 = translation(GroupId::H4);
    EXPECT_EQ(t4(om(GroupId::H4, {0, 1, 2, 3})), om(GroupId::H4, {-taup, 1, 2, 3}));
    const auto ta = translation(GroupId::A2);
    EXPECT_EQ(ta(om(GroupId::A2, {0, 0})), om(GroupId::A2, {1, 1}));
    // T is not of finite order
    EXPECT_FALSE(power(t2, 10).is_identity());
    EXPECT_EQ(power(t2, 3)(OmegaVector::zero(GroupId::H2)), GoldenInt{3} * highest_root_omega(GroupId::H2));
}

TEST(Affine, OperatorList) {
    const auto ops = operators(GroupId::H3, true);
    ASSERT_EQ(ops.size(), 6u);
    EXPECT_EQ(ops[0].label(), "r1");
    EXPECT_EQ(ops[3].label(), "r0");
    EXPECT_EQ(ops[4].label(), "r_H^aff");
    EXPECT_EQ(ops[5].label(), "T");
    EXPECT_EQ(operators(GroupId::H3, false).size(), 3u);
}

TEST(Affine, PositiveSemidefiniteTest) {
    EXPECT_TRUE(is_positive_semidefinite(extended_cartan(GroupId::H3).entries));
    EXPECT_TRUE(is_positive_semidefinite(cartan(GroupId::H4).entries));
    EXPECT_FALSE(is_positive_semidefinite(GoldenMatrix{{2, -3}, {-3, 2}}));
}

TEST(Affine, EnumerationH2ReproducesTableOneExactly) {
    const auto e = enumerate_generalized(GroupId::H2, 3);
    auto table = fixture(GroupId::H2);
    ASSERT_EQ(table.size(), 10u);
    std::sort(table.begin(), table.end());
    std::vector<CoeffRow> got;
    for (const auto& c : e.candidates) got.push_back(c.coefficients);
    EXPECT_EQ(got, table);
    EXPECT_EQ(e.psd_count(), e.candidates.size());
}

TEST(Affine, EnumerationIsIndependentOfThreadCount) {
    const auto a = enumerate_generalized(GroupId::H3, 2, 1);
    const auto b = enumerate_generalized(GroupId::H3, 2, 4);
    ASSERT_EQ(a.candidates.size(), b.candidates.size());
    for (std::size_t i = 0; i < a.candidates.size(); ++i)
        EXPECT_EQ(a.candidates[i].coefficients, b.candidates[i].coefficients);
}

TEST(Affine, EnumerationH3ContainsTheExtendedMatrixUniquely) {
    const auto e = enumerate_generalized(GroupId::H3, 3);
    std::size_t nonpos = 0;
    for (const auto& c : e.candidates) {
        EXPECT_TRUE(determinant(c.matrix.entries).is_zero());
        if (c.off_diagonal_nonpositive()) {
            ++nonpos;
            EXPECT_EQ(c.matrix.entries, extended_cartan(GroupId::H3).entries);
        }
    }
    EXPECT_EQ(nonpos, 1u);
}

TEST(Affine, TableTwoRowsWithNonzeroDeterminant) {
    // Four printed rows give det = -8 under the bordered template, so no
    // det = 0 enumeration can contain them.
    const std::vector<CoeffRow> odd{{-1, -2, 0, 2, -2, 1}, {0, -3, -1, 2, -1, 1}, {0, 3, 1, -2, 1, -1}, {1, 2, 0, -2, 2, -1}};
    const auto table = fixture(GroupId::H3);
    EXPECT_EQ(table.size(), 19u);
    std::size_t nonzero = 0;
    for (const auto& row : table) {
        const auto det = determinant(assemble_candidate(GroupId::H3, row).entries);
        if (!det.is_zero()) {
            ++nonzero;
            EXPECT_EQ(det, GoldenInt{-8}) << row_str(row);
            EXPECT_NE(std::find(odd.begin(), odd.end(), row), odd.end()) << row_str(row);
        }
    }
    EXPECT_EQ(nonzero, odd.size());
}

TEST(Affine, TableDiffReportsMissingAndExtraRows) {
    const auto e = enumerate_generalized(GroupId::H2, 3);
    auto table = fixture(GroupId::H2);
    table.pop_back();
    table.push_back({3, 3, 3, 3});
    const auto d = diff_table(e, table);
    ASSERT_EQ(d.missing.size(), 1u);
    EXPECT_EQ(d.missing[0], (CoeffRow{3, 3, 3, 3}));
    EXPECT_EQ(d.extra.size(), 1u);
}

TEST(Affine, WordClosureRespectsCap) {
    EXPECT_THROW(word_closure(GroupId::H3, 3, 100), ResourceLimitError);
    EXPECT_THROW(word_closure(GroupId::H2, -1), std::invalid_argument);
}
