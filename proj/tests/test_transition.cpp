#include "helpers.hpp"
#include "thvand/random.hpp"
#include "thvand/transition.hpp"

#include <gtest/gtest.h>

using namespace th_test;

namespace {

ParameterArray asymmetric() { return validate(Q, qs({"1", "3", "-2"}), qs({"0", "5", "1/2"}), qs({"2", "-3"})); }

}  // namespace

TEST(TwoVarP, DiameterOne) {
    BiPoly p = two_var_p(pa_q({0, 1}, {0, 1}, {1}));
    // λμ - μ + 1
    EXPECT_EQ(p.coeffs(), (std::vector<Vec>{make_vec(Q, {1, -1}), make_vec(Q, {0, 1})}));
}

TEST(TwoVarP, DiameterTwo) {
    BiPoly p = two_var_p(pa_q({0, 1, 2}, {0, 1, 2}, {1, 1}));
    // λ²μ² - λ²μ - 3λμ² + 4λμ + 2μ² - 4μ + 1
    std::vector<Vec> expect{make_vec(Q, {1, -4, 2}), make_vec(Q, {0, 4, -3}), make_vec(Q, {0, -1, 1})};
    EXPECT_EQ(p.coeffs(), expect);
}

TEST(Transition, DiameterOne) {
    TransitionData T = build_transition(pa_q({0, 1}, {0, 1}, {1}));
    EXPECT_EQ(T.scriptP, Matrix(Q, {{1, 0}, {1, 1}}));
    EXPECT_EQ(T.L, Matrix(Q, {{1, 0}, {0, -1}}));
    EXPECT_EQ(T.P, Matrix(Q, {{1, 0}, {1, -1}}));
    EXPECT_EQ(T.nu, q("1"));
}

TEST(Transition, SymmetricDiameterTwo) {
    ParameterArray pa = pa_q({0, 1, 2}, {0, 1, 2}, {1, 1});
    Matrix expect(Q, {{1, -1, 1}, {1, 0, -1}, {1, 1, 1}});
    EXPECT_EQ(build_transition(pa).scriptP, expect);
    EXPECT_EQ(build_transition(relative(pa, Group::tilde_star)).scriptP, expect);
}

TEST(Transition, AsymmetricDiameterTwo) {
    TransitionData T = build_transition(asymmetric());
    EXPECT_EQ(T.scriptP, qm({{"1", "17/2", "-1/2"}, {"1", "27/2", "9/4"}, {"1", "1", "1"}}));
    EXPECT_EQ(T.ell, qs({"1", "1/9", "-10/9"}));
    EXPECT_EQ(T.P, qm({{"1", "17/18", "5/9"}, {"1", "3/2", "-5/2"}, {"1", "1/9", "-10/9"}}));
    EXPECT_EQ(T.nu, q("5/2"));
}

TEST(Transition, DiameterZero) {
    TransitionData T = build_transition(pa_q({3}, {8}, {}));
    EXPECT_EQ(T.P, Matrix::identity(Q, 1));
    EXPECT_EQ(T.scriptP, Matrix::identity(Q, 1));
    EXPECT_TRUE(verify_pp_star(pa_q({3}, {8}, {})).ok());
}

TEST(Transition, PolynomialFamilies) {
    TransitionData T = build_transition(asymmetric());
    for (std::size_t j = 0; j <= 2; ++j) {
        EXPECT_EQ(T.t_polys.polys[j].degree(), static_cast<int>(j));
        EXPECT_EQ(T.s_polys.polys[j], T.t_polys.polys[j] * T.ell[j]);
        for (std::size_t i = 0; i <= 2; ++i) EXPECT_EQ(T.P(i, j), T.s_polys.polys[j](T.pa.theta[i]));
    }
}

TEST(Identities, HoldOnRandomArrays) {
    SplitMix64 g(41);
    for (const Field& f : {Q, GF101})
        for (std::size_t d = 0; d <= 6; ++d)
            for (int k = 0; k < 6; ++k) {
                ParameterArray pa = random_pa(d, f, g);
                RelativeTransitions rt = relative_transitions(pa);
                IdentityReport a = verify_pp_star(rt), b = verify_zeta_relations(rt), c = verify_vand_structure(rt);
                EXPECT_TRUE(a.ok()) << a.first_failure();
                EXPECT_TRUE(b.ok()) << b.first_failure();
                EXPECT_TRUE(c.ok()) << c.first_failure();
                IdentityReport o = verify_orthogonality(pa);
                EXPECT_TRUE(o.ok()) << o.first_failure();
            }
}

TEST(Identities, PPStarIsNuIdentity) {
    ParameterArray pa = asymmetric();
    TransitionData T = build_transition(pa), Ts = build_transition(relative(pa, Group::star));
    EXPECT_EQ(T.P * Ts.P, Matrix::identity(Q, 3) * T.nu);
    EXPECT_EQ(Ts.nu, T.nu);
}

TEST(Identities, CatchesADamagedTransition) {
    RelativeTransitions rt = relative_transitions(asymmetric());
    rt.data[0].P(1, 1) = q("0");
    EXPECT_FALSE(verify_pp_star(rt).ok());
}

TEST(BasisConstruction, MatchesSumFormula) {
    SplitMix64 g(42);
    for (const Field& f : {Q, GF101})
        for (std::size_t d = 0; d <= 6; ++d)
            for (int k = 0; k < 6; ++k) {
                ParameterArray pa = random_pa(d, f, g);
                THSystemRep s = build(pa);
                Matrix P = build_transition(pa).P;
                EXPECT_EQ(transition_from_bases(s), P);
                EXPECT_EQ(transition_from_bases(s, random_nonzero(g, f)), P);
            }
}

TEST(BasisConstruction, SmallCases) {
    EXPECT_EQ(transition_from_bases(build(pa_q({0, 1}, {0, 1}, {1}))), Matrix(Q, {{1, 0}, {1, -1}}));
    EXPECT_EQ(transition_from_bases(build(pa_q({2}, {5}, {}))), Matrix::identity(Q, 1));
    EXPECT_EQ(transition_from_bases(build(asymmetric())), build_transition(asymmetric()).P);
}
