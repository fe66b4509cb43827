#include "helpers.hpp"
#include "thvand/random.hpp"
#include "thvand/transition.hpp"
#include "thvand/vand.hpp"

#include <gtest/gtest.h>

using namespace th_test;

namespace {

VandError::Code vand_error(const std::function<void()>& fn, std::size_t* index = nullptr) {
    try {
        fn();
    } catch (const VandError& e) {
        if (index) *index = e.index;
        return e.code;
    }
    ADD_FAILURE() << "expected a VandError";
    return VandError::Code::BadShape;
}

Poly qp(std::initializer_list<const char*> c) { return Poly(Q, qs(c)); }

}  // namespace

TEST(ExtractWest, ClassicalVandermonde) {
    Matrix X(Q, {{1, 0, 0}, {1, 1, 1}, {1, 2, 4}});
    WestVandSystem w = extract_west(X, make_vec(Q, {0, 1, 2}));
    ASSERT_EQ(w.polys.polys.size(), 4u);
    EXPECT_EQ(w.polys.polys[0], qp({"1"}));
    EXPECT_EQ(w.polys.polys[1], qp({"0", "1"}));
    EXPECT_EQ(w.polys.polys[2], qp({"0", "0", "1"}));
    EXPECT_EQ(w.polys.polys[3], qp({"0", "2", "-3", "1"}));
    EXPECT_TRUE(w.polys.standard());
}

TEST(ExtractWest, RowScalingIsAllowed) {
    Matrix X(Q, {{2, 0}, {3, 3}});
    WestVandSystem w = extract_west(X, make_vec(Q, {0, 1}));
    EXPECT_EQ(w.polys.polys[1], qp({"0", "1"}));
}

TEST(ExtractWest, Errors) {
    std::size_t idx = 99;
    EXPECT_EQ(vand_error([] { extract_west(Matrix::identity(Q, 2), make_vec(Q, {0, 1})); }, &idx),
              VandError::Code::ZeroFirstColumn);
    EXPECT_EQ(idx, 1u);
    EXPECT_EQ(vand_error([] { extract_west(Matrix(Q, {{1, 1, 0}, {1, 0, 1}, {1, 0, 0}}), make_vec(Q, {0, 1, 2})); }, &idx),
              VandError::Code::NotCompatible);
    EXPECT_EQ(idx, 1u);
    EXPECT_EQ(vand_error([] { extract_west(Matrix::identity(Q, 2), make_vec(Q, {1, 1})); }), VandError::Code::DuplicateTheta);
    EXPECT_EQ(vand_error([] { extract_west(Matrix::identity(Q, 2), make_vec(Q, {0, 1, 2})); }), VandError::Code::BadShape);
}

TEST(ExtractWest, DiameterZero) {
    WestVandSystem w = extract_west(Matrix(Q, {{5}}), make_vec(Q, {3}));
    EXPECT_EQ(w.polys.polys[0], qp({"1"}));
    EXPECT_EQ(w.polys.polys[1], qp({"-3", "1"}));
}

TEST(ExtractWest, RecoversRandomSystems) {
    SplitMix64 g(31);
    for (const Field& f : {Q, GF101})
        for (std::size_t d = 0; d <= 6; ++d)
            for (int k = 0; k < 10; ++k) {
                WestVandSystem w = random_west(d, f, g);
                WestVandSystem back = extract_west(w.X, w.thetas);
                // extraction divides out the row weights, which random_west may have set
                for (std::size_t j = 0; j <= d + 1; ++j) EXPECT_EQ(back.polys.polys[j].degree(), static_cast<int>(j));
                EXPECT_EQ(back.polys.polys.back(), w.polys.polys.back());
            }
}

TEST(South, RotationConvention) {
    Matrix X(Q, {{1, 2}, {3, 4}});
    EXPECT_EQ(rotate_clockwise(X), Matrix(Q, {{3, 1}, {4, 2}}));
    Matrix Y(Q, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
    EXPECT_EQ(rotate_clockwise(rotate_clockwise(rotate_clockwise(rotate_clockwise(Y)))), Y);
}

TEST(South, ExtractFromTransitionMatrix) {
    ParameterArray pa = pa_q({0, 1, 2}, {0, 1, 2}, {1, 1});
    TransitionData T = build_transition(pa);
    SouthVandSystem s = extract_south(T.scriptP, pa.theta_star);
    TransitionData Tts = build_transition(relative(pa, Group::tilde_star));
    EXPECT_EQ(s.polys, Tts.t_polys);
}

TEST(Compatible, Line) {
    Matrix P = qm({{"1", "17/2", "-1/2"}, {"1", "27/2", "9/4"}, {"1", "1", "1"}});
    CompatibleLine c = compatible_sequences(P);
    EXPECT_TRUE(c.contains(make_vec(Q, {1, 3, -2})));
    EXPECT_TRUE(c.contains(qs({"17/2", "27/2", "1"})));
    EXPECT_FALSE(c.contains(make_vec(Q, {1, 3, -1})));
    EXPECT_FALSE(c.contains(make_vec(Q, {1, 1, 1})));
    EXPECT_TRUE(compatible_sequences(Matrix(Q, {{4}})).contains(make_vec(Q, {9})));
    EXPECT_EQ(vand_error([] { compatible_sequences(Matrix(Q, {{1, 1}, {1, 1}})); }), VandError::Code::NotCompatible);
}

TEST(Hessenberg, SmallExamples) {
    HessenbergPolyData h = polys_of_hessenberg(Matrix(Q, {{0, 0}, {1, 1}}));
    EXPECT_EQ(h.polys.polys[0], qp({"1"}));
    EXPECT_EQ(h.polys.polys[1], qp({"0", "1"}));
    EXPECT_EQ(h.polys.polys[2], qp({"0", "-1", "1"}));
    EXPECT_TRUE(h.c_H.is_one());

    Matrix shift(Q, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}});
    HessenbergPolyData s = polys_of_hessenberg(shift);
    EXPECT_EQ(s.polys.polys[3], qp({"0", "0", "0", "1"}));
    EXPECT_EQ(connection_matrix(s.polys), shift);
}

TEST(Hessenberg, Errors) {
    EXPECT_EQ(vand_error([] { polys_of_hessenberg(Matrix(Q, {{1, 0}, {0, 1}})); }), VandError::Code::NotHessenberg);
    EXPECT_EQ(vand_error([] { polys_of_hessenberg(Matrix(Q, {{1, 0, 0}, {1, 1, 0}, {1, 1, 1}})); }),
              VandError::Code::NotHessenberg);
    EXPECT_EQ(vand_error([] { connection_matrix(GradedPolySeq{{Poly::one(Q), qp({"0", "0", "1"})}}); }),
              VandError::Code::NotGraded);
}

TEST(Hessenberg, RoundTrips) {
    SplitMix64 g(32);
    for (const Field& f : {Q, GF101})
        for (std::size_t d = 0; d <= 6; ++d)
            for (int k = 0; k < 10; ++k) {
                Matrix H = random_hessenberg(d, f, g);
                HessenbergPolyData hp = polys_of_hessenberg(H);
                EXPECT_EQ(connection_matrix(hp.polys), H);
                EXPECT_TRUE(hp.polys.polys.back()(H).is_zero());
                WestVandSystem w = random_west(d, f, g);
                EXPECT_EQ(polys_of_hessenberg(connection_matrix(w.polys)).polys, w.polys);
            }
}

TEST(DiagWest, TransitionMatrixIsRecovered) {
    ParameterArray pa = pa_q({0, 1, 2}, {0, 1, 2}, {1, 1});
    Matrix X = build_transition(pa).scriptP;
    Matrix D = Matrix::diagonal(pa.theta);
    Matrix H = X.inverse() * D * X;
    Diagonalization dg = diag_west(H);
    EXPECT_EQ(dg.X, X);
    EXPECT_EQ(dg.D, D);
    EXPECT_EQ(diag_west(H, pa.theta).X, X);
}

TEST(DiagWest, SplitMatrixIsCertified) {
    SplitMix64 g(33);
    for (std::size_t d = 0; d <= 5; ++d)
        for (int k = 0; k < 10; ++k) {
            ParameterArray pa = random_pa(d, GF101, g);
            THSystemRep s = build(pa, {.cross_check = false, .verify = false});
            Diagonalization dg = diag_west(s.A, pa.theta);
            EXPECT_EQ(dg.X.inverse() * dg.D * dg.X, s.A);
            Diagonalization auto_roots = diag_west(s.A);
            EXPECT_EQ(auto_roots.X.inverse() * auto_roots.D * auto_roots.X, s.A);
        }
}

TEST(DiagWest, PlantedRationalSpectrum) {
    SplitMix64 g(34);
    for (std::size_t d = 1; d <= 5; ++d)
        for (int k = 0; k < 10; ++k) {
            WestVandSystem w = random_west(d, Q, g);
            Matrix H = connection_matrix(w.polys);
            Diagonalization dg = diag_west(H);
            Vec sorted = w.thetas;
            std::sort(sorted.begin(), sorted.end(), [](const Scalar& x, const Scalar& y) { return x.less(y); });
            EXPECT_EQ(dg.west.thetas, sorted);
            EXPECT_EQ(dg.west.polys, w.polys);
        }
}

TEST(DiagWest, Errors) {
    // λ² + 1 has no rational roots
    EXPECT_EQ(vand_error([] { diag_west(Matrix(Q, {{0, -1}, {1, 0}})); }), VandError::Code::NotMultiplicityFree);
    EXPECT_EQ(vand_error([] { diag_west(Matrix(Q, {{0, 0}, {1, 1}}), make_vec(Q, {0, 2})); }),
              VandError::Code::NotMultiplicityFree);
    EXPECT_EQ(vand_error([] { diag_west(Matrix(Q, {{0, 0}, {1, 0}})); }), VandError::Code::NotMultiplicityFree);
}

TEST(InverseStructure, SmallCases) {
    WestVandSystem w = extract_west(Matrix(Q, {{1, 0}, {1, 1}}), make_vec(Q, {0, 1}));
    InverseStructure inv = inverse_structure(w);
    EXPECT_TRUE(inv.ok());
    EXPECT_EQ(inv.south.X, Matrix(Q, {{1, 0}, {-1, 1}}));
    EXPECT_TRUE(inverse_structure(extract_west(Matrix(Q, {{3}}), make_vec(Q, {2}))).ok());
}

TEST(InverseStructure, RandomSystems) {
    SplitMix64 g(35);
    for (const Field& f : {Q, GF101})
        for (std::size_t d = 0; d <= 6; ++d)
            for (int k = 0; k < 10; ++k) EXPECT_TRUE(inverse_structure(random_west(d, f, g)).ok());
}

TEST(Associated, Properties) {
    SplitMix64 g(36);
    for (std::size_t d = 0; d <= 5; ++d)
        for (int k = 0; k < 10; ++k) {
            WestVandSystem w = random_west(d, GF101, g);
            GradedPolySeq a = associated_seq(w.polys);
            ASSERT_EQ(a.polys.size(), d + 2);
            for (std::size_t j = 0; j <= d + 1; ++j) EXPECT_EQ(a.polys[j].degree(), static_cast<int>(j));
            EXPECT_EQ(a.polys.back(), w.polys.polys.back());
            EXPECT_EQ(connection_matrix(a), connection_matrix(w.polys).zeta_reflect());
        }
    GradedPolySeq not_standard{{Poly::one(Q), qp({"0", "1"}), qp({"0", "0", "2"})}};
    EXPECT_EQ(vand_error([&] { associated_seq(not_standard); }), VandError::Code::NotGraded);
}

TEST(DiagWest, DiameterZero) {
    Diagonalization dg = diag_west(Matrix(Q, {{5}}));
    EXPECT_EQ(dg.X, Matrix::identity(Q, 1));
    EXPECT_EQ(dg.D, Matrix(Q, {{5}}));
}

TEST(Hessenberg, TopPolynomialScaleDoesNotMatter) {
    SplitMix64 g(37);
    for (std::size_t d = 0; d <= 5; ++d) {
        WestVandSystem w = random_west(d, Q, g);
        GradedPolySeq scaled = w.polys;
        scaled.polys.back() = scaled.polys.back() * q("-7/3");
        EXPECT_EQ(connection_matrix(scaled), connection_matrix(w.polys));
        scaled.polys[d] = scaled.polys[d] * q("2");
        if (d >= 1) EXPECT_NE(connection_matrix(scaled), connection_matrix(w.polys));
    }
}

TEST(South, GenericWestSystemIsNotSouth) {
    Matrix X(Q, {{1, 0, 0}, {1, 1, 1}, {1, 2, 4}});
    EXPECT_EQ(vand_error([&] { extract_south(X, make_vec(Q, {0, 1, 2})); }), VandError::Code::NotCompatible);
}
