#pragma once

#include "thvand/field.hpp"
#include "thvand/params.hpp"
#include "thvand/thsystem.hpp"
#include "thvand/vand.hpp"

#include <array>
#include <string>
#include <vector>

namespace thvand {

// p = Σ_h η_h(λ) τ*_h(μ) / (φ_1⋯φ_h)
inline BiPoly two_var_p(const ParameterArray& pa) {
    const Field& f = pa.field;
    std::size_t n = pa.d + 1;
    std::vector<Vec> c(n, Vec(n, Scalar(f)));
    Poly eta = Poly::one(f), tau = Poly::one(f);
    Scalar phiprod = Scalar::one(f);
    for (std::size_t h = 0; h < n; ++h) {
        if (h) {
            eta = eta * Poly::linear(pa.theta[pa.d - h + 1]);
            tau = tau * Poly::linear(pa.theta_star[h - 1]);
            phiprod *= pa.phi[h - 1];
        }
        Scalar w = phiprod.inv();
        Vec tw = (tau * w).coeffs();
        const Vec& ec = eta.coeffs();
        for (std::size_t a = 0; a < ec.size(); ++a)
            for (std::size_t b = 0; b < tw.size(); ++b) c[a][b].add_product(ec[a], tw[b]);
    }
    return BiPoly(f, std::move(c));
}

struct TransitionData {
    ParameterArray pa;
    BiPoly p;
    Matrix P, scriptP, L;
    Vec ell;
    Scalar nu;
    GradedPolySeq s_polys, t_polys;
};

inline TransitionData build_transition(const ParameterArray& pa) {
    const Field& f = pa.field;
    std::size_t n = pa.d + 1;
    ScalarData sc = scalars(pa);
    TransitionData t{pa, two_var_p(pa), Matrix(f, n, n), Matrix(f, n, n), sc.L, sc.ell, sc.nu, {}, {}};
    for (std::size_t j = 0; j < n; ++j) {
        Poly tj = t.p.at_mu(pa.theta_star[j]);
        for (std::size_t i = 0; i < n; ++i) t.scriptP(i, j) = tj(pa.theta[i]);
        t.s_polys.polys.push_back(tj * sc.ell[j]);
        t.t_polys.polys.push_back(std::move(tj));
    }
    Poly top = Poly::from_roots(f, pa.theta);
    t.s_polys.polys.push_back(top);
    t.t_polys.polys.push_back(top);
    t.P = t.scriptP * t.L;
    return t;
}

// Basis construction: P is the transition matrix from {E_i ξ*_0} to {E*_i ξ_0}, ξ*_0 = E*_0 ξ_0.
inline Matrix transition_from_bases(const THSystemRep& s, const Scalar& scale) {
    const Field& f = s.pa.field;
    std::size_t n = s.pa.d + 1;
    std::optional<Vec> xi;
    for (std::size_t j = 0; j < n && !xi; ++j) {
        Vec c = s.E[0].column(j);
        for (const auto& x : c)
            if (!x.is_zero()) {
                xi = c;
                break;
            }
    }
    if (!xi) throw InternalError("E_0 has no nonzero column");
    for (auto& x : *xi) x *= scale;
    Vec xis = s.E_star[0] * *xi;
    Matrix B(f, n, n), C(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec b = s.E[i] * xis, c = s.E_star[i] * *xi;
        for (std::size_t k = 0; k < n; ++k) {
            B(k, i) = b[k];
            C(k, i) = c[k];
        }
    }
    return B.inverse() * C;
}

inline Matrix transition_from_bases(const THSystemRep& s) { return transition_from_bases(s, Scalar::one(s.pa.field)); }

// build_transition for the array and its three relatives, indexed by Group
struct RelativeTransitions {
    std::array<TransitionData, 4> data;

    const TransitionData& operator[](Group g) const { return data[static_cast<std::size_t>(g)]; }
};

inline RelativeTransitions relative_transitions(const ParameterArray& pa) {
    return {{build_transition(pa), build_transition(relative(pa, Group::star)), build_transition(relative(pa, Group::tilde)),
             build_transition(relative(pa, Group::tilde_star))}};
}

inline IdentityReport verify_pp_star(const RelativeTransitions& rt) {
    IdentityReport r;
    const TransitionData& T = rt[Group::id];
    const Field& f = T.pa.field;
    std::size_t n = T.pa.d + 1;
    const Matrix &P = T.P, &Ps = rt[Group::star].P, &Pt = rt[Group::tilde].P, &Pts = rt[Group::tilde_star].P;
    // ν of the tilde relative is ν~ of the array
    Scalar nu_tilde = rt[Group::tilde].nu;
    Matrix nuI = Matrix::identity(f, n) * T.nu, nutI = Matrix::identity(f, n) * nu_tilde;
    r.items.emplace_back("P P* = nu I", P * Ps == nuI);
    r.items.emplace_back("P* P = nu I", Ps * P == nuI);
    r.items.emplace_back("Pt Pt* = nutilde I", Pt * Pts == nutI);
    r.items.emplace_back("Pt* Pt = nutilde I", Pts * Pt == nutI);
    r.items.emplace_back("nu* = nu", rt[Group::star].nu == T.nu);
    return r;
}

inline IdentityReport verify_pp_star(const ParameterArray& pa) { return verify_pp_star(relative_transitions(pa)); }

inline IdentityReport verify_zeta_relations(const RelativeTransitions& rt) {
    IdentityReport r;
    const auto &T = rt[Group::id], &Ts = rt[Group::star], &Tt = rt[Group::tilde], &Tts = rt[Group::tilde_star];
    r.items.emplace_back("scriptP^zeta = scriptPtilde*", T.scriptP.zeta_reflect() == Tts.scriptP);
    r.items.emplace_back("(scriptP*)^zeta = scriptPtilde", Ts.scriptP.zeta_reflect() == Tt.scriptP);
    r.items.emplace_back("p(mu,lambda) = ptilde*(lambda,mu)", T.p.swap() == Tts.p);
    r.items.emplace_back("p*(mu,lambda) = ptilde(lambda,mu)", Ts.p.swap() == Tt.p);
    return r;
}

inline IdentityReport verify_zeta_relations(const ParameterArray& pa) { return verify_zeta_relations(relative_transitions(pa)); }

// West and south structure of scriptP and P for the array and all of its relatives.
inline IdentityReport verify_vand_structure(const RelativeTransitions& rt) {
    IdentityReport r;
    for (Group g : {Group::id, Group::star, Group::tilde, Group::tilde_star}) {
        const TransitionData& T = rt[g];
        const TransitionData& Tts = rt[compose(g, Group::tilde_star)];
        const ParameterArray& q = T.pa;
        std::string tag = "[" + group_name(g) + "] ";
        std::size_t d = q.d;
        auto check = [&](const std::string& name, auto fn) {
            bool ok;
            try {
                ok = fn();
            } catch (const VandError&) {
                ok = false;
            }
            r.items.emplace_back(tag + name, ok);
        };
        r.items.emplace_back(tag + "relative of relative", relative(q, Group::tilde_star) == Tts.pa);
        check("scriptP west polys = t", [&] { return extract_west(T.scriptP, q.theta).polys == T.t_polys; });
        check("scriptP south polys = t~*", [&] { return extract_south(T.scriptP, q.theta_star).polys == Tts.t_polys; });
        check("P west polys = s", [&] { return extract_west(T.P, q.theta).polys == T.s_polys; });
        check("P south polys = t~*", [&] { return extract_south(T.P, q.theta_star).polys == Tts.t_polys; });
        // value tables t_j(θ_i) and t~*_k(θ*_j)
        std::vector<Vec> tv(d + 1), tsv(d + 1), sv(d + 1);
        for (std::size_t j = 0; j <= d; ++j)
            for (std::size_t i = 0; i <= d; ++i) {
                tv[j].push_back(T.t_polys.polys[j](q.theta[i]));
                sv[j].push_back(T.s_polys.polys[j](q.theta[i]));
                tsv[j].push_back(Tts.t_polys.polys[i](q.theta_star[j]));
            }
        bool boundary = true, cross = true;
        for (std::size_t i = 0; i <= d; ++i) {
            boundary = boundary && T.scriptP(i, 0).is_one() && T.scriptP(d, i).is_one() && T.P(i, 0).is_one() &&
                       T.P(d, i) == T.ell[i] && tv[i][d].is_one() && sv[i][d] == T.ell[i];
            for (std::size_t j = 0; j <= d; ++j) {
                Scalar pij = T.P(i, j);
                cross = cross && pij == T.ell[j] * tv[j][i] && pij == T.ell[j] * tsv[j][d - i] && pij == sv[j][i];
            }
        }
        r.items.emplace_back(tag + "boundary normalizations", boundary);
        r.items.emplace_back(tag + "P_ij = l_j t_j(th_i) = l_j t~*_{d-i}(th*_j) = s_j(th_i)", cross);
        r.items.emplace_back(tag + "P = scriptP L", T.P == T.scriptP * T.L);
    }
    return r;
}

inline IdentityReport verify_vand_structure(const ParameterArray& pa) { return verify_vand_structure(relative_transitions(pa)); }

inline IdentityReport verify_orthogonality(const TransitionData& T, const TransitionData& Tt) {
    IdentityReport r;
    const ParameterArray& pa = T.pa;
    const Field& f = pa.field;
    std::size_t d = pa.d, n = d + 1;
    ScalarData sc = scalars(pa);
    // values at θ_m of t_i, t~_i, s_i, s~_i
    std::vector<Vec> t(n), tt(n), s(n), st(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t m = 0; m < n; ++m) {
            t[i].push_back(T.t_polys.polys[i](pa.theta[m]));
            tt[i].push_back(Tt.t_polys.polys[i](pa.theta[m]));
            s[i].push_back(T.s_polys.polys[i](pa.theta[m]));
            st[i].push_back(Tt.s_polys.polys[i](pa.theta[m]));
        }
    bool f1 = true, f2 = true, f3 = true, f4 = true;
    Scalar zero(f);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Scalar a(f), c(f);
            for (std::size_t m = 0; m < n; ++m) {
                a += t[i][m] * tt[j][m] * sc.ell_star[m];
                c += s[i][m] * st[j][m] * sc.ell_star[m];
            }
            f1 = f1 && a == (i + j == d ? sc.nu / sc.ell[i] : zero);
            f3 = f3 && c == (i + j == d ? sc.nu * sc.ell_tilde[j] : zero);
        }
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t k = 0; k < n; ++k) {
            Scalar b(f), e(f);
            for (std::size_t i = 0; i < n; ++i) {
                b += t[i][m] * tt[d - i][k] * sc.ell[i];
                e += s[i][m] * st[d - i][k] / sc.ell_tilde[d - i];
            }
            Scalar rhs = m == k ? sc.nu / sc.ell_star[m] : zero;
            f2 = f2 && b == rhs;
            f4 = f4 && e == rhs;
        }
    r.items.emplace_back("sum_n t_i t~_j l*_n = delta nu / l_i", f1);
    r.items.emplace_back("sum_i t_i(th_m) t~_{d-i}(th_n) l_i = delta nu / l*_m", f2);
    r.items.emplace_back("sum_n s_i s~_j l*_n = delta nu l~_j", f3);
    r.items.emplace_back("sum_i s_i(th_m) s~_{d-i}(th_n) / l~_{d-i} = delta nu / l*_m", f4);
    return r;
}

inline IdentityReport verify_orthogonality(const ParameterArray& pa) {
    return verify_orthogonality(build_transition(pa), build_transition(relative(pa, Group::tilde)));
}

}  // namespace thvand
