#pragma once

#include "thvand/field.hpp"
#include "thvand/params.hpp"

#include <string>
#include <utility>
#include <vector>

namespace thvand {

class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct THSystemRep {
    ParameterArray pa;
    Matrix A, A_star;
    std::vector<Matrix> E, E_star;
};

// A_{ii} = θ_{d-i}, A_{i,i-1} = φ_i
inline Matrix split_A(const ParameterArray& pa) {
    std::size_t n = pa.d + 1;
    Matrix a(pa.field, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = pa.theta[pa.d - i];
        if (i) a(i, i - 1) = pa.phi[i - 1];
    }
    return a;
}

// A*_{ii} = θ*_i, A*_{i-1,i} = 1
inline Matrix split_A_star(const ParameterArray& pa) {
    std::size_t n = pa.d + 1;
    Matrix a(pa.field, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = pa.theta_star[i];
        if (i) a(i - 1, i) = Scalar::one(pa.field);
    }
    return a;
}

namespace detail {

// table[k][r] = τ_k(θ_r) (or η_k), 0 <= k <= d
inline std::vector<Vec> value_table(const Vec& th, bool eta) {
    std::size_t n = th.size(), d = n - 1;
    std::vector<Vec> t{Vec(n, Scalar::one(th[0].field()))};
    for (std::size_t k = 1; k < n; ++k) {
        const Scalar& root = eta ? th[d - k + 1] : th[k - 1];
        Vec row;
        for (std::size_t r = 0; r < n; ++r) row.push_back(t.back()[r] * (th[r] - root));
        t.push_back(std::move(row));
    }
    return t;
}

struct ClosedTables {
    std::vector<Vec> tau, eta, taus, etas;
    Vec phiprod;

    explicit ClosedTables(const ParameterArray& pa)
        : tau(value_table(pa.theta, false)), eta(value_table(pa.theta, true)),
          taus(value_table(pa.theta_star, false)), etas(value_table(pa.theta_star, true)) {
        phiprod.push_back(Scalar::one(pa.field));
        for (const auto& p : pa.phi) phiprod.push_back(phiprod.back() * p);
    }
};

// E_r and E*_r from the closed form
inline std::pair<Matrix, Matrix> idempotent_pair(const ClosedTables& t, std::size_t r) {
    const auto &tau = t.tau, &eta = t.eta, &taus = t.taus, &etas = t.etas;
    const Field& f = tau[0][0].field();
    std::size_t n = tau.size(), d = n - 1;
    Matrix e(f, n, n), es(f, n, n);
    Scalar den = (tau[r][r] * eta[d - r][r]).inv();
    Scalar dens = (taus[r][r] * etas[d - r][r]).inv();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Scalar num = tau[d - i][r] * eta[j][r];
            if (!num.is_zero()) e(i, j) = t.phiprod[i] / t.phiprod[j] * num * den;
            Scalar nums = taus[i][r] * etas[d - j][r];
            if (!nums.is_zero()) es(i, j) = nums * dens;
        }
    return {std::move(e), std::move(es)};
}

}  // namespace detail

inline std::pair<std::vector<Matrix>, std::vector<Matrix>> idempotents_closed(const ParameterArray& pa) {
    detail::ClosedTables t(pa);
    std::vector<Matrix> E, Es;
    for (std::size_t r = 0; r <= pa.d; ++r) {
        auto [e, es] = detail::idempotent_pair(t, r);
        E.push_back(std::move(e));
        Es.push_back(std::move(es));
    }
    return {std::move(E), std::move(Es)};
}

// E_r = ∏_{j≠r} (M - θ_j I)/(θ_r - θ_j)
inline Matrix idempotents_lagrange(const Matrix& M, const Vec& thetas, std::size_t r) {
    if (!M.square() || M.rows() != thetas.size()) throw std::invalid_argument("matrix and eigenvalue count disagree");
    if (r >= thetas.size()) throw std::out_of_range("idempotent index out of range");
    for (std::size_t i = 0; i < thetas.size(); ++i)
        for (std::size_t j = i + 1; j < thetas.size(); ++j)
            if (thetas[i] == thetas[j])
                throw FieldError("repeated eigenvalue at " + std::to_string(i) + "," + std::to_string(j));
    const Field& f = M.field();
    std::size_t n = M.rows();
    Matrix acc = Matrix::identity(f, n);
    Scalar scale = Scalar::one(f);
    for (std::size_t j = 0; j < n; ++j) {
        if (j == r) continue;
        acc = M.shifted_times(thetas[j], acc);
        scale *= thetas[r] - thetas[j];
    }
    return acc * scale.inv();
}

struct AxiomReport {
    bool ok = true;
    std::string condition;
    std::size_t i = 0, j = 0;
};

namespace detail {

inline AxiomReport check_family(const Matrix& M, const Vec& th, const std::vector<Matrix>& E, const std::string& tag) {
    const Field& f = M.field();
    std::size_t n = E.size();
    Matrix sum(f, n, n), spectral(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                const Scalar& x = E[i](a, b);
                if (x.is_zero()) continue;
                sum(a, b) += x;
                spectral(a, b).add_product(x, th[i]);
            }
    if (sum != Matrix::identity(f, n)) return {false, "resolution_" + tag, 0, 0};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix p = E[i] * E[j];
            if (i == j ? p != E[i] : !p.is_zero()) return {false, "orthogonality_" + tag, i, j};
        }
    if (spectral != M) return {false, "spectral_" + tag, 0, 0};
    return {};
}

// F_i M F_j = 0 when i-j > 1 and nonzero when i-j = 1
inline AxiomReport check_hessenberg(const std::vector<Matrix>& F, const Matrix& M, const std::string& tag) {
    std::size_t n = F.size();
    for (std::size_t j = 0; j < n; ++j) {
        Matrix mf = M * F[j];
        for (std::size_t i = j + 1; i < n; ++i) {
            bool zero = (F[i] * mf).is_zero();
            if (i - j == 1 && zero) return {false, tag, i, j};
            if (i - j > 1 && !zero) return {false, tag, i, j};
        }
    }
    return {};
}

}  // namespace detail

// Checks in order: resolution, orthogonality and spectral decomposition for both families,
// then condition (iv) on E_i A* E_j and (v) on E*_i A E*_j.
inline AxiomReport verify_axioms(const THSystemRep& s) {
    for (auto r : {detail::check_family(s.A, s.pa.theta, s.E, "E"),
                   detail::check_family(s.A_star, s.pa.theta_star, s.E_star, "E_star")})
        if (!r.ok) return r;
    if (auto r = detail::check_hessenberg(s.E, s.A_star, "iv"); !r.ok) return r;
    if (auto r = detail::check_hessenberg(s.E_star, s.A, "v"); !r.ok) return r;
    return {};
}

struct BuildOptions {
    bool cross_check = true;
    bool verify = true;
};

inline THSystemRep build(const ParameterArray& input, BuildOptions opt = {}) {
    ParameterArray pa = validate(input);
    THSystemRep s{pa, split_A(pa), split_A_star(pa), {}, {}};
    auto [E, Es] = idempotents_closed(pa);
    for (std::size_t r = 0; opt.cross_check && r <= pa.d; ++r) {
        if (E[r] != idempotents_lagrange(s.A, pa.theta, r))
            throw InternalError("closed-form E_" + std::to_string(r) + " disagrees with Lagrange");
        if (Es[r] != idempotents_lagrange(s.A_star, pa.theta_star, r))
            throw InternalError("closed-form E*_" + std::to_string(r) + " disagrees with Lagrange");
    }
    s.E = std::move(E);
    s.E_star = std::move(Es);
    if (!opt.verify) return s;
    if (auto r = verify_axioms(s); !r.ok)
        throw InternalError("axiom " + r.condition + " fails at (" + std::to_string(r.i) + "," + std::to_string(r.j) + ")");
    return s;
}

struct ScalarData {
    Vec ell, ell_star, ell_tilde, ell_tilde_star;
    Scalar nu, nu_tilde;
    Matrix L;
};

namespace detail {

// ℓ_i for the sequence th: η_d(θ_0)/(τ_i(θ_i) η_{d-i}(θ_i))
inline Vec ell_of(const Vec& th) {
    std::size_t d = th.size() - 1;
    Scalar num = eta_at(th, d, th[0]);
    Vec out;
    for (std::size_t i = 0; i <= d; ++i) out.push_back(num / (tau_at(th, i, th[i]) * eta_at(th, d - i, th[i])));
    return out;
}

// τ_d(θ_d)/(η_i(θ_{d-i}) τ_{d-i}(θ_{d-i}))
inline Vec ell_tilde_of(const Vec& th) {
    std::size_t d = th.size() - 1;
    Scalar num = tau_at(th, d, th[d]);
    Vec out;
    for (std::size_t i = 0; i <= d; ++i)
        out.push_back(num / (eta_at(th, i, th[d - i]) * tau_at(th, d - i, th[d - i])));
    return out;
}

inline Scalar nu_closed(const ParameterArray& pa, std::size_t base) {
    const Field& f = pa.field;
    Scalar v = Scalar::one(f);
    for (std::size_t k = 0; k <= pa.d; ++k) {
        if (k == base) continue;
        v *= (pa.theta[base] - pa.theta[k]) * (pa.theta_star[base] - pa.theta_star[k]);
    }
    return v / product(f, pa.phi);
}

}  // namespace detail

inline ScalarData scalars(const ParameterArray& pa) {
    const Field& f = pa.field;
    std::size_t d = pa.d;
    ScalarData s{detail::ell_of(pa.theta_star),
                 detail::ell_of(pa.theta),
                 detail::ell_tilde_of(pa.theta_star),
                 detail::ell_tilde_of(pa.theta),
                 detail::nu_closed(pa, 0),
                 detail::nu_closed(pa, d),
                 Matrix(f, d + 1, d + 1)};
    s.L = Matrix::diagonal(s.ell);

    if (!s.ell[0].is_one()) throw InternalError("ell_0 != 1");
    for (const Vec* v : {&s.ell, &s.ell_star, &s.ell_tilde, &s.ell_tilde_star})
        for (const auto& x : *v)
            if (x.is_zero()) throw InternalError("vanishing ell scalar");
    Scalar ratio = tau_at(pa.theta_star, d, pa.theta_star[d]) / eta_at(pa.theta_star, d, pa.theta_star[0]);
    Scalar ratio_star = tau_at(pa.theta, d, pa.theta[d]) / eta_at(pa.theta, d, pa.theta[0]);
    for (std::size_t i = 0; i <= d; ++i) {
        if (s.ell_tilde[i] != ratio * s.ell[d - i]) throw InternalError("ell_tilde identity fails");
        if (s.ell_tilde_star[i] != ratio_star * s.ell_star[d - i]) throw InternalError("ell_tilde_star identity fails");
    }
    detail::ClosedTables tables(pa);
    auto [E0, Es0] = detail::idempotent_pair(tables, 0);
    auto [Ed, Esd] = detail::idempotent_pair(tables, d);
    if (s.nu * E0.trace_of_product(Es0) != Scalar::one(f)) throw InternalError("nu disagrees with 1/trace(E0 E*0)");
    if (s.nu_tilde * Ed.trace_of_product(Esd) != Scalar::one(f))
        throw InternalError("nu_tilde disagrees with 1/trace(Ed E*d)");
    return s;
}

enum class SplitVariant { main, i, ii, iii };

namespace detail {

// M_k = ∏_{h<k} (M - roots[h] I) for k = 0..count, built one factor at a time
inline std::vector<Matrix> product_chain(const Matrix& M, const Vec& roots, std::size_t count) {
    std::vector<Matrix> out{Matrix::identity(M.field(), M.rows())};
    for (std::size_t k = 0; k < count; ++k) out.push_back(M.shifted_times(roots[k], out.back()));
    return out;
}

}  // namespace detail

inline Vec split_from_traces(const THSystemRep& s, SplitVariant v = SplitVariant::main) {
    const auto& pa = s.pa;
    std::size_t d = pa.d;
    const Vec &th = pa.theta, &ts = pa.theta_star;
    // q[k] is the trace whose successive ratios give φ
    std::vector<Matrix> chain;
    const Matrix* idem = nullptr;
    switch (v) {
        case SplitVariant::main: chain = detail::product_chain(s.A, reversed(th), d); idem = &s.E_star[0]; break;
        case SplitVariant::i: chain = detail::product_chain(s.A_star, reversed(ts), d); idem = &s.E[0]; break;
        case SplitVariant::ii: chain = detail::product_chain(s.A, th, d); idem = &s.E_star[d]; break;
        case SplitVariant::iii: chain = detail::product_chain(s.A_star, ts, d); idem = &s.E[d]; break;
    }
    Vec q;
    for (std::size_t k = 0; k <= d; ++k) {
        q.push_back(chain[k].trace_of_product(*idem));
        if (q.back().is_zero()) throw InternalError("zero trace at k=" + std::to_string(k));
    }
    Vec phi;
    for (std::size_t i = 1; i <= d; ++i) {
        switch (v) {
            case SplitVariant::main: phi.push_back((ts[0] - ts[i]) * q[i] / q[i - 1]); break;
            case SplitVariant::i: phi.push_back((th[0] - th[d - i + 1]) * q[d - i + 1] / q[d - i]); break;
            case SplitVariant::ii: phi.push_back((ts[d] - ts[i - 1]) * q[d - i + 1] / q[d - i]); break;
            case SplitVariant::iii: phi.push_back((th[d] - th[d - i]) * q[i] / q[i - 1]); break;
        }
    }
    return phi;
}

struct IdentityReport {
    std::vector<std::pair<std::string, bool>> items;
    bool ok() const {
        for (const auto& [name, pass] : items)
            if (!pass) return false;
        return true;
    }
    std::string first_failure() const {
        for (const auto& [name, pass] : items)
            if (!pass) return name;
        return "";
    }
};

inline IdentityReport check_identities(const THSystemRep& s, const ScalarData& sc) {
    const auto& pa = s.pa;
    const Field& f = pa.field;
    std::size_t d = pa.d;
    const Vec &th = pa.theta, &ts = pa.theta_star;
    const auto &E = s.E, &Es = s.E_star;
    IdentityReport rep;
    auto add = [&](const std::string& name, bool pass) { rep.items.emplace_back(name, pass); };
    auto idx = [](const char* base, std::size_t i) { return std::string(base) + "[" + std::to_string(i) + "]"; };

    Matrix EdEs0E0 = E[d] * Es[0] * E[0];
    Matrix EsdE0Es0 = Es[d] * E[0] * Es[0];
    Matrix EdEsdE0 = E[d] * Es[d] * E[0];
    Matrix EsdEdEs0 = Es[d] * E[d] * Es[0];
    for (std::size_t i = 0; i <= d; ++i) {
        Matrix lhs = E[d] * Es[i] * E[0];
        Matrix lhs_star = Es[d] * E[i] * Es[0];
        add(idx("EdEsiE0=ell_i*EdEs0E0", i), lhs == EdEs0E0 * sc.ell[i]);
        add(idx("EsdEiEs0=ellstar_i*EsdE0Es0", i), lhs_star == EsdE0Es0 * sc.ell_star[i]);
        add(idx("EdEsiE0=elltilde_{d-i}*EdEsdE0", i), lhs == EdEsdE0 * sc.ell_tilde[d - i]);
        add(idx("EsdEiEs0=elltildestar_{d-i}*EsdEdEs0", i), lhs_star == EsdEdEs0 * sc.ell_tilde_star[d - i]);
    }
    add("nu*E0Es0E0=E0", E[0] * Es[0] * E[0] * sc.nu == E[0]);
    add("nu*Es0E0Es0=Es0", Es[0] * E[0] * Es[0] * sc.nu == Es[0]);
    add("nutilde*EdEsdEd=Ed", E[d] * Es[d] * E[d] * sc.nu_tilde == E[d]);
    add("nutilde*EsdEdEsd=Esd", Es[d] * E[d] * Es[d] * sc.nu_tilde == Es[d]);

    auto eta_A = detail::product_chain(s.A, reversed(th), d);
    auto eta_As = detail::product_chain(s.A_star, reversed(ts), d);
    auto tau_A = detail::product_chain(s.A, th, d);
    auto tau_As = detail::product_chain(s.A_star, ts, d);
    Scalar fwd = Scalar::one(f), back = Scalar::one(f);  // φ1⋯φi and φd⋯φ_{d-i+1}
    Scalar ds0 = Scalar::one(f), d0 = Scalar::one(f), dsd = Scalar::one(f), dd = Scalar::one(f);
    for (std::size_t i = 0; i <= d; ++i) {
        if (i) {
            fwd *= pa.phi[i - 1];
            back *= pa.phi[d - i];
            ds0 *= ts[0] - ts[i];
            d0 *= th[0] - th[i];
            dsd *= ts[d] - ts[d - i];
            dd *= th[d] - th[d - i];
        }
        add(idx("Es0 eta_i(A) Es0", i), Es[0] * eta_A[i] * Es[0] == Es[0] * (fwd / ds0));
        add(idx("E0 etastar_i(As) E0", i), E[0] * eta_As[i] * E[0] == E[0] * (back / d0));
        add(idx("Esd tau_i(A) Esd", i), Es[d] * tau_A[i] * Es[d] == Es[d] * (back / dsd));
        add(idx("Ed taustar_i(As) Ed", i), E[d] * tau_As[i] * E[d] == E[d] * (fwd / dd));
    }
    return rep;
}

}  // namespace thvand
