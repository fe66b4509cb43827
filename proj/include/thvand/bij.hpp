#pragma once

#include "thvand/params.hpp"
#include "thvand/thsystem.hpp"
#include "thvand/transition.hpp"
#include "thvand/vand.hpp"

#include <algorithm>
#include <vector>

namespace thvand {

struct NormalizedWSVand {
    Matrix X;
    Vec theta, theta_star;
    GradedPolySeq west_polys, south_polys;

    bool operator==(const NormalizedWSVand& o) const {
        return X == o.X && theta == o.theta && theta_star == o.theta_star && west_polys == o.west_polys &&
               south_polys == o.south_polys;
    }
};

// Throws VandError unless (X, θ, θ*) is a west and south normalized double Vandermonde system.
inline NormalizedWSVand certify_ws(const Matrix& X, const Vec& theta, const Vec& theta_star) {
    auto w = extract_west(X, theta);
    auto s = extract_south(X, theta_star);
    std::size_t d = X.rows() - 1;
    for (std::size_t i = 0; i <= d; ++i) {
        if (!X(i, 0).is_one()) throw VandError(VandError::Code::NotCompatible, i, "not west normalized at row " + std::to_string(i));
        if (!X(d, i).is_one()) throw VandError(VandError::Code::NotCompatible, i, "not south normalized at column " + std::to_string(i));
    }
    return {X, theta, theta_star, std::move(w.polys), std::move(s.polys)};
}

inline NormalizedWSVand rho(const ParameterArray& pa) {
    auto T = build_transition(validate(pa));
    try {
        return certify_ws(T.scriptP, pa.theta, pa.theta_star);
    } catch (const VandError& e) {
        throw InternalError(std::string("rho image failed certification: ") + e.what());
    }
}

// In the basis where A* is diagonal, A = X^{-1} D X; φ comes from the trace formula.
inline ParameterArray chi(const NormalizedWSVand& input) {
    auto ws = certify_ws(input.X, input.theta, input.theta_star);
    const Field& f = ws.X.field();
    std::size_t d = ws.X.rows() - 1;
    Matrix A = ws.X.inverse() * Matrix::diagonal(ws.theta) * ws.X;
    Matrix As = Matrix::diagonal(ws.theta_star);
    Matrix Es0 = idempotents_lagrange(As, ws.theta_star, 0);
    // tr(η_i(A) E*_0) = Σ_k (η_i(A) E*_0 e_k)_k, carried one column at a time
    std::vector<std::pair<std::size_t, Vec>> cols;
    for (std::size_t k = 0; k <= d; ++k) {
        Vec c = Es0.column(k);
        if (std::any_of(c.begin(), c.end(), [](const Scalar& x) { return !x.is_zero(); })) cols.emplace_back(k, std::move(c));
    }
    auto trace = [&] {
        Scalar t(f);
        for (const auto& [k, c] : cols) t += c[k];
        return t;
    };
    Vec phi;
    Scalar prev = trace();
    for (std::size_t i = 1; i <= d; ++i) {
        const Scalar& root = ws.theta[d - i + 1];
        for (auto& [k, c] : cols) {
            Vec next = A * c;
            for (std::size_t m = 0; m <= d; ++m) next[m] -= root * c[m];
            c = std::move(next);
        }
        Scalar cur = trace();
        if (prev.is_zero()) throw InternalError("zero trace in split sequence recovery");
        phi.push_back((ws.theta_star[0] - ws.theta_star[i]) * cur / prev);
        prev = cur;
    }
    return validate(f, ws.theta, ws.theta_star, std::move(phi));
}

inline Matrix reduce_to_matrix(const NormalizedWSVand& ws) { return ws.X; }

struct RTHSystemRep {
    std::vector<Matrix> E, E_star;
    ParameterArray provenance;
};

inline RTHSystemRep reduction(const THSystemRep& s) { return {s.E, s.E_star, s.pa}; }

// Split-basis coordinates are fixed up to a diagonal change of basis; pin it by making
// row 0 of E*_0 all ones.
inline RTHSystemRep canonical_form(const RTHSystemRep& r) {
    std::size_t n = r.E_star[0].rows();
    Vec g;
    for (std::size_t j = 0; j < n; ++j) {
        if (r.E_star[0](0, j).is_zero()) throw InternalError("E*_0 has a zero entry in row 0");
        g.push_back(r.E_star[0](0, j));
    }
    auto conj = [&](const Matrix& m) {
        Matrix out = m;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!m(i, j).is_zero()) out(i, j) = g[i] * m(i, j) / g[j];
        return out;
    };
    RTHSystemRep c{{}, {}, r.provenance};
    for (const auto& e : r.E) c.E.push_back(conj(e));
    for (const auto& e : r.E_star) c.E_star.push_back(conj(e));
    return c;
}

inline bool rth_isomorphic(const RTHSystemRep& a, const RTHSystemRep& b) {
    if (a.E.size() != b.E.size()) return false;
    auto ca = canonical_form(a), cb = canonical_form(b);
    return ca.E == cb.E && ca.E_star == cb.E_star;
}

inline bool rth_iso_invariant(const ParameterArray& pa, const ParameterArray& other) {
    return rth_isomorphic(reduction(build(pa)), reduction(build(other)));
}

struct FiveSetReport {
    bool affine_related = false;
    bool canonical_equal = false;
    bool matrix_equal = false;
    bool reduction_equal = false;

    bool consistent() const {
        return canonical_equal == affine_related && matrix_equal == affine_related && reduction_equal == affine_related;
    }
};

inline FiveSetReport five_set_roundtrip(const ParameterArray& pa, const ParameterArray& other) {
    FiveSetReport r;
    r.affine_related = is_affine_related(pa, other).has_value();
    r.canonical_equal = canonical_reduced(pa) == canonical_reduced(other);
    r.matrix_equal = reduce_to_matrix(rho(pa)) == reduce_to_matrix(rho(other));
    r.reduction_equal = rth_iso_invariant(pa, other);
    return r;
}

}  // namespace thvand
