#pragma once

#include "thvand/field.hpp"
#include "thvand/thsystem.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace thvand {

class VandError : public std::runtime_error {
public:
    enum class Code { NotCompatible, ZeroFirstColumn, DuplicateTheta, BadShape, NotHessenberg, NotGraded, NotMultiplicityFree };

    VandError(Code c, std::size_t index, const std::string& msg) : std::runtime_error(msg), code(c), index(index) {}

    static std::string code_name(Code c) {
        switch (c) {
            case Code::NotCompatible: return "NotCompatible";
            case Code::ZeroFirstColumn: return "ZeroFirstColumn";
            case Code::DuplicateTheta: return "DuplicateTheta";
            case Code::BadShape: return "BadShape";
            case Code::NotHessenberg: return "NotHessenberg";
            case Code::NotGraded: return "NotGraded";
            case Code::NotMultiplicityFree: return "NotMultiplicityFree";
        }
        return "?";
    }

    Code code;
    std::size_t index;
};

// f_0..f_{d+1}
struct GradedPolySeq {
    std::vector<Poly> polys;

    std::size_t d() const { return polys.size() - 2; }
    bool standard() const { return polys.back().monic(); }
    bool operator==(const GradedPolySeq& o) const { return polys == o.polys; }
    bool operator!=(const GradedPolySeq& o) const { return !(*this == o); }
};

inline void require_graded(const GradedPolySeq& s) {
    if (s.polys.size() < 2) throw VandError(VandError::Code::NotGraded, 0, "graded sequence needs f_0..f_{d+1}");
    if (!s.polys[0].is_one_constant())
        throw VandError(VandError::Code::NotGraded, 0, "f_0 must be 1");
    for (std::size_t i = 0; i < s.polys.size(); ++i)
        if (s.polys[i].degree() != static_cast<int>(i))
            throw VandError(VandError::Code::NotGraded, i, "f_" + std::to_string(i) + " has wrong degree");
}

struct WestVandSystem {
    Matrix X;
    Vec thetas;
    GradedPolySeq polys;
};

struct SouthVandSystem {
    Matrix X;
    Vec thetas;
    GradedPolySeq polys;
};

struct HessenbergPolyData {
    Matrix H;
    Scalar c_H;
    GradedPolySeq polys;
};

// Lagrange basis at distinct nodes: basis[i](xs[k]) = δ_ik.
inline std::vector<Poly> lagrange_basis(const Vec& xs) {
    const Field& f = xs.at(0).field();
    Poly node = Poly::from_roots(f, xs);
    std::vector<Poly> basis;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Scalar w = Scalar::one(f);
        for (std::size_t k = 0; k < xs.size(); ++k)
            if (k != i) w *= xs[i] - xs[k];
        basis.push_back(node.divide_linear(xs[i]) * w.inv());
    }
    return basis;
}

inline Poly combine(const std::vector<Poly>& basis, const Vec& ys) {
    const Field& f = ys.at(0).field();
    Vec c(basis.size(), Scalar(f));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (ys[i].is_zero()) continue;
        const Vec& b = basis[i].coeffs();
        for (std::size_t k = 0; k < b.size(); ++k) c[k].add_product(b[k], ys[i]);
    }
    return Poly(f, std::move(c));
}

// Lagrange interpolation through (xs[i], ys[i]).
inline Poly interpolate(const Vec& xs, const Vec& ys) { return combine(lagrange_basis(xs), ys); }

// X'_{ij} = X_{d-j,i}
inline Matrix rotate_clockwise(const Matrix& X) {
    std::size_t n = X.rows(), d = n - 1;
    Matrix r(X.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(i, j) = X(d - j, i);
    return r;
}

namespace detail {

inline void require_square_points(const Matrix& X, const Vec& thetas) {
    if (!X.square() || X.rows() == 0 || X.rows() != thetas.size())
        throw VandError(VandError::Code::BadShape, 0, "need an (d+1)x(d+1) matrix and d+1 points");
    for (std::size_t i = 0; i < thetas.size(); ++i)
        for (std::size_t j = i + 1; j < thetas.size(); ++j)
            if (thetas[i] == thetas[j])
                throw VandError(VandError::Code::DuplicateTheta, j,
                                "DuplicateTheta(" + std::to_string(i) + "," + std::to_string(j) + ")");
}

}  // namespace detail

inline WestVandSystem extract_west(const Matrix& X, const Vec& thetas) {
    detail::require_square_points(X, thetas);
    std::size_t n = X.rows();
    for (std::size_t i = 0; i < n; ++i)
        if (X(i, 0).is_zero()) throw VandError(VandError::Code::ZeroFirstColumn, i, "ZeroFirstColumn(" + std::to_string(i) + ")");
    GradedPolySeq seq;
    auto basis = lagrange_basis(thetas);
    Vec inv0;
    for (std::size_t i = 0; i < n; ++i) inv0.push_back(X(i, 0).inv());
    for (std::size_t j = 0; j < n; ++j) {
        Vec ys;
        for (std::size_t i = 0; i < n; ++i) ys.push_back(X(i, j) * inv0[i]);
        Poly fj = combine(basis, ys);
        if (fj.degree() != static_cast<int>(j))
            throw VandError(VandError::Code::NotCompatible, j, "NotCompatible(" + std::to_string(j) + ")");
        seq.polys.push_back(std::move(fj));
    }
    seq.polys.push_back(Poly::from_roots(X.field(), thetas));
    return {X, thetas, std::move(seq)};
}

inline SouthVandSystem extract_south(const Matrix& X, const Vec& theta_stars) {
    detail::require_square_points(X, theta_stars);
    auto w = extract_west(rotate_clockwise(X), theta_stars);
    return {X, theta_stars, std::move(w.polys)};
}

struct CompatibleLine {
    bool unconstrained = false;  // d = 0
    Vec base;                    // X_{i1}/X_{i0}

    // θ is compatible iff θ_i = a*base_i + b with a != 0
    bool contains(const Vec& thetas) const {
        if (unconstrained) return thetas.size() == 1;
        if (thetas.size() != base.size()) return false;
        Scalar a = (thetas[1] - thetas[0]) / (base[1] - base[0]);
        if (a.is_zero()) return false;
        Scalar b = thetas[0] - a * base[0];
        for (std::size_t i = 0; i < base.size(); ++i)
            if (thetas[i] != a * base[i] + b) return false;
        return true;
    }
};

inline CompatibleLine compatible_sequences(const Matrix& X) {
    if (!X.square() || X.rows() == 0) throw VandError(VandError::Code::BadShape, 0, "square matrix required");
    CompatibleLine c;
    if (X.rows() == 1) {
        c.unconstrained = true;
        return c;
    }
    for (std::size_t i = 0; i < X.rows(); ++i) {
        if (X(i, 0).is_zero()) throw VandError(VandError::Code::ZeroFirstColumn, i, "ZeroFirstColumn(" + std::to_string(i) + ")");
        c.base.push_back(X(i, 1) / X(i, 0));
    }
    for (std::size_t i = 0; i < c.base.size(); ++i)
        for (std::size_t j = i + 1; j < c.base.size(); ++j)
            if (c.base[i] == c.base[j]) throw VandError(VandError::Code::NotCompatible, 1, "NotCompatible(1)");
    return c;
}

inline void require_hessenberg(const Matrix& H) {
    if (!H.square() || H.rows() == 0) throw VandError(VandError::Code::BadShape, 0, "square matrix required");
    for (std::size_t i = 0; i < H.rows(); ++i)
        for (std::size_t j = 0; j < H.cols(); ++j) {
            if (i == j + 1 && H(i, j).is_zero())
                throw VandError(VandError::Code::NotHessenberg, i, "zero subdiagonal entry in row " + std::to_string(i));
            if (i > j + 1 && !H(i, j).is_zero())
                throw VandError(VandError::Code::NotHessenberg, i, "nonzero entry below the subdiagonal in row " + std::to_string(i));
        }
}

inline HessenbergPolyData polys_of_hessenberg(const Matrix& H) {
    require_hessenberg(H);
    const Field& f = H.field();
    std::size_t d = H.rows() - 1;
    Scalar cH = Scalar::one(f);
    for (std::size_t i = 1; i <= d; ++i) cH *= H(i, i - 1);
    Poly lam = Poly::lambda(f);
    GradedPolySeq seq{{Poly::one(f)}};
    // λ f_j = Σ_{i<=j+1} H_ij f_i, solved for f_{j+1}; the last step uses c_H
    for (std::size_t j = 0; j <= d; ++j) {
        Poly g = lam * seq.polys[j];
        for (std::size_t i = 0; i <= j; ++i) g = g - seq.polys[i] * H(i, j);
        seq.polys.push_back(j < d ? g * H(j + 1, j).inv() : g * cH);
    }
    return {H, cH, std::move(seq)};
}

inline Matrix connection_matrix(const GradedPolySeq& seq) {
    require_graded(seq);
    const Field& f = seq.polys[0].field();
    std::size_t d = seq.d();
    Matrix H(f, d + 1, d + 1);
    Poly lam = Poly::lambda(f);
    for (std::size_t j = 0; j <= d; ++j) {
        Poly g = lam * seq.polys[j];
        for (std::size_t i = j + 2; i-- > 0;) {
            Scalar c = g.coeff(i) / seq.polys[i].lead();
            g = g - seq.polys[i] * c;
            if (i <= d) H(i, j) = c;
        }
        if (!g.is_zero()) throw InternalError("connection coefficients left a remainder");
    }
    return H;
}

inline GradedPolySeq associated_seq(const GradedPolySeq& seq) {
    if (!seq.standard()) throw VandError(VandError::Code::NotGraded, seq.polys.size() - 1, "sequence is not standard");
    return polys_of_hessenberg(connection_matrix(seq).zeta_reflect()).polys;
}

namespace detail {

inline std::vector<mpz_class> divisors(mpz_class n) {
    n = abs(n);
    std::map<mpz_class, unsigned> fac;
    for (mpz_class p = 2; p * p <= n; ++p) {
        if (p > 1000000) {
            if (mpz_probab_prime_p(n.get_mpz_t(), 40) == 0)
                throw VandError(VandError::Code::NotMultiplicityFree, 0, "coefficient too hard to factor for root search");
            break;
        }
        while (n % p == 0) {
            ++fac[p];
            n /= p;
        }
    }
    if (n > 1) ++fac[n];
    std::vector<mpz_class> out{1};
    for (const auto& [p, e] : fac) {
        std::size_t m = out.size();
        mpz_class pk = 1;
        for (unsigned k = 0; k < e; ++k) {
            pk *= p;
            for (std::size_t t = 0; t < m; ++t) out.push_back(out[t] * pk);
        }
    }
    return out;
}

}  // namespace detail

// Distinct roots of f in the field, ascending.
inline Vec roots_in_field(const Poly& f) {
    const Field& F = f.field();
    if (f.is_zero()) throw VandError(VandError::Code::NotMultiplicityFree, 0, "zero polynomial");
    Vec roots;
    if (!F.is_rational()) {
        if (F.modulus() > 10000000)
            throw VandError(VandError::Code::NotMultiplicityFree, 0, "prime too large for exhaustive root scan");
        for (std::uint64_t x = 0; x < F.modulus(); ++x) {
            Scalar s(F, static_cast<long>(x));
            if (f(s).is_zero()) roots.push_back(s);
        }
        return roots;
    }
    // integer-cleared coefficients, then ±p/q with p | a_low, q | a_high
    mpz_class l = 1;
    for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.rational().get_den().get_mpz_t());
    std::vector<mpz_class> a;
    for (const auto& c : f.coeffs()) a.push_back(mpz_class(c.rational() * l));
    std::size_t low = 0;
    while (a[low] == 0) ++low;
    if (low > 0) roots.push_back(Scalar(F));
    if (low + 1 < a.size()) {
        auto ps = detail::divisors(a[low]), qs = detail::divisors(a.back());
        for (const auto& p : ps)
            for (const auto& q : qs) {
                mpz_class g;
                mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
                if (g != 1) continue;
                for (int sign : {1, -1}) {
                    Scalar x(F, mpq_class(mpz_class(sign * p), q));
                    if (f(x).is_zero()) roots.push_back(x);
                }
            }
    }
    std::sort(roots.begin(), roots.end(), [](const Scalar& x, const Scalar& y) { return x.less(y); });
    return roots;
}

struct Diagonalization {
    Matrix X, D;
    WestVandSystem west;
};

// H = X^{-1} D X with X_{ij} = f_j(θ_i); θ defaults to the ascending roots of f_{d+1}.
inline Diagonalization diag_west(const Matrix& H, std::optional<Vec> thetas = std::nullopt) {
    auto data = polys_of_hessenberg(H);
    const Field& f = H.field();
    std::size_t n = H.rows();
    const Poly& top = data.polys.polys.back();
    if (!thetas) {
        Vec r = roots_in_field(top);
        if (r.size() != n) throw VandError(VandError::Code::NotMultiplicityFree, r.size(), "characteristic polynomial does not split into distinct roots");
        thetas = std::move(r);
    } else {
        if (thetas->size() != n) throw VandError(VandError::Code::BadShape, 0, "eigenvalue count mismatch");
        for (std::size_t i = 0; i < n; ++i) {
            if (!top(thetas->at(i)).is_zero())
                throw VandError(VandError::Code::NotMultiplicityFree, i, "given value is not an eigenvalue");
            for (std::size_t j = i + 1; j < n; ++j)
                if (thetas->at(i) == thetas->at(j)) throw VandError(VandError::Code::NotMultiplicityFree, j, "repeated eigenvalue");
        }
    }
    Matrix X(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) X(i, j) = data.polys.polys[j](thetas->at(i));
    Matrix D = Matrix::diagonal(*thetas);
    if (X.inverse() * D * X != H) throw InternalError("diagonalization certificate failed");
    WestVandSystem w{X, *thetas, data.polys};
    return {std::move(X), std::move(D), std::move(w)};
}

struct InverseStructure {
    SouthVandSystem south;
    GradedPolySeq associated;
    bool polys_match = false;
    bool bottom_row_ok = false;
    bool similarity_ok = false;  // H = Y D Y^{-1} for Y = X^{-1}
    bool ok() const { return polys_match && bottom_row_ok && similarity_ok; }
};

inline InverseStructure inverse_structure(const WestVandSystem& w) {
    const Field& f = w.X.field();
    std::size_t d = w.X.rows() - 1;
    Matrix Y = w.X.inverse();
    Matrix H = connection_matrix(w.polys);
    Scalar cH = Scalar::one(f);
    for (std::size_t i = 1; i <= d; ++i) cH *= H(i, i - 1);
    InverseStructure r{extract_south(Y, w.thetas), associated_seq(w.polys)};
    r.polys_match = r.south.polys == r.associated;
    r.bottom_row_ok = true;
    for (std::size_t j = 0; j <= d; ++j) {
        const Scalar& t = w.thetas[j];
        Scalar expect = cH / (tau_at(w.thetas, j, t) * eta_at(w.thetas, d - j, t) * w.X(j, 0));
        if (Y(d, j) != expect) r.bottom_row_ok = false;
    }
    r.similarity_ok = Y * Matrix::diagonal(w.thetas) * w.X == H;
    return r;
}

}  // namespace thvand
