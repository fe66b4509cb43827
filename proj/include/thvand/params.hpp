#pragma once

#include "thvand/field.hpp"

#include <optional>
#include <string>

namespace thvand {

struct ParameterArray {
    Field field;
    std::size_t d;
    Vec theta, theta_star, phi;

    bool operator==(const ParameterArray& o) const {
        return field == o.field && d == o.d && theta == o.theta && theta_star == o.theta_star && phi == o.phi;
    }
    bool operator!=(const ParameterArray& o) const { return !(*this == o); }
};

class ValidationError : public std::runtime_error {
public:
    enum class Code { DuplicateTheta, DuplicateThetaStar, ZeroPhi, LengthMismatch, FieldMismatch, ZeroScale };

    ValidationError(Code c, std::size_t i, std::size_t j, const std::string& msg)
        : std::runtime_error(msg), code(c), i(i), j(j) {}

    static std::string code_name(Code c) {
        switch (c) {
            case Code::DuplicateTheta: return "DuplicateTheta";
            case Code::DuplicateThetaStar: return "DuplicateThetaStar";
            case Code::ZeroPhi: return "ZeroPhi";
            case Code::LengthMismatch: return "LengthMismatch";
            case Code::FieldMismatch: return "FieldMismatch";
            case Code::ZeroScale: return "ZeroScale";
        }
        return "?";
    }

    Code code;
    std::size_t i, j;
};

inline ParameterArray validate(const Field& f, Vec theta, Vec theta_star, Vec phi) {
    using C = ValidationError::Code;
    if (theta.empty() || theta_star.size() != theta.size() || phi.size() + 1 != theta.size())
        throw ValidationError(C::LengthMismatch, theta.size(), theta_star.size(),
                              "LengthMismatch: need d+1 thetas, d+1 dual thetas and d phis");
    for (const Vec* v : {&theta, &theta_star, &phi})
        for (const auto& x : *v)
            if (x.field() != f) throw ValidationError(C::FieldMismatch, 0, 0, "FieldMismatch: expected " + f.name());
    auto distinct = [](const Vec& v, C code, const char* name) {
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = i + 1; j < v.size(); ++j)
                if (v[i] == v[j])
                    throw ValidationError(code, i, j,
                                          std::string(name) + "(" + std::to_string(i) + "," + std::to_string(j) + ")");
    };
    distinct(theta, C::DuplicateTheta, "DuplicateTheta");
    distinct(theta_star, C::DuplicateThetaStar, "DuplicateThetaStar");
    for (std::size_t i = 0; i < phi.size(); ++i)
        if (phi[i].is_zero()) throw ValidationError(C::ZeroPhi, i + 1, 0, "ZeroPhi(" + std::to_string(i + 1) + ")");
    std::size_t d = phi.size();
    return ParameterArray{f, d, std::move(theta), std::move(theta_star), std::move(phi)};
}

inline ParameterArray validate(const ParameterArray& pa) { return validate(pa.field, pa.theta, pa.theta_star, pa.phi); }

inline ParameterArray affine(const ParameterArray& pa, const Scalar& alpha, const Scalar& beta,
                             const Scalar& alpha_star, const Scalar& beta_star) {
    if (alpha.is_zero() || alpha_star.is_zero())
        throw ValidationError(ValidationError::Code::ZeroScale, 0, 0, "ZeroScale: alpha and alpha* must be nonzero");
    ParameterArray r = pa;
    for (auto& t : r.theta) t = alpha * t + beta;
    for (auto& t : r.theta_star) t = alpha_star * t + beta_star;
    for (auto& p : r.phi) p = alpha * alpha_star * p;
    return r;
}

enum class Group { id, star, tilde, tilde_star };

inline Group compose(Group g, Group h) {
    // Z2 x Z2 with star = (1,0), tilde = (0,1)
    auto bits = [](Group x) { return static_cast<int>(x == Group::star || x == Group::tilde_star) |
                                     (static_cast<int>(x == Group::tilde || x == Group::tilde_star) << 1); };
    switch (bits(g) ^ bits(h)) {
        case 0: return Group::id;
        case 1: return Group::star;
        case 2: return Group::tilde;
        default: return Group::tilde_star;
    }
}

inline std::string group_name(Group g) {
    switch (g) {
        case Group::id: return "id";
        case Group::star: return "star";
        case Group::tilde: return "tilde";
        case Group::tilde_star: return "tilde_star";
    }
    return "?";
}

inline std::optional<Group> parse_group(const std::string& s) {
    for (Group g : {Group::id, Group::star, Group::tilde, Group::tilde_star})
        if (group_name(g) == s) return g;
    return std::nullopt;
}

inline ParameterArray relative(const ParameterArray& pa, Group g) {
    ParameterArray r = pa;
    switch (g) {
        case Group::id: break;
        case Group::star:
            r.theta = pa.theta_star;
            r.theta_star = pa.theta;
            r.phi = reversed(pa.phi);
            break;
        case Group::tilde:
            r.theta = reversed(pa.theta);
            r.theta_star = reversed(pa.theta_star);
            r.phi = reversed(pa.phi);
            break;
        case Group::tilde_star:
            r.theta = reversed(pa.theta_star);
            r.theta_star = reversed(pa.theta);
            break;
    }
    return r;
}

struct AffineWitness {
    Scalar alpha, beta, alpha_star, beta_star;
};

// Witness maps pa to other: other = affine(pa, witness).
inline std::optional<AffineWitness> is_affine_related(const ParameterArray& pa, const ParameterArray& other) {
    if (pa.d != other.d || pa.field != other.field) return std::nullopt;
    const Field& f = pa.field;
    if (pa.d == 0) {
        Scalar one = Scalar::one(f);
        return AffineWitness{one, other.theta[0] - pa.theta[0], one, other.theta_star[0] - pa.theta_star[0]};
    }
    auto solve = [](const Vec& from, const Vec& to) {
        Scalar a = (to[1] - to[0]) / (from[1] - from[0]);
        return std::make_pair(a, to[0] - a * from[0]);
    };
    auto [a, b] = solve(pa.theta, other.theta);
    auto [as, bs] = solve(pa.theta_star, other.theta_star);
    AffineWitness w{a, b, as, bs};
    if (a.is_zero() || as.is_zero()) return std::nullopt;
    if (affine(pa, a, b, as, bs) != other) return std::nullopt;
    return w;
}

// Representative with θ0=0, θ1=1, θ*0=0, θ*1=1 (θ0=θ*0=0 when d=0).
inline ParameterArray canonical_reduced(const ParameterArray& pa) {
    const Field& f = pa.field;
    Scalar one = Scalar::one(f);
    if (pa.d == 0) return affine(pa, one, -pa.theta[0], one, -pa.theta_star[0]);
    Scalar a = (pa.theta[1] - pa.theta[0]).inv();
    Scalar as = (pa.theta_star[1] - pa.theta_star[0]).inv();
    return affine(pa, a, -a * pa.theta[0], as, -as * pa.theta_star[0]);
}

}  // namespace thvand
