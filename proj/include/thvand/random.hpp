#pragma once

#include "thvand/field.hpp"
#include "thvand/params.hpp"
#include "thvand/vand.hpp"

#include <cstdint>
#include <unordered_map>

namespace thvand {

// SplitMix64: 64-bit state, state += 0x9E3779B97F4A7C15 then the standard xor-shift-multiply finalizer.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // next() mod n; the bias is irrelevant at these ranges
    std::uint64_t below(std::uint64_t n) { return next() % n; }

private:
    std::uint64_t state_;
};

namespace detail {

// k distinct field elements in random order, without rejection.
inline Vec distinct_values(SplitMix64& g, const Field& f, std::size_t k) {
    Vec out;
    if (f.is_rational()) {
        // increasing walk with positive steps, then a Fisher-Yates shuffle
        mpq_class x(static_cast<long>(g.below(9)) - 4, static_cast<long>(1 + g.below(3)));
        for (std::size_t i = 0; i < k; ++i) {
            out.emplace_back(f, x);
            x += mpq_class(static_cast<long>(1 + g.below(4)), static_cast<long>(1 + g.below(3)));
        }
        for (std::size_t i = k; i > 1; --i) std::swap(out[i - 1], out[g.below(i)]);
        return out;
    }
    std::uint64_t p = f.modulus();
    if (p < k) throw FieldError("field too small: GF(" + std::to_string(p) + ") has fewer than " + std::to_string(k) + " elements");
    // partial Fisher-Yates over 0..p-1 with a sparse swap table
    std::unordered_map<std::uint64_t, std::uint64_t> moved;
    auto at = [&](std::uint64_t i) {
        auto it = moved.find(i);
        return it == moved.end() ? i : it->second;
    };
    for (std::size_t i = 0; i < k; ++i) {
        std::uint64_t j = i + g.below(p - i);
        std::uint64_t vi = at(i), vj = at(j);
        moved[j] = vi;
        out.emplace_back(f, static_cast<long>(vj));
    }
    return out;
}

inline Scalar nonzero_value(SplitMix64& g, const Field& f) {
    if (f.is_rational()) {
        long num = static_cast<long>(1 + g.below(6));
        if (g.below(2)) num = -num;
        return Scalar(f, num, static_cast<long>(1 + g.below(3)));
    }
    return Scalar(f, static_cast<long>(1 + g.below(f.modulus() - 1)));
}

}  // namespace detail

inline Scalar random_nonzero(SplitMix64& g, const Field& f) { return detail::nonzero_value(g, f); }

inline Scalar random_scalar(SplitMix64& g, const Field& f) {
    if (f.is_rational()) return Scalar(f, static_cast<long>(g.below(13)) - 6, static_cast<long>(1 + g.below(3)));
    return Scalar(f, static_cast<long>(g.below(f.modulus())));
}

inline Vec random_distinct(SplitMix64& g, const Field& f, std::size_t k) { return detail::distinct_values(g, f, k); }

inline ParameterArray random_pa(std::size_t d, const Field& f, SplitMix64& g) {
    Vec theta = detail::distinct_values(g, f, d + 1);
    Vec theta_star = detail::distinct_values(g, f, d + 1);
    Vec phi;
    for (std::size_t i = 0; i < d; ++i) phi.push_back(detail::nonzero_value(g, f));
    return validate(f, std::move(theta), std::move(theta_star), std::move(phi));
}

inline ParameterArray random_pa(std::size_t d, const Field& f, std::uint64_t seed) {
    SplitMix64 g(seed);
    return random_pa(d, f, g);
}

// X_{ij} = X_{i0} f_j(θ_i) for a random graded sequence with monic f_{d+1} = ∏(λ - θ_i)
inline WestVandSystem random_west(std::size_t d, const Field& f, SplitMix64& g) {
    Vec thetas = detail::distinct_values(g, f, d + 1);
    GradedPolySeq seq;
    seq.polys.push_back(Poly::one(f));
    for (std::size_t j = 1; j <= d; ++j) {
        Vec c;
        for (std::size_t k = 0; k < j; ++k) c.push_back(random_scalar(g, f));
        c.push_back(random_nonzero(g, f));
        seq.polys.emplace_back(f, std::move(c));
    }
    seq.polys.push_back(Poly::from_roots(f, thetas));
    Matrix X(f, d + 1, d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
        Scalar w = random_nonzero(g, f);
        for (std::size_t j = 0; j <= d; ++j) X(i, j) = w * seq.polys[j](thetas[i]);
    }
    return {std::move(X), std::move(thetas), std::move(seq)};
}

// Upper Hessenberg with a nonzero subdiagonal
inline Matrix random_hessenberg(std::size_t d, const Field& f, SplitMix64& g) {
    Matrix H(f, d + 1, d + 1);
    for (std::size_t i = 0; i <= d; ++i)
        for (std::size_t j = i ? i - 1 : 0; j <= d; ++j) H(i, j) = i == j + 1 ? random_nonzero(g, f) : random_scalar(g, f);
    return H;
}

}  // namespace thvand
