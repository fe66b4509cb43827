#pragma once

#include "thvand/field.hpp"
#include "thvand/params.hpp"

#include <string>
#include <vector>

namespace th_test {

using namespace thvand;

inline const Field Q = Field::rational();
inline const Field GF101 = Field::prime(101);

inline Scalar q(const std::string& s) { return Scalar::parse(Q, s); }

inline Vec qs(std::initializer_list<const char*> xs) {
    Vec v;
    for (const char* x : xs) v.push_back(Scalar::parse(Q, x));
    return v;
}

inline Matrix qm(std::initializer_list<std::initializer_list<const char*>> rows) {
    std::vector<Vec> r;
    for (const auto& row : rows) {
        Vec v;
        for (const char* x : row) v.push_back(Scalar::parse(Q, x));
        r.push_back(std::move(v));
    }
    return Matrix(Q, r);
}

inline ParameterArray pa_q(std::initializer_list<long> th, std::initializer_list<long> ts, std::initializer_list<long> ph) {
    return validate(Q, make_vec(Q, th), make_vec(Q, ts), make_vec(Q, ph));
}

}  // namespace th_test
