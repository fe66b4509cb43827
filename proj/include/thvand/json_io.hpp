#pragma once

#include "thvand/field.hpp"
#include "thvand/params.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace thvand::json_io {

using json = nlohmann::json;

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline json field_to_json(const Field& f) {
    if (f.is_rational()) return {{"kind", "rational"}};
    return {{"kind", "prime"}, {"p", f.modulus()}};
}

inline Field field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind")) throw FormatError("field must be an object with a \"kind\"");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "rational") return Field::rational();
    if (kind == "prime") {
        if (!j.contains("p") || !j.at("p").is_number_unsigned()) throw FormatError("prime field needs a positive integer \"p\"");
        return Field::prime(j.at("p").get<std::uint64_t>());
    }
    throw FormatError("unknown field kind \"" + kind + "\"");
}

inline json scalar_to_json(const Scalar& s) { return s.str(); }

inline Scalar scalar_from_json(const Field& f, const json& j) {
    if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
    if (j.is_number_integer()) return Scalar(f, j.get<long>());
    throw FormatError("scalar must be a string like \"-7/2\" or an integer");
}

inline json vec_to_json(const Vec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(scalar_to_json(x));
    return a;
}

inline Vec vec_from_json(const Field& f, const json& j) {
    if (!j.is_array()) throw FormatError("expected an array of scalars");
    Vec v;
    for (const auto& x : j) v.push_back(scalar_from_json(f, x));
    return v;
}

inline json matrix_to_json(const Matrix& m) {
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
        a.push_back(std::move(row));
    }
    return a;
}

inline Matrix matrix_from_json(const Field& f, const json& j) {
    if (!j.is_array() || j.empty()) throw FormatError("matrix must be a non-empty array of rows");
    std::size_t rows = j.size(), cols = j[0].is_array() ? j[0].size() : 0;
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw FormatError("matrix rows must have equal length");
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = scalar_from_json(f, j[i][k]);
    }
    return m;
}

inline json matrices_to_json(const std::vector<Matrix>& ms) {
    json a = json::array();
    for (const auto& m : ms) a.push_back(matrix_to_json(m));
    return a;
}

inline json poly_to_json(const Poly& p) { return vec_to_json(p.coeffs()); }

inline json polys_to_json(const std::vector<Poly>& ps) {
    json a = json::array();
    for (const auto& p : ps) a.push_back(poly_to_json(p));
    return a;
}

inline json bipoly_to_json(const BiPoly& p) {
    json a = json::array();
    for (const auto& row : p.coeffs()) a.push_back(vec_to_json(row));
    return a;
}

inline json pa_to_json(const ParameterArray& pa) {
    return {{"field", field_to_json(pa.field)},
            {"d", pa.d},
            {"theta", vec_to_json(pa.theta)},
            {"theta_star", vec_to_json(pa.theta_star)},
            {"phi", vec_to_json(pa.phi)}};
}

// Parses the raw triple; validation is left to the caller.
inline ParameterArray pa_from_json(const json& j) {
    if (!j.is_object()) throw FormatError("parameter array must be a JSON object");
    for (const char* key : {"field", "theta", "theta_star", "phi"})
        if (!j.contains(key)) throw FormatError(std::string("missing key \"") + key + "\"");
    Field f = field_from_json(j.at("field"));
    ParameterArray pa{f, 0, vec_from_json(f, j.at("theta")), vec_from_json(f, j.at("theta_star")), vec_from_json(f, j.at("phi"))};
    pa.d = pa.theta.empty() ? 0 : pa.theta.size() - 1;
    if (j.contains("d") && (!j.at("d").is_number_unsigned() || j.at("d").get<std::size_t>() != pa.d))
        throw FormatError("\"d\" disagrees with the length of theta");
    return pa;
}

}  // namespace thvand::json_io
