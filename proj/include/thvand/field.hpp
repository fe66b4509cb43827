#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace thvand {

class FieldError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline bool is_prime(std::uint64_t n) {
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof n, 0, 0, &n);
    return mpz_probab_prime_p(z.get_mpz_t(), 25) > 0;
}

class Field {
public:
    enum class Kind { rational, prime };

    static Field rational() { return Field(Kind::rational, 0); }
    static Field prime(std::uint64_t p) {
        if (p >= (std::uint64_t(1) << 62))
            throw FieldError("prime modulus too large: " + std::to_string(p));
        if (!is_prime(p)) throw FieldError("modulus is not prime: " + std::to_string(p));
        return Field(Kind::prime, p);
    }

    Kind kind() const { return kind_; }
    bool is_rational() const { return kind_ == Kind::rational; }
    std::uint64_t modulus() const { return p_; }

    bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    std::string name() const { return is_rational() ? "Q" : "GF(" + std::to_string(p_) + ")"; }

private:
    Field(Kind k, std::uint64_t p) : kind_(k), p_(p) {}
    Kind kind_;
    std::uint64_t p_;
};

// An exact element of Q or GF(p). Rationals are kept canonical by GMP.
class Scalar {
public:
    explicit Scalar(const Field& f) : f_(f) {}
    Scalar(const Field& f, long v) : f_(f) {
        if (f_.is_rational()) {
            if (v != 0) v_.emplace<mpq_class>(v);
        } else {
            v_ = reduce_signed(v);
        }
    }
    Scalar(const Field& f, long num, long den) : Scalar(f, mpq_class(num, den)) {}
    Scalar(const Field& f, const mpq_class& v) : f_(f) {
        mpq_class c(v);
        if (c.get_den() == 0) throw FieldError("zero denominator");
        c.canonicalize();
        if (f_.is_rational()) {
            v_ = std::move(c);
        } else {
            Scalar n(f, c.get_num()), d(f, c.get_den());
            if (d.is_zero()) throw FieldError("denominator vanishes modulo " + std::to_string(f.modulus()));
            v_ = (n / d).res();
        }
    }
    Scalar(const Field& f, const mpz_class& v) : f_(f) {
        if (f_.is_rational()) {
            v_.emplace<mpq_class>(v);
        } else {
            mpz_class p(std::to_string(f.modulus()));
            mpz_class m = v % p;
            if (m < 0) m += p;
            v_ = static_cast<std::uint64_t>(std::stoull(m.get_str()));
        }
    }

    static Scalar zero(const Field& f) { return Scalar(f); }
    static Scalar one(const Field& f) { return Scalar(f, 1L); }

    // Accepts "3", "-7/2"; over GF(p) the value is reduced to a residue.
    static Scalar parse(const Field& f, std::string s) {
        // accept the typographic minus sign as well
        for (std::size_t k; (k = s.find("\xE2\x88\x92")) != std::string::npos;) s.replace(k, 3, "-");
        mpq_class v;
        if (s.empty() || v.set_str(s, 10) != 0) throw FieldError("malformed scalar: \"" + s + "\"");
        if (v.get_den() == 0) throw FieldError("zero denominator: \"" + s + "\"");
        return Scalar(f, v);
    }

    const Field& field() const { return f_; }
    const mpq_class& rational() const {
        if (!f_.is_rational()) throw FieldError("not a rational scalar");
        return q();
    }
    std::uint64_t residue() const {
        if (f_.is_rational()) throw FieldError("not a prime-field scalar");
        return res();
    }

    bool is_zero() const {
        if (const auto* r = std::get_if<std::uint64_t>(&v_)) return f_.is_rational() || *r == 0;
        return sgn(*std::get_if<mpq_class>(&v_)) == 0;
    }
    bool is_one() const { return f_.is_rational() ? q() == 1 : res() == 1; }

    std::string str() const { return f_.is_rational() ? q().get_str() : std::to_string(res()); }

    Scalar operator+(const Scalar& o) const {
        check(o);
        Scalar r(f_);
        if (f_.is_rational()) {
            if (o.is_zero()) return *this;
            if (is_zero()) return o;
            mpq_add(r.qm().get_mpq_t(), q().get_mpq_t(), o.q().get_mpq_t());
        } else {
            std::uint64_t s = res() + o.res();
            r.res() = s >= f_.modulus() ? s - f_.modulus() : s;
        }
        return r;
    }
    Scalar operator-(const Scalar& o) const {
        check(o);
        Scalar r(f_);
        if (f_.is_rational()) {
            if (o.is_zero()) return *this;
            mpq_sub(r.qm().get_mpq_t(), q().get_mpq_t(), o.q().get_mpq_t());
        } else {
            r.res() = res() >= o.res() ? res() - o.res() : res() + f_.modulus() - o.res();
        }
        return r;
    }
    Scalar operator-() const { return Scalar(f_) - *this; }
    Scalar operator*(const Scalar& o) const {
        check(o);
        Scalar r(f_);
        if (f_.is_rational()) {
            if (is_zero() || o.is_zero()) return r;
            mpq_mul(r.qm().get_mpq_t(), q().get_mpq_t(), o.q().get_mpq_t());
        } else {
            r.res() = mulmod(res(), o.res());
        }
        return r;
    }
    Scalar operator/(const Scalar& o) const { return *this * o.inv(); }

    Scalar inv() const {
        if (is_zero()) throw FieldError("division by zero");
        Scalar r(f_);
        if (f_.is_rational()) {
            mpq_inv(r.qm().get_mpq_t(), q().get_mpq_t());
        } else {
            // extended Euclid on (value, p)
            __int128 a = res(), b = f_.modulus(), x0 = 1, x1 = 0;
            while (b != 0) {
                __int128 t = a / b, rem = a - t * b;
                a = b;
                b = rem;
                rem = x0 - t * x1;
                x0 = x1;
                x1 = rem;
            }
            __int128 p = f_.modulus();
            r.res() = static_cast<std::uint64_t>(((x0 % p) + p) % p);
        }
        return r;
    }

    Scalar& operator+=(const Scalar& o) {
        check(o);
        if (f_.is_rational()) {
            if (o.is_zero()) return *this;
            if (is_zero()) return *this = o;
            mpq_add(qm().get_mpq_t(), q().get_mpq_t(), o.q().get_mpq_t());
        } else {
            std::uint64_t s = res() + o.res();
            res() = s >= f_.modulus() ? s - f_.modulus() : s;
        }
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        check(o);
        if (f_.is_rational()) {
            if (o.is_zero()) return *this;
            mpq_sub(qm().get_mpq_t(), q().get_mpq_t(), o.q().get_mpq_t());
        } else {
            res() = res() >= o.res() ? res() - o.res() : res() + f_.modulus() - o.res();
        }
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        check(o);
        if (f_.is_rational()) {
            if (is_zero()) return *this;
            if (o.is_zero()) return *this = Scalar(f_);
            mpq_mul(qm().get_mpq_t(), q().get_mpq_t(), o.q().get_mpq_t());
        } else {
            res() = mulmod(res(), o.res());
        }
        return *this;
    }
    Scalar& operator/=(const Scalar& o) { return *this *= o.inv(); }

    // this += a * b without a named temporary
    void add_product(const Scalar& a, const Scalar& b) {
        check(a);
        check(b);
        if (f_.is_rational()) {
            if (a.is_zero() || b.is_zero()) return;
            thread_local mpq_class t;
            mpq_mul(t.get_mpq_t(), a.q().get_mpq_t(), b.q().get_mpq_t());
            mpq_add(qm().get_mpq_t(), q().get_mpq_t(), t.get_mpq_t());
        } else {
            std::uint64_t s = res() + mulmod(a.res(), b.res());
            res() = s >= f_.modulus() ? s - f_.modulus() : s;
        }
    }

    bool operator==(const Scalar& o) const {
        return f_ == o.f_ && (f_.is_rational() ? q() == o.q() : res() == o.res());
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Total order used only for deterministic output (e.g. sorting roots).
    bool less(const Scalar& o) const {
        check(o);
        return f_.is_rational() ? q() < o.q() : res() < o.res();
    }

private:
    void check(const Scalar& o) const {
        if (f_ != o.f_) throw FieldError("field mismatch: " + f_.name() + " vs " + o.f_.name());
    }
    std::uint64_t reduce_signed(long v) const {
        auto p = static_cast<__int128>(f_.modulus());
        __int128 m = static_cast<__int128>(v) % p;
        if (m < 0) m += p;
        return static_cast<std::uint64_t>(m);
    }
    std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) const {
        if (f_.modulus() <= 0xFFFFFFFFULL) return a * b % f_.modulus();
        return static_cast<std::uint64_t>((unsigned __int128)a * b % f_.modulus());
    }
    // A rational zero may be held without an mpq (the residue slot is then unused).
    const mpq_class& q() const {
        static const mpq_class zero;
        const auto* p = std::get_if<mpq_class>(&v_);
        return p ? *p : zero;
    }
    mpq_class& qm() {
        if (auto* p = std::get_if<mpq_class>(&v_)) return *p;
        return v_.emplace<mpq_class>();
    }
    std::uint64_t& res() { return *std::get_if<std::uint64_t>(&v_); }
    std::uint64_t res() const { return *std::get_if<std::uint64_t>(&v_); }

    Field f_;
    std::variant<std::uint64_t, mpq_class> v_{std::uint64_t(0)};
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

using Vec = std::vector<Scalar>;

inline Vec make_vec(const Field& f, std::initializer_list<long> vs) {
    Vec out;
    for (long v : vs) out.emplace_back(f, v);
    return out;
}

class Matrix {
public:
    Matrix(const Field& f, std::size_t rows, std::size_t cols)
        : f_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar(f)) {}
    Matrix(const Field& f, std::initializer_list<std::initializer_list<long>> rows) : f_(f), rows_(rows.size()) {
        cols_ = rows.size() ? rows.begin()->size() : 0;
        for (const auto& r : rows) {
            if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
            for (long v : r) a_.emplace_back(f, v);
        }
    }
    Matrix(const Field& f, const std::vector<Vec>& rows) : f_(f), rows_(rows.size()) {
        cols_ = rows.empty() ? 0 : rows[0].size();
        for (const auto& r : rows) {
            if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
            for (const auto& v : r) a_.push_back(v);
        }
    }

    static Matrix identity(const Field& f, std::size_t n) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
        return m;
    }
    static Matrix diagonal(const Vec& d) {
        if (d.empty()) throw std::invalid_argument("empty diagonal");
        Matrix m(d[0].field(), d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    const Field& field() const { return f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec column(std::size_t j) const {
        Vec c;
        for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
        return c;
    }

    bool operator==(const Matrix& o) const {
        return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    Matrix operator+(const Matrix& o) const {
        same_shape(o);
        Matrix r(*this);
        for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        same_shape(o);
        Matrix r(*this);
        for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
        return r;
    }
    Matrix operator*(const Scalar& c) const {
        Matrix r(*this);
        for (auto& x : r.a_) x *= c;
        return r;
    }
    // Zero entries of the left factor are skipped; the split-basis matrices are mostly zero.
    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch in product");
        if (f_ != o.f_) throw FieldError("field mismatch in product");
        Matrix r(f_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Scalar& x = (*this)(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    const Scalar& y = o(k, j);
                    if (!y.is_zero()) r(i, j).add_product(x, y);
                }
            }
        return r;
    }
    Vec operator*(const Vec& v) const {
        if (cols_ != v.size()) throw std::invalid_argument("dimension mismatch in matrix-vector product");
        Vec r(rows_, Scalar(f_));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k)
                if (!(*this)(i, k).is_zero() && !v[k].is_zero()) r[i].add_product((*this)(i, k), v[k]);
        return r;
    }

    Matrix transpose() const {
        Matrix r(f_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    Scalar trace() const {
        require_square("trace");
        Scalar t(f_);
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    // trace(this * o) without forming the product
    Scalar trace_of_product(const Matrix& o) const {
        if (cols_ != o.rows_ || rows_ != o.cols_) throw std::invalid_argument("dimension mismatch in trace of product");
        Scalar t(f_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k)
                if (!(*this)(i, k).is_zero() && !o(k, i).is_zero()) t.add_product((*this)(i, k), o(k, i));
        return t;
    }

    // this - c I
    Matrix shifted(const Scalar& c) const {
        require_square("shift");
        Matrix r(*this);
        for (std::size_t i = 0; i < rows_; ++i) r(i, i) -= c;
        return r;
    }

    // (this - c I) * o without forming the shifted matrix
    Matrix shifted_times(const Scalar& c, const Matrix& o) const {
        require_square("shift");
        Matrix r = *this * o;
        if (c.is_zero()) return r;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (!o(i, j).is_zero()) r(i, j) -= c * o(i, j);
        return r;
    }

    // (S^ς)_{ij} = S_{d-j,d-i}: reflection across the anti-diagonal
    Matrix zeta_reflect() const {
        require_square("zeta_reflect");
        std::size_t d = rows_ - 1;
        Matrix r(f_, rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(d - j, d - i);
        return r;
    }

    // Fraction-free Gauss-Jordan on [M | I]; pivot is the first nonzero entry in the column.
    Matrix inverse() const {
        require_square("inverse");
        std::size_t n = rows_;
        Matrix aug(f_, n, 2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
            aug(i, n + i) = Scalar::one(f_);
        }
        Scalar prev = Scalar::one(f_);
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t piv = k;
            while (piv < n && aug(piv, k).is_zero()) ++piv;
            if (piv == n) throw FieldError("singular matrix");
            if (piv != k)
                for (std::size_t j = 0; j < 2 * n; ++j) std::swap(aug(piv, j), aug(k, j));
            Scalar pk = aug(k, k);
            Scalar prev_inv = prev.inv();
            for (std::size_t i = 0; i < n; ++i) {
                if (i == k) continue;
                Scalar lik = aug(i, k);
                for (std::size_t j = 0; j < 2 * n; ++j) {
                    if (j == k) continue;
                    aug(i, j) = (pk * aug(i, j) - lik * aug(k, j)) * prev_inv;
                }
                aug(i, k) = Scalar(f_);
            }
            prev = pk;
        }
        Matrix r(f_, n, n);
        for (std::size_t i = 0; i < n; ++i) {
            Scalar s = aug(i, i).inv();
            for (std::size_t j = 0; j < n; ++j) r(i, j) = aug(i, n + j) * s;
        }
        return r;
    }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            s += i ? ",[" : "[";
            for (std::size_t j = 0; j < cols_; ++j) s += (j ? "," : "") + (*this)(i, j).str();
            s += "]";
        }
        return s + "]";
    }

private:
    void same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("dimension mismatch");
        if (f_ != o.f_) throw FieldError("field mismatch");
    }
    void require_square(const char* what) const {
        if (!square() || rows_ == 0) throw std::invalid_argument(std::string(what) + " needs a nonempty square matrix");
    }

    Field f_;
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

inline std::ostream& operator<<(std::ostream& os, const Matrix& m) { return os << m.str(); }

// Dense univariate polynomial, coefficients in ascending degree.
class Poly {
public:
    explicit Poly(const Field& f) : f_(f) {}
    Poly(const Field& f, Vec coeffs) : f_(f), c_(std::move(coeffs)) { trim(); }

    static Poly constant(const Scalar& c) { return Poly(c.field(), Vec{c}); }
    static Poly one(const Field& f) { return constant(Scalar::one(f)); }
    static Poly lambda(const Field& f) { return Poly(f, Vec{Scalar(f), Scalar::one(f)}); }
    // λ - a
    static Poly linear(const Scalar& a) { return Poly(a.field(), Vec{-a, Scalar::one(a.field())}); }
    static Poly from_roots(const Field& f, const Vec& roots) {
        Poly p = one(f);
        for (const auto& r : roots) p = p * linear(r);
        return p;
    }

    const Field& field() const { return f_; }
    const Vec& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is reported as -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Scalar lead() const { return c_.empty() ? Scalar(f_) : c_.back(); }
    Scalar coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Scalar(f_); }
    bool monic() const { return !c_.empty() && c_.back().is_one(); }
    bool is_one_constant() const { return c_.size() == 1 && c_[0].is_one(); }

    Scalar operator()(const Scalar& x) const {
        if (x.field() != f_) throw FieldError("field mismatch in evaluation");
        Scalar acc(f_);
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
        return acc;
    }

    Matrix operator()(const Matrix& m) const {
        if (!m.square()) throw std::invalid_argument("polynomial of non-square matrix");
        Matrix acc(f_, m.rows(), m.cols());
        for (std::size_t k = c_.size(); k-- > 0;) {
            acc = acc * m;
            for (std::size_t i = 0; i < m.rows(); ++i) acc(i, i) += c_[k];
        }
        return acc;
    }

    Poly operator+(const Poly& o) const {
        check(o);
        Vec r(std::max(c_.size(), o.c_.size()), Scalar(f_));
        for (std::size_t k = 0; k < c_.size(); ++k) r[k] += c_[k];
        for (std::size_t k = 0; k < o.c_.size(); ++k) r[k] += o.c_[k];
        return Poly(f_, std::move(r));
    }
    Poly operator-(const Poly& o) const { return *this + o * Scalar(f_, -1L); }
    Poly operator*(const Scalar& s) const {
        Vec r = c_;
        for (auto& x : r) x *= s;
        return Poly(f_, std::move(r));
    }
    Poly operator*(const Poly& o) const {
        check(o);
        if (is_zero() || o.is_zero()) return Poly(f_);
        Vec r(c_.size() + o.c_.size() - 1, Scalar(f_));
        for (std::size_t a = 0; a < c_.size(); ++a)
            for (std::size_t b = 0; b < o.c_.size(); ++b) r[a + b].add_product(c_[a], o.c_[b]);
        return Poly(f_, std::move(r));
    }

    // Exact quotient by (λ - a); throws if a is not a root.
    Poly divide_linear(const Scalar& a) const {
        if (is_zero()) return *this;
        Vec q(c_.size() - 1, Scalar(f_));
        Scalar carry(f_);
        for (std::size_t k = c_.size(); k-- > 1;) {
            carry = c_[k] + carry * a;
            q[k - 1] = carry;
        }
        if (!(c_[0] + carry * a).is_zero()) throw FieldError("not a root");
        return Poly(f_, std::move(q));
    }

    bool operator==(const Poly& o) const { return f_ == o.f_ && c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    std::string str() const {
        if (c_.empty()) return "0";
        std::string s;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (c_[k].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += "(" + c_[k].str() + ")";
            if (k) s += k == 1 ? "*x" : "*x^" + std::to_string(k);
        }
        return s;
    }

private:
    void check(const Poly& o) const {
        if (f_ != o.f_) throw FieldError("field mismatch in polynomial arithmetic");
    }
    void trim() {
        for (const auto& x : c_)
            if (x.field() != f_) throw FieldError("field mismatch in polynomial coefficients");
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    Field f_;
    Vec c_;
};

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

// Bivariate polynomial, c[a][b] is the coefficient of λ^a μ^b.
class BiPoly {
public:
    explicit BiPoly(const Field& f) : f_(f) {}
    BiPoly(const Field& f, std::vector<Vec> c) : f_(f), c_(std::move(c)) { trim(); }

    // f(λ) g(μ)
    static BiPoly outer(const Poly& f, const Poly& g) {
        std::vector<Vec> c(f.coeffs().size(), Vec(g.coeffs().size(), Scalar(f.field())));
        for (std::size_t a = 0; a < f.coeffs().size(); ++a)
            for (std::size_t b = 0; b < g.coeffs().size(); ++b) c[a][b] = f.coeffs()[a] * g.coeffs()[b];
        return BiPoly(f.field(), std::move(c));
    }

    const Field& field() const { return f_; }
    const std::vector<Vec>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree_lambda() const { return static_cast<int>(c_.size()) - 1; }
    int degree_mu() const {
        int m = -1;
        for (const auto& row : c_)
            for (std::size_t b = 0; b < row.size(); ++b)
                if (!row[b].is_zero()) m = std::max(m, static_cast<int>(b));
        return m;
    }

    BiPoly operator+(const BiPoly& o) const {
        if (f_ != o.f_) throw FieldError("field mismatch in bivariate arithmetic");
        std::size_t na = std::max(c_.size(), o.c_.size()), nb = std::max(width(), o.width());
        std::vector<Vec> r(na, Vec(nb, Scalar(f_)));
        for (std::size_t a = 0; a < c_.size(); ++a)
            for (std::size_t b = 0; b < c_[a].size(); ++b) r[a][b] += c_[a][b];
        for (std::size_t a = 0; a < o.c_.size(); ++a)
            for (std::size_t b = 0; b < o.c_[a].size(); ++b) r[a][b] += o.c_[a][b];
        return BiPoly(f_, std::move(r));
    }
    BiPoly operator*(const Scalar& s) const {
        auto r = c_;
        for (auto& row : r)
            for (auto& x : row) x *= s;
        return BiPoly(f_, std::move(r));
    }

    Scalar operator()(const Scalar& x, const Scalar& y) const { return at_mu(y)(x); }

    // p(λ, y) as a polynomial in λ
    Poly at_mu(const Scalar& y) const {
        Vec r;
        for (const auto& row : c_) r.push_back(Poly(f_, row)(y));
        return Poly(f_, std::move(r));
    }

    // q(λ, μ) = p(μ, λ)
    BiPoly swap() const {
        std::size_t nb = width();
        std::vector<Vec> r(nb, Vec(c_.size(), Scalar(f_)));
        for (std::size_t a = 0; a < c_.size(); ++a)
            for (std::size_t b = 0; b < c_[a].size(); ++b) r[b][a] = c_[a][b];
        return BiPoly(f_, std::move(r));
    }

    bool operator==(const BiPoly& o) const { return f_ == o.f_ && c_ == o.c_; }
    bool operator!=(const BiPoly& o) const { return !(*this == o); }

private:
    std::size_t width() const {
        std::size_t w = 0;
        for (const auto& row : c_) w = std::max(w, row.size());
        return w;
    }
    void trim() {
        std::size_t w = width();
        for (auto& row : c_) row.resize(w, Scalar(f_));
        while (!c_.empty()) {
            bool zero = true;
            for (const auto& x : c_.back()) zero = zero && x.is_zero();
            if (!zero) break;
            c_.pop_back();
        }
        std::size_t keep = 0;
        for (const auto& row : c_)
            for (std::size_t b = 0; b < row.size(); ++b)
                if (!row[b].is_zero()) keep = std::max(keep, b + 1);
        for (auto& row : c_) row.resize(keep, Scalar(f_));
    }

    Field f_;
    std::vector<Vec> c_;
};

// τ_i = ∏_{h<i}(λ - θ_h)
inline Poly make_tau(const Vec& thetas, std::size_t i) {
    if (thetas.empty()) throw std::invalid_argument("empty sequence");
    if (i > thetas.size()) throw std::out_of_range("tau index " + std::to_string(i) + " out of range");
    const Field& f = thetas[0].field();
    Poly p = Poly::one(f);
    for (std::size_t h = 0; h < i; ++h) p = p * Poly::linear(thetas[h]);
    return p;
}

// η_i = ∏_{h<i}(λ - θ_{d-h})
inline Poly make_eta(const Vec& thetas, std::size_t i) {
    if (thetas.empty()) throw std::invalid_argument("empty sequence");
    if (i > thetas.size()) throw std::out_of_range("eta index " + std::to_string(i) + " out of range");
    const Field& f = thetas[0].field();
    std::size_t d = thetas.size() - 1;
    Poly p = Poly::one(f);
    for (std::size_t h = 0; h < i; ++h) p = p * Poly::linear(thetas[d - h]);
    return p;
}

// Value of τ_i at x without expanding the product.
inline Scalar tau_at(const Vec& thetas, std::size_t i, const Scalar& x) {
    if (i > thetas.size()) throw std::out_of_range("tau index out of range");
    Scalar v = Scalar::one(x.field());
    for (std::size_t h = 0; h < i; ++h) v *= x - thetas[h];
    return v;
}

inline Scalar eta_at(const Vec& thetas, std::size_t i, const Scalar& x) {
    if (i > thetas.size()) throw std::out_of_range("eta index out of range");
    std::size_t d = thetas.size() - 1;
    Scalar v = Scalar::one(x.field());
    for (std::size_t h = 0; h < i; ++h) v *= x - thetas[d - h];
    return v;
}

// τ_0..τ_{d+1} and η_0..η_{d+1} of one sequence.
class TauEtaFamily {
public:
    explicit TauEtaFamily(Vec thetas) : thetas_(std::move(thetas)) {
        for (std::size_t i = 0; i <= thetas_.size(); ++i) {
            tau_.push_back(make_tau(thetas_, i));
            eta_.push_back(make_eta(thetas_, i));
        }
    }
    const Vec& thetas() const { return thetas_; }
    std::size_t d() const { return thetas_.size() - 1; }
    const Poly& tau(std::size_t i) const { return tau_.at(i); }
    const Poly& eta(std::size_t i) const { return eta_.at(i); }

private:
    Vec thetas_;
    std::vector<Poly> tau_, eta_;
};

inline Vec reversed(const Vec& v) { return Vec(v.rbegin(), v.rend()); }

inline Scalar product(const Field& f, const Vec& v) {
    Scalar p = Scalar::one(f);
    for (const auto& x : v) p *= x;
    return p;
}

}  // namespace thvand
