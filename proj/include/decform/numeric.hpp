#pragma once

// Shared numeric kernel: arbitrary-precision integers/rationals (GMP),
// arbitrary-precision floats (mpf) with an explicit working precision,
// a minimal complex type over mpf, and the error taxonomy used across
// the library (mapped to CLI exit codes in tools/).

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace decform {

using Int = mpz_class;
using Rat = mpq_class;
using BigFloat = mpf_class;

// invalid arguments / violated preconditions (CLI exit 2)
struct argument_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
// a numeric routine failed to converge / verify (CLI exit 1)
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// configured op budget or combinatorial guard exceeded (CLI exit 3)
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// floor of the k-th root of x >= 0
inline Int iroot_floor(const Int& x, unsigned long k) {
    if (x < 0) throw argument_error("iroot_floor: negative radicand");
    Int r;
    mpz_root(r.get_mpz_t(), x.get_mpz_t(), k);
    return r;
}

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int round_to_int(const BigFloat& x) {
    BigFloat t(x + 0.5, mpf_get_prec(x.get_mpf_t()));
    Int r;
    mpz_set_f(r.get_mpz_t(), BigFloat(floor(t)).get_mpf_t());
    return r;
}

inline double to_double(const Int& x) { return mpz_get_d(x.get_mpz_t()); }
inline double to_double(const Rat& x) { return mpq_get_d(x.get_mpq_t()); }
inline double to_double(const BigFloat& x) { return mpf_get_d(x.get_mpf_t()); }

// Minimal complex arithmetic over mpf. Every value carries its precision;
// binary ops inherit the wider operand's precision.
struct BigComplex {
    BigFloat re, im;

    BigComplex() : re(0.0, 64), im(0.0, 64) {}
    explicit BigComplex(unsigned long prec) : re(0.0, prec), im(0.0, prec) {}
    BigComplex(const BigFloat& r, const BigFloat& i) : re(r), im(i) {}
    BigComplex(double r, double i, unsigned long prec) : re(r, prec), im(i, prec) {}

    unsigned long prec() const {
        return std::max(mpf_get_prec(re.get_mpf_t()), mpf_get_prec(im.get_mpf_t()));
    }

    std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }

    BigComplex conj() const { return {re, BigFloat(-im)}; }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return {BigFloat(a.re + b.re), BigFloat(a.im + b.im)};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {BigFloat(a.re - b.re), BigFloat(a.im - b.im)};
    }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {BigFloat(a.re * b.re - a.im * b.im), BigFloat(a.re * b.im + a.im * b.re)};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        BigFloat den(b.re * b.re + b.im * b.im);
        return {BigFloat((a.re * b.re + a.im * b.im) / den),
                BigFloat((a.im * b.re - a.re * b.im) / den)};
    }
    BigComplex& operator+=(const BigComplex& o) { re += o.re; im += o.im; return *this; }
    BigComplex& operator-=(const BigComplex& o) { re -= o.re; im -= o.im; return *this; }

    BigFloat norm2() const { return BigFloat(re * re + im * im); }
    BigFloat abs() const { return BigFloat(sqrt(norm2())); }
    bool is_zero() const { return re == 0 && im == 0; }
};

inline BigComplex to_bigcomplex(const std::complex<double>& z, unsigned long prec) {
    return BigComplex(z.real(), z.imag(), prec);
}

// 12-significant-digit float formatting shared by CSV/JSON writers
std::string fmt_double(double x);

}  // namespace decform
