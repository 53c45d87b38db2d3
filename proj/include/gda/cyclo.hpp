#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "gda/config.hpp"
#include "gda/error.hpp"

namespace gda {

long euler_phi(long n);

// Phi_n as integer coefficients, ascending degree.  Computed by exact
// division of x^n - 1 by the cyclotomic polynomials of the proper divisors;
// results are cached process-wide.
const std::vector<mpz_class>& cyclotomic_polynomial(long n);

// zeta_n^e with 0 <= e < n.
struct RootExponent {
    long e = 0;
    long n = 1;

    RootExponent() = default;
    RootExponent(long e_, long n_);
};

RootExponent rescale_order(RootExponent r, long target_n);  // requires r.n | target_n

// An element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^{phi(n)-1},
// always reduced modulo Phi_n with coefficients in lowest terms.
class CycNumber {
public:
    explicit CycNumber(long n);
    static CycNumber zero(long n) { return CycNumber(n); }
    static CycNumber one(long n);
    static CycNumber from_rational(const mpq_class& q, long n);
    static CycNumber root(RootExponent r);  // embeds zeta^e
    static CycNumber from_coords(std::vector<mpq_class> coords, long n);

    long root_order() const { return n_; }
    bool is_zero() const;
    const std::vector<mpq_class>& coords() const { return c_; }

    CycNumber operator-() const;
    friend CycNumber operator+(const CycNumber& a, const CycNumber& b);
    friend CycNumber operator-(const CycNumber& a, const CycNumber& b);
    friend CycNumber operator*(const CycNumber& a, const CycNumber& b);
    bool operator==(const CycNumber& o) const { return n_ == o.n_ && c_ == o.c_; }

    CycNumber inverse() const;  // throws PreconditionError on zero
    CycNumber embedded(long target_n) const;  // Q(zeta_n) into Q(zeta_(n')), n | n'

    std::string str() const;  // coords as space-separated rationals

private:
    long n_;
    std::vector<mpq_class> c_;
};

}  // namespace gda
