#include "gda/cyclo.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace gda {
namespace {

// dense polynomial helpers over mpq, ascending coefficients

void trim(std::vector<mpq_class>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

std::vector<mpq_class> poly_mul(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<mpq_class> out(a.size() + b.size() - 1, mpq_class(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

// remainder of a modulo monic-leading b
std::vector<mpq_class> poly_rem(std::vector<mpq_class> a, const std::vector<mpq_class>& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        mpq_class q = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
        trim(a);
    }
    return a;
}

std::pair<std::vector<mpq_class>, std::vector<mpq_class>> poly_divmod(std::vector<mpq_class> a,
                                                                      const std::vector<mpq_class>& b) {
    trim(a);
    std::vector<mpq_class> quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpq_class(0));
    while (a.size() >= b.size() && !a.empty()) {
        mpq_class q = a.back() / b.back();
        size_t shift = a.size() - b.size();
        quot[shift] = q;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
        trim(a);
    }
    trim(quot);
    return {quot, a};
}

std::vector<mpq_class> to_q(const std::vector<mpz_class>& p) {
    std::vector<mpq_class> out(p.size());
    for (size_t i = 0; i < p.size(); ++i) out[i] = mpq_class(p[i]);
    return out;
}

}  // namespace

long euler_phi(long n) {
    long result = n, m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

const std::vector<mpz_class>& cyclotomic_polynomial(long n) {
    if (n < 1 || n > limits::kMaxRootOrder) throw PreconditionError("cyclotomic_polynomial: order out of range");
    static std::map<long, std::vector<mpz_class>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);

    // iterative bottom-up so recursion never re-locks
    std::vector<long> need{n};
    for (size_t i = 0; i < need.size(); ++i)
        for (long d = 1; d <= need[i] / 2; ++d)
            if (need[i] % d == 0 && !cache.count(d)) need.push_back(d);
    std::sort(need.begin(), need.end());
    need.erase(std::unique(need.begin(), need.end()), need.end());
    for (long m : need) {
        if (cache.count(m)) continue;
        // x^m - 1
        std::vector<mpq_class> poly(m + 1, mpq_class(0));
        poly[0] = -1;
        poly[m] = 1;
        for (long d = 1; d < m; ++d) {
            if (m % d != 0) continue;
            auto [q, r] = poly_divmod(poly, to_q(cache.at(d)));
            if (!r.empty()) throw Error("cyclotomic_polynomial: non-exact division");
            poly = q;
        }
        std::vector<mpz_class> z(poly.size());
        for (size_t i = 0; i < poly.size(); ++i) {
            if (poly[i].get_den() != 1) throw Error("cyclotomic_polynomial: non-integer coefficient");
            z[i] = poly[i].get_num();
        }
        cache.emplace(m, std::move(z));
    }
    return cache.at(n);
}

RootExponent::RootExponent(long e_, long n_) {
    if (n_ < 1) throw PreconditionError("RootExponent: order must be positive");
    n = n_;
    e = ((e_ % n) + n) % n;
}

RootExponent rescale_order(RootExponent r, long target_n) {
    if (target_n < 1 || target_n % r.n != 0)
        throw PreconditionError("rescale_order: current order must divide target");
    return RootExponent(r.e * (target_n / r.n), target_n);
}

CycNumber::CycNumber(long n) : n_(n) {
    if (n < 1 || n > limits::kMaxRootOrder) throw PreconditionError("CycNumber: root order out of range");
    c_.assign(static_cast<size_t>(euler_phi(n)), mpq_class(0));
}

CycNumber CycNumber::one(long n) {
    CycNumber x(n);
    x.c_[0] = 1;
    return x;
}

CycNumber CycNumber::from_rational(const mpq_class& q, long n) {
    CycNumber x(n);
    x.c_[0] = q;
    return x;
}

CycNumber CycNumber::from_coords(std::vector<mpq_class> coords, long n) {
    CycNumber x(n);
    if (coords.size() != x.c_.size()) throw PreconditionError("CycNumber: wrong coordinate count");
    for (auto& q : coords) q.canonicalize();
    x.c_ = std::move(coords);
    return x;
}

CycNumber CycNumber::root(RootExponent r) {
    CycNumber x(r.n);
    std::vector<mpq_class> p(static_cast<size_t>(r.e) + 1, mpq_class(0));
    p[r.e] = 1;
    auto rem = poly_rem(std::move(p), to_q(cyclotomic_polynomial(r.n)));
    for (size_t i = 0; i < rem.size(); ++i) x.c_[i] = rem[i];
    return x;
}

bool CycNumber::is_zero() const {
    for (const auto& q : c_)
        if (q != 0) return false;
    return true;
}

CycNumber CycNumber::operator-() const {
    CycNumber out(n_);
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = -c_[i];
    return out;
}

CycNumber operator+(const CycNumber& a, const CycNumber& b) {
    if (a.n_ != b.n_) throw PreconditionError("CycNumber: mixed root orders");
    CycNumber out(a.n_);
    for (size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = a.c_[i] + b.c_[i];
    return out;
}

CycNumber operator-(const CycNumber& a, const CycNumber& b) {
    if (a.n_ != b.n_) throw PreconditionError("CycNumber: mixed root orders");
    CycNumber out(a.n_);
    for (size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = a.c_[i] - b.c_[i];
    return out;
}

CycNumber operator*(const CycNumber& a, const CycNumber& b) {
    if (a.n_ != b.n_) throw PreconditionError("CycNumber: mixed root orders");
    auto prod = poly_mul(a.c_, b.c_);
    auto rem = poly_rem(std::move(prod), to_q(cyclotomic_polynomial(a.n_)));
    CycNumber out(a.n_);
    for (size_t i = 0; i < rem.size(); ++i) out.c_[i] = rem[i];
    return out;
}

CycNumber CycNumber::inverse() const {
    if (is_zero()) throw PreconditionError("CycNumber: division by zero");
    // extended gcd of this and Phi_n over Q; Phi_n irreducible makes the gcd 1
    std::vector<mpq_class> r0 = to_q(cyclotomic_polynomial(n_)), r1 = c_;
    trim(r1);
    std::vector<mpq_class> s0, s1{mpq_class(1)};  // coefficients of the input polynomial
    while (!r1.empty()) {
        auto [q, r] = poly_divmod(r0, r1);
        auto qs = poly_mul(q, s1);
        std::vector<mpq_class> s2 = s0;
        if (s2.size() < qs.size()) s2.resize(qs.size(), mpq_class(0));
        for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1) throw Error("CycNumber: gcd with cyclotomic polynomial is not constant");
    // s0 * this = r0 (mod Phi); scale so the product is 1
    mpq_class scale = 1 / r0[0];
    auto inv = poly_rem(std::move(s0), to_q(cyclotomic_polynomial(n_)));
    CycNumber out(n_);
    for (size_t i = 0; i < inv.size(); ++i) out.c_[i] = inv[i] * scale;
    return out;
}

CycNumber CycNumber::embedded(long target_n) const {
    if (target_n % n_ != 0) throw PreconditionError("CycNumber: embedding requires divisible orders");
    long stride = target_n / n_;
    std::vector<mpq_class> p(static_cast<size_t>((c_.size() - 1) * stride) + 1, mpq_class(0));
    for (size_t i = 0; i < c_.size(); ++i) p[i * stride] = c_[i];
    auto rem = poly_rem(std::move(p), to_q(cyclotomic_polynomial(target_n)));
    CycNumber out(target_n);
    for (size_t i = 0; i < rem.size(); ++i) out.c_[i] = rem[i];
    return out;
}

std::string CycNumber::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ' ';
        os << c_[i].get_str();
    }
    return os.str();
}

}  // namespace gda
