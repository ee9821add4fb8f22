#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <complex>
#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qmckay {

class ring_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

int euler_phi(int n);
long long ilcm(long long a, long long b);

// Coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<long>& cyclotomic_poly(int n);

/// Rational number kept in two machine words while it fits; GMP otherwise.
class SmallRational {
public:
    SmallRational() = default;
    SmallRational(long long v) : n_(v) {}
    SmallRational(const mpq_class& q) { assign(q); }

    mpq_class get() const {
        if (big_) return *big_;
        mpq_class q(mpz_class(static_cast<long>(n_)), mpz_class(static_cast<long>(d_)));
        q.canonicalize();
        return q;
    }
    const mpq_class& ref() const {
        if (!big_) big_ = std::make_shared<const mpq_class>(get());
        return *big_;
    }
    int sgn() const { return small() ? (n_ > 0) - (n_ < 0) : ::sgn(*big_); }
    bool is_one() const { return small() ? (n_ == 1 && d_ == 1) : *big_ == 1; }
    double to_double() const { return small() ? double(n_) / double(d_) : big_->get_d(); }

    SmallRational operator-() const {
        if (small() && n_ != INT64_MIN) return make(-n_, d_);
        return SmallRational(mpq_class(-get()));
    }
    friend SmallRational operator+(const SmallRational& a, const SmallRational& b) {
        if (a.small() && b.small()) {
            __int128 n = (__int128)a.n_ * b.d_ + (__int128)b.n_ * a.d_;
            __int128 d = (__int128)a.d_ * b.d_;
            SmallRational r;
            if (r.set128(n, d)) return r;
        }
        return SmallRational(mpq_class(a.get() + b.get()));
    }
    friend SmallRational operator*(const SmallRational& a, const SmallRational& b) {
        if (a.small() && b.small()) {
            SmallRational r;
            if (r.set128((__int128)a.n_ * b.n_, (__int128)a.d_ * b.d_)) return r;
        }
        return SmallRational(mpq_class(a.get() * b.get()));
    }
    SmallRational inverse() const {
        if (small()) return n_ < 0 ? make128(-(__int128)d_, -(__int128)n_) : make128(d_, n_);
        return SmallRational(mpq_class(1 / *big_));
    }
    friend bool operator==(const SmallRational& a, const SmallRational& b) {
        if (a.small() && b.small()) return a.n_ == b.n_ && a.d_ == b.d_;
        return a.get() == b.get();
    }

private:
    bool small() const { return d_ != 0; }
    static SmallRational make(long long n, long long d) {
        SmallRational r;
        r.n_ = n;
        r.d_ = d;
        return r;
    }
    static SmallRational make128(__int128 n, __int128 d) {
        SmallRational r;
        if (!r.set128(n, d)) r.assign(mpq_class(mpz_class(str128(n)), mpz_class(str128(d))));
        return r;
    }
    static std::string str128(__int128 v) {
        bool neg = v < 0;
        unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
        std::string s;
        do {
            s.push_back(char('0' + int(u % 10)));
            u /= 10;
        } while (u);
        if (neg) s.push_back('-');
        return {s.rbegin(), s.rend()};
    }
    // Reduce and store n/d (d > 0); false if it does not fit.
    bool set128(__int128 n, __int128 d) {
        if (n == 0) {
            n_ = 0;
            d_ = 1;
            big_.reset();
            return true;
        }
        unsigned __int128 a = n < 0 ? -(unsigned __int128)n : (unsigned __int128)n, b = (unsigned __int128)d;
        while (b) {
            unsigned __int128 t = a % b;
            a = b;
            b = t;
        }
        n /= (__int128)a;
        d /= (__int128)a;
        if (n > INT64_MAX || n < -INT64_MAX || d > INT64_MAX) return false;
        n_ = (long long)n;
        d_ = (long long)d;
        big_.reset();
        return true;
    }
    void assign(mpq_class q) {
        q.canonicalize();
        if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
            n_ = q.get_num().get_si();
            d_ = q.get_den().get_si();
            big_.reset();
        } else {
            n_ = 0;
            d_ = 0;
            big_ = std::make_shared<const mpq_class>(std::move(q));
        }
    }

    long long n_ = 0, d_ = 1;  // d_ == 0 marks the GMP form
    mutable std::shared_ptr<const mpq_class> big_;
};

/// Element of Q(zeta_N) in the power basis 1, z, ..., z^{phi(N)-1}.
class CycScalar {
public:
    CycScalar() = default;
    CycScalar(long v) : q_(static_cast<long long>(v)) {}
    CycScalar(int v) : q_(static_cast<long long>(v)) {}
    CycScalar(const mpq_class& q) : q_(q) {}

    static CycScalar zeta(int n, long k = 1);
    static CycScalar from_coeffs(int n, const std::vector<mpq_class>& c);
    // Arbitrary polynomial in zeta_n (any degree), reduced.
    static CycScalar from_poly(int n, const std::vector<mpq_class>& p);

    int conductor() const { return n_; }
    std::vector<mpq_class> coeffs() const;
    bool is_zero() const;
    bool is_rational() const { return n_ == 1; }
    bool is_one() const { return n_ == 1 && q_.is_one(); }
    const mpq_class& rational() const;

    CycScalar lift(int m) const;
    CycScalar galois(long k) const;
    CycScalar conj() const { return galois(-1); }
    CycScalar inverse() const;
    CycScalar simplified() const;

    std::complex<double> to_complex() const;
    std::string str() const;
    static CycScalar parse(std::string_view text);
    // Human form: "3", "-1/2", "(z3^2 - 1)".
    std::string pretty() const;

    CycScalar operator-() const;
    CycScalar& operator+=(const CycScalar& o);
    CycScalar& operator-=(const CycScalar& o);
    CycScalar& operator*=(const CycScalar& o);
    friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
    friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
    friend CycScalar operator*(CycScalar a, const CycScalar& b) { return a *= b; }
    friend CycScalar operator/(const CycScalar& a, const CycScalar& b) { return a * b.inverse(); }
    friend bool operator==(const CycScalar& a, const CycScalar& b);
    friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

private:
    void normalize();

    int n_ = 1;
    SmallRational q_;           // value when n_ == 1
    std::vector<mpq_class> c_;  // power-basis coordinates when n_ > 1
};

/// Laurent polynomial in D integer-exponent variables with CycScalar coefficients.
/// Terms are kept sorted lexicographically by exponent vector, zero terms dropped.
template <int D>
class Laurent {
public:
    using Exps = std::array<int, D>;
    using Term = std::pair<Exps, CycScalar>;

    Laurent() = default;
    Laurent(const CycScalar& c) { if (!c.is_zero()) t_.push_back({Exps{}, c}); }
    Laurent(long c) : Laurent(CycScalar(c)) {}
    Laurent(int c) : Laurent(CycScalar(c)) {}

    static Laurent monomial(const Exps& e, const CycScalar& c = CycScalar(1)) {
        Laurent f;
        if (!c.is_zero()) f.t_.push_back({e, c});
        return f;
    }
    static Laurent from_terms(std::vector<Term> terms) {
        Laurent f;
        f.t_ = std::move(terms);
        f.canonicalize();
        return f;
    }

    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_monomial() const { return t_.size() == 1; }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first == Exps{}); }
    CycScalar constant_term() const {
        for (const auto& [e, c] : t_)
            if (e == Exps{}) return c;
        return CycScalar();
    }

    Laurent operator-() const {
        Laurent f = *this;
        for (auto& [e, c] : f.t_) c = -c;
        return f;
    }
    Laurent& operator+=(const Laurent& o) { return *this = add(*this, o, false); }
    Laurent& operator-=(const Laurent& o) { return *this = add(*this, o, true); }
    Laurent& operator*=(const Laurent& o) { return *this = mul(*this, o); }
    friend Laurent operator+(const Laurent& a, const Laurent& b) { return add(a, b, false); }
    friend Laurent operator-(const Laurent& a, const Laurent& b) { return add(a, b, true); }
    friend Laurent operator*(const Laurent& a, const Laurent& b) { return mul(a, b); }
    friend bool operator==(const Laurent& a, const Laurent& b) {
        if (a.t_.size() != b.t_.size()) return false;
        for (size_t i = 0; i < a.t_.size(); ++i)
            if (a.t_[i].first != b.t_[i].first || a.t_[i].second != b.t_[i].second) return false;
        return true;
    }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

    Laurent scaled(const CycScalar& c) const {
        if (c.is_zero()) return Laurent();
        Laurent f = *this;
        for (auto& [e, x] : f.t_) x *= c;
        return f;
    }
    Laurent shifted(const Exps& s) const {
        Laurent f = *this;
        for (auto& [e, c] : f.t_)
            for (int i = 0; i < D; ++i) e[i] += s[i];
        return f;
    }
    // Every exponent multiplied by m.
    Laurent exps_scaled(int m) const {
        Laurent f = *this;
        for (auto& [e, c] : f.t_)
            for (int i = 0; i < D; ++i) e[i] *= m;
        f.canonicalize();
        return f;
    }
    Laurent pow(unsigned k) const {
        Laurent acc(1), base = *this;
        while (k) {
            if (k & 1u) acc *= base;
            k >>= 1u;
            if (k) base *= base;
        }
        return acc;
    }
    // Inverse of a single-term element.
    Laurent monomial_inverse() const {
        if (!is_monomial()) throw ring_error("monomial_inverse: not a unit monomial");
        Exps e = t_[0].first;
        for (auto& x : e) x = -x;
        return monomial(e, t_[0].second.inverse());
    }
    // Integer power (negative allowed) of a single-term element.
    Laurent monomial_pow(int k) const {
        if (k >= 0) return pow(static_cast<unsigned>(k));
        return monomial_inverse().pow(static_cast<unsigned>(-k));
    }

private:
    void canonicalize() {
        std::sort(t_.begin(), t_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
        std::vector<Term> out;
        out.reserve(t_.size());
        for (auto& t : t_) {
            if (!out.empty() && out.back().first == t.first) out.back().second += t.second;
            else out.push_back(std::move(t));
        }
        std::erase_if(out, [](const Term& t) { return t.second.is_zero(); });
        t_ = std::move(out);
    }
    static Laurent add(const Laurent& a, const Laurent& b, bool sub) {
        Laurent f;
        f.t_.reserve(a.t_.size() + b.t_.size());
        size_t i = 0, j = 0;
        while (i < a.t_.size() || j < b.t_.size()) {
            if (j == b.t_.size() || (i < a.t_.size() && a.t_[i].first < b.t_[j].first)) {
                f.t_.push_back(a.t_[i++]);
            } else if (i == a.t_.size() || b.t_[j].first < a.t_[i].first) {
                f.t_.push_back({b.t_[j].first, sub ? -b.t_[j].second : b.t_[j].second});
                ++j;
            } else {
                CycScalar c = sub ? a.t_[i].second - b.t_[j].second : a.t_[i].second + b.t_[j].second;
                if (!c.is_zero()) f.t_.push_back({a.t_[i].first, std::move(c)});
                ++i;
                ++j;
            }
        }
        return f;
    }
    static Laurent mul(const Laurent& a, const Laurent& b) {
        if (a.t_.empty() || b.t_.empty()) return Laurent();
        if (b.is_monomial() && b.t_[0].first == Exps{}) return a.scaled(b.t_[0].second);
        if (a.is_monomial() && a.t_[0].first == Exps{}) return b.scaled(a.t_[0].second);
        Laurent f;
        f.t_.reserve(a.t_.size() * b.t_.size());
        for (const auto& [ea, ca] : a.t_)
            for (const auto& [eb, cb] : b.t_) {
                Exps e;
                for (int i = 0; i < D; ++i) e[i] = ea[i] + eb[i];
                f.t_.push_back({e, ca * cb});
            }
        f.canonicalize();
        return f;
    }

    std::vector<Term> t_;
};

/// Laurent polynomial in u = r^{1/2}, v = s^{1/2} and k = kappa^{1/2}.
using RSLaurent = Laurent<3>;
/// One-variable Laurent polynomial in w = q^{1/2}.
using QLaurent = Laurent<1>;

// Monomial r^{p/2} s^{q/2} kappa^{t/2} (arguments are the doubled exponents).
inline RSLaurent rs_mono(int p, int q, int t = 0, const CycScalar& c = CycScalar(1)) {
    return RSLaurent::monomial({p, q, t}, c);
}
inline RSLaurent rs_r(int k = 1) { return rs_mono(2 * k, 0); }
inline RSLaurent rs_s(int k = 1) { return rs_mono(0, 2 * k); }
inline RSLaurent rs_kappa(int k = 1) { return rs_mono(0, 0, 2 * k); }
// (r s^{-1})^{1/2} + (r^{-1} s)^{1/2}
inline RSLaurent rs_d() { return rs_mono(1, -1) + rs_mono(-1, 1); }

RSLaurent rs_quantum_number(int n);
// Two-parameter Gaussian binomial, [n,k] = r^k [n-1,k] + s^{n-k} [n-1,k-1]; zero outside 0 <= k <= n.
RSLaurent rs_gaussian_binomial(int n, int k);
RSLaurent rs_substitute(const RSLaurent& f, int m);
RSLaurent rs_bar(const RSLaurent& f);
RSLaurent rs_inv(const RSLaurent& f);
// Square root of a unit monomial with even exponents and coefficient 1.
RSLaurent rs_monomial_sqrt(const RSLaurent& f);
// Substitute kappa^{1/2} := h (a unit monomial in u, v).
RSLaurent rs_set_kappa(const RSLaurent& f, const RSLaurent& h);
bool rs_has_kappa(const RSLaurent& f);

// Evaluation at designated square roots u = r^{1/2}, v = s^{1/2}, h = kappa^{1/2}.
CycScalar rs_eval(const RSLaurent& f, const CycScalar& u, const CycScalar& v,
                  const CycScalar& h = CycScalar(1));
// Evaluation at (r,s) = (t1,t2) without square roots; rejects half-integer exponents.
CycScalar rs_specialize(const RSLaurent& f, const CycScalar& t1, const CycScalar& t2);
// (r,s) = (q, q^{-1}), result in w = q^{1/2}.
QLaurent rs_specialize_qq(const RSLaurent& f);
std::complex<double> rs_eval_complex(const RSLaurent& f, std::complex<double> u, std::complex<double> v,
                                     std::complex<double> h = 1.0);

std::string rs_str(const RSLaurent& f);
RSLaurent rs_parse(std::string_view text);
std::string rs_pretty(const RSLaurent& f);
std::string q_str(const QLaurent& f);

std::string rational_str(const mpq_class& q);
mpq_class rational_parse(std::string_view s);

}  // namespace qmckay
