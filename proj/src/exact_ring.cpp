#include "qmckay/exact_ring.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

namespace qmckay {

int euler_phi(int n) {
    if (n <= 0) throw ring_error("euler_phi: non-positive argument");
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

long long ilcm(long long a, long long b) { return a / std::gcd(a, b) * b; }

namespace {

std::vector<long> poly_div_exact(std::vector<long> num, const std::vector<long>& den) {
    // den is monic; coefficients constant term first
    int dn = static_cast<int>(den.size()) - 1;
    int nn = static_cast<int>(num.size()) - 1;
    std::vector<long> q(nn - dn + 1, 0);
    for (int k = nn; k >= dn; --k) {
        long c = num[k];
        q[k - dn] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
    }
    return q;
}

}  // namespace

const std::vector<long>& cyclotomic_poly(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<std::vector<long>>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return *it->second;
    }
    if (n <= 0) throw ring_error("cyclotomic_poly: non-positive conductor");
    std::vector<long> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) num = poly_div_exact(num, cyclotomic_poly(d));
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.emplace(n, std::make_unique<std::vector<long>>(std::move(num)));
    return *it->second;
}

namespace {

// Reduce an arbitrary-degree polynomial modulo Phi_n in place; result has phi(n) entries.
void reduce_mod(std::vector<mpq_class>& p, int n) {
    const auto& phi_poly = cyclotomic_poly(n);
    int ph = static_cast<int>(phi_poly.size()) - 1;
    for (int k = static_cast<int>(p.size()) - 1; k >= ph; --k) {
        if (sgn(p[k]) == 0) continue;
        mpq_class c = p[k];
        for (int j = 0; j < ph; ++j)
            if (phi_poly[j] != 0) p[k - ph + j] -= c * phi_poly[j];
        p[k] = 0;
    }
    p.resize(ph);
}

// Gaussian elimination: solve A x = b where A is rows x cols (consistent system assumed).
bool solve_linear(std::vector<std::vector<mpq_class>> a, std::vector<mpq_class> b, std::vector<mpq_class>& x) {
    size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    std::vector<int> pivcol;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && sgn(a[p][c]) == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        mpq_class inv = 1 / a[r][c];
        for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
        b[r] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(a[i][c]) == 0) continue;
            mpq_class f = a[i][c];
            for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivcol.push_back(static_cast<int>(c));
        ++r;
    }
    for (size_t i = r; i < rows; ++i)
        if (sgn(b[i]) != 0) return false;
    x.assign(cols, 0);
    for (size_t i = 0; i < pivcol.size(); ++i) x[pivcol[i]] = b[i];
    return true;
}

}  // namespace

CycScalar CycScalar::zeta(int n, long k) {
    if (n <= 0) throw ring_error("zeta: non-positive conductor");
    long e = ((k % n) + n) % n;
    std::vector<mpq_class> p(e + 1, 0);
    p[e] = 1;
    return from_poly(n, p);
}

CycScalar CycScalar::from_coeffs(int n, const std::vector<mpq_class>& c) {
    if (static_cast<int>(c.size()) != euler_phi(n))
        throw ring_error("CycScalar: coefficient count " + std::to_string(c.size()) +
                         " does not match phi(" + std::to_string(n) + ")");
    return from_poly(n, c);
}

CycScalar CycScalar::from_poly(int n, const std::vector<mpq_class>& p) {
    if (n <= 0) throw ring_error("CycScalar: non-positive conductor");
    CycScalar x;
    if (n == 1 || n == 2) {
        // zeta_1 = 1, zeta_2 = -1
        mpq_class s = 0;
        for (size_t j = 0; j < p.size(); ++j) s += (n == 2 && (j & 1)) ? mpq_class(-p[j]) : p[j];
        x.q_ = SmallRational(s);
        return x;
    }
    x.n_ = n;
    x.c_ = p;
    for (auto& c : x.c_) c.canonicalize();
    reduce_mod(x.c_, n);
    x.normalize();
    return x;
}

void CycScalar::normalize() {
    if (n_ == 1) return;
    for (size_t j = 1; j < c_.size(); ++j)
        if (sgn(c_[j]) != 0) return;
    q_ = c_.empty() ? SmallRational() : SmallRational(c_[0]);
    c_.clear();
    n_ = 1;
}

std::vector<mpq_class> CycScalar::coeffs() const {
    if (n_ == 1) return {q_.get()};
    return c_;
}

bool CycScalar::is_zero() const { return n_ == 1 && q_.sgn() == 0; }

const mpq_class& CycScalar::rational() const {
    if (n_ != 1) throw ring_error("CycScalar: value is not rational: " + str());
    return q_.ref();
}

CycScalar CycScalar::lift(int m) const {
    if (m % n_ != 0) throw ring_error("CycScalar::lift: " + std::to_string(m) + " not a multiple of conductor");
    if (m == n_ || m <= 2) return *this;
    std::vector<mpq_class> p;
    if (n_ == 1) {
        p.assign(1, q_.get());
    } else {
        int step = m / n_;
        p.assign((c_.size() - 1) * step + 1, 0);
        for (size_t j = 0; j < c_.size(); ++j) p[j * step] = c_[j];
    }
    CycScalar x;
    x.n_ = m;
    x.c_ = std::move(p);
    reduce_mod(x.c_, m);
    return x;  // not normalized: caller works at conductor m
}

CycScalar CycScalar::galois(long k) const {
    if (n_ == 1) return *this;
    if (std::gcd(static_cast<long>(n_), k) != 1) throw ring_error("galois: exponent not a unit");
    std::vector<mpq_class> p(n_, 0);
    for (size_t j = 0; j < c_.size(); ++j) {
        long e = ((static_cast<long>(j) * k) % n_ + n_) % n_;
        p[e] += c_[j];
    }
    return from_poly(n_, p);
}

CycScalar CycScalar::inverse() const {
    if (is_zero()) throw ring_error("CycScalar: division by zero");
    if (n_ == 1) {
        CycScalar x;
        x.q_ = q_.inverse();
        return x;
    }
    size_t ph = c_.size();
    // column j of the multiplication matrix: coordinates of this * z^j
    std::vector<std::vector<mpq_class>> a(ph, std::vector<mpq_class>(ph, 0));
    for (size_t j = 0; j < ph; ++j) {
        std::vector<mpq_class> p(ph + j, 0);
        for (size_t i = 0; i < ph; ++i) p[i + j] = c_[i];
        reduce_mod(p, n_);
        for (size_t i = 0; i < ph; ++i) a[i][j] = p[i];
    }
    std::vector<mpq_class> b(ph, 0), y;
    b[0] = 1;
    if (!solve_linear(a, b, y)) throw ring_error("CycScalar: singular inverse");
    return from_coeffs(n_, y);
}

CycScalar CycScalar::simplified() const {
    if (n_ == 1) return *this;
    for (int d = 3; d < n_; ++d) {
        if (n_ % d != 0 || d % 4 == 2) continue;
        bool fixed = true;
        for (long k = 1; k < n_ && fixed; ++k) {
            if (k % d != 1 % d || std::gcd(static_cast<long>(n_), k) != 1) continue;
            if (galois(k) != *this) fixed = false;
        }
        if (!fixed) continue;
        int pd = euler_phi(d);
        std::vector<std::vector<mpq_class>> a(c_.size(), std::vector<mpq_class>(pd, 0));
        for (int j = 0; j < pd; ++j) {
            CycScalar basis = zeta(d, j).lift(n_);
            auto bc = basis.n_ == 1 ? std::vector<mpq_class>{basis.q_.get()} : basis.c_;
            for (size_t i = 0; i < bc.size(); ++i) a[i][j] = bc[i];
        }
        std::vector<mpq_class> y;
        if (solve_linear(a, c_, y)) return from_coeffs(d, y);
    }
    return *this;
}

CycScalar CycScalar::operator-() const {
    CycScalar x = *this;
    x.q_ = -x.q_;
    for (auto& c : x.c_) c = -c;
    return x;
}

CycScalar& CycScalar::operator+=(const CycScalar& o) {
    if (n_ == 1 && o.n_ == 1) {
        q_ = q_ + o.q_;
        return *this;
    }
    int m = static_cast<int>(ilcm(n_, o.n_));
    CycScalar a = n_ == m ? *this : lift(m);
    CycScalar b = o.n_ == m ? o : o.lift(m);
    for (size_t j = 0; j < a.c_.size(); ++j) a.c_[j] += b.c_[j];
    a.normalize();
    return *this = std::move(a);
}

CycScalar& CycScalar::operator-=(const CycScalar& o) { return *this += -o; }

CycScalar& CycScalar::operator*=(const CycScalar& o) {
    if (n_ == 1 && o.n_ == 1) {
        q_ = q_ * o.q_;
        return *this;
    }
    if (o.n_ == 1) {
        if (o.q_.sgn() == 0) return *this = CycScalar();
        const mpq_class k = o.q_.get();
        for (auto& c : c_) c *= k;
        return *this;
    }
    if (n_ == 1) {
        mpq_class k = q_.get();
        *this = o;
        if (sgn(k) == 0) return *this = CycScalar();
        for (auto& c : c_) c *= k;
        return *this;
    }
    int m = static_cast<int>(ilcm(n_, o.n_));
    CycScalar a = n_ == m ? *this : lift(m);
    CycScalar b = o.n_ == m ? o : o.lift(m);
    std::vector<mpq_class> p(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            if (sgn(b.c_[j]) != 0) p[i + j] += a.c_[i] * b.c_[j];
    }
    reduce_mod(p, m);
    CycScalar x;
    x.n_ = m;
    x.c_ = std::move(p);
    x.normalize();
    return *this = std::move(x);
}

bool operator==(const CycScalar& a, const CycScalar& b) {
    if (a.n_ == 1 && b.n_ == 1) return a.q_ == b.q_;
    if (a.n_ == 1 || b.n_ == 1) return false;  // normalized forms: rational iff conductor 1
    if (a.n_ == b.n_) return a.c_ == b.c_;
    int m = static_cast<int>(ilcm(a.n_, b.n_));
    return a.lift(m).c_ == b.lift(m).c_;
}

std::complex<double> CycScalar::to_complex() const {
    if (n_ == 1) return {q_.to_double(), 0.0};
    std::complex<double> s = 0;
    for (size_t j = 0; j < c_.size(); ++j)
        s += c_[j].get_d() * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / n_);
    return s;
}

std::string rational_str(const mpq_class& q) { return q.get_str(); }

mpq_class rational_parse(std::string_view s) {
    std::string t(s);
    t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }), t.end());
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    if (t.empty()) throw ring_error("rational_parse: empty token");
    for (char c : t)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
            throw ring_error("rational_parse: bad token '" + t + "'");
    mpq_class q;
    if (q.set_str(t, 10) != 0) throw ring_error("rational_parse: bad token '" + t + "'");
    q.canonicalize();
    return q;
}

std::string CycScalar::str() const {
    CycScalar s = simplified();
    std::ostringstream os;
    os << '[';
    if (s.n_ == 1) {
        os << rational_str(s.q_.get());
    } else {
        for (size_t j = 0; j < s.c_.size(); ++j) os << (j ? "," : "") << rational_str(s.c_[j]);
    }
    os << "]@" << s.n_;
    return os.str();
}

CycScalar CycScalar::parse(std::string_view text) {
    std::string t(text);
    t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }), t.end());
    if (t.empty()) throw ring_error("CycScalar::parse: empty");
    if (t[0] != '[') return CycScalar(rational_parse(t));
    auto close = t.find(']');
    if (close == std::string::npos || close + 1 >= t.size() || t[close + 1] != '@')
        throw ring_error("CycScalar::parse: expected '[...]@N' in '" + t + "'");
    int n = 0;
    try {
        size_t used = 0;
        n = std::stoi(t.substr(close + 2), &used);
        if (used != t.size() - close - 2) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        throw ring_error("CycScalar::parse: bad conductor in '" + t + "'");
    }
    if (n <= 0) throw ring_error("CycScalar::parse: non-positive conductor");
    std::vector<mpq_class> c;
    std::string body = t.substr(1, close - 1);
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) c.push_back(rational_parse(item));
    if (n <= 2 && c.size() == 1) return from_poly(1, c);
    return from_coeffs(n, c);
}

std::string CycScalar::pretty() const {
    CycScalar s = simplified();
    if (s.n_ == 1) return rational_str(s.q_.get());
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (size_t j = 0; j < s.c_.size(); ++j) {
        mpq_class c = s.c_[j];
        if (sgn(c) == 0) continue;
        bool neg = sgn(c) < 0;
        if (neg) c = -c;
        if (first) os << (neg ? "-" : "");
        else os << (neg ? " - " : " + ");
        first = false;
        if (j == 0) {
            os << rational_str(c);
            continue;
        }
        if (c != 1) os << rational_str(c) << ' ';
        os << 'z' << s.n_;
        if (j > 1) os << '^' << j;
    }
    os << ')';
    return os.str();
}

// ---------------------------------------------------------------- RSLaurent

RSLaurent rs_quantum_number(int n) {
    RSLaurent f;
    if (n == 0) return f;
    int m = n > 0 ? n : -n;
    std::vector<RSLaurent::Term> terms;
    for (int i = 0; i < m; ++i) {
        if (n > 0) terms.push_back({{2 * (m - 1 - i), 2 * i, 0}, CycScalar(1)});
        else terms.push_back({{2 * (-1 - i), 2 * (i - m), 0}, CycScalar(-1)});
    }
    return RSLaurent::from_terms(std::move(terms));
}

RSLaurent rs_gaussian_binomial(int n, int k) {
    if (k < 0 || k > n) return RSLaurent();
    if (k == 0 || k == n) return RSLaurent(1);
    return rs_r(k) * rs_gaussian_binomial(n - 1, k) + rs_s(n - k) * rs_gaussian_binomial(n - 1, k - 1);
}

RSLaurent rs_substitute(const RSLaurent& f, int m) {
    if (m == 0) throw ring_error("rs_substitute: m = 0 is not allowed");
    return f.exps_scaled(m);
}

RSLaurent rs_bar(const RSLaurent& f) {
    std::vector<RSLaurent::Term> t;
    t.reserve(f.terms().size());
    for (const auto& [e, c] : f.terms()) t.push_back({{e[1], e[0], -e[2]}, c});
    return RSLaurent::from_terms(std::move(t));
}

RSLaurent rs_inv(const RSLaurent& f) { return f.exps_scaled(-1); }

RSLaurent rs_monomial_sqrt(const RSLaurent& f) {
    if (!f.is_monomial() || !f.terms()[0].second.is_one())
        throw ring_error("rs_monomial_sqrt: not a monic monomial: " + rs_str(f));
    auto e = f.terms()[0].first;
    for (auto& x : e) {
        if (x % 2 != 0) throw ring_error("rs_monomial_sqrt: odd exponent in " + rs_str(f));
        x /= 2;
    }
    return RSLaurent::monomial(e);
}

RSLaurent rs_set_kappa(const RSLaurent& f, const RSLaurent& h) {
    RSLaurent out;
    for (const auto& [e, c] : f.terms()) {
        RSLaurent m = rs_mono(e[0], e[1], 0, c);
        if (e[2] != 0) m *= h.monomial_pow(e[2]);
        out += m;
    }
    return out;
}

bool rs_has_kappa(const RSLaurent& f) {
    for (const auto& [e, c] : f.terms())
        if (e[2] != 0) return true;
    return false;
}

namespace {

CycScalar cpow(const CycScalar& x, int k) {
    if (k == 0) return CycScalar(1);
    CycScalar base = k > 0 ? x : x.inverse();
    unsigned e = static_cast<unsigned>(k > 0 ? k : -k);
    CycScalar acc(1);
    while (e) {
        if (e & 1u) acc *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return acc;
}

}  // namespace

CycScalar rs_eval(const RSLaurent& f, const CycScalar& u, const CycScalar& v, const CycScalar& h) {
    if (u.is_zero() || v.is_zero() || h.is_zero()) throw ring_error("rs_eval: zero substitution");
    CycScalar s;
    for (const auto& [e, c] : f.terms()) s += c * cpow(u, e[0]) * cpow(v, e[1]) * cpow(h, e[2]);
    return s;
}

CycScalar rs_specialize(const RSLaurent& f, const CycScalar& t1, const CycScalar& t2) {
    if (t1.is_zero() || t2.is_zero()) throw ring_error("rs_specialize: zero substitution");
    CycScalar s;
    for (const auto& [e, c] : f.terms()) {
        if (e[2] != 0) throw ring_error("rs_specialize: kappa present; substitute it first");
        if (e[0] % 2 != 0 || e[1] % 2 != 0)
            throw ring_error("rs_specialize: half-integer exponent needs designated square roots");
        s += c * cpow(t1, e[0] / 2) * cpow(t2, e[1] / 2);
    }
    return s;
}

QLaurent rs_specialize_qq(const RSLaurent& f) {
    std::vector<QLaurent::Term> t;
    for (const auto& [e, c] : f.terms()) {
        if (e[2] != 0) throw ring_error("rs_specialize_qq: kappa present; substitute it first");
        t.push_back({{e[0] - e[1]}, c});
    }
    return QLaurent::from_terms(std::move(t));
}

std::complex<double> rs_eval_complex(const RSLaurent& f, std::complex<double> u, std::complex<double> v,
                                     std::complex<double> h) {
    std::complex<double> s = 0;
    for (const auto& [e, c] : f.terms())
        s += c.to_complex() * std::pow(u, e[0]) * std::pow(v, e[1]) * std::pow(h, e[2]);
    return s;
}

std::string rs_str(const RSLaurent& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        if (!first) os << " + ";
        first = false;
        os << c.str() << " * r^(" << e[0] << "/2) * s^(" << e[1] << "/2)";
        if (e[2] != 0) os << " * kappa^(" << e[2] << "/2)";
    }
    return os.str();
}

namespace {

std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

// Exponent after '^': "(p/2)", "(p)", "p" -> doubled integer.
int parse_exponent(const std::string& tok) {
    std::string t = tok;
    if (!t.empty() && t.front() == '(') {
        if (t.back() != ')') throw ring_error("rs_parse: unbalanced exponent '" + tok + "'");
        t = t.substr(1, t.size() - 2);
    }
    mpq_class q = rational_parse(t);
    mpq_class twice = 2 * q;
    twice.canonicalize();
    if (twice.get_den() != 1) throw ring_error("rs_parse: exponent not in (1/2)Z: '" + tok + "'");
    return static_cast<int>(twice.get_num().get_si());
}

RSLaurent parse_term(const std::string& term) {
    std::string t = trim(term);
    if (t.empty()) throw ring_error("rs_parse: empty term");
    CycScalar coeff(1);
    std::array<int, 3> e{0, 0, 0};
    std::vector<std::string> factors;
    int depth = 0;
    std::string cur;
    for (char ch : t) {
        if (ch == '[' || ch == '(') ++depth;
        if (ch == ']' || ch == ')') --depth;
        if (ch == '*' && depth == 0) {
            factors.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    factors.push_back(trim(cur));
    for (auto f : factors) {
        if (f.empty()) throw ring_error("rs_parse: empty factor in '" + t + "'");
        bool neg = false;
        if (f[0] == '-' && f.size() > 1 && !std::isdigit(static_cast<unsigned char>(f[1])) && f[1] != '[') {
            neg = true;
            f = trim(f.substr(1));
        }
        if (neg) coeff = -coeff;
        std::string name = f.substr(0, f.find('^'));
        int slot = name == "r" ? 0 : name == "s" ? 1 : (name == "kappa" || name == "k") ? 2 : -1;
        if (slot < 0) {
            coeff *= CycScalar::parse(f);
            continue;
        }
        int ex = 2;
        if (f.find('^') != std::string::npos) ex = parse_exponent(trim(f.substr(f.find('^') + 1)));
        e[slot] += ex;
    }
    return RSLaurent::monomial(e, coeff);
}

}  // namespace

RSLaurent rs_parse(std::string_view text) {
    std::string t = trim(text);
    if (t.empty()) throw ring_error("rs_parse: empty input");
    if (t == "0") return RSLaurent();
    RSLaurent out;
    int depth = 0;
    std::string cur;
    for (size_t i = 0; i < t.size(); ++i) {
        char ch = t[i];
        if (ch == '[' || ch == '(') ++depth;
        if (ch == ']' || ch == ')') --depth;
        if (depth < 0) throw ring_error("rs_parse: unbalanced brackets");
        if (ch == '+' && depth == 0) {
            out += parse_term(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (depth != 0) throw ring_error("rs_parse: unbalanced brackets");
    out += parse_term(cur);
    return out;
}

namespace {

std::string pow_str(const char* var, int e) {
    if (e == 0) return "";
    std::string s = var;
    if (e != 1) s += "^" + std::to_string(e);
    return s;
}

std::string mono_pretty(int p, int q, int t) {
    std::vector<std::string> parts;
    if (p % 2 == 0 && q % 2 == 0) {
        if (p) parts.push_back(pow_str("r", p / 2));
        if (q) parts.push_back(pow_str("s", q / 2));
    } else {
        std::string inner;
        if (p) inner += pow_str("r", p);
        if (q) inner += (inner.empty() ? "" : " ") + pow_str("s", q);
        parts.push_back("(" + inner + ")^(1/2)");
    }
    if (t) parts.push_back(t % 2 == 0 ? pow_str("kappa", t / 2) : "kappa^(" + std::to_string(t) + "/2)");
    std::string out;
    for (const auto& x : parts) out += (out.empty() ? "" : " ") + x;
    return out;
}

}  // namespace

std::string rs_pretty(const RSLaurent& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        std::string mono = mono_pretty(e[0], e[1], e[2]);
        std::string coeff = c.pretty();
        bool neg = c.is_rational() && sgn(c.rational()) < 0;
        if (neg) coeff = CycScalar(-c).pretty();
        std::string body;
        if (mono.empty()) body = coeff;
        else if (coeff == "1") body = mono;
        else body = coeff + " " + mono;
        if (first) out += (neg ? "-" : "") + body;
        else out += (neg ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

std::string q_str(const QLaurent& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        if (!first) os << " + ";
        first = false;
        os << c.str() << " * q^(" << e[0] << "/2)";
    }
    return os.str();
}

}  // namespace qmckay
