// One-parameter realization at (r, s) = (q, q^{-1}), coded without the RSLaurent machinery:
// coefficients are Laurent polynomials in w = q^{1/2} stored as exponent -> rational.
#include "qmckay/toroidal_rep.hpp"

#include <functional>

namespace qmckay {

nlohmann::json OneParamReport::to_json() const {
    nlohmann::json out = {{"group", group}, {"pass", pass}, {"checked", checked}, {"details", details}};
    if (!witness.empty()) out["witness"] = witness;
    return out;
}

namespace {

using WPoly = std::map<int, mpq_class>;
using WVec = std::map<FockKey, WPoly>;

void wadd(WPoly& p, int e, const mpq_class& c) {
    if (c == 0) return;
    auto& x = p[e];
    x += c;
    if (x == 0) p.erase(e);
}

WPoly wmul(const WPoly& a, const WPoly& b) {
    WPoly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) wadd(out, ea + eb, ca * cb);
    return out;
}

WPoly wmono(int e, const mpq_class& c = 1) {
    WPoly p;
    wadd(p, e, c);
    return p;
}

void vadd(WVec& v, const FockKey& k, const WPoly& c) {
    if (c.empty()) return;
    auto& x = v[k];
    for (const auto& [e, q] : c) wadd(x, e, q);
    if (x.empty()) v.erase(k);
}

std::string wstr(const WPoly& p) {
    if (p.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : p) s += (s.empty() ? "" : " + ") + c.get_str() + "*q^(" + std::to_string(e) + "/2)";
    return s;
}

// Partitions of n as (part -> multiplicity).
void partitions(int n, int maxp, std::map<int, int>& cur, std::vector<std::map<int, int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, maxp); p >= 1; --p) {
        ++cur[p];
        partitions(n - p, p, cur, out);
        if (--cur[p] == 0) cur.erase(p);
    }
}

mpq_class factorial(int n) {
    mpz_class f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return mpq_class(f);
}

class Oracle {
public:
    Oracle(const Matrix<long>& a, std::vector<int> allowed) : a_(a), allowed_(std::move(allowed)) {}

    // <gamma_i, gamma_j> at level n, specialized: delta_ij (q^n + q^{-n} - 2) + a_ij
    WPoly pairing(int i, int j, int n) const {
        WPoly p = wmono(0, mpq_class(a_[i][j]));
        if (i == j) {
            wadd(p, 2 * n, 1);
            wadd(p, -2 * n, 1);
            wadd(p, 0, -2);
        }
        return p;
    }

    // [n]_q = (q^n - q^{-n}) / (q - q^{-1}); odd in n
    static WPoly qnum(int n) {
        WPoly p;
        const int m = std::abs(n);
        for (int t = 0; t < m; ++t) wadd(p, 2 * (m - 1 - 2 * t), n > 0 ? 1 : -1);
        return p;
    }

    long form(const std::vector<int>& x, const std::vector<int>& y) const {
        long s = 0;
        for (size_t i = 0; i < x.size(); ++i)
            for (size_t j = 0; j < y.size(); ++j) s += x[i] * a_[i][j] * y[j];
        return s;
    }

    // epsilon at rs = 1: (-1)^{sum_{i>j} a_ij x_i y_j}
    int eps(const std::vector<int>& x, const std::vector<int>& y) const {
        long s = 0;
        for (size_t i = 0; i < x.size(); ++i)
            for (size_t j = 0; j < i; ++j) s += a_[i][j] * x[i] * y[j];
        return s % 2 == 0 ? 1 : -1;
    }

    // a_n(gamma_i), n > 0, on a monomial: n <gamma_i, gamma_j>_n d/d a_{-n}(gamma_j)
    WVec annihilate(int n, int i, const FockKey& k) const {
        WVec out;
        const auto& m = k.mono;
        for (size_t p = 0; p < m.size(); ++p) {
            if (m[p].first != n) continue;
            if (p > 0 && m[p - 1] == m[p]) continue;
            size_t e = p;
            while (e < m.size() && m[e] == m[p]) ++e;
            FockKey rest{m, k.beta};
            rest.mono.erase(rest.mono.begin() + static_cast<long>(p));
            WPoly c = pairing(i, m[p].second, n);
            for (auto& [x, q] : c) q *= static_cast<long>(n * (e - p));
            vadd(out, rest, c);
        }
        return out;
    }

    static FockKey create(int n, int i, const FockKey& k) {
        FockKey out = k;
        auto pos = std::lower_bound(out.mono.begin(), out.mono.end(), std::make_pair(n, i));
        out.mono.insert(pos, {n, i});
        return out;
    }

    // X_n on a key for X^{sign}(g gamma_i, a, b, c z), c = w^{cp}; a2, b2 doubled.
    WVec vertex_mode(int sign, int g, int i, int a2, int b2, int cp, int n, const FockKey& key) const {
        const int rank = static_cast<int>(key.beta.size());
        std::vector<int> L(rank, 0);
        L[i] = sign * g;
        const long z0 = form(L, key.beta);
        FockKey shifted{key.mono, key.beta};
        for (int t = 0; t < rank; ++t) shifted.beta[t] += L[t];
        const WPoly lat = wmono(static_cast<int>(cp * z0), eps(L, key.beta));

        // coefficients of a_{-k}(gamma_i) z^k and a_k(gamma_i) z^{-k}; g = +-1 absorbed
        auto cre = [&](int k) {
            return sign > 0 ? wmono(cp * k, mpq_class(g, k)) : wmono((a2 - b2) * k + cp * k, mpq_class(-g, k));
        };
        auto ann = [&](int k) {
            return sign > 0 ? wmono(-(a2 - b2) * k - cp * k, mpq_class(-g, k)) : wmono(-cp * k, mpq_class(g, k));
        };

        int deg = 0;
        for (const auto& [p, c] : key.mono) deg += p;
        WVec out;
        for (int lam = 0; lam <= deg; ++lam) {
            std::vector<std::map<int, int>> ps;
            std::map<int, int> cur;
            partitions(lam, lam, cur, ps);
            for (const auto& part : ps) {
                WVec v;
                v[shifted] = lat;
                WPoly coef = wmono(0);
                for (const auto& [p, mult] : part) {
                    for (int t = 0; t < mult; ++t) {
                        WVec nv;
                        for (const auto& [k2, c2] : v)
                            for (const auto& [k3, c3] : annihilate(p, i, k2)) vadd(nv, k3, wmul(c2, c3));
                        v = std::move(nv);
                        coef = wmul(coef, ann(p));
                    }
                    for (auto& [e, q] : coef) q /= factorial(mult);
                }
                if (v.empty()) continue;
                // z exponent: z0 - lam + mu = -n - 1
                const long mu = -n - 1 - z0 + lam;
                if (mu < 0) continue;
                std::vector<std::map<int, int>> cs;
                std::map<int, int> cur2;
                partitions(static_cast<int>(mu), static_cast<int>(mu), cur2, cs);
                for (const auto& cpart : cs) {
                    WPoly cc = coef;
                    for (const auto& [p, mult] : cpart) {
                        for (int t = 0; t < mult; ++t) cc = wmul(cc, cre(p));
                        for (auto& [e, q] : cc) q /= factorial(mult);
                    }
                    for (const auto& [k2, c2] : v) {
                        FockKey kk = k2;
                        for (const auto& [p, mult] : cpart)
                            for (int t = 0; t < mult; ++t) kk = create(p, i, kk);
                        vadd(out, kk, wmul(c2, cc));
                    }
                }
            }
        }
        return out;
    }

    // a_i(m) image: [m]/m a_m(gamma_i) for m > 0, -[-m]/m a_m(gamma_i) for m < 0
    WVec heis(int i, int m, const FockKey& key) const {
        WPoly sc = m > 0 ? qnum(m) : qnum(-m);
        if (m < 0)
            for (auto& [e, q] : sc) q = -q;
        for (auto& [e, q] : sc) q /= m;
        WVec out;
        if (m < 0) {
            vadd(out, create(-m, i, key), sc);
            return out;
        }
        for (const auto& [k, c] : annihilate(m, i, key)) vadd(out, k, wmul(c, sc));
        return out;
    }

    const std::vector<int>& allowed() const { return allowed_; }

private:
    Matrix<long> a_;
    std::vector<int> allowed_;
};

WVec specialize(const FockVector& v, std::string& err) {
    WVec out;
    for (const auto& [k, c] : v.terms()) {
        QLaurent q = rs_specialize_qq(c);
        WPoly p;
        for (const auto& [e, x] : q.terms()) {
            if (!x.is_rational()) {
                err = "irrational coefficient " + x.str();
                return {};
            }
            wadd(p, e[0], x.rational());
        }
        vadd(out, k, p);
    }
    return out;
}

std::string wvec_str(const WVec& v) {
    std::string s = "{";
    for (const auto& [k, c] : v) {
        std::string kk = FockVector::basis(k).to_json().dump();
        s += kk + ": " + wstr(c) + "; ";
        if (s.size() > 400) return s + "...}";
    }
    return s + "}";
}

}  // namespace

OneParamReport specialize_one_param(const ToroidalRep& rep, int degree) {
    OneParamReport out;
    const FockSpace& fs = rep.space();
    out.group = fs.table()->name;
    out.details["degree"] = degree;
    out.details["modes"] = rep.options().trunc.modes;
    if (rep.kappa()) {
        out.details["skipped"] = "kappa variant has no one-parameter specialization here";
        return out;
    }
    if (rep.options().cocycle != CocycleConvention::sign_split) {
        out.details["skipped"] = "oracle covers the sign_split cocycle only";
        return out;
    }
    const Matrix<long>& a = fs.lattice_form();
    Oracle orc(a, fs.allowed());
    auto fail = [&](const std::string& w) {
        if (out.pass) {
            out.pass = false;
            out.witness = w;
        }
    };

    // A_ij at (q, q^{-1}) against q^{a_ij}
    long a_checked = 0;
    bool a_ok = true;
    for (int i = 0; i < rep.structure().size(); ++i)
        for (int j = 0; j < rep.structure().size(); ++j) {
            ++a_checked;
            QLaurent v = rs_specialize_qq(rep.structure().A[i][j]);
            if (v != QLaurent::monomial({static_cast<int>(2 * a[i][j])})) {
                a_ok = false;
                fail("A_" + std::to_string(i) + std::to_string(j) + " at q is " + q_str(v));
            }
        }
    out.details["structure_matrix"] = {{"pass", a_ok}, {"checked", a_checked}};
    out.checked += a_checked;

    const int M = rep.options().trunc.modes;
    const bool d2 = rep.options().dictionary == 2;
    nlohmann::json gens = nlohmann::json::object();
    auto compare = [&](const std::string& name, const FockKey& k, const FockVector& got, const WVec& want) {
        std::string err;
        WVec g = specialize(got, err);
        ++out.checked;
        auto& entry = gens[name];
        if (entry.is_null()) entry = {{"pass", true}, {"checked", 0}};
        entry["checked"] = entry["checked"].get<long>() + 1;
        if (!err.empty() || g != want) {
            entry["pass"] = false;
            fail(name + " on " + FockVector::basis(k).to_json().dump() + ": rep=" + (err.empty() ? wvec_str(g) : err) +
                 " oracle=" + wvec_str(want));
        }
    };

    for (const auto& key : rep.spanning(degree)) {
        const FockVector v = FockVector::basis(key);
        for (int i : rep.nodes()) {
            for (int sign : {1, -1}) {
                // dictionary 1: X^{sign}(gamma_i, 1/2, -1/2); dictionary 2: X^{-sign}(-gamma_i, -1/2, 1/2)
                const int cp = -1;  // s^{1/2} and r^{-1/2} both become w^{-1}
                for (int n = -M; n <= M; ++n) {
                    WVec want = d2 ? orc.vertex_mode(-sign, -1, i, -1, 1, cp, n, key)
                                   : orc.vertex_mode(sign, 1, i, 1, -1, cp, n, key);
                    if (rep.options().unit_weight_modes)
                        for (auto& [kk, c] : want) c = wmul(c, wmono(cp));
                    compare(std::string("x") + (sign > 0 ? "+" : "-"), key, rep.x(sign, i, n, v), want);
                }
            }
            for (int m = -M; m <= M; ++m) {
                if (m == 0) continue;
                compare("a", key, rep.a(i, m, v), orc.heis(i, m, key));
            }
            // omega_i -> q^{sum_j a_ji m_j}, omega'_i -> q^{-sum_j a_ij m_j}
            long e = 0, ep = 0;
            for (size_t j = 0; j < key.beta.size(); ++j) {
                e += a[j][i] * key.beta[j];
                ep -= a[i][j] * key.beta[j];
            }
            compare("omega", key, rep.omega(i, v), {{key, wmono(static_cast<int>(2 * e))}});
            compare("omega'", key, rep.omega_prime(i, v), {{key, wmono(static_cast<int>(2 * ep))}});
        }
        int deg = 0;
        for (const auto& [p, c] : key.mono) deg += p;
        deg += static_cast<int>(orc.form(key.beta, key.beta) / 2);
        compare("D", key, rep.D(v), {{key, wmono(-2 * deg)}});
        compare("D'", key, rep.D(v, 1, true), {{key, wmono(2 * deg)}});
    }
    out.details["generators"] = gens;
    return out;
}

}  // namespace qmckay
