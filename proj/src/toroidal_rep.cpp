#include "qmckay/toroidal_rep.hpp"

#include <algorithm>
#include <functional>

namespace qmckay {

std::string to_string(EdgeOrientation o) {
    return o == EdgeOrientation::cyclic ? "cyclic" : "lower_to_higher";
}

EdgeOrientation parse_edge_orientation(const std::string& s) {
    if (s == "cyclic") return EdgeOrientation::cyclic;
    if (s == "lower_to_higher") return EdgeOrientation::lower_to_higher;
    throw toroidal_error("unknown edge orientation '" + s + "'");
}

std::string to_string(RepVariant v) {
    switch (v) {
        case RepVariant::plain: return "plain";
        case RepVariant::kappa: return "kappa";
        case RepVariant::affine: return "affine";
    }
    return "?";
}

nlohmann::json StructureMatrix::to_json() const {
    nlohmann::json A_ = nlohmann::json::array(), a_ = nlohmann::json::array();
    for (size_t i = 0; i < A.size(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& x : A[i]) row.push_back(rs_str(x));
        A_.push_back(row);
        a_.push_back(a[i]);
    }
    nlohmann::json out = {{"A", A_}, {"a", a_}, {"orientation", to_string(orientation)}};
    if (b) out["b"] = *b;
    return out;
}

StructureMatrix structure_matrix(const Matrix<long>& a, EdgeOrientation o, bool with_skew) {
    const int n = static_cast<int>(a.size());
    if (n < 2) throw toroidal_error("structure_matrix: need at least two nodes");
    StructureMatrix sm;
    sm.a = a;
    sm.orientation = o;
    sm.A.assign(n, std::vector<RSLaurent>(n, RSLaurent(1)));
    for (int i = 0; i < n; ++i) sm.A[i][i] = rs_mono(2, -2);
    if (o == EdgeOrientation::lower_to_higher) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const long m = -a[i][j];
                if (m < 0 || a[j][i] != a[i][j]) throw toroidal_error("structure_matrix: not a symmetric Cartan matrix");
                sm.A[i][j] = rs_mono(static_cast<int>(-2 * m), 0);
                sm.A[j][i] = rs_mono(0, static_cast<int>(2 * m));
            }
    } else {
        // Edges i -> i+1 mod n; for n = 2 both edges join the same pair.
        Matrix<long> want(n, std::vector<long>(n, 0));
        for (int i = 0; i < n; ++i) {
            want[i][i] += 2;
            want[i][(i + 1) % n] -= 1;
            want[(i + 1) % n][i] -= 1;
        }
        if (want != a) throw toroidal_error("structure_matrix: cyclic orientation needs a type A circulant");
        for (int i = 0; i < n; ++i) {
            const int j = (i + 1) % n;
            sm.A[i][j] *= rs_mono(-2, 0);
            sm.A[j][i] *= rs_mono(0, 2);
        }
    }
    if (with_skew) sm.b = type_a_skew(n);
    return sm;
}

nlohmann::json RelationReport::to_json() const {
    nlohmann::json out = {{"relation", relation}, {"anchor", anchor},   {"params", params},
                          {"pass", pass},         {"checked", checked}, {"window", window}};
    if (skipped) {
        out["skipped"] = true;
        out["skip_reason"] = skip_reason;
    }
    if (!witness.empty()) out["witness"] = witness;
    if (!scalar_ratio.empty()) out["scalar_ratio"] = scalar_ratio;
    if (!pass) out["holds_at_one_parameter"] = holds_at_one_parameter;
    if (!note.empty()) out["note"] = note;
    return out;
}

ToroidalRep::ToroidalRep(TablePtr t, RepOptions opt) : t_(std::move(t)), opt_(opt) {
    const int n = t_->num_chars();
    if (n < 2) throw toroidal_error("toroidal rep: the table needs at least two characters");
    if (opt_.dictionary != 1 && opt_.dictionary != 2) throw toroidal_error("toroidal rep: dictionary must be 1 or 2");
    std::optional<Matrix<int>> skew;
    std::optional<std::vector<int>> allowed;
    if (opt_.variant == RepVariant::kappa) {
        if (!t_->is_cyclic() || n < 3) throw toroidal_error("kappa variant: needs a cyclic table of order >= 3");
        fs_ = std::make_unique<FockSpace>(t_, kappa_weight(t_, rs_kappa()));
        skew = type_a_skew(n);
    } else {
        if (opt_.variant == RepVariant::affine) {
            allowed.emplace();
            for (int i = 1; i < n; ++i) allowed->push_back(i);
        }
        fs_ = std::make_unique<FockSpace>(t_, mckay_weight(t_), allowed);
    }
    for (int i : fs_->allowed()) nodes_.push_back(i);
    eng_ = std::make_unique<VertexEngine>(*fs_, Cocycle(fs_->lattice_form(), opt_.cocycle), skew);
    EdgeOrientation o = opt_.orientation.value_or(t_->is_cyclic() ? EdgeOrientation::cyclic
                                                                  : EdgeOrientation::lower_to_higher);
    sm_ = structure_matrix(fs_->lattice_form(), o, skew.has_value());
}

VertexOp ToroidalRep::x_op(int sign, int i) const {
    const int n = fs_->rank();
    // argument multipliers s^{1/2} (x^+) and r^{-1/2} (x^-)
    const RSLaurent pre = sign > 0 ? rs_mono(0, 1) : rs_mono(-1, 0);
    if (opt_.dictionary == 1) return VertexOp::make(sign, n, i, 1, -1, pre, false, kappa());
    return VertexOp::make(-sign, n, i, -1, 1, pre, true, kappa());
}

FockVector ToroidalRep::x(int sign, int i, int k, const FockVector& v) const {
    const VertexOp op = x_op(sign, i);
    FockVector out = eng_->mode(op, k, v);
    return opt_.unit_weight_modes ? out.scaled(op.pre) : out;
}

RSLaurent ToroidalRep::a_scale(int m) const {
    if (m == 0) throw toroidal_error("a_i(0) is not a generator");
    RSLaurent q = m > 0 ? rs_quantum_number(m) : -rs_quantum_number(-m);
    return q.scaled(CycScalar(mpq_class(1, m)));
}

FockVector ToroidalRep::a(int i, int m, const FockVector& v) const {
    return fs_->heis_apply(m, i, v).scaled(a_scale(m));
}

RSLaurent ToroidalRep::omega_value(int i, const std::vector<int>& beta, bool prime) const {
    RSLaurent c(1);
    for (int j = 0; j < static_cast<int>(beta.size()); ++j) {
        if (beta[j] == 0) continue;
        c *= prime ? sm_.A[i][j].monomial_pow(-beta[j]) : sm_.A[j][i].monomial_pow(beta[j]);
    }
    return c;
}

FockVector ToroidalRep::omega(int i, const FockVector& v, int power) const {
    FockVector out;
    for (const auto& [k, c] : v.terms()) out.add(k, c * omega_value(i, k.beta, false).monomial_pow(power));
    return out;
}

FockVector ToroidalRep::omega_prime(int i, const FockVector& v, int power) const {
    FockVector out;
    for (const auto& [k, c] : v.terms()) out.add(k, c * omega_value(i, k.beta, true).monomial_pow(power));
    return out;
}

namespace {

// z^m coefficient of exp(sum_l c a_i(sign * l) z^l) applied to v; the modes involved commute.
FockVector exp_coeff(const ToroidalRep& rep, int i, int m, int sign, const RSLaurent& c, const FockVector& v) {
    std::vector<FockVector> h(m + 1);
    h[0] = v;
    for (int q = 1; q <= m; ++q) {
        FockVector acc;
        for (int l = 1; l <= q; ++l)
            acc.add_scaled(rep.a(i, sign * l, h[q - l]), c.scaled(CycScalar(mpq_class(l))));
        h[q] = acc.scaled(RSLaurent(CycScalar(mpq_class(1, q))));
    }
    return h[m];
}

}  // namespace

FockVector ToroidalRep::omega_mode(int i, int m, const FockVector& v) const {
    if (m < 0) return {};
    return omega(i, exp_coeff(*this, i, m, 1, rs_r() - rs_s(), v));
}

FockVector ToroidalRep::omega_prime_mode(int i, int m, const FockVector& v) const {
    if (m > 0) return {};
    return omega_prime(i, exp_coeff(*this, i, -m, -1, rs_s() - rs_r(), v));
}

FockVector ToroidalRep::D(const FockVector& v, int power, bool prime) const {
    FockVector out;
    for (const auto& [k, c] : v.terms()) {
        const int e = -2 * fs_->degree(k) * power;
        out.add(k, c * (prime ? rs_mono(0, e) : rs_mono(e, 0)));
    }
    return out;
}

FockVector ToroidalRep::D2(const FockVector& v, int power, bool prime) const {
    FockVector out;
    for (const auto& [k, c] : v.terms()) {
        const int e = 2 * k.beta[0] * power;
        out.add(k, c * (prime ? rs_mono(0, e) : rs_mono(e, 0)));
    }
    return out;
}

std::vector<FockKey> ToroidalRep::spanning(int D) const { return fs_->basis_upto(D, opt_.trunc.ball); }

const std::vector<std::string>& relation_names() {
    static const std::vector<std::string> names = {"1", "2", "3", "4", "5", "6a", "6b", "7", "8", "9_1", "9_2", "9_3"};
    return names;
}

namespace {

using Vec = FockVector;
using LinOp = std::function<Vec(const Vec&)>;

std::string short_json(const Vec& v) {
    std::string s = v.to_json().dump();
    return s.size() > 400 ? s.substr(0, 400) + "..." : s;
}

std::string key_label(const FockKey& k) { return FockVector::basis(k).to_json().dump(); }

RSLaurent leading_ratio(const RSLaurent& f, const RSLaurent& g) {
    RSLaurent lf = RSLaurent::monomial(f.terms().front().first, f.terms().front().second);
    RSLaurent lg = RSLaurent::monomial(g.terms().front().first, g.terms().front().second);
    return lf * lg.monomial_inverse();
}

// Compares lhs and rhs vectors and tracks whether they differ by one scalar throughout.
class Comparator {
public:
    explicit Comparator(RelationReport& rep) : rep_(rep) {}

    void operator()(const std::string& where, const FockKey& k, const Vec& lhs, const Vec& rhs) {
        ++rep_.checked;
        if (lhs == rhs) {
            if (!lhs.is_zero()) track(lhs, rhs);
            return;
        }
        if (rep_.pass) {
            rep_.pass = false;
            rep_.witness = where + " on " + key_label(k) + ": lhs=" + short_json(lhs) + " rhs=" + short_json(rhs);
        }
        if (rep_.holds_at_one_parameter && !specialized(lhs - rhs).is_zero()) rep_.holds_at_one_parameter = false;
        track(lhs, rhs);
    }

    void finish() {
        if (!rep_.pass && ratio_ok_ && ratio_) rep_.scalar_ratio = rs_str(*ratio_);
    }

private:
    // (r, s, kappa) -> (q, q^{-1}, 1), with q stored as r
    static Vec specialized(const Vec& v) {
        return v.mapped([](const RSLaurent& c) {
            RSLaurent out;
            for (const auto& [e, x] : c.terms()) out += rs_mono(e[0] - e[1], 0, 0, x);
            return out;
        });
    }

    void track(const Vec& lhs, const Vec& rhs) {
        if (!ratio_ok_) return;
        if (lhs.is_zero() || rhs.is_zero()) {
            ratio_ok_ = false;
            return;
        }
        if (!ratio_) {
            const auto& [k, c] = *lhs.terms().begin();
            auto it = rhs.terms().find(k);
            if (it == rhs.terms().end()) {
                ratio_ok_ = false;
                return;
            }
            ratio_ = leading_ratio(c, it->second);
        }
        if (lhs != rhs.scaled(*ratio_)) ratio_ok_ = false;
    }

    RelationReport& rep_;
    std::optional<RSLaurent> ratio_;
    bool ratio_ok_ = true;
};

// Integer or half-integer power of a monomial: m^{num/2}.
RSLaurent half_power(const RSLaurent& m, int num) {
    if (num % 2 == 0) return m.monomial_pow(num / 2);
    return rs_monomial_sqrt(m).monomial_pow(num);
}

std::string pm(int sign) { return sign > 0 ? "+" : "-"; }

struct Ctx {
    const ToroidalRep& rep;
    RelationReport& out;
    Comparator cmp;
    std::vector<FockKey> keys;
    int M;
    const std::vector<int>& nodes;

    Ctx(const ToroidalRep& r, RelationReport& o, int degree)
        : rep(r), out(o), cmp(o), keys(r.spanning(degree)), M(r.options().trunc.modes), nodes(r.nodes()) {}

    RSLaurent kappa_pow(int i, int j, int m) const {
        if (!rep.kappa() || !rep.structure().b) return RSLaurent(1);
        return rs_kappa(m * (*rep.structure().b)[i][j]);
    }
    long a(int i, int j) const { return rep.structure().a[i][j]; }
    const RSLaurent& A(int i, int j) const { return rep.structure().A[i][j]; }

    void each(const std::string& where, const LinOp& lhs, const LinOp& rhs) {
        for (const auto& k : keys) {
            Vec v = Vec::basis(k);
            cmp(where, k, lhs(v), rhs(v));
        }
    }
};

std::string window_label(const std::string& name, std::initializer_list<std::pair<const char*, int>> p) {
    std::string s = name + "(";
    bool first = true;
    for (const auto& [n, v] : p) {
        s += (first ? "" : ",") + std::string(n) + "=" + std::to_string(v);
        first = false;
    }
    return s + ")";
}

void rel1(Ctx& c) {
    const auto& R = c.rep;
    c.out.checked++;
    if (ToroidalRep::gamma() * ToroidalRep::gamma_prime() != rs_mono(2, 2)) {
        c.out.pass = false;
        c.out.witness = "gamma gamma' != rs";
    }
    std::vector<std::pair<std::string, LinOp>> diag;
    for (int i : c.nodes)
        for (int p : {1, -1}) {
            diag.push_back({"omega_" + std::to_string(i) + "^" + std::to_string(p),
                            [&R, i, p](const Vec& v) { return R.omega(i, v, p); }});
            diag.push_back({"omega'_" + std::to_string(i) + "^" + std::to_string(p),
                            [&R, i, p](const Vec& v) { return R.omega_prime(i, v, p); }});
        }
    const int dcount = R.kappa() ? 2 : 1;
    for (int l = 1; l <= dcount; ++l)
        for (int p : {1, -1})
            for (bool prime : {false, true}) {
                std::string nm = std::string(prime ? "D'" : "D") + (R.kappa() ? "_" + std::to_string(l) : "") + "^" +
                                 std::to_string(p);
                diag.push_back({nm, [&R, l, p, prime](const Vec& v) {
                                    return l == 1 ? R.D(v, p, prime) : R.D2(v, p, prime);
                                }});
            }
    for (int i : c.nodes) {
        c.each("omega_" + std::to_string(i) + " omega_" + std::to_string(i) + "^-1",
               [&R, i](const Vec& v) { return R.omega(i, R.omega(i, v, -1)); }, [](const Vec& v) { return v; });
        c.each("omega'_" + std::to_string(i) + " omega'_" + std::to_string(i) + "^-1",
               [&R, i](const Vec& v) { return R.omega_prime(i, R.omega_prime(i, v, -1)); },
               [](const Vec& v) { return v; });
    }
    for (size_t x = 0; x < diag.size(); ++x)
        for (size_t y = x + 1; y < diag.size(); ++y) {
            const auto& f = diag[x].second;
            const auto& g = diag[y].second;
            c.each("[" + diag[x].first + ", " + diag[y].first + "]", [&](const Vec& v) { return f(g(v)); },
                   [&](const Vec& v) { return g(f(v)); });
        }
}

void rel2(Ctx& c) {
    const auto& R = c.rep;
    const RSLaurent d = rs_r() - rs_s();
    for (int i : c.nodes)
        for (int j : c.nodes)
            for (int m = -c.M; m <= c.M; ++m)
                for (int mp = -c.M; mp <= c.M; ++mp) {
                    if (m == 0 || mp == 0) continue;
                    const int am = std::abs(m);
                    // |m| (r-s)^2 [a_i(m), a_j(m')] against the numerator of the stated constant
                    RSLaurent cst;
                    if (m + mp == 0) {
                        const int e = static_cast<int>(m * c.a(i, j));
                        cst = rs_mono(am, am) * (half_power(c.A(i, i), e) - half_power(c.A(i, i), -e)) *
                              (ToroidalRep::gamma().monomial_pow(am) - ToroidalRep::gamma_prime().monomial_pow(am)) *
                              c.kappa_pow(i, j, m);
                    }
                    const RSLaurent lscale = d * d * RSLaurent(CycScalar(mpq_class(am)));
                    c.each(window_label("[a_i(m),a_j(m')]", {{"i", i}, {"j", j}, {"m", m}, {"m'", mp}}),
                           [&](const Vec& v) {
                               return (R.a(i, m, R.a(j, mp, v)) - R.a(j, mp, R.a(i, m, v))).scaled(lscale);
                           },
                           [&](const Vec& v) { return v.scaled(cst); });
                }
}

void rel3(Ctx& c) {
    const auto& R = c.rep;
    for (int i : c.nodes)
        for (int j : c.nodes)
            for (int m = -c.M; m <= c.M; ++m) {
                if (m == 0) continue;
                for (int p : {1, -1}) {
                    c.each(window_label("[a_i(m),omega_j^p]", {{"i", i}, {"j", j}, {"m", m}, {"p", p}}),
                           [&](const Vec& v) { return R.a(i, m, R.omega(j, v, p)); },
                           [&](const Vec& v) { return R.omega(j, R.a(i, m, v), p); });
                    c.each(window_label("[a_i(m),omega'_j^p]", {{"i", i}, {"j", j}, {"m", m}, {"p", p}}),
                           [&](const Vec& v) { return R.a(i, m, R.omega_prime(j, v, p)); },
                           [&](const Vec& v) { return R.omega_prime(j, R.a(i, m, v), p); });
                }
            }
}

void rel4(Ctx& c) {
    const auto& R = c.rep;
    for (bool prime : {false, true}) {
        const RSLaurent base = prime ? rs_s() : rs_r();
        const std::string dn = prime ? "D'" : "D";
        for (int i : c.nodes) {
            for (int sign : {1, -1})
                for (int k = -c.M; k <= c.M; ++k) {
                    c.each(window_label(dn + " x" + pm(sign) + " " + dn + "^-1", {{"i", i}, {"k", k}}),
                           [&](const Vec& v) { return R.D(R.x(sign, i, k, R.D(v, -1, prime)), 1, prime); },
                           [&](const Vec& v) { return R.x(sign, i, k, v).scaled(base.monomial_pow(k)); });
                    if (R.kappa())
                        c.each(window_label(dn + "_2 x" + pm(sign) + " " + dn + "_2^-1", {{"i", i}, {"k", k}}),
                               [&](const Vec& v) { return R.D2(R.x(sign, i, k, R.D2(v, -1, prime)), 1, prime); },
                               [&](const Vec& v) {
                                   return R.x(sign, i, k, v).scaled(base.monomial_pow(i == 0 ? sign : 0));
                               });
                }
            for (int m = -c.M; m <= c.M; ++m) {
                if (m == 0) continue;
                c.each(window_label(dn + " a " + dn + "^-1", {{"i", i}, {"m", m}}),
                       [&](const Vec& v) { return R.D(R.a(i, m, R.D(v, -1, prime)), 1, prime); },
                       [&](const Vec& v) { return R.a(i, m, v).scaled(base.monomial_pow(m)); });
                if (R.kappa())
                    c.each(window_label(dn + "_2 a " + dn + "_2^-1", {{"i", i}, {"m", m}}),
                           [&](const Vec& v) { return R.D2(R.a(i, m, R.D2(v, -1, prime)), 1, prime); },
                           [&](const Vec& v) { return R.a(i, m, v); });
            }
        }
    }
}

void rel5(Ctx& c) {
    const auto& R = c.rep;
    for (int i : c.nodes)
        for (int j : c.nodes)
            for (int sign : {1, -1})
                for (int k = -c.M; k <= c.M; ++k) {
                    c.each(window_label(std::string("omega_i x") + pm(sign) + "_j omega_i^-1", {{"i", i}, {"j", j}, {"k", k}}),
                           [&](const Vec& v) { return R.omega(i, R.x(sign, j, k, R.omega(i, v, -1))); },
                           [&](const Vec& v) { return R.x(sign, j, k, v).scaled(c.A(j, i).monomial_pow(sign)); });
                    c.each(window_label(std::string("omega'_i x") + pm(sign) + "_j omega'_i^-1", {{"i", i}, {"j", j}, {"k", k}}),
                           [&](const Vec& v) { return R.omega_prime(i, R.x(sign, j, k, R.omega_prime(i, v, -1))); },
                           [&](const Vec& v) { return R.x(sign, j, k, v).scaled(c.A(i, j).monomial_pow(-sign)); });
                }
}

// m < 0 (negative = true) or m > 0.
void rel6(Ctx& c, bool negative) {
    const auto& R = c.rep;
    const RSLaurent d = rs_r() - rs_s();
    for (int i : c.nodes)
        for (int j : c.nodes)
            for (int am = 1; am <= c.M; ++am) {
                const int m = negative ? -am : am;
                for (int sign : {1, -1})
                    for (int k = -c.M; k <= c.M; ++k) {
                        const int e = static_cast<int>(m * c.a(i, j));
                        const RSLaurent rsr = rs_mono(2, -2);
                        // m (r-s) [a_i(m), x_j(k)] = +- (rs)^{|m|/2} ((r/s)^{e/2} - (r/s)^{-e/2}) g^{+-m/2} x_j(m+k)
                        RSLaurent cst = rs_mono(am, am) * (half_power(rsr, e) - half_power(rsr, -e)) *
                                        half_power(negative ? ToroidalRep::gamma() : ToroidalRep::gamma_prime(),
                                                   sign * m) *
                                        c.kappa_pow(i, j, m);
                        if (sign < 0) cst = -cst;
                        const RSLaurent lscale = d.scaled(CycScalar(mpq_class(m)));
                        c.each(window_label(std::string("[a_i(m),x") + pm(sign) + "_j(k)]",
                                            {{"i", i}, {"j", j}, {"m", m}, {"k", k}}),
                               [&](const Vec& v) {
                                   return (R.a(i, m, R.x(sign, j, k, v)) - R.x(sign, j, k, R.a(i, m, v))).scaled(lscale);
                               },
                               [&](const Vec& v) { return R.x(sign, j, m + k, v).scaled(cst); });
                    }
            }
}

void rel7(Ctx& c) {
    const auto& R = c.rep;
    for (int i : c.nodes)
        for (int j : c.nodes)
            for (int sign : {1, -1})
                for (int k = -c.M; k < c.M; ++k)
                    for (int kp = -c.M; kp < c.M; ++kp) {
                        auto xx = [&](int i1, int k1, int i2, int k2, const Vec& v) {
                            return R.x(sign, i1, k1, R.x(sign, i2, k2, v));
                        };
                        const std::string where =
                            window_label(std::string("x") + pm(sign) + " exchange", {{"i", i}, {"j", j}, {"k", k}, {"k'", kp}});
                        if (!R.kappa()) {
                            // x_i(k+1) x_j(k') - A_ji^{+-1} x_j(k') x_i(k+1)
                            //   = -(A_ji A_ij^{-1})^{+-1/2} (x_j(k'+1) x_i(k) - A_ij^{+-1} x_i(k) x_j(k'+1))
                            const RSLaurent h = half_power(c.A(j, i) * c.A(i, j).monomial_inverse(), sign);
                            c.each(where,
                                   [&](const Vec& v) {
                                       return xx(i, k + 1, j, kp, v) -
                                              xx(j, kp, i, k + 1, v).scaled(c.A(j, i).monomial_pow(sign));
                                   },
                                   [&](const Vec& v) {
                                       return (xx(j, kp + 1, i, k, v) -
                                               xx(i, k, j, kp + 1, v).scaled(c.A(i, j).monomial_pow(sign)))
                                           .scaled(-h);
                                   });
                        } else {
                            // z^{-k} w^{-k'} coefficient of the generating-function form
                            const RSLaurent kb = c.kappa_pow(i, j, 1);
                            const RSLaurent h1 = half_power(c.A(i, j) * c.A(j, i), sign);
                            const RSLaurent h2 = half_power(c.A(j, i) * c.A(i, j).monomial_inverse(), sign);
                            c.each(where,
                                   [&](const Vec& v) {
                                       return xx(i, k + 1, j, kp, v).scaled(kb) - xx(i, k, j, kp + 1, v).scaled(h1);
                                   },
                                   [&](const Vec& v) {
                                       return xx(j, kp, i, k + 1, v).scaled(kb * c.A(j, i).monomial_pow(sign)) -
                                              xx(j, kp + 1, i, k, v).scaled(h2);
                                   });
                        }
                    }
}

void rel8(Ctx& c) {
    const auto& R = c.rep;
    const RSLaurent d = rs_r() - rs_s();
    for (int i : c.nodes)
        for (int j : c.nodes)
            for (int k = -c.M; k <= c.M; ++k)
                for (int kp = -c.M; kp <= c.M; ++kp) {
                    const int t = k + kp;
                    // (r-s)[x_i^+(k), x_j^-(k')] = delta_ij (g'^{-k} g^{-t/2} w_i(t) - g^{k'} g'^{t/2} w'_i(t))
                    const RSLaurent c1 = ToroidalRep::gamma_prime().monomial_pow(-k) * half_power(ToroidalRep::gamma(), -t);
                    const RSLaurent c2 = ToroidalRep::gamma().monomial_pow(kp) * half_power(ToroidalRep::gamma_prime(), t);
                    c.each(window_label("[x+_i(k),x-_j(k')]", {{"i", i}, {"j", j}, {"k", k}, {"k'", kp}}),
                           [&](const Vec& v) {
                               return (R.x(1, i, k, R.x(-1, j, kp, v)) - R.x(-1, j, kp, R.x(1, i, k, v))).scaled(d);
                           },
                           [&](const Vec& v) {
                               if (i != j) return Vec();
                               return R.omega_mode(i, t, v).scaled(c1) - R.omega_prime_mode(i, t, v).scaled(c2);
                           });
                }
}

void rel9_1(Ctx& c) {
    const auto& R = c.rep;
    bool any = false;
    for (int i : c.nodes)
        for (int j : c.nodes) {
            if (i == j || c.a(i, j) != 0) continue;
            any = true;
            for (int sign : {1, -1})
                for (int m = -c.M; m <= c.M; ++m)
                    for (int k = -c.M; k <= c.M; ++k)
                        c.each(window_label(std::string("x") + pm(sign) + " commute", {{"i", i}, {"j", j}, {"m", m}, {"k", k}}),
                               [&](const Vec& v) { return R.x(sign, i, m, R.x(sign, j, k, v)); },
                               [&](const Vec& v) {
                                   return R.x(sign, j, k, R.x(sign, i, m, v)).scaled(c.A(j, i).monomial_pow(sign));
                               });
        }
    c.out.note = "<j,i> read as A_ji";
    if (!any) {
        c.out.skipped = true;
        c.out.skip_reason = "no pair with a_ij = 0";
    }
}

}  // namespace

RelationReport verify_serre(const ToroidalRep& rep, int i, int j, const std::vector<int>& mode_set, int degree,
                            bool allow_quartic) {
    const std::string pre = rep.kappa() ? "T" : "D";
    RelationReport out;
    out.relation = pre + (j < i ? "9_2" : "9_3");
    out.anchor = rep.kappa() ? "toroidal_kappa_serre" : "toroidal_serre";
    out.params = {{"i", i}, {"j", j}, {"modes", mode_set}, {"degree", degree}};
    out.window = {{"degree", degree}, {"ball", rep.options().trunc.ball}, {"modes", mode_set}};
    out.note = "r_i s_i read as rs; symmetrization over all orderings of the x_i modes";
    const long aij = rep.structure().a[i][j];
    if (i == j || aij >= 0) {
        out.skipped = true;
        out.skip_reason = "a_ij >= 0";
        return out;
    }
    const int n = static_cast<int>(1 - aij);
    if (n > 2 && !allow_quartic) {
        out.skipped = true;
        out.skip_reason = "a_ij = " + std::to_string(aij) + ": quartic and higher Serre relations are opt-in";
        return out;
    }
    Comparator cmp(out);
    const auto keys = rep.spanning(degree);
    for (int sign : {1, -1}) {
        // upper sign for D9_2 (j < i), lower for D9_3
        const int e = (j < i) ? sign : -sign;
        std::vector<RSLaurent> coef(n + 1);
        for (int k = 0; k <= n; ++k) {
            RSLaurent b = rs_gaussian_binomial(n, k);
            if (e < 0) b = rs_substitute(b, -1);
            coef[k] = rs_mono(e * k * (k - 1), e * k * (k - 1)) * b;
            if (k % 2) coef[k] = -coef[k];
        }
        // all n-tuples of modes, taken up to permutation
        std::vector<std::vector<int>> tuples{{}};
        for (int p = 0; p < n; ++p) {
            std::vector<std::vector<int>> next;
            for (const auto& t : tuples)
                for (int m : mode_set)
                    if (t.empty() || m >= t.back()) {
                        auto u = t;
                        u.push_back(m);
                        next.push_back(u);
                    }
            tuples = std::move(next);
        }
        for (const auto& base : tuples)
            for (int l : mode_set) {
                std::vector<std::vector<int>> perms;
                auto p = base;
                do perms.push_back(p);
                while (std::next_permutation(p.begin(), p.end()));
                for (const auto& key : keys) {
                    Vec v = Vec::basis(key), total;
                    for (const auto& ms : perms)
                        for (int k = 0; k <= n; ++k) {
                            // x_i(m_1)...x_i(m_k) x_j(l) x_i(m_{k+1})...x_i(m_n) v, rightmost first
                            Vec w = v;
                            for (int q = n - 1; q >= k; --q) w = rep.x(sign, i, ms[q], w);
                            w = rep.x(sign, j, l, w);
                            for (int q = k - 1; q >= 0; --q) w = rep.x(sign, i, ms[q], w);
                            total.add_scaled(w, coef[k]);
                        }
                    std::string where = "serre x" + pm(sign) + " modes(";
                    for (size_t q = 0; q < base.size(); ++q) where += (q ? "," : "") + std::to_string(base[q]);
                    where += ") l=" + std::to_string(l);
                    cmp(where, key, total, Vec());
                }
            }
    }
    // Comparator cannot form a ratio against zero; nothing to finish.
    return out;
}

RelationReport verify_relation(const ToroidalRep& rep, const std::string& relation, int serre_degree,
                               bool allow_quartic) {
    const std::string pre = rep.kappa() ? "T" : "D";
    if (relation.size() < 2 || relation.substr(0, 1) != pre)
        throw toroidal_error("relation '" + relation + "' does not belong to the " + to_string(rep.options().variant) +
                             " variant (expected prefix " + pre + ")");
    const std::string stem = relation.substr(1);
    const auto& names = relation_names();
    if (std::find(names.begin(), names.end(), stem) == names.end())
        throw toroidal_error("unknown relation '" + relation + "'");

    if (stem == "9_2" || stem == "9_3") {
        RelationReport agg;
        agg.relation = relation;
        agg.anchor = rep.kappa() ? "toroidal_kappa_serre" : "toroidal_serre";
        const std::vector<int> modes = {-1, 0, 1};
        agg.window = {{"degree", serre_degree}, {"ball", rep.options().trunc.ball}, {"modes", modes}};
        nlohmann::json pairs = nlohmann::json::array();
        bool any = false;
        for (int i : rep.nodes())
            for (int j : rep.nodes()) {
                if (i == j || rep.structure().a[i][j] >= 0) continue;
                if ((stem == "9_2") != (j < i)) continue;
                auto r = verify_serre(rep, i, j, modes, serre_degree, allow_quartic);
                pairs.push_back({{"i", i}, {"j", j}, {"pass", r.pass}, {"skipped", r.skipped}});
                if (r.skipped) {
                    agg.skip_reason = r.skip_reason;
                    continue;
                }
                any = true;
                agg.checked += r.checked;
                if (!r.pass && agg.pass) {
                    agg.pass = false;
                    agg.witness = "(i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ") " + r.witness;
                }
                agg.note = r.note;
            }
        agg.params = {{"pairs", pairs}};
        if (!any) {
            agg.skipped = true;
            if (agg.skip_reason.empty()) agg.skip_reason = "no pair with a_ij < 0 in this order";
        } else {
            agg.skip_reason.clear();
        }
        return agg;
    }

    RelationReport out;
    out.relation = relation;
    out.anchor = rep.kappa() ? "toroidal_kappa_relations"
                             : (rep.options().variant == RepVariant::affine ? "affine_relations" : "toroidal_relations");
    out.params = {{"dictionary", rep.options().dictionary},
                  {"orientation", to_string(rep.structure().orientation)},
                  {"nodes", rep.nodes()}};
    out.window = rep.options().trunc.to_json();
    Ctx c(rep, out, rep.options().trunc.degree);
    if (stem == "1") rel1(c);
    else if (stem == "2") rel2(c);
    else if (stem == "3") rel3(c);
    else if (stem == "4") rel4(c);
    else if (stem == "5") rel5(c);
    else if (stem == "6a") rel6(c, true);
    else if (stem == "6b") rel6(c, false);
    else if (stem == "7") rel7(c);
    else if (stem == "8") rel8(c);
    else if (stem == "9_1") rel9_1(c);
    c.cmp.finish();
    return out;
}

std::vector<RelationReport> verify_all_relations(const ToroidalRep& rep, int serre_degree, bool allow_quartic) {
    const std::string pre = rep.kappa() ? "T" : "D";
    std::vector<RelationReport> out;
    for (const auto& stem : relation_names())
        out.push_back(verify_relation(rep, pre + stem, serre_degree, allow_quartic));
    return out;
}

}  // namespace qmckay
