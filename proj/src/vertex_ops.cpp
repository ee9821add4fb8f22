#include "qmckay/vertex_ops.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qmckay {

std::string to_string(CocycleConvention c) {
    return c == CocycleConvention::principal ? "principal" : "sign_split";
}

CocycleConvention parse_cocycle_convention(const std::string& s) {
    if (s == "principal") return CocycleConvention::principal;
    if (s == "sign_split") return CocycleConvention::sign_split;
    throw std::invalid_argument("unknown cocycle convention: " + s);
}

Cocycle::Cocycle(const Matrix<long>& a1, CocycleConvention conv) : conv_(conv) {
    const int n = static_cast<int>(a1.size());
    basis_.assign(n, std::vector<RSLaurent>(n, RSLaurent(1)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                basis_[i][j] = rs_mono(1, 1);
            } else if (i > j) {
                const int a = static_cast<int>(a1[i][j]);
                RSLaurent unit = conv == CocycleConvention::principal ? rs_mono(1, 1, 0, CycScalar::zeta(4))
                                                                      : rs_mono(1, 1, 0, CycScalar(-1));
                basis_[i][j] = unit.monomial_pow(a);
            }
        }
}

RSLaurent Cocycle::eval(const std::vector<int>& alpha, const std::vector<int>& beta) const {
    RSLaurent out(1);
    for (int i = 0; i < rank(); ++i) {
        if (alpha[i] == 0) continue;
        for (int j = 0; j < rank(); ++j) {
            if (beta[j] == 0) continue;
            out *= basis_[i][j].monomial_pow(alpha[i] * beta[j]);
        }
    }
    return out;
}

Matrix<int> type_a_skew(int order) {
    if (order < 3) throw std::domain_error("kappa skew matrix needs cyclic order >= 3");
    Matrix<int> b(order, std::vector<int>(order, 0));
    for (int i = 0; i < order; ++i) {
        b[i][(i + 1) % order] = 1;
        b[(i + 1) % order][i] = -1;
    }
    return b;
}

nlohmann::json TruncationParams::to_json() const {
    return {{"degree", degree}, {"modes", modes}, {"ball", ball}};
}

// ---------------------------------------------------------------------------

std::vector<int> VertexOp::lattice() const {
    std::vector<int> l = g;
    for (auto& x : l) x *= sign;
    return l;
}

std::string VertexOp::signature() const {
    std::ostringstream os;
    os << sign << '|';
    for (int x : g) os << x << ',';
    os << '|' << a2 << '|' << b2 << '|' << rs_str(pre) << '|' << kappa;
    return os.str();
}

std::string VertexOp::describe() const {
    std::ostringstream os;
    os << "X" << (sign > 0 ? "+" : "-") << "(";
    bool first = true;
    for (size_t i = 0; i < g.size(); ++i) {
        if (g[i] == 0) continue;
        if (!first) os << (g[i] > 0 ? "+" : "");
        if (g[i] == -1) os << "-";
        else if (g[i] != 1) os << g[i] << "*";
        os << "g" << i;
        first = false;
    }
    if (first) os << "0";
    auto half = [](int v) {
        if (v % 2 == 0) return std::to_string(v / 2);
        return std::to_string(v) + "/2";
    };
    os << ", " << half(a2) << ", " << half(b2) << ", (" << rs_str(pre) << ")z)";
    if (kappa) os << "[kappa]";
    return os.str();
}

VertexOp VertexOp::make(int sign, int rank, int i, int a2, int b2, const RSLaurent& pre, bool negate, bool kappa) {
    VertexOp op;
    op.sign = sign;
    op.g.assign(rank, 0);
    op.g[i] = negate ? -1 : 1;
    op.a2 = a2;
    op.b2 = b2;
    op.pre = pre;
    op.kappa = kappa;
    return op;
}

// ---------------------------------------------------------------------------

VertexEngine::VertexEngine(const FockSpace& fs, Cocycle eps, std::optional<Matrix<int>> skew)
    : fs_(fs), eps_(std::move(eps)), b_(std::move(skew)) {
    if (eps_.rank() != fs_.rank()) throw std::invalid_argument("cocycle rank does not match Fock space");
    if (b_ && static_cast<int>(b_->size()) != fs_.rank())
        throw std::invalid_argument("skew matrix size does not match Fock space");
}

FockVector VertexEngine::lattice_shift(const std::vector<int>& alpha, const FockVector& v) const {
    FockVector out;
    for (const auto& [k, c] : v.terms()) {
        FockKey nk{k.mono, k.beta};
        for (size_t i = 0; i < nk.beta.size(); ++i) nk.beta[i] += alpha[i];
        out.add(nk, c * eps_.eval(alpha, k.beta));
    }
    return out;
}

int VertexEngine::kappa_exponent(const std::vector<int>& g, const std::vector<int>& beta) const {
    if (!b_) throw std::logic_error("kappa grading requested without a skew matrix");
    const auto& a1 = fs_.lattice_form();
    long e = 0;
    for (int i = 0; i < fs_.rank(); ++i) {
        if (g[i] == 0) continue;
        for (int j = 1; j < fs_.rank(); ++j) e += g[i] * a1[i][j] * beta[j] * (*b_)[i][j];
    }
    return static_cast<int>(-e);
}

RSLaurent VertexEngine::creation_coeff(const VertexOp& op, int n) const {
    RSLaurent c = op.pre.monomial_pow(n);
    if (op.sign < 0) c = -(c * rs_mono(op.a2 * n, op.b2 * n));
    return c.scaled(CycScalar(mpq_class(1, n)));
}

RSLaurent VertexEngine::annihilation_coeff(const VertexOp& op, int n) const {
    RSLaurent c = op.pre.monomial_pow(-n);
    if (op.sign > 0) c = -(c * rs_mono(-op.a2 * n, -op.b2 * n));
    return c.scaled(CycScalar(mpq_class(1, n)));
}

const FockVector& VertexEngine::creation_poly(const VertexOp& op, int p) const {
    return creation_poly(op.signature(), op, p);
}

const FockVector& VertexEngine::creation_poly(const std::string& sig, const VertexOp& op, int p) const {
    auto& h = cre_cache_[sig];
    if (h.empty()) h.push_back(FockVector::vacuum(fs_.rank()));
    while (static_cast<int>(h.size()) <= p) {
        const int q = static_cast<int>(h.size());
        FockVector acc;
        for (int n = 1; n <= q; ++n) {
            RSLaurent c = creation_coeff(op, n).scaled(CycScalar(long(n)));
            for (int i = 0; i < fs_.rank(); ++i) {
                if (op.g[i] == 0 || !fs_.is_allowed(i)) continue;
                acc += h[q - n].times_mono({{n, i}}, c.scaled(CycScalar(long(op.g[i]))));
            }
        }
        h.push_back(acc.scaled(RSLaurent(CycScalar(mpq_class(1, q)))));
    }
    return h[p];
}

const std::map<int, FockVector>& VertexEngine::annihilate(const VertexOp& op, const FockKey& k) const {
    return annihilate(op.signature(), op, k);
}

const std::map<int, FockVector>& VertexEngine::annihilate(const std::string& sig, const VertexOp& op,
                                                          const FockKey& k) const {
    auto key = std::make_pair(sig, FockKey{k.mono, k.beta});
    auto it = ann_cache_.find(key);
    if (it != ann_cache_.end()) return it->second;

    // a_{-m}(alpha) -> a_{-m}(alpha) + delta t^{-m}; expand over subsets of factors.
    const auto& mono = k.mono;
    const size_t len = mono.size();
    std::vector<RSLaurent> delta(len);
    for (size_t f = 0; f < len; ++f) {
        const auto [m, idx] = mono[f];
        delta[f] = annihilation_coeff(op, m).scaled(CycScalar(long(m))) * fs_.level_pairing(op.g, idx, m);
    }
    std::map<int, FockVector> out;
    for (unsigned long mask = 0; mask < (1ul << len); ++mask) {
        RSLaurent c(1);
        int q = 0;
        FockKey rest{{}, k.beta};
        for (size_t f = 0; f < len && !c.is_zero(); ++f) {
            if (mask & (1ul << f)) {
                c *= delta[f];
                q += mono[f].first;
            } else {
                rest.mono.push_back(mono[f]);
            }
        }
        if (!c.is_zero()) out[q].add(rest, c);
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return ann_cache_.emplace(std::move(key), std::move(out)).first->second;
}

std::pair<RSLaurent, int> VertexEngine::lattice_factor(const VertexOp& op, const std::vector<int>& beta) const {
    const auto L = op.lattice();
    const int z = static_cast<int>(fs_.pair1(L, beta));
    RSLaurent c = eps_.eval(L, beta) * op.pre.monomial_pow(z);
    if (op.kappa) c *= rs_mono(0, 0, kappa_exponent(L, beta));
    return {c, z};
}

namespace {

FockVector with_beta(const FockVector& v, const std::vector<int>& beta, const RSLaurent& c) {
    FockVector out;
    for (const auto& [k, x] : v.terms()) out.add(FockKey{k.mono, beta}, x * c);
    return out;
}

std::vector<int> vec_add(std::vector<int> a, const std::vector<int>& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

}  // namespace

const std::map<int, FockVector>& VertexEngine::series(const VertexOp& op, const FockKey& k,
                                                      int max_out_degree) const {
    const std::string sig = op.signature();
    auto ck = std::make_pair(sig, k);
    auto hit = series_cache_.find(ck);
    if (hit != series_cache_.end() && hit->second.first >= max_out_degree) return hit->second.second;

    const int d = fs_.degree(k);
    const int ecap = max_out_degree - d - 1;
    std::map<int, FockVector> out;
    const auto [lam, z0] = lattice_factor(op, k.beta);
    const auto nb = vec_add(k.beta, op.lattice());
    for (const auto& [q, rest] : annihilate(sig, op, k)) {
        const FockVector moved = with_beta(rest, nb, lam);
        for (int p = 0; p - q + z0 <= ecap; ++p) {
            const FockVector& h = creation_poly(sig, op, p);
            FockVector& slot = out[p - q + z0];
            for (const auto& [hk, hc] : h.terms())
                for (const auto& [mk, mc] : moved.terms()) slot.add(FockKey{mono_mul(mk.mono, hk.mono), mk.beta}, mc * hc);
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    auto& entry = series_cache_[std::move(ck)];
    entry = {max_out_degree, std::move(out)};
    return entry.second;
}

FockVector VertexEngine::mode(const VertexOp& op, int n, const FockVector& v) const {
    FockVector out;
    for (const auto& [k, c] : v.terms()) {
        const int cap = fs_.degree(k) - n;
        if (cap < 0) continue;
        const auto& s = series(op, k, cap);
        auto it = s.find(-n - 1);
        if (it != s.end()) out.add_scaled(it->second, c);
    }
    return out;
}

std::map<std::pair<int, int>, FockVector> VertexEngine::normal_ordered(const VertexOp& op1, const VertexOp& op2,
                                                                       const FockKey& k, int ez_max,
                                                                       int ew_max) const {
    std::map<std::pair<int, int>, FockVector> out;
    const auto L1 = op1.lattice(), L2 = op2.lattice();
    const auto [lam1, z1] = lattice_factor(op1, k.beta);
    const auto [lam2, z2] = lattice_factor(op2, k.beta);
    // e^{L1+L2} with eps(L1+L2, beta) = eps(L1, beta) eps(L2, beta); both z^partial at beta.
    const RSLaurent lam = lam1 * lam2;
    const auto nb = vec_add(vec_add(k.beta, L1), L2);
    const std::string sig1 = op1.signature(), sig2 = op2.signature();
    for (const auto& [q2, rest2] : annihilate(sig2, op2, k)) {
        for (const auto& [k2, c2] : rest2.terms()) {
            for (const auto& [q1, rest1] : annihilate(sig1, op1, k2)) {
                const FockVector moved = with_beta(rest1, nb, lam * c2);
                for (int p1 = 0; p1 - q1 + z1 <= ez_max; ++p1) {
                    const FockVector& h1 = creation_poly(sig1, op1, p1);
                    for (int p2 = 0; p2 - q2 + z2 <= ew_max; ++p2) {
                        const FockVector& h2 = creation_poly(sig2, op2, p2);
                        FockVector term;
                        for (const auto& [hk1, hc1] : h1.terms())
                            for (const auto& [hk2, hc2] : h2.terms())
                                term += moved.times_mono(mono_mul(hk1.mono, hk2.mono), hc1 * hc2);
                        if (!term.is_zero()) out[{p1 - q1 + z1, p2 - q2 + z2}] += term;
                    }
                }
            }
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

// ---------------------------------------------------------------------------

std::string OpePrefactor::str() const {
    std::ostringstream os;
    os << "(" << rs_str(scalar) << ")";
    if (zpow != 0) os << " z^" << zpow;
    for (const auto& [mu, e] : factors) {
        os << " (z - (" << rs_str(mu) << ")w)";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

nlohmann::json OpeReport::to_json() const {
    nlohmann::json out{{"anchor", anchor}, {"group", group},   {"i", i},         {"j", j},
                     {"pairing", pairing}, {"kappa", kappa}, {"display", display}, {"mode", mode},
                     {"lhs", lhs},       {"rhs", rhs},       {"prefactor", prefactor}, {"pass", pass},
                     {"checked", checked}, {"window", window}};
    if (skipped) {
        out["skipped"] = true;
        out["skip_reason"] = skip_reason;
    }
    if (!witness.empty()) out["witness"] = witness;
    if (!scalar_ratio.empty()) out["scalar_ratio"] = scalar_ratio;
    return out;
}

OpePrefactor derived_prefactor(const VertexEngine& eng, const VertexOp& op1, const VertexOp& op2) {
    const FockSpace& fs = eng.space();
    const auto L1 = op1.lattice(), L2 = op2.lattice();
    OpePrefactor p;
    const int z12 = static_cast<int>(fs.pair1(L1, L2));
    p.scalar = eng.cocycle().eval(L1, L2) * op1.pre.monomial_pow(z12);
    if (op1.kappa) p.scalar *= rs_mono(0, 0, eng.kappa_exponent(L1, L2));
    // ann1(n) = sigma1 alpha1^n / n, cre2(n) = tau2 beta2^n / n
    const int sigma1 = op1.sign > 0 ? -1 : 1;
    RSLaurent alpha1 = op1.pre.monomial_inverse();
    if (op1.sign > 0) alpha1 *= rs_mono(-op1.a2, -op1.b2);
    const int tau2 = op2.sign > 0 ? 1 : -1;
    RSLaurent beta2 = op2.pre;
    if (op2.sign < 0) beta2 *= rs_mono(op2.a2, op2.b2);
    // <g1, g2>^{(1)}: sum over the level-one pairing of the underlying weights
    RSLaurent pair;
    for (int j = 0; j < fs.rank(); ++j) {
        if (op2.g[j] == 0 || !fs.is_allowed(j)) continue;
        pair += fs.level_pairing(op1.g, j, 1).scaled(CycScalar(long(op2.g[j])));
    }
    int esum = 0;
    for (const auto& [e, c] : pair.terms()) {
        if (!c.is_rational() || c.rational().get_den() != 1)
            throw std::domain_error("derived prefactor needs integral pairing coefficients");
        const int coef = static_cast<int>(c.rational().get_num().get_si());
        const int ek = -sigma1 * tau2 * coef;
        p.factors.push_back({alpha1 * beta2 * RSLaurent::monomial(e), ek});
        esum += ek;
    }
    p.zpow = z12 - esum;
    return p;
}

namespace {

using Coeffs = std::map<std::pair<int, int>, FockVector>;

// Polynomial prod (z - mu w)^{e}, e >= 0, as (z-exp, w-exp) -> coefficient.
std::map<std::pair<int, int>, RSLaurent> linear_product(const std::vector<std::pair<RSLaurent, int>>& fs) {
    std::map<std::pair<int, int>, RSLaurent> poly{{{0, 0}, RSLaurent(1)}};
    for (const auto& [mu, e] : fs)
        for (int t = 0; t < e; ++t) {
            std::map<std::pair<int, int>, RSLaurent> next;
            for (const auto& [ex, c] : poly) {
                next[{ex.first + 1, ex.second}] += c;
                next[{ex.first, ex.second + 1}] -= c * mu;
            }
            poly = std::move(next);
        }
    return poly;
}

// Product restricted to exponents in [lo, hi] x [lo, hi].
Coeffs multiply(const Coeffs& f, const std::map<std::pair<int, int>, RSLaurent>& poly, int lo, int hi) {
    Coeffs out;
    for (const auto& [ex, v] : f)
        for (const auto& [t, c] : poly) {
            const int P = ex.first + t.first, Q = ex.second + t.second;
            if (P > hi || Q > hi || P < lo || Q < lo || c.is_zero()) continue;
            out[{P, Q}].add_scaled(v, c);
        }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

// Candidate monomial lambda with f = lambda * g, from the leading terms; callers verify it.
RSLaurent leading_ratio(const RSLaurent& f, const RSLaurent& g) {
    RSLaurent lead_f = RSLaurent::monomial(f.terms().front().first, f.terms().front().second);
    RSLaurent lead_g = RSLaurent::monomial(g.terms().front().first, g.terms().front().second);
    return lead_f * lead_g.monomial_inverse();
}

std::string key_str(const FockKey& k) {
    std::ostringstream os;
    os << "[";
    for (const auto& [n, i] : k.mono) os << "a_{-" << n << "}(g" << i << ")";
    os << "] e^(";
    for (size_t i = 0; i < k.beta.size(); ++i) os << (i ? "," : "") << k.beta[i];
    os << ")";
    return os.str();
}

}  // namespace

OpeReport ope_compare(const VertexEngine& eng, const VertexOp& op1, const VertexOp& op2, const OpePrefactor& pref,
                      const TruncationParams& tr) {
    const FockSpace& fs = eng.space();
    OpeReport rep;
    rep.lhs = op1.describe() + " " + op2.describe();
    rep.rhs = ":" + op1.describe() + " " + op2.describe() + ":";
    rep.prefactor = pref.str();
    rep.window = tr.to_json();

    std::vector<std::pair<RSLaurent, int>> neg, pos;
    for (const auto& [mu, e] : pref.factors) {
        if (e < 0) neg.push_back({mu, -e});
        if (e > 0) pos.push_back({mu, e});
    }
    const auto poly_l = linear_product(neg);
    const auto poly_r = linear_product(pos);
    // coefficients z^P w^Q with lo <= P, Q <= top, i.e. modes in [-modes, modes]
    const int top = tr.modes - 1, lo = -tr.modes - 1;
    int clear = 0;
    for (const auto& [mu, e] : neg) clear += e;
    const int low = lo - clear;
    std::optional<RSLaurent> ratio;
    bool ratio_ok = true;

    for (const FockKey& k : fs.basis_upto(tr.degree, tr.ball)) {
        const int d = fs.degree(k);
        // X1(z) X2(w) on k, all z^P w^Q with P, Q <= top
        Coeffs lhs;
        for (const auto& [Q, mid] : eng.series(op2, k, d + top + 1)) {
            if (Q < low) continue;
            if (Q > top) break;
            for (const auto& [k2, c2] : mid.terms()) {
                for (const auto& [P, v] : eng.series(op1, k2, fs.degree(k2) + top + 1)) {
                    if (P > top) break;
                    if (P >= low) lhs[{P, Q}].add_scaled(v, c2);
                }
            }
        }
        std::erase_if(lhs, [](const auto& kv) { return kv.second.is_zero(); });
        const Coeffs L = multiply(lhs, poly_l, lo, top);

        Coeffs nord = eng.normal_ordered(op1, op2, k, top - pref.zpow, top);
        Coeffs shifted;
        for (auto& [ex, v] : nord) shifted[{ex.first + pref.zpow, ex.second}] = v.scaled(pref.scalar);
        const Coeffs R = multiply(shifted, poly_r, lo, top);

        std::map<std::pair<int, int>, bool> seen;
        for (const auto& [ex, v] : L) seen[ex] = true;
        for (const auto& [ex, v] : R) seen[ex] = true;
        for (const auto& [ex, unused] : seen) {
            (void)unused;
            ++rep.checked;
            auto il = L.find(ex);
            auto ir = R.find(ex);
            FockVector lv = il == L.end() ? FockVector() : il->second;
            FockVector rv = ir == R.end() ? FockVector() : ir->second;
            if (lv != rv && rep.pass) {
                rep.pass = false;
                std::ostringstream os;
                os << "on " << key_str(k) << " at z^" << ex.first << " w^" << ex.second << ": lhs has "
                   << lv.size() << " terms, rhs has " << rv.size() << " terms";
                const FockVector diff = lv - rv;
                for (const auto& [kk, cc] : diff.terms()) {
                    os << "; first difference " << key_str(kk) << " coefficient " << rs_str(cc);
                    break;
                }
                rep.witness = os.str();
            }
            // lhs = lambda * rhs with one constant lambda across the whole window
            if (!ratio_ok || (lv.is_zero() && rv.is_zero())) continue;
            if (lv.is_zero() || rv.is_zero()) {
                ratio_ok = false;
                continue;
            }
            if (!ratio) {
                const auto& [kk, cr] = *rv.terms().begin();
                auto itl = lv.terms().find(kk);
                if (itl == lv.terms().end()) {
                    ratio_ok = false;
                    continue;
                }
                ratio = leading_ratio(itl->second, cr);
            }
            if (lv != rv.scaled(*ratio)) ratio_ok = false;
        }
    }
    if (!rep.pass && ratio_ok && ratio) rep.scalar_ratio = rs_str(*ratio);
    return rep;
}

std::vector<OpeReport> ope_check(const VertexEngine& eng, int i, int j, const TruncationParams& tr, OpeMode mode,
                                 int a2, int b2) {
    const FockSpace& fs = eng.space();
    const int n = fs.rank();
    const bool kap = eng.skew().has_value();
    const long pairing = fs.lattice_form()[i][j];
    const RSLaurent sb = rs_mono(0, -b2), ra = rs_mono(-a2, 0);
    std::vector<OpeReport> out;
    for (int disp = 1; disp <= 8; ++disp) {
        const bool neg = disp > 4;
        const int base = (disp - 1) % 4 + 1;
        const int pa = neg ? -a2 : a2, pb = neg ? -b2 : b2;
        const int s1 = (base == 1 || base == 3) ? 1 : -1;
        const int s2 = (base == 1 || base == 4) ? 1 : -1;
        VertexOp op1 = VertexOp::make(s1, n, i, pa, pb, s1 > 0 ? sb : ra, neg, kap);
        VertexOp op2 = VertexOp::make(s2, n, j, pa, pb, s2 > 0 ? sb : ra, neg, kap);

        OpePrefactor pref;
        OpeReport rep;
        bool skip = false;
        std::string why;
        if (mode == OpeMode::derived) {
            pref = derived_prefactor(eng, op1, op2);
        } else {
            RSLaurent mu;
            switch (base) {
                case 1: mu = rs_mono(-a2, -b2); break;
                case 2: mu = rs_mono(a2, b2); break;
                case 3: mu = rs_mono(-a2, b2); break;
                default: mu = rs_mono(a2, -b2); break;
            }
            const RSLaurent e = eng.cocycle().basis(i, j);
            pref.scalar = (base == 1 || base == 3) ? e : e.monomial_inverse();
            if (pairing == 0) {
            } else if (pairing == -1) {
                const int ex = (base <= 2) ? -1 : 1;
                RSLaurent m = mu;
                if (kap) {
                    const int bij = (*eng.skew())[i][j];
                    pref.scalar *= rs_mono(0, 0, -bij);
                    m *= rs_mono(0, 0, 2 * bij);
                }
                pref.factors.push_back({m, ex});
            } else if (pairing == 2) {
                pref.factors.push_back({mu * rs_mono(1, -1), 1});
                pref.factors.push_back({mu * rs_mono(-1, 1), 1});
            } else {
                skip = true;
                why = "pairing " + std::to_string(pairing) + " is not one of 0, -1, 2";
            }
        }
        if (skip) {
            rep.skipped = true;
            rep.skip_reason = why;
            rep.lhs = op1.describe() + " " + op2.describe();
            rep.window = tr.to_json();
        } else {
            rep = ope_compare(eng, op1, op2, pref, tr);
        }
        rep.anchor = kap ? "vertex_ope_kappa" : "vertex_ope";
        rep.group = fs.table()->name;
        rep.i = i;
        rep.j = j;
        rep.pairing = static_cast<int>(pairing);
        rep.kappa = kap;
        rep.display = disp;
        rep.mode = mode == OpeMode::literal ? "literal" : "derived";
        out.push_back(std::move(rep));
    }
    return out;
}

nlohmann::json AdjointReport::to_json() const {
    nlohmann::json j{{"pass", pass}, {"checked", checked}};
    if (!witness.empty()) j["witness"] = witness;
    if (!uniform_ratio.empty()) j["uniform_ratio"] = uniform_ratio;
    return j;
}

AdjointReport adjointness_check(const VertexEngine& eng, int i, int a2, int b2, const TruncationParams& tr) {
    const FockSpace& fs = eng.space();
    AdjointReport rep;
    VertexOp plus = VertexOp::make(1, fs.rank(), i, a2, b2);
    VertexOp minus = VertexOp::make(-1, fs.rank(), i, a2, b2);
    const auto keys = fs.basis_upto(tr.degree, tr.ball);
    std::optional<RSLaurent> ratio;
    bool ratio_ok = true;
    for (int n = -tr.modes; n <= tr.modes; ++n) {
        for (const FockKey& u : keys) {
            const int du = fs.degree(u);
            FockVector xu = eng.mode(plus, n, FockVector::basis(u));
            for (const FockKey& v : keys) {
                if (fs.degree(v) != du - n) continue;
                RSLaurent left = fs.form(xu, FockVector::basis(v));
                RSLaurent right = fs.form(FockVector::basis(u), eng.mode(minus, -n, FockVector::basis(v)));
                ++rep.checked;
                if (left != right && rep.pass) {
                    rep.pass = false;
                    rep.witness = "n=" + std::to_string(n) + " u=" + key_str(u) + " v=" + key_str(v) +
                                  ": " + rs_str(left) + " vs " + rs_str(right);
                }
                if (left.is_zero() != right.is_zero()) {
                    ratio_ok = false;
                } else if (!left.is_zero() && ratio_ok) {
                    if (!ratio) ratio = leading_ratio(right, left);
                    if (ratio && left * *ratio != right) ratio_ok = false;
                }
            }
        }
    }
    if (!rep.pass && ratio_ok && ratio) rep.uniform_ratio = rs_str(*ratio);
    return rep;
}

}  // namespace qmckay
