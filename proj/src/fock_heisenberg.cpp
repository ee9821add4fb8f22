#include "qmckay/fock_heisenberg.hpp"

#include <algorithm>
#include <cstdlib>

namespace qmckay {

int mono_degree(const std::vector<std::pair<int, int>>& mono) {
    int d = 0;
    for (const auto& f : mono) d += f.first;
    return d;
}

std::vector<std::pair<int, int>> mono_mul(const std::vector<std::pair<int, int>>& a,
                                          const std::vector<std::pair<int, int>>& b) {
    std::vector<std::pair<int, int>> out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

FockVector FockVector::basis(FockKey k, const RSLaurent& c) {
    FockVector v;
    v.add(k, c);
    return v;
}

FockVector FockVector::vacuum(int rank) { return basis(FockKey{{}, std::vector<int>(rank, 0)}); }

void FockVector::add(const FockKey& k, const RSLaurent& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.try_emplace(k, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

FockVector& FockVector::operator+=(const FockVector& o) {
    for (const auto& [k, c] : o.t_) add(k, c);
    return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
    for (const auto& [k, c] : o.t_) add(k, -c);
    return *this;
}

FockVector FockVector::scaled(const RSLaurent& c) const {
    FockVector out;
    if (c.is_zero()) return out;
    for (const auto& [k, x] : t_) out.add(k, x * c);
    return out;
}

void FockVector::add_scaled(const FockVector& o, const RSLaurent& c) {
    if (c.is_zero()) return;
    const bool one = c == RSLaurent(1);
    for (const auto& [k, x] : o.t_) {
        if (one) add(k, x);
        else add(k, x * c);
    }
}

FockVector FockVector::times_mono(const std::vector<std::pair<int, int>>& m, const RSLaurent& c) const {
    FockVector out;
    if (c.is_zero()) return out;
    for (const auto& [k, x] : t_) out.add(FockKey{mono_mul(k.mono, m), k.beta}, x * c);
    return out;
}

nlohmann::json FockVector::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [k, c] : t_) {
        nlohmann::json rho = nlohmann::json::object();
        std::map<int, std::vector<int>> parts;
        for (const auto& [n, i] : k.mono) parts[i].push_back(n);
        for (auto& [i, p] : parts) {
            std::sort(p.begin(), p.end(), std::greater<int>());
            rho[std::to_string(i)] = p;
        }
        arr.push_back({{"rho", rho}, {"beta", k.beta}, {"coeff", rs_str(c)}});
    }
    return arr;
}

FockVector fock_mul(const FockVector& a, const FockVector& b) {
    FockVector out;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            std::vector<int> beta = ka.beta;
            for (size_t i = 0; i < beta.size(); ++i) beta[i] += kb.beta[i];
            out.add(FockKey{mono_mul(ka.mono, kb.mono), std::move(beta)}, ca * cb);
        }
    return out;
}

FockSpace::FockSpace(TablePtr t, WeightFunction xi, std::optional<std::vector<int>> allowed)
    : t_(std::move(t)), xi_(std::move(xi)) {
    if (xi_.table()->name != t_->name) throw table_error("FockSpace: weight on a different table");
    a_ = quantum_cartan(t_, xi_);
    a1_ = cartan_at_one(a_);
    if (allowed) {
        allowed_ = *allowed;
        std::sort(allowed_.begin(), allowed_.end());
    } else {
        for (int i = 0; i < rank(); ++i) allowed_.push_back(i);
    }
}

bool FockSpace::is_allowed(int i) const { return std::binary_search(allowed_.begin(), allowed_.end(), i); }

long FockSpace::pair1(const std::vector<int>& a, const std::vector<int>& b) const {
    long s = 0;
    for (int i = 0; i < rank(); ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < rank(); ++j) s += a[i] * a1_[i][j] * b[j];
    }
    return s;
}

const RSLaurent& FockSpace::level_pairing(int i, int j, int n) const {
    auto key = std::make_tuple(i, j, n);
    auto it = level_cache_.find(key);
    if (it != level_cache_.end()) return it->second;
    return level_cache_.emplace(key, rs_substitute(a_(i, j), n)).first->second;
}

RSLaurent FockSpace::level_pairing(const std::vector<int>& g, int j, int n) const {
    RSLaurent s;
    for (int i = 0; i < rank(); ++i)
        if (g[i] != 0) s += level_pairing(i, j, n).scaled(CycScalar(g[i]));
    return s;
}

int FockSpace::lattice_degree(const std::vector<int>& beta) const {
    long n = pair1(beta, beta);
    if (n % 2 != 0) throw table_error("odd lattice norm");
    return static_cast<int>(n / 2);
}

int FockSpace::degree(const FockKey& k) const { return mono_degree(k.mono) + lattice_degree(k.beta); }

namespace {

void monos_rec(int left, int min_n, int min_i, const std::vector<int>& allowed,
               std::vector<std::pair<int, int>>& cur, std::vector<std::vector<std::pair<int, int>>>& out) {
    if (left == 0) {
        out.push_back(cur);
        return;
    }
    for (int n = min_n; n <= left; ++n)
        for (int i : allowed) {
            if (n == min_n && i < min_i) continue;
            cur.push_back({n, i});
            monos_rec(left - n, n, i, allowed, cur, out);
            cur.pop_back();
        }
}

void lattice_rec(int idx, int left, const std::vector<int>& coords, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) {
    if (idx == static_cast<int>(coords.size())) {
        out.push_back(cur);
        return;
    }
    for (int x = -left; x <= left; ++x) {
        cur[coords[idx]] = x;
        lattice_rec(idx + 1, left - std::abs(x), coords, cur, out);
    }
    cur[coords[idx]] = 0;
}

}  // namespace

std::vector<FockKey> FockSpace::basis(int d, int ball) const {
    std::vector<FockKey> out;
    if (d < 0) return out;
    std::vector<std::vector<int>> lattice;
    std::vector<int> cur(rank(), 0);
    lattice_rec(0, ball, allowed_, cur, lattice);
    std::sort(lattice.begin(), lattice.end());
    std::vector<std::vector<std::vector<std::pair<int, int>>>> monos(d + 1);
    for (int m = 0; m <= d; ++m) {
        std::vector<std::pair<int, int>> c;
        monos_rec(m, 1, 0, allowed_, c, monos[m]);
    }
    for (const auto& beta : lattice) {
        int ld = lattice_degree(beta);
        if (ld > d) continue;
        for (const auto& m : monos[d - ld]) out.push_back(FockKey{m, beta});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<FockKey> FockSpace::basis_upto(int d, int ball) const {
    std::vector<FockKey> out;
    for (int k = 0; k <= d; ++k) {
        auto b = basis(k, ball);
        out.insert(out.end(), b.begin(), b.end());
    }
    return out;
}

FockVector FockSpace::heis_apply(int m, int i, const FockVector& v) const {
    if (m == 0) throw ring_error("heis_apply: mode 0 is not a Heisenberg generator");
    if (m < 0) return v.times_mono({{-m, i}}, RSLaurent(1));
    FockVector out;
    for (const auto& [k, c] : v.terms()) {
        const auto& mono = k.mono;
        for (size_t p = 0; p < mono.size(); ++p) {
            if (mono[p].first != m) continue;
            if (p > 0 && mono[p - 1] == mono[p]) continue;
            size_t q = p;
            while (q < mono.size() && mono[q] == mono[p]) ++q;
            RSLaurent coef = level_pairing(i, mono[p].second, m).scaled(CycScalar(long(m) * long(q - p)));
            if (coef.is_zero()) continue;
            FockKey nk{mono, k.beta};
            nk.mono.erase(nk.mono.begin() + p);
            out.add(nk, c * coef);
        }
    }
    return out;
}

FockVector FockSpace::heis_apply(int m, const ClassFunctionRS& f, const FockVector& v) const {
    FockVector out;
    for (int i = 0; i < rank(); ++i) {
        if (f.coeffs[i].is_zero()) continue;
        out += heis_apply(m, i, v).scaled(rs_substitute(f.coeffs[i], m));
    }
    return out;
}

FockVector FockSpace::heis_apply_class(int m, int c, const FockVector& v) const {
    FockVector out;
    int ci = t_->classes[c].inverse;
    for (int i = 0; i < rank(); ++i) {
        const CycScalar& g = t_->chars[i][ci];
        if (g.is_zero()) continue;
        out += heis_apply(m, i, v).scaled(RSLaurent(g));
    }
    return out;
}

RSLaurent FockSpace::form_keys(const FockKey& x, const FockKey& y) const {
    if (x.beta != y.beta) return RSLaurent();
    if (x.mono.size() != y.mono.size() && x.mono.empty() != y.mono.empty()) return RSLaurent();
    if (mono_degree(x.mono) != mono_degree(y.mono)) return RSLaurent();
    if (x.mono.empty()) return RSLaurent(1);
    auto key = std::make_pair(x, y);
    auto it = form_cache_.find(key);
    if (it != form_cache_.end()) return it->second;
    auto [n, i] = x.mono.front();
    FockKey xr{std::vector<std::pair<int, int>>(x.mono.begin() + 1, x.mono.end()), x.beta};
    RSLaurent s;
    const auto& ym = y.mono;
    for (size_t p = 0; p < ym.size(); ++p) {
        if (ym[p].first != n) continue;
        if (p > 0 && ym[p - 1] == ym[p]) continue;
        size_t q = p;
        while (q < ym.size() && ym[q] == ym[p]) ++q;
        RSLaurent coef = level_pairing(i, ym[p].second, n).scaled(CycScalar(long(n) * long(q - p)));
        if (coef.is_zero()) continue;
        FockKey yr{ym, y.beta};
        yr.mono.erase(yr.mono.begin() + p);
        RSLaurent sub = form_keys(xr, yr);
        if (!sub.is_zero()) s += coef * sub;
    }
    form_cache_.emplace(key, s);
    return s;
}

RSLaurent FockSpace::form(const FockVector& u, const FockVector& v) const {
    RSLaurent s;
    for (const auto& [x, cx] : u.terms())
        for (const auto& [y, cy] : v.terms()) {
            RSLaurent p = form_keys(x, y);
            if (!p.is_zero()) s += cx * rs_inv(cy) * p;
        }
    return s;
}

namespace {

// Expands each factor a_{-n}(index) through a linear substitution into another alphabet.
template <class Sub>
FockVector substitute_alphabet(const FockVector& v, Sub&& sub) {
    FockVector out;
    for (const auto& [k, c] : v.terms()) {
        FockVector acc = FockVector::basis(FockKey{{}, k.beta}, c);
        for (const auto& [n, idx] : k.mono) {
            FockVector next;
            for (const auto& [j, coef] : sub(n, idx)) next += acc.times_mono({{n, j}}, RSLaurent(coef));
            acc = std::move(next);
        }
        out += acc;
    }
    return out;
}

}  // namespace

FockVector FockSpace::class_to_char(const FockVector& v) const {
    return substitute_alphabet(v, [&](int, int c) {
        std::vector<std::pair<int, CycScalar>> s;
        int ci = t_->classes[c].inverse;
        for (int i = 0; i < rank(); ++i)
            if (!t_->chars[i][ci].is_zero()) s.push_back({i, t_->chars[i][ci]});
        return s;
    });
}

FockVector FockSpace::char_to_class(const FockVector& v) const {
    return substitute_alphabet(v, [&](int, int i) {
        std::vector<std::pair<int, CycScalar>> s;
        for (int c = 0; c < t_->num_classes(); ++c)
            if (!t_->chars[i][c].is_zero())
                s.push_back({c, t_->chars[i][c] * CycScalar(mpq_class(1, t_->classes[c].centralizer))});
        return s;
    });
}

nlohmann::json HeisReport::to_json() const {
    nlohmann::json j = {{"anchor", anchor}, {"pass", pass}, {"checked", checked}};
    if (!witness.empty()) j["witness"] = witness;
    return j;
}

namespace {

std::string key_str(const FockKey& k) {
    std::string s = "[";
    for (size_t p = 0; p < k.mono.size(); ++p)
        s += (p ? " " : "") + std::string("a_-") + std::to_string(k.mono[p].first) + "(" +
             std::to_string(k.mono[p].second) + ")";
    s += "] e^(";
    for (size_t p = 0; p < k.beta.size(); ++p) s += (p ? "," : "") + std::to_string(k.beta[p]);
    return s + ")";
}

}  // namespace

HeisReport heis_commutator_check(const FockSpace& f, int m, int n, int i, int j, int D) {
    HeisReport rep;
    rep.anchor = "heisenberg_char: [a_m(gamma), a_n(gamma')] = m delta_{m,-n} <gamma,gamma'>^{r^m,s^m}";
    RSLaurent expected = (m + n == 0) ? f.level_pairing(i, j, m).scaled(CycScalar(m)) : RSLaurent();
    for (const auto& key : f.basis_upto(D)) {
        auto v = FockVector::basis(key);
        auto lhs = f.heis_apply(m, i, f.heis_apply(n, j, v)) - f.heis_apply(n, j, f.heis_apply(m, i, v));
        ++rep.checked;
        if (lhs != v.scaled(expected)) {
            rep.pass = false;
            rep.witness = "m=" + std::to_string(m) + " n=" + std::to_string(n) + " i=" + std::to_string(i) +
                          " j=" + std::to_string(j) + " on " + key_str(key);
            return rep;
        }
    }
    return rep;
}

HeisReport heis_class_commutator_check(const FockSpace& f, int m, int n, int c, int cp, int D) {
    HeisReport rep;
    rep.anchor = "heisenberg_class: [a_m(c^{-1}), a_n(c')] = m delta_{m,-n} delta_{c,c'} zeta_c xi_{r^m,s^m}(c)";
    const auto& t = *f.table();
    RSLaurent expected;
    if (m + n == 0 && c == cp)
        expected = f.weight().base.eval_twisted(c, m).scaled(CycScalar(long(m) * t.classes[c].centralizer));
    int cinv = t.classes[c].inverse;
    for (const auto& key : f.basis_upto(D)) {
        auto v = FockVector::basis(key);
        auto lhs = f.heis_apply_class(m, cinv, f.heis_apply_class(n, cp, v)) -
                   f.heis_apply_class(n, cp, f.heis_apply_class(m, cinv, v));
        ++rep.checked;
        if (lhs != v.scaled(expected)) {
            rep.pass = false;
            rep.witness = "class m=" + std::to_string(m) + " n=" + std::to_string(n) + " c=" + t.classes[c].id +
                          " c'=" + t.classes[cp].id + " on " + key_str(key);
            return rep;
        }
    }
    return rep;
}

HeisReport heis_suite(const FockSpace& f, int M, int D, bool class_basis) {
    HeisReport all;
    all.anchor = "heisenberg: all generator pairs";
    std::vector<int> modes;
    for (int m = -M; m <= M; ++m)
        if (m != 0) modes.push_back(m);
    auto merge = [&](const HeisReport& r) {
        all.checked += r.checked;
        if (!r.pass && all.pass) {
            all.pass = false;
            all.witness = r.witness;
        }
    };
    for (int i : f.allowed())
        for (int j : f.allowed())
            for (int m : modes)
                for (int n : modes) merge(heis_commutator_check(f, m, n, i, j, D));
    if (class_basis && static_cast<int>(f.allowed().size()) == f.rank()) {
        int k = f.table()->num_classes();
        for (int c = 0; c < k; ++c)
            for (int cp = 0; cp < k; ++cp)
                for (int m : modes)
                    for (int n : modes) merge(heis_class_commutator_check(f, m, n, c, cp, D));
    }
    return all;
}

}  // namespace qmckay
