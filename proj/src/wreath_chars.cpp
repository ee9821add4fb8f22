#include "qmckay/wreath_chars.hpp"

#include <algorithm>
#include <mutex>

namespace qmckay {

namespace {

void partitions_rec(int n, int max, Partition& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, max); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}

// Reverse-lex: larger partitions first, the empty partition last.
bool part_before(const Partition& a, const Partition& b) {
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

std::vector<Partition> partitions(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    Partition cur;
    partitions_rec(n, n, cur, out);
    return out;
}

int partition_size(const Partition& lambda) {
    int s = 0;
    for (int p : lambda) s += p;
    return s;
}

mpz_class z_lambda(const Partition& lambda) {
    mpz_class z = 1;
    size_t i = 0;
    while (i < lambda.size()) {
        size_t j = i;
        while (j < lambda.size() && lambda[j] == lambda[i]) ++j;
        long m = static_cast<long>(j - i);
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), m);
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), lambda[i], m);
        z *= f * p;
        i = j;
    }
    return z;
}

PartValuedFn PartValuedFn::empty(TablePtr t, bool char_indexed) {
    PartValuedFn f;
    size_t k = char_indexed ? t->num_chars() : t->num_classes();
    f.table = std::move(t);
    f.char_indexed = char_indexed;
    f.parts.assign(k, {});
    return f;
}

int PartValuedFn::weight() const {
    int w = 0;
    for (const auto& p : parts) w += partition_size(p);
    return w;
}

PartValuedFn PartValuedFn::bar() const {
    if (char_indexed) throw table_error("bar: defined for class-indexed types only");
    PartValuedFn f = *this;
    for (size_t c = 0; c < parts.size(); ++c) f.parts[table->classes[c].inverse] = parts[c];
    return f;
}

int PartValuedFn::multiplicity(int c, int i) const {
    return static_cast<int>(std::count(parts[c].begin(), parts[c].end(), i));
}

PartValuedFn PartValuedFn::operator+(const PartValuedFn& o) const {
    PartValuedFn f = *this;
    for (size_t c = 0; c < parts.size(); ++c) {
        f.parts[c].insert(f.parts[c].end(), o.parts[c].begin(), o.parts[c].end());
        std::sort(f.parts[c].begin(), f.parts[c].end(), std::greater<int>());
    }
    return f;
}

nlohmann::json PartValuedFn::to_json() const {
    nlohmann::json j = nlohmann::json::object();
    for (size_t c = 0; c < parts.size(); ++c) {
        if (parts[c].empty()) continue;
        std::string key = char_indexed ? std::to_string(c) : table->classes[c].id;
        j[key] = parts[c];
    }
    return j;
}

bool operator<(const PartValuedFn& a, const PartValuedFn& b) {
    for (size_t c = 0; c < a.parts.size() && c < b.parts.size(); ++c) {
        if (a.parts[c] == b.parts[c]) continue;
        return part_before(a.parts[c], b.parts[c]);
    }
    return a.parts.size() < b.parts.size();
}

std::vector<PartValuedFn> enumerate_types(const TablePtr& t, int n) {
    std::vector<PartValuedFn> out;
    const int k = t->num_classes();
    std::vector<std::vector<Partition>> by_size(n + 1);
    for (int m = 0; m <= n; ++m) by_size[m] = partitions(m);
    PartValuedFn cur = PartValuedFn::empty(t);
    // Weight assigned to class c ranges from the remaining weight down to 0.
    auto rec = [&](auto&& self, int c, int left) -> void {
        if (c == k - 1) {
            for (const auto& p : by_size[left]) {
                cur.parts[c] = p;
                out.push_back(cur);
            }
            cur.parts[c].clear();
            return;
        }
        for (int m = left; m >= 0; --m)
            for (const auto& p : by_size[m]) {
                cur.parts[c] = p;
                self(self, c + 1, left - m);
            }
        cur.parts[c].clear();
    };
    if (k > 0) rec(rec, 0, n);
    std::sort(out.begin(), out.end());
    return out;
}

mpz_class centralizer_order(const PartValuedFn& rho) {
    if (rho.char_indexed) throw table_error("centralizer_order: type must be class-indexed");
    mpz_class z = 1;
    for (size_t c = 0; c < rho.parts.size(); ++c) {
        if (rho.parts[c].empty()) continue;
        mpz_class zc;
        mpz_ui_pow_ui(zc.get_mpz_t(), rho.table->classes[c].centralizer, rho.parts[c].size());
        z *= z_lambda(rho.parts[c]) * zc;
    }
    return z;
}

int TypeSpace::find(const PartValuedFn& rho) const {
    auto it = index.find(rho);
    if (it == index.end()) throw table_error("type not of weight " + std::to_string(n));
    return it->second;
}

std::shared_ptr<const TypeSpace> type_space(const TablePtr& t, int n) {
    static std::mutex mu;
    static std::map<std::pair<const CharacterTable*, int>, std::shared_ptr<const TypeSpace>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(t.get(), n);
    auto it = cache.find(key);
    if (it != cache.end() && it->second->table == t) return it->second;
    auto s = std::make_shared<TypeSpace>();
    s->table = t;
    s->n = n;
    s->types = enumerate_types(t, n);
    for (size_t i = 0; i < s->types.size(); ++i) {
        s->index.emplace(s->types[i], static_cast<int>(i));
        s->z.push_back(centralizer_order(s->types[i]));
    }
    cache[key] = s;
    return s;
}

namespace {

RSLaurent twist_factor(int n, int k, int l) { return rs_mono(2 * n * k, 2 * n * l); }

RSLaurent product_over_cycles(const ClassFunctionRS& f, const PartValuedFn& rho, bool negate) {
    RSLaurent acc(1);
    for (size_t c = 0; c < rho.parts.size(); ++c)
        for (int i : rho.parts[c]) {
            RSLaurent v = f.eval_twisted(static_cast<int>(c), i);
            acc *= negate ? -v : v;
        }
    return acc;
}

}  // namespace

RSLaurent eta_value(const ClassFunctionRS& gamma, int k, int l, const PartValuedFn& rho) {
    return product_over_cycles(gamma, rho, false) * twist_factor(rho.weight(), k, l);
}

RSLaurent eps_value(const ClassFunctionRS& gamma, int k, int l, const PartValuedFn& rho) {
    int n = rho.weight();
    RSLaurent v = product_over_cycles(gamma, rho, true) * twist_factor(n, k, l);
    return n % 2 ? -v : v;
}

RSLaurent eta_weight(const WeightFunction& xi, const PartValuedFn& rho) {
    return product_over_cycles(xi.base, rho, false);
}

WreathClassFunction WreathClassFunction::zero(const TablePtr& t, int n) {
    WreathClassFunction f;
    f.space = type_space(t, n);
    f.values.assign(f.space->types.size(), RSLaurent());
    return f;
}

WreathClassFunction WreathClassFunction::operator+(const WreathClassFunction& o) const {
    if (space != o.space) throw table_error("wreath class functions on different spaces");
    WreathClassFunction f = *this;
    for (size_t i = 0; i < values.size(); ++i) f.values[i] += o.values[i];
    return f;
}

WreathClassFunction WreathClassFunction::scaled(const RSLaurent& c) const {
    WreathClassFunction f = *this;
    for (auto& v : f.values) v *= c;
    return f;
}

WreathClassFunction eta_fn(const ClassFunctionRS& gamma, int k, int l, int n) {
    auto f = WreathClassFunction::zero(gamma.table, n);
    for (size_t i = 0; i < f.values.size(); ++i) f.values[i] = eta_value(gamma, k, l, f.space->types[i]);
    return f;
}

WreathClassFunction eps_fn(const ClassFunctionRS& gamma, int k, int l, int n) {
    auto f = WreathClassFunction::zero(gamma.table, n);
    for (size_t i = 0; i < f.values.size(); ++i) f.values[i] = eps_value(gamma, k, l, f.space->types[i]);
    return f;
}

namespace {

PartValuedFn cycle_type(const TablePtr& t, int c, int n) {
    auto rho = PartValuedFn::empty(t);
    rho.parts[c] = {n};
    return rho;
}

}  // namespace

WreathClassFunction sigma_class(const TablePtr& t, int c, int n, int k, int l) {
    if (n <= 0) throw table_error("sigma: n must be positive");
    auto f = WreathClassFunction::zero(t, n);
    f.values[f.space->find(cycle_type(t, c, n))] =
        twist_factor(-n, k, l).scaled(CycScalar(mpq_class(n * t->classes[c].centralizer)));
    return f;
}

WreathClassFunction sigma_char(const TablePtr& t, int i, int n, int k, int l) {
    if (n <= 0) throw table_error("sigma: n must be positive");
    auto f = WreathClassFunction::zero(t, n);
    for (int c = 0; c < t->num_classes(); ++c)
        f.values[f.space->find(cycle_type(t, c, n))] =
            twist_factor(-n, k, l).scaled(t->chars[i][c] * CycScalar(n));
    return f;
}

WreathClassFunction sigma_rho(const PartValuedFn& rho, int k, int l) {
    int n = rho.weight();
    auto f = WreathClassFunction::zero(rho.table, n);
    int idx = f.space->find(rho);
    f.values[idx] = twist_factor(-n, k, l).scaled(CycScalar(mpq_class(f.space->z[idx])));
    return f;
}

RSLaurent wreath_form(const WreathClassFunction& f, const WreathClassFunction& g, const WeightFunction& xi) {
    if (f.space != g.space) throw table_error("wreath_form: weight or table mismatch");
    if (xi.table()->name != f.table()->name) throw table_error("wreath_form: weight on a different table");
    RSLaurent s;
    const auto& sp = *f.space;
    for (size_t i = 0; i < sp.types.size(); ++i) {
        if (f.values[i].is_zero()) continue;
        const RSLaurent& gb = g.values[sp.find(sp.types[i].bar())];
        if (gb.is_zero()) continue;
        RSLaurent term = eta_weight(xi, sp.types[i]) * f.values[i] * rs_inv(gb);
        s += term.scaled(CycScalar(mpq_class(mpz_class(1), sp.z[i])));
    }
    return s;
}

}  // namespace qmckay
