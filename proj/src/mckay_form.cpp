#include "qmckay/mckay_form.hpp"

#include <cmath>
#include <optional>
#include <sstream>

namespace qmckay {

namespace {

void require_table(const TablePtr& a, const TablePtr& b) {
    if (!a || !b || (a != b && a->name != b->name)) throw table_error("table mismatch");
}

}  // namespace

RSLaurent weighted_form(const ClassFunctionRS& f, const ClassFunctionRS& g, const WeightFunction& xi) {
    require_table(f.table, g.table);
    require_table(f.table, xi.table());
    const auto& t = *f.table;
    ClassFunctionRS gi = g;
    for (auto& c : gi.coeffs) c = rs_inv(c);
    RSLaurent s;
    for (int c = 0; c < t.num_classes(); ++c) {
        RSLaurent term = xi.base.eval(c) * f.eval(c) * gi.eval(t.classes[c].inverse);
        s += term.scaled(CycScalar(mpq_class(1, t.classes[c].centralizer)));
    }
    return s;
}

WeightFunction make_weight(ClassFunctionRS base, std::string label) {
    WeightFunction w;
    w.self_dual = antipode(base) == base;
    w.base = std::move(base);
    w.label = std::move(label);
    return w;
}

WeightFunction trivial_weight(const TablePtr& t) {
    return make_weight(ClassFunctionRS::character(t, t->trivial), "trivial");
}

WeightFunction mckay_weight(const TablePtr& t) {
    if (!t->has_natural()) throw table_error("mckay_weight: table '" + t->name + "' has no natural character");
    ClassFunctionRS xi = ClassFunctionRS::character(t, t->trivial, rs_d());
    for (int i : t->natural) xi.coeffs[i] -= RSLaurent(1);
    return make_weight(std::move(xi), "mckay");
}

WeightFunction general_weight(const TablePtr& t, const ClassFunctionRS& pi) {
    CycScalar dim = CycScalar(0);
    for (int i = 0; i < t->num_chars(); ++i) {
        if (rs_has_kappa(pi.coeffs[i]) || !pi.coeffs[i].is_constant())
            throw ring_error("general_weight: pi must have constant coefficients");
        dim += pi.coeffs[i].constant_term() * t->chars[i][0];
    }
    if (!dim.is_rational() || dim.rational().get_den() != 1 || sgn(dim.rational()) <= 0)
        throw ring_error("general_weight: pi must have a positive integer dimension");
    long d = dim.rational().get_num().get_si();
    if (d % 2 != 0)
        throw ring_error("general_weight: (rs)^{-d/4} with odd d needs quarter-integer exponents");
    RSLaurent c = rs_quantum_number(static_cast<int>(d)) * rs_mono(static_cast<int>(-d / 2), static_cast<int>(-d / 2));
    ClassFunctionRS xi = ClassFunctionRS::character(t, t->trivial, c) - pi;
    return make_weight(std::move(xi), "general");
}

WeightFunction kappa_weight(const TablePtr& t, const RSLaurent& kappa) {
    if (!t->is_cyclic() || t->cyclic_order < 2)
        throw table_error("kappa_weight: requires a cyclic table of order >= 2");
    if (!kappa.is_monomial()) throw ring_error("kappa_weight: kappa must be a unit monomial");
    int n = t->cyclic_order;
    ClassFunctionRS xi = ClassFunctionRS::character(t, 0, rs_d());
    xi.coeffs[1] -= kappa;
    xi.coeffs[n - 1] -= kappa.monomial_inverse();
    return make_weight(std::move(xi), "kappa");
}

QuantumCartanMatrix quantum_cartan(const TablePtr& t, const WeightFunction& xi) {
    require_table(t, xi.table());
    int k = t->num_chars();
    std::vector<RSLaurent> xc(t->num_classes());
    for (int c = 0; c < t->num_classes(); ++c)
        xc[c] = xi.base.eval(c).scaled(CycScalar(mpq_class(1, t->classes[c].centralizer)));
    QuantumCartanMatrix a;
    a.table = t;
    a.weight_label = xi.label;
    a.entries.assign(k, std::vector<RSLaurent>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            RSLaurent s;
            for (int c = 0; c < t->num_classes(); ++c) {
                CycScalar v = t->chars[i][c] * t->chars[j][t->classes[c].inverse];
                if (!v.is_zero()) s += xc[c].scaled(v);
            }
            a.entries[i][j] = std::move(s);
        }
    return a;
}

std::vector<RSLaurent> tensor_multiplicities(const CharacterTable& t, const WeightFunction& xi, int i) {
    if (xi.table()->name != t.name) throw table_error("tensor_multiplicities: table mismatch");
    auto a = quantum_cartan(xi.table(), xi);
    return a.entries.at(i);
}

Matrix<RSLaurent> twisted_cartan(const QuantumCartanMatrix& a, int m) {
    Matrix<RSLaurent> out = a.entries;
    for (auto& row : out)
        for (auto& x : row) x = rs_substitute(x, m);
    return out;
}

Matrix<long> cartan_at_one(const QuantumCartanMatrix& a) {
    Matrix<long> out(a.size(), std::vector<long>(a.size()));
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) {
            CycScalar v = rs_eval(a(i, j), 1, 1, 1);
            if (!v.is_rational() || v.rational().get_den() != 1)
                throw ring_error("entry (" + std::to_string(i) + "," + std::to_string(j) + ") not an integer at r=s=1");
            out[i][j] = v.rational().get_num().get_si();
        }
    return out;
}

bool EigenReport::pass() const {
    for (const auto& e : entries)
        if (!e.pass) return false;
    return true;
}

EigenReport verify_eigenvectors(const TablePtr& t, const WeightFunction& xi) {
    auto a = quantum_cartan(t, xi);
    EigenReport rep;
    rep.group = t->name;
    int k = t->num_chars();
    for (int c = 0; c < t->num_classes(); ++c) {
        EigenEntry e;
        e.class_id = t->classes[c].id;
        e.eigenvalue = xi.base.eval(c);
        e.pass = true;
        for (int i = 0; i < k && e.pass; ++i) {
            RSLaurent lhs;
            for (int j = 0; j < k; ++j) lhs += a(i, j).scaled(t->chars[j][c]);
            e.pass = lhs == e.eigenvalue.scaled(t->chars[i][c]);
        }
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

std::string McKayGraph::to_dot(const std::string& name) const {
    std::ostringstream os;
    os << "graph \"" << name << "\" {\n";
    for (int v = 0; v < vertices; ++v) os << "  " << v << ";\n";
    for (auto [i, j, m] : edges) {
        for (long k = 0; k < m; ++k) os << "  " << i << " -- " << j << ";\n";
    }
    os << "}\n";
    return os.str();
}

McKayGraph mckay_graph(const TablePtr& t, const WeightFunction& xi) {
    auto a = cartan_at_one(quantum_cartan(t, xi));
    McKayGraph g;
    g.vertices = static_cast<int>(a.size());
    for (int i = 0; i < g.vertices; ++i)
        for (int j = i + 1; j < g.vertices; ++j)
            if (a[i][j] != 0) g.edges.emplace_back(i, j, std::labs(a[i][j]));
    return g;
}

mpq_class determinant(Matrix<mpq_class> m) {
    size_t n = m.size();
    mpq_class det = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && sgn(m[p][c]) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (size_t i = c + 1; i < n; ++i) {
            if (sgn(m[i][c]) == 0) continue;
            mpq_class f = m[i][c] / m[c][c];
            for (size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

double determinant(Matrix<double> m) {
    size_t n = m.size();
    double det = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        for (size_t i = c + 1; i < n; ++i)
            if (std::fabs(m[i][c]) > std::fabs(m[p][c])) p = i;
        if (m[p][c] == 0.0) return 0.0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (size_t i = c + 1; i < n; ++i) {
            double f = m[i][c] / m[c][c];
            for (size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

namespace {

std::optional<mpq_class> exact_sqrt(const mpq_class& q) {
    if (sgn(q) < 0) return std::nullopt;
    mpz_class n = q.get_num(), d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return mpq_class(rn, rd);
}

mpq_class qpow(const mpq_class& x, int e) {
    mpq_class acc = 1;
    mpq_class b = e >= 0 ? x : mpq_class(1 / x);
    for (int i = 0; i < std::abs(e); ++i) acc *= b;
    return acc;
}

std::optional<mpq_class> exact_eval(const RSLaurent& f, const mpq_class& t1, const mpq_class& t2) {
    auto u = exact_sqrt(t1), v = exact_sqrt(t2);
    bool reciprocal = t1 * t2 == 1;
    mpq_class s = 0;
    for (const auto& [e, c] : f.terms()) {
        if (!c.is_rational()) return std::nullopt;
        int a = e[0], b = e[1];
        mpq_class m;
        if (a % 2 == 0 && b % 2 == 0) m = qpow(t1, a / 2) * qpow(t2, b / 2);
        else if (reciprocal && (a - b) % 2 == 0) m = qpow(t1, (a - b) / 2);
        else if ((a % 2 == 0 || u) && (b % 2 == 0 || v))
            m = (a % 2 ? qpow(*u, a) : qpow(t1, a / 2)) * (b % 2 ? qpow(*v, b) : qpow(t2, b / 2));
        else return std::nullopt;
        s += c.rational() * m;
    }
    return s;
}

}  // namespace

NondegReport nondegeneracy_spot_check(const TablePtr& t, const WeightFunction& xi,
                                      const std::vector<std::pair<mpq_class, mpq_class>>& samples) {
    auto a = quantum_cartan(t, xi);
    for (auto& row : a.entries)
        for (auto& x : row) x = rs_set_kappa(x, RSLaurent(1));
    NondegReport rep;
    rep.group = t->name;
    const int n = a.size();
    constexpr double tol = 1e-9;
    for (const auto& [t1, t2] : samples) {
        NondegSample smp;
        smp.t1 = t1.get_str();
        smp.t2 = t2.get_str();
        if (sgn(t1) == 0 || sgn(t2) == 0) {
            smp.note = "zero sample value";
            rep.samples.push_back(smp);
            continue;
        }
        Matrix<mpq_class> mq(n, std::vector<mpq_class>(n));
        bool exact = true;
        for (int i = 0; i < n && exact; ++i)
            for (int j = 0; j < n && exact; ++j) {
                auto v = exact_eval(a(i, j), t1, t2);
                if (v) mq[i][j] = *v;
                else exact = false;
            }
        smp.exact = exact;
        if (exact) {
            mpq_class det = determinant(mq);
            smp.det = det.get_d();
            smp.nonsingular = sgn(det) != 0;
            bool pd = true;
            for (int k = 1; k <= n; ++k) {
                Matrix<mpq_class> sub(k, std::vector<mpq_class>(k));
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) sub[i][j] = mq[i][j];
                mpq_class m = determinant(sub);
                smp.minors.push_back(m.get_d());
                if (sgn(m) <= 0) pd = false;
            }
            smp.positive_definite = pd;
        } else {
            std::complex<double> u = std::sqrt(std::complex<double>(t1.get_d())),
                                 v = std::sqrt(std::complex<double>(t2.get_d()));
            Matrix<double> md(n, std::vector<double>(n));
            bool real = true;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    auto z = rs_eval_complex(a(i, j), u, v);
                    if (std::fabs(z.imag()) > tol) real = false;
                    md[i][j] = z.real();
                }
            smp.det = determinant(md);
            smp.nonsingular = std::fabs(smp.det) > tol;
            bool pd = real;
            for (int k = 1; k <= n; ++k) {
                Matrix<double> sub(k, std::vector<double>(k));
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) sub[i][j] = md[i][j];
                double m = determinant(sub);
                smp.minors.push_back(m);
                if (m <= tol) pd = false;
            }
            smp.positive_definite = pd;
            if (!real) smp.note = "complex entries";
        }
        rep.samples.push_back(std::move(smp));
    }
    return rep;
}

}  // namespace qmckay
