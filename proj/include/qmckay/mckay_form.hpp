#pragma once

#include "qmckay/group_data.hpp"

#include <string>
#include <tuple>
#include <vector>

namespace qmckay {

template <class T>
using Matrix = std::vector<std::vector<T>>;

struct WeightFunction {
    ClassFunctionRS base;
    bool self_dual = false;  // verified by the constructors
    std::string label;

    const TablePtr& table() const { return base.table; }
};

RSLaurent weighted_form(const ClassFunctionRS& f, const ClassFunctionRS& g, const WeightFunction& xi);

// Verifies self-duality and wraps.
WeightFunction make_weight(ClassFunctionRS base, std::string label);
WeightFunction trivial_weight(const TablePtr& t);
WeightFunction mckay_weight(const TablePtr& t);
// gamma_0 (x) [d](rs)^{-d/4} - pi. Odd d would need quarter exponents and is rejected.
// pi is a d-dimensional character given as a class function.
WeightFunction general_weight(const TablePtr& t, const ClassFunctionRS& pi);
// gamma_0 (x) d - (gamma_1 (x) kappa + gamma_N (x) kappa^{-1}); kappa a unit monomial.
WeightFunction kappa_weight(const TablePtr& t, const RSLaurent& kappa);

struct QuantumCartanMatrix {
    Matrix<RSLaurent> entries;
    TablePtr table;
    std::string weight_label;

    int size() const { return static_cast<int>(entries.size()); }
    const RSLaurent& operator()(int i, int j) const { return entries[i][j]; }
};

QuantumCartanMatrix quantum_cartan(const TablePtr& t, const WeightFunction& xi);
// Level-m pairing <gamma_i, gamma_j>^{r^m, s^m}: rs_substitute applied entrywise.
Matrix<RSLaurent> twisted_cartan(const QuantumCartanMatrix& a, int m);
// Integer matrix at r = s = kappa = 1; throws if an entry is not an integer.
Matrix<long> cartan_at_one(const QuantumCartanMatrix& a);

struct EigenEntry {
    std::string class_id;
    RSLaurent eigenvalue;
    bool pass = false;
};

struct EigenReport {
    std::string group;
    std::vector<EigenEntry> entries;
    bool pass() const;
};

EigenReport verify_eigenvectors(const TablePtr& t, const WeightFunction& xi);

struct McKayGraph {
    int vertices = 0;
    std::vector<std::tuple<int, int, long>> edges;  // (i, j, multiplicity), i < j
    std::string to_dot(const std::string& name) const;
};

McKayGraph mckay_graph(const TablePtr& t, const WeightFunction& xi);

struct NondegSample {
    std::string t1, t2;
    bool exact = false;
    double det = 0;
    std::vector<double> minors;
    bool nonsingular = false;
    bool positive_definite = false;
    std::string note;
};

struct NondegReport {
    std::string group;
    std::vector<NondegSample> samples;
};

// Exact over Q when every monomial specializes to a rational (always the case for t1 t2 = 1 with
// integral half-exponent differences); otherwise double evaluation with tolerance 1e-9.
NondegReport nondegeneracy_spot_check(const TablePtr& t, const WeightFunction& xi,
                                      const std::vector<std::pair<mpq_class, mpq_class>>& samples);

mpq_class determinant(Matrix<mpq_class> m);
double determinant(Matrix<double> m);

}  // namespace qmckay
