/// @file fock_heisenberg.hpp
/// @brief Fock space S (x) C[R_Z] with the two-parameter Heisenberg action and its bilinear form.
#pragma once

#include "qmckay/mckay_form.hpp"

#include <map>
#include <optional>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

namespace qmckay {

/// Creation monomial prod a_{-n}(index) (sorted (n, index) pairs) times the lattice vector e^beta.
struct FockKey {
    std::vector<std::pair<int, int>> mono;
    std::vector<int> beta;

    friend bool operator<(const FockKey& a, const FockKey& b) {
        return a.mono != b.mono ? a.mono < b.mono : a.beta < b.beta;
    }
    friend bool operator==(const FockKey& a, const FockKey& b) { return a.mono == b.mono && a.beta == b.beta; }
};

int mono_degree(const std::vector<std::pair<int, int>>& mono);
std::vector<std::pair<int, int>> mono_mul(const std::vector<std::pair<int, int>>& a,
                                          const std::vector<std::pair<int, int>>& b);

/// Finite RSLaurent combination of FockKeys; zero coefficients never stored.
class FockVector {
public:
    FockVector() = default;
    static FockVector basis(FockKey k, const RSLaurent& c = RSLaurent(1));
    static FockVector vacuum(int rank);

    const std::map<FockKey, RSLaurent>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }

    void add(const FockKey& k, const RSLaurent& c);
    FockVector& operator+=(const FockVector& o);
    FockVector& operator-=(const FockVector& o);
    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
    friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
    FockVector scaled(const RSLaurent& c) const;
    // this += c * o without a temporary
    void add_scaled(const FockVector& o, const RSLaurent& c);
    // Multiply the creation part by a monomial and a coefficient; lattice part kept.
    FockVector times_mono(const std::vector<std::pair<int, int>>& m, const RSLaurent& c) const;
    bool operator==(const FockVector& o) const { return t_ == o.t_; }
    bool operator!=(const FockVector& o) const { return !(t_ == o.t_); }

    nlohmann::json to_json() const;
    // Every coefficient passed through f.
    template <class F>
    FockVector mapped(F&& f) const {
        FockVector out;
        for (const auto& [k, c] : t_) out.add(k, f(c));
        return out;
    }

private:
    std::map<FockKey, RSLaurent> t_;
};

/// Product in S (x) C[R]: monomials multiply, lattice parts add (no cocycle).
FockVector fock_mul(const FockVector& a, const FockVector& b);

/// Fock space over a character table with a self-dual weight. Character-indexed generators
/// a_{-n}(gamma_i) for i in the allowed set; lattice vectors have one coordinate per character.
class FockSpace {
public:
    FockSpace(TablePtr t, WeightFunction xi, std::optional<std::vector<int>> allowed = std::nullopt);

    const TablePtr& table() const { return t_; }
    const WeightFunction& weight() const { return xi_; }
    const QuantumCartanMatrix& cartan() const { return a_; }
    const Matrix<long>& lattice_form() const { return a1_; }
    const std::vector<int>& allowed() const { return allowed_; }
    bool is_allowed(int i) const;
    int rank() const { return t_->num_chars(); }

    long pair1(const std::vector<int>& a, const std::vector<int>& b) const;
    // <gamma_i, gamma_j>^{r^n, s^n} (n != 0), cached.
    const RSLaurent& level_pairing(int i, int j, int n) const;
    // sum_i g_i <gamma_i, gamma_j>^{r^n,s^n} for an integer combination g.
    RSLaurent level_pairing(const std::vector<int>& g, int j, int n) const;
    // Throws if the lattice part has odd norm.
    int degree(const FockKey& k) const;
    int lattice_degree(const std::vector<int>& beta) const;

    // Monomial basis keys of total degree exactly d, with ||beta||_1 <= ball.
    std::vector<FockKey> basis(int d, int ball = 0) const;
    std::vector<FockKey> basis_upto(int d, int ball = 0) const;

    // a_m(gamma_i): m < 0 multiplication, m > 0 contraction with m <gamma_i, .>^{r^m,s^m}; m != 0.
    FockVector heis_apply(int m, int i, const FockVector& v) const;
    // a_m(f) = sum_i rs_substitute(f_i, m) a_m(gamma_i) for a class function f.
    FockVector heis_apply(int m, const ClassFunctionRS& f, const FockVector& v) const;
    // a_m(c) = sum_i gamma_i(c^{-1}) a_m(gamma_i).
    FockVector heis_apply_class(int m, int c, const FockVector& v) const;

    // Sesquilinear form: linear in u; coefficients of v inverted in r, s, kappa.
    RSLaurent form(const FockVector& u, const FockVector& v) const;
    RSLaurent form_keys(const FockKey& x, const FockKey& y) const;

    // Generator alphabets: class-indexed creation monomials <-> character-indexed ones.
    FockVector class_to_char(const FockVector& v) const;
    FockVector char_to_class(const FockVector& v) const;

private:
    TablePtr t_;
    WeightFunction xi_;
    QuantumCartanMatrix a_;
    Matrix<long> a1_;
    std::vector<int> allowed_;
    mutable std::map<std::tuple<int, int, int>, RSLaurent> level_cache_;
    mutable std::map<std::pair<FockKey, FockKey>, RSLaurent> form_cache_;
};

struct HeisReport {
    std::string anchor;
    bool pass = true;
    long checked = 0;
    std::string witness;
    nlohmann::json to_json() const;
};

/// [a_m(gamma_i), a_n(gamma_j)] = m delta_{m,-n} <gamma_i,gamma_j>^{r^m,s^m} on all basis vectors of degree <= D.
HeisReport heis_commutator_check(const FockSpace& f, int m, int n, int i, int j, int D);
/// Class-indexed form: [a_m(c^{-1}), a_n(c')] = m delta_{m,-n} delta_{c,c'} zeta_c xi_{(r^m,s^m)}(c).
HeisReport heis_class_commutator_check(const FockSpace& f, int m, int n, int c, int cp, int D);
/// Full suite over all generator pairs with 0 < |m|, |n| <= M on degree <= D.
HeisReport heis_suite(const FockSpace& f, int M, int D, bool class_basis = true);

}  // namespace qmckay
