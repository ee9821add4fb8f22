/// @file wreath_chars.hpp
/// @brief Partition-valued types of wreath products and RSLaurent-valued class functions on them.
#pragma once

#include "qmckay/mckay_form.hpp"

#include <gmpxx.h>

#include <map>
#include <memory>
#include <vector>

namespace qmckay {

using Partition = std::vector<int>;  // weakly decreasing, positive parts

std::vector<Partition> partitions(int n);
mpz_class z_lambda(const Partition& lambda);
int partition_size(const Partition& lambda);

/// Partition-valued function on classes (or characters). Stored densely, one slot per index.
struct PartValuedFn {
    TablePtr table;
    bool char_indexed = false;
    std::vector<Partition> parts;

    static PartValuedFn empty(TablePtr t, bool char_indexed = false);
    int weight() const;
    // c -> rho(c^{-1}); only meaningful for class-indexed functions.
    PartValuedFn bar() const;
    // Multiplicity m_i of the part i in rho(c).
    int multiplicity(int c, int i) const;
    PartValuedFn operator+(const PartValuedFn& o) const;  // juxtaposition
    nlohmann::json to_json() const;

    friend bool operator==(const PartValuedFn& a, const PartValuedFn& b) { return a.parts == b.parts; }
    friend bool operator<(const PartValuedFn& a, const PartValuedFn& b);
};

/// All class-indexed types of weight n, in canonical order: lexicographic over class index,
/// each partition compared in reverse-lex (larger first).
std::vector<PartValuedFn> enumerate_types(const TablePtr& t, int n);

mpz_class centralizer_order(const PartValuedFn& rho);

/// The enumerated types of weight n plus a lookup map.
struct TypeSpace {
    TablePtr table;
    int n = 0;
    std::vector<PartValuedFn> types;
    std::map<PartValuedFn, int> index;
    std::vector<mpz_class> z;

    int find(const PartValuedFn& rho) const;
};

std::shared_ptr<const TypeSpace> type_space(const TablePtr& t, int n);

/// Product over classes and part lengths of gamma_{(r^i, s^i)}(c)^{m_i}, times r^{nk} s^{nl}.
/// For an irreducible character this is prod_c gamma(c)^{l(rho(c))} r^{nk} s^{nl}.
RSLaurent eta_value(const ClassFunctionRS& gamma, int k, int l, const PartValuedFn& rho);
/// (-1)^n prod_c prod_i (-gamma_{(r^i,s^i)}(c))^{m_i} r^{nk} s^{nl}.
RSLaurent eps_value(const ClassFunctionRS& gamma, int k, int l, const PartValuedFn& rho);
/// eta_n(xi) at rho: prod_c prod_i xi_{(r^i,s^i)}(c)^{m_i(rho(c))}.
RSLaurent eta_weight(const WeightFunction& xi, const PartValuedFn& rho);

struct WreathClassFunction {
    std::shared_ptr<const TypeSpace> space;
    std::vector<RSLaurent> values;  // aligned with space->types

    static WreathClassFunction zero(const TablePtr& t, int n);
    const TablePtr& table() const { return space->table; }
    int n() const { return space->n; }
    const RSLaurent& at(const PartValuedFn& rho) const { return values[space->find(rho)]; }
    WreathClassFunction operator+(const WreathClassFunction& o) const;
    WreathClassFunction scaled(const RSLaurent& c) const;
    bool operator==(const WreathClassFunction& o) const { return values == o.values; }
};

WreathClassFunction eta_fn(const ClassFunctionRS& gamma, int k, int l, int n);
WreathClassFunction eps_fn(const ClassFunctionRS& gamma, int k, int l, int n);

/// sigma_n(c (x) r^k s^l): n zeta_c r^{-nk} s^{-nl} on the n-cycle type over class c.
WreathClassFunction sigma_class(const TablePtr& t, int c, int n, int k = 0, int l = 0);
/// sigma_n(gamma_i (x) r^k s^l): n gamma_i(c) r^{-nk} s^{-nl} on each n-cycle type over c.
WreathClassFunction sigma_char(const TablePtr& t, int i, int n, int k = 0, int l = 0);
/// sigma_{rho (x) r^k s^l}: Z_rho r^{-nk} s^{-nl} on rho, zero elsewhere.
WreathClassFunction sigma_rho(const PartValuedFn& rho, int k = 0, int l = 0);

/// sum_rho Z_rho^{-1} eta_n(xi)(rho) f(rho) S(g)(rho), S(g)(rho) = inv(g(bar rho)).
RSLaurent wreath_form(const WreathClassFunction& f, const WreathClassFunction& g, const WeightFunction& xi);

}  // namespace qmckay
