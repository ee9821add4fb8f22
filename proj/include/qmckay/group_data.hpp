#pragma once

#include "qmckay/exact_ring.hpp"

#include <json.hpp>

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qmckay {

class table_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct ConjClass {
    std::string id;
    long size = 1;
    long centralizer = 1;
    int inverse = 0;
};

/// Character table with inverse-class map. Rows are irreducible characters, columns classes.
struct CharacterTable {
    std::string name;
    long order = 1;
    std::vector<ConjClass> classes;
    std::vector<std::vector<CycScalar>> chars;
    int trivial = 0;
    std::vector<int> natural;  // empty, one index, or a two-term decomposition
    std::string affine_type;   // e.g. "A2", "D4", "E6"; empty for loaded tables
    int conductor = 1;

    int num_classes() const { return static_cast<int>(classes.size()); }
    int num_chars() const { return static_cast<int>(chars.size()); }
    const CycScalar& value(int i, int c) const { return chars[i][c]; }
    // Index j with gamma_j(c) = gamma_i(c^{-1}).
    int dual(int i) const;
    CycScalar pi_value(int c) const;
    bool has_natural() const { return !natural.empty(); }
    bool is_cyclic() const { return cyclic_order > 0; }
    int cyclic_order = 0;  // set for the cyclic catalogue family
};

using TablePtr = std::shared_ptr<const CharacterTable>;

// Throws table_error naming the violated identity.
void validate_table(const CharacterTable& t);

CharacterTable load_table(const nlohmann::json& doc);
nlohmann::json table_to_json(const CharacterTable& t);

enum class GroupKind { cyclic, binary_dihedral, binary_tetrahedral, binary_octahedral, binary_icosahedral };

GroupKind parse_group_kind(const std::string& s);
TablePtr builtin_group(GroupKind kind, std::optional<int> n = std::nullopt);
// "cyclic:3", "binary_dihedral:2", "binary_icosahedral", "trivial", or a path to a table JSON file.
TablePtr group_from_spec(const std::string& spec);

/// Class function with RSLaurent coefficients in character coordinates.
struct ClassFunctionRS {
    TablePtr table;
    std::vector<RSLaurent> coeffs;

    static ClassFunctionRS zero(TablePtr t);
    static ClassFunctionRS character(TablePtr t, int i, const RSLaurent& c = RSLaurent(1));

    RSLaurent eval(int c) const;
    // Each coefficient passed through rs_substitute(., m) before evaluation.
    RSLaurent eval_twisted(int c, int m) const;

    ClassFunctionRS operator+(const ClassFunctionRS& o) const;
    ClassFunctionRS operator-(const ClassFunctionRS& o) const;
    ClassFunctionRS scaled(const RSLaurent& c) const;
    bool operator==(const ClassFunctionRS& o) const;
};

ClassFunctionRS antipode(const ClassFunctionRS& f);

struct WeightFunction;
std::vector<RSLaurent> tensor_multiplicities(const CharacterTable& t, const WeightFunction& xi, int i);

// Affine Cartan matrix of a simply-laced affine type ("A1".."An", "D4".., "E6","E7","E8")
// in the catalogue's vertex numbering (node 0 affine). A1 has the double edge.
std::vector<std::vector<int>> affine_cartan(const std::string& type);

}  // namespace qmckay
