#include "qmckay/group_data.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace qmckay {

using json = nlohmann::json;

int CharacterTable::dual(int i) const {
    for (int j = 0; j < num_chars(); ++j) {
        bool ok = true;
        for (int c = 0; c < num_classes() && ok; ++c) ok = chars[j][c] == chars[i][classes[c].inverse];
        if (ok) return j;
    }
    throw table_error("dual character not found for index " + std::to_string(i));
}

CycScalar CharacterTable::pi_value(int c) const {
    if (natural.empty()) throw table_error("table '" + name + "' has no natural character");
    CycScalar s;
    for (int i : natural) s += chars[i][c];
    return s;
}

void validate_table(const CharacterTable& t) {
    const int k = t.num_classes();
    if (k == 0) throw table_error("table has no classes");
    if (t.num_chars() != k)
        throw table_error("character count " + std::to_string(t.num_chars()) + " differs from class count " +
                          std::to_string(k));
    for (int i = 0; i < k; ++i)
        if (static_cast<int>(t.chars[i].size()) != k)
            throw table_error("character row " + std::to_string(i) + " has wrong length");
    long total = 0;
    for (int c = 0; c < k; ++c) {
        const auto& cl = t.classes[c];
        if (cl.size <= 0 || cl.centralizer <= 0) throw table_error("size error: class " + cl.id + " non-positive");
        if (cl.size * cl.centralizer != t.order)
            throw table_error("size error: |c|*zeta_c != |G| for class " + cl.id);
        total += cl.size;
    }
    if (total != t.order) throw table_error("size error: class sizes sum to " + std::to_string(total));
    if (t.classes[0].size != 1) throw table_error("size error: class 0 must be the identity class");
    for (int c = 0; c < k; ++c) {
        int inv = t.classes[c].inverse;
        if (inv < 0 || inv >= k) throw table_error("inverse map out of range at class " + t.classes[c].id);
        if (t.classes[inv].inverse != c) throw table_error("inverse map not an involution at class " + t.classes[c].id);
    }
    if (t.classes[0].inverse != 0) throw table_error("inverse of the identity class must be itself");
    if (t.trivial < 0 || t.trivial >= k) throw table_error("trivial index out of range");
    for (int c = 0; c < k; ++c)
        if (!t.chars[t.trivial][c].is_one()) throw table_error("trivial character is not identically 1");
    mpq_class dim2 = 0;
    for (int i = 0; i < k; ++i) {
        const CycScalar& d = t.chars[i][0];
        if (!d.is_rational() || d.rational().get_den() != 1 || sgn(d.rational()) <= 0)
            throw table_error("dimension of character " + std::to_string(i) + " is not a positive integer");
        dim2 += d.rational() * d.rational();
    }
    if (dim2 != t.order) throw table_error("sum of squared dimensions differs from |G|");
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
            CycScalar s;
            for (int c = 0; c < k; ++c) s += CycScalar(t.classes[c].size) * t.chars[i][c] * t.chars[j][t.classes[c].inverse];
            if (s != CycScalar(i == j ? t.order : 0L))
                throw table_error("row orthogonality fails for (i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    for (int c = 0; c < k; ++c)
        for (int d = c; d < k; ++d) {
            CycScalar s;
            for (int i = 0; i < k; ++i) s += t.chars[i][d] * t.chars[i][t.classes[c].inverse];
            if (s != CycScalar(c == d ? t.classes[c].centralizer : 0L))
                throw table_error("column orthogonality fails for classes (" + t.classes[c].id + "," + t.classes[d].id + ")");
        }
    if (!t.natural.empty()) {
        if (t.natural.size() > 2) throw table_error("natural character: at most two terms");
        for (int i : t.natural)
            if (i < 0 || i >= k) throw table_error("natural character index out of range");
        if (t.pi_value(0) != CycScalar(2)) throw table_error("natural character must have dimension 2");
    }
}

CharacterTable load_table(const json& doc) {
    CharacterTable t;
    try {
        t.name = doc.at("name").get<std::string>();
        t.order = doc.at("order").get<long>();
        for (const auto& c : doc.at("classes")) {
            ConjClass cl;
            cl.id = c.at("id").is_string() ? c.at("id").get<std::string>() : c.at("id").dump();
            cl.size = c.at("size").get<long>();
            cl.centralizer = c.at("centralizer").get<long>();
            cl.inverse = c.at("inverse").get<int>();
            t.classes.push_back(cl);
        }
        for (const auto& row : doc.at("characters")) {
            std::vector<CycScalar> r;
            for (const auto& v : row) r.push_back(CycScalar::parse(v.get<std::string>()));
            t.chars.push_back(std::move(r));
        }
        t.trivial = doc.value("trivial", 0);
        if (doc.contains("natural") && !doc.at("natural").is_null()) {
            const auto& nat = doc.at("natural");
            if (nat.is_number_integer()) t.natural = {nat.get<int>()};
            else t.natural = nat.get<std::vector<int>>();
        }
    } catch (const json::exception& e) {
        throw table_error(std::string("malformed table document: ") + e.what());
    } catch (const ring_error& e) {
        throw table_error(std::string("malformed character value: ") + e.what());
    }
    t.conductor = 1;
    for (const auto& row : t.chars)
        for (const auto& v : row) t.conductor = static_cast<int>(ilcm(t.conductor, v.conductor()));
    validate_table(t);
    return t;
}

json table_to_json(const CharacterTable& t) {
    json doc;
    doc["name"] = t.name;
    doc["order"] = t.order;
    json cls = json::array();
    for (const auto& c : t.classes)
        cls.push_back({{"id", c.id}, {"size", c.size}, {"centralizer", c.centralizer}, {"inverse", c.inverse}});
    doc["classes"] = cls;
    json chars = json::array();
    for (const auto& row : t.chars) {
        json r = json::array();
        for (const auto& v : row) r.push_back(v.str());
        chars.push_back(r);
    }
    doc["characters"] = chars;
    doc["trivial"] = t.trivial;
    if (t.natural.size() == 1) doc["natural"] = t.natural[0];
    else if (t.natural.size() == 2) doc["natural"] = t.natural;
    if (!t.affine_type.empty()) doc["affine_type"] = t.affine_type;
    doc["conductor"] = t.conductor;
    return doc;
}

// ------------------------------------------------------------ affine diagrams

std::vector<std::vector<int>> affine_cartan(const std::string& type) {
    if (type.size() < 2) throw table_error("unknown affine type '" + type + "'");
    char family = type[0];
    int rank = std::stoi(type.substr(1));
    int n = rank + 1;
    std::vector<std::pair<int, int>> edges;
    if (family == 'A') {
        if (rank == 0) return {{0}};
        if (rank == 1) return {{2, -2}, {-2, 2}};
        for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    } else if (family == 'D') {
        if (rank < 4) throw table_error("affine D needs rank >= 4");
        edges = {{0, 2}, {1, 2}};
        for (int i = 2; i <= rank - 2; ++i) edges.push_back({i, i + 1});
        edges.push_back({rank - 2, rank});
    } else if (type == "E6") {
        edges = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}, {0, 2}};
    } else if (type == "E7") {
        edges = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {2, 4}, {0, 1}};
    } else if (type == "E8") {
        edges = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}, {0, 8}};
    } else {
        throw table_error("unknown affine type '" + type + "'");
    }
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    for (auto [i, j] : edges) {
        a[i][j] -= 1;
        a[j][i] -= 1;
    }
    return a;
}

namespace {

// Integer multiplicity of gamma_j in pi (x) gamma_i.
std::vector<std::vector<int>> natural_multiplicities(const CharacterTable& t) {
    int k = t.num_chars();
    std::vector<std::vector<int>> m(k, std::vector<int>(k, 0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            CycScalar s;
            for (int c = 0; c < k; ++c)
                s += CycScalar(t.classes[c].size) * t.pi_value(c) * t.chars[i][c] * t.chars[j][t.classes[c].inverse];
            mpq_class q = s.rational() / t.order;
            m[i][j] = static_cast<int>(q.get_num().get_si());
        }
    return m;
}

// Reorder characters so the McKay graph matches affine_cartan(type) with trivial at node 0.
void renumber_to_affine(CharacterTable& t) {
    auto target = affine_cartan(t.affine_type);
    auto mult = natural_multiplicities(t);
    int k = t.num_chars();
    std::vector<int> perm(k, -1);  // standard node -> raw index
    std::vector<bool> used(k, false);
    std::function<bool(int)> assign = [&](int node) -> bool {
        if (node == k) return true;
        for (int raw = 0; raw < k; ++raw) {
            if (used[raw]) continue;
            if (node == 0 && raw != t.trivial) continue;
            bool ok = true;
            for (int prev = 0; prev <= node && ok; ++prev) {
                int rp = prev == node ? raw : perm[prev];
                int want = prev == node ? 2 - target[node][node] : -target[prev][node];
                ok = mult[rp][raw] == want;
            }
            if (!ok) continue;
            perm[node] = raw;
            used[raw] = true;
            if (assign(node + 1)) return true;
            used[raw] = false;
        }
        return false;
    };
    if (!assign(0)) throw table_error("McKay graph of '" + t.name + "' does not match " + t.affine_type);
    std::vector<int> inv(k);
    for (int node = 0; node < k; ++node) inv[perm[node]] = node;
    std::vector<std::vector<CycScalar>> chars(k);
    for (int node = 0; node < k; ++node) chars[node] = t.chars[perm[node]];
    t.chars = std::move(chars);
    t.trivial = 0;
    for (int& i : t.natural) i = inv[i];
    std::sort(t.natural.begin(), t.natural.end());
}

CycScalar Z(int n, long k) { return CycScalar::zeta(n, k); }

CharacterTable cyclic_table(int n) {
    if (n < 1) throw table_error("cyclic group order must be positive");
    CharacterTable t;
    t.name = "cyclic:" + std::to_string(n);
    t.order = n;
    t.cyclic_order = n;
    for (int j = 0; j < n; ++j) t.classes.push_back({"c" + std::to_string(j), 1, n, (n - j) % n});
    t.chars.assign(n, std::vector<CycScalar>(n));
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) t.chars[k][j] = Z(n, static_cast<long>(j) * k);
    t.natural = {n > 1 ? 1 : 0, n > 1 ? n - 1 : 0};
    std::sort(t.natural.begin(), t.natural.end());
    t.affine_type = "A" + std::to_string(n - 1);
    t.conductor = n;
    return t;
}

// Dicyclic group <x, y | x^{2n} = 1, y^2 = x^n, y x y^{-1} = x^{-1}>, order 4n.
CharacterTable binary_dihedral_table(int n) {
    if (n < 2) throw table_error("binary dihedral parameter must be >= 2");
    CharacterTable t;
    t.name = "binary_dihedral:" + std::to_string(n);
    t.order = 4L * n;
    int k = n + 3;
    t.classes.push_back({"1", 1, 4L * n, 0});
    t.classes.push_back({"-1", 1, 4L * n, 1});
    for (int j = 1; j < n; ++j) t.classes.push_back({"x" + std::to_string(j), 2, 2L * n, 1 + j});
    int cy = n + 1, cyx = n + 2;
    bool n_even = n % 2 == 0;
    t.classes.push_back({"y", n, 4, n_even ? cy : cyx});
    t.classes.push_back({"yx", n, 4, n_even ? cyx : cy});
    const int m = 2 * n;
    auto one_dim = [&](int a, const CycScalar& b) {
        std::vector<CycScalar> row(k);
        row[0] = 1;
        row[1] = a == 1 || n_even ? CycScalar(1) : CycScalar(-1);
        for (int j = 1; j < n; ++j) row[1 + j] = (a == -1 && j % 2) ? CycScalar(-1) : CycScalar(1);
        row[cy] = b;
        row[cyx] = a == 1 ? b : -b;
        return row;
    };
    t.chars.push_back(one_dim(1, CycScalar(1)));
    t.chars.push_back(one_dim(1, CycScalar(-1)));
    CycScalar b = n_even ? CycScalar(1) : Z(4, 1);
    t.chars.push_back(one_dim(-1, b));
    t.chars.push_back(one_dim(-1, -b));
    for (int j = 1; j < n; ++j) {
        std::vector<CycScalar> row(k);
        row[0] = 2;
        row[1] = j % 2 ? -2 : 2;
        for (int e = 1; e < n; ++e) row[1 + e] = Z(m, static_cast<long>(j) * e) + Z(m, -static_cast<long>(j) * e);
        row[cy] = 0;
        row[cyx] = 0;
        t.chars.push_back(row);
    }
    t.trivial = 0;
    t.natural = {4};
    t.affine_type = "D" + std::to_string(n + 2);
    t.conductor = static_cast<int>(ilcm(m, 4));
    return t;
}

CharacterTable binary_tetrahedral_table() {
    CharacterTable t;
    t.name = "binary_tetrahedral";
    t.order = 24;
    t.classes = {{"1", 1, 24, 0}, {"-1", 1, 24, 1}, {"4", 6, 4, 2}, {"6a", 4, 6, 4},
                 {"6b", 4, 6, 3}, {"3a", 4, 6, 6}, {"3b", 4, 6, 5}};
    CycScalar w = Z(3, 1), w2 = Z(3, 2);
    auto C = [](long v) { return CycScalar(v); };
    t.chars = {
        {C(1), C(1), C(1), C(1), C(1), C(1), C(1)},
        {C(1), C(1), C(1), w, w2, w, w2},
        {C(1), C(1), C(1), w2, w, w2, w},
        {C(2), C(-2), C(0), C(1), C(1), C(-1), C(-1)},
        {C(2), C(-2), C(0), w, w2, -w, -w2},
        {C(2), C(-2), C(0), w2, w, -w2, -w},
        {C(3), C(3), C(-1), C(0), C(0), C(0), C(0)},
    };
    t.natural = {3};
    t.affine_type = "E6";
    t.conductor = 12;
    return t;
}

CharacterTable binary_octahedral_table() {
    CharacterTable t;
    t.name = "binary_octahedral";
    t.order = 48;
    t.classes = {{"1", 1, 48, 0}, {"-1", 1, 48, 1}, {"4a", 6, 8, 2}, {"6", 8, 6, 3},
                 {"3", 8, 6, 4},  {"8a", 6, 8, 5},  {"8b", 6, 8, 6}, {"4b", 12, 4, 7}};
    CycScalar r2 = Z(8, 1) - Z(8, 3);
    auto C = [](long v) { return CycScalar(v); };
    t.chars = {
        {C(1), C(1), C(1), C(1), C(1), C(1), C(1), C(1)},
        {C(1), C(1), C(1), C(1), C(1), C(-1), C(-1), C(-1)},
        {C(2), C(2), C(2), C(-1), C(-1), C(0), C(0), C(0)},
        {C(3), C(3), C(-1), C(0), C(0), C(1), C(1), C(-1)},
        {C(3), C(3), C(-1), C(0), C(0), C(-1), C(-1), C(1)},
        {C(2), C(-2), C(0), C(1), C(-1), r2, -r2, C(0)},
        {C(2), C(-2), C(0), C(1), C(-1), -r2, r2, C(0)},
        {C(4), C(-4), C(0), C(-1), C(1), C(0), C(0), C(0)},
    };
    t.natural = {5};
    t.affine_type = "E7";
    t.conductor = 24;
    return t;
}

CharacterTable binary_icosahedral_table() {
    CharacterTable t;
    t.name = "binary_icosahedral";
    t.order = 120;
    t.classes = {{"1", 1, 120, 0},  {"-1", 1, 120, 1}, {"4", 30, 4, 2},   {"6", 20, 6, 3},  {"3", 20, 6, 4},
                 {"10a", 12, 10, 5}, {"10b", 12, 10, 6}, {"5a", 12, 10, 7}, {"5b", 12, 10, 8}};
    CycScalar phi = -Z(5, 2) - Z(5, 3);           // (1 + sqrt5)/2
    CycScalar phi2 = CycScalar(1) - phi;           // (1 - sqrt5)/2
    auto C = [](long v) { return CycScalar(v); };
    t.chars = {
        {C(1), C(1), C(1), C(1), C(1), C(1), C(1), C(1), C(1)},
        {C(2), C(-2), C(0), C(1), C(-1), phi, phi2, -phi2, -phi},
        {C(3), C(3), C(-1), C(0), C(0), phi, phi2, phi2, phi},
        {C(4), C(-4), C(0), C(-1), C(1), C(1), C(1), C(-1), C(-1)},
        {C(5), C(5), C(1), C(-1), C(-1), C(0), C(0), C(0), C(0)},
        {C(6), C(-6), C(0), C(0), C(0), C(-1), C(-1), C(1), C(1)},
        {C(2), C(-2), C(0), C(1), C(-1), phi2, phi, -phi, -phi2},
        {C(3), C(3), C(-1), C(0), C(0), phi2, phi, phi, phi2},
        {C(4), C(4), C(0), C(1), C(1), C(-1), C(-1), C(-1), C(-1)},
    };
    t.natural = {1};
    t.affine_type = "E8";
    t.conductor = 60;
    return t;
}

}  // namespace

GroupKind parse_group_kind(const std::string& s) {
    if (s == "cyclic") return GroupKind::cyclic;
    if (s == "binary_dihedral") return GroupKind::binary_dihedral;
    if (s == "binary_tetrahedral") return GroupKind::binary_tetrahedral;
    if (s == "binary_octahedral") return GroupKind::binary_octahedral;
    if (s == "binary_icosahedral") return GroupKind::binary_icosahedral;
    throw table_error("unknown group kind '" + s + "'");
}

TablePtr builtin_group(GroupKind kind, std::optional<int> n) {
    CharacterTable t;
    switch (kind) {
        case GroupKind::cyclic:
            if (!n) throw table_error("cyclic group needs its order n");
            t = cyclic_table(*n);
            break;
        case GroupKind::binary_dihedral:
            if (!n) throw table_error("binary dihedral group needs n (order 4n)");
            t = binary_dihedral_table(*n);
            break;
        case GroupKind::binary_tetrahedral: t = binary_tetrahedral_table(); break;
        case GroupKind::binary_octahedral: t = binary_octahedral_table(); break;
        case GroupKind::binary_icosahedral: t = binary_icosahedral_table(); break;
    }
    if (kind != GroupKind::cyclic) renumber_to_affine(t);
    validate_table(t);
    return std::make_shared<const CharacterTable>(std::move(t));
}

TablePtr group_from_spec(const std::string& spec) {
    if (spec == "trivial") return builtin_group(GroupKind::cyclic, 1);
    auto colon = spec.find(':');
    std::string kind = spec.substr(0, colon);
    static const char* kinds[] = {"cyclic", "binary_dihedral", "binary_tetrahedral", "binary_octahedral",
                                  "binary_icosahedral"};
    for (const char* k : kinds) {
        if (kind != k) continue;
        std::optional<int> n;
        if (colon != std::string::npos) {
            try {
                n = std::stoi(spec.substr(colon + 1));
            } catch (const std::exception&) {
                throw table_error("bad group parameter in '" + spec + "'");
            }
        }
        return builtin_group(parse_group_kind(kind), n);
    }
    std::ifstream in(spec);
    if (!in) throw table_error("unknown group '" + spec + "' (not a catalogue name or readable file)");
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw table_error(std::string("cannot parse table file: ") + e.what());
    }
    return std::make_shared<const CharacterTable>(load_table(doc));
}

// ------------------------------------------------------------ class functions

ClassFunctionRS ClassFunctionRS::zero(TablePtr t) {
    ClassFunctionRS f;
    f.coeffs.assign(t->num_chars(), RSLaurent());
    f.table = std::move(t);
    return f;
}

ClassFunctionRS ClassFunctionRS::character(TablePtr t, int i, const RSLaurent& c) {
    ClassFunctionRS f = zero(std::move(t));
    f.coeffs.at(i) = c;
    return f;
}

RSLaurent ClassFunctionRS::eval(int c) const {
    RSLaurent s;
    for (int i = 0; i < table->num_chars(); ++i)
        if (!coeffs[i].is_zero()) s += coeffs[i].scaled(table->chars[i][c]);
    return s;
}

RSLaurent ClassFunctionRS::eval_twisted(int c, int m) const {
    RSLaurent s;
    for (int i = 0; i < table->num_chars(); ++i)
        if (!coeffs[i].is_zero()) s += rs_substitute(coeffs[i], m).scaled(table->chars[i][c]);
    return s;
}

namespace {
void check_same(const ClassFunctionRS& a, const ClassFunctionRS& b) {
    if (a.table != b.table && (a.table == nullptr || b.table == nullptr || a.table->name != b.table->name))
        throw table_error("class functions over different tables");
}
}  // namespace

ClassFunctionRS ClassFunctionRS::operator+(const ClassFunctionRS& o) const {
    check_same(*this, o);
    ClassFunctionRS f = *this;
    for (size_t i = 0; i < coeffs.size(); ++i) f.coeffs[i] += o.coeffs[i];
    return f;
}

ClassFunctionRS ClassFunctionRS::operator-(const ClassFunctionRS& o) const {
    check_same(*this, o);
    ClassFunctionRS f = *this;
    for (size_t i = 0; i < coeffs.size(); ++i) f.coeffs[i] -= o.coeffs[i];
    return f;
}

ClassFunctionRS ClassFunctionRS::scaled(const RSLaurent& c) const {
    ClassFunctionRS f = *this;
    for (auto& x : f.coeffs) x *= c;
    return f;
}

bool ClassFunctionRS::operator==(const ClassFunctionRS& o) const {
    check_same(*this, o);
    return coeffs == o.coeffs;
}

ClassFunctionRS antipode(const ClassFunctionRS& f) {
    ClassFunctionRS g = ClassFunctionRS::zero(f.table);
    for (int i = 0; i < f.table->num_chars(); ++i) g.coeffs[f.table->dual(i)] = rs_inv(f.coeffs[i]);
    return g;
}

}  // namespace qmckay
