/// @file char_map.hpp
/// @brief Characteristic map from wreath class functions to the Fock space, plus the
/// isometry and Hopf compatibility harnesses.
#pragma once

#include "qmckay/fock_heisenberg.hpp"
#include "qmckay/wreath_chars.hpp"

#include <string>
#include <vector>

namespace qmckay {

struct ChReport {
    std::string group;
    int n = 0;
    std::string statement;
    bool pass = true;
    long checked = 0;
    std::string witness;  // empty iff pass
    nlohmann::json details = nlohmann::json::object();

    nlohmann::json to_json() const;
};

/// prod_c prod_{parts} a_{-part}(c) in the class alphabet, times r^{-nk} s^{-nl}.
FockVector a_prime_class(const PartValuedFn& rho, int rank, int k = 0, int l = 0);
/// Same element rewritten in character-indexed generators.
FockVector a_prime(const FockSpace& fs, const PartValuedFn& rho, int k = 0, int l = 0);

/// sum_rho Z_rho^{-1} S(f(rho)) a'_{-rho}, returned in character-indexed generators.
FockVector ch(const WreathClassFunction& f, const FockSpace& fs);
FockVector ch_class_alphabet(const WreathClassFunction& f, int rank);

/// z^n coefficient of exp(sum_m a_{-m}(gamma) (r^{-k} s^{-l} z)^m / m).
FockVector ch_eta(const FockSpace& fs, const ClassFunctionRS& gamma, int k, int l, int n);
/// Same with the alternating sign (-1)^{m-1} inside the exponential.
FockVector ch_eps(const FockSpace& fs, const ClassFunctionRS& gamma, int k, int l, int n);

/// Gram matrices of the sigma_rho basis of weight n, wreath side against Fock side.
/// The report passes on the untwisted comparison; twisted samples are recorded in details.
ChReport verify_isometry(const FockSpace& fs, int n, bool twisted_samples = true);

/// Induction product, restriction coproduct, antipode and counit checks through weight n.
ChReport verify_hopf(const FockSpace& fs, int n);

/// ch(eta_n) and ch(eps_n) evaluated pointwise against the exponential series for
/// every irreducible gamma and the twists (k, l) in {(0,0), (1,0), (0,1), (1,-1)}.
ChReport verify_generating_functions(const FockSpace& fs, int n);

}  // namespace qmckay
