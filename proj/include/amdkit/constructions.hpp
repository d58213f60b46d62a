#pragma once

#include "amdkit/families.hpp"
#include "amdkit/field.hpp"

namespace amdkit {

/// Parameters of the cyclotomic coset EDF construction: q = 2*u*l + 1 a
/// prime power with u, l odd. The construction returns the l cosets
/// alpha^{2i}*C (0 <= i < l) of the order-u subgroup C of the multiplicative
/// group, so the verifier witnesses l sets of size u. The classical
/// parameter statement "(q,u,l,(q-2l-1)/4)" reads as u sets of size l;
/// lambda_stated = (q-2l-1)/4 = l*(u-1)/2 and lambda_witnessed = u*(l-1)/2
/// agree exactly when u = l, and the builder surfaces any mismatch as a
/// note rather than an error.
struct TonchevParameters {
    std::int64_t q = 0;
    std::int64_t u = 0;
    std::int64_t l = 0;
    std::int64_t lambda_stated = 0;    // (q - 2l - 1)/4
    std::int64_t lambda_witnessed = 0; // u*(l-1)/2, what the verifier sees
    bool lambdas_agree = false;
};

TonchevParameters tonchev_parameters(std::int64_t q, std::int64_t u, std::int64_t l);

struct ConstructionResult {
    SetFamily family;
    VerificationReport report;
    std::vector<std::string> notes;
};

/// The l cosets alpha^{2i}*C of the order-u subgroup C of F_q^*, as subsets
/// of the additive group. alpha is the canonical smallest primitive element,
/// cosets are listed by increasing exponent i, elements in canonical order.
ConstructionResult tonchev_edf(std::int64_t q, std::int64_t u, std::int64_t l, const FiniteField& field);

/// {0..k-1} and {k, 2k, ..., k^2} in Z_{k^2+1}: a (k^2+1, 2, k, 1)-SEDF.
ConstructionResult two_set_sedf(std::int64_t k);

/// n singleton sets {0},...,{n-1} in Z_n: an (n, n, 1, 1)-SEDF.
ConstructionResult singleton_sedf(std::int64_t n);

/// {0} and {1,...,n-1} in Z_n: an (n,2;1,n-1;1,1)-GSEDF.
ConstructionResult complement_gsedf(std::int64_t n);

/// {1},{2},{4},{0,3,5,6} in Z_7: a (7,4;1,1,1,4;1,1,1,2)-GSEDF built from
/// the quadratic residues mod 7.
ConstructionResult qr_gsedf();

/// {0,1,4},{3,5,10},{2,6,7,9},{8},{11},{12} in Z_13: a
/// (13,6;2,1,3;3,4,1;5,3,3)-PEDF that is not a GSEDF.
ConstructionResult pedf_example_z13();

} // namespace amdkit
