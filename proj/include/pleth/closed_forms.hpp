#ifndef PLETH_CLOSED_FORMS_HPP
#define PLETH_CLOSED_FORMS_HPP

#include <string>
#include <utility>
#include <vector>

#include "pleth/partition.hpp"
#include "pleth/symfunc.hpp"

namespace pleth {

// Output of a closed hook+column formula: positive coefficients on valid
// hook+column partitions of the stated degree.
struct HCFormulaOutput {
    unsigned degree = 0;
    std::vector<std::pair<Partition, BigInt>> terms;  // decreasing lex order
    std::string provenance;

    SchurExpansion to_expansion() const;
};

// Langley-Remmel: hc part of s_b o s_a = sum_{k<b} s_{(ab-2k, 2^k)}, a,b >= 2.
HCFormulaOutput langley_remmel(unsigned a, unsigned b);

// hc part of s_2 o s_b o s_a, a,b >= 2 (gamma = 0 and gamma = 1 families).
HCFormulaOutput thm_s2_sb_sa(unsigned a, unsigned b);

// hc part of s_c o s_2 o s_a, a,c >= 2 (gamma = 0 and gamma = 1 families).
HCFormulaOutput thm_sc_s2_sa(unsigned a, unsigned c);

// Signed hc expansion of p_2 o s_lam for a hook+column lam with alpha >= 2.
// Terms carry coefficient +1 or -1; shapes with a negative 1-run are dropped.
std::vector<std::pair<Partition, int>> p2_hookcolumn(const HookColumnShape& lam);

// hc part of s_mu * s_nu for hook+columns with first parts >= 2.
HCFormulaOutput hc_product(const HookColumnShape& mu, const HookColumnShape& nu);

// abc - 2(bc - 1), the flip offset of s_c o s_b o s_a when b = 2 or c = 2.
long offset_for(unsigned a, unsigned b, unsigned c);

// Reference integer sequences, generated internally:
//   A000124: (n^2+n+2)/2
//   A002620: floor((n+1)^2/4)
//   A000098: coefficients of prod_{i<=3} (1-q^i)^{-2}
//   A058696: partition counts at even arguments p(2n)
std::vector<BigInt> oeis(const std::string& id, unsigned count);

}  // namespace pleth

#endif
