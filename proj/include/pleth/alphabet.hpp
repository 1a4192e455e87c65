#ifndef PLETH_ALPHABET_HPP
#define PLETH_ALPHABET_HPP

#include <map>
#include <utility>
#include <vector>

#include "pleth/hcseq.hpp"
#include "pleth/partition.hpp"
#include "pleth/symfunc.hpp"

namespace pleth {

// Exact bivariate polynomial with rational coefficients, dense over its
// degree box. Zero outside; intermediate sums may be rational, checkpoints
// assert integrality.
class BivariatePoly {
  public:
    BivariatePoly() : BivariatePoly(0, 0) {}
    BivariatePoly(unsigned deg_x, unsigned deg_y);

    static BivariatePoly one();

    unsigned deg_x() const { return dx_; }
    unsigned deg_y() const { return dy_; }

    const BigRational& coeff(unsigned i, unsigned j) const;
    void set(unsigned i, unsigned j, BigRational v);
    void add(unsigned i, unsigned j, const BigRational& v);

    void add_scaled(const BivariatePoly& other, const BigRational& scale);
    void scale(const BigRational& c);

    bool is_zero() const;
    bool is_integral() const;

    // Drops all-zero top rows/columns. Equality is modulo trailing zeros.
    void trim();
    bool operator==(const BivariatePoly& other) const;

    // Exact division by (1 - x) resp. (1 - y); throws on nonzero remainder.
    BivariatePoly divide_exact_1mx() const;
    BivariatePoly divide_exact_1my() const;

  private:
    unsigned dx_, dy_;
    std::vector<BigRational> c_;  // (dx_+1) * (dy_+1), row-major in x

    std::size_t at(unsigned i, unsigned j) const { return std::size_t(i) * (dy_ + 1) + j; }
};

// A signed alphabet: a formal sum of monomials epsilon * x^a y^b with
// epsilon = +-1, e.g. 1 - x - y or 1 - x - y + xy.
struct AlphabetTerm {
    int sign = 1;
    unsigned xe = 0;
    unsigned ye = 0;
};
using SignedAlphabet = std::vector<AlphabetTerm>;

const SignedAlphabet& alphabet_1mxmy();      // 1 - x - y
const SignedAlphabet& alphabet_1mxmy_pxy();  // 1 - x - y + xy

// p_lam on the alphabet: product over parts of sum_t sign_t x^{k a_t} y^{k b_t}.
BivariatePoly eval_p_on(const Partition& lam, const SignedAlphabet& alphabet);
inline BivariatePoly eval_p_on_1mxmy(const Partition& lam) {
    return eval_p_on(lam, alphabet_1mxmy());
}

// Linear extension to a homogeneous PSeries; asserts the result is integral.
BivariatePoly eval_on(const PSeries& f, const SignedAlphabet& alphabet, unsigned threads = 1);
inline BivariatePoly eval_on_1mxmy(const PSeries& f, unsigned threads = 1) {
    return eval_on(f, alphabet_1mxmy(), threads);
}

// All hook+column coefficients of f recovered at once from P = f[1-x-y]:
// divide exactly by (1-x)(1-y), then a_{beta,gamma} =
// (-1)^{a+b} (c_{a,b} - c_{a+1,b-1}) with a = beta+gamma, b = beta.
// Throws on inexact division (the precondition [1^n] f = 0 failed).
using HCCoefficients = std::map<std::pair<unsigned, unsigned>, BigInt>;
HCCoefficients hc_extract(const BivariatePoly& P, unsigned n);

HCSequence hc_row_from(const HCCoefficients& coeffs, unsigned n, unsigned gamma);
SchurExpansion hc_expansion_from(const HCCoefficients& coeffs, unsigned n);

// Closed form for s_{(alpha, 2^beta, 1^gamma)}[1-x-y] with alpha >= 2:
// (-1)^gamma (xy)^beta (1-x)(1-y) (x^{gamma+1}-y^{gamma+1})/(x-y).
BivariatePoly hc_eval_closed_1mxmy(const HookColumnShape& shape);

// Closed form for s_n[(1-x)(1-y)] = (1-x)(1-y)(1-(xy)^n)/(1-xy), n >= 1.
BivariatePoly row_eval_closed_1mx1my(unsigned n);

// The combinatorial symbol chi^k(lam) for lam |- c: for k <= c/2 the sum
// over mu |- k of prod_i binom(m_i(lam), m_i(mu)); extended by
// chi^k = chi^{c-k} and zero beyond c.
BigInt chi_k_symbol(unsigned k, const Partition& lam);

}  // namespace pleth

#endif
