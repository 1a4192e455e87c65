#ifndef PLETH_ANALYTICS_HPP
#define PLETH_ANALYTICS_HPP

#include <optional>
#include <string>
#include <vector>

#include "pleth/rational.hpp"

namespace pleth {

// True iff the zero-stripped core is a palindrome (vacuously true when all
// entries vanish).
bool is_symmetric(const std::vector<BigInt>& seq);

// a_0 <= ... <= a_k >= ... >= a_n for some k.
bool is_unimodal(const std::vector<BigInt>& seq);

struct LogConcavity {
    bool log_concave = true;
    std::optional<std::size_t> first_violation;  // index into the core
};

// a_i^2 >= a_{i-1} a_{i+1} on the zero-stripped core.
LogConcavity is_log_concave(const std::vector<BigInt>& seq);

struct HistogramRow {
    std::size_t beta = 0;  // index in the original sequence
    BigInt count;
    double expected = 0.0;  // matched-Gaussian interval mass, tails absorbed
};

struct GaussianFit {
    double mean = 0.0;
    double variance = 0.0;
    double chi_square = 0.0;
    unsigned dof = 0;
    double p_value = 0.0;
};

// Chi-square fit of the index distribution against the matched Gaussian.
// Protocol (fixed; the statistics here are the only non-exact computation in
// the library):
//   - mean/variance are the exact weighted moments of the index distribution;
//   - expected masses are continuity-corrected interval probabilities
//     Phi(beta+1/2) - Phi(beta-1/2) on the zero-stripped core, with the
//     infinite tails absorbed into the end bins;
//   - at each tail, the maximal run of bins with expected mass < 5 is pooled
//     into a single end bin (one pass per tail);
//   - dof = bins - 3; the fit is unavailable when fewer than 4 bins remain,
//     when the total mass is < 1, or the sequence is shorter than 4;
//   - p-value = Q(dof/2, chi2/2), the upper regularized incomplete gamma.
// `rows`, when given, receives the per-index expected masses (pre-pooling)
// for histogram output.
std::optional<GaussianFit> gaussian_fit(const std::vector<BigInt>& seq,
                                        std::vector<HistogramRow>* rows = nullptr);

struct SequenceReport {
    std::string source;
    std::vector<BigInt> entries;
    bool symmetric = false;
    bool unimodal = false;
    LogConcavity log_concavity;
    std::optional<GaussianFit> fit;
    std::vector<HistogramRow> histogram;

    std::string to_json() const;
    std::string histogram_csv() const;  // "beta,count,expected" lines
};

SequenceReport analyze_sequence(std::string source, std::vector<BigInt> entries);

// Q(s, x): upper regularized incomplete gamma for s = dof/2, dof >= 1.
double upper_regularized_gamma_half(unsigned dof, double x);

}  // namespace pleth

#endif
