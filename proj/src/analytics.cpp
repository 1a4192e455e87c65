#include "pleth/analytics.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pleth {

namespace {

std::pair<std::size_t, std::size_t> core_range(const std::vector<BigInt>& seq) {
    std::size_t lo = 0, hi = seq.size();
    while (lo < hi && seq[lo] == 0) ++lo;
    while (hi > lo && seq[hi - 1] == 0) --hi;
    return {lo, hi};
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

}  // namespace

bool is_symmetric(const std::vector<BigInt>& seq) {
    auto [lo, hi] = core_range(seq);
    while (lo + 1 < hi) {
        if (seq[lo] != seq[hi - 1]) return false;
        ++lo;
        --hi;
    }
    return true;
}

bool is_unimodal(const std::vector<BigInt>& seq) {
    std::size_t i = 0;
    while (i + 1 < seq.size() && seq[i] <= seq[i + 1]) ++i;
    while (i + 1 < seq.size() && seq[i] >= seq[i + 1]) ++i;
    return seq.empty() || i == seq.size() - 1;
}

LogConcavity is_log_concave(const std::vector<BigInt>& seq) {
    auto [lo, hi] = core_range(seq);
    for (std::size_t i = lo + 1; i + 1 < hi; ++i)
        if (seq[i] * seq[i] < seq[i - 1] * seq[i + 1]) return {false, i - lo};
    return {true, std::nullopt};
}

double upper_regularized_gamma_half(unsigned dof, double x) {
    if (dof < 1) throw std::invalid_argument("upper_regularized_gamma_half: dof >= 1 required");
    if (x <= 0) return 1.0;
    // Q(s+1, x) = Q(s, x) + x^s e^{-x} / Gamma(s+1), seeded at s = 1/2 or 1.
    double s, q;
    if (dof % 2 == 1) {
        s = 0.5;
        q = std::erfc(std::sqrt(x));
    } else {
        s = 1.0;
        q = std::exp(-x);
    }
    const double target = dof / 2.0;
    while (s + 0.5 < target + 0.25) {
        q += std::pow(x, s) * std::exp(-x) / std::tgamma(s + 1.0);
        s += 1.0;
    }
    return std::min(1.0, q);
}

std::optional<GaussianFit> gaussian_fit(const std::vector<BigInt>& seq,
                                        std::vector<HistogramRow>* rows) {
    if (rows) rows->clear();
    if (seq.size() < 4) return std::nullopt;
    auto [lo, hi] = core_range(seq);
    if (lo >= hi) return std::nullopt;

    BigInt mass(0), first_moment(0), second_moment(0);
    for (std::size_t i = lo; i < hi; ++i) {
        mass += seq[i];
        first_moment += BigInt(static_cast<unsigned long>(i)) * seq[i];
        second_moment += BigInt(static_cast<unsigned long>(i * i)) * seq[i];
    }
    if (mass < 1) return std::nullopt;

    const double n = mass.get_d();
    const double mean = first_moment.get_d() / n;
    const double variance = second_moment.get_d() / n - mean * mean;
    if (!(variance > 0)) return std::nullopt;
    const double sd = std::sqrt(variance);

    // Continuity-corrected interval masses over the core, tails absorbed.
    const std::size_t bins_in = hi - lo;
    std::vector<double> expected(bins_in);
    std::vector<double> observed(bins_in);
    for (std::size_t k = 0; k < bins_in; ++k) {
        const double idx = static_cast<double>(lo + k);
        const double up = (k + 1 == bins_in) ? 1.0 : normal_cdf((idx + 0.5 - mean) / sd);
        const double down = (k == 0) ? 0.0 : normal_cdf((idx - 0.5 - mean) / sd);
        expected[k] = n * (up - down);
        observed[k] = seq[lo + k].get_d();
        if (rows) rows->push_back({lo + k, seq[lo + k], expected[k]});
    }

    // Pool each tail's maximal run of under-5 bins into one end bin.
    std::size_t left_run = 0;
    while (left_run < bins_in && expected[left_run] < 5.0) ++left_run;
    if (left_run == bins_in) return std::nullopt;  // everything pooled away
    std::size_t right_run = 0;
    while (right_run < bins_in - left_run && expected[bins_in - 1 - right_run] < 5.0)
        ++right_run;

    std::vector<double> exp_bins, obs_bins;
    auto flush = [&](std::size_t from, std::size_t to) {  // [from, to)
        double e = 0, o = 0;
        for (std::size_t k = from; k < to; ++k) {
            e += expected[k];
            o += observed[k];
        }
        exp_bins.push_back(e);
        obs_bins.push_back(o);
    };
    if (left_run > 0) flush(0, left_run);
    for (std::size_t k = left_run; k < bins_in - right_run; ++k) flush(k, k + 1);
    if (right_run > 0) flush(bins_in - right_run, bins_in);

    if (exp_bins.size() < 4) return std::nullopt;  // too few bins after merging
    const unsigned dof = static_cast<unsigned>(exp_bins.size()) - 3;

    double chi2 = 0;
    for (std::size_t k = 0; k < exp_bins.size(); ++k) {
        const double d = obs_bins[k] - exp_bins[k];
        chi2 += d * d / exp_bins[k];
    }

    GaussianFit fit;
    fit.mean = mean;
    fit.variance = variance;
    fit.chi_square = chi2;
    fit.dof = dof;
    fit.p_value = upper_regularized_gamma_half(dof, chi2 / 2.0);
    return fit;
}

SequenceReport analyze_sequence(std::string source, std::vector<BigInt> entries) {
    SequenceReport report;
    report.source = std::move(source);
    report.entries = std::move(entries);
    report.symmetric = is_symmetric(report.entries);
    report.unimodal = is_unimodal(report.entries);
    report.log_concavity = is_log_concave(report.entries);
    report.fit = gaussian_fit(report.entries, &report.histogram);

    // Cross-check: log-concavity implies unimodality on positive cores.
    auto [lo, hi] = core_range(report.entries);
    bool positive_core = lo < hi;
    for (std::size_t i = lo; i < hi; ++i)
        if (report.entries[i] <= 0) positive_core = false;
    if (positive_core && report.log_concavity.log_concave) assert(report.unimodal);

    return report;
}

std::string SequenceReport::to_json() const {
    std::ostringstream out;
    out << "{\"source\":\"" << source << "\",\"entries\":[";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) out << ',';
        out << entries[i].get_str();
    }
    out << "],\"symmetric\":" << (symmetric ? "true" : "false")
        << ",\"unimodal\":" << (unimodal ? "true" : "false")
        << ",\"log_concave\":" << (log_concavity.log_concave ? "true" : "false");
    out << ",\"first_violation\":";
    if (log_concavity.first_violation)
        out << *log_concavity.first_violation;
    else
        out << "null";
    out << ",\"fit\":";
    if (fit) {
        out.precision(17);
        out << "{\"mean\":" << fit->mean << ",\"variance\":" << fit->variance
            << ",\"chi_square\":" << fit->chi_square << ",\"dof\":" << fit->dof
            << ",\"p_value\":" << fit->p_value << "}";
    } else {
        out << "null";
    }
    out << "}";
    return out.str();
}

std::string SequenceReport::histogram_csv() const {
    std::ostringstream out;
    out << "beta,count,expected\n";
    out.precision(12);
    for (const auto& row : histogram)
        out << row.beta << ',' << row.count.get_str() << ',' << row.expected << '\n';
    return out.str();
}

}  // namespace pleth
