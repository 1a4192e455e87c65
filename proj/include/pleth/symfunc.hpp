#ifndef PLETH_SYMFUNC_HPP
#define PLETH_SYMFUNC_HPP

#include <functional>
#include <map>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "pleth/partition.hpp"
#include "pleth/rational.hpp"

namespace pleth {

// Memoized symmetric-group characters chi^lam(mu), computed by the
// Murnaghan-Nakayama border-strip recursion (largest part of mu removed
// first). Concurrent-read / synchronized-insert: safe to share across
// projection worker threads.
class CharacterTable {
  public:
    BigInt character(const Partition& lam, const Partition& mu) const;
    std::size_t cache_size() const;

  private:
    BigInt recurse(const std::vector<unsigned>& shape, const std::vector<unsigned>& mu,
                   std::size_t idx) const;

    mutable std::unordered_map<std::string, BigInt> memo_;
    mutable std::shared_mutex mutex_;
};

// Homogeneous expansion in the power-sum basis with exact rational
// coefficients. Keys all have weight = degree; zero coefficients are never
// stored. Iteration order is decreasing lexicographic.
class PSeries {
  public:
    using TermMap = std::map<Partition, BigRational, DecLex>;

    PSeries() = default;
    explicit PSeries(unsigned degree) : degree_(degree) {}

    static PSeries unit();  // degree 0, constant 1

    unsigned degree() const { return degree_; }
    const TermMap& terms() const { return terms_; }
    bool zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    BigRational coeff(const Partition& mu) const;

    void add(const Partition& mu, const BigRational& c);
    PSeries& operator+=(const PSeries& other);
    PSeries& operator-=(const PSeries& other);
    void scale(const BigRational& c);

    bool operator==(const PSeries&) const = default;

  private:
    unsigned degree_ = 0;
    TermMap terms_;
};

PSeries p_multiply(const PSeries& f, const PSeries& g);

// omega involution: p_lam -> (-1)^{|lam| - length(lam)} p_lam.
PSeries omega(const PSeries& f);

// Homogeneous expansion in the Schur basis with exact integer coefficients.
class SchurExpansion {
  public:
    using TermMap = std::map<Partition, BigInt, DecLex>;

    SchurExpansion() = default;
    explicit SchurExpansion(unsigned degree) : degree_(degree) {}

    unsigned degree() const { return degree_; }
    const TermMap& terms() const { return terms_; }
    bool zero() const { return terms_.empty(); }
    BigInt coeff(const Partition& mu) const;

    void add(const Partition& mu, const BigInt& c);

    // Terms whose index is a hook+column partition.
    SchurExpansion hook_column_part() const;

    // Flat JSON object: {"degree": n, "<partition>": coeff, ...} with keys in
    // decreasing lexicographic order.
    std::string to_json() const;

    bool operator==(const SchurExpansion&) const = default;

  private:
    unsigned degree_ = 0;
    TermMap terms_;
};

// s_lam = sum_{mu |- n} chi^lam(mu)/z_mu p_mu.
PSeries schur_to_p(const Partition& lam, const CharacterTable& chars);

// PSeries for an integer-coefficient Schur expansion.
PSeries schur_expansion_to_p(const SchurExpansion& f, const CharacterTable& chars);

// Hall projection [s_lam] f = sum_mu c_mu chi^lam(mu), over all lam |- deg f
// or only those accepted by `restrict`. Every produced coefficient is
// checked to be integral (hard error otherwise). Parallelizes over target
// partitions; reduction order is deterministic.
SchurExpansion p_to_schur(const PSeries& f, const CharacterTable& chars,
                          const std::function<bool(const Partition&)>& restrict_to = nullptr,
                          unsigned threads = 1);

// Same projection, but the caller supplies the target list explicitly.
SchurExpansion project_onto(const PSeries& f, const std::vector<Partition>& targets,
                            const CharacterTable& chars, unsigned threads = 1);

// Product of Schur expansions via the p-basis roundtrip.
SchurExpansion schur_product(const SchurExpansion& a, const SchurExpansion& b,
                             const CharacterTable& chars, unsigned threads = 1);

}  // namespace pleth

#endif
