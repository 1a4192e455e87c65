#ifndef PLETH_PARTITION_HPP
#define PLETH_PARTITION_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pleth/rational.hpp"

namespace pleth {

// A partition: weakly decreasing sequence of positive integers. The empty
// partition (weight 0) is allowed. Immutable after construction.
class Partition {
  public:
    Partition() = default;
    Partition(std::initializer_list<unsigned> parts);
    explicit Partition(std::vector<unsigned> parts);  // validates monotonicity

    // Internal fast path for callers that guarantee a valid shape.
    static Partition unchecked(std::vector<unsigned> parts);

    const std::vector<unsigned>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    unsigned weight() const { return weight_; }
    unsigned first() const { return parts_.empty() ? 0u : parts_.front(); }
    unsigned part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0u; }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    // Plain lexicographic order on parts; DecLex below is the serialization
    // order used throughout for deterministic output.
    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

  private:
    std::vector<unsigned> parts_;
    unsigned weight_ = 0;
};

// Strict weak order listing partitions in decreasing lexicographic order,
// e.g. (4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1) in map iteration order.
struct DecLex {
    bool operator()(const Partition& a, const Partition& b) const {
        return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                            a.parts().begin(), a.parts().end());
    }
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const {
        std::size_t h = 1469598103934665603ull;
        for (unsigned x : p.parts()) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Canonical decomposition of a hook+column partition (alpha, 2^beta, 1^gamma)
// with alpha taken literally as the first part; (1^5) decomposes as
// alpha=1, beta=0, gamma=4.
struct HookColumnShape {
    unsigned alpha = 0;
    unsigned beta = 0;
    unsigned gamma = 0;

    HookColumnShape() = default;
    HookColumnShape(unsigned a, unsigned b, unsigned g);  // validates

    unsigned weight() const { return alpha + 2 * beta + gamma; }
    Partition reconstruct() const;

    bool operator==(const HookColumnShape&) const = default;
};

Partition conjugate(const Partition& lam);

// Present iff every part after the first is <= 2.
std::optional<HookColumnShape> hook_column_decompose(const Partition& lam);
bool is_hook_column(const Partition& lam);

// z_lam = prod_i i^{m_i} m_i!, the centralizer order of cycle type lam.
BigInt z_of(const Partition& lam);

// (-1)^{#vertical dominoes} over any domino tiling; absent when the 2-core
// is nonempty (in particular for odd weight). Greedy rim-domino removal;
// the result is independent of removal order.
std::optional<int> two_sign(const Partition& lam);

Partition partition_sum(const Partition& lam, const Partition& mu);
Partition partition_union(const Partition& lam, const Partition& mu);

// Number of partitions of n (Euler pentagonal recurrence, memoized).
BigInt partition_count(unsigned n);

// Textual form "[6,2,2,2,1]"; exponent sugar "[6,2^3,1]" accepted on input,
// never emitted. The empty partition prints as "[]".
std::string to_string(const Partition& lam);
Partition parse_partition(std::string_view text);

// Single-consumer stream over all partitions of n in decreasing
// lexicographic order: (n), (n-1,1), ..., (1^n).
class PartitionRange {
  public:
    explicit PartitionRange(unsigned n) : n_(n) {}

    class iterator {
      public:
        using value_type = Partition;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        explicit iterator(unsigned n);

        const Partition& operator*() const { return current_; }
        const Partition* operator->() const { return &current_; }
        iterator& operator++();
        void operator++(int) { ++*this; }
        bool operator==(const iterator& o) const { return done_ == o.done_ && (done_ || current_ == o.current_); }

      private:
        Partition current_;
        bool done_ = true;
    };

    iterator begin() const { return iterator(n_); }
    iterator end() const { return iterator(); }

  private:
    unsigned n_;
};

inline PartitionRange partitions_of(unsigned n) { return PartitionRange(n); }

// All partitions of n with parts bounded by max_part, decreasing lex order.
std::vector<Partition> partitions_with_max_part(unsigned n, unsigned max_part);

}  // namespace pleth

template <>
struct std::hash<pleth::Partition> {
    std::size_t operator()(const pleth::Partition& p) const { return pleth::PartitionHash{}(p); }
};

#endif
