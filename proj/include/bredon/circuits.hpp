#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bredon/characters.hpp"

namespace bredon {

using BigInt = boost::multiprecision::cpp_int;

/// Minimally dependent set of nontrivial characters: the members sum to
/// zero and every proper subset is independent. Members strictly ascending.
struct Circuit {
    std::vector<Character> members;
    friend bool operator==(const Circuit&, const Circuit&) = default;
};

/// True iff t is a circuit: rank(t) == |t| - 1 and the members sum to zero.
/// Members must be nonzero and pairwise distinct.
bool is_minimally_dependent(std::span<const Character> t, std::uint32_t rank);

/// Streams the circuits of rank r exactly once each, in lexicographic order
/// of member lists. A circuit of size k+1 is produced from the independent
/// set of its k smaller members by appending their sum, which is its
/// largest member; the depth-first walk therefore never emits duplicates
/// and needs no dedup table.
class CircuitEnumerator {
public:
    explicit CircuitEnumerator(std::uint32_t rank,
                               std::optional<std::uint32_t> max_size = std::nullopt);
    /// Restricts the stream to circuits whose smallest member is `first`;
    /// this is the unit of work for parallel partitioning.
    CircuitEnumerator(std::uint32_t rank, std::optional<std::uint32_t> max_size, Character first);

    /// Fills `out` with the next circuit's members; false when exhausted.
    bool next(std::vector<Character>& out);
    std::optional<Circuit> next();

private:
    bool span_test(std::size_t level, std::uint32_t x) const;
    void push(std::uint32_t x);
    void pop();

    std::uint32_t limit_ = 0;       // 2^rank
    std::uint32_t max_members_ = 0; // largest independent-prefix size we descend to
    std::uint32_t emit_cap_ = 0;    // largest circuit size we emit
    std::size_t span_words_ = 1;
    std::optional<std::uint32_t> fixed_first_;
    bool done_ = false;

    std::vector<std::uint32_t> members_;
    std::vector<std::uint32_t> xors_;            // xors_[k] = xor of members_[0..k)
    std::vector<std::uint64_t> spans_;           // span_words_ words per level
    std::vector<std::uint32_t> cursor_;          // next candidate per level
};

struct CircuitCounts {
    BigInt total;
    std::vector<std::pair<std::uint32_t, BigInt>> by_size;  // (circuit size, count), ascending
};

/// Exact circuit counts from the falling-product formula
///   #circuits of size k+1 = (2^r-1)(2^r-2)...(2^r-2^(k-1)) / (k+1)!
/// summed over 2 <= k <= r. Big-integer arithmetic throughout.
CircuitCounts count_circuits_closed_form(std::uint32_t rank);

/// Visits every circuit once. With threads > 1 the stream is partitioned by
/// smallest member, visit order becomes nondeterministic, and `visit` must
/// be thread-safe.
void for_each_circuit(std::uint32_t rank, std::optional<std::uint32_t> max_size, unsigned threads,
                      const std::function<void(std::span<const Character>)>& visit);

/// by_size[s] counts enumerated circuits of size s (entries below 3 stay 0).
std::vector<std::uint64_t> count_circuits_by_enumeration(std::uint32_t rank,
                                                         std::optional<std::uint32_t> max_size,
                                                         unsigned threads);

}  // namespace bredon
