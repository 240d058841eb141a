#include "bredon/circuits.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "bredon/util.hpp"

namespace bredon {

bool is_minimally_dependent(std::span<const Character> t, std::uint32_t rank) {
    if (t.empty()) throw InvalidInput("empty character set");
    std::vector<std::uint32_t> masks;
    masks.reserve(t.size());
    std::uint32_t sum = 0;
    for (Character c : t) {
        require_character(c, rank);
        masks.push_back(c.mask);
        sum ^= c.mask;
    }
    std::vector<std::uint32_t> sorted = masks;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw InvalidInput("duplicate characters in set");
    }
    // A set of distinct nonzero vectors is a circuit iff it carries exactly
    // one dependency and that dependency involves every member.
    return sum == 0 && detail::mask_rank(masks) + 1 == masks.size();
}

CircuitEnumerator::CircuitEnumerator(std::uint32_t rank, std::optional<std::uint32_t> max_size)
    : CircuitEnumerator(rank, max_size, Character{0}) {}

CircuitEnumerator::CircuitEnumerator(std::uint32_t rank, std::optional<std::uint32_t> max_size,
                                     Character first) {
    require_rank(rank, kMaxRankEnumerate);
    limit_ = std::uint32_t{1} << rank;
    emit_cap_ = std::min<std::uint32_t>(max_size.value_or(rank + 1), rank + 1);
    max_members_ = emit_cap_ > 0 ? std::min(rank, emit_cap_ - 1) : 0;
    span_words_ = std::max<std::size_t>(1, limit_ / 64);
    if (first.mask != 0) {
        require_character(first, rank);
        fixed_first_ = first.mask;
    }
    if (emit_cap_ < 3) {
        done_ = true;
        return;
    }
    spans_.assign(span_words_, 0);
    spans_[0] = 1;  // span of the empty set is {0}
    xors_.push_back(0);
    cursor_.push_back(fixed_first_.value_or(1));
}

bool CircuitEnumerator::span_test(std::size_t level, std::uint32_t x) const {
    const std::uint64_t word = spans_[level * span_words_ + (x >> 6)];
    return (word >> (x & 63)) & 1u;
}

void CircuitEnumerator::push(std::uint32_t x) {
    const std::size_t level = members_.size();
    members_.push_back(x);
    xors_.push_back(xors_[level] ^ x);
    cursor_.push_back(x + 1);
    spans_.resize((level + 2) * span_words_);
    const std::uint64_t* src = spans_.data() + level * span_words_;
    std::uint64_t* dst = spans_.data() + (level + 1) * span_words_;
    std::copy(src, src + span_words_, dst);
    for (std::size_t w = 0; w < span_words_; ++w) {
        std::uint64_t bits = src[w];
        while (bits) {
            const std::uint32_t elem = static_cast<std::uint32_t>(w * 64) +
                                       static_cast<std::uint32_t>(std::countr_zero(bits));
            bits &= bits - 1;
            const std::uint32_t moved = elem ^ x;
            dst[moved >> 6] |= std::uint64_t{1} << (moved & 63);
        }
    }
}

void CircuitEnumerator::pop() {
    members_.pop_back();
    xors_.pop_back();
    cursor_.pop_back();
    spans_.resize((members_.size() + 1) * span_words_);
}

bool CircuitEnumerator::next(std::vector<Character>& out) {
    if (done_) return false;
    while (true) {
        const std::size_t level = members_.size();
        std::uint32_t x = cursor_[level];
        bool descended = false;
        // With a fixed first member, level 0 scans that single candidate.
        const std::uint32_t stop =
            (level == 0 && fixed_first_) ? std::min(limit_, *fixed_first_ + 1) : limit_;
        while (x < stop) {
            if (span_test(level, x)) {
                if (level >= 2 && x == xors_[level]) {
                    cursor_[level] = x + 1;
                    out.clear();
                    out.reserve(level + 1);
                    for (std::uint32_t m : members_) out.push_back(Character{m});
                    out.push_back(Character{x});
                    return true;
                }
            } else if (level < max_members_) {
                cursor_[level] = x + 1;
                push(x);
                descended = true;
                break;
            }
            ++x;
        }
        if (descended) continue;
        if (level == 0) {
            done_ = true;
            return false;
        }
        pop();
    }
}

std::optional<Circuit> CircuitEnumerator::next() {
    Circuit c;
    if (!next(c.members)) return std::nullopt;
    return c;
}

CircuitCounts count_circuits_closed_form(std::uint32_t rank) {
    require_rank(rank, kMaxRankCount);
    CircuitCounts out;
    out.total = 0;
    const BigInt pow2r = BigInt(1) << rank;
    for (std::uint32_t k = 2; k <= rank; ++k) {
        BigInt numerator = 1;
        for (std::uint32_t i = 1; i <= k; ++i) numerator *= pow2r - (BigInt(1) << (i - 1));
        BigInt factorial = 1;
        for (std::uint32_t i = 2; i <= k + 1; ++i) factorial *= i;
        if (numerator % factorial != 0) {
            throw MismatchError("circuit count is not divisible by (k+1)! at k=" +
                                std::to_string(k));
        }
        const BigInt count = numerator / factorial;
        out.by_size.emplace_back(k + 1, count);
        out.total += count;
    }
    return out;
}

void for_each_circuit(std::uint32_t rank, std::optional<std::uint32_t> max_size, unsigned threads,
                      const std::function<void(std::span<const Character>)>& visit) {
    require_rank(rank, kMaxRankEnumerate);
    if (threads <= 1) {
        CircuitEnumerator it(rank, max_size);
        std::vector<Character> buf;
        while (it.next(buf)) visit(buf);
        return;
    }
    const std::uint32_t nchars = (std::uint32_t{1} << rank) - 1;
    parallel_for_index(nchars, threads, [&](std::size_t i) {
        CircuitEnumerator it(rank, max_size, Character{static_cast<std::uint32_t>(i + 1)});
        std::vector<Character> buf;
        while (it.next(buf)) visit(buf);
    });
}

std::vector<std::uint64_t> count_circuits_by_enumeration(std::uint32_t rank,
                                                         std::optional<std::uint32_t> max_size,
                                                         unsigned threads) {
    const std::size_t slots = rank + 2;
    std::vector<std::uint64_t> tally(slots, 0);
    std::mutex mu;
    if (threads <= 1) {
        for_each_circuit(rank, max_size, 1,
                         [&](std::span<const Character> c) { ++tally[c.size()]; });
        return tally;
    }
    for_each_circuit(rank, max_size, threads, [&](std::span<const Character> c) {
        // Contention is negligible next to the walk itself.
        std::lock_guard<std::mutex> lock(mu);
        ++tally[c.size()];
    });
    return tally;
}

}  // namespace bredon
