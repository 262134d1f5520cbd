#ifndef DEHNFORGE_METRICS_HPP
#define DEHNFORGE_METRICS_HPP

#include <cstdlib>
#include <stdexcept>

#include "dehnforge/group_model.hpp"
#include "dehnforge/word.hpp"

namespace dehnforge {

// The three combinatorial quantities controlling the left-to-right
// alternation rewrite: an insertion count P, a block-alternation count Q and
// a suffix exponent bound R.

struct MetricsReport {
    std::size_t P = 0;
    std::size_t Q = 0;
    std::size_t R = 0;
};

namespace detail {

// Left-to-right padding pass: walk tau inserting a^{+-1} whenever the next
// letter cannot extend the alternating prefix.  Only the insertion count
// matters; the padded word does not represent the same group element and is
// discarded.
inline std::size_t alternation_padding_count(const Word& tau) {
    std::size_t inserted = 0;
    bool odd = false;  // parity of the prefix built so far
    for (Gen x : tau) {
        if (!odd) {
            if (x.sign < 0) ++inserted;  // pad with a, then take x: stays even
            else odd = true;
        } else {
            if (x.sign > 0) ++inserted;  // pad with a^-1, then take x: stays odd
            else odd = false;
        }
    }
    return inserted;
}

// Closed form: an insertion happens at step i exactly when the sign repeats
// (and at step 1 when the first letter is negative).
inline std::size_t alternation_padding_closed_form(const Word& tau) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < tau.size(); ++i) {
        bool d_i = (i == 0) ? (tau[i].sign < 0) : (tau[i].sign == tau[i - 1].sign);
        if (d_i) ++total;
    }
    return total;
}

}  // namespace detail

inline std::size_t metric_P(const Word& tau) {
    if (count_s(tau) != 0) throw SContained();
    std::size_t sim = detail::alternation_padding_count(tau);
    std::size_t closed = detail::alternation_padding_closed_form(tau);
    if (sim != closed)
        throw std::logic_error("padding-count cross-check failed on " + format_word(tau));
    return sim;
}

// Number of times b-type letters alternate with d-type letters, computed on
// the word with a, c and s letters deleted.  With t maximal same-type blocks:
// 0 when t = 0, ceil(t/2) when the first block is b-type, ceil((t+1)/2) when
// it is d-type.  Degenerate cases are fixed by this block formula.
inline std::size_t metric_Q(const Word& sigma) {
    std::size_t t = 0;
    bool have_block = false;
    Base block_base = Base::B;
    bool first_is_b = false;
    for (Gen g : sigma) {
        if (g.base != Base::B && g.base != Base::D) continue;
        if (!have_block || g.base != block_base) {
            if (!have_block) first_is_b = (g.base == Base::B);
            have_block = true;
            block_base = g.base;
            ++t;
        }
    }
    if (t == 0) return 0;
    return first_is_b ? (t + 1) / 2 : (t + 2) / 2;
}

// Maximum over all suffixes of the absolute exponent sum.
inline std::size_t metric_R(const Word& sigma) {
    long long run = 0;
    long long best = 0;
    for (auto it = sigma.letters.rbegin(); it != sigma.letters.rend(); ++it) {
        run += it->sign;
        best = std::max(best, std::llabs(run));
    }
    return static_cast<std::size_t>(best);
}

inline MetricsReport metrics(const Word& w) {
    MetricsReport r;
    r.Q = metric_Q(w);
    r.R = metric_R(w);
    if (count_s(w) == 0) r.P = metric_P(w);
    return r;
}

}  // namespace dehnforge

#endif  // DEHNFORGE_METRICS_HPP
