#ifndef DEHNFORGE_GROUP_MODEL_HPP
#define DEHNFORGE_GROUP_MODEL_HPP

#include <optional>
#include <stdexcept>
#include <utility>

#include "dehnforge/word.hpp"

namespace dehnforge {

struct SContained : std::invalid_argument {
    SContained() : std::invalid_argument("word contains s letters") {}
};

// Normal form in F(a,b) x F(c,d): the freely reduced projections to the two
// factors.  Two s-free words are equal in the group iff these agree.
struct ProductNormalForm {
    Word ab_part;
    Word cd_part;

    friend bool operator==(const ProductNormalForm&, const ProductNormalForm&) = default;
};

inline ProductNormalForm project_normal_form(const Word& w) {
    Word ab, cd;
    for (Gen g : w) {
        if (is_s(g)) throw SContained();
        if (is_ab(g))
            ab.push_back(g);
        else
            cd.push_back(g);
    }
    return ProductNormalForm{free_reduce(ab), free_reduce(cd)};
}

// The leftmost-innermost pinch: a pair (i,j), 1-based, with w[i] = s^e,
// w[j] = s^-e, only non-s letters strictly between, and the in-between word
// of exponent sum zero.  Because the stable letter commutes exactly with the
// zero-exponent-sum part of the base group, such a subword collapses to its
// interior.  Minimal j, and i is then the closest s to its left.
inline std::optional<std::pair<std::size_t, std::size_t>> find_pinch(const Word& w) {
    std::optional<std::size_t> last_s;
    long long sum_after_last_s = 0;
    for (std::size_t p = 0; p < w.size(); ++p) {
        Gen g = w[p];
        if (!is_s(g)) {
            sum_after_last_s += g.sign;
            continue;
        }
        if (last_s && w[*last_s].sign == -g.sign && sum_after_last_s == 0)
            return std::make_pair(*last_s + 1, p + 1);
        last_s = p;
        sum_after_last_s = 0;
    }
    return std::nullopt;
}

namespace detail {

// Repeatedly removes pinches; returns the s-free remainder, or nullopt if
// s letters survive (the word then lies outside the base subgroup).
inline std::optional<Word> eliminate_pinches(const Word& w) {
    Word cur = w;
    while (true) {
        auto pinch = find_pinch(cur);
        if (!pinch) break;
        auto [i, j] = *pinch;
        cur.letters.erase(cur.letters.begin() + static_cast<std::ptrdiff_t>(j - 1));
        cur.letters.erase(cur.letters.begin() + static_cast<std::ptrdiff_t>(i - 1));
    }
    if (count_s(cur) != 0) return std::nullopt;
    return cur;
}

}  // namespace detail

// Balanced: exponent sum zero and the word represents an element of the
// base subgroup <a,b,c,d>.
inline bool is_balanced(const Word& w) {
    if (exponent_sum(w) != 0) return false;
    return detail::eliminate_pinches(w).has_value();
}

inline bool is_null_homotopic(const Word& w) {
    auto base = detail::eliminate_pinches(w);
    if (!base) return false;
    ProductNormalForm nf = project_normal_form(*base);
    return nf.ab_part.empty() && nf.cd_part.empty();
}

inline bool equal_in_s(const Word& u, const Word& v) {
    return is_null_homotopic(concat(u, invert_word(v)));
}

}  // namespace dehnforge

#endif  // DEHNFORGE_GROUP_MODEL_HPP
