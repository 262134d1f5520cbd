#ifndef DEHNFORGE_WORD_HPP
#define DEHNFORGE_WORD_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace dehnforge {

// The five generators of the group. `S` is the stable letter of the
// HNN splitting; the base group is F(a,b) x F(c,d).
enum class Base : std::uint8_t { A = 0, B = 1, C = 2, D = 3, S = 4 };

constexpr char kBaseChar[5] = {'a', 'b', 'c', 'd', 's'};

// A signed generator.  sign is +1 or -1, nothing else.
struct Gen {
    Base base;
    std::int8_t sign;

    friend bool operator==(const Gen&, const Gen&) = default;
};

constexpr Gen inverse(Gen g) { return Gen{g.base, static_cast<std::int8_t>(-g.sign)}; }

constexpr bool is_s(Gen g) { return g.base == Base::S; }

// Letters a,b map to the left free factor, c,d to the right one.
constexpr bool is_ab(Gen g) { return g.base == Base::A || g.base == Base::B; }
constexpr bool is_cd(Gen g) { return g.base == Base::C || g.base == Base::D; }

inline char gen_char(Gen g) {
    char c = kBaseChar[static_cast<int>(g.base)];
    return g.sign > 0 ? c : static_cast<char>(c - 'a' + 'A');
}

// A word is a plain sequence of letters.  No implicit free reduction:
// two words are equal only when they agree letter by letter.
struct Word {
    std::vector<Gen> letters;

    Word() = default;
    explicit Word(std::vector<Gen> ls) : letters(std::move(ls)) {}
    Word(std::initializer_list<Gen> ls) : letters(ls) {}

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }
    Gen& operator[](std::size_t i) { return letters[i]; }
    const Gen& operator[](std::size_t i) const { return letters[i]; }
    void push_back(Gen g) { letters.push_back(g); }
    void append(const Word& other) {
        letters.insert(letters.end(), other.letters.begin(), other.letters.end());
    }
    Word subword(std::size_t from, std::size_t len) const {
        return Word{std::vector<Gen>(letters.begin() + static_cast<std::ptrdiff_t>(from),
                                     letters.begin() + static_cast<std::ptrdiff_t>(from + len))};
    }

    auto begin() const { return letters.begin(); }
    auto end() const { return letters.end(); }

    friend bool operator==(const Word&, const Word&) = default;
};

struct ParseError : std::runtime_error {
    std::size_t index;  // 0-based index of the offending character
    ParseError(std::string msg, std::size_t idx) : std::runtime_error(std::move(msg)), index(idx) {}
};

// Lowercase = exponent +1, uppercase = exponent -1.
inline Word parse_word(const std::string& text) {
    Word w;
    w.letters.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        std::int8_t sign = 1;
        if (c >= 'A' && c <= 'Z') {
            sign = -1;
            c = static_cast<char>(c - 'A' + 'a');
        }
        Base b;
        switch (c) {
            case 'a': b = Base::A; break;
            case 'b': b = Base::B; break;
            case 'c': b = Base::C; break;
            case 'd': b = Base::D; break;
            case 's': b = Base::S; break;
            default:
                throw ParseError("invalid character '" + std::string(1, text[i]) +
                                     "' at index " + std::to_string(i),
                                 i);
        }
        w.push_back(Gen{b, sign});
    }
    return w;
}

inline std::string format_word(const Word& w) {
    std::string out;
    out.reserve(w.size());
    for (Gen g : w) out.push_back(gen_char(g));
    return out;
}

// Unique freely reduced form: repeatedly delete adjacent inverse pairs.
inline Word free_reduce(const Word& w) {
    Word out;
    out.letters.reserve(w.size());
    for (Gen g : w) {
        if (!out.empty() && out.letters.back() == inverse(g)) {
            out.letters.pop_back();
        } else {
            out.push_back(g);
        }
    }
    return out;
}

inline long long exponent_sum(const Word& w) {
    long long s = 0;
    for (Gen g : w) s += g.sign;
    return s;
}

// Number of letters whose base lies in `bases`, either sign.
inline std::size_t letter_count(const Word& w, std::initializer_list<Base> bases) {
    std::size_t n = 0;
    for (Gen g : w)
        for (Base b : bases)
            if (g.base == b) ++n;
    return n;
}

inline std::size_t count_s(const Word& w) {
    std::size_t n = 0;
    for (Gen g : w)
        if (is_s(g)) ++n;
    return n;
}

inline Word invert_word(const Word& w) {
    Word out;
    out.letters.reserve(w.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.push_back(inverse(*it));
    return out;
}

// A word is alternating when it is a concatenation of blocks x y^-1 with
// x,y in {a,b,c,d}: even length, no s, odd positions positive, even
// positions negative (1-based).
inline bool is_alternating(const Word& w) {
    if (w.size() % 2 != 0) return false;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (is_s(w[i])) return false;
        std::int8_t want = (i % 2 == 0) ? 1 : -1;
        if (w[i].sign != want) return false;
    }
    return true;
}

inline Word concat(const Word& u, const Word& v) {
    Word out = u;
    out.append(v);
    return out;
}

}  // namespace dehnforge

#endif  // DEHNFORGE_WORD_HPP
