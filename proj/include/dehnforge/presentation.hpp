#ifndef DEHNFORGE_PRESENTATION_HPP
#define DEHNFORGE_PRESENTATION_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "dehnforge/word.hpp"

namespace dehnforge {

// ---------------------------------------------------------------------------
// Relators
// ---------------------------------------------------------------------------

// The fixed defining relators, ids 0..9.  0..3 are the commutators between
// {a,b} and {c,d}; 4..9 say that conjugates of s by any two generators agree.
inline const std::array<Word, 10>& relator_table() {
    static const std::array<Word, 10> table = {
        parse_word("ACac"),    // [a,c]
        parse_word("ADad"),    // [a,d]
        parse_word("BCbc"),    // [b,c]
        parse_word("BDbd"),    // [b,d]
        parse_word("AsaBSb"),  // s^a s^-b
        parse_word("AsaCSc"),  // s^a s^-c
        parse_word("AsaDSd"),  // s^a s^-d
        parse_word("BsbCSc"),  // s^b s^-c
        parse_word("BsbDSd"),  // s^b s^-d
        parse_word("CscDSd"),  // s^c s^-d
    };
    return table;
}

inline Word rotate_word(const Word& w, std::size_t k) {
    if (w.empty()) return w;
    k %= w.size();
    Word out;
    out.letters.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out.push_back(w[(i + k) % w.size()]);
    return out;
}

// The relator word selected by an ApplyRelator move: rotate, then invert.
inline Word relator_variant(std::uint8_t id, std::uint8_t rotation, bool inverted) {
    Word rho = rotate_word(relator_table()[id], rotation);
    return inverted ? invert_word(rho) : rho;
}

// ---------------------------------------------------------------------------
// Moves and traces
// ---------------------------------------------------------------------------

enum class MoveKind : std::uint8_t { FreeReduce, FreeExpand, ApplyRelator };

// All positions are 1-based, matching the external trace format.
struct Move {
    std::uint32_t pos = 0;
    MoveKind kind = MoveKind::FreeReduce;
    Gen letter{Base::A, 1};    // FreeExpand only
    std::uint8_t relator = 0;  // ApplyRelator only
    std::uint8_t rotation = 0;
    bool inverted = false;
    std::uint8_t split = 0;

    static Move free_reduce(std::size_t pos) {
        Move m;
        m.pos = static_cast<std::uint32_t>(pos);
        m.kind = MoveKind::FreeReduce;
        return m;
    }
    static Move free_expand(std::size_t pos, Gen g) {
        Move m;
        m.pos = static_cast<std::uint32_t>(pos);
        m.kind = MoveKind::FreeExpand;
        m.letter = g;
        return m;
    }
    static Move apply_relator(std::size_t pos, std::uint8_t id, std::uint8_t rot, bool inv,
                              std::uint8_t split) {
        Move m;
        m.pos = static_cast<std::uint32_t>(pos);
        m.kind = MoveKind::ApplyRelator;
        m.relator = id;
        m.rotation = rot;
        m.inverted = inv;
        m.split = split;
        return m;
    }

    friend bool operator==(const Move&, const Move&) = default;
};

// A certified rewriting sequence: a start word plus moves.  Intermediate
// words are regenerated on replay, never stored.
struct Trace {
    Word start;
    std::vector<Move> moves;
};

struct IllegalMove : std::runtime_error {
    std::size_t move_index;
    IllegalMove(std::size_t idx, const std::string& reason)
        : std::runtime_error("illegal move at index " + std::to_string(idx) + ": " + reason),
          move_index(idx) {}
};

struct EndpointMismatch : std::runtime_error {
    EndpointMismatch() : std::runtime_error("trace endpoints do not match") {}
};

// For an ApplyRelator move, the subword u it consumes and the replacement v.
// rho = u . vbar with u the first `split` letters; v = vbar^-1, so u = v in
// the group because rho is a relator conjugate.
inline std::pair<Word, Word> relator_move_words(const Move& m) {
    Word rho = relator_variant(m.relator, m.rotation, m.inverted);
    Word u = rho.subword(0, m.split);
    Word vbar = rho.subword(m.split, rho.size() - m.split);
    return {u, invert_word(vbar)};
}

namespace detail {

// Gap-buffer word.  Moves emitted by the rewriting algorithms are strongly
// local, so keeping a cursor makes replay of multi-million-move traces cheap.
class GapWord {
  public:
    GapWord() = default;
    explicit GapWord(const Word& w) : left_(w.letters) {}

    std::size_t size() const { return left_.size() + right_.size(); }

    // 1-based, no cursor movement
    Gen at(std::size_t pos) const {
        if (pos <= left_.size()) return left_[pos - 1];
        return right_[right_.size() - (pos - left_.size())];
    }

    void seek(std::size_t n) {
        while (left_.size() > n) {
            right_.push_back(left_.back());
            left_.pop_back();
        }
        while (left_.size() < n) {
            left_.push_back(right_.back());
            right_.pop_back();
        }
    }

    // erase `n` letters starting at 1-based `pos`
    void erase(std::size_t pos, std::size_t n) {
        seek(pos - 1 + n);
        left_.resize(left_.size() - n);
    }

    void insert(std::size_t pos, const Word& w) {
        seek(pos - 1);
        left_.insert(left_.end(), w.letters.begin(), w.letters.end());
    }

    Word to_word() const {
        Word out;
        out.letters.reserve(size());
        out.letters.insert(out.letters.end(), left_.begin(), left_.end());
        out.letters.insert(out.letters.end(), right_.rbegin(), right_.rend());
        return out;
    }

    Word range_word(std::size_t lo, std::size_t hi) const {
        Word out;
        if (hi < lo) return out;
        out.letters.reserve(hi - lo + 1);
        for (std::size_t p = lo; p <= hi; ++p) out.push_back(at(p));
        return out;
    }

  private:
    std::vector<Gen> left_;
    std::vector<Gen> right_;  // stored reversed; right_.back() is letter left_.size()+1
};

inline void check_relator_params(const Move& m, std::size_t idx) {
    if (m.relator > 9) throw IllegalMove(idx, "relator id out of range");
    std::size_t len = relator_table()[m.relator].size();
    if (m.rotation >= len) throw IllegalMove(idx, "rotation out of range");
    if (m.split > len) throw IllegalMove(idx, "split out of range");
}

inline void apply_move(GapWord& w, const Move& m, std::size_t idx) {
    std::size_t pos = m.pos;
    switch (m.kind) {
        case MoveKind::FreeReduce: {
            if (pos < 1 || pos + 1 > w.size()) throw IllegalMove(idx, "position out of range");
            if (w.at(pos) != inverse(w.at(pos + 1)))
                throw IllegalMove(idx, "not an inverse pair");
            w.erase(pos, 2);
            break;
        }
        case MoveKind::FreeExpand: {
            if (pos < 1 || pos > w.size() + 1) throw IllegalMove(idx, "position out of range");
            Word pair{{m.letter, inverse(m.letter)}};
            w.insert(pos, pair);
            break;
        }
        case MoveKind::ApplyRelator: {
            check_relator_params(m, idx);
            auto [u, v] = relator_move_words(m);
            if (pos < 1 || pos - 1 + u.size() > w.size())
                throw IllegalMove(idx, "position out of range");
            for (std::size_t i = 0; i < u.size(); ++i)
                if (w.at(pos + i) != u[i])
                    throw IllegalMove(idx, "subword does not match relator");
            w.erase(pos, u.size());
            w.insert(pos, v);
            break;
        }
    }
}

// The move undoing `m` when the current word is `w` (before applying `m`).
inline Move inverse_of(const GapWord& w, const Move& m) {
    switch (m.kind) {
        case MoveKind::FreeReduce:
            return Move::free_expand(m.pos, w.at(m.pos));
        case MoveKind::FreeExpand:
            return Move::free_reduce(m.pos);
        case MoveKind::ApplyRelator: {
            std::size_t len = relator_table()[m.relator].size();
            return Move::apply_relator(m.pos, m.relator, m.rotation, !m.inverted,
                                       static_cast<std::uint8_t>(len - m.split));
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace detail

struct ValidationResult {
    Word end;
    std::uint64_t cost = 0;
};

// Replays every move, checking legality; the cost is the number of
// ApplyRelator moves.
inline ValidationResult validate_trace(const Trace& t) {
    detail::GapWord w(t.start);
    std::uint64_t cost = 0;
    for (std::size_t i = 0; i < t.moves.size(); ++i) {
        detail::apply_move(w, t.moves[i], i);
        if (t.moves[i].kind == MoveKind::ApplyRelator) ++cost;
    }
    return ValidationResult{w.to_word(), cost};
}

inline std::uint64_t trace_cost(const Trace& t) {
    std::uint64_t c = 0;
    for (const Move& m : t.moves)
        if (m.kind == MoveKind::ApplyRelator) ++c;
    return c;
}

inline Trace compose_traces(const Trace& t1, const Trace& t2) {
    if (validate_trace(t1).end != t2.start) throw EndpointMismatch();
    Trace out;
    out.start = t1.start;
    out.moves = t1.moves;
    out.moves.insert(out.moves.end(), t2.moves.begin(), t2.moves.end());
    return out;
}

// Inverts a legal move sequence; returns the word it ends at and the
// reversed inverse moves (from the end word back to `start`).
inline std::pair<Word, std::vector<Move>> invert_moves(const Word& start,
                                                       const std::vector<Move>& moves) {
    detail::GapWord w(start);
    std::vector<Move> inv;
    inv.reserve(moves.size());
    for (std::size_t i = 0; i < moves.size(); ++i) {
        inv.push_back(detail::inverse_of(w, moves[i]));
        detail::apply_move(w, moves[i], i);
    }
    std::reverse(inv.begin(), inv.end());
    return {w.to_word(), std::move(inv)};
}

// A valid trace from validate_trace(t).end back to t.start, same cost.
inline Trace invert_trace(const Trace& t) {
    auto [end, inv] = invert_moves(t.start, t.moves);
    Trace out;
    out.start = std::move(end);
    out.moves = std::move(inv);
    return out;
}

// Same trace acting inside prefix . start . suffix.
inline Trace embed_trace(const Trace& t, const Word& prefix, const Word& suffix) {
    Trace out;
    out.start = concat(concat(prefix, t.start), suffix);
    out.moves = t.moves;
    for (Move& m : out.moves) m.pos += static_cast<std::uint32_t>(prefix.size());
    return out;
}

// ---------------------------------------------------------------------------
// Trace file format (line oriented ASCII)
//   line 1: start word
//   then one move per line:
//     F <pos> | E <pos> <letter> | R <pos> <id> <rot> <inv:0|1> <split>
// ---------------------------------------------------------------------------

inline void write_trace(std::ostream& os, const Trace& t) {
    os << format_word(t.start) << '\n';
    for (const Move& m : t.moves) {
        switch (m.kind) {
            case MoveKind::FreeReduce:
                os << "F " << m.pos << '\n';
                break;
            case MoveKind::FreeExpand:
                os << "E " << m.pos << ' ' << gen_char(m.letter) << '\n';
                break;
            case MoveKind::ApplyRelator:
                os << "R " << m.pos << ' ' << int(m.relator) << ' ' << int(m.rotation) << ' '
                   << (m.inverted ? 1 : 0) << ' ' << int(m.split) << '\n';
                break;
        }
    }
}

inline void write_trace_file(const std::string& path, const Trace& t) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    write_trace(os, t);
}

inline Trace read_trace(std::istream& is) {
    Trace t;
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("trace file: missing start word line");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    t.start = parse_word(line);
    std::size_t lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream ss(line);
        char tag;
        ss >> tag;
        auto fail = [&]() -> void {
            throw std::runtime_error("trace file: bad move on line " + std::to_string(lineno));
        };
        if (tag == 'F') {
            std::uint64_t pos;
            if (!(ss >> pos)) fail();
            t.moves.push_back(Move::free_reduce(pos));
        } else if (tag == 'E') {
            std::uint64_t pos;
            char c;
            if (!(ss >> pos >> c)) fail();
            Word g = parse_word(std::string(1, c));
            t.moves.push_back(Move::free_expand(pos, g[0]));
        } else if (tag == 'R') {
            std::uint64_t pos;
            int id, rot, inv, split;
            if (!(ss >> pos >> id >> rot >> inv >> split)) fail();
            t.moves.push_back(Move::apply_relator(pos, static_cast<std::uint8_t>(id),
                                                  static_cast<std::uint8_t>(rot), inv != 0,
                                                  static_cast<std::uint8_t>(split)));
        } else {
            fail();
        }
    }
    return t;
}

inline Trace read_trace_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    return read_trace(is);
}

// ---------------------------------------------------------------------------
// Lookup of relator moves by effect.  Maps (u, v), with u -> v a legal
// replacement, to its ApplyRelator parameters.  Covers commutations of
// adjacent letters, s-crossings of alternating pairs and bare insertions.
// ---------------------------------------------------------------------------

struct RelatorMoveParams {
    std::uint8_t relator;
    std::uint8_t rotation;
    bool inverted;
    std::uint8_t split;
};

inline const std::unordered_map<std::string, RelatorMoveParams>& relator_move_table() {
    static const auto table = [] {
        std::unordered_map<std::string, RelatorMoveParams> t;
        for (std::uint8_t id = 0; id < 10; ++id) {
            std::size_t len = relator_table()[id].size();
            for (std::uint8_t rot = 0; rot < len; ++rot) {
                for (int inv = 0; inv < 2; ++inv) {
                    Word rho = relator_variant(id, rot, inv != 0);
                    for (std::uint8_t split = 0; split <= len; ++split) {
                        Word u = rho.subword(0, split);
                        Word v = invert_word(rho.subword(split, len - split));
                        std::string key = format_word(u) + "|" + format_word(v);
                        t.emplace(key, RelatorMoveParams{id, rot, inv != 0, split});
                    }
                }
            }
        }
        return t;
    }();
    return table;
}

inline std::optional<RelatorMoveParams> find_relator_move(const Word& u, const Word& v) {
    auto& table = relator_move_table();
    auto it = table.find(format_word(u) + "|" + format_word(v));
    if (it == table.end()) return std::nullopt;
    return it->second;
}

}  // namespace dehnforge

#endif  // DEHNFORGE_PRESENTATION_HPP
