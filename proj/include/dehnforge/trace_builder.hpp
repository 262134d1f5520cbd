#ifndef DEHNFORGE_TRACE_BUILDER_HPP
#define DEHNFORGE_TRACE_BUILDER_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dehnforge/presentation.hpp"
#include "dehnforge/word.hpp"

namespace dehnforge {

// Applies moves to an evolving word, checking legality as it goes, and
// optionally records them as a Trace.  The rewriting algorithms are written
// as tactics against this class; with recording off it doubles as a
// streaming validator, which keeps memory flat on large fillings.
class TraceBuilder {
  public:
    explicit TraceBuilder(Word start, bool record = true)
        : gw_(start), start_(std::move(start)), record_(record) {}

    std::size_t size() const { return gw_.size(); }
    Gen at(std::size_t pos) const { return gw_.at(pos); }
    Word word() const { return gw_.to_word(); }
    Word range_word(std::size_t lo, std::size_t hi) const { return gw_.range_word(lo, hi); }
    const Word& start_word() const { return start_; }
    std::uint64_t cost() const { return cost_; }
    std::uint64_t move_count() const { return applied_; }

    Trace take_trace() {
        if (!record_) throw std::logic_error("trace recording is off");
        Trace t;
        t.start = start_;
        t.moves = std::move(moves_);
        moves_.clear();
        return t;
    }

    // -- primitive moves ----------------------------------------------------

    void apply_move(const Move& m) {
        detail::apply_move(gw_, m, applied_);
        ++applied_;
        if (m.kind == MoveKind::ApplyRelator) ++cost_;
        if (record_) moves_.push_back(m);
        for (Capture& c : captures_) {
            Move rebased = m;
            if (rebased.pos <= c.base) throw std::logic_error("move escapes capture region");
            rebased.pos -= static_cast<std::uint32_t>(c.base);
            c.moves.push_back(rebased);
        }
    }

    void free_reduce_at(std::size_t pos) { apply_move(Move::free_reduce(pos)); }
    void free_expand_at(std::size_t pos, Gen g) { apply_move(Move::free_expand(pos, g)); }

    // Replaces u by v at pos, where u -> v must be a single relator move.
    void rewrite(std::size_t pos, const Word& u, const Word& v) {
        auto params = find_relator_move(u, v);
        if (!params)
            throw std::logic_error("no relator realizes " + format_word(u) + " -> " +
                                   format_word(v));
        apply_move(
            Move::apply_relator(pos, params->relator, params->rotation, params->inverted,
                                params->split));
    }

    void replay(const std::vector<Move>& moves, std::size_t offset) {
        for (Move m : moves) {
            m.pos += static_cast<std::uint32_t>(offset);
            apply_move(m);
        }
    }

    // -- capture scopes -----------------------------------------------------
    // Records the moves applied while the scope is open, with positions
    // rebased so the captured sequence can be replayed (or inverted) at a
    // different offset later.  Works whether or not global recording is on.

    void begin_capture(std::size_t base) { captures_.push_back(Capture{base, {}}); }

    std::vector<Move> end_capture() {
        std::vector<Move> out = std::move(captures_.back().moves);
        captures_.pop_back();
        return out;
    }

    // -- tactics ------------------------------------------------------------

    // Swaps the letters at pos, pos+1.  Free when they share a base;
    // one commutator application when the bases commute.
    void transpose(std::size_t pos) {
        Gen x = at(pos), y = at(pos + 1);
        if (x == y) return;  // identical letters: the word does not change
        if (y == inverse(x)) {
            free_reduce_at(pos);
            free_expand_at(pos, y);
            return;
        }
        rewrite(pos, Word{{x, y}}, Word{{y, x}});
    }

    // Stable shuffle of all {a,b} letters in [lo,hi] in front of the {c,d}
    // letters.  The range must be s-free.  Length is unchanged.
    std::size_t sort_ab_first(std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i + 1 <= hi + 1 && i <= hi; ++i) {
            Gen g = at(i);
            if (is_s(g)) throw std::logic_error("sort_ab_first: s letter in range");
            if (!is_ab(g)) continue;
            std::size_t j = i;
            while (j > lo && is_cd(at(j - 1))) {
                transpose(j - 1);
                --j;
            }
        }
        return hi;
    }

    // Full free reduction of [lo,hi]; returns the new hi (lo-1 if empty).
    std::size_t reduce_range(std::size_t lo, std::size_t hi) {
        std::size_t p = lo;
        while (p + 1 <= hi) {
            if (at(p) == inverse(at(p + 1))) {
                free_reduce_at(p);
                hi -= 2;
                if (p > lo) --p;
            } else {
                ++p;
            }
        }
        return hi;
    }

    // Replaces the segment [lo, lo+old_len) by `target`, which must represent
    // the same element of F(a,b) x F(c,d).  Both the segment and the target
    // are brought to the sorted-reduced normal form; the target's half is
    // replayed inverted.  Cost is the number of mixed inversions on each side.
    std::size_t replace_segment(std::size_t lo, std::size_t old_len, const Word& target) {
        std::size_t hi = lo + old_len - 1;
        if (old_len > 0) {
            hi = sort_ab_first(lo, hi);
            hi = reduce_range(lo, hi);
        } else {
            hi = lo - 1;
        }
        TraceBuilder scratch(target, /*record=*/true);
        if (!target.empty()) {
            std::size_t t_hi = scratch.sort_ab_first(1, target.size());
            scratch.reduce_range(1, t_hi);
        }
        Word mid = range_word(lo, hi);
        if (scratch.word() != mid)
            throw std::logic_error("replace_segment: normal forms disagree (" +
                                   format_word(scratch.word()) + " vs " + format_word(mid) + ")");
        auto [endw, inv] = invert_moves(target, scratch.moves_);
        (void)endw;
        replay(inv, lo - 1);
        return lo + target.size() - 1;
    }

  private:
    struct Capture {
        std::size_t base;
        std::vector<Move> moves;
    };

    detail::GapWord gw_;
    Word start_;
    bool record_;
    std::vector<Move> moves_;
    std::vector<Capture> captures_;
    std::uint64_t cost_ = 0;
    std::uint64_t applied_ = 0;
};

}  // namespace dehnforge

#endif  // DEHNFORGE_TRACE_BUILDER_HPP
