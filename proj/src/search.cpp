#include "addiword/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>

#include "addiword/detectors.hpp"
#include "addiword/parallel.hpp"

namespace addiword {

namespace {

constexpr std::size_t kMaxDepthBudget = 20'000;  // also bounds DFS recursion depth
constexpr std::size_t kSplitDepth = 3;       // subtree fan-out depth for workers
constexpr std::size_t kMaxSubtrees = 4096;   // shrink the split when t^d exceeds this
constexpr std::uint64_t kKillCheckMask = 1023;

void validate(const SearchConfig& cfg) {
    if (cfg.alphabet.size() == 0) throw DomainError("search needs a non-empty alphabet");
    if (cfg.depth_budget == 0 || cfg.node_budget == 0)
        throw DomainError("budgets must be positive");
    if (cfg.depth_budget > kMaxDepthBudget)
        throw DomainError("depth budget beyond the supported range");
}

struct RunStats {
    std::uint64_t nodes = 0;
    bool node_capped = false;
    bool depth_capped = false;
    bool killed = false;
    std::size_t maxlen = 0;
    std::vector<Letter> witness;
};

// Canonical lexicographic DFS below the current state. Node accounting and
// stop rules are the single source of truth for both engines: the first
// word of length depth_budget ends the search, and the node that would
// exceed node_budget is never visited.
class DfsRunner {
public:
    DfsRunner(SearchState& state, std::size_t depth_budget, std::uint64_t node_budget,
              const std::atomic<std::size_t>* kill_below, std::size_t ordinal)
        : st_(state),
          depth_budget_(depth_budget),
          node_budget_(node_budget),
          kill_below_(kill_below),
          ordinal_(ordinal) {}

    void run(RunStats& rs) {
        rs.maxlen = std::max(rs.maxlen, st_.size());
        if (rs.witness.empty() && rs.maxlen == st_.size()) rs.witness = st_.letters();
        dfs(rs);
    }

private:
    bool aborted(RunStats& rs) {
        if (kill_below_ && (rs.nodes & kKillCheckMask) == 0 &&
            kill_below_->load(std::memory_order_relaxed) < ordinal_) {
            rs.killed = true;
        }
        return rs.killed || rs.node_capped || rs.depth_capped;
    }

    void dfs(RunStats& rs) {
        for (Letter letter : st_.alphabet().symbols()) {
            if (aborted(rs)) return;
            if (!st_.extendable(letter)) continue;
            if (rs.nodes == node_budget_) {
                rs.node_capped = true;
                return;
            }
            ++rs.nodes;
            st_.push(letter);
            if (st_.size() > rs.maxlen) {
                rs.maxlen = st_.size();
                rs.witness = st_.letters();
            }
            if (st_.size() == depth_budget_) {
                rs.depth_capped = true;
                st_.pop();
                return;
            }
            dfs(rs);
            st_.pop();
            if (rs.depth_capped || rs.node_capped || rs.killed) return;
        }
    }

    SearchState& st_;
    std::size_t depth_budget_;
    std::uint64_t node_budget_;
    const std::atomic<std::size_t>* kill_below_;
    std::size_t ordinal_;
};

RunStats run_subtree(const SearchConfig& cfg, const std::vector<Letter>& prefix,
                     std::uint64_t node_budget, const std::atomic<std::size_t>* kill_below,
                     std::size_t ordinal) {
    SearchState st(cfg.alphabet, cfg.pattern);
    for (Letter x : prefix) st.push(x);
    RunStats rs;
    rs.maxlen = prefix.size();
    rs.witness = prefix;
    DfsRunner(st, cfg.depth_budget, node_budget, kill_below, ordinal).run(rs);
    return rs;
}

// Shallow part of the tree in canonical DFS order. A vertex event is one
// visited prefix; a subtree event stands for all of its strict descendants.
struct Event {
    enum Kind { vertex, subtree } kind;
    std::vector<Letter> word;
    bool depth_cap_leaf = false;
    std::size_t subtree_ordinal = 0;
};

void shallow_walk(SearchState& st, std::size_t split_depth, std::size_t depth_budget,
                  std::vector<Event>& events, std::size_t& subtree_count) {
    for (Letter letter : st.alphabet().symbols()) {
        if (!st.extendable(letter)) continue;
        st.push(letter);
        Event ev{Event::vertex, st.letters(), false, 0};
        const std::size_t len = st.size();
        if (len == depth_budget) {
            ev.depth_cap_leaf = true;
            events.push_back(std::move(ev));
        } else if (len == split_depth) {
            events.push_back(std::move(ev));
            events.push_back(Event{Event::subtree, st.letters(), false, subtree_count++});
        } else {
            events.push_back(std::move(ev));
            shallow_walk(st, split_depth, depth_budget, events, subtree_count);
        }
        st.pop();
    }
}

void verify_witness(const SearchConfig& cfg, const std::vector<Letter>& witness) {
    if (witness.empty()) return;
    const Word w{witness};
    const bool clean =
        cfg.pattern == Pattern::abelian_square
            ? !serial::find_abelian_square(w, 1).has_value()
            : !serial::find_additive_power(w, pattern_order(cfg.pattern), 1).has_value();
    if (!clean) throw std::logic_error("search produced a witness containing the pattern");
}

std::size_t split_depth_for(const SearchConfig& cfg) {
    std::size_t d = std::min(kSplitDepth, cfg.depth_budget);
    while (d > 1) {
        std::size_t fanout = 1;
        bool too_big = false;
        for (std::size_t i = 0; i < d; ++i) {
            fanout *= cfg.alphabet.size();
            if (fanout > kMaxSubtrees) {
                too_big = true;
                break;
            }
        }
        if (!too_big) break;
        --d;
    }
    return d;
}

std::uint64_t count_at_depth(SearchState& st, std::size_t n) {
    if (st.size() == n) return 1;
    std::uint64_t total = 0;
    for (Letter letter : st.alphabet().symbols()) {
        if (!st.extendable(letter)) continue;
        st.push(letter);
        total += count_at_depth(st, n);
        st.pop();
    }
    return total;
}

}  // namespace

int pattern_order(Pattern p) { return p == Pattern::additive_cube ? 3 : 2; }

std::string pattern_name(Pattern p) {
    switch (p) {
        case Pattern::additive_square: return "additive-square";
        case Pattern::additive_cube: return "additive-cube";
        case Pattern::abelian_square: return "abelian-square";
    }
    return "additive-square";
}

Pattern pattern_from_name(const std::string& name) {
    if (name == "additive-square") return Pattern::additive_square;
    if (name == "additive-cube") return Pattern::additive_cube;
    if (name == "abelian-square") return Pattern::abelian_square;
    throw DomainError("unknown pattern: " + name);
}

SearchState::SearchState(Alphabet alphabet, Pattern pattern)
    : alphabet_(std::move(alphabet)), pattern_(pattern), delta_(alphabet_.size(), 0) {
    sums_.push_back(0);
}

void SearchState::push(Letter letter) {
    sym_.push_back(alphabet_.index_of(letter));
    letters_.push_back(letter);
    sums_.push_back(checked_i64(static_cast<Int128>(sums_.back()) + letter));
}

void SearchState::pop() {
    letters_.pop_back();
    sums_.pop_back();
    sym_.pop_back();
}

bool SearchState::extendable(Letter letter) const {
    const std::size_t n = letters_.size() + 1;  // virtual length with `letter` appended
    const auto sum_at = [&](std::size_t i) -> Int128 {
        return i == n ? static_cast<Int128>(sums_[n - 1]) + letter
                      : static_cast<Int128>(sums_[i]);
    };

    if (pattern_ == Pattern::additive_square) {
        for (std::size_t half = 1; 2 * half <= n; ++half) {
            if (sum_at(n) - sum_at(n - half) == sum_at(n - half) - sum_at(n - 2 * half))
                return false;
        }
        return true;
    }
    if (pattern_ == Pattern::additive_cube) {
        for (std::size_t half = 1; 3 * half <= n; ++half) {
            const Int128 s3 = sum_at(n) - sum_at(n - half);
            const Int128 s2 = sum_at(n - half) - sum_at(n - 2 * half);
            if (s3 != s2) continue;
            if (s2 == sum_at(n - 2 * half) - sum_at(n - 3 * half)) return false;
        }
        return true;
    }

    // Abelian square ending at the new position, via an incremental
    // count-difference over growing halves.
    if (n < 2) return true;
    std::fill(delta_.begin(), delta_.end(), 0);
    std::size_t nonzero = 0;
    auto apply = [&](std::size_t s, std::int64_t d) {
        const std::int64_t before = delta_[s];
        const std::int64_t after = before + d;
        delta_[s] = after;
        nonzero += static_cast<std::size_t>(after != 0) - static_cast<std::size_t>(before != 0);
    };
    const auto sym_at = [&](std::size_t i) {
        return i == n - 1 ? alphabet_.index_of(letter) : sym_[i];
    };
    apply(sym_at(n - 1), +1);
    apply(sym_at(n - 2), -1);
    for (std::size_t half = 1; 2 * half <= n; ++half) {
        if (nonzero == 0) return false;
        if (2 * half + 2 > n) break;
        // Both windows slide left: the suffix half gains W[n-half-1] and the
        // preceding half loses it and gains the two cells before itself.
        apply(sym_at(n - half - 1), +2);
        apply(sym_at(n - 2 * half - 2), -1);
        apply(sym_at(n - 2 * half - 1), -1);
    }
    return true;
}

bool extendable(const SearchState& state, Letter letter) { return state.extendable(letter); }

namespace serial {

SearchResult longest_avoiding(const SearchConfig& cfg) {
    validate(cfg);
    SearchState st(cfg.alphabet, cfg.pattern);
    RunStats rs;
    DfsRunner(st, cfg.depth_budget, cfg.node_budget, nullptr, 0).run(rs);

    SearchResult out;
    out.nodes_visited = rs.nodes;
    out.length = rs.maxlen;
    out.witness = rs.witness;
    out.verdict = (rs.depth_capped || rs.node_capped) ? Verdict::budget_exceeded
                                                      : Verdict::exhausted;
    verify_witness(cfg, out.witness);
    return out;
}

std::uint64_t count_avoiding(const SearchConfig& cfg, std::size_t n) {
    validate(cfg);
    if (n > cfg.depth_budget) throw DomainError("count length exceeds the depth budget");
    SearchState st(cfg.alphabet, cfg.pattern);
    return count_at_depth(st, n);
}

}  // namespace serial

SearchResult longest_avoiding(const SearchConfig& cfg) {
    validate(cfg);
    const std::size_t split = split_depth_for(cfg);

    std::vector<Event> events;
    std::size_t subtree_count = 0;
    {
        SearchState st(cfg.alphabet, cfg.pattern);
        shallow_walk(st, split, cfg.depth_budget, events, subtree_count);
    }

    // Explore subtrees concurrently. Each runs the canonical DFS with the
    // full node budget; a subtree that stops (depth cap or node cap) makes
    // every lexicographically later subtree irrelevant, so those workers
    // abort early. The replay below reconstructs the canonical single-run
    // accounting exactly, re-running at most the one subtree the canonical
    // budget would have entered last.
    std::vector<RunStats> runs(subtree_count);
    if (subtree_count > 0) {
        std::vector<const Event*> roots(subtree_count);
        for (const Event& ev : events)
            if (ev.kind == Event::subtree) roots[ev.subtree_ordinal] = &ev;
        std::atomic<std::size_t> first_stopper{std::numeric_limits<std::size_t>::max()};
        const int nt = thread_count();
#pragma omp parallel for num_threads(nt) schedule(dynamic, 1)
        for (std::size_t o = 0; o < subtree_count; ++o) {
            if (first_stopper.load(std::memory_order_relaxed) < o) {
                runs[o].killed = true;
                continue;
            }
            runs[o] = run_subtree(cfg, roots[o]->word, cfg.node_budget, &first_stopper, o);
            if (runs[o].depth_capped || runs[o].node_capped) {
                std::size_t seen = first_stopper.load(std::memory_order_relaxed);
                while (o < seen &&
                       !first_stopper.compare_exchange_weak(seen, o, std::memory_order_relaxed)) {
                }
            }
        }
    }

    // Canonical replay over the event list.
    const std::uint64_t budget = cfg.node_budget;
    std::uint64_t cum = 0;
    std::size_t maxlen = 0;
    std::vector<Letter> witness;
    bool depth_stop = false;
    bool node_stop = false;

    auto merge_best = [&](std::size_t len, const std::vector<Letter>& word) {
        if (len > maxlen) {
            maxlen = len;
            witness = word;
        }
    };

    for (const Event& ev : events) {
        if (ev.kind == Event::vertex) {
            if (cum == budget) {
                node_stop = true;
                break;
            }
            ++cum;
            merge_best(ev.word.size(), ev.word);
            if (ev.depth_cap_leaf) {
                depth_stop = true;
                break;
            }
            continue;
        }

        RunStats rs = runs[ev.subtree_ordinal];
        const std::uint64_t remaining = budget - cum;
        const bool needs_rerun =
            rs.killed || ((rs.node_capped || rs.nodes > remaining) && remaining < cfg.node_budget);
        if (needs_rerun) {
            rs = run_subtree(cfg, ev.word, remaining, nullptr, 0);
        }
        if (!rs.depth_capped && !rs.node_capped && rs.nodes <= remaining) {
            cum += rs.nodes;
            merge_best(rs.maxlen, rs.witness);
            continue;
        }
        if (rs.depth_capped && rs.nodes <= remaining) {
            cum += rs.nodes;
            merge_best(rs.maxlen, rs.witness);
            depth_stop = true;
            break;
        }
        // The canonical run trips the node budget inside this subtree.
        if (rs.nodes > remaining) rs = run_subtree(cfg, ev.word, remaining, nullptr, 0);
        cum += rs.nodes;
        merge_best(rs.maxlen, rs.witness);
        if (rs.depth_capped) {
            depth_stop = true;
        } else {
            node_stop = true;
        }
        break;
    }

    SearchResult out;
    out.nodes_visited = cum;
    out.length = maxlen;
    out.witness = witness;
    out.verdict = (depth_stop || node_stop) ? Verdict::budget_exceeded : Verdict::exhausted;
    verify_witness(cfg, out.witness);
    return out;
}

std::uint64_t count_avoiding(const SearchConfig& cfg, std::size_t n) {
    validate(cfg);
    if (n > cfg.depth_budget) throw DomainError("count length exceeds the depth budget");
    const std::size_t split = std::min(split_depth_for(cfg), n);
    if (split == 0 || split >= n) return serial::count_avoiding(cfg, n);

    std::vector<Event> events;
    std::size_t subtree_count = 0;
    {
        SearchState st(cfg.alphabet, cfg.pattern);
        shallow_walk(st, split, cfg.depth_budget, events, subtree_count);
    }
    std::vector<const Event*> roots(subtree_count);
    for (const Event& ev : events)
        if (ev.kind == Event::subtree) roots[ev.subtree_ordinal] = &ev;

    std::uint64_t total = 0;
    const int nt = thread_count();
#pragma omp parallel for num_threads(nt) schedule(dynamic, 1) reduction(+ : total)
    for (std::size_t o = 0; o < subtree_count; ++o) {
        SearchState st(cfg.alphabet, cfg.pattern);
        for (Letter x : roots[o]->word) st.push(x);
        total += count_at_depth(st, n);
    }
    return total;
}

}  // namespace addiword
