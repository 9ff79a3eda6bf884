#include "domtree/solver.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

namespace domtree {

namespace {

using Clock = std::chrono::steady_clock;

struct TimeLimitExceeded {};

std::vector<Bitset> adjacency_rows(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n > kSolveCap) throw std::invalid_argument("graph too large for exact solving");
    std::vector<Bitset> rows(n, Bitset(n));
    if (g.has_bit_rows()) {
        for (std::size_t i = 0; i < n; ++i) rows[i] = g.neighbor_bits(i);
    } else {
        for (std::size_t i = 0; i < n; ++i)
            for (auto j : g.neighbor_indices(i)) rows[i].set(j);
    }
    return rows;
}

// k-subsets of {0..n-1} in lexicographic order; f returns true to stop.
template <typename F>
bool for_each_combination(std::size_t n, std::size_t k, F&& f) {
    if (k > n) return false;
    std::vector<std::uint32_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = static_cast<std::uint32_t>(i);
    while (true) {
        if (f(c)) return true;
        std::size_t i = k;
        while (i > 0 && c[i - 1] == n - k + i - 1) --i;
        if (i == 0) return false;
        ++c[i - 1];
        for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
    }
}

bool has_isolated_vertex(const Graph& g) {
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        if (g.neighbor_indices(i).empty()) return true;
    return false;
}

// Depth-first decision search: does a valid set S with |S| <= budget,
// forced_in ⊆ S and S ∩ forced_out = ∅ exist?
class ExactSearch {
public:
    ExactSearch(const Graph& g, const std::vector<Bitset>& rows, Variant variant, int budget,
                Clock::time_point deadline, bool has_deadline, const std::atomic<bool>* cancel)
        : g_(g),
          rows_(rows),
          variant_(variant),
          budget_(budget),
          deadline_(deadline),
          has_deadline_(has_deadline),
          cancel_(cancel),
          n_(g.vertex_count()),
          chosen_(n_),
          excluded_(n_),
          all_(n_) {
        all_.set_all();
        max_cover_ = g.max_degree() + (is_total(variant) ? 0 : 1);
        if (max_cover_ == 0) max_cover_ = 1;
    }

    std::optional<Bitset> run(const Bitset& forced_in, const Bitset& forced_out) {
        chosen_ = forced_in;
        excluded_ = forced_out;
        if (static_cast<int>(chosen_.count()) > budget_) return std::nullopt;
        if (dfs()) return witness_;
        return std::nullopt;
    }

    // Expands the root into (chosen, excluded) subproblems for parallel runs.
    // Returns nullopt if the root decides immediately (check found()/witness).
    std::optional<std::vector<std::pair<Bitset, Bitset>>> expand_root(
        const Bitset& forced_in, const Bitset& forced_out) {
        chosen_ = forced_in;
        excluded_ = forced_out;
        decided_ = false;
        if (static_cast<int>(chosen_.count()) > budget_) {
            decided_ = true;
            found_ = false;
            return std::nullopt;
        }
        auto cands = branch_candidates();
        if (decided_) return std::nullopt;
        std::vector<std::pair<Bitset, Bitset>> tasks;
        tasks.reserve(cands.size());
        Bitset excl = excluded_;
        for (auto c : cands) {
            Bitset in = chosen_;
            in.set(c);
            tasks.emplace_back(in, excl);
            excl.set(c);
        }
        return tasks;
    }

    bool found() const { return found_; }
    const Bitset& witness() const { return witness_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    void tick() {
        ++nodes_;
        if ((nodes_ & 1023) == 0) {
            if (has_deadline_ && Clock::now() > deadline_) throw TimeLimitExceeded{};
        }
        if (cancel_ && cancel_->load(std::memory_order_relaxed)) throw TimeLimitExceeded{};
    }

    Bitset coverage() const {
        Bitset covered(n_);
        chosen_.for_each([&](std::size_t i) { covered |= rows_[i]; });
        if (!is_total(variant_)) covered |= chosen_;
        return covered;
    }

    // Candidate vertices that cover u, cheapest-first ordering applied later.
    Bitset coverers(std::size_t u) const {
        Bitset c = rows_[u];
        if (!is_total(variant_)) c.set(u);
        c -= excluded_;
        c -= chosen_;
        return c;
    }

    void order_candidates(std::vector<std::uint32_t>& cands) const {
        std::sort(cands.begin(), cands.end(), [&](std::uint32_t a, std::uint32_t b) {
            auto da = g_.neighbor_indices(a).size();
            auto db = g_.neighbor_indices(b).size();
            if (da != db) return da > db;  // descending degree
            return a < b;                  // ascending label
        });
    }

    // Computes the branching candidates at the current node, or decides the
    // node outright (sets decided_/found_/witness_).
    std::vector<std::uint32_t> branch_candidates() {
        tick();
        decided_ = false;
        const int used = static_cast<int>(chosen_.count());

        Bitset uncovered = all_ - coverage();
        if (uncovered.any()) {
            const int need = static_cast<int>((uncovered.count() + max_cover_ - 1) / max_cover_);
            if (used + need > budget_) {
                decided_ = true;
                found_ = false;
                return {};
            }
            std::size_t best = n_;
            std::size_t best_count = n_ + 1;
            uncovered.for_each([&](std::size_t u) {
                std::size_t c = coverers(u).count();
                if (c < best_count) {
                    best_count = c;
                    best = u;
                }
            });
            if (best_count == 0) {
                decided_ = true;
                found_ = false;
                return {};
            }
            auto cands = coverers(best).to_indices();
            order_candidates(cands);
            return cands;
        }

        if (is_locating(variant_)) {
            auto clash = find_clash_pair();
            if (clash) {
                if (used >= budget_) {
                    decided_ = true;
                    found_ = false;
                    return {};
                }
                Bitset c = (rows_[clash->first] ^ rows_[clash->second]);
                c.set(clash->first);
                c.set(clash->second);
                c -= excluded_;
                c -= chosen_;
                if (c.none()) {
                    decided_ = true;
                    found_ = false;
                    return {};
                }
                auto cands = c.to_indices();
                order_candidates(cands);
                return cands;
            }
        }

        decided_ = true;
        found_ = true;
        witness_ = chosen_;
        return {};
    }

    // The clashing pair with the fewest resolution candidates, if any.
    std::optional<std::pair<std::uint32_t, std::uint32_t>> find_clash_pair() {
        sig_scratch_.clear();
        for (std::size_t i = 0; i < n_; ++i) {
            if (chosen_.test(i)) continue;
            sig_scratch_.emplace_back(rows_[i] & chosen_, static_cast<std::uint32_t>(i));
        }
        std::sort(sig_scratch_.begin(), sig_scratch_.end(),
                  [](const auto& a, const auto& b) {
                      if (a.first.words() != b.first.words()) return a.first.words() < b.first.words();
                      return a.second < b.second;
                  });
        std::optional<std::pair<std::uint32_t, std::uint32_t>> best;
        std::size_t best_count = 0;
        for (std::size_t lo = 0; lo < sig_scratch_.size();) {
            std::size_t hi = lo + 1;
            while (hi < sig_scratch_.size() &&
                   sig_scratch_[hi].first == sig_scratch_[lo].first)
                ++hi;
            for (std::size_t i = lo; i < hi; ++i)
                for (std::size_t j = i + 1; j < hi; ++j) {
                    auto u = sig_scratch_[i].second;
                    auto v = sig_scratch_[j].second;
                    Bitset c = rows_[u] ^ rows_[v];
                    c.set(u);
                    c.set(v);
                    c -= excluded_;
                    c -= chosen_;
                    std::size_t cnt = c.count();
                    if (!best || cnt < best_count) {
                        best = {u, v};
                        best_count = cnt;
                    }
                }
            lo = hi;
        }
        return best;
    }

    bool dfs() {
        auto cands = branch_candidates();
        if (decided_) {
            decided_ = false;
            return found_;
        }
        std::vector<std::uint32_t> locally_excluded;
        bool ok = false;
        for (auto c : cands) {
            chosen_.set(c);
            if (dfs()) {
                chosen_.reset(c);
                ok = true;
                break;
            }
            chosen_.reset(c);
            excluded_.set(c);
            locally_excluded.push_back(c);
        }
        for (auto c : locally_excluded) excluded_.reset(c);
        return ok;
    }

    const Graph& g_;
    const std::vector<Bitset>& rows_;
    Variant variant_;
    int budget_;
    Clock::time_point deadline_;
    bool has_deadline_;
    const std::atomic<bool>* cancel_;
    std::size_t n_;
    std::size_t max_cover_;
    Bitset chosen_, excluded_, all_;
    Bitset witness_;
    bool decided_ = false;
    bool found_ = false;
    std::uint64_t nodes_ = 0;
    std::vector<std::pair<Bitset, std::uint32_t>> sig_scratch_;
};

// One decision query, optionally split over workers at the root branching.
// Answer (and therefore everything derived from answers) is independent of
// the worker count.
std::optional<Bitset> exists_valid(const Graph& g, const std::vector<Bitset>& rows,
                                   Variant variant, int budget, const Bitset& forced_in,
                                   const Bitset& forced_out, Clock::time_point deadline,
                                   bool has_deadline, int workers, std::uint64_t& nodes) {
    if (workers <= 1) {
        ExactSearch search(g, rows, variant, budget, deadline, has_deadline, nullptr);
        auto res = search.run(forced_in, forced_out);
        nodes += search.nodes();
        return res;
    }

    ExactSearch root(g, rows, variant, budget, deadline, has_deadline, nullptr);
    auto tasks = root.expand_root(forced_in, forced_out);
    nodes += root.nodes();
    if (!tasks) {
        if (root.found()) return root.witness();
        return std::nullopt;
    }

    std::atomic<bool> stop{false};
    std::atomic<std::size_t> next{0};
    std::atomic<std::uint64_t> total_nodes{0};
    std::atomic<bool> timed_out{false};
    std::mutex result_mutex;
    std::optional<Bitset> result;

    auto work = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks->size() || stop.load()) return;
            ExactSearch search(g, rows, variant, budget, deadline, has_deadline, &stop);
            try {
                auto res = search.run((*tasks)[i].first, (*tasks)[i].second);
                total_nodes += search.nodes();
                if (res) {
                    std::lock_guard lock(result_mutex);
                    if (!result) result = std::move(res);
                    stop.store(true);
                    return;
                }
            } catch (const TimeLimitExceeded&) {
                total_nodes += search.nodes();
                timed_out.store(true);
                stop.store(true);
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    const int count = std::min<int>(workers, static_cast<int>(tasks->size()));
    pool.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    nodes += total_nodes.load();

    if (result) return result;  // a definite yes beats a concurrent timeout
    if (timed_out.load()) throw TimeLimitExceeded{};
    return std::nullopt;
}

int seed_lower_bound(const Graph& g, Variant variant) {
    const std::size_t n = g.vertex_count();
    if (n == 0) return 0;
    const std::size_t denom = g.max_degree() + (is_total(variant) ? 0 : 1);
    int lb = denom == 0 ? 1 : static_cast<int>((n + denom - 1) / denom);
    if (is_locating(variant)) {
        int k = 0;
        while (k < 63 && (std::uint64_t{1} << k) - 1 + static_cast<std::uint64_t>(k) < n) ++k;
        lb = std::max(lb, k);
    }
    return std::max(lb, 1);
}

// Greedy feasible set; used only as an upper bound for BoundOnly reports.
Bitset greedy_upper_bound(const Graph& g, const std::vector<Bitset>& rows, Variant variant) {
    const std::size_t n = g.vertex_count();
    Bitset s(n), all(n);
    all.set_all();

    auto coverage = [&]() {
        Bitset covered(n);
        s.for_each([&](std::size_t i) { covered |= rows[i]; });
        if (!is_total(variant)) covered |= s;
        return covered;
    };
    while (true) {
        Bitset uncovered = all - coverage();
        if (uncovered.none()) break;
        std::size_t best = n, best_gain = 0;
        for (std::size_t w = 0; w < n; ++w) {
            if (s.test(w)) continue;
            Bitset gain = rows[w];
            if (!is_total(variant)) gain.set(w);
            gain &= uncovered;
            std::size_t cnt = gain.count();
            if (cnt > best_gain) {
                best_gain = cnt;
                best = w;
            }
        }
        if (best == n) break;  // cannot make progress (infeasible instance)
        s.set(best);
    }
    if (is_locating(variant)) {
        while (true) {
            bool clash = false;
            std::vector<std::pair<std::vector<std::uint64_t>, std::uint32_t>> sigs;
            for (std::size_t i = 0; i < n; ++i)
                if (!s.test(i)) sigs.emplace_back((rows[i] & s).words(), static_cast<std::uint32_t>(i));
            std::sort(sigs.begin(), sigs.end());
            for (std::size_t i = 1; i < sigs.size(); ++i)
                if (sigs[i].first == sigs[i - 1].first) {
                    s.set(sigs[i - 1].second);  // move one of the pair into S
                    clash = true;
                    break;
                }
            if (!clash) break;
        }
    }
    return s;
}

SolveResult make_solved(const Graph& g, Variant variant, const Bitset& witness,
                        std::uint64_t nodes, Clock::time_point start) {
    SolveResult res;
    res.variant = variant;
    res.status = SolveStatus::Solved;
    res.value = static_cast<int>(witness.count());
    res.witness_set = g.from_index_bits(witness);
    res.lower_bound = res.upper_bound = res.value;
    res.nodes_explored = nodes;
    res.elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    if (!check(g, res.witness_set, variant).valid)
        throw std::logic_error("solver produced an invalid witness");
    return res;
}

}  // namespace

SolveResult oracle_minimum(const Graph& g, Variant variant) {
    const std::size_t n = g.vertex_count();
    if (n > kOracleCap) throw std::invalid_argument("oracle cap exceeded");
    const auto start = Clock::now();

    SolveResult res;
    res.variant = variant;
    std::uint64_t nodes = 0;
    Bitset bits(n);
    for (std::size_t k = 0; k <= n; ++k) {
        bool stop = for_each_combination(n, k, [&](const std::vector<std::uint32_t>& c) {
            ++nodes;
            bits.clear();
            for (auto i : c) bits.set(i);
            return is_valid(g, bits, variant);
        });
        if (stop) {
            res = make_solved(g, variant, bits, nodes, start);
            return res;
        }
    }
    res.status = SolveStatus::Infeasible;
    res.nodes_explored = nodes;
    res.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    return res;
}

SolveResult solve_minimum(const Graph& g, Variant variant, const SolveOptions& opts) {
    const std::size_t n = g.vertex_count();
    const auto start = Clock::now();
    const bool has_deadline = opts.time_limit.count() > 0;
    const auto deadline = start + opts.time_limit;

    SolveResult res;
    res.variant = variant;

    if (n == 0) {
        res.status = SolveStatus::Solved;
        res.value = 0;
        res.lower_bound = res.upper_bound = 0;
        return res;
    }
    if (is_total(variant) && has_isolated_vertex(g)) {
        res.status = SolveStatus::Infeasible;
        res.elapsed =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
        return res;
    }

    const auto rows = adjacency_rows(g);
    const Bitset greedy = greedy_upper_bound(g, rows, variant);
    const int upper = static_cast<int>(greedy.count());
    std::uint64_t nodes = 0;
    int k = seed_lower_bound(g, variant);
    Bitset witness(n);
    bool have_witness = false;

    try {
        for (; k <= upper; ++k) {
            if (is_locating(variant) && k < 63 &&
                (std::uint64_t{1} << k) - 1 + static_cast<std::uint64_t>(k) < n)
                continue;  // signature capacity 2^k-1 cannot distinguish V \ S
            if (k == upper) {
                witness = greedy;
                have_witness = true;
                break;
            }
            Bitset none(n);
            auto found = exists_valid(g, rows, variant, k, none, none, deadline,
                                      has_deadline, opts.workers, nodes);
            if (found) {
                witness = *found;
                have_witness = true;
                break;
            }
        }
        if (!have_witness) throw std::logic_error("iterative deepening missed the greedy bound");

        if (opts.deterministic) {
            // Lexicographic refinement: keep the least labels that stay feasible.
            const int target = static_cast<int>(witness.count());
            Bitset chosen(n), banned(n);
            int taken = 0;
            for (std::size_t i = 0; i < n && taken < target; ++i) {
                if (witness.test(i)) {
                    chosen.set(i);
                    ++taken;
                    continue;
                }
                Bitset trial = chosen;
                trial.set(i);
                auto found = exists_valid(g, rows, variant, target, trial, banned, deadline,
                                          has_deadline, opts.workers, nodes);
                if (found) {
                    witness = *found;
                    chosen.set(i);
                    ++taken;
                } else {
                    banned.set(i);
                }
            }
            witness = chosen;
        }
        res = make_solved(g, variant, witness, nodes, start);
        return res;
    } catch (const TimeLimitExceeded&) {
        if (have_witness)  // value proven; only the lexicographic refinement was cut short
            return make_solved(g, variant, witness, nodes, start);
        res.status = SolveStatus::BoundOnly;
        res.lower_bound = k;
        res.upper_bound = upper;
        res.nodes_explored = nodes;
        res.elapsed =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
        return res;
    }
}

EnumerationResult enumerate_minimum_sets(const Graph& g, Variant variant, std::size_t cap) {
    const std::size_t n = g.vertex_count();
    if (n > kOracleCap) throw std::invalid_argument("oracle cap exceeded");

    EnumerationResult out;
    out.variant = variant;
    SolveResult base = oracle_minimum(g, variant);
    if (base.status != SolveStatus::Solved) return out;

    out.value = base.value;
    Bitset bits(n);
    for_each_combination(n, static_cast<std::size_t>(base.value),
                         [&](const std::vector<std::uint32_t>& c) {
                             bits.clear();
                             for (auto i : c) bits.set(i);
                             if (!is_valid(g, bits, variant)) return false;
                             if (out.sets.size() == cap) {
                                 out.truncated = true;
                                 return true;
                             }
                             out.sets.push_back(g.from_index_bits(bits));
                             return false;
                         });
    return out;
}

}  // namespace domtree
