#include "mixdom/exact_solver.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "mixdom/constructions.hpp"
#include "mixdom/domination.hpp"
#include "mixdom/errors.hpp"

namespace mixdom {

namespace {

using Clock = std::chrono::steady_clock;

// Fixed-width bitset over the element universe; W = ceil(5n / 64).
template <std::size_t W>
struct Bits {
    std::array<std::uint64_t, W> w{};

    bool test(ElementId i) const { return ((w[i / 64] >> (i % 64)) & 1U) != 0; }
    void set(ElementId i) { w[i / 64] |= std::uint64_t{1} << (i % 64); }

    int count() const {
        int c = 0;
        for (std::uint64_t x : w) c += std::popcount(x);
        return c;
    }

    // Lowest clear bit below `limit`; `limit` when all are set.
    ElementId first_clear(std::size_t limit) const {
        for (std::size_t i = 0; i < W; ++i)
            if (~w[i] != 0) {
                const auto id = static_cast<ElementId>(i * 64 + std::countr_zero(~w[i]));
                return id < limit ? id : static_cast<ElementId>(limit);
            }
        return static_cast<ElementId>(limit);
    }

    Bits operator|(const Bits& o) const {
        Bits r;
        for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] | o.w[i];
        return r;
    }
};

template <std::size_t W>
struct Instance {
    std::size_t elements = 0;
    std::vector<Bits<W>> nb_mask;
    std::vector<std::array<ElementId, 7>> nb_list;
    Bits<W> full;

    explicit Instance(const Graph& g) : elements(g.element_count()), nb_mask(elements), nb_list(elements) {
        for (ElementId x = 0; x < elements; ++x) {
            const auto nb = g.neighborhood(x);
            std::copy(nb.begin(), nb.end(), nb_list[x].begin());
            for (ElementId y : nb) nb_mask[x].set(y);
            full.set(x);
        }
    }

    Bits<W> cover_of(const std::vector<ElementId>& chosen) const {
        Bits<W> c;
        for (ElementId x : chosen) c = c | nb_mask[x];
        return c;
    }
};

// ---------------------------------------------------------------------------
// Branch and bound

// Incumbent packed as (size << 32) | owner. Owner 0 is the initial incumbent;
// search tasks are numbered from 1 in DFS order. A set of equal size replaces
// the incumbent only when it comes from an earlier task, so the reported
// witness is the DFS-first optimal set regardless of thread scheduling.
struct Shared {
    std::atomic<std::uint64_t> best;
    std::mutex mutex;
    std::vector<ElementId> witness;
    std::atomic<bool> abort{false};
    std::atomic<std::uint64_t> nodes{0};
    std::uint64_t max_nodes = 0;
    Clock::time_point deadline;

    static std::uint64_t pack(std::uint32_t size, std::uint32_t owner) {
        return (std::uint64_t{size} << 32) | owner;
    }

    void offer(const std::vector<ElementId>& chosen, std::uint32_t owner) {
        const std::uint64_t candidate = pack(static_cast<std::uint32_t>(chosen.size()), owner);
        std::lock_guard lock(mutex);
        if (candidate < best.load()) {
            best.store(candidate);
            witness = chosen;
        }
    }
};

template <std::size_t W>
struct Task {
    std::vector<ElementId> chosen;
    Bits<W> covered;
    Bits<W> excluded;
};

template <std::size_t W>
class Search {
public:
    Search(const Instance<W>& inst, Shared& shared) : inst_(inst), shared_(shared) {}

    void run(Task<W> task, std::uint32_t owner) {
        owner_ = owner;
        chosen_ = std::move(task.chosen);
        dfs(task.covered, task.excluded);
        flush();
    }

    // DFS to `depth`, emitting the open nodes in DFS order.
    void frontier(const Bits<W>& covered, Bits<W> excluded, int depth, std::vector<Task<W>>& out) {
        const int uncovered = static_cast<int>(inst_.elements) - covered.count();
        if (uncovered == 0 || depth == 0) {
            out.push_back({chosen_, covered, excluded});
            return;
        }
        if (pruned(static_cast<std::uint32_t>(chosen_.size()) + (uncovered + 6) / 7)) return;
        const ElementId target = covered.first_clear(inst_.elements);
        for (ElementId c : inst_.nb_list[target]) {
            if (excluded.test(c)) continue;
            chosen_.push_back(c);
            frontier(covered | inst_.nb_mask[c], excluded, depth - 1, out);
            chosen_.pop_back();
            excluded.set(c);
        }
    }

private:
    bool pruned(std::uint32_t lower_bound) const {
        const std::uint64_t best = shared_.best.load(std::memory_order_relaxed);
        const auto best_size = static_cast<std::uint32_t>(best >> 32);
        const auto best_owner = static_cast<std::uint32_t>(best & 0xffffffffU);
        if (lower_bound != best_size) return lower_bound > best_size;
        return best_owner <= owner_;
    }

    void dfs(const Bits<W>& covered, Bits<W> excluded) {
        if ((++local_nodes_ & 1023U) == 0 && check_budget()) return;
        const int uncovered = static_cast<int>(inst_.elements) - covered.count();
        if (uncovered == 0) {
            shared_.offer(chosen_, owner_);
            return;
        }
        if (pruned(static_cast<std::uint32_t>(chosen_.size()) + (uncovered + 6) / 7)) return;

        const ElementId target = covered.first_clear(inst_.elements);
        for (ElementId c : inst_.nb_list[target]) {
            if (excluded.test(c)) continue;
            chosen_.push_back(c);
            dfs(covered | inst_.nb_mask[c], excluded);
            chosen_.pop_back();
            if (shared_.abort.load(std::memory_order_relaxed)) return;
            // Later siblings cover `target` without c; sets containing c were
            // all seen in this subtree.
            excluded.set(c);
        }
    }

    void flush() {
        shared_.nodes.fetch_add(local_nodes_ & 1023U, std::memory_order_relaxed);
        local_nodes_ &= ~std::uint64_t{1023};
    }

    bool check_budget() {
        const std::uint64_t total = shared_.nodes.fetch_add(1024, std::memory_order_relaxed) + 1024;
        if (total >= shared_.max_nodes || Clock::now() >= shared_.deadline)
            shared_.abort.store(true, std::memory_order_relaxed);
        return shared_.abort.load(std::memory_order_relaxed);
    }

    const Instance<W>& inst_;
    Shared& shared_;
    std::uint32_t owner_ = 0;
    std::vector<ElementId> chosen_;
    std::uint64_t local_nodes_ = 0;
};

struct SearchOutcome {
    bool improved = false;  // found a set smaller than the starting bound
    bool complete = false;
    std::vector<ElementId> witness;
    std::uint64_t nodes = 0;
};

// Searches for a dominating set smaller than `bound`.
template <std::size_t W>
SearchOutcome branch_and_bound(const Instance<W>& inst, std::uint32_t bound, unsigned threads,
                               std::uint64_t max_nodes, Clock::time_point deadline) {
    Shared shared;
    shared.best.store(Shared::pack(bound, 0));
    shared.max_nodes = max_nodes;
    shared.deadline = deadline;

    std::vector<Task<W>> tasks;
    {
        Search<W> seed(inst, shared);
        const int depth = threads > 1 ? 3 : 1;
        seed.frontier(Bits<W>{}, Bits<W>{}, depth, tasks);
    }

    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        Search<W> search(inst, shared);
        for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
            if (shared.abort.load()) break;
            search.run(std::move(tasks[i]), static_cast<std::uint32_t>(i + 1));
        }
    };
    const unsigned workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
    }

    SearchOutcome out;
    out.complete = !shared.abort.load();
    out.nodes = shared.nodes.load();
    const auto best_size = static_cast<std::uint32_t>(shared.best.load() >> 32);
    if (best_size < bound) {
        out.improved = true;
        out.witness = shared.witness;
        std::sort(out.witness.begin(), out.witness.end());
    }
    return out;
}

ElementSet to_set(const Graph& g, const std::vector<ElementId>& ids) {
    return ElementSet(g.element_count(), std::span<const ElementId>(ids));
}

// Smaller of the default construction and greedy completion of the empty set.
ElementSet initial_incumbent(const Graph& g) {
    ElementSet best = greedy_complete(g, g.empty_set());
    try {
        ConstructionOutput c = construct(default_pattern(g.k()), g);
        if (c.set.size() < best.size() || (c.set.size() == best.size() && c.set.ids() < best.ids()))
            best = std::move(c.set);
    } catch (const OutOfRange&) {
        // no pattern for this (n, k)
    }
    return best;
}

template <std::size_t W>
OptimalResult solve_exact_impl(const Graph& g, const SolveBudget& budget) {
    const auto start = Clock::now();
    const Instance<W> inst(g);
    const unsigned threads = budget.threads != 0 ? budget.threads : default_thread_count();
    const auto deadline = start + std::chrono::duration_cast<Clock::duration>(budget.max_time);

    OptimalResult result;
    result.witness = initial_incumbent(g);
    result.optimum = static_cast<int>(result.witness.size());

    auto bound = static_cast<std::uint32_t>(result.optimum);
    bool hinted = false;
    if (budget.upper_bound_hint && *budget.upper_bound_hint + 1 < result.optimum) {
        bound = static_cast<std::uint32_t>(std::max(*budget.upper_bound_hint, 0) + 1);
        hinted = true;
    }

    std::uint64_t nodes = 0;
    SearchOutcome outcome = branch_and_bound(inst, bound, threads, budget.max_nodes, deadline);
    nodes += outcome.nodes;
    if (hinted && outcome.complete && !outcome.improved) {
        // The hint was below the optimum; search again under the incumbent.
        const std::uint64_t left = budget.max_nodes > nodes ? budget.max_nodes - nodes : 0;
        outcome = left == 0 ? SearchOutcome{}
                            : branch_and_bound(inst, static_cast<std::uint32_t>(result.optimum), threads, left, deadline);
        nodes += outcome.nodes;
    }

    if (outcome.improved && static_cast<int>(outcome.witness.size()) < result.optimum) {
        result.witness = to_set(g, outcome.witness);
        result.optimum = static_cast<int>(outcome.witness.size());
    }
    result.proved = outcome.complete;
    result.nodes_explored = nodes;
    result.elapsed = Clock::now() - start;
    return result;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration

template <std::size_t W>
class Enumerator {
public:
    explicit Enumerator(const Instance<W>& inst) : inst_(inst) {
        // max_cover_[x] = largest id that can still cover x.
        max_cover_.resize(inst.elements);
        for (ElementId x = 0; x < inst.elements; ++x)
            max_cover_[x] = *std::max_element(inst.nb_list[x].begin(), inst.nb_list[x].end());
    }

    // Lexicographically first dominating set of exactly `size` elements.
    bool find(int size, std::vector<ElementId>& out) {
        chosen_.clear();
        if (!extend(Bits<W>{}, 0, size)) return false;
        out = chosen_;
        return true;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    bool extend(const Bits<W>& covered, ElementId start, int left) {
        ++nodes_;
        const int uncovered = static_cast<int>(inst_.elements) - covered.count();
        if (uncovered == 0) return left == 0;
        if (left == 0 || uncovered > 7 * left) return false;
        // The lowest uncovered element must be covered by a later pick.
        const ElementId first = covered.first_clear(inst_.elements);
        if (max_cover_[first] < start) return false;
        for (ElementId c = start; c + static_cast<ElementId>(left) <= inst_.elements; ++c) {
            chosen_.push_back(c);
            if (extend(covered | inst_.nb_mask[c], c + 1, left - 1)) return true;
            chosen_.pop_back();
        }
        return false;
    }

    const Instance<W>& inst_;
    std::vector<ElementId> max_cover_;
    std::vector<ElementId> chosen_;
    std::uint64_t nodes_ = 0;
};

template <std::size_t W>
OptimalResult solve_exhaustive_impl(const Graph& g, int max_size) {
    const auto start = Clock::now();
    const Instance<W> inst(g);
    Enumerator<W> enumerator(inst);
    std::vector<ElementId> witness;
    for (int size = 0; size <= max_size; ++size) {
        if (enumerator.find(size, witness)) {
            OptimalResult result;
            result.optimum = size;
            result.witness = to_set(g, witness);
            result.proved = true;
            result.nodes_explored = enumerator.nodes();
            result.elapsed = Clock::now() - start;
            return result;
        }
    }
    throw NoSolutionWithin(max_size);
}

constexpr std::size_t kMaxWords = 16;

template <template <std::size_t> class F, std::size_t W = 1, typename... Args>
auto dispatch_words(std::size_t words, Args&&... args) {
    if constexpr (W > kMaxWords) {
        throw std::invalid_argument("instance too large for exact search (" + std::to_string(words) +
                                    " words)");
        return F<kMaxWords>{}(std::forward<Args>(args)...);
    } else {
        if (words <= W) return F<W>{}(std::forward<Args>(args)...);
        return dispatch_words<F, W * 2>(words, std::forward<Args>(args)...);
    }
}

template <std::size_t W>
struct ExactFn {
    OptimalResult operator()(const Graph& g, const SolveBudget& b) const { return solve_exact_impl<W>(g, b); }
};

template <std::size_t W>
struct ExhaustiveFn {
    OptimalResult operator()(const Graph& g, int max_size) const { return solve_exhaustive_impl<W>(g, max_size); }
};

}  // namespace

unsigned default_thread_count() {
    if (const char* env = std::getenv("MIXDOM_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

OptimalResult solve_exact(const Graph& graph, const SolveBudget& budget) {
    if (budget.max_nodes == 0) throw std::invalid_argument("SolveBudget::max_nodes must be positive");
    if (budget.max_time.count() <= 0) throw std::invalid_argument("SolveBudget::max_time must be positive");
    return dispatch_words<ExactFn>((graph.element_count() + 63) / 64, graph, budget);
}

OptimalResult solve_exhaustive(const Graph& graph, int max_size) {
    if (max_size < 0) throw std::invalid_argument("max_size must be non-negative");
    return dispatch_words<ExhaustiveFn>((graph.element_count() + 63) / 64, graph, max_size);
}

}  // namespace mixdom
