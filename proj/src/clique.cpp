#include "clique.hpp"

#include <mutex>
#include <thread>

namespace equidist::detail {

SearchControl::SearchControl(std::optional<std::uint64_t> node_budget,
                             std::optional<std::chrono::milliseconds> time_budget)
    : node_budget_(node_budget) {
    if (time_budget) deadline_ = std::chrono::steady_clock::now() + *time_budget;
}

bool SearchControl::tick() {
    if (stopped()) return false;
    const std::uint64_t n = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (node_budget_ && n > *node_budget_) {
        stopped_.store(true, std::memory_order_relaxed);
        return false;
    }
    if (deadline_ && (n & 255) == 0 && std::chrono::steady_clock::now() > *deadline_) {
        stopped_.store(true, std::memory_order_relaxed);
        return false;
    }
    return true;
}

namespace {

// Greedy sequential colouring of `p`. Vertices come out grouped by colour
// class in increasing order; colours[i] bounds the clique number of
// {order[0], ..., order[i]}.
void colour_sort(const Graph& g, const Bitset& p, std::vector<std::size_t>& order, std::vector<std::size_t>& colours) {
    order.clear();
    colours.clear();
    Bitset uncoloured = p;
    std::size_t colour = 0;
    while (!uncoloured.none()) {
        ++colour;
        Bitset available = uncoloured;
        for (std::size_t v = available.first(); v < available.size(); v = available.first()) {
            uncoloured.reset(v);
            available.reset(v);
            available.and_not(g.adjacency[v]);
            order.push_back(v);
            colours.push_back(colour);
        }
    }
}

class MaxCliqueWorker {
public:
    MaxCliqueWorker(const Graph& g, SearchControl& control, std::atomic<std::size_t>& best_size,
                    std::mutex& best_mutex, std::vector<std::size_t>& best_clique)
        : g_(g), control_(control), best_size_(best_size), best_mutex_(best_mutex), best_clique_(best_clique) {}

    void branch(std::size_t v, Bitset candidates) {
        clique_.push_back(v);
        if (candidates.none()) {
            record();
        } else {
            expand(std::move(candidates));
        }
        clique_.pop_back();
    }

private:
    void expand(Bitset p) {
        if (!control_.tick()) return;
        std::vector<std::size_t> order, colours;
        colour_sort(g_, p, order, colours);
        for (std::size_t k = order.size(); k-- > 0;) {
            if (control_.stopped()) return;
            if (clique_.size() + colours[k] <= best_size_.load(std::memory_order_relaxed)) return;
            const std::size_t v = order[k];
            branch(v, p & g_.adjacency[v]);
            p.reset(v);
        }
    }

    void record() {
        if (clique_.size() <= best_size_.load(std::memory_order_relaxed)) return;
        std::lock_guard lock(best_mutex_);
        if (clique_.size() > best_size_.load(std::memory_order_relaxed)) {
            best_clique_ = clique_;
            best_size_.store(clique_.size(), std::memory_order_relaxed);
        }
    }

    const Graph& g_;
    SearchControl& control_;
    std::atomic<std::size_t>& best_size_;
    std::mutex& best_mutex_;
    std::vector<std::size_t>& best_clique_;
    std::vector<std::size_t> clique_;
};

// Decision search: is there a clique of `need` vertices inside `p`?
bool has_clique(const Graph& g, const Bitset& p, std::size_t need, std::vector<std::size_t>& clique,
                std::uint64_t& nodes) {
    if (need == 0) return true;
    ++nodes;
    std::vector<std::size_t> order, colours;
    colour_sort(g, p, order, colours);
    Bitset rest = p;
    for (std::size_t k = order.size(); k-- > 0;) {
        if (colours[k] < need) return false;
        const std::size_t v = order[k];
        clique.push_back(v);
        if (has_clique(g, rest & g.adjacency[v], need - 1, clique, nodes)) return true;
        clique.pop_back();
        rest.reset(v);
    }
    return false;
}

void cliques_rec(const Graph& g, const Bitset& p, std::size_t need, std::vector<std::size_t>& current,
                 const std::function<void(const std::vector<std::size_t>&)>& visit) {
    if (need == 0) {
        visit(current);
        return;
    }
    if (p.count() < need) return;
    p.for_each([&](std::size_t v) {
        Bitset next = p & g.adjacency[v];
        next.clear_through(v);
        current.push_back(v);
        cliques_rec(g, next, need - 1, current, visit);
        current.pop_back();
    });
}

}  // namespace

CliqueOutcome maximum_clique(const Graph& g, SearchControl& control, unsigned threads) {
    CliqueOutcome out;
    if (g.order == 0) return out;

    std::vector<std::size_t> order, colours;
    colour_sort(g, Bitset::full(g.order), order, colours);

    std::atomic<std::size_t> best_size{0};
    std::mutex best_mutex;
    std::atomic<std::size_t> next_root{0};

    // Root branch k takes order[k] with candidates among order[0..k-1];
    // branches are handed out from the highest colour down.
    auto work = [&] {
        MaxCliqueWorker worker(g, control, best_size, best_mutex, out.clique);
        for (;;) {
            const std::size_t taken = next_root.fetch_add(1);
            if (taken >= order.size() || control.stopped()) return;
            const std::size_t k = order.size() - 1 - taken;
            if (colours[k] <= best_size.load(std::memory_order_relaxed)) return;
            Bitset candidates(g.order);
            for (std::size_t i = 0; i < k; ++i) candidates.set(order[i]);
            candidates &= g.adjacency[order[k]];
            worker.branch(order[k], std::move(candidates));
        }
    };

    if (threads <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    }
    out.complete = !control.stopped();
    return out;
}

std::vector<std::size_t> lex_least_clique(const Graph& g, std::size_t k, SearchControl& control) {
    std::vector<std::size_t> chosen;
    if (k == 0) return chosen;
    std::uint64_t nodes = 0;
    Bitset p = Bitset::full(g.order);
    for (std::size_t v = 0; v < g.order && chosen.size() < k; ++v) {
        if (!p.test(v)) continue;
        Bitset next = p & g.adjacency[v];
        std::vector<std::size_t> scratch;
        if (has_clique(g, next, k - chosen.size() - 1, scratch, nodes)) {
            chosen.push_back(v);
            p = std::move(next);
        } else {
            p.reset(v);
        }
    }
    control.add_untracked(nodes);
    if (chosen.size() != k) chosen.clear();
    return chosen;
}

void for_each_clique(const Graph& g, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> current;
    cliques_rec(g, Bitset::full(g.order), k, current, visit);
}

}  // namespace equidist::detail
