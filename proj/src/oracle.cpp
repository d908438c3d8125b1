#include "mcs/oracle.hpp"

#include <algorithm>
#include <limits>

namespace mcs {

namespace {

struct PermSearch {
    const std::vector<FShape>* tasks;
    std::vector<int> current;     // indices into *tasks, prefix is the partial order
    std::vector<bool> used;
    std::vector<Time> starts;     // start of current[k]
    Time partial_end = 0;         // max top-level completion among placed tasks
    Time best = 0;
    std::vector<int> best_order;
    bool have_best = false;

    void dfs(std::size_t depth) {
        const auto& ts = *tasks;
        if (depth == ts.size()) {
            if (!have_best || partial_end < best) {
                best = partial_end;
                best_order = current;
                have_best = true;
            }
            return;
        }
        for (std::size_t i = 0; i < ts.size(); ++i) {
            if (used[i]) continue;
            Time s = 0;
            for (std::size_t k = 0; k < depth; ++k) {
                const FShape& prev = ts[static_cast<std::size_t>(current[k])];
                Level common = std::min(prev.criticality(), ts[i].criticality());
                s = std::max(s, starts[k] + prev.p(common));
            }
            Time end = s + ts[i].wcet();
            Time new_partial = std::max(partial_end, end);
            // Completions only grow as tasks are appended; an incumbent-sized
            // prefix cannot improve.
            if (have_best && new_partial >= best) continue;

            used[i] = true;
            current[depth] = static_cast<int>(i);
            starts[depth] = s;
            Time saved = partial_end;
            partial_end = new_partial;
            dfs(depth + 1);
            partial_end = saved;
            used[i] = false;
        }
    }
};

}  // namespace

OracleResult brute_force_optimum(const Instance& instance, int max_tasks) {
    if (static_cast<int>(instance.size()) > max_tasks)
        throw InputError("brute_force_optimum: instance has " + std::to_string(instance.size()) +
                         " tasks, cap is " + std::to_string(max_tasks));
    if (instance.empty()) return {Permutation{}, 0};

    // Ascending id order makes the DFS visit permutations lexicographically,
    // so the first incumbent at the optimal value is the lex-smallest optimum.
    std::vector<FShape> tasks = instance.tasks();
    std::sort(tasks.begin(), tasks.end(),
              [](const FShape& a, const FShape& b) { return a.id() < b.id(); });

    PermSearch search;
    search.tasks = &tasks;
    search.current.resize(tasks.size());
    search.used.assign(tasks.size(), false);
    search.starts.resize(tasks.size());
    search.dfs(0);

    Permutation perm;
    perm.order.reserve(tasks.size());
    for (int idx : search.best_order) perm.order.push_back(tasks[static_cast<std::size_t>(idx)].id());
    return {std::move(perm), search.best};
}

namespace {

struct AssignSearch {
    std::vector<Time> lo;         // Lo p(1), descending
    std::vector<Time> hi_p1;
    std::vector<Time> hi_p2;
    std::vector<Time> hi_load;    // Lo work currently assigned per Hi
    Time uncovered_cost = 0;
    Time best = 0;

    Time objective() const {
        Time total = uncovered_cost;
        for (std::size_t i = 0; i < hi_p1.size(); ++i)
            total += std::max(hi_p1[i] + hi_load[i], hi_p2[i]);
        return total;
    }

    void dfs(std::size_t k) {
        Time obj = objective();
        if (obj >= best) return;  // assignments only ever add length
        if (k == lo.size()) {
            best = obj;
            return;
        }
        for (std::size_t i = 0; i < hi_p1.size(); ++i) {
            hi_load[i] += lo[k];
            dfs(k + 1);
            hi_load[i] -= lo[k];
        }
        uncovered_cost += lo[k];
        dfs(k + 1);
        uncovered_cost -= lo[k];
    }
};

}  // namespace

Time brute_force_assignments_mc2(const Instance& instance) {
    if (instance.max_criticality() > 2)
        throw InputError("brute_force_assignments_mc2: instance has criticality > 2");

    AssignSearch search;
    for (const FShape& tk : instance.tasks()) {
        if (tk.criticality() == 1) {
            search.lo.push_back(tk.p(1));
        } else {
            search.hi_p1.push_back(tk.p(1));
            search.hi_p2.push_back(tk.p(2));
        }
    }
    if (search.lo.size() > 12 || search.hi_p1.size() > 6)
        throw InputError("brute_force_assignments_mc2: size guard (<= 12 Lo, <= 6 Hi)");

    std::sort(search.lo.rbegin(), search.lo.rend());
    search.hi_load.assign(search.hi_p1.size(), 0);
    search.best = std::numeric_limits<Time>::max();
    search.dfs(0);
    return search.best;
}

}  // namespace mcs
