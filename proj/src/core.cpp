#include "mcs/core.hpp"

#include <algorithm>
#include <limits>

namespace mcs {

FShape::FShape(TaskId id, std::vector<Time> proc) : id_(id), proc_(std::move(proc)) {
    if (proc_.empty())
        throw InputError("task " + std::to_string(id_) + ": processing-time vector is empty");
    Time prev = 0;
    for (Time p : proc_) {
        if (p < 1)
            throw InputError("task " + std::to_string(id_) + ": processing times must be >= 1");
        if (p <= prev)
            throw InputError("task " + std::to_string(id_) +
                             ": processing times must be strictly increasing");
        prev = p;
    }
}

Instance::Instance(std::vector<FShape> tasks) : tasks_(std::move(tasks)) {
    index_.reserve(tasks_.size());
    for (std::size_t i = 0; i < tasks_.size(); ++i) {
        auto [it, inserted] = index_.emplace(tasks_[i].id(), i);
        if (!inserted)
            throw InputError("duplicate task id " + std::to_string(tasks_[i].id()));
        max_criticality_ = std::max(max_criticality_, tasks_[i].criticality());
    }
}

const FShape& Instance::task(TaskId id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw InputError("unknown task id " + std::to_string(id));
    return tasks_[it->second];
}

Schedule::Schedule(std::vector<std::pair<TaskId, Time>> starts) : starts_(std::move(starts)) {
    std::sort(starts_.begin(), starts_.end());
    for (std::size_t i = 1; i < starts_.size(); ++i)
        if (starts_[i].first == starts_[i - 1].first)
            throw InputError("duplicate task id " + std::to_string(starts_[i].first) +
                             " in schedule");
    for (const auto& [id, s] : starts_)
        if (s < 0)
            throw InputError("task " + std::to_string(id) + ": negative start time");
}

bool Schedule::contains(TaskId id) const {
    auto it = std::lower_bound(starts_.begin(), starts_.end(),
                               std::make_pair(id, std::numeric_limits<Time>::min()));
    return it != starts_.end() && it->first == id;
}

Time Schedule::start(TaskId id) const {
    auto it = std::lower_bound(starts_.begin(), starts_.end(),
                               std::make_pair(id, std::numeric_limits<Time>::min()));
    if (it == starts_.end() || it->first != id)
        throw InputError("schedule has no task " + std::to_string(id));
    return it->second;
}

void validate_permutation(const Instance& instance, const Permutation& perm) {
    if (perm.order.size() != instance.size())
        throw InputError("permutation covers " + std::to_string(perm.order.size()) +
                         " tasks, instance has " + std::to_string(instance.size()));
    std::vector<TaskId> seen;
    seen.reserve(perm.order.size());
    for (TaskId id : perm.order) {
        if (!instance.contains(id))
            throw InputError("permutation names unknown task id " + std::to_string(id));
        seen.push_back(id);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw InputError("permutation repeats a task id");
}

Schedule left_shift(const Instance& instance, const Permutation& perm) {
    validate_permutation(instance, perm);
    std::vector<std::pair<TaskId, Time>> starts;
    starts.reserve(perm.order.size());
    std::vector<const FShape*> placed;
    placed.reserve(perm.order.size());
    std::vector<Time> placed_start;
    placed_start.reserve(perm.order.size());

    for (TaskId id : perm.order) {
        const FShape& tk = instance.task(id);
        Time s = 0;
        for (std::size_t j = 0; j < placed.size(); ++j) {
            Level common = std::min(placed[j]->criticality(), tk.criticality());
            s = std::max(s, placed_start[j] + placed[j]->p(common));
        }
        starts.emplace_back(id, s);
        placed.push_back(&tk);
        placed_start.push_back(s);
    }
    return Schedule(std::move(starts));
}

Time makespan(const Instance& instance, const Schedule& sched) {
    Time best = 0;
    for (const FShape& tk : instance.tasks())
        best = std::max(best, sched.start(tk.id()) + tk.wcet());
    return best;
}

FeasibilityResult check_feasibility(const Instance& instance, const Schedule& sched) {
    // Pairs in ascending id order so the reported violation is deterministic.
    std::vector<const FShape*> tasks;
    tasks.reserve(instance.size());
    for (const FShape& tk : instance.tasks()) {
        sched.start(tk.id());  // throws on missing coverage
        tasks.push_back(&tk);
    }
    std::sort(tasks.begin(), tasks.end(),
              [](const FShape* a, const FShape* b) { return a->id() < b->id(); });

    for (std::size_t i = 0; i < tasks.size(); ++i) {
        for (std::size_t j = i + 1; j < tasks.size(); ++j) {
            const FShape& a = *tasks[i];
            const FShape& b = *tasks[j];
            Level common = std::min(a.criticality(), b.criticality());
            Time sa = sched.start(a.id());
            Time sb = sched.start(b.id());
            bool ok = (sa + a.p(common) <= sb) || (sb + b.p(common) <= sa);
            if (!ok) return {false, a.id(), b.id(), common};
        }
    }
    return {};
}

CriticalPath critical_path(const Instance& instance, const Permutation& perm) {
    CriticalPath cp;
    if (instance.empty()) return cp;

    Schedule sched = left_shift(instance, perm);
    Time cmax = makespan(instance, sched);

    // Last entry: a task whose top-level completion defines the makespan
    // (largest id among ties).
    const FShape* cur = nullptr;
    for (const FShape& tk : instance.tasks()) {
        if (sched.start(tk.id()) + tk.wcet() != cmax) continue;
        if (cur == nullptr || tk.id() > cur->id()) cur = &tk;
    }
    cp.entries.push_back({cur->id(), cur->criticality()});

    // Walk tight predecessor links back to time zero. In a left-shifted
    // schedule every positive start is met with equality by some earlier
    // task's p(min(X_j, X_cur)) completion.
    while (sched.start(cur->id()) > 0) {
        Time scur = sched.start(cur->id());
        const FShape* pred = nullptr;
        for (const FShape& tk : instance.tasks()) {
            Time s = sched.start(tk.id());
            if (s >= scur) continue;
            Level common = std::min(tk.criticality(), cur->criticality());
            if (s + tk.p(common) != scur) continue;
            if (pred == nullptr || tk.id() > pred->id()) pred = &tk;
        }
        if (pred == nullptr)
            throw std::logic_error("left-shifted schedule has a start with no tight predecessor");
        Level common = std::min(pred->criticality(), cur->criticality());
        cp.entries.insert(cp.entries.begin(), {pred->id(), common});
        cur = pred;
    }
    return cp;
}

}  // namespace mcs
