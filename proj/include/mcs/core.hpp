// Data model and schedule semantics for non-preemptive mixed-criticality
// match-up scheduling on a single machine (1|mc=L,mu|Cmax).
//
// A task ("F-shape") has a criticality X and strictly increasing processing
// times p(1) < ... < p(X), one per criticality level. A schedule assigns a
// start time to every task; it is feasible when every pair of tasks is
// separated at their highest common criticality level.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace mcs {

using TaskId = std::int32_t;
using Time = std::int64_t;
using Level = std::int32_t;

// Sentinel for "no task" in assignment structures.
inline constexpr TaskId kNoTask = -1;

// Malformed user input (bad arguments, invalid instances, unknown ids).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed file content; message carries file/line/field context.
struct ParseError : InputError {
    using InputError::InputError;
};

// One mixed-criticality task. Immutable after construction; the constructor
// enforces proc nonempty, all entries >= 1 and strictly increasing.
class FShape {
  public:
    FShape(TaskId id, std::vector<Time> proc);

    TaskId id() const { return id_; }
    Level criticality() const { return static_cast<Level>(proc_.size()); }
    const std::vector<Time>& proc() const { return proc_; }

    // Processing time at criticality level l, 1-based, 1 <= l <= criticality().
    Time p(Level l) const { return proc_[static_cast<std::size_t>(l) - 1]; }
    Time bcet() const { return proc_.front(); }
    Time wcet() const { return proc_.back(); }

    bool operator==(const FShape& o) const { return id_ == o.id_ && proc_ == o.proc_; }

  private:
    TaskId id_;
    std::vector<Time> proc_;
};

// A set of F-shaped tasks with distinct ids. max_criticality() is the largest
// criticality present (1 for an empty instance).
class Instance {
  public:
    Instance() = default;
    explicit Instance(std::vector<FShape> tasks);

    const std::vector<FShape>& tasks() const { return tasks_; }
    std::size_t size() const { return tasks_.size(); }
    bool empty() const { return tasks_.empty(); }
    Level max_criticality() const { return max_criticality_; }

    bool contains(TaskId id) const { return index_.count(id) > 0; }
    const FShape& task(TaskId id) const;

    bool operator==(const Instance& o) const { return tasks_ == o.tasks_; }

  private:
    std::vector<FShape> tasks_;
    std::unordered_map<TaskId, std::size_t> index_;
    Level max_criticality_ = 1;
};

// Task order; each instance id appears exactly once (checked by operations).
struct Permutation {
    std::vector<TaskId> order;

    bool operator==(const Permutation& o) const { return order == o.order; }
};

// Start-time assignment. A Schedule value may be tentatively infeasible;
// feasibility is an explicit check (solvers build candidates incrementally).
class Schedule {
  public:
    Schedule() = default;
    explicit Schedule(std::vector<std::pair<TaskId, Time>> starts);

    bool contains(TaskId id) const;
    Time start(TaskId id) const;
    std::size_t size() const { return starts_.size(); }

    // Entries sorted by task id.
    const std::vector<std::pair<TaskId, Time>>& entries() const { return starts_; }

  private:
    std::vector<std::pair<TaskId, Time>> starts_;  // sorted by id
};

struct CriticalPathEntry {
    TaskId task;
    Level level;

    bool operator==(const CriticalPathEntry& o) const {
        return task == o.task && level == o.level;
    }
};

// Chain of (task, level) pairs tiling [0, makespan]: each entry's level-l
// completion equals the next entry's start, and the lengths sum to the
// makespan. Lengthening any entry's p(l) by 1 lengthens the makespan by 1.
struct CriticalPath {
    std::vector<CriticalPathEntry> entries;
};

struct FeasibilityResult {
    bool feasible = true;
    // First violating pair (ascending id order) and the level they overlap at.
    TaskId first = kNoTask;
    TaskId second = kNoTask;
    Level level = 0;
};

// Earliest-start schedule for the given order: the k-th task starts at
// max(0, max over earlier j of s_j + p_j(min(X_j, X_k))). The start depends
// on all preceding tasks, not only the immediate predecessor.
Schedule left_shift(const Instance& instance, const Permutation& perm);

// max over tasks of s_i + p_i(X_i); 0 for an empty instance.
Time makespan(const Instance& instance, const Schedule& sched);

// Pairwise check: s_i + p_i(min(X_i,X_j)) <= s_j or symmetric, for all i != j.
FeasibilityResult check_feasibility(const Instance& instance, const Schedule& sched);

// Canonical critical path of the left-shifted schedule of perm. Walks backward
// from a makespan-defining task along tight predecessor links; ties resolved
// toward the largest task id.
CriticalPath critical_path(const Instance& instance, const Permutation& perm);

// Throws InputError unless perm is a bijection onto the instance's task ids.
void validate_permutation(const Instance& instance, const Permutation& perm);

}  // namespace mcs
