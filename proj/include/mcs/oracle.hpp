// Brute-force ground truth for small instances. Test/acceptance machinery,
// not a production solver.
#pragma once

#include "mcs/core.hpp"

namespace mcs {

struct OracleResult {
    Permutation perm;
    Time makespan = 0;
};

// Exact optimum by exhaustive permutation search. Branches whose partial
// schedule already reaches the incumbent are cut, which never discards a
// strictly better completion, so the result stays exhaustive in the decision
// sense. Returns the lexicographically smallest optimal permutation.
// Refuses instances with more than max_tasks tasks.
OracleResult brute_force_optimum(const Instance& instance, int max_tasks = 9);

// Independent second oracle for two-level instances: enumerates every
// Lo -> (Hi | uncovered) assignment and returns the minimal sum of covering
// block lengths plus uncovered Lo processing times. Guarded to at most
// 12 Lo-tasks and 6 Hi-tasks.
Time brute_force_assignments_mc2(const Instance& instance);

}  // namespace mcs
