#pragma once

#include <string>
#include <vector>

namespace kergrad {

// One verification check: a stable name, a verdict, and a detail line quoting
// the exact values the verdict rests on.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// The twelve headline checks, in the order the acceptance run reports them.
CheckResult check_series_bracket();          // 1: depth-40 series brackets 1/3
CheckResult check_folner_crosscheck();       // 2: box estimates settle near 1/3
CheckResult check_census_measures();         // 3: window-8 census measures
CheckResult check_loop_trees();              // 4: joint kernels of loop trees
CheckResult check_family_kernels();          // 5: closed forms vs elimination
CheckResult check_series_vs_closed_form();   // 6: bracket contains the closed form
CheckResult check_measure_exhaustivity();    // 7: corrected masses fill the space
CheckResult check_alternating_bracket();     // 8: nested brackets, width < 2^-60
CheckResult check_sigma_injective();         // 9: 1024 distinct set values
CheckResult check_structural_identities();   // 10: expansion and halving, per box
CheckResult check_projection_suite();        // 11: reduction, rank, refinement
CheckResult check_component_suite();         // 12: censused components

// Named suites runnable from the command line.  Unknown names throw
// std::invalid_argument.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
std::vector<CheckResult> run_suite(const std::string& suite);

}  // namespace kergrad
