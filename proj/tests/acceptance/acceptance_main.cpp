// Acceptance gate: runs every primary criterion at its stated tolerance and
// prints exactly one verdict line per criterion.

#include <cstdio>
#include <vector>

#include "kergrad/verify.hpp"

int main() {
    using kergrad::CheckResult;
    std::vector<CheckResult> rows;
    rows.push_back(kergrad::check_series_bracket());
    rows.push_back(kergrad::check_folner_crosscheck());
    rows.push_back(kergrad::check_census_measures());
    rows.push_back(kergrad::check_loop_trees());
    rows.push_back(kergrad::check_family_kernels());
    rows.push_back(kergrad::check_series_vs_closed_form());
    rows.push_back(kergrad::check_measure_exhaustivity());
    rows.push_back(kergrad::check_alternating_bracket());
    rows.push_back(kergrad::check_sigma_injective());
    rows.push_back(kergrad::check_structural_identities());
    rows.push_back(kergrad::check_projection_suite());
    rows.push_back(kergrad::check_component_suite());

    bool ok = true;
    for (size_t i = 0; i < rows.size(); ++i) {
        const CheckResult& r = rows[i];
        std::printf("[%s] criterion %zu (%s): %s\n", r.pass ? "PASS" : "FAIL", i + 1,
                    r.name.c_str(), r.detail.c_str());
        ok = ok && r.pass;
    }
    std::printf("%zu criteria, %s\n", rows.size(), ok ? "all pass" : "FAILURES PRESENT");
    return ok ? 0 : 1;
}
