// Acceptance suite: one pass/fail line per criterion; exit code is the
// number of failed criteria. With an argument 1..12 only that criterion
// runs (the ctest entries are registered per criterion).

#include <cstdio>
#include <cstdlib>

#include "schro/selfcheck.hpp"

int main(int argc, char** argv) {
    using schro::selfcheck::CheckResult;
    std::vector<CheckResult> results;
    if (argc > 1) {
        const int idx = std::atoi(argv[1]);
        using Fn = CheckResult (*)();
        static const Fn criteria[12] = {
            schro::selfcheck::criterion_fresnel_identity,
            schro::selfcheck::criterion_fresnel_constant,
            schro::selfcheck::criterion_free_propagator,
            schro::selfcheck::criterion_delta_limit,
            schro::selfcheck::criterion_transmission,
            schro::selfcheck::criterion_dirichlet_trace,
            schro::selfcheck::criterion_psi_residual,
            schro::selfcheck::criterion_supershift,
            schro::selfcheck::criterion_kappa_holomorphy,
            schro::selfcheck::criterion_special_functions,
            schro::selfcheck::criterion_oracle_agreement,
            schro::selfcheck::criterion_superosc_generator,
        };
        if (idx < 1 || idx > 12) {
            std::fprintf(stderr, "criterion index must be 1..12\n");
            return 64;
        }
        results.push_back(criteria[idx - 1]());
    } else {
        results = schro::selfcheck::run_acceptance();
    }
    int failed = 0;
    for (const auto& r : results) {
        std::printf("%s  criterion %s  [%.1fs]\n        %s\n", r.pass ? "PASS" : "FAIL",
                    r.name.c_str(), r.seconds, r.detail.c_str());
        if (!r.pass) ++failed;
    }
    if (argc <= 1)
        std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failed,
                    results.size());
    return failed;
}
