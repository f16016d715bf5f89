// Acceptance suite: one exact (zero-tolerance) criterion per line.
// Exit code 0 iff every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "verlinde/sweeps.hpp"

using namespace verlinde;

namespace {

struct Criterion {
    int id;
    std::string summary;
    std::function<std::vector<SweepResult>()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "Theorem 1 closed form vs oracle character sum (h <= 5, q <= 4, all characters)",
         [] { return std::vector<SweepResult>{sweep_theorem1(5, 4)}; }},
        {2, "Lemma chr closed trace vs Newton oracle x wedge power (h <= 5, q <= 4, all of H_h)",
         [] { return std::vector<SweepResult>{sweep_lemma_chr(5, 4)}; }},
        {3, "Lemma nl torsion sums (h <= 24) and N multiplicativity (coprime pairs <= 12)",
         [] { return std::vector<SweepResult>{sweep_lemma_nl(24, 12)}; }},
        {4, "Theorem 3 vs character-sum formula (hr <= 6, k <= 3) and the representation identity",
         [] {
             return std::vector<SweepResult>{sweep_theorem3(6, 3), sweep_final_identity()};
         }},
        {5, "pinned table values: decompose(2,2), (3,3), (2,1), (2,3)",
         [] { return std::vector<SweepResult>{sweep_concrete_tables()}; }},
        {6, "integrality, nonnegativity, rank conservation, Popa rank (R <= 6, L <= 8)",
         [] { return std::vector<SweepResult>{sweep_rank_integrality(6, 8)}; }},
        {7, "order-orbit invariance (h <= 8, q <= 3) and orbit automorphisms (h <= 6)",
         [] { return std::vector<SweepResult>{sweep_order_orbit(8, 3, 6)}; }},
        {8, "splitting criterion R | L vs reported r = 1 flag (R <= 8, L <= 12)",
         [] { return std::vector<SweepResult>{sweep_splitting(8, 12)}; }},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        bool pass = true;
        unsigned long long checks = 0;
        std::string detail;
        try {
            for (const SweepResult& r : c.run()) {
                checks += r.checks;
                if (!r.pass) {
                    pass = false;
                    detail = r.detail;
                }
            }
        } catch (const std::exception& e) {
            pass = false;
            detail = e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s  criterion %d: %s  (%llu checks, %.2fs)\n", pass ? "PASS" : "FAIL", c.id,
                    c.summary.c_str(), checks, secs);
        if (!pass) {
            std::printf("      counterexample: %s\n", detail.c_str());
            ++failures;
        }
    }
    if (failures > 0) std::printf("%d criterion/criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
