// Acceptance suite: one PASS/FAIL line per criterion. Tolerances and time
// limits are fixed here; a criterion fails if either its checks or its time
// budget fail. Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sesqui/error.hpp"
#include "sesqui/families.hpp"
#include "sesqui/graph6.hpp"
#include "sesqui/hoffman.hpp"
#include "sesqui/quasiclique.hpp"
#include "sesqui/regularity.hpp"
#include "sesqui/spectral.hpp"
#include "sesqui/verifier.hpp"

using namespace sesqui;

namespace {

constexpr double kClosedFormTol = 1e-8;
constexpr double kOrderTol = 1e-9;
constexpr double kRouteTol = 1e-8;
constexpr double kConvergenceGap = 0.12;

struct Verdict {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back("failed: " + what);
        }
    }
    void info(const std::string& what) { notes.push_back(what); }
};

std::string fmt(const char* pattern, double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, pattern, value);
    return buffer;
}

// 1. Closed-form eigenvalues of the named Hoffman families.
Verdict closed_forms() {
    Verdict o;
    double worst_ht = 0.0, worst_ht1 = 0.0, worst_cn = 0.0;
    for (std::size_t t = 1; t <= 10; ++t) {
        const double td = static_cast<double>(t);
        worst_ht = std::max(worst_ht, std::abs(lambda_min(catalog::h_t(t).hoffman) + td));
        const double expected = (-td - 1.0 - std::sqrt(td * td - 2.0 * td + 5.0)) / 2.0;
        worst_ht1 = std::max(worst_ht1, std::abs(lambda_min(catalog::h_t1(t).hoffman) - expected));
    }
    for (std::size_t n = 1; n <= 20; ++n) {
        const double expected = (-1.0 - std::sqrt(1.0 + 4.0 * static_cast<double>(n))) / 2.0;
        worst_cn = std::max(worst_cn, std::abs(lambda_min(catalog::c_n(n).hoffman) - expected));
    }
    o.require(worst_ht < kClosedFormTol, "h^(t) residual " + fmt("%.3g", worst_ht));
    o.require(worst_ht1 < kClosedFormTol, "h^(t,1) residual " + fmt("%.3g", worst_ht1));
    o.require(worst_cn < kClosedFormTol, "c_n residual " + fmt("%.3g", worst_cn));

    // q(H) against the stated identity lambda_min(q(H)) = -lambda_max(co-H),
    // and alongside it the identity that the special matrix A_H - J obeys.
    std::mt19937_64 rng(20240601);
    double worst_stated = 0.0, best_stated = 1e300, worst_corrected = 0.0;
    for (int i = 0; i < 100; ++i) {
        const auto h = oracle::random_graph(rng, 1, 8);
        const double lm = lambda_min(catalog::q_of(h).hoffman);
        const double co_max = lambda_max(complement(h));
        const double stated = std::abs(lm + co_max);
        worst_stated = std::max(worst_stated, stated);
        best_stated = std::min(best_stated, stated);
        worst_corrected = std::max(worst_corrected, std::abs(lm - (-1.0 - co_max)));
    }
    o.require(worst_stated < kClosedFormTol,
              "q(H): |lambda_min(q(H)) + lambda_max(co-H)| over 100 random H ranges " + fmt("%.6g", best_stated) +
                  ".." + fmt("%.6g", worst_stated) + " (limit 1e-8)");
    o.info("info: |lambda_min(q(H)) - (-1 - lambda_max(co-H))| max " + fmt("%.3g", worst_corrected) +
           " over the same 100 graphs");
    o.info("h^(t) " + fmt("%.2g", worst_ht) + ", h^(t,1) " + fmt("%.2g", worst_ht1) + ", c_n " +
           fmt("%.2g", worst_cn));
    return o;
}

// 2. Expansion lower bound, monotonicity, and the h^(3) gap at p = 50.
Verdict expansion_laws() {
    Verdict o;
    for (const auto& entry : {catalog::h_t(2), catalog::h_t(3), catalog::c_n(3), catalog::h_t1(2)}) {
        const double floor = lambda_min(entry.hoffman);
        double previous = 0.0;
        for (std::size_t p = 1; p <= 50; ++p) {
            const double value = lambda_min(expand(entry.hoffman, p));
            o.require(value >= floor - kOrderTol, entry.name + " below lambda_min(h) at p=" + std::to_string(p));
            if (p > 1) {
                o.require(value <= previous + kOrderTol, entry.name + " increases at p=" + std::to_string(p));
            }
            previous = value;
        }
    }
    const double at50 = lambda_min(expand(catalog::h_t(3).hoffman, 50));
    const double quotient = (49.0 - std::sqrt(49.0 * 49.0 + 12.0 * 50.0)) / 2.0;
    o.require(at50 - (-3.0) < kConvergenceGap, "h^(3) gap at p=50 is " + fmt("%.6g", at50 + 3.0));
    o.require(std::abs(at50 - quotient) < kOrderTol, "h^(3) p=50 disagrees with quotient closed form");
    o.info("h^(3) p=50: " + fmt("%.10f", at50) + ", gap " + fmt("%.4f", at50 + 3.0));
    return o;
}

// 3. t'(2), t'(3), m'(2), m'(3) with the two-route check.
Verdict constants() {
    Verdict o;
    o.require(t_prime(2) == 5, "t'(2) = " + std::to_string(t_prime(2)));
    o.require(t_prime(3) == 10, "t'(3) = " + std::to_string(t_prime(3)));
    for (const auto& [lambda, expected] : {std::pair{2.0, std::size_t{4}}, std::pair{3.0, std::size_t{12}}}) {
        const auto r = m_prime(lambda);
        o.require(r.m == expected, "m'(" + fmt("%g", lambda) + ") = " + std::to_string(r.m));
        double worst = 0.0;
        for (const auto& step : r.scan) worst = std::max(worst, std::abs(step.full_eigensolve - step.quotient_root));
        o.require(worst < kRouteTol, "m' routes differ by " + fmt("%.3g", worst));
        o.info("m'(" + fmt("%g", lambda) + ")=" + std::to_string(r.m) + " route gap " + fmt("%.2g", worst));
    }
    return o;
}

// 4. Interlacing for graphs and for Hoffman graphs.
Verdict interlacing() {
    Verdict o;
    std::mt19937_64 rng(4242);
    for (int i = 0; i < 200; ++i) {
        const auto g = oracle::random_graph(rng, 1, 12);
        const auto sub = induced_subgraph(g, oracle::random_subset(rng, g.order(), 1));
        o.require(lambda_min(sub) >= lambda_min(g) - kOrderTol, "graph pair " + std::to_string(i));
    }
    int pairs = 0;
    while (pairs < 100) {
        const auto h = oracle::random_hoffman(rng, 8, 3);
        const auto subset = oracle::random_subset(rng, h.underlying().order(), 1);
        try {
            const auto sub = induced_hoffman(h, subset);
            if (sub.slim_vertices().empty()) continue;
            o.require(lambda_min(sub) >= lambda_min(h) - kOrderTol, "Hoffman pair " + std::to_string(pairs));
            ++pairs;
        } catch (const HoffmanConditionError&) {
            // Not a valid induced Hoffman subgraph; draw again.
        }
    }
    o.info("200 graph pairs, 100 Hoffman pairs");
    return o;
}

// 5. Quasi-clique recovery on expansions at p = 30, (m, n) = (2, 25).
Verdict recovery() {
    Verdict o;
    for (const auto& entry : {catalog::h_t(1), catalog::h_t(2), catalog::h_t(3), catalog::c_n(3), catalog::h_t1(2)}) {
        const auto& h = entry.hoffman;
        try {
            const auto a = associated_hoffman_graph(expand(h, 30), 2, 25);
            o.require(a.hoffman.fat_vertices().size() == h.fat_vertices().size(),
                      entry.name + ": " + std::to_string(a.hoffman.fat_vertices().size()) + " fat vertices");
            std::vector<bool> used(a.system.classes.size(), false);
            for (std::size_t i = 0; i < h.fat_vertices().size(); ++i) {
                const auto block = expansion_block(h, 30, i);
                bool found = false;
                for (std::size_t c = 0; c < a.system.classes.size() && !found; ++c) {
                    const auto& q = a.system.classes[c].quasi_clique;
                    if (!used[c] && std::includes(q.begin(), q.end(), block.begin(), block.end())) {
                        used[c] = true;
                        found = true;
                    }
                }
                o.require(found, entry.name + ": block " + std::to_string(i) + " not inside a quasi-clique");
            }
        } catch (const TransitivityViolation& e) {
            o.require(false, entry.name + ": " + e.what());
        }
    }
    return o;
}

// 6. Neumaier disjunction and the c / v-k-1 dichotomy on the corpus.
Verdict theorem_corpus() {
    Verdict o;
    const auto entries = corpus_run();
    std::size_t srg = 0, sesqui = 0;
    for (const auto& e : entries) {
        if (e.neumaier) {
            ++srg;
            o.require(e.neumaier->outcome != "violated", e.subject + ": Neumaier disjunction fails");
        }
        if (e.profile.is_sesqui_regular()) {
            ++sesqui;
            o.require(e.theorem5 && e.theorem5->outcome != sesqui::Outcome::Violated,
                      e.subject + ": no branch holds");
        }
    }
    auto find = [&](const std::string& subject) -> const CorpusEntry* {
        for (const auto& e : entries)
            if (e.subject == subject) return &e;
        return nullptr;
    };
    const auto* petersen = find("petersen");
    o.require(petersen && petersen->theorem5 && petersen->theorem5->outcome == sesqui::Outcome::BranchI &&
                  petersen->profile.sesqui_c == 1u && petersen->theorem5->bound_i == 4.0,
              "Petersen is not branch_i with c=1 <= 4");
    const auto* k333 = find("k3,3,3");
    o.require(k333 && k333->theorem5 && k333->theorem5->outcome == sesqui::Outcome::Both, "K3,3,3 is not both");
    const auto* rook = find("rook3x3");
    o.require(rook && rook->theorem5 && rook->theorem5->outcome == sesqui::Outcome::BranchI &&
                  rook->profile.sesqui_c == 2u && rook->theorem5->lambda == 2,
              "rook 3x3 is not branch_i with c=2=lambda(lambda-1)");
    o.info(std::to_string(srg) + " SRGs checked, " + std::to_string(sesqui) + " sesqui-regular graphs checked");
    return o;
}

// 7. Isolated-vertex lemma at lambda = 2.
Verdict isolated_vertex() {
    Verdict o;
    const auto r = lemma_isolated_vertex_check(2);
    o.require(r.classes.size() == 34, std::to_string(r.classes.size()) + " isomorphism classes");
    o.require(r.all_pass, "some class has lambda_min(q(H)) >= -2");
    if (!r.classes.empty()) {
        const auto& best = r.classes[r.maximiser];
        o.info("maximiser " + best.graph6 + " lambda_min(q(H))=" + fmt("%.10f", best.lambda_min_q) +
               (r.maximiser_is_k5_k1 ? " (is K5 u K1)" : " (differs from K5 u K1)") + ", min margin " +
               fmt("%.6f", r.min_margin));
        o.info("at p'=" + (r.p_prime ? std::to_string(*r.p_prime) : std::string("none")) +
               " the largest lambda_min(G(q(H),p')) is attained by " + r.classes[r.expansion_maximiser].graph6 +
               (r.remark_consistent ? "; K5 u K1 attains it" : "; K5 u K1 does not attain it"));
    }
    return o;
}

// 8. graph6 round trips.
Verdict graph6_round_trips() {
    Verdict o;
    o.require(graph6_encode(families::complete(3)) == "Bw" && graph6_decode("Bw") == families::complete(3), "K3 <-> Bw");
    o.require(graph6_encode(families::complete(1)) == "@" && graph6_decode("@") == families::complete(1), "K1 <-> @");
    o.require(graph6_encode(families::path(3)) == "Bg" && graph6_decode("Bg") == families::path(3), "P3 <-> Bg");
    std::mt19937_64 rng(806);
    int failures = 0;
    for (int i = 0; i < 500; ++i) {
        const auto g = oracle::random_graph(rng, 0, 30);
        if (graph6_decode(graph6_encode(g)) != g) ++failures;
    }
    o.require(failures == 0, std::to_string(failures) + " of 500 random round trips differ");
    return o;
}

// 9. Fast regularity profile against the brute-force definition.
Verdict profile_oracle() {
    Verdict o;
    std::mt19937_64 rng(909);
    int mismatches = 0;
    for (int i = 0; i < 200; ++i) {
        const auto g = oracle::random_graph(rng, 0, 14);
        if (!(regularity_profile(g) == oracle::brute_profile(g))) ++mismatches;
    }
    o.require(mismatches == 0, std::to_string(mismatches) + " of 200 profiles differ");
    return o;
}

struct Criterion {
    int id;
    const char* title;
    double limit_seconds;
    std::function<Verdict()> body;
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {1, "closed-form eigenvalue suite", 5.0, closed_forms},
        {2, "expansion laws", 60.0, expansion_laws},
        {3, "constants t' and m'", 5.0, constants},
        {4, "interlacing and Hoffman monotonicity", 30.0, interlacing},
        {5, "quasi-clique recovery", 30.0, recovery},
        {6, "theorem corpus", 10.0, theorem_corpus},
        {7, "isolated-vertex lemma at lambda=2", 60.0, isolated_vertex},
        {8, "graph6 round trips", 5.0, graph6_round_trips},
        {9, "regularity profile oracle", 10.0, profile_oracle},
    };
    int passed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Verdict o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        o.require(seconds < c.limit_seconds, "runtime " + fmt("%.2f", seconds) + " s");
        std::printf("%s criterion %d: %s (%.2f s, limit %.0f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.title, seconds,
                    c.limit_seconds);
        for (const auto& note : o.notes) std::printf("    %s\n", note.c_str());
        passed += o.pass ? 1 : 0;
    }
    std::printf("acceptance: %d/%zu criteria passed\n", passed, std::size(criteria));
    return passed == static_cast<int>(std::size(criteria)) ? 0 : 1;
}
