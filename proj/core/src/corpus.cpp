#include <algorithm>

#include "sesqui/families.hpp"
#include "sesqui/spectral.hpp"
#include "sesqui/verifier.hpp"

namespace sesqui {

namespace {

CorpusEntry evaluate(std::string subject, Graph g) {
    CorpusEntry e;
    e.subject = std::move(subject);
    e.profile = regularity_profile(g);
    e.lambda_min = lambda_min(g);

    if (e.profile.is_strongly_regular() && e.profile.connected) {
        try {
            e.neumaier = neumaier_check(g, e.subject);
        } catch (const InputError& err) {
            e.skipped.push_back(err.what());
        }
    } else {
        e.skipped.push_back("neumaier: not a connected strongly regular graph");
    }

    try {
        e.theorem5 = theorem5_check(g, std::nullopt, e.subject);
    } catch (const InputError& err) {
        e.skipped.push_back(err.what());
    }
    e.graph = std::move(g);
    return e;
}

}  // namespace

std::vector<CorpusEntry> corpus_run() {
    const std::size_t k333[] = {3, 3, 3};
    const std::size_t k222[] = {2, 2, 2};
    std::vector<CorpusEntry> out;
    out.push_back(evaluate("petersen", families::petersen()));
    out.push_back(evaluate("triangular5", families::triangular5()));
    out.push_back(evaluate("cycle5", families::cycle(5)));
    out.push_back(evaluate("cycle8", families::cycle(8)));
    out.push_back(evaluate("k3,3,3", families::complete_multipartite(k333)));
    out.push_back(evaluate("k2,2,2", families::complete_multipartite(k222)));
    out.push_back(evaluate("rook3x3", families::rook3x3()));

    const HoffmanCatalogEntry expansions[] = {catalog::h_t(1), catalog::h_t(2), catalog::h_t(3),
                                              catalog::h_t1(2), catalog::c_n(3)};
    const std::string labels[] = {"h_t(1)", "h_t(2)", "h_t(3)", "h_t1(2)", "c_n(3)"};
    constexpr std::size_t kCorpusM = 2;
    constexpr std::size_t kCorpusN = 25;
    for (std::size_t i = 0; i < std::size(expansions); ++i) {
        for (const std::size_t p : {10U, 30U}) {
            auto g = expand(expansions[i].hoffman, p);
            auto entry = evaluate("expand(" + labels[i] + "," + std::to_string(p) + ")", g);
            if (p >= kCorpusN) {
                const auto qcs = quasi_clique_system(g, kCorpusM, kCorpusN);
                QuasiSummary summary;
                summary.classes = qcs.classes.size();
                summary.forbidden_ok = qcs.forbidden_ok;
                const auto claim2 = claim2_check(qcs, g);
                summary.all_quasi_cliques_are_cliques =
                    std::all_of(claim2.begin(), claim2.end(), [](const auto& r) { return r.is_clique; });
                summary.claim1 = claim1_diagnostics(g, qcs, 2);
                entry.quasi = std::move(summary);
            }
            out.push_back(std::move(entry));
        }
    }
    return out;
}

}  // namespace sesqui
