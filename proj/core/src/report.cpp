#include "sesqui/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "sesqui/graph6.hpp"

namespace sesqui {

using nlohmann::json;

double snapped(double value) {
    const double nearest = std::round(value);
    if (std::abs(value - nearest) < 1e-9) {
        return nearest == 0.0 ? 0.0 : nearest;
    }
    return value;
}

std::string format_number(double value) {
    const double v = snapped(value);
    if (v == std::round(v) && std::abs(v) < 1e15) {
        return std::to_string(static_cast<long long>(v));
    }
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.10g", v);
    return buffer;
}

namespace {

json optional_count(const std::optional<std::size_t>& value) {
    return value ? json(*value) : json(nullptr);
}

json edge_json(const Edge& e) { return json::array({e.first, e.second}); }

}  // namespace

json to_json(const RegularityProfile& p) {
    return {
        {"order", p.order},
        {"is_regular", p.is_regular},
        {"k", optional_count(p.k)},
        {"sesqui_c", optional_count(p.sesqui_c)},
        {"srg_a", optional_count(p.srg_a)},
        {"coedge_c", optional_count(p.coedge_c)},
        {"diameter_at_most_2", p.diameter_at_most_2},
        {"connected", p.connected},
        {"vacuous_c", p.vacuous_c},
        {"sesqui_regular", p.is_sesqui_regular()},
        {"coedge_regular", p.is_coedge_regular()},
        {"strongly_regular", p.is_strongly_regular()},
    };
}

json to_json(const SymmetricSpectrum& s) {
    json values = json::array();
    for (const double v : s.values) values.push_back(snapped(v));
    return {{"lambda_min", snapped(s.min())}, {"lambda_max", snapped(s.max())},
            {"values", values}, {"tolerance", s.tolerance}};
}

json to_json(const HoffmanGraph& h) {
    return {{"graph6", graph6_encode(h.underlying())},
            {"slim", h.slim_vertices()},
            {"fat", h.fat_vertices()}};
}

json to_json(const QuasiCliqueSystem& s) {
    json classes = json::array();
    for (std::size_t i = 0; i < s.classes.size(); ++i) {
        classes.push_back({{"index", i},
                           {"cliques", s.classes[i].cliques},
                           {"quasi_clique", s.classes[i].quasi_clique}});
    }
    return {{"m", s.m}, {"n", s.n}, {"forbidden_ok", s.forbidden_ok}, {"classes", classes}};
}

json to_json(const Claim1Report& r) {
    json vertices = json::array();
    for (const auto& v : r.vertices) {
        vertices.push_back({{"vertex", v.vertex},
                            {"containing", v.containing},
                            {"max_neighbours_outside", v.max_neighbours_outside},
                            {"max_non_neighbours_inside", v.max_non_neighbours_inside},
                            {"uncovered_neighbour", v.uncovered_neighbour}});
    }
    return {{"lambda", r.lambda},
            {"all_hold", r.all_hold()},
            {"exceed_count", r.exceed_count},
            {"exceed_cover", r.exceed_cover},
            {"exceed_neighbours", r.exceed_neighbours},
            {"exceed_non_neighbours", r.exceed_non_neighbours},
            {"vertices", vertices}};
}

json to_json(const std::vector<Claim2Result>& results) {
    json out = json::array();
    for (const auto& r : results) {
        out.push_back({{"class", r.class_index},
                       {"is_clique", r.is_clique},
                       {"non_adjacent_pair", r.non_adjacent_pair ? edge_json(*r.non_adjacent_pair)
                                                                 : json(nullptr)}});
    }
    return out;
}

json to_json(const std::vector<FamilyHit>& hits) {
    json out = json::array();
    for (const auto& h : hits) {
        out.push_back({{"name", h.name}, {"found", h.found}, {"witness", h.witness}});
    }
    return out;
}

json to_json(const NeumaierReport& r) {
    return {{"subject", r.subject},
            {"lambda", r.lambda},
            {"profile", to_json(r.profile)},
            {"complete_multipartite", r.complete_multipartite},
            {"bound", r.bound},
            {"margin", r.margin},
            {"bound_holds", r.bound_holds},
            {"outcome", r.outcome}};
}

json to_json(const VerificationReport& r) {
    json margins = json::object();
    for (const auto& [name, value] : r.margins) margins[name] = snapped(value);
    return {{"subject", r.subject},
            {"lambda", r.lambda},
            {"lambda_min", snapped(r.lambda_min)},
            {"profile", to_json(r.profile)},
            {"outcome", to_string(r.outcome)},
            {"bound_i", r.bound_i},
            {"bound_ii", r.bound_ii},
            {"margins", margins},
            {"warnings", r.warnings}};
}

json to_json(const MPrimeResult& r) {
    json scan = json::array();
    for (const auto& s : r.scan) {
        scan.push_back({{"m", s.m}, {"full_eigensolve", s.full_eigensolve}, {"quotient_root", s.quotient_root}});
    }
    return {{"m_prime", r.m}, {"marginal", r.marginal}, {"scan", scan}};
}

json to_json(const ExpansionOrder& r) {
    json trace = json::array();
    for (std::size_t i = 0; i < r.trace.size(); ++i) {
        trace.push_back({{"p", i + 1}, {"lambda_min", r.trace[i]}});
    }
    return {{"order", optional_count(r.order)},
            {"permanent", r.permanent},
            {"marginal", r.marginal},
            {"trace", trace}};
}

json to_json(const IsolatedVertexReport& r) {
    json classes = json::array();
    for (const auto& c : r.classes) {
        classes.push_back({{"graph6", c.graph6},
                           {"lambda_min_q", snapped(c.lambda_min_q)},
                           {"margin", snapped(c.margin)},
                           {"expansion_order", optional_count(c.expansion_order)},
                           {"lambda_min_at_p_prime", snapped(c.lambda_min_at_p_prime)}});
    }
    return {{"lambda", r.lambda},
            {"labelled_graphs", r.labelled_graphs},
            {"isomorphism_classes", r.classes.size()},
            {"all_pass", r.all_pass},
            {"min_margin", r.min_margin},
            {"maximiser", r.classes.empty() ? json(nullptr) : json(r.classes[r.maximiser].graph6)},
            {"maximiser_is_k5_k1", r.maximiser_is_k5_k1},
            {"p_prime", optional_count(r.p_prime)},
            {"expansion_maximiser",
             r.classes.empty() ? json(nullptr) : json(r.classes[r.expansion_maximiser].graph6)},
            {"remark_consistent", r.remark_consistent},
            {"classes", classes}};
}

json to_json(const CorpusEntry& e) {
    json out = {{"subject", e.subject},
                {"graph6", graph6_encode(e.graph)},
                {"lambda_min", snapped(e.lambda_min)},
                {"profile", to_json(e.profile)},
                {"neumaier", e.neumaier ? to_json(*e.neumaier) : json(nullptr)},
                {"theorem5", e.theorem5 ? to_json(*e.theorem5) : json(nullptr)},
                {"skipped", e.skipped}};
    if (e.quasi) {
        out["quasi"] = {{"classes", e.quasi->classes},
                        {"forbidden_ok", e.quasi->forbidden_ok},
                        {"all_quasi_cliques_are_cliques", e.quasi->all_quasi_cliques_are_cliques},
                        {"claim1_all_hold", e.quasi->claim1.all_hold()},
                        {"claim1_exceed_count", e.quasi->claim1.exceed_count}};
    } else {
        out["quasi"] = nullptr;
    }
    return out;
}

namespace {

std::string text_count(const std::optional<std::size_t>& value) {
    return value ? std::to_string(*value) : std::string("-");
}

}  // namespace

std::string to_text(const RegularityProfile& p) {
    std::ostringstream out;
    out << "v=" << p.order << " regular=" << (p.is_regular ? "yes" : "no") << " k=" << text_count(p.k)
        << " sesqui_c=" << text_count(p.sesqui_c) << " srg_a=" << text_count(p.srg_a)
        << " coedge_c=" << text_count(p.coedge_c) << " diameter<=2=" << (p.diameter_at_most_2 ? "yes" : "no")
        << " connected=" << (p.connected ? "yes" : "no") << " vacuous_c=" << (p.vacuous_c ? "yes" : "no");
    return out.str();
}

std::string to_text(const VerificationReport& r) {
    std::ostringstream out;
    out << "subject=" << r.subject << " lambda=" << r.lambda << " lambda_min=" << format_number(r.lambda_min)
        << " outcome=" << to_string(r.outcome) << " c=" << text_count(r.profile.sesqui_c)
        << " bound_i=" << format_number(r.bound_i) << " margin_i=" << format_number(r.margins.at("branch_i"))
        << " bound_ii=" << format_number(r.bound_ii)
        << " margin_ii=" << format_number(r.margins.at("branch_ii"));
    for (const auto& w : r.warnings) {
        out << "\nwarning: " << w;
    }
    return out.str();
}

std::string to_text(const NeumaierReport& r) {
    std::ostringstream out;
    out << "subject=" << r.subject << " lambda=" << r.lambda << " c=" << text_count(r.profile.coedge_c)
        << " complete_multipartite=" << (r.complete_multipartite ? "yes" : "no")
        << " bound=" << format_number(r.bound) << " margin=" << format_number(r.margin)
        << " outcome=" << r.outcome;
    return out.str();
}

}  // namespace sesqui
