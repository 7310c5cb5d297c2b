#include "sesqui/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sesqui/error.hpp"
#include "sesqui/families.hpp"
#include "sesqui/graph6.hpp"
#include "sesqui/hoffman.hpp"
#include "sesqui/quasiclique.hpp"
#include "sesqui/regularity.hpp"
#include "sesqui/report.hpp"
#include "sesqui/spectral.hpp"
#include "sesqui/verifier.hpp"

namespace sesqui::cli {

namespace {

using json = nlohmann::json;

enum class Format { Text, Json };

struct Options {
    std::string g6;
    std::string file;
    std::string family;
    std::vector<std::string> params;
    std::string name;
    std::string out;
    std::string format = "text";
    std::vector<Vertex> fat;
    std::optional<int> lambda;
    double lambda_real = 0.0;
    std::optional<std::size_t> m;
    std::optional<std::size_t> n;
    std::optional<std::size_t> p;
    std::optional<std::size_t> pmax;
    std::string check = "theorem5";
};

struct NamedGraph {
    std::string subject;
    Graph graph;
};

std::size_t parse_count(const std::string& key, const std::string& text) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw InputError("--param " + key + " expects a nonnegative integer, got '" + text + "'");
    }
    return value;
}

families::Params parse_params(const std::vector<std::string>& raw) {
    families::Params out;
    for (const auto& kv : raw) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw InputError("--param expects key=value, got '" + kv + "'");
        }
        out[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    return out;
}

std::string param_or(const families::Params& params, const std::string& key, const std::string& fallback) {
    const auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

void require_single_source(const Options& o) {
    const int count = (o.g6.empty() ? 0 : 1) + (o.file.empty() ? 0 : 1) + (o.family.empty() ? 0 : 1);
    if (count != 1) {
        throw InputError("exactly one input source is required: --g6, --file or --family");
    }
}

std::string read_all(const std::string& path, std::istream& in) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw InputError("cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

std::string family_subject(const Options& o) {
    std::string s = o.family;
    if (!o.params.empty()) {
        s += "(";
        for (std::size_t i = 0; i < o.params.size(); ++i) {
            if (i > 0) s += ",";
            s += o.params[i];
        }
        s += ")";
    }
    return s;
}

std::vector<NamedGraph> load_graphs(const Options& o, std::istream& in) {
    require_single_source(o);
    std::vector<NamedGraph> out;
    if (!o.g6.empty()) {
        out.push_back({o.name.empty() ? o.g6 : o.name, graph6_decode(o.g6)});
    } else if (!o.family.empty()) {
        out.push_back({o.name.empty() ? family_subject(o) : o.name,
                       families::named(o.family, parse_params(o.params))});
    } else {
        std::istringstream text(read_all(o.file, in));
        const auto graphs = read_graph6_lines(text);
        if (graphs.empty()) {
            throw InputError("'" + o.file + "' contains no graphs");
        }
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            std::string subject = o.name.empty() ? o.file : o.name;
            if (graphs.size() > 1) subject += "#" + std::to_string(i + 1);
            out.push_back({subject, graphs[i]});
        }
    }
    return out;
}

NamedGraph load_graph(const Options& o, std::istream& in) {
    auto all = load_graphs(o, in);
    if (all.size() != 1) {
        throw InputError("this subcommand takes a single graph; the input holds " + std::to_string(all.size()));
    }
    return std::move(all.front());
}

struct NamedHoffman {
    std::string subject;
    HoffmanGraph hoffman;
    std::optional<double> closed_form;
};

NamedHoffman catalog_entry(const Options& o) {
    const auto params = parse_params(o.params);
    const auto& name = o.family;
    if (name == "q") {
        const auto h = param_or(params, "h", "");
        if (h.empty()) throw InputError("catalog q needs --param h=<graph6>");
        const auto graph = graph6_decode(h);
        auto e = catalog::q_of(graph);
        return {o.name.empty() ? "q(" + h + ")" : o.name, std::move(e.hoffman), e.closed_form_lambda_min};
    }
    const std::string key = name == "c_n" ? "n" : "t";
    const auto raw = param_or(params, key, "");
    if (raw.empty()) {
        if (name != "h_t" && name != "h_t1" && name != "c_n") {
            throw InputError("unknown Hoffman family '" + name + "' (expected h_t, h_t1, c_n or q)");
        }
        throw InputError("catalog " + name + " needs --param " + key + "=<int>");
    }
    auto e = catalog::by_name(name, parse_count(key, raw));
    return {o.name.empty() ? name + "(" + raw + ")" : o.name, std::move(e.hoffman), e.closed_form_lambda_min};
}

/// Hoffman input: --family from the catalog, --g6 plus --fat, or --file in
/// the graph6 + "F:" format.
NamedHoffman load_hoffman(const Options& o, std::istream& in) {
    require_single_source(o);
    if (!o.family.empty()) {
        return catalog_entry(o);
    }
    if (!o.g6.empty()) {
        return {o.name.empty() ? o.g6 : o.name, HoffmanGraph::with_fat(graph6_decode(o.g6), o.fat), std::nullopt};
    }
    std::istringstream text(read_all(o.file, in));
    auto all = read_hoffman_stream(text);
    if (all.size() != 1) {
        throw InputError("expected exactly one Hoffman graph in '" + o.file + "', found " +
                         std::to_string(all.size()));
    }
    return {o.name.empty() ? o.file : o.name, std::move(all.front()), std::nullopt};
}

std::string join_numbers(const std::vector<double>& values) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) s += ' ';
        s += format_number(values[i]);
    }
    return s;
}

std::string join_vertices(const std::vector<Vertex>& values) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) s += ',';
        s += std::to_string(values[i]);
    }
    return s;
}

/// One JSON document per invocation: a bare object for one subject, an array otherwise.
json collapse(std::vector<json> items) {
    if (items.size() == 1) return std::move(items.front());
    return json(std::move(items));
}

std::size_t default_n(std::size_t m) { return (m + 1) * (m + 1); }

// ---------------------------------------------------------------------------
// Subcommands. Each writes its report into `out`.

void cmd_spectrum(const Options& o, Format f, std::istream& in, std::ostream& out) {
    std::vector<json> docs;
    for (const auto& [subject, g] : load_graphs(o, in)) {
        const auto s = spectrum(g);
        if (f == Format::Json) {
            auto doc = to_json(s);
            doc["subject"] = subject;
            doc["order"] = g.order();
            docs.push_back(std::move(doc));
        } else {
            out << "λ_min=" << format_number(s.min()) << " λ_max=" << format_number(s.max())
                << " order=" << g.order() << " eigenvalues=" << join_numbers(s.values) << '\n';
        }
    }
    if (f == Format::Json) out << collapse(std::move(docs)).dump(2) << '\n';
}

void cmd_profile(const Options& o, Format f, std::istream& in, std::ostream& out) {
    std::vector<json> docs;
    for (const auto& [subject, g] : load_graphs(o, in)) {
        const auto p = regularity_profile(g);
        if (f == Format::Json) {
            auto doc = to_json(p);
            doc["subject"] = subject;
            docs.push_back(std::move(doc));
        } else {
            out << "subject=" << subject << ' ' << to_text(p) << '\n';
        }
    }
    if (f == Format::Json) out << collapse(std::move(docs)).dump(2) << '\n';
}

json hoffman_doc(const NamedHoffman& h) {
    auto doc = to_json(h.hoffman);
    doc["subject"] = h.subject;
    doc["serialized"] = hoffman_serialize(h.hoffman);
    if (!h.hoffman.slim_vertices().empty()) {
        doc["lambda_min"] = snapped(lambda_min(h.hoffman));
        const auto s = special_matrix(h.hoffman);
        json rows = json::array();
        for (std::size_t i = 0; i < s.order(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < s.order(); ++j) row.push_back(snapped(s(i, j)));
            rows.push_back(std::move(row));
        }
        doc["special_matrix"] = std::move(rows);
    } else {
        doc["lambda_min"] = nullptr;
        doc["special_matrix"] = json::array();
    }
    doc["closed_form_lambda_min"] = h.closed_form ? json(snapped(*h.closed_form)) : json(nullptr);
    return doc;
}

void hoffman_text(const NamedHoffman& h, std::ostream& out) {
    out << hoffman_serialize(h.hoffman);
    out << "subject=" << h.subject << " slim=" << h.hoffman.slim_vertices().size()
        << " fat=" << h.hoffman.fat_vertices().size();
    if (!h.hoffman.slim_vertices().empty()) out << " lambda_min=" << format_number(lambda_min(h.hoffman));
    if (h.closed_form) out << " closed_form=" << format_number(*h.closed_form);
    out << '\n';
}

void cmd_hoffman_build(const Options& o, Format f, std::istream& in, std::ostream& out) {
    if (!o.family.empty()) {
        throw InputError("hoffman-build takes a graph via --g6 or --file together with --fat");
    }
    const auto [subject, g] = load_graph(o, in);
    const NamedHoffman h{subject, HoffmanGraph::with_fat(g, o.fat), std::nullopt};
    if (f == Format::Json) {
        out << hoffman_doc(h).dump(2) << '\n';
    } else {
        hoffman_text(h, out);
    }
}

void cmd_hoffman_expand(const Options& o, Format f, std::istream& in, std::ostream& out) {
    if (!o.p) throw InputError("hoffman-expand requires --p");
    const auto h = load_hoffman(o, in);
    const auto g = expand(h.hoffman, *o.p);
    const double value = lambda_min(g);
    const double floor = lambda_min(h.hoffman);
    if (f == Format::Json) {
        out << json{{"subject", h.subject},
                    {"p", *o.p},
                    {"graph6", graph6_encode(g)},
                    {"order", g.order()},
                    {"lambda_min", snapped(value)},
                    {"lambda_min_hoffman", snapped(floor)}}
                   .dump(2)
            << '\n';
    } else {
        out << graph6_encode(g) << '\n'
            << "subject=" << h.subject << " p=" << *o.p << " order=" << g.order()
            << " lambda_min=" << format_number(value) << " lambda_min_hoffman=" << format_number(floor) << '\n';
    }
}

void cmd_catalog(const Options& o, Format f, std::istream&, std::ostream& out) {
    if (o.family.empty()) {
        const std::vector<std::string> names{"h_t", "h_t1", "c_n", "q"};
        if (f == Format::Json) {
            out << json{{"families", names}}.dump(2) << '\n';
        } else {
            out << "h_t --param t=<int>\nh_t1 --param t=<int>\nc_n --param n=<int>\nq --param h=<graph6>\n";
        }
        return;
    }
    const auto h = catalog_entry(o);
    std::optional<ExpansionOrder> order;
    if (o.lambda) order = minimal_expansion_order(h.hoffman, *o.lambda, o.pmax.value_or(1000));
    if (f == Format::Json) {
        auto doc = hoffman_doc(h);
        doc["expansion_order"] = order ? to_json(*order) : json(nullptr);
        if (o.lambda) doc["lambda"] = *o.lambda;
        out << doc.dump(2) << '\n';
        return;
    }
    hoffman_text(h, out);
    if (order) {
        out << "lambda=" << *o.lambda << " minimal_expansion_order="
            << (order->order ? std::to_string(*order->order) : std::string("none"))
            << " permanent=" << (order->permanent ? "yes" : "no") << '\n';
        if (order->marginal) out << "warning: numerically marginal value within 1e-7 of -lambda\n";
    }
}

void cmd_quasi(const Options& o, Format f, std::istream& in, std::ostream& out) {
    const auto [subject, g] = load_graph(o, in);
    const auto m = o.m.value_or(2);
    const auto system = quasi_clique_system(g, m, o.n.value_or(default_n(m)));
    if (f == Format::Json) {
        auto doc = to_json(system);
        doc["subject"] = subject;
        out << doc.dump(2) << '\n';
    } else {
        out << "subject=" << subject << '\n' << format_system(system);
    }
}

void cmd_assoc(const Options& o, Format f, std::istream& in, std::ostream& out) {
    const auto [subject, g] = load_graph(o, in);
    const auto m = o.m.value_or(2);
    const auto a = associated_hoffman_graph(g, m, o.n.value_or(default_n(m)));
    std::optional<std::vector<FamilyHit>> hits;
    if (o.lambda) hits = forbidden_family_check(a.hoffman, *o.lambda);
    if (f == Format::Json) {
        auto doc = to_json(a.hoffman);
        doc["subject"] = subject;
        doc["serialized"] = hoffman_serialize(a.hoffman);
        doc["system"] = to_json(a.system);
        doc["warnings"] = a.warnings;
        doc["forbidden_families"] = hits ? to_json(*hits) : json(nullptr);
        out << doc.dump(2) << '\n';
        return;
    }
    out << hoffman_serialize(a.hoffman);
    out << "subject=" << subject << " slim=" << a.hoffman.slim_vertices().size()
        << " fat=" << a.hoffman.fat_vertices().size() << '\n';
    for (const auto& w : a.warnings) out << "warning: " << w << '\n';
    if (hits) {
        for (const auto& hit : *hits) {
            out << "family " << hit.name << ": " << (hit.found ? "found at " + join_vertices(hit.witness) : "absent")
                << '\n';
        }
    }
}

void verify_claims(const Options& o, Format f, std::istream& in, std::ostream& out) {
    if (!o.lambda) throw InputError("verify --check claims requires --lambda");
    const auto [subject, g] = load_graph(o, in);
    const auto m = o.m.value_or(2);
    const auto system = quasi_clique_system(g, m, o.n.value_or(default_n(m)));
    const auto c1 = claim1_diagnostics(g, system, *o.lambda);
    const auto c2 = claim2_check(system, g);
    if (f == Format::Json) {
        out << json{{"subject", subject}, {"system", to_json(system)}, {"claim1", to_json(c1)}, {"claim2", to_json(c2)}}
                   .dump(2)
            << '\n';
        return;
    }
    out << "subject=" << subject << " classes=" << system.classes.size()
        << " forbidden_ok=" << (system.forbidden_ok ? "true" : "false") << '\n';
    out << "claim1 all_hold=" << (c1.all_hold() ? "true" : "false") << " exceed_count=" << c1.exceed_count
        << " exceed_cover=" << c1.exceed_cover << " exceed_neighbours=" << c1.exceed_neighbours
        << " exceed_non_neighbours=" << c1.exceed_non_neighbours << '\n';
    for (const auto& r : c2) {
        out << "claim2 class=" << r.class_index << " is_clique=" << (r.is_clique ? "true" : "false");
        if (r.non_adjacent_pair) {
            out << " non_adjacent=" << r.non_adjacent_pair->first << "," << r.non_adjacent_pair->second;
        }
        out << '\n';
    }
}

void verify_lemma(const Options& o, Format f, std::ostream& out) {
    const auto r = lemma_isolated_vertex_check(o.lambda.value_or(2), o.pmax.value_or(200));
    if (f == Format::Json) {
        out << to_json(r).dump(2) << '\n';
        return;
    }
    out << "lambda=" << r.lambda << " labelled=" << r.labelled_graphs << " classes=" << r.classes.size()
        << " all_pass=" << (r.all_pass ? "true" : "false") << " min_margin=" << format_number(r.min_margin) << '\n';
    if (!r.classes.empty()) {
        const auto& best = r.classes[r.maximiser];
        out << "maximiser=" << best.graph6 << " lambda_min_q=" << format_number(best.lambda_min_q)
            << " is_k5_k1=" << (r.maximiser_is_k5_k1 ? "true" : "false") << '\n';
        out << "p_prime=" << (r.p_prime ? std::to_string(*r.p_prime) : std::string("none"))
            << " expansion_maximiser=" << r.classes[r.expansion_maximiser].graph6
            << " remark_consistent=" << (r.remark_consistent ? "true" : "false") << '\n';
    }
}

void cmd_verify(const Options& o, Format f, std::istream& in, std::ostream& out) {
    if (o.check == "lemma") {
        verify_lemma(o, f, out);
        return;
    }
    if (o.check == "claims") {
        verify_claims(o, f, in, out);
        return;
    }
    std::vector<json> docs;
    for (const auto& [subject, g] : load_graphs(o, in)) {
        if (o.check == "neumaier") {
            const auto r = neumaier_check(g, subject);
            if (f == Format::Json) {
                docs.push_back(to_json(r));
            } else {
                out << to_text(r) << '\n';
            }
        } else {
            const auto r = theorem5_check(g, o.lambda, subject);
            if (f == Format::Json) {
                docs.push_back(to_json(r));
            } else {
                out << to_text(r) << '\n';
            }
        }
    }
    if (f == Format::Json) out << collapse(std::move(docs)).dump(2) << '\n';
}

void cmd_corpus(const Options&, Format f, std::istream&, std::ostream& out) {
    const auto entries = corpus_run();
    if (f == Format::Json) {
        json all = json::array();
        for (const auto& e : entries) all.push_back(to_json(e));
        out << all.dump(2) << '\n';
        return;
    }
    for (const auto& e : entries) {
        if (e.theorem5) {
            out << to_text(*e.theorem5) << '\n';
        } else {
            out << "subject=" << e.subject << " lambda_min=" << format_number(e.lambda_min) << " theorem5=skipped\n";
        }
        if (e.neumaier) out << "  neumaier: " << to_text(*e.neumaier) << '\n';
        if (e.quasi) {
            out << "  quasi: classes=" << e.quasi->classes << " forbidden_ok=" << (e.quasi->forbidden_ok ? "true" : "false")
                << " quasi_cliques_are_cliques=" << (e.quasi->all_quasi_cliques_are_cliques ? "true" : "false")
                << " claim1_all_hold=" << (e.quasi->claim1.all_hold() ? "true" : "false") << '\n';
        }
        for (const auto& s : e.skipped) out << "  skipped: " << s << '\n';
    }
}

void cmd_mprime(const Options& o, Format f, std::istream&, std::ostream& out) {
    const auto r = m_prime(o.lambda_real);
    if (f == Format::Json) {
        auto doc = to_json(r);
        doc["lambda"] = o.lambda_real;
        out << doc.dump(2) << '\n';
        return;
    }
    out << r.m << '\n';
    if (r.marginal) out << "warning: numerically marginal value within 1e-7 of -lambda\n";
}

void cmd_tprime(const Options& o, Format f, std::istream&, std::ostream& out) {
    if (!o.lambda) throw InputError("tprime requires --lambda");
    const auto t = t_prime(*o.lambda);
    if (f == Format::Json) {
        out << json{{"lambda", *o.lambda}, {"t_prime", t}}.dump(2) << '\n';
    } else {
        out << t << '\n';
    }
}

void cmd_convergence(const Options& o, Format f, std::istream& in, std::ostream& out) {
    const auto h = load_hoffman(o, in);
    const auto pmax = o.pmax.value_or(50);
    if (pmax == 0 || pmax > 10000) throw InputError("--pmax must be in 1..10000");
    const double floor = lambda_min(h.hoffman);
    std::vector<std::pair<std::size_t, double>> rows;
    for (std::size_t p = 1; p <= pmax; ++p) rows.emplace_back(p, lambda_min(expand(h.hoffman, p)));
    if (f == Format::Json) {
        json table = json::array();
        for (const auto& [p, v] : rows) table.push_back({p, v});
        out << json{{"subject", h.subject}, {"lambda_min_hoffman", floor}, {"columns", {"p", "lambda_min"}}, {"rows", table}}
                   .dump(2)
            << '\n';
        return;
    }
    out << "# subject=" << h.subject << " lambda_min_hoffman=" << format_number(floor) << '\n';
    out << "# p lambda_min\n";
    char line[64];
    for (const auto& [p, v] : rows) {
        std::snprintf(line, sizeof line, "%zu %.12g\n", p, v);
        out << line;
    }
}

using Handler = std::function<void(const Options&, Format, std::istream&, std::ostream&)>;

void add_graph_source(CLI::App* sub, Options& o) {
    sub->add_option("--g6", o.g6, "graph6 string");
    sub->add_option("--file", o.file, "file of graph6 lines ('-' for stdin)");
    sub->add_option("--family", o.family, "named family");
    sub->add_option("--param", o.params, "family parameter key=value (repeatable)");
    sub->add_option("--name", o.name, "subject name used in reports");
}

/// First positional token at top level, if it names no subcommand.
std::optional<std::string> unknown_subcommand(const std::vector<std::string>& args,
                                              const std::vector<std::pair<CLI::App*, Handler>>& commands) {
    for (std::size_t i = 0; i < args.size(); ++i) {
        const auto& a = args[i];
        if (a == "--format" || a == "--out") {
            ++i;
            continue;
        }
        if (a.starts_with("-")) continue;
        const bool known = std::any_of(commands.begin(), commands.end(),
                                       [&](const auto& c) { return c.first->get_name() == a; });
        if (known) return std::nullopt;
        return a;
    }
    return std::nullopt;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Spectral tools for sesqui-regular graphs and Hoffman graphs", "sesqui"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", o.out, "write the report to this file instead of stdout");

    std::vector<std::pair<CLI::App*, Handler>> commands;
    auto add = [&](const std::string& name, const std::string& help, Handler h) {
        auto* sub = app.add_subcommand(name, help);
        commands.emplace_back(sub, std::move(h));
        return sub;
    };

    auto* spectrum_cmd = add("spectrum", "eigenvalues of the adjacency matrix", cmd_spectrum);
    add_graph_source(spectrum_cmd, o);

    auto* profile_cmd = add("profile", "regularity profile (k, c, a, co-edge c)", cmd_profile);
    add_graph_source(profile_cmd, o);

    auto* build_cmd = add("hoffman-build", "label a graph's vertices fat/slim and report the special matrix",
                          cmd_hoffman_build);
    add_graph_source(build_cmd, o);
    build_cmd->add_option("--fat", o.fat, "fat vertex indices")->delimiter(',');

    auto* expand_cmd = add("hoffman-expand", "replace every fat vertex by a p-clique", cmd_hoffman_expand);
    add_graph_source(expand_cmd, o);
    expand_cmd->add_option("--fat", o.fat, "fat vertex indices (with --g6)")->delimiter(',');
    expand_cmd->add_option("--p", o.p, "clique size per fat vertex")->check(CLI::PositiveNumber);

    auto* catalog_cmd = add("catalog", "named Hoffman graphs with closed-form smallest eigenvalue", cmd_catalog);
    catalog_cmd->add_option("--family", o.family, "h_t, h_t1, c_n or q");
    catalog_cmd->add_option("--param", o.params, "t=<int>, n=<int> or h=<graph6>");
    catalog_cmd->add_option("--name", o.name, "subject name used in reports");
    catalog_cmd->add_option("--lambda", o.lambda, "also find the least p with lambda_min(G(h,p)) < -lambda");
    catalog_cmd->add_option("--pmax", o.pmax, "scan limit for --lambda (default 1000)");

    auto* quasi_cmd = add("quasi", "equivalence classes of large maximal cliques and their quasi-cliques", cmd_quasi);
    add_graph_source(quasi_cmd, o);
    quasi_cmd->add_option("--m", o.m, "relation parameter m (default 2)");
    quasi_cmd->add_option("--n", o.n, "minimum clique size (default (m+1)^2)");

    auto* assoc_cmd = add("assoc", "associated Hoffman graph", cmd_assoc);
    add_graph_source(assoc_cmd, o);
    assoc_cmd->add_option("--m", o.m, "relation parameter m (default 2)");
    assoc_cmd->add_option("--n", o.n, "minimum clique size (default (m+1)^2)");
    assoc_cmd->add_option("--lambda", o.lambda, "also search for the forbidden Hoffman subgraphs");

    auto* verify_cmd = add("verify", "check the c / v-k-1 bounds and the proof claims on a graph", cmd_verify);
    add_graph_source(verify_cmd, o);
    verify_cmd->add_option("--lambda", o.lambda, "override the inferred lambda");
    verify_cmd->add_option("--check", o.check, "theorem5 (default), neumaier, claims or lemma")
        ->check(CLI::IsMember({"theorem5", "neumaier", "claims", "lemma"}));
    verify_cmd->add_option("--m", o.m, "claims: relation parameter m (default 2)");
    verify_cmd->add_option("--n", o.n, "claims: minimum clique size (default (m+1)^2)");
    verify_cmd->add_option("--pmax", o.pmax, "lemma: expansion scan limit (default 200)");

    add("corpus", "run every check over the built-in corpus", cmd_corpus);

    auto* mprime_cmd = add("mprime", "least m with lambda_min(K~_2m) < -lambda", cmd_mprime);
    mprime_cmd->add_option("--lambda", o.lambda_real, "positive real")->required();

    auto* tprime_cmd = add("tprime", "lambda^2 + 1", cmd_tprime);
    tprime_cmd->add_option("--lambda", o.lambda, "positive integer")->required();

    auto* conv_cmd = add("convergence", "table of p and lambda_min(G(h,p))", cmd_convergence);
    add_graph_source(conv_cmd, o);
    conv_cmd->add_option("--fat", o.fat, "fat vertex indices (with --g6)")->delimiter(',');
    conv_cmd->add_option("--pmax", o.pmax, "largest p (default 50)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        if (const auto unknown = unknown_subcommand(args, commands)) {
            err << "error: unknown subcommand '" << *unknown << "'\n" << app.help();
        } else {
            err << "error: " << e.what() << '\n' << app.help();
        }
        return kExitInput;
    }

    const auto format = o.format == "json" ? Format::Json : Format::Text;
    std::ostringstream buffer;
    try {
        for (const auto& [sub, handler] : commands) {
            if (sub->parsed()) {
                handler(o, format, in, buffer);
                break;
            }
        }
    } catch (const Graph6Error& e) {
        err << "error: malformed graph6: " << e.what() << '\n';
        return kExitInput;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const GuardExceeded& e) {
        err << "error: input too large: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }

    if (o.out.empty()) {
        out << buffer.str() << std::flush;
    } else {
        std::ofstream file(o.out, std::ios::binary);
        if (!file || !(file << buffer.str())) {
            err << "error: cannot write '" << o.out << "'\n";
            return kExitInput;
        }
    }
    return kExitOk;
}

}  // namespace sesqui::cli
