#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sesqui/error.hpp"
#include "sesqui/graph.hpp"
#include "sesqui/hoffman.hpp"
#include "sesqui/induced.hpp"
#include "sesqui/quasiclique.hpp"
#include "sesqui/regularity.hpp"

namespace sesqui {

using BigInt = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// Constants t'(lambda), m'(lambda), p'(lambda), p''(lambda)

/// lambda^2 + 1: least t with lambda_min(K_{1,t}) = -sqrt(t) < -lambda.
/// Throws InputError for lambda < 1.
std::size_t t_prime(int lambda);

/// Smallest real root of x^3 + a2 x^2 + a1 x + a0, by bracketed bisection.
double smallest_cubic_root(double a2, double a1, double a0);

/// Smallest root of the characteristic polynomial of the equitable
/// quotient [[0,m,0],[1,m-1,m],[0,m,m-1]] of K~_{2m}.
double k_tilde_quotient_root(std::size_t m);

struct MPrimeScanStep {
    std::size_t m = 0;
    double full_eigensolve = 0.0;
    double quotient_root = 0.0;
};

struct MPrimeResult {
    std::size_t m = 0;
    std::vector<MPrimeScanStep> scan;
    bool marginal = false;
};

inline constexpr std::size_t kMPrimeGuard = 10000;

/// Least m with lambda_min(K~_{2m}) < -lambda, scanning m = 1, 2, ... and
/// computing each value twice (adjacency eigensolve and quotient cubic).
/// Throws std::logic_error if the two routes differ by more than 1e-8 and
/// GuardExceeded past kMPrimeGuard.
MPrimeResult m_prime(double lambda);

/// p''(lambda): least p making expansions of h^(lambda+1), h^(lambda,1) and
/// c_(lambda^2-lambda+1) all drop below -lambda.
struct PDoublePrimeResult {
    std::optional<std::size_t> p;
    std::map<std::string, std::optional<std::size_t>> per_graph;
};
PDoublePrimeResult p_double_prime(int lambda, std::size_t p_max = 1000);

// ---------------------------------------------------------------------------
// Lemma on q(H) for H with lambda^2+2 vertices and an isolated vertex

struct IsolatedVertexClass {
    Graph h;
    std::string graph6;
    double lambda_min_q = 0.0;
    /// -lambda - lambda_min_q; positive means the strict inequality holds.
    double margin = 0.0;
    std::optional<std::size_t> expansion_order;
    double lambda_min_at_p_prime = 0.0;
};

struct IsolatedVertexReport {
    int lambda = 0;
    std::size_t labelled_graphs = 0;
    std::vector<IsolatedVertexClass> classes;
    bool all_pass = false;
    double min_margin = 0.0;
    /// Index into `classes` maximising lambda_min(q(H)).
    std::size_t maximiser = 0;
    bool maximiser_is_k5_k1 = false;
    /// max over classes of the minimal expansion order.
    std::optional<std::size_t> p_prime;
    /// Index maximising lambda_min(G(q(H), p')).
    std::size_t expansion_maximiser = 0;
    /// K_{lambda^2+1} u K_1 attains the maximum at p' (within 1e-9).
    bool remark_consistent = false;
};

/// Exhaustive over isomorphism classes; only lambda = 2 is accepted.
IsolatedVertexReport lemma_isolated_vertex_check(int lambda, std::size_t p_max = 200);

// ---------------------------------------------------------------------------
// Forbidden Hoffman subgraphs and proof-claim diagnostics

struct FamilyHit {
    std::string name;
    bool found = false;
    /// Catalog vertex -> vertex of the searched Hoffman graph.
    Embedding witness;
};

/// Label-preserving induced search for h^(lambda+1), h^(lambda,1), c_(lambda^2-lambda+1).
std::vector<FamilyHit> forbidden_family_check(const HoffmanGraph& g_assoc, int lambda);

/// Label-preserving induced Hoffman subgraph search.
std::optional<Embedding> find_induced_hoffman(const HoffmanGraph& host, const HoffmanGraph& pattern);

struct VertexClaims {
    Vertex vertex = 0;
    std::size_t containing = 0;
    /// Max neighbours in a quasi-clique that is a clique and avoids the vertex.
    std::size_t max_neighbours_outside = 0;
    /// Max non-neighbours inside a quasi-clique containing the vertex.
    std::size_t max_non_neighbours_inside = 0;
    /// Claim 1(i) second part: containing == lambda and a neighbour lies in none of them.
    bool uncovered_neighbour = false;
};

struct Claim1Report {
    int lambda = 0;
    std::vector<VertexClaims> vertices;
    std::size_t exceed_count = 0;       // (i): containing > lambda
    std::size_t exceed_cover = 0;       // (i): uncovered neighbour at containing == lambda
    std::size_t exceed_neighbours = 0;  // (ii): > lambda^2 - lambda
    std::size_t exceed_non_neighbours = 0;  // (iii): > lambda^2
    bool all_hold() const noexcept {
        return exceed_count + exceed_cover + exceed_neighbours + exceed_non_neighbours == 0;
    }
};

Claim1Report claim1_diagnostics(const Graph& g, const QuasiCliqueSystem& qcs, int lambda);

struct Claim2Result {
    std::size_t class_index = 0;
    bool is_clique = false;
    std::optional<Edge> non_adjacent_pair;
};

std::vector<Claim2Result> claim2_check(const QuasiCliqueSystem& qcs, const Graph& g);

// ---------------------------------------------------------------------------
// Theorem checks

/// Graph is regular but has no pair at distance 2.
class VacuousSesquiRegularity : public InputError {
public:
    using InputError::InputError;
};

struct NeumaierReport {
    std::string subject;
    int lambda = 0;
    RegularityProfile profile;
    bool complete_multipartite = false;
    double bound = 0.0;     // lambda^3 (2 lambda - 3)
    double margin = 0.0;    // bound - c
    bool bound_holds = false;
    /// "complete_multipartite", "bound" or "violated".
    std::string outcome;
};

/// Throws InputError unless g is connected strongly regular with
/// -lambda_min within 1e-7 of an integer >= 2.
NeumaierReport neumaier_check(const Graph& g, std::string subject = "graph");

enum class Outcome { BranchI, BranchII, Both, Violated };

std::string to_string(Outcome o);

struct VerificationReport {
    std::string subject;
    int lambda = 0;
    double lambda_min = 0.0;
    RegularityProfile profile;
    Outcome outcome = Outcome::Violated;
    double bound_i = 0.0;   // lambda^2 (lambda - 1)
    double bound_ii = 0.0;  // (lambda-1)^2/4 + 1
    /// "branch_i" = bound_i - c, "branch_ii" = bound_ii - (v-k-1).
    std::map<std::string, double> margins;
    std::vector<std::string> warnings;
};

/// lambda is the override or -lambda_min snapped to an integer within 1e-7,
/// else rounded up. Throws VacuousSesquiRegularity, InputError (not
/// sesqui-regular, lambda < 2, or override with lambda_min < -lambda).
VerificationReport theorem5_check(const Graph& g, std::optional<int> lambda_override = std::nullopt,
                                  std::string subject = "graph");

/// Snap -lambda_min to an integer within 1e-7, else round up.
int inferred_lambda(double lambda_min);

// ---------------------------------------------------------------------------
// Ramsey bounds

/// binom(s+t-2, s-1) >= R(s,t). Throws InputError for s or t == 0.
BigInt ramsey_upper(const BigInt& s, std::uint64_t t);
inline BigInt ramsey_upper(std::uint64_t s, std::uint64_t t) { return ramsey_upper(BigInt(s), t); }

/// Known exact small Ramsey numbers, for display only.
std::optional<std::uint64_t> known_ramsey(std::uint64_t s, std::uint64_t t);

/// Upper bound for C(lambda) = R((lambda^2-lambda)(R(n',t')-1)+1, t'),
/// t' = lambda^2+1, with every R replaced by ramsey_upper.
BigInt c_lambda_estimate(int lambda, std::uint64_t n_prime);

/// "d.dddde+N" with `digits` significant digits.
std::string scientific(const BigInt& value, int digits = 6);

// ---------------------------------------------------------------------------
// Corpus

struct QuasiSummary {
    std::size_t classes = 0;
    bool forbidden_ok = false;
    bool all_quasi_cliques_are_cliques = false;
    Claim1Report claim1;
};

struct CorpusEntry {
    std::string subject;
    Graph graph;
    RegularityProfile profile;
    double lambda_min = 0.0;
    std::optional<NeumaierReport> neumaier;
    std::optional<VerificationReport> theorem5;
    std::optional<QuasiSummary> quasi;
    /// Why theorem5 / neumaier were not run.
    std::vector<std::string> skipped;
};

/// Fixed graphs (Petersen, T(5), C5, C8, K3,3,3, K2,2,2, rook 3x3) then
/// expand(h,p) for h in {h^(1), h^(2), h^(3), h^(2,1), c_3}, p in {10, 30}.
std::vector<CorpusEntry> corpus_run();

}  // namespace sesqui
