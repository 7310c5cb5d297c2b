#include <cmath>

#include "sesqui/spectral.hpp"
#include "sesqui/verifier.hpp"

namespace sesqui {

int inferred_lambda(double lambda_min) {
    const double magnitude = -lambda_min;
    const double nearest = std::round(magnitude);
    if (std::abs(magnitude - nearest) <= kMarginBand) {
        return static_cast<int>(nearest);
    }
    return static_cast<int>(std::ceil(magnitude));
}

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::BranchI: return "branch_i";
        case Outcome::BranchII: return "branch_ii";
        case Outcome::Both: return "both";
        case Outcome::Violated: return "violated";
    }
    return "unknown";
}

NeumaierReport neumaier_check(const Graph& g, std::string subject) {
    NeumaierReport r;
    r.subject = std::move(subject);
    r.profile = regularity_profile(g);
    if (!r.profile.is_strongly_regular() || !r.profile.connected) {
        throw InputError("neumaier_check: " + r.subject + " is not a connected strongly regular graph");
    }
    const double smallest = lambda_min(g);
    const double nearest = std::round(-smallest);
    if (std::abs(-smallest - nearest) > kMarginBand || nearest < 2.0) {
        throw InputError("neumaier_check: lambda_min of " + r.subject +
                         " is not a near-integer <= -2");
    }
    r.lambda = static_cast<int>(nearest);
    const double l = r.lambda;
    const double c = static_cast<double>(*r.profile.coedge_c);
    r.complete_multipartite = is_complete_multipartite(g);
    r.bound = l * l * l * (2.0 * l - 3.0);
    r.margin = r.bound - c;
    r.bound_holds = c <= r.bound;
    r.outcome = r.complete_multipartite ? "complete_multipartite" : (r.bound_holds ? "bound" : "violated");
    return r;
}

VerificationReport theorem5_check(const Graph& g, std::optional<int> lambda_override,
                                  std::string subject) {
    VerificationReport r;
    r.subject = std::move(subject);
    r.profile = regularity_profile(g);
    if (r.profile.is_regular && r.profile.vacuous_c) {
        throw VacuousSesquiRegularity("theorem5_check: " + r.subject +
                                      " has no pair at distance 2, so c is undefined");
    }
    if (!r.profile.is_sesqui_regular()) {
        throw InputError("theorem5_check: " + r.subject + " is not sesqui-regular");
    }
    r.lambda_min = lambda_min(g);
    if (lambda_override) {
        r.lambda = *lambda_override;
        if (r.lambda_min < -r.lambda - kMarginBand) {
            throw InputError("theorem5_check: lambda_min(" + r.subject + ") < -" +
                             std::to_string(r.lambda) + ", hypothesis lambda_min >= -lambda fails");
        }
    } else {
        r.lambda = inferred_lambda(r.lambda_min);
    }
    if (r.lambda < 2) {
        throw InputError("theorem5_check: lambda must be at least 2 (got " + std::to_string(r.lambda) + ")");
    }
    if (std::abs(r.lambda_min + r.lambda) <= kMarginBand) {
        r.warnings.push_back("numerically marginal: lambda_min is within 1e-7 of -lambda");
    }

    const double l = r.lambda;
    const double c = static_cast<double>(*r.profile.sesqui_c);
    const double v = static_cast<double>(r.profile.order);
    const double k = static_cast<double>(*r.profile.k);
    r.bound_i = l * l * (l - 1.0);
    r.bound_ii = (l - 1.0) * (l - 1.0) / 4.0 + 1.0;
    r.margins["branch_i"] = r.bound_i - c;
    r.margins["branch_ii"] = r.bound_ii - (v - k - 1.0);
    const bool i = c <= r.bound_i;
    const bool ii = v - k - 1.0 <= r.bound_ii;
    r.outcome = i && ii ? Outcome::Both : i ? Outcome::BranchI : ii ? Outcome::BranchII : Outcome::Violated;
    if (r.outcome == Outcome::Violated) {
        r.warnings.push_back("hypothesis k >= C(lambda) not met at desk scale; not a counterexample");
    }
    return r;
}

}  // namespace sesqui
