#include "sesqui/verifier.hpp"

namespace sesqui {

namespace {

/// binom(top, k) for small k, exact.
BigInt binomial(const BigInt& top, std::uint64_t k) {
    BigInt result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result *= top - k + i;
        result /= i;
    }
    return result;
}

}  // namespace

BigInt ramsey_upper(const BigInt& s, std::uint64_t t) {
    if (s < 1 || t < 1) {
        throw InputError("ramsey_upper: s and t must be positive");
    }
    // binom(s+t-2, s-1) = binom(s+t-2, t-1); use the smaller lower index.
    const BigInt top = s + t - 2;
    if (s - 1 < t - 1) {
        return binomial(top, static_cast<std::uint64_t>(s - 1));
    }
    return binomial(top, t - 1);
}

std::optional<std::uint64_t> known_ramsey(std::uint64_t s, std::uint64_t t) {
    if (s > t) std::swap(s, t);
    if (s == 1) return 1;
    if (s == 2) return t;
    if (s == 3) {
        switch (t) {
            case 3: return 6;
            case 4: return 9;
            case 5: return 14;
            case 6: return 18;
            case 7: return 23;
            case 8: return 28;
            case 9: return 36;
            default: return std::nullopt;
        }
    }
    if (s == 4 && t == 4) return 18;
    if (s == 4 && t == 5) return 25;
    return std::nullopt;
}

BigInt c_lambda_estimate(int lambda, std::uint64_t n_prime) {
    if (lambda < 2) {
        throw InputError("c_lambda_estimate: lambda must be at least 2");
    }
    if (n_prime < 1) {
        throw InputError("c_lambda_estimate: n' must be positive");
    }
    const auto l = static_cast<std::uint64_t>(lambda);
    const std::uint64_t t = l * l + 1;
    const BigInt inner = ramsey_upper(n_prime, t);
    const BigInt s = BigInt(l * l - l) * (inner - 1) + 1;
    return ramsey_upper(s, t);
}

std::string scientific(const BigInt& value, int digits) {
    std::string text = value.str();
    std::string sign;
    if (!text.empty() && text.front() == '-') {
        sign = "-";
        text.erase(0, 1);
    }
    const auto exponent = text.size() - 1;
    std::string mantissa = text.substr(0, 1);
    if (digits > 1 && text.size() > 1) {
        mantissa += "." + text.substr(1, static_cast<std::size_t>(digits - 1));
    }
    return sign + mantissa + "e+" + std::to_string(exponent);
}

}  // namespace sesqui
