#pragma once

#include <array>
#include <cstdint>
#include <map>

#include "wcm/grass.hpp"

namespace wcm {

// Signs calibrated per distinct web, shared across a whole verification run
// so that chained identities must stay consistent with each other.
struct SignContext {
    std::map<std::string, int> signs; // web_key -> +1/-1
};

struct IdentityReport {
    std::string name;
    bool ok = false;
    int samples = 0;
    std::map<std::string, int> signs; // signs used for this identity's webs
    std::string message;              // failure witness
};

// Calibrates a sign per distinct web at the first generic sample point
// (Plueckers prefer the fixed +1 convention and are freed only if no
// assignment exists otherwise), then demands exact vanishing at every other
// point. Points are drawn from the seed; evaluation is exact throughout.
IdentityReport verify_identity(const std::string& name, const FunctionExpr& e, int samples,
                               std::uint64_t seed, SignContext& ctx);

// admissible cactus mutations (a,d,b,c) at this k: all six participating
// functions must be constructible
std::vector<std::array<int, 4>> cactus_cases(int k);

// lhs*target - term1 - term2 of the three-term mutation identity
FunctionExpr cactus_identity_expr(int k, int a, int d, int b, int c);

// web = product-of-Plueckers degenerations (beta = 0 resp. alpha = 0)
FunctionExpr deg1_expr(int k, int a, int d); // a+b = c+d = k
FunctionExpr deg2_expr(int k, int a, int d); // a+c = b+d = k

struct SuiteReport {
    bool ok = true;
    std::vector<IdentityReport> identities;
};

// every degeneracy identity and every admissible cactus identity at this k;
// cactus cases with a = k exercise the third (definitional) degeneracy
SuiteReport run_identity_suite(int k, int samples, std::uint64_t seed);

} // namespace wcm
