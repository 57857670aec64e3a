#pragma once

#include <string>
#include <vector>

#include "loz/rational.hpp"
#include "loz/regions.hpp"

namespace loz {

// Outcome of one structural-identity check. `skipped` marks parameter
// tuples outside the identity's domain; those are not failures.
struct IdentityReport {
    std::string identity;
    std::string params;
    Rat lhs = 0, rhs = 0;
    bool holds = false;
    bool skipped = false;
    std::string note;
};

std::string report_to_json(const IdentityReport& r);

// Ratio identities of the trapezoidal products (four of them).
std::vector<IdentityReport> check_trapsimp(const Rat& x, long n, long m);

// Quadratic recurrence tying the defected halved hexagon counts together.
IdentityReport check_kuo_B(long x, long a, long b, long c);

enum class HShrink { D_SHRINK, A_SHRINK };
IdentityReport check_kuo_H(int i, HShrink variant, long x, long b, long c, long m, long a, long d);

// Symmetry factorization: oracle(HS) = 2^k * oracle(left) * oracle(right),
// and equality with the closed form when the parameters admit one.
IdentityReport check_factorization_HS(long x, long y, long z, long m, long a, long b);

// Forced-lozenge base-case reductions of the B and H families on a small
// parameter grid, checked through both the formulas and the oracle.
std::vector<IdentityReport> check_base_reductions(long max_param);

// Direct quadratic matching identities on cell graphs: four (or three plus
// one) boundary cells in cyclic order, counts by the oracle.
IdentityReport check_kuo_graph_balanced(const Region& r, unsigned seed);
IdentityReport check_kuo_graph_offset(const Region& r, unsigned seed);

}  // namespace loz
