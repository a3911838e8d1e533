#ifndef GRAMSEY_BOUNDS_HPP
#define GRAMSEY_BOUNDS_HPP

#include <boost/rational.hpp>
#include <optional>
#include <string>
#include <vector>

#include "gramsey/hypergraph.hpp"
#include "gramsey/types.hpp"

namespace gramsey {

using Rational = boost::rational<long long>;

std::string rational_to_string(const Rational& r);
Rational parse_rational(const std::string& text);  // "a/b" or "a"

// Threshold values and asymptotic coefficients for clique size p, all exact.
struct ThresholdTable {
    int p;
    long long q_lin;   // binom(p,2) - p + 3
    long long q_quad;  // binom(p,2) - floor(p/2) + 2
    Rational lin_lower_coeff;                 // (3p-7)/(4p-10), times n
    Rational quad_lower_coeff;                // (2p-7)/(5p-18), times n^2
    Rational quad_upper_coeff;                // 5/12, times n^2
    Rational lin_upper_coeff;                 // 1, times n
    std::optional<Rational> h4_upper_coeff;   // (l-2)/(10l-18) at l = p/2, even p >= 6
};

ThresholdTable thresholds(int p);  // requires p >= 3

// (ell-2)/(10*ell-18), times n^2; requires ell >= 3.
Rational h4_upper_coeff(int ell);

// The quadratic-threshold limit transfer: input lim F/n^2 in [0, 1/2],
// output 1/2 - input.
Rational quad_limit_from_F(const Rational& lim_F_over_n2);

// Reference table of known asymptotic constants with provenance.
struct KnownConstant {
    std::string quantity;
    Rational value;
    std::string unit;  // what the value multiplies, e.g. "n^2" or "n"
    std::string provenance;
};

const std::vector<KnownConstant>& known_constants();

// Census and certificate from the component-counting argument: the auxiliary
// graph joins hyperedges sharing >= 2 vertices; every component of order b
// must cover at least 5b+1 distinct vertex pairs, components must be
// pairwise pair-disjoint and have order <= ell-2, and the pair budget
// sum_b (5b+1) C_b <= binom(n,2) must hold.
struct H4CertifyReport {
    std::vector<long long> components_by_order;  // index b-1 holds C_b
    long long edge_total = 0;                    // = sum_b b*C_b
    long long pair_budget_used = 0;              // sum_b (5b+1)*C_b
    long long pair_budget = 0;                   // binom(n,2)
    std::optional<ViolationWitness> violation;

    bool ok() const { return !violation.has_value(); }
};

// Requires that h passes check_defH_properties(h, ell); runs that check first
// and reports its witness if it fails.
H4CertifyReport certify_h4_pair_count(const MultiHypergraph& h, int ell);

}  // namespace gramsey

#endif
