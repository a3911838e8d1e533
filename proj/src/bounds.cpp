#include "gramsey/bounds.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "gramsey/verify.hpp"

namespace gramsey {

std::string rational_to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(text));
        long long num = std::stoll(text.substr(0, slash));
        long long den = std::stoll(text.substr(slash + 1));
        return Rational(num, den);  // throws on zero denominator
    } catch (const boost::bad_rational&) {
        throw std::invalid_argument("invalid rational: " + text);
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid rational: " + text);
    }
}

ThresholdTable thresholds(int p) {
    if (p < 3) throw std::invalid_argument("thresholds: p must be >= 3");
    ThresholdTable t;
    t.p = p;
    t.q_lin = binom2(p) - p + 3;
    t.q_quad = binom2(p) - p / 2 + 2;
    t.lin_lower_coeff = Rational(3 * p - 7, 4 * p - 10);
    t.quad_lower_coeff = Rational(2 * p - 7, 5 * p - 18);
    t.quad_upper_coeff = Rational(5, 12);
    t.lin_upper_coeff = Rational(1);
    if (p >= 6 && p % 2 == 0) t.h4_upper_coeff = h4_upper_coeff(p / 2);
    return t;
}

Rational h4_upper_coeff(int ell) {
    if (ell < 3) throw std::invalid_argument("h4_upper_coeff: ell must be >= 3");
    return Rational(ell - 2, 10 * ell - 18);
}

Rational quad_limit_from_F(const Rational& lim) {
    if (lim < Rational(0) || lim > Rational(1, 2))
        throw std::invalid_argument("F limit coefficient must lie in [0, 1/2]");
    return Rational(1, 2) - lim;
}

const std::vector<KnownConstant>& known_constants() {
    static const std::vector<KnownConstant> table = {
        {"f(n,6,14)", Rational(5, 6), "binom(n,2)",
         "exact at n = 1,4 mod 12; asymptotic otherwise"},
        {"f(n,8,26)", Rational(9, 22), "n^2", "via the F^(4)(n;8,3) limit"},
        {"f(n,10,42)", Rational(5, 12), "n^2", "via the F^(4)(n;10,4) limit"},
        {"F4(n;8,3)", Rational(1, 11), "n^2", "Shangguan-Tamo"},
        {"F4(n;10,4)", Rational(1, 12), "n^2", "Glock-Joos-Kim-Kuhn-Lichev-Pikhurko"},
        {"f(n,4,5)", Rational(5, 6), "n", "linear threshold, p=4"},
        {"f(n,5,8)", Rational(6, 7), "n", "linear threshold, p=5"},
        {"F3(n;5,3)", Rational(1, 5), "n^2", "Glock"},
    };
    return table;
}

H4CertifyReport certify_h4_pair_count(const MultiHypergraph& h, int ell) {
    H4CertifyReport report;
    report.pair_budget = binom2(h.n());
    report.components_by_order.assign(std::max(0, ell - 2), 0);

    if (auto w = check_defH_properties(h, ell)) {
        report.violation = std::move(w);
        return report;
    }

    const auto& edges = h.edges();
    const std::size_t m = edges.size();
    report.edge_total = static_cast<long long>(m);

    // union-find over edges; join edges sharing at least two vertices
    std::vector<std::size_t> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    const auto& masks = h.edge_masks();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (std::popcount(masks[i] & masks[j]) >= 2) parent[find(i)] = find(j);

    std::map<std::size_t, std::vector<std::size_t>> components;
    for (std::size_t i = 0; i < m; ++i) components[find(i)].push_back(i);

    auto component_vertices = [&](const std::vector<std::size_t>& comp) {
        std::uint64_t mask = 0;
        for (std::size_t i : comp) mask |= masks[i];
        VertexSet vs;
        for (int v = 0; v < h.n(); ++v)
            if (mask >> v & 1) vs.push_back(v);
        return vs;
    };

    for (const auto& [root, comp] : components) {
        const long long b = static_cast<long long>(comp.size());
        if (b > ell - 2) {
            report.violation = ViolationWitness{"h4-component-order", component_vertices(comp),
                                                std::nullopt, std::nullopt, b};
            return report;
        }
        std::set<std::pair<Vertex, Vertex>> covered;
        for (std::size_t i : comp) {
            const VertexSet& vs = edges[i].vertices;
            for (std::size_t a = 0; a < vs.size(); ++a)
                for (std::size_t bb = a + 1; bb < vs.size(); ++bb)
                    covered.insert(std::make_pair(vs[a], vs[bb]));
        }
        if (static_cast<long long>(covered.size()) < 5 * b + 1) {
            report.violation =
                ViolationWitness{"h4-pair-count", component_vertices(comp), std::nullopt,
                                 std::nullopt, static_cast<long long>(covered.size())};
            return report;
        }
        report.components_by_order[static_cast<std::size_t>(b - 1)] += 1;
        report.pair_budget_used += 5 * b + 1;
    }

    // cross-component pair-disjointness, checked directly
    std::map<std::pair<Vertex, Vertex>, std::size_t> pair_owner;
    for (const auto& [root, comp] : components) {
        for (std::size_t i : comp) {
            const VertexSet& vs = edges[i].vertices;
            for (std::size_t a = 0; a < vs.size(); ++a)
                for (std::size_t bb = a + 1; bb < vs.size(); ++bb) {
                    auto pr = std::make_pair(vs[a], vs[bb]);
                    auto [it, inserted] = pair_owner.emplace(pr, root);
                    if (!inserted && it->second != root) {
                        report.violation = ViolationWitness{
                            "h4-shared-pair", {pr.first, pr.second}, std::nullopt, std::nullopt,
                            std::nullopt};
                        return report;
                    }
                }
        }
    }

    long long edge_sum = 0;
    for (std::size_t b = 1; b <= report.components_by_order.size(); ++b)
        edge_sum += static_cast<long long>(b) * report.components_by_order[b - 1];
    if (edge_sum != report.edge_total) {
        report.violation = ViolationWitness{"h4-census-identity", {}, std::nullopt, std::nullopt,
                                            edge_sum};
        return report;
    }
    if (report.pair_budget_used > report.pair_budget) {
        report.violation = ViolationWitness{"h4-census-total", {}, std::nullopt, std::nullopt,
                                            report.pair_budget_used};
        return report;
    }
    return report;
}

}  // namespace gramsey
