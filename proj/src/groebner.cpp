#include "pervlab/groebner.hpp"

#include <algorithm>

#include "pervlab/errors.hpp"

namespace pervlab {

namespace {

bool coprime(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

Poly spoly(const Poly& f, const Poly& g, const MonomialOrder& order) {
    auto [ef, cf] = f.leading_term(order);
    auto [eg, cg] = g.leading_term(order);
    Exponents l = exp_lcm(ef, eg);
    return f.times_monomial(exp_diff(l, ef), Rat(1) / cf) -
           g.times_monomial(exp_diff(l, eg), Rat(1) / cg);
}

Poly make_monic(const Poly& p, const MonomialOrder& order) {
    if (p.is_zero()) return p;
    return p.scaled(Rat(1) / p.leading_term(order).second);
}

void check_variables(const std::vector<Poly>& gens, const MonomialOrder& order) {
    for (const auto& g : gens)
        if (g.variables() != order.variables)
            throw DimensionError("groebner: generator variables differ from the order's");
}

}  // namespace

std::vector<Poly> jacobian_ideal(const Poly& f) {
    if (f.var_count() == 0) throw Error("jacobian_ideal: polynomial has no variables");
    std::vector<Poly> out;
    out.reserve(f.var_count());
    for (std::size_t i = 0; i < f.var_count(); ++i) out.push_back(f.derivative(i));
    return out;
}

Poly normal_form(const Poly& p, const std::vector<Poly>& gens, const MonomialOrder& order) {
    Poly work = p;
    Poly remainder(p.variables());
    while (!work.is_zero()) {
        auto [e, c] = work.leading_term(order);
        bool reduced = false;
        for (const auto& g : gens) {
            if (g.is_zero()) continue;
            auto [eg, cg] = g.leading_term(order);
            if (divides(eg, e)) {
                work = work - g.times_monomial(exp_diff(e, eg), c / cg);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            remainder.add_term(e, c);
            Poly lead(p.variables());
            lead.add_term(e, c);
            work = work - lead;
        }
    }
    return remainder;
}

std::vector<Poly> groebner(const std::vector<Poly>& gens_in, const MonomialOrder& order) {
    check_variables(gens_in, order);
    std::vector<Poly> basis;
    for (const auto& g : gens_in)
        if (!g.is_zero()) basis.push_back(make_monic(g, order));
    if (basis.empty()) return {};

    struct Pair {
        std::size_t i, j;
        Exponents lcm;
    };
    std::vector<Pair> pairs;
    auto push_pairs_with = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i)
            pairs.push_back({i, j,
                             exp_lcm(basis[i].leading_term(order).first,
                                     basis[j].leading_term(order).first)});
    };
    for (std::size_t j = 1; j < basis.size(); ++j) push_pairs_with(j);

    while (!pairs.empty()) {
        // normal strategy: smallest lcm under the order, ties by index pair
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            if (order.less(pairs[k].lcm, pairs[best].lcm) ||
                (pairs[k].lcm == pairs[best].lcm &&
                 std::tie(pairs[k].i, pairs[k].j) < std::tie(pairs[best].i, pairs[best].j)))
                best = k;
        }
        Pair pair = pairs[best];
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));

        Exponents li = basis[pair.i].leading_term(order).first;
        Exponents lj = basis[pair.j].leading_term(order).first;
        if (coprime(li, lj)) continue;  // first Buchberger criterion

        Poly r = normal_form(spoly(basis[pair.i], basis[pair.j], order), basis, order);
        if (!r.is_zero()) {
            basis.push_back(make_monic(r, order));
            push_pairs_with(basis.size() - 1);
        }
    }

    // minimal basis: drop elements whose leading term another one divides
    std::vector<Poly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Exponents& li = basis[i].leading_term(order).first;
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Exponents& lj = basis[j].leading_term(order).first;
            if (divides(lj, li) && (lj != li || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // full interreduction of tails
    std::vector<Poly> reduced = minimal;
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        std::vector<Poly> others;
        for (std::size_t j = 0; j < reduced.size(); ++j)
            if (j != i) others.push_back(reduced[j]);
        reduced[i] = make_monic(normal_form(reduced[i], others, order), order);
    }

    std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
        return order.less(a.leading_term(order).first, b.leading_term(order).first);
    });
    return reduced;
}

std::optional<std::size_t> standard_monomial_count(const std::vector<Poly>& gb,
                                                   const MonomialOrder& order) {
    std::size_t n = order.variables.size();
    std::vector<Exponents> leading;
    for (const auto& g : gb) {
        if (g.is_zero()) continue;
        leading.push_back(g.leading_term(order).first);
        if (total_degree(leading.back()) == 0) return 0;  // unit ideal
    }

    // finite dimension iff each variable has a pure power among leading terms
    std::vector<unsigned> box(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        bool found = false;
        for (const auto& e : leading) {
            if (e[v] == 0 || total_degree(e) != e[v]) continue;
            if (!found || e[v] < box[v]) box[v] = e[v];
            found = true;
        }
        if (!found) return std::nullopt;
    }

    // count monomials in the box not divisible by any leading term
    std::size_t count = 0;
    Exponents current(n, 0);
    while (true) {
        bool in_ideal = false;
        for (const auto& e : leading)
            if (divides(e, current)) {
                in_ideal = true;
                break;
            }
        if (!in_ideal) ++count;
        std::size_t v = 0;
        while (v < n) {
            if (++current[v] < box[v]) break;
            current[v] = 0;
            ++v;
        }
        if (v == n) break;
    }
    return count;
}

std::optional<std::size_t> milnor_number(const Poly& f) {
    return milnor_number(f, MonomialOrder::grevlex(f.variables()));
}

std::optional<std::size_t> milnor_number(const Poly& f, const MonomialOrder& order) {
    if (f.var_count() == 0) throw Error("milnor_number: polynomial has no variables");
    std::vector<Poly> gb = groebner(jacobian_ideal(f), order);
    return standard_monomial_count(gb, order);
}

std::optional<VanishingProfile> vanishing_profile(const Poly& f) {
    return vanishing_profile(f, MonomialOrder::grevlex(f.variables()));
}

std::optional<VanishingProfile> vanishing_profile(const Poly& f, const MonomialOrder& order) {
    auto mu = milnor_number(f, order);
    if (!mu) return std::nullopt;
    VanishingProfile profile;
    profile.milnor_number = *mu;
    if (*mu > 0) profile.ranks.emplace_back(f.var_count() - 1, *mu);
    return profile;
}

}  // namespace pervlab
