#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "pervlab/rational.hpp"

namespace pervlab {

// Exponent vector; length always equals the owning polynomial's variable count.
using Exponents = std::vector<unsigned>;

unsigned total_degree(const Exponents& e);
bool divides(const Exponents& a, const Exponents& b);  // a | b entrywise
Exponents exp_sum(const Exponents& a, const Exponents& b);
Exponents exp_diff(const Exponents& a, const Exponents& b);  // requires a >= b
Exponents exp_lcm(const Exponents& a, const Exponents& b);

enum class OrderKind { lex, grevlex };

// Monomial order: lex or graded reverse lex over a fixed variable order.
struct MonomialOrder {
    OrderKind kind = OrderKind::grevlex;
    std::vector<std::string> variables;

    // strict comparison: a < b in the monomial order
    bool less(const Exponents& a, const Exponents& b) const;

    static MonomialOrder lex(std::vector<std::string> vars) {
        return MonomialOrder{OrderKind::lex, std::move(vars)};
    }
    static MonomialOrder grevlex(std::vector<std::string> vars) {
        return MonomialOrder{OrderKind::grevlex, std::move(vars)};
    }
};

// Multivariate polynomial over Q with a fixed ordered variable list.
// Terms are stored sparsely; zero coefficients are never kept.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<std::string> variables) : variables_(std::move(variables)) {}

    // Grammar: sums of terms c*x1^a1*...*xn^an; '^' may be omitted for
    // exponent 1, whitespace is ignored, coefficients are integers or "p/q".
    // Variables are ordered by first appearance.
    static Poly parse(const std::string& text);

    const std::vector<std::string>& variables() const { return variables_; }
    const std::map<Exponents, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t var_count() const { return variables_.size(); }

    void add_term(const Exponents& exps, const Rat& coeff);

    Poly operator+(const Poly& other) const;
    Poly operator-(const Poly& other) const;
    Poly operator*(const Poly& other) const;
    bool operator==(const Poly& other) const {
        return variables_ == other.variables_ && terms_ == other.terms_;
    }
    bool operator!=(const Poly& other) const { return !(*this == other); }

    Poly scaled(const Rat& c) const;
    Poly times_monomial(const Exponents& exps, const Rat& coeff) const;
    Poly derivative(std::size_t var_index) const;

    // Largest term under the order; polynomial must be nonzero.
    std::pair<Exponents, Rat> leading_term(const MonomialOrder& order) const;

    std::string to_string() const;

private:
    std::vector<std::string> variables_;
    std::map<Exponents, Rat> terms_;
};

}  // namespace pervlab
