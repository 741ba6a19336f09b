#include "pervlab/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "pervlab/errors.hpp"

namespace pervlab {

unsigned total_degree(const Exponents& e) {
    unsigned d = 0;
    for (unsigned x : e) d += x;
    return d;
}

bool divides(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponents exp_sum(const Exponents& a, const Exponents& b) {
    Exponents out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Exponents exp_diff(const Exponents& a, const Exponents& b) {
    Exponents out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (b[i] > a[i]) throw Error("exp_diff: negative exponent");
        out[i] = a[i] - b[i];
    }
    return out;
}

Exponents exp_lcm(const Exponents& a, const Exponents& b) {
    Exponents out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
    return out;
}

bool MonomialOrder::less(const Exponents& a, const Exponents& b) const {
    if (a.size() != b.size()) throw DimensionError("monomial order: arity mismatch");
    if (kind == OrderKind::lex) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    // equal degree: a < b iff the rightmost difference has a[i] > b[i]
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

void Poly::add_term(const Exponents& exps, const Rat& coeff) {
    if (exps.size() != variables_.size()) throw DimensionError("add_term: arity mismatch");
    if (coeff == 0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator+(const Poly& other) const {
    if (variables_ != other.variables_) throw DimensionError("poly sum: variable mismatch");
    Poly out = *this;
    for (const auto& [e, c] : other.terms_) out.add_term(e, c);
    return out;
}

Poly Poly::operator-(const Poly& other) const {
    if (variables_ != other.variables_) throw DimensionError("poly difference: variable mismatch");
    Poly out = *this;
    for (const auto& [e, c] : other.terms_) out.add_term(e, -c);
    return out;
}

Poly Poly::operator*(const Poly& other) const {
    if (variables_ != other.variables_) throw DimensionError("poly product: variable mismatch");
    Poly out(variables_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : other.terms_) out.add_term(exp_sum(ea, eb), ca * cb);
    return out;
}

Poly Poly::scaled(const Rat& c) const {
    Poly out(variables_);
    if (c == 0) return out;
    for (const auto& [e, coeff] : terms_) out.terms_.emplace(e, coeff * c);
    return out;
}

Poly Poly::times_monomial(const Exponents& exps, const Rat& coeff) const {
    Poly out(variables_);
    if (coeff == 0) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(exp_sum(e, exps), c * coeff);
    return out;
}

Poly Poly::derivative(std::size_t var_index) const {
    if (var_index >= variables_.size()) throw DimensionError("derivative: bad variable index");
    Poly out(variables_);
    for (const auto& [e, c] : terms_) {
        if (e[var_index] == 0) continue;
        Exponents d = e;
        --d[var_index];
        out.add_term(d, c * Rat(e[var_index]));
    }
    return out;
}

std::pair<Exponents, Rat> Poly::leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw Error("leading_term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (order.less(best->first, it->first)) best = it;
    return {best->first, best->second};
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    // display in descending grevlex for a stable, readable order
    MonomialOrder ord = MonomialOrder::grevlex(variables_);
    std::vector<const std::pair<const Exponents, Rat>*> sorted;
    for (const auto& t : terms_) sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(),
              [&](auto* a, auto* b) { return ord.less(b->first, a->first); });
    std::ostringstream os;
    bool first = true;
    for (auto* t : sorted) {
        Rat c = t->second;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        Rat mag = c < 0 ? Rat(-c) : c;
        bool has_vars = total_degree(t->first) > 0;
        if (mag != 1 || !has_vars) os << rat_to_string(mag);
        bool need_star = mag != 1 || !has_vars;
        for (std::size_t i = 0; i < variables_.size(); ++i) {
            unsigned e = t->first[i];
            if (e == 0) continue;
            if (need_star) os << "*";
            os << variables_[i];
            if (e > 1) os << "^" << e;
            need_star = true;
        }
    }
    return os.str();
}

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return s[pos];
    }
    [[noreturn]] void fail(const std::string& why) {
        throw ParseError("polynomial syntax error at position " + std::to_string(pos) + ": " + why);
    }
    std::string read_number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected digits");
        return s.substr(start, pos - start);
    }
    std::string read_identifier() {
        skip_ws();
        std::size_t start = pos;
        if (pos >= s.size() || !(std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            fail("expected variable name");
        ++pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }
};

struct RawTerm {
    Rat coeff = 1;
    std::map<std::string, unsigned> powers;
};

}  // namespace

Poly Poly::parse(const std::string& text) {
    Lexer lx{text};
    std::vector<std::string> var_order;
    std::map<std::string, std::size_t> var_index;
    std::vector<RawTerm> raw_terms;

    auto note_var = [&](const std::string& name) {
        if (var_index.emplace(name, var_order.size()).second) var_order.push_back(name);
    };

    if (lx.eof()) throw ParseError("empty polynomial");

    bool first_term = true;
    while (!lx.eof()) {
        Rat sign = 1;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            sign = c == '-' ? -1 : 1;
            ++lx.pos;
        } else if (!first_term) {
            lx.fail("expected '+' or '-' between terms");
        }
        first_term = false;

        RawTerm term;
        term.coeff = sign;
        bool expect_factor = true;
        while (expect_factor) {
            if (lx.eof()) lx.fail("unexpected end of input inside term");
            char f = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(f))) {
                std::string num = lx.read_number();
                if (!lx.eof() && lx.peek() == '/') {
                    ++lx.pos;
                    std::string den = lx.read_number();
                    term.coeff *= rat_from_string(num + "/" + den);
                } else {
                    term.coeff *= rat_from_string(num);
                }
            } else if (std::isalpha(static_cast<unsigned char>(f)) || f == '_') {
                std::string name = lx.read_identifier();
                note_var(name);
                unsigned exp = 1;
                if (!lx.eof() && lx.peek() == '^') {
                    ++lx.pos;
                    exp = static_cast<unsigned>(std::stoul(lx.read_number()));
                }
                term.powers[name] += exp;
            } else {
                lx.fail(std::string("unexpected character '") + f + "'");
            }
            expect_factor = false;
            if (!lx.eof() && lx.peek() == '*') {
                ++lx.pos;
                expect_factor = true;
            }
        }
        raw_terms.push_back(std::move(term));
    }

    Poly out(var_order);
    for (const auto& term : raw_terms) {
        Exponents e(var_order.size(), 0);
        for (const auto& [name, exp] : term.powers) e[var_index.at(name)] += exp;
        out.add_term(e, term.coeff);
    }
    return out;
}

}  // namespace pervlab
