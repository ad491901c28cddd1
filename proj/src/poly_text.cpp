#include "gbforge/poly_text.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <vector>

#include "gbforge/errors.hpp"

namespace gbforge {

std::string render(const Polynomial& f, const MonomialOrder& order) {
    if (f.is_zero()) return "0";

    std::vector<const std::pair<const Monomial, FieldElem>*> terms;
    terms.reserve(f.term_count());
    for (const auto& t : f.terms()) terms.push_back(&t);
    std::sort(terms.begin(), terms.end(), [&](const auto* a, const auto* b) {
        return monomial_cmp(order, a->first, b->first) == Ordering::GT;
    });

    std::string out;
    bool first = true;
    for (const auto* t : terms) {
        const Monomial& mono = t->first;
        const FieldElem& c = t->second;
        const bool negative = c.is_negative();
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        const FieldElem mag = c.abs();
        std::string vars;
        for (std::uint32_t i = 0; i < mono.nvars(); ++i) {
            const std::uint32_t e = mono.exponent(i);
            if (e == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += "x" + std::to_string(i + 1);
            if (e != 1) vars += "^" + std::to_string(e);
        }
        if (vars.empty()) {
            out += mag.str();
        } else if (mag.is_one()) {
            out += vars;
        } else {
            out += mag.str() + "*" + vars;
        }
    }
    return out;
}

namespace {

class Cursor {
public:
    Cursor(const PolyRing& ring, std::string_view text) : ring_(ring), text_(text) {}

    Polynomial parse() {
        skip_ws();
        if (at_end()) fail("empty polynomial");
        Polynomial acc = Polynomial::zero(ring_);
        bool negative = false;
        if (peek() == '-') { negative = true; advance(); skip_ws(); }
        acc += parse_term(negative);
        for (;;) {
            skip_ws();
            if (at_end()) break;
            const char op = peek();
            if (op != '+' && op != '-') fail("expected '+' or '-'");
            advance();
            skip_ws();
            acc += parse_term(op == '-');
        }
        return acc;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("polynomial parse error at position " + std::to_string(pos_) + ": " +
                         what + " in '" + std::string(text_) + "'");
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void advance() { ++pos_; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }

    std::string read_digits() {
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digits");
        std::string out;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            out.push_back(peek());
            advance();
        }
        return out;
    }

    std::uint64_t read_number(const char* what) {
        const std::string d = read_digits();
        if (d.size() > 18) fail(std::string(what) + " out of range");
        return std::stoull(d);
    }

    FieldElem parse_coeff_magnitude() {
        std::string num = read_digits();
        std::string text = num;
        if (!at_end() && peek() == '/') {
            advance();
            text += "/" + read_digits();
        }
        return FieldElem::parse(ring_.field, text);
    }

    // factor := var [ '^' nat ]; accumulates exponents so "x1*x1" is legal input.
    void parse_factor(std::vector<std::uint32_t>& exps) {
        if (at_end() || peek() != 'x') fail("expected variable");
        advance();
        const std::uint64_t index = read_number("variable index");
        if (index < 1 || index > ring_.nvars)
            fail("variable x" + std::to_string(index) + " outside ring with " +
                 std::to_string(ring_.nvars) + " variables");
        std::uint64_t exponent = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
            advance();
            skip_ws();
            exponent = read_number("exponent");
            if (exponent > 1000000) fail("exponent out of supported range");
        }
        exps[index - 1] += static_cast<std::uint32_t>(exponent);
    }

    Polynomial parse_term(bool negative) {
        FieldElem c = FieldElem::one(ring_.field);
        bool saw_coeff = false;
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            c = parse_coeff_magnitude();
            saw_coeff = true;
        }
        std::vector<std::uint32_t> exps(ring_.nvars, 0);
        bool saw_var = false;
        skip_ws();
        if (saw_coeff) {
            if (!at_end() && peek() == '*') {
                advance();
                skip_ws();
                parse_factor(exps);
                saw_var = true;
            }
        } else {
            parse_factor(exps);
            saw_var = true;
        }
        while (saw_var) {
            skip_ws();
            if (at_end() || peek() != '*') break;
            advance();
            skip_ws();
            parse_factor(exps);
        }
        if (!saw_coeff && !saw_var) fail("expected term");
        if (negative) c = -c;
        return Polynomial::term(ring_, Monomial(std::move(exps)), std::move(c));
    }

    const PolyRing& ring_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(const PolyRing& ring, std::string_view text) {
    return Cursor(ring, text).parse();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) {
    return os << render(f);
}

} // namespace gbforge
