#include "gbforge/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gbforge/errors.hpp"

namespace gbforge {

MonomialOrder MonomialOrder::lex() {
    return MonomialOrder{OrderKind::Lex, {}};
}

MonomialOrder MonomialOrder::degrevlex() {
    return MonomialOrder{OrderKind::DegRevLex, {}};
}

MonomialOrder MonomialOrder::with_priority(OrderKind kind, std::vector<std::uint32_t> priority) {
    std::vector<std::uint32_t> sorted = priority;
    std::sort(sorted.begin(), sorted.end());
    for (std::uint32_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] != i)
            throw ValidationError("variable_priority must be a permutation of 0..r-1");
    }
    return MonomialOrder{kind, std::move(priority)};
}

Monomial::Monomial(std::vector<std::uint32_t> exponents) : exps_(std::move(exponents)) {
    total_degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

Monomial Monomial::one(std::uint32_t nvars) {
    return Monomial(std::vector<std::uint32_t>(nvars, 0));
}

Monomial Monomial::variable(std::uint32_t nvars, std::uint32_t index) {
    if (index >= nvars)
        throw DimensionError("variable index " + std::to_string(index) + " out of range for " +
                             std::to_string(nvars) + " variables");
    std::vector<std::uint32_t> e(nvars, 0);
    e[index] = 1;
    return Monomial(std::move(e));
}

namespace {
void require_same_nvars(const Monomial& a, const Monomial& b, const char* what) {
    if (a.nvars() != b.nvars())
        throw DimensionError(std::string(what) + ": variable count mismatch (" +
                             std::to_string(a.nvars()) + " vs " + std::to_string(b.nvars()) + ")");
}
} // namespace

Monomial Monomial::operator*(const Monomial& rhs) const {
    require_same_nvars(*this, rhs, "monomial product");
    std::vector<std::uint32_t> e(exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] + rhs.exps_[i];
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& rhs) const {
    require_same_nvars(*this, rhs, "monomial divisibility");
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > rhs.exps_[i]) return false;
    return true;
}

Monomial Monomial::divide_exact(const Monomial& rhs) const {
    require_same_nvars(*this, rhs, "monomial quotient");
    std::vector<std::uint32_t> e(exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (rhs.exps_[i] > exps_[i]) throw DomainError("monomial quotient is not a monomial");
        e[i] = exps_[i] - rhs.exps_[i];
    }
    return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    require_same_nvars(a, b, "monomial lcm");
    std::vector<std::uint32_t> e(a.exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exps_[i], b.exps_[i]);
    return Monomial(std::move(e));
}

Ordering monomial_cmp(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars())
        throw DimensionError("monomial_cmp: variable count mismatch (" +
                             std::to_string(a.nvars()) + " vs " + std::to_string(b.nvars()) + ")");
    const std::uint32_t r = a.nvars();
    if (!order.variable_priority.empty() && order.variable_priority.size() != r)
        throw DimensionError("monomial_cmp: variable_priority length does not match ring");
    const auto var_at = [&](std::uint32_t k) {
        return order.variable_priority.empty() ? k : order.variable_priority[k];
    };

    if (order.kind == OrderKind::Lex) {
        for (std::uint32_t k = 0; k < r; ++k) {
            const std::uint32_t v = var_at(k);
            if (a.exponent(v) != b.exponent(v))
                return a.exponent(v) > b.exponent(v) ? Ordering::GT : Ordering::LT;
        }
        return Ordering::EQ;
    }

    // DegRevLex: higher total degree wins; ties broken by the reversed
    // priority sequence, smaller exponent in the last differing variable wins.
    if (a.total_degree() != b.total_degree())
        return a.total_degree() > b.total_degree() ? Ordering::GT : Ordering::LT;
    for (std::uint32_t k = r; k-- > 0;) {
        const std::uint32_t v = var_at(k);
        if (a.exponent(v) != b.exponent(v))
            return a.exponent(v) < b.exponent(v) ? Ordering::GT : Ordering::LT;
    }
    return Ordering::EQ;
}

} // namespace gbforge
