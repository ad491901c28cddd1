#ifndef GBFORGE_MONOMIAL_HPP
#define GBFORGE_MONOMIAL_HPP

#include <cstdint>
#include <vector>

namespace gbforge {

enum class Ordering { LT = -1, EQ = 0, GT = 1 };

enum class OrderKind { Lex, DegRevLex };

// A total, multiplicative well-ordering on monomials. variable_priority lists
// variable indices from highest to lowest; empty means x1 > x2 > ... > xr.
struct MonomialOrder {
    OrderKind kind = OrderKind::Lex;
    std::vector<std::uint32_t> variable_priority;

    static MonomialOrder lex();
    static MonomialOrder degrevlex();
    static MonomialOrder with_priority(OrderKind kind, std::vector<std::uint32_t> priority);

    bool operator==(const MonomialOrder&) const = default;
};

// Exponent vector x^alpha; the variable count is fixed by the ambient ring.
class Monomial {
public:
    explicit Monomial(std::vector<std::uint32_t> exponents);
    static Monomial one(std::uint32_t nvars);
    static Monomial variable(std::uint32_t nvars, std::uint32_t index);

    std::uint32_t nvars() const { return static_cast<std::uint32_t>(exps_.size()); }
    std::uint32_t exponent(std::uint32_t i) const { return exps_[i]; }
    std::uint64_t total_degree() const { return total_degree_; }
    const std::vector<std::uint32_t>& exponents() const { return exps_; }

    Monomial operator*(const Monomial& rhs) const;
    bool divides(const Monomial& rhs) const;
    /// this / rhs; DomainError unless rhs divides this.
    Monomial divide_exact(const Monomial& rhs) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& rhs) const { return exps_ == rhs.exps_; }

    // Storage order for term maps: structural, independent of MonomialOrder.
    struct KeyLess {
        bool operator()(const Monomial& a, const Monomial& b) const {
            return a.exps_ < b.exps_;
        }
    };

private:
    std::vector<std::uint32_t> exps_;
    std::uint64_t total_degree_ = 0;
};

/// Total order per the active MonomialOrder; DimensionError on mixed sizes.
Ordering monomial_cmp(const MonomialOrder& order, const Monomial& a, const Monomial& b);

inline bool monomial_less(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
    return monomial_cmp(order, a, b) == Ordering::LT;
}

} // namespace gbforge

#endif
