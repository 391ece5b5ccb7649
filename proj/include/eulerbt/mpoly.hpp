#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>

#include "eulerbt/rat.hpp"

namespace eulerbt {

// The fixed, closed variable set. The order alpha < beta < q < x < y < z is
// canonical and drives term ordering in printed output.
enum class VarId : int { Alpha = 0, Beta, Q, X, Y, Z };

inline constexpr int kVarCount = 6;

std::string_view var_name(VarId v);
std::optional<VarId> var_from_name(std::string_view name);

using ExponentVec = std::array<int, kVarCount>;

// Graded lexicographic, descending: higher total degree first, ties broken by
// the exponent vector in variable order. Map iteration order == print order.
struct GrlexDesc {
    bool operator()(const ExponentVec& a, const ExponentVec& b) const {
        int da = std::accumulate(a.begin(), a.end(), 0);
        int db = std::accumulate(b.begin(), b.end(), 0);
        if (da != db) return da > db;
        return a > b;
    }
};

// Sparse multivariate polynomial over Rat in the six fixed variables.
// Canonical: no stored zero coefficients, so two polynomials are equal iff
// their term maps are identical.
class MPoly {
public:
    using TermMap = std::map<ExponentVec, Rat, GrlexDesc>;

    MPoly() = default;
    MPoly(const Rat& c);
    MPoly(long long c) : MPoly(Rat(c)) {}

    static MPoly var(VarId v);
    static MPoly monomial(const Rat& coeff, const ExponentVec& exps);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    int total_degree() const;
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    bool uses(VarId v) const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o);
    MPoly& operator*=(const Rat& c);

    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(MPoly a, const Rat& c) { return a *= c; }
    friend MPoly operator*(const Rat& c, MPoly a) { return a *= c; }

    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    MPoly pow(int exponent) const;

    // Exact substitution; every variable appearing in the polynomial must be
    // assigned or MissingVariable is thrown.
    Rat eval(const std::map<VarId, Rat>& assignment) const;

    MPoly substitute(VarId v, const MPoly& value) const;
    MPoly derivative(VarId v) const;

    // Canonical text form: terms in grlex-descending order, explicit '*',
    // '^' powers, rational coefficients as p/q. Example: "6*x^2 + 6*x + 1".
    std::string str() const;

private:
    TermMap terms_;

    void add_term(const ExponentVec& exps, const Rat& coeff);
};

// Generalized binomial coefficient C(p, k) = p(p-1)...(p-k+1)/k! for a
// polynomial upper argument; 0 for k < 0. For constant p = n >= 0 this is
// the ordinary binomial coefficient, in particular 0 when k > n.
MPoly gen_binomial(const MPoly& p, int k);

std::ostream& operator<<(std::ostream& os, const MPoly& p);

}  // namespace eulerbt
