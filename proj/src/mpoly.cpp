#include "eulerbt/mpoly.hpp"

#include <ostream>
#include <stdexcept>
#include <vector>

#include "eulerbt/errors.hpp"

namespace eulerbt {

namespace {
constexpr std::array<std::string_view, kVarCount> kVarNames = {"alpha", "beta", "q",
                                                               "x",     "y",    "z"};
}

std::string_view var_name(VarId v) { return kVarNames[static_cast<int>(v)]; }

std::optional<VarId> var_from_name(std::string_view name) {
    for (int i = 0; i < kVarCount; ++i)
        if (kVarNames[i] == name) return static_cast<VarId>(i);
    return std::nullopt;
}

MPoly::MPoly(const Rat& c) {
    if (!c.is_zero()) terms_.emplace(ExponentVec{}, c);
}

MPoly MPoly::var(VarId v) {
    ExponentVec e{};
    e[static_cast<int>(v)] = 1;
    return monomial(Rat(1), e);
}

MPoly MPoly::monomial(const Rat& coeff, const ExponentVec& exps) {
    MPoly p;
    p.add_term(exps, coeff);
    return p;
}

bool MPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == ExponentVec{});
}

int MPoly::total_degree() const {
    if (terms_.empty()) return 0;
    // grlex-descending storage: the first term has maximal total degree
    const ExponentVec& e = terms_.begin()->first;
    return std::accumulate(e.begin(), e.end(), 0);
}

bool MPoly::uses(VarId v) const {
    for (const auto& [exps, coeff] : terms_)
        if (exps[static_cast<int>(v)] > 0) return true;
    return false;
}

void MPoly::add_term(const ExponentVec& exps, const Rat& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r;
    for (const auto& [exps, coeff] : terms_) r.terms_.emplace(exps, -coeff);
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [exps, coeff] : o.terms_) add_term(exps, coeff);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (const auto& [exps, coeff] : o.terms_) add_term(exps, -coeff);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            ExponentVec e;
            for (int i = 0; i < kVarCount; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly& MPoly::operator*=(const Rat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [exps, coeff] : terms_) coeff *= c;
    return *this;
}

MPoly MPoly::pow(int exponent) const {
    if (exponent < 0) throw std::invalid_argument("MPoly::pow: negative exponent");
    MPoly acc(Rat(1));
    for (int i = 0; i < exponent; ++i) acc *= *this;
    return acc;
}

Rat MPoly::eval(const std::map<VarId, Rat>& assignment) const {
    for (int i = 0; i < kVarCount; ++i) {
        VarId v = static_cast<VarId>(i);
        if (uses(v) && !assignment.count(v))
            throw MissingVariable("eval: no assignment for variable '" +
                                  std::string(var_name(v)) + "'");
    }
    Rat total(0);
    for (const auto& [exps, coeff] : terms_) {
        Rat term = coeff;
        for (int i = 0; i < kVarCount; ++i)
            if (exps[i] > 0) term *= eulerbt::pow(assignment.at(static_cast<VarId>(i)), exps[i]);
        total += term;
    }
    return total;
}

MPoly MPoly::substitute(VarId v, const MPoly& value) const {
    const int vi = static_cast<int>(v);
    int max_exp = 0;
    for (const auto& [exps, coeff] : terms_) max_exp = std::max(max_exp, exps[vi]);

    std::vector<MPoly> powers;
    powers.reserve(static_cast<std::size_t>(max_exp) + 1);
    powers.emplace_back(Rat(1));
    for (int e = 1; e <= max_exp; ++e) powers.push_back(powers.back() * value);

    MPoly result;
    for (const auto& [exps, coeff] : terms_) {
        ExponentVec rest = exps;
        rest[vi] = 0;
        result += MPoly::monomial(coeff, rest) * powers[static_cast<std::size_t>(exps[vi])];
    }
    return result;
}

MPoly MPoly::derivative(VarId v) const {
    const int vi = static_cast<int>(v);
    MPoly r;
    for (const auto& [exps, coeff] : terms_) {
        if (exps[vi] == 0) continue;
        ExponentVec e = exps;
        e[vi] -= 1;
        r.add_term(e, coeff * Rat(exps[vi]));
    }
    return r;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [exps, coeff] : terms_) {
        Rat mag = abs(coeff);
        if (first) {
            if (coeff.sign() < 0) out += '-';
            first = false;
        } else {
            out += coeff.sign() < 0 ? " - " : " + ";
        }
        std::string mono;
        for (int i = 0; i < kVarCount; ++i) {
            if (exps[i] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += var_name(static_cast<VarId>(i));
            if (exps[i] > 1) mono += '^' + std::to_string(exps[i]);
        }
        if (mono.empty())
            out += mag.str();
        else if (mag.is_one())
            out += mono;
        else
            out += mag.str() + '*' + mono;
    }
    return out;
}

MPoly gen_binomial(const MPoly& p, int k) {
    if (k < 0) return MPoly();
    MPoly acc(Rat(1));
    for (int j = 0; j < k; ++j) acc *= p - MPoly(j);
    acc *= Rat(BigInt(1), factorial(k));
    return acc;
}

std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.str(); }

}  // namespace eulerbt
