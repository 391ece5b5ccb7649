#include "eulerbt/rat.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace eulerbt {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
    bool neg = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s))
        throw std::invalid_argument("cannot parse rational: '" + std::string(whole) + "'");
    BigInt v{std::string(s)};
    return neg ? BigInt(-v) : v;
}

}  // namespace

Rat::Rat(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    normalize();
}

void Rat::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rat Rat::parse(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) throw std::invalid_argument("cannot parse rational: empty string");

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        BigInt p = parse_integer(s.substr(0, slash), text);
        std::string_view d = s.substr(slash + 1);
        if (!all_digits(d))
            throw std::invalid_argument("cannot parse rational: '" + std::string(text) + "'");
        return Rat(std::move(p), BigInt(std::string(d)));
    }

    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view head = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        bool neg = false;
        if (!head.empty() && (head.front() == '+' || head.front() == '-')) {
            neg = head.front() == '-';
            head.remove_prefix(1);
        }
        if (frac.find('.') != std::string_view::npos || (head.empty() && frac.empty()) ||
            (!head.empty() && !all_digits(head)) || (!frac.empty() && !all_digits(frac)))
            throw std::invalid_argument("cannot parse rational: '" + std::string(text) + "'");
        BigInt ip = head.empty() ? BigInt(0) : BigInt(std::string(head));
        BigInt scale = 1;
        BigInt fp = 0;
        if (!frac.empty()) {
            fp = BigInt(std::string(frac));
            scale = pow(BigInt(10), static_cast<unsigned>(frac.size()));
        }
        BigInt n = ip * scale + fp;
        return Rat(neg ? BigInt(-n) : n, scale);
    }

    return Rat(parse_integer(s, text));
}

Rat Rat::operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rat& Rat::operator+=(const Rat& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rat& Rat::operator-=(const Rat& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rat& Rat::operator*=(const Rat& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

std::string Rat::str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

std::string Rat::decimal(int digits) const {
    if (digits < 0) digits = 0;
    BigInt scale = pow(BigInt(10), static_cast<unsigned>(digits));
    BigInt n = boost::multiprecision::abs(num_) * scale;
    BigInt q = n / den_;
    BigInt r = n % den_;
    BigInt twice = r * 2;
    if (twice > den_ || (twice == den_ && q % 2 != 0)) ++q;

    std::string out;
    if (num_ < 0 && q != 0) out += '-';
    out += BigInt(q / scale).str();
    if (digits > 0) {
        std::string frac = BigInt(q % scale).str();
        out += '.';
        out += std::string(static_cast<std::size_t>(digits) - frac.size(), '0');
        out += frac;
    }
    return out;
}

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

Rat pow(const Rat& base, int exponent) {
    if (exponent < 0) return Rat(1) / pow(base, -exponent);
    Rat acc(1);
    for (int i = 0; i < exponent; ++i) acc *= base;
    return acc;
}

Rat rat_binomial(const BigInt& upper, int k) {
    if (k < 0) return Rat(0);
    Rat acc(1);
    for (int j = 0; j < k; ++j) acc *= Rat(upper - j, BigInt(j + 1));
    return acc;
}

BigInt factorial(int n) {
    BigInt acc = 1;
    for (int i = 2; i <= n; ++i) acc *= i;
    return acc;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace eulerbt
