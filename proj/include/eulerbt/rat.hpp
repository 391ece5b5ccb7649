#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

namespace eulerbt {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number in canonical form: denominator > 0, lowest terms,
// zero stored as 0/1.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}
    Rat(BigInt n) : num_(std::move(n)), den_(1) {}
    Rat(BigInt num, BigInt den);

    // Accepts "p", "p/q" and decimal literals like "-0.125".
    static Rat parse(std::string_view text);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rat operator-() const;

    Rat& operator+=(const Rat& o);
    Rat& operator-=(const Rat& o);
    Rat& operator*=(const Rat& o);
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    // "p" when the denominator is 1, otherwise "p/q".
    std::string str() const;

    // Fixed-point rendering with `digits` fractional digits, round half to even.
    std::string decimal(int digits) const;

private:
    BigInt num_;
    BigInt den_;

    void normalize();
};

Rat abs(const Rat& r);
Rat pow(const Rat& base, int exponent);

// C(upper, k) by the multiplicative formula upper(upper-1)...(upper-k+1)/k!,
// exact for any integer upper (also negative); 0 for k < 0.
Rat rat_binomial(const BigInt& upper, int k);

BigInt factorial(int n);

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace eulerbt
