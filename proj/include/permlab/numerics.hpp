#pragma once

// Exact number types. Every order comparison in the library bottoms out here,
// so all of it is integer arithmetic on arbitrary-precision values.

#include <compare>
#include <string>
#include <string_view>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

#include "permlab/errors.hpp"

namespace permlab {

using BigInt = boost::multiprecision::cpp_int;

// Sign of a + b*sqrt(d) for d > 0, decided without any square roots.
int sign_of_surd_numerator(const BigInt& a, const BigInt& b, const BigInt& d);

bool is_square_free_integer(const BigInt& d);

/// Rational number kept in lowest terms with a positive denominator.
class BigRational {
public:
    BigRational() = default;
    BigRational(long long value) : num_(value) {}  // NOLINT(google-explicit-constructor)
    BigRational(BigInt value) : num_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
    BigRational(BigInt numerator, BigInt denominator);

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_.sign(); }

    BigRational operator-() const;
    BigRational& operator+=(const BigRational& o);
    BigRational& operator-=(const BigRational& o);
    BigRational& operator*=(const BigRational& o);
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational&, const BigRational&) = default;
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b);

    BigInt floor() const;
    std::string to_string() const;

private:
    BigInt num_{0};
    BigInt den_{1};
};

/// Value (a + b*sqrt(d)) / c with c > 0, d square-free, gcd(a, b, c) = 1.
class QuadraticSurd {
public:
    QuadraticSurd(BigInt a, BigInt b, BigInt d, BigInt c = 1);
    static QuadraticSurd from_rational(const BigRational& r, const BigInt& d);

    const BigInt& a() const { return a_; }
    const BigInt& b() const { return b_; }
    const BigInt& c() const { return c_; }
    const BigInt& d() const { return d_; }
    bool is_rational() const { return b_ == 0 || d_ == 1; }
    int sign() const;

    QuadraticSurd operator-() const;
    friend QuadraticSurd operator+(const QuadraticSurd& u, const QuadraticSurd& v);
    friend QuadraticSurd operator-(const QuadraticSurd& u, const QuadraticSurd& v);
    friend QuadraticSurd operator*(const QuadraticSurd& u, const QuadraticSurd& v);
    friend QuadraticSurd operator/(const QuadraticSurd& u, const QuadraticSurd& v);

    friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;

    std::string to_string() const;

private:
    BigInt a_;
    BigInt b_;
    BigInt d_;
    BigInt c_;
};

BigInt floor_surd(const QuadraticSurd& u);

/// Either a rational or a quadratic surd. Surds with a vanishing irrational
/// part are stored as rationals, so equal values compare structurally equal.
class ExactReal {
public:
    ExactReal() = default;
    ExactReal(long long v) : value_(BigRational(v)) {}  // NOLINT(google-explicit-constructor)
    ExactReal(BigRational r) : value_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
    ExactReal(QuadraticSurd s);                          // NOLINT(google-explicit-constructor)

    bool is_rational() const { return std::holds_alternative<BigRational>(value_); }
    const BigRational& rational() const { return std::get<BigRational>(value_); }
    const QuadraticSurd& surd() const { return std::get<QuadraticSurd>(value_); }
    const std::variant<BigRational, QuadraticSurd>& variant() const { return value_; }

    int sign() const;
    BigInt floor() const;

    ExactReal operator-() const;
    friend ExactReal operator+(const ExactReal& u, const ExactReal& v);
    friend ExactReal operator-(const ExactReal& u, const ExactReal& v);
    friend ExactReal operator*(const ExactReal& u, const ExactReal& v);
    friend ExactReal operator/(const ExactReal& u, const ExactReal& v);

    friend bool operator==(const ExactReal&, const ExactReal&) = default;

    std::string to_string() const;

private:
    std::variant<BigRational, QuadraticSurd> value_;
};

/// Exact sign of u - v. Throws UnsupportedField for surds over different d.
std::strong_ordering compare(const ExactReal& u, const ExactReal& v);

inline std::strong_ordering operator<=>(const ExactReal& u, const ExactReal& v) {
    return compare(u, v);
}

/// Accepts "p", "p/q", "sqrtD", "√D", "(a+b√d)/c", "(a-bsqrtd)/c" and "a+b√d".
ExactReal parse_exact_real(std::string_view text);

}  // namespace permlab
