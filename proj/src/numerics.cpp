#include "permlab/numerics.hpp"

#include <cctype>
#include <optional>

namespace permlab {

namespace {

BigInt floor_div(const BigInt& n, const BigInt& d) {
    BigInt q = n / d;
    BigInt r = n % d;
    if (r != 0 && ((r < 0) != (d < 0))) --q;
    return q;
}

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

BigInt gcd_big(const BigInt& x, const BigInt& y) {
    return boost::multiprecision::gcd(abs_big(x), abs_big(y));
}

// The field a pair of surds lives in; rational surds adopt the other's d.
BigInt common_field(const QuadraticSurd& u, const QuadraticSurd& v) {
    if (u.is_rational()) return v.d();
    if (v.is_rational()) return u.d();
    if (u.d() != v.d()) {
        throw UnsupportedField("surds over sqrt(" + u.d().str() + ") and sqrt(" + v.d().str() +
                               ") cannot be combined");
    }
    return u.d();
}

}  // namespace

int sign_of_surd_numerator(const BigInt& a, const BigInt& b, const BigInt& d) {
    const int sa = a.sign();
    const int sb = b.sign();
    if (sa >= 0 && sb >= 0) return (sa > 0 || sb > 0) ? 1 : 0;
    if (sa <= 0 && sb <= 0) return -1;
    // Opposite signs: compare a^2 with d b^2.
    const BigInt lhs = a * a;
    const BigInt rhs = d * b * b;
    if (lhs == rhs) return 0;
    return (lhs > rhs) ? sa : sb;
}

bool is_square_free_integer(const BigInt& d) {
    if (d < 1) return false;
    BigInt n = d;
    for (BigInt p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return false;
        }
    }
    return true;
}

// --- BigRational -----------------------------------------------------------

BigRational::BigRational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_ == 0) throw std::domain_error("zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    const BigInt g = gcd_big(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

BigRational BigRational::operator-() const { return BigRational(BigInt(-num_), den_); }

BigRational& BigRational::operator+=(const BigRational& o) {
    *this = BigRational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    return *this;
}

BigRational& BigRational::operator-=(const BigRational& o) {
    *this = BigRational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    return *this;
}

BigRational& BigRational::operator*=(const BigRational& o) {
    *this = BigRational(num_ * o.num_, den_ * o.den_);
    return *this;
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.num_ == 0) throw std::domain_error("division by zero");
    *this = BigRational(num_ * o.den_, den_ * o.num_);
    return *this;
}

std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const BigInt lhs = a.num_ * b.den_;
    const BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

BigInt BigRational::floor() const { return floor_div(num_, den_); }

std::string BigRational::to_string() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

// --- QuadraticSurd ---------------------------------------------------------

QuadraticSurd::QuadraticSurd(BigInt a, BigInt b, BigInt d, BigInt c)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)), c_(std::move(c)) {
    if (c_ == 0) throw std::domain_error("zero denominator");
    if (!is_square_free_integer(d_)) {
        throw std::domain_error("radicand " + d_.str() + " is not a square-free positive integer");
    }
    if (c_ < 0) {
        a_ = -a_;
        b_ = -b_;
        c_ = -c_;
    }
    const BigInt g = gcd_big(gcd_big(a_, b_), c_);
    if (g > 1) {
        a_ /= g;
        b_ /= g;
        c_ /= g;
    }
}

QuadraticSurd QuadraticSurd::from_rational(const BigRational& r, const BigInt& d) {
    return QuadraticSurd(r.numerator(), 0, d, r.denominator());
}

int QuadraticSurd::sign() const { return sign_of_surd_numerator(a_, b_, d_); }

QuadraticSurd QuadraticSurd::operator-() const { return QuadraticSurd(-a_, -b_, d_, c_); }

QuadraticSurd operator+(const QuadraticSurd& u, const QuadraticSurd& v) {
    const BigInt d = common_field(u, v);
    return QuadraticSurd(u.a_ * v.c_ + v.a_ * u.c_, u.b_ * v.c_ + v.b_ * u.c_, d, u.c_ * v.c_);
}

QuadraticSurd operator-(const QuadraticSurd& u, const QuadraticSurd& v) { return u + (-v); }

QuadraticSurd operator*(const QuadraticSurd& u, const QuadraticSurd& v) {
    const BigInt d = common_field(u, v);
    return QuadraticSurd(u.a_ * v.a_ + u.b_ * v.b_ * d, u.a_ * v.b_ + u.b_ * v.a_, d,
                         u.c_ * v.c_);
}

QuadraticSurd operator/(const QuadraticSurd& u, const QuadraticSurd& v) {
    const BigInt d = common_field(u, v);
    // 1 / ((a + b√d)/c) = c (a - b√d) / (a² - d b²)
    const BigInt norm = v.a_ * v.a_ - d * v.b_ * v.b_;
    if (norm == 0) throw std::domain_error("division by zero");
    const QuadraticSurd inverse(v.c_ * v.a_, -v.c_ * v.b_, d, norm);
    return u * inverse;
}

std::string QuadraticSurd::to_string() const {
    std::string out = "(" + a_.str();
    out += (b_ < 0) ? "-" : "+";
    out += abs_big(b_).str() + "√" + d_.str() + ")/" + c_.str();
    return out;
}

BigInt floor_surd(const QuadraticSurd& u) {
    // floor((a + b√d)/c) = floor(floor(a + b√d)/c) for integer c > 0.
    const BigInt radicand = u.b() * u.b() * u.d();
    BigInt root = boost::multiprecision::sqrt(radicand);
    BigInt inner;
    if (u.b() >= 0) {
        inner = root;
    } else {
        inner = -root;
        if (root * root != radicand) --inner;
    }
    return floor_div(u.a() + inner, u.c());
}

// --- ExactReal -------------------------------------------------------------

ExactReal::ExactReal(QuadraticSurd s) {
    if (s.is_rational()) {
        BigInt num = s.a() + (s.d() == 1 ? s.b() : BigInt(0));
        value_ = BigRational(std::move(num), s.c());
    } else {
        value_ = std::move(s);
    }
}

int ExactReal::sign() const {
    return std::visit([](const auto& x) { return x.sign(); }, value_);
}

BigInt ExactReal::floor() const {
    if (is_rational()) return rational().floor();
    return floor_surd(surd());
}

ExactReal ExactReal::operator-() const {
    return std::visit([](const auto& x) { return ExactReal(-x); }, value_);
}

namespace {

std::optional<BigInt> field_of(const ExactReal& u) {
    if (u.is_rational()) return std::nullopt;
    return u.surd().d();
}

QuadraticSurd as_surd(const ExactReal& u, const BigInt& d) {
    if (u.is_rational()) return QuadraticSurd::from_rational(u.rational(), d);
    return u.surd();
}

template <typename RatOp, typename SurdOp>
ExactReal combine(const ExactReal& u, const ExactReal& v, RatOp rat_op, SurdOp surd_op) {
    if (u.is_rational() && v.is_rational()) return ExactReal(rat_op(u.rational(), v.rational()));
    const BigInt d = field_of(u).value_or(field_of(v).value_or(BigInt(1)));
    return ExactReal(surd_op(as_surd(u, d), as_surd(v, d)));
}

}  // namespace

ExactReal operator+(const ExactReal& u, const ExactReal& v) {
    return combine(u, v, std::plus<>{}, std::plus<>{});
}

ExactReal operator-(const ExactReal& u, const ExactReal& v) {
    return combine(u, v, std::minus<>{}, std::minus<>{});
}

ExactReal operator*(const ExactReal& u, const ExactReal& v) {
    return combine(u, v, std::multiplies<>{}, std::multiplies<>{});
}

ExactReal operator/(const ExactReal& u, const ExactReal& v) {
    return combine(u, v, std::divides<>{}, std::divides<>{});
}

std::string ExactReal::to_string() const {
    return std::visit([](const auto& x) { return x.to_string(); }, value_);
}

std::strong_ordering compare(const ExactReal& u, const ExactReal& v) {
    int s = 0;
    if (u.is_rational() && v.is_rational()) {
        return u.rational() <=> v.rational();
    }
    const BigInt d = field_of(u).value_or(field_of(v).value_or(BigInt(1)));
    const QuadraticSurd x = as_surd(u, d);
    const QuadraticSurd y = as_surd(v, d);
    common_field(x, y);
    // sign((a1 + b1√d)/c1 - (a2 + b2√d)/c2) with c1, c2 > 0
    s = sign_of_surd_numerator(x.a() * y.c() - y.a() * x.c(), x.b() * y.c() - y.b() * x.c(), d);
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

// --- parsing ---------------------------------------------------------------

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool done() {
        skip_space();
        return pos_ == text_.size();
    }
    bool eat(std::string_view token) {
        skip_space();
        if (text_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }
    bool eat_root() { return eat("√") || eat("sqrt"); }

    std::optional<BigInt> integer() {
        skip_space();
        const std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        const std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == digits) {
            pos_ = start;
            return std::nullopt;
        }
        std::string token(text_.substr(start, pos_ - start));
        if (token[0] == '+') token.erase(0, 1);
        return BigInt(token);
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("cannot parse number '" + std::string(text_) + "': " + what);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

// a [±] [b] √ d  or  a  or  [±][b]√d
QuadraticSurd parse_linear_surd(Cursor& cur) {
    BigInt a = 0;
    BigInt b = 0;
    BigInt d = 1;
    bool negative_root = cur.eat("-");
    if (!negative_root) cur.eat("+");
    if (cur.eat_root()) {
        auto radicand = cur.integer();
        if (!radicand) cur.fail("missing radicand");
        return QuadraticSurd(0, negative_root ? -1 : 1, *radicand, 1);
    }
    auto first = cur.integer();
    if (!first) cur.fail("expected integer");
    if (negative_root) first = -*first;
    if (cur.eat_root()) {
        auto radicand = cur.integer();
        if (!radicand) cur.fail("missing radicand");
        return QuadraticSurd(0, *first, *radicand, 1);
    }
    a = *first;
    int sign = 0;
    if (cur.eat("+")) sign = 1;
    else if (cur.eat("-")) sign = -1;
    if (sign == 0) return QuadraticSurd(a, 0, 1, 1);
    auto coefficient = cur.integer();
    b = coefficient ? *coefficient : BigInt(1);
    if (!cur.eat_root()) cur.fail("expected √ after coefficient");
    auto radicand = cur.integer();
    if (!radicand) cur.fail("missing radicand");
    d = *radicand;
    return QuadraticSurd(a, sign * b, d, 1);
}

}  // namespace

ExactReal parse_exact_real(std::string_view text) {
    Cursor cur(text);
    try {
        if (cur.eat("(")) {
            QuadraticSurd numerator = parse_linear_surd(cur);
            if (!cur.eat(")")) cur.fail("expected ')'");
            BigInt c = 1;
            if (cur.eat("/")) {
                auto den = cur.integer();
                if (!den) cur.fail("expected denominator");
                c = *den;
            }
            if (!cur.done()) cur.fail("trailing characters");
            return ExactReal(QuadraticSurd(numerator.a(), numerator.b(), numerator.d(), c));
        }
        QuadraticSurd value = parse_linear_surd(cur);
        if (value.b() == 0 && cur.eat("/")) {
            auto den = cur.integer();
            if (!den) cur.fail("expected denominator");
            if (!cur.done()) cur.fail("trailing characters");
            return ExactReal(BigRational(value.a(), *den));
        }
        if (!cur.done()) cur.fail("trailing characters");
        return ExactReal(value);
    } catch (const std::domain_error& e) {
        throw ParseError("cannot parse number '" + std::string(text) + "': " + e.what());
    }
}

}  // namespace permlab
