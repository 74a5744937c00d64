#include "negtype/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace negtype {

double to_double(const Rational& q) { return q.convert_to<double>(); }

bool is_integer(const Rational& q) { return denominator(q) == 1; }

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::optional<Int> parse_int(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) return std::nullopt;
    while (s.size() > 1 && s[0] == '0') s.remove_prefix(1); // avoid octal parsing
    Int v{std::string(s)};
    return neg ? Int(-v) : v;
}

// Decimal literal with optional exponent: [+-]ddd[.ddd][e[+-]ddd]
std::optional<Rational> parse_decimal(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    std::string digits;
    long frac_digits = 0;
    long exponent = 0;
    std::size_t i = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
    if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            digits += s[i++];
            ++frac_digits;
        }
    }
    if (digits.empty()) return std::nullopt;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        auto e = parse_int(s.substr(i + 1));
        if (!e || *e > 4096 || *e < -4096) return std::nullopt;
        exponent = e->convert_to<long>();
        i = s.size();
    }
    if (i != s.size()) return std::nullopt;
    while (digits.size() > 1 && digits[0] == '0') digits.erase(0, 1); // avoid octal parsing
    Rational value(Int(digits), 1);
    long shift = exponent - frac_digits;
    Int pow10 = boost::multiprecision::pow(Int(10), static_cast<unsigned>(shift < 0 ? -shift : shift));
    if (shift >= 0)
        value *= Rational(pow10);
    else
        value /= Rational(pow10);
    return neg ? -value : value;
}

} // namespace

std::optional<Rational> parse_rational(std::string_view text) {
    if (text.empty()) return std::nullopt;
    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        auto num = parse_int(text.substr(0, slash));
        auto den = parse_int(text.substr(slash + 1));
        if (!num || !den || *den == 0) return std::nullopt;
        return Rational(*num, *den);
    }
    return parse_decimal(text);
}

std::string to_fraction_string(const Rational& q) {
    if (is_integer(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

Rational pow_rational(const Rational& q, long e) {
    if (e == 0) return Rational(1);
    bool invert = e < 0;
    unsigned long n = static_cast<unsigned long>(invert ? -e : e);
    Rational base = q, acc(1);
    while (n > 0) {
        if (n & 1UL) acc *= base;
        base *= base;
        n >>= 1UL;
    }
    if (invert) {
        if (acc == 0) throw std::domain_error("pow_rational: zero to a negative power");
        acc = Rational(1) / acc;
    }
    return acc;
}

namespace {

// floor of the n-th root of v >= 0
Int iroot(const Int& v, unsigned n) {
    if (v <= 1 || n == 1) return v;
    // Newton iteration with a generous initial guess.
    unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(v)) + 1;
    Int x = Int(1) << (bits / n + 1);
    while (true) {
        Int xn = boost::multiprecision::pow(x, n - 1);
        Int next = ((n - 1) * x + v / xn) / n;
        if (next >= x) break;
        x = next;
    }
    while (boost::multiprecision::pow(x, n) > v) --x;
    return x;
}

} // namespace

std::optional<Rational> nth_root_exact(const Rational& q, unsigned n) {
    if (n == 0) return std::nullopt;
    if (q < 0) return std::nullopt;
    if (n == 1 || q == 0 || q == 1) return q;
    Int num = numerator(q), den = denominator(q);
    Int rn = iroot(num, n), rd = iroot(den, n);
    if (boost::multiprecision::pow(rn, n) != num) return std::nullopt;
    if (boost::multiprecision::pow(rd, n) != den) return std::nullopt;
    return Rational(rn, rd);
}

std::optional<std::vector<Rational>> solve_linear_exact(int n,
                                                        std::vector<Rational> a,
                                                        std::vector<Rational> b) {
    auto at = [&](int r, int c) -> Rational& { return a[static_cast<std::size_t>(r) * n + c]; };
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if (at(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return std::nullopt;
        if (pivot != col) {
            for (int c = col; c < n; ++c) std::swap(at(pivot, c), at(col, c));
            std::swap(b[pivot], b[col]);
        }
        Rational inv = Rational(1) / at(col, col);
        for (int r = col + 1; r < n; ++r) {
            if (at(r, col) == 0) continue;
            Rational factor = at(r, col) * inv;
            at(r, col) = 0;
            for (int c = col + 1; c < n; ++c) at(r, c) -= factor * at(col, c);
            b[r] -= factor * b[col];
        }
    }
    std::vector<Rational> x(static_cast<std::size_t>(n));
    for (int r = n - 1; r >= 0; --r) {
        Rational acc = b[r];
        for (int c = r + 1; c < n; ++c) acc -= at(r, c) * x[c];
        x[r] = acc / at(r, r);
    }
    return x;
}

} // namespace negtype
