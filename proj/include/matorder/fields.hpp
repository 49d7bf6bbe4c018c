#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace matorder {

/// Arbitrary-precision rational scalar (expression templates disabled so the
/// type behaves like a plain value in generic code).
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<
        boost::multiprecision::backends::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

using Complex = std::complex<double>;

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Field of rationals with exact arithmetic and trivial involution.
struct RationalField {
    using Elem = Rational;
    static constexpr bool is_exact = true;

    std::string name() const { return "Q"; }

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long long v) const { return Elem(v); }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem div(const Elem& a, const Elem& b) const {
        if (b == 0) throw std::domain_error("division by zero");
        return a / b;
    }
    Elem inv(const Elem& a) const { return div(one(), a); }
    Elem conj(const Elem& a) const { return a; }

    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    bool compatible(const RationalField&) const { return true; }
    bool operator==(const RationalField&) const { return true; }

    std::string str(const Elem& a) const {
        if (denominator(a) == 1) return numerator(a).str();
        return numerator(a).str() + "/" + denominator(a).str();
    }
    Elem parse(std::string_view s) const;
};

/// Prime field GF(p), elements stored as canonical representatives in [0, p).
struct PrimeField {
    std::uint64_t p = 2;

    using Elem = std::uint64_t;
    static constexpr bool is_exact = true;

    PrimeField() = default;
    explicit PrimeField(std::uint64_t modulus) : p(modulus) {
        if (!is_prime_u64(p)) throw std::invalid_argument("GF(p) modulus " + std::to_string(p) + " is not prime");
        if (p >= (std::uint64_t{1} << 31)) throw std::invalid_argument("GF(p) modulus too large");
    }

    std::string name() const { return "GF " + std::to_string(p); }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    Elem from_int(long long v) const {
        long long m = static_cast<long long>(p);
        long long r = v % m;
        if (r < 0) r += m;
        return static_cast<Elem>(r);
    }

    Elem add(Elem a, Elem b) const { return (a + b) % p; }
    Elem sub(Elem a, Elem b) const { return (a + p - b) % p; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p; }
    Elem neg(Elem a) const { return (p - a) % p; }
    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("division by zero in GF(p)");
        // extended Euclid
        long long t = 0, nt = 1, r = static_cast<long long>(p), nr = static_cast<long long>(a);
        while (nr != 0) {
            long long q = r / nr;
            long long tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (t < 0) t += static_cast<long long>(p);
        return static_cast<Elem>(t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem conj(Elem a) const { return a; }

    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }

    bool compatible(const PrimeField& o) const { return p == o.p; }
    bool operator==(const PrimeField& o) const { return p == o.p; }

    std::string str(Elem a) const { return std::to_string(a); }
    Elem parse(std::string_view s) const;
};

/// Complex doubles; `tol` is the relative residual used by approximate
/// comparisons (never by the arithmetic itself).
struct ComplexField {
    double tol = 1e-10;

    using Elem = Complex;
    static constexpr bool is_exact = false;

    ComplexField() = default;
    explicit ComplexField(double tolerance) : tol(tolerance) {
        if (!(tol > 0)) throw std::invalid_argument("complex-float tolerance must be positive");
    }

    std::string name() const { return "C"; }

    Elem zero() const { return {0.0, 0.0}; }
    Elem one() const { return {1.0, 0.0}; }
    Elem from_int(long long v) const { return {static_cast<double>(v), 0.0}; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem div(const Elem& a, const Elem& b) const {
        if (b == Elem{0.0, 0.0}) throw std::domain_error("division by zero");
        return a / b;
    }
    Elem inv(const Elem& a) const { return div(one(), a); }
    Elem conj(const Elem& a) const { return std::conj(a); }

    bool is_zero(const Elem& a) const { return a == Elem{0.0, 0.0}; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    // Tolerance is a comparison parameter, not part of the algebraic identity
    // of the field; mixing two tolerances keeps the stricter result via max in
    // merge().
    bool compatible(const ComplexField&) const { return true; }
    bool operator==(const ComplexField& o) const { return tol == o.tol; }

    ComplexField merge(const ComplexField& o) const { return ComplexField(std::max(tol, o.tol)); }

    std::string str(const Elem& a) const;
    Elem parse(std::string_view s) const;
};

namespace detail {

inline void parse_error(std::string_view s) {
    throw std::invalid_argument("cannot parse scalar '" + std::string(s) + "'");
}

inline double parse_double(std::string_view s) {
    if (s.empty()) parse_error(s);
    std::string buf(s);
    char* end = nullptr;
    double v = std::strtod(buf.c_str(), &end);
    if (end != buf.c_str() + buf.size()) parse_error(s);
    return v;
}

} // namespace detail

inline RationalField::Elem RationalField::parse(std::string_view s) const {
    if (s.empty()) detail::parse_error(s);
    try {
        auto slash = s.find('/');
        using Int = boost::multiprecision::cpp_int;
        if (slash == std::string_view::npos) return Elem(Int(std::string(s)));
        Int num{std::string(s.substr(0, slash))};
        Int den{std::string(s.substr(slash + 1))};
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Elem(num) / Elem(den);
    } catch (const std::runtime_error&) {
        detail::parse_error(s);
    } catch (const std::invalid_argument&) {
        detail::parse_error(s);
    }
    return zero(); // unreachable
}

inline PrimeField::Elem PrimeField::parse(std::string_view s) const {
    if (s.empty()) detail::parse_error(s);
    bool negative = false;
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') { negative = s[0] == '-'; i = 1; }
    if (i == s.size()) detail::parse_error(s);
    std::uint64_t v = 0;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') detail::parse_error(s);
        v = (v * 10 + static_cast<std::uint64_t>(s[i] - '0')) % p;
    }
    return negative ? neg(v) : v;
}

inline std::string ComplexField::str(const Elem& a) const {
    char buf[80];
    std::snprintf(buf, sizeof buf, "%.17g,%.17g", a.real(), a.imag());
    return buf;
}

inline ComplexField::Elem ComplexField::parse(std::string_view s) const {
    auto comma = s.find(',');
    if (comma == std::string_view::npos) return {detail::parse_double(s), 0.0};
    return {detail::parse_double(s.substr(0, comma)), detail::parse_double(s.substr(comma + 1))};
}

template <class F>
concept Field = requires(const F f, const typename F::Elem a, const typename F::Elem b) {
    { f.add(a, b) } -> std::convertible_to<typename F::Elem>;
    { f.mul(a, b) } -> std::convertible_to<typename F::Elem>;
    { f.is_zero(a) } -> std::convertible_to<bool>;
    { f.compatible(f) } -> std::convertible_to<bool>;
};

} // namespace matorder
