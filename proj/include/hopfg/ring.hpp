#ifndef HOPFG_RING_HPP
#define HOPFG_RING_HPP

// Exact scalar arithmetic: rationals over 64-bit integers with 128-bit
// intermediates, with optional mod-p mode (p prime, values in [0,p)).
// Overflow throws; nothing in the acceptance path uses floating point.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hopfg {

struct OverflowError : std::runtime_error {
    OverflowError() : std::runtime_error("rational overflow") {}
};

// When p == 0 the value is the exact rational n/d (d > 0, gcd(n,d)=1).
// When p != 0 the value is n mod p (d == 1).
struct Frac {
    long long n = 0;
    long long d = 1;
    long long p = 0;

    Frac() = default;
    Frac(long long num) : n(num) {}
    Frac(long long num, long long den) : n(num), d(den) { reduce(); }

    static Frac modp(long long num, long long prime) {
        Frac f;
        f.p = prime;
        f.n = ((num % prime) + prime) % prime;
        return f;
    }

    void reduce() {
        if (d == 0) throw std::domain_error("zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        long long g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
    }

    static long long fit(__int128 v) {
        if (v > INT64_MAX || v < INT64_MIN) throw OverflowError();
        return static_cast<long long>(v);
    }

    static void check_same_mode(const Frac& a, const Frac& b) {
        if (a.p != b.p)
            throw std::domain_error("mixed scalar modes");
    }

    friend Frac operator+(const Frac& a, const Frac& b) {
        check_same_mode(a, b);
        if (a.p) return modp(a.n + b.n, a.p);
        __int128 num = static_cast<__int128>(a.n) * b.d +
                       static_cast<__int128>(b.n) * a.d;
        __int128 den = static_cast<__int128>(a.d) * b.d;
        return from128(num, den);
    }
    friend Frac operator-(const Frac& a, const Frac& b) { return a + (-b); }
    friend Frac operator-(const Frac& a) {
        Frac r = a;
        if (r.p) r.n = (r.p - r.n) % r.p;
        else r.n = -r.n;
        return r;
    }
    friend Frac operator*(const Frac& a, const Frac& b) {
        check_same_mode(a, b);
        if (a.p) {
            __int128 v = static_cast<__int128>(a.n) * b.n % a.p;
            return modp(static_cast<long long>(v), a.p);
        }
        __int128 num = static_cast<__int128>(a.n) * b.n;
        __int128 den = static_cast<__int128>(a.d) * b.d;
        return from128(num, den);
    }
    friend Frac operator/(const Frac& a, const Frac& b) {
        check_same_mode(a, b);
        if (a.p) return a * b.inverse();
        if (b.n == 0) throw std::domain_error("division by zero");
        __int128 num = static_cast<__int128>(a.n) * b.d;
        __int128 den = static_cast<__int128>(a.d) * b.n;
        return from128(num, den);
    }

    Frac inverse() const {
        if (n == 0) throw std::domain_error("inverse of zero");
        if (!p) return Frac(d, n);
        // Extended Euclid mod p.
        long long a = n, m = p, x0 = 0, x1 = 1;
        while (a > 1) {
            long long q = a / m;
            long long t = m;
            m = a % m;
            a = t;
            t = x0;
            x0 = x1 - q * x0;
            x1 = t;
        }
        return modp(x1, p);
    }

    Frac& operator+=(const Frac& b) { return *this = *this + b; }
    Frac& operator*=(const Frac& b) { return *this = *this * b; }

    bool is_zero() const { return n == 0; }

    friend bool operator==(const Frac& a, const Frac& b) {
        return a.p == b.p && a.n == b.n && a.d == b.d;
    }

    std::string str() const {
        if (p) return std::to_string(n) + " mod " + std::to_string(p);
        if (d == 1) return std::to_string(n);
        return std::to_string(n) + "/" + std::to_string(d);
    }

  private:
    static Frac from128(__int128 num, __int128 den) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        __int128 a = num < 0 ? -num : num;
        __int128 b = den;
        while (b) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        if (a > 1) {
            num /= a;
            den /= a;
        }
        Frac f;
        f.n = fit(num);
        f.d = fit(den);
        return f;
    }
};

}  // namespace hopfg

#endif  // HOPFG_RING_HPP
