#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace gcomp {

/// Signed arbitrary-precision integer.
using BigInt = boost::multiprecision::cpp_int;

/// Raised when an identity that must hold exactly (an exact division, a nonnegative sum) fails.
class internal_consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/**
 * Nonnegative arbitrary-precision integer. Any operation that would produce a negative value
 * throws std::range_error.
 */
class BigNat {
public:
    BigNat() = default;
    template <std::integral T>
    BigNat(T x) : v_(x) {  // NOLINT(google-explicit-constructor)
        check();
    }
    explicit BigNat(BigInt x) : v_(std::move(x)) { check(); }

    const BigInt& value() const { return v_; }
    std::string str() const { return v_.str(); }

    /// Narrowing to a machine word; throws std::overflow_error when it does not fit.
    unsigned long long to_u64() const {
        if (v_ > std::numeric_limits<unsigned long long>::max()) throw std::overflow_error("BigNat exceeds 64 bits");
        return static_cast<unsigned long long>(v_);
    }

    BigNat& operator+=(const BigNat& o) {
        v_ += o.v_;
        return *this;
    }
    BigNat& operator-=(const BigNat& o) {
        v_ -= o.v_;
        check();
        return *this;
    }
    BigNat& operator*=(const BigNat& o) {
        v_ *= o.v_;
        return *this;
    }
    BigNat& operator/=(const BigNat& o) {
        v_ /= o.v_;
        return *this;
    }
    BigNat& operator%=(const BigNat& o) {
        v_ %= o.v_;
        return *this;
    }
    BigNat& operator<<=(unsigned k) {
        v_ <<= k;
        return *this;
    }
    BigNat& operator++() {
        ++v_;
        return *this;
    }

    friend BigNat operator+(BigNat a, const BigNat& b) { return a += b; }
    friend BigNat operator-(BigNat a, const BigNat& b) { return a -= b; }
    friend BigNat operator*(BigNat a, const BigNat& b) { return a *= b; }
    friend BigNat operator/(BigNat a, const BigNat& b) { return a /= b; }
    friend BigNat operator%(BigNat a, const BigNat& b) { return a %= b; }
    friend BigNat operator<<(BigNat a, unsigned k) { return a <<= k; }

    friend bool operator==(const BigNat& a, const BigNat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b) {
        const int c = a.v_.compare(b.v_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const BigNat& x) { return os << x.v_; }

private:
    void check() const {
        if (v_ < 0) throw std::range_error("BigNat would become negative: " + v_.str());
    }

    BigInt v_;
};

inline BigInt to_int(const BigNat& x) { return x.value(); }

inline BigNat to_nat(const BigInt& x, const char* what = "value") {
    if (x < 0) throw internal_consistency_error(std::string(what) + " is negative: " + x.str());
    return BigNat(x);
}

inline BigNat pow2(unsigned k) { return BigNat(1) << k; }

inline BigNat pow_nat(const BigNat& base, unsigned exp) { return BigNat(BigInt(boost::multiprecision::pow(base.value(), exp))); }

/// Exact binomial coefficient; zero when k > n.
inline BigNat binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return BigNat(r);
}

}  // namespace gcomp
