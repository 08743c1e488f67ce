#pragma once

// Exact arithmetic in the real quadratic field Q(sqrt(d)).
//
// The one-corner quantities q, alpha, beta, gamma, lambda, theta, g and
// every corner correction factor live in Q(sqrt(d)) with
// d = (r+c+1)^2 - 4cr.  Keeping them exact lets tests compare values like
// kappa(T2) and kappa(L4) at r = 1 by equality rather than by tolerance.
//
// Canonical form: if d is a perfect square the surd part is folded into
// the rational part and d is set to 0, so purely rational values always
// compare equal regardless of how they were produced.

#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

#include "gridclass/bigint.hpp"

namespace gridclass {

class QuadExt {
public:
    QuadExt() : a_(0), b_(0), d_(0) {}
    QuadExt(const BigRat& rational) : a_(rational), b_(0), d_(0) {}  // NOLINT: implicit by design
    QuadExt(std::int64_t n) : a_(n), b_(0), d_(0) {}                 // NOLINT

    QuadExt(const BigRat& a, const BigRat& b, std::int64_t d) : a_(a), b_(b), d_(d) {
        if (d < 0) throw std::invalid_argument("QuadExt: negative discriminant");
        normalize();
    }

    static QuadExt sqrt_of(std::int64_t d) { return QuadExt(0, 1, d); }

    const BigRat& rational_part() const { return a_; }
    const BigRat& surd_part() const { return b_; }
    std::int64_t discriminant() const { return d_; }
    bool is_rational() const { return b_ == 0; }

    // Exact rational value; throws when the value is irrational.
    BigRat as_rational() const {
        if (!is_rational()) throw std::domain_error("QuadExt: value is irrational");
        return a_;
    }

    QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        std::int64_t d = merge_disc(x, y);
        return QuadExt(x.a_ + y.a_, x.b_ + y.b_, d);
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) { return x + (-y); }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        std::int64_t d = merge_disc(x, y);
        return QuadExt(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d);
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
        std::int64_t d = merge_disc(x, y);
        BigRat norm = y.a_ * y.a_ - y.b_ * y.b_ * d;
        if (norm == 0) throw std::domain_error("QuadExt: division by zero");
        // multiply by the conjugate (a - b sqrt(d)) / norm
        BigRat na = (x.a_ * y.a_ - x.b_ * y.b_ * d) / norm;
        BigRat nb = (x.b_ * y.a_ - x.a_ * y.b_) / norm;
        return QuadExt(na, nb, d);
    }

    QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
    QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
    QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }
    QuadExt& operator/=(const QuadExt& y) { return *this = *this / y; }

    // Sign of a + b*sqrt(d), computed exactly.
    int sign() const {
        int sa = a_ == 0 ? 0 : (a_ > 0 ? 1 : -1);
        if (b_ == 0) return sa;
        int sb = b_ > 0 ? 1 : -1;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // opposite signs: compare a^2 with b^2 d
        BigRat lhs = a_ * a_;
        BigRat rhs = b_ * b_ * BigRat(d_);
        if (lhs == rhs) return 0;
        return lhs > rhs ? sa : sb;
    }

    friend bool operator==(const QuadExt& x, const QuadExt& y) { return (x - y).sign() == 0; }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }
    friend bool operator<(const QuadExt& x, const QuadExt& y) { return (x - y).sign() < 0; }
    friend bool operator>(const QuadExt& x, const QuadExt& y) { return (x - y).sign() > 0; }
    friend bool operator<=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() <= 0; }
    friend bool operator>=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() >= 0; }

    double to_double() const {
        double v = a_.convert_to<double>();
        if (b_ != 0) v += b_.convert_to<double>() * std::sqrt(static_cast<double>(d_));
        return v;
    }

    std::string str() const {
        std::ostringstream os;
        if (b_ == 0) {
            os << a_;
        } else {
            os << "(" << a_;
            if (b_ > 0) os << " + " << b_;
            else os << " - " << -b_;
            os << "*sqrt(" << d_ << "))";
        }
        return os.str();
    }

private:
    void normalize() {
        if (b_ == 0) { d_ = 0; return; }
        if (d_ == 0) { b_ = 0; return; }
        auto root = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(d_))));
        for (std::int64_t s = root > 0 ? root - 1 : 0; s <= root + 1; ++s) {
            if (s >= 0 && s * s == d_) {
                a_ += b_ * BigRat(s);
                b_ = 0;
                d_ = 0;
                return;
            }
        }
    }

    static std::int64_t merge_disc(const QuadExt& x, const QuadExt& y) {
        if (x.b_ == 0) return y.d_;
        if (y.b_ == 0) return x.d_;
        if (x.d_ != y.d_) throw std::domain_error("QuadExt: mixing distinct surds");
        return x.d_;
    }

    BigRat a_, b_;
    std::int64_t d_;
};

}  // namespace gridclass
