#ifndef BRCALC_FIELDS_HPP
#define BRCALC_FIELDS_HPP

#include <cstdint>

#include "brcalc/numeric.hpp"

namespace brcalc {

/// Coefficient field for the truncated linear algebra. Rationals are exact;
/// the prime field trades a vanishing failure probability on random inputs
/// for speed.
enum class FieldKind { rationals, fp32003 };

/// Arithmetic in F_p for p = 32003.
class Fp {
public:
    static constexpr uint64_t P = 32003;

    Fp() : v_(0) {}
    explicit Fp(long long n) {
        long long m = n % static_cast<long long>(P);
        if (m < 0) m += static_cast<long long>(P);
        v_ = static_cast<uint64_t>(m);
    }
    explicit Fp(const Rat& q) {
        Fp num(static_cast<long long>(numerator(q) % P));
        Fp den(static_cast<long long>(denominator(q) % P));
        if (den.v_ == 0) throw ComputeError("Fp: denominator divisible by 32003");
        v_ = (num * den.inv()).v_;
    }

    uint64_t value() const { return v_; }
    bool operator==(const Fp& o) const { return v_ == o.v_; }
    bool operator!=(const Fp& o) const { return v_ != o.v_; }

    Fp operator+(const Fp& o) const { return from_raw((v_ + o.v_) % P); }
    Fp operator-(const Fp& o) const { return from_raw((v_ + P - o.v_) % P); }
    Fp operator-() const { return from_raw(v_ == 0 ? 0 : P - v_); }
    Fp operator*(const Fp& o) const { return from_raw((v_ * o.v_) % P); }
    Fp operator/(const Fp& o) const { return *this * o.inv(); }
    Fp& operator+=(const Fp& o) { v_ = (v_ + o.v_) % P; return *this; }
    Fp& operator-=(const Fp& o) { v_ = (v_ + P - o.v_) % P; return *this; }
    Fp& operator*=(const Fp& o) { v_ = (v_ * o.v_) % P; return *this; }

    Fp inv() const {
        if (v_ == 0) throw ComputeError("Fp: division by zero");
        // p is prime: a^(p-2) = a^-1.
        uint64_t base = v_, result = 1, e = P - 2;
        while (e) {
            if (e & 1) result = result * base % P;
            base = base * base % P;
            e >>= 1;
        }
        return from_raw(result);
    }

private:
    static Fp from_raw(uint64_t v) {
        Fp f;
        f.v_ = v;
        return f;
    }
    uint64_t v_;
};

template <class F>
F field_from_rat(const Rat& q);

template <>
inline Rat field_from_rat<Rat>(const Rat& q) { return q; }

template <>
inline Fp field_from_rat<Fp>(const Rat& q) { return Fp(q); }

template <class F>
inline bool field_is_zero(const F& x) { return x == F(0); }

template <>
inline bool field_is_zero<Rat>(const Rat& x) { return x == 0; }

} // namespace brcalc

#endif
