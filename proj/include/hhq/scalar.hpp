#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hhq {

/// Ground field of a computation: the rationals (characteristic 0) or a
/// prime field F_p.
struct FieldSpec {
    long long characteristic = 0;

    static FieldSpec rationals() { return FieldSpec{0}; }
    static FieldSpec prime(long long p);

    bool is_rational() const { return characteristic == 0; }
    bool operator==(const FieldSpec&) const = default;
    std::string str() const;
};

bool is_prime(long long n);

/// True iff the field has positive characteristic p and p | 2T+1.
/// Always false in characteristic 0, and in characteristic 2 (2T+1 is odd).
bool divides_two_t_plus_one(FieldSpec field, long long T);

/// Exact field element. Over Q the value is a gcd-reduced fraction with
/// positive denominator (GMP canonical form); over F_p a residue in [0, p).
/// Immutable value type; operations never round.
class Scalar {
public:
    Scalar() = default;  // zero over Q

    static Scalar zero(FieldSpec f);
    static Scalar one(FieldSpec f);
    static Scalar of_int(long long v, FieldSpec f);
    static Scalar of_fraction(long long num, long long den, FieldSpec f);

    FieldSpec field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar inverse() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    bool operator==(const Scalar& o) const;

    std::string str() const;

    const mpq_class& rational() const;  // characteristic 0 only
    long long residue() const;          // characteristic p only

private:
    FieldSpec field_{};
    mpq_class rat_{};
    long long res_ = 0;

    void check_same_field(const Scalar& o) const;
};

}  // namespace hhq
