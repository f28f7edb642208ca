#include "hhq/scalar.hpp"

namespace hhq {

bool is_prime(long long n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (long long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime(long long p) {
    if (!is_prime(p))
        throw std::invalid_argument("FieldSpec::prime: " + std::to_string(p) + " is not prime");
    return FieldSpec{p};
}

std::string FieldSpec::str() const {
    return is_rational() ? "Q" : "F" + std::to_string(characteristic);
}

bool divides_two_t_plus_one(FieldSpec field, long long T) {
    if (field.is_rational()) return false;
    return (2 * T + 1) % field.characteristic == 0;
}

namespace {
long long canonical_residue(long long v, long long p) {
    long long r = v % p;
    return r < 0 ? r + p : r;
}

// Inverse of a mod p via extended Euclid; a nonzero residue.
long long mod_inverse(long long a, long long p) {
    long long t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        long long q = r / new_r;
        long long tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    return canonical_residue(t, p);
}
}  // namespace

Scalar Scalar::zero(FieldSpec f) {
    Scalar s;
    s.field_ = f;
    return s;
}

Scalar Scalar::one(FieldSpec f) { return of_int(1, f); }

Scalar Scalar::of_int(long long v, FieldSpec f) {
    Scalar s;
    s.field_ = f;
    if (f.is_rational())
        s.rat_ = static_cast<long>(v);
    else
        s.res_ = canonical_residue(v, f.characteristic);
    return s;
}

Scalar Scalar::of_fraction(long long num, long long den, FieldSpec f) {
    if (den == 0) throw std::domain_error("Scalar: zero denominator");
    if (f.is_rational()) {
        Scalar s;
        s.field_ = f;
        s.rat_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
        s.rat_.canonicalize();
        return s;
    }
    return of_int(num, f) / of_int(den, f);
}

bool Scalar::is_zero() const {
    return field_.is_rational() ? rat_ == 0 : res_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_rational() ? rat_ == 1 : res_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (field_ != o.field_)
        throw std::invalid_argument("Scalar: mixed-field operands (" + field_.str() + " vs " +
                                    o.field_.str() + ")");
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (field_.is_rational())
        s.rat_ = -rat_;
    else
        s.res_ = res_ == 0 ? 0 : field_.characteristic - res_;
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
    Scalar s = *this;
    if (field_.is_rational())
        s.rat_ = 1 / rat_;
    else
        s.res_ = mod_inverse(res_, field_.characteristic);
    return s;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    a.check_same_field(b);
    Scalar s = a;
    if (a.field_.is_rational())
        s.rat_ = a.rat_ + b.rat_;
    else
        s.res_ = canonical_residue(a.res_ + b.res_, a.field_.characteristic);
    return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    a.check_same_field(b);
    Scalar s = a;
    if (a.field_.is_rational())
        s.rat_ = a.rat_ - b.rat_;
    else
        s.res_ = canonical_residue(a.res_ - b.res_, a.field_.characteristic);
    return s;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    a.check_same_field(b);
    Scalar s = a;
    if (a.field_.is_rational())
        s.rat_ = a.rat_ * b.rat_;
    else
        s.res_ = canonical_residue(a.res_ * b.res_, a.field_.characteristic);
    return s;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    a.check_same_field(b);
    if (b.is_zero()) throw std::domain_error("Scalar: division by zero");
    if (a.field_.is_rational()) {
        Scalar s = a;
        s.rat_ = a.rat_ / b.rat_;
        return s;
    }
    return a * b.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
    if (field_ != o.field_) return false;
    return field_.is_rational() ? rat_ == o.rat_ : res_ == o.res_;
}

std::string Scalar::str() const {
    return field_.is_rational() ? rat_.get_str() : std::to_string(res_);
}

const mpq_class& Scalar::rational() const {
    if (!field_.is_rational()) throw std::invalid_argument("Scalar: not a rational value");
    return rat_;
}

long long Scalar::residue() const {
    if (field_.is_rational()) throw std::invalid_argument("Scalar: not a prime-field value");
    return res_;
}

}  // namespace hhq
