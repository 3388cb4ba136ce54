#pragma once

#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "denum/polynomial.hpp"
#include "denum/rational.hpp"

namespace denum {

// q-th cyclotomic polynomial, by exact division of x^q - 1 by the lower ones.
Polynomial cyclotomic_poly(long q);

class CycloElem;

// Q(zeta_q): rationals adjoined a primitive q-th root of unity, elements
// reduced modulo Phi_q. Cheap to copy (shared immutable state).
class CycloField {
public:
    explicit CycloField(long q);

    long q() const { return im_->q; }
    int degree() const { return im_->degree; }
    const Polynomial& phi() const { return im_->phi; }

    CycloElem zero() const;
    CycloElem one() const;
    CycloElem from_rational(const Rational& r) const;
    // zeta^m, m taken mod q (any sign).
    CycloElem zeta_power(long m) const;
    CycloElem reduce(const Polynomial& p) const;

    friend bool operator==(const CycloField& a, const CycloField& b) {
        return a.im_ == b.im_ || a.im_->q == b.im_->q;
    }

private:
    struct Impl {
        long q;
        Polynomial phi;
        int degree;
    };
    std::shared_ptr<const Impl> im_;
    friend class CycloElem;
};

// Element of Q(zeta_q): coefficient vector over the basis 1, zeta, ...,
// zeta^(phi(q)-1). The reduced form is unique, so == is structural.
class CycloElem {
public:
    CycloElem(CycloField field, std::vector<Rational> coeffs);

    const CycloField& field() const { return fld_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    // rational iff every coordinate above the constant one vanishes
    bool is_rational() const;
    Rational as_rational() const;

    CycloElem make_zero() const { return fld_.zero(); }
    CycloElem make_one() const { return fld_.one(); }
    CycloElem embed(const Rational& r) const { return fld_.from_rational(r); }

    CycloElem operator-() const;
    friend CycloElem operator+(const CycloElem& a, const CycloElem& b);
    friend CycloElem operator-(const CycloElem& a, const CycloElem& b);
    friend CycloElem operator*(const CycloElem& a, const CycloElem& b);
    friend bool operator==(const CycloElem& a, const CycloElem& b);
    friend bool operator!=(const CycloElem& a, const CycloElem& b) { return !(a == b); }

    // Galois automorphism zeta -> zeta^p, gcd(p, q) = 1.
    CycloElem sigma(long p) const;

    // {"q": q, "coeffs": ["...", ...]}
    std::string to_json() const;

    friend std::ostream& operator<<(std::ostream& os, const CycloElem& e);

private:
    CycloField fld_;
    std::vector<Rational> c_;
};

CycloElem root_power(const CycloField& field, long m);

// Multiplicative inverse modulo Phi_q, by the extended Euclidean algorithm.
CycloElem cyclo_inv(const CycloElem& a);

// Sum of a over all automorphisms zeta -> zeta^p with gcd(p,q)=1. The result
// is Galois-invariant, hence rational; a non-rational reduced sum means an
// arithmetic bug upstream and throws.
Rational galois_sum(const CycloElem& a);

// Series field hooks.
inline CycloElem zero_like(const CycloElem& e) { return e.make_zero(); }
inline CycloElem one_like(const CycloElem& e) { return e.make_one(); }
inline CycloElem rational_embed(const CycloElem& proto, const Rational& r) {
    return proto.embed(r);
}
inline CycloElem inv_elem(const CycloElem& a) { return cyclo_inv(a); }
inline bool is_zero_elem(const CycloElem& a) { return a.is_zero(); }

}  // namespace denum
