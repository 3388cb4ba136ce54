#include "denum/cyclotomic.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace denum {

namespace {

Polynomial x_pow_minus_one(long q) {
    std::vector<Rational> c(static_cast<std::size_t>(q) + 1);
    c[0] = Rational(-1);
    c[static_cast<std::size_t>(q)] = Rational(1);
    return Polynomial(std::move(c));
}

long mod_q(long m, long q) {
    long r = m % q;
    return r < 0 ? r + q : r;
}

}  // namespace

Polynomial cyclotomic_poly(long q) {
    if (q < 1) throw std::domain_error("cyclotomic_poly needs q >= 1");
    Polynomial num = x_pow_minus_one(q);
    for (long d = 1; d < q; ++d)
        if (q % d == 0) num = poly_divexact(num, cyclotomic_poly(d));
    return num;
}

CycloField::CycloField(long q) {
    if (q < 1) throw std::domain_error("cyclotomic field needs q >= 1");
    Polynomial phi = cyclotomic_poly(q);
    int degree = phi.degree();
    im_ = std::make_shared<const Impl>(Impl{q, std::move(phi), degree});
}

CycloElem CycloField::zero() const {
    return CycloElem(*this, std::vector<Rational>(static_cast<std::size_t>(degree())));
}

CycloElem CycloField::one() const { return from_rational(Rational(1)); }

CycloElem CycloField::from_rational(const Rational& r) const {
    // basis vector 1 is zeta^0 except in the degenerate q=1 field, where
    // Phi_1 = x - 1 maps the basis element to 1 anyway
    std::vector<Rational> c(static_cast<std::size_t>(degree()));
    c[0] = r;
    return CycloElem(*this, std::move(c));
}

CycloElem CycloField::reduce(const Polynomial& p) const {
    auto [quot, rem] = poly_divmod(p, phi());
    (void)quot;
    std::vector<Rational> c(static_cast<std::size_t>(degree()));
    for (int k = 0; k <= rem.degree(); ++k) c[static_cast<std::size_t>(k)] = rem.coeff(k);
    return CycloElem(*this, std::move(c));
}

CycloElem CycloField::zeta_power(long m) const {
    return reduce(Polynomial::monomial(Rational(1), static_cast<std::size_t>(mod_q(m, q()))));
}

CycloElem::CycloElem(CycloField field, std::vector<Rational> coeffs)
    : fld_(std::move(field)), c_(std::move(coeffs)) {
    if (c_.size() != static_cast<std::size_t>(fld_.degree()))
        throw std::invalid_argument("cyclotomic element has wrong coefficient count");
}

bool CycloElem::is_zero() const {
    for (const auto& v : c_)
        if (!v.is_zero()) return false;
    return true;
}

bool CycloElem::is_rational() const {
    for (std::size_t j = 1; j < c_.size(); ++j)
        if (!c_[j].is_zero()) return false;
    return true;
}

Rational CycloElem::as_rational() const {
    if (!is_rational()) throw std::domain_error("cyclotomic element is not rational");
    // in Q(zeta_1) the basis element is zeta^0 = 1 as everywhere else
    return c_[0];
}

CycloElem CycloElem::operator-() const {
    std::vector<Rational> c(c_.size());
    for (std::size_t j = 0; j < c_.size(); ++j) c[j] = -c_[j];
    return CycloElem(fld_, std::move(c));
}

namespace {
void check_same_field(const CycloElem& a, const CycloElem& b) {
    if (!(a.field() == b.field()))
        throw std::invalid_argument("cyclotomic elements from different fields");
}
}  // namespace

CycloElem operator+(const CycloElem& a, const CycloElem& b) {
    check_same_field(a, b);
    std::vector<Rational> c(a.c_.size());
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = a.c_[j] + b.c_[j];
    return CycloElem(a.fld_, std::move(c));
}

CycloElem operator-(const CycloElem& a, const CycloElem& b) {
    check_same_field(a, b);
    std::vector<Rational> c(a.c_.size());
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = a.c_[j] - b.c_[j];
    return CycloElem(a.fld_, std::move(c));
}

CycloElem operator*(const CycloElem& a, const CycloElem& b) {
    check_same_field(a, b);
    return a.fld_.reduce(Polynomial(a.c_) * Polynomial(b.c_));
}

bool operator==(const CycloElem& a, const CycloElem& b) {
    check_same_field(a, b);
    return a.c_ == b.c_;
}

CycloElem CycloElem::sigma(long p) const {
    long q = fld_.q();
    if (std::gcd(mod_q(p, q), q) != 1)
        throw std::domain_error("automorphism exponent not coprime to the conductor");
    std::vector<Rational> lifted(static_cast<std::size_t>(q));
    for (std::size_t j = 0; j < c_.size(); ++j)
        lifted[static_cast<std::size_t>(mod_q(static_cast<long>(j) * p, q))] += c_[j];
    return fld_.reduce(Polynomial(std::move(lifted)));
}

std::string CycloElem::to_json() const {
    std::ostringstream os;
    os << "{\"q\":" << fld_.q() << ",\"coeffs\":[";
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (j) os << ",";
        os << "\"" << c_[j].to_string() << "\"";
    }
    os << "]}";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycloElem& e) {
    os << "(q=" << e.fld_.q() << ")[";
    for (std::size_t j = 0; j < e.c_.size(); ++j) {
        if (j) os << ", ";
        os << e.c_[j];
    }
    return os << "]";
}

CycloElem root_power(const CycloField& field, long m) { return field.zeta_power(m); }

CycloElem cyclo_inv(const CycloElem& a) {
    if (a.is_zero()) throw std::domain_error("division by zero in cyclotomic field");
    // extended Euclid on (a, Phi_q) over Q[x]: u*a + v*Phi = g with g constant
    Polynomial r0 = a.field().phi(), r1 = Polynomial(a.coeffs());
    Polynomial u0, u1 = Polynomial::constant(Rational(1));
    while (r1.degree() > 0) {
        auto [quot, rem] = poly_divmod(r0, r1);
        Polynomial u2 = u0 - quot * u1;
        r0 = r1;
        r1 = rem;
        u0 = u1;
        u1 = u2;
    }
    if (r1.is_zero())
        throw std::domain_error("element shares a factor with the cyclotomic modulus");
    return a.field().reduce(r1.coeff(0).inverse() * u1);
}

Rational galois_sum(const CycloElem& a) {
    long q = a.field().q();
    CycloElem sum = a.field().zero();
    for (long p = 1; p <= q; ++p)
        if (std::gcd(p, q) == 1) sum = sum + a.sigma(p);
    if (!sum.is_rational())
        throw std::logic_error("galois_sum produced a non-rational element");
    return sum.as_rational();
}

}  // namespace denum
