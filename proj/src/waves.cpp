#include "denum/waves.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

#include "json.hpp"

#include "denum/combinatorics.hpp"
#include "denum/laurent.hpp"

namespace denum {

WaveContext split_components(const Components& c, long q) {
    validate_components(c);
    if (q < 1) throw std::invalid_argument("wave period must be positive");
    Components alphas, betas;
    for (long d : c) (d % q == 0 ? alphas : betas).push_back(d);
    if (alphas.empty())
        throw std::invalid_argument(std::to_string(q) + " is not a wave period for these components");
    return WaveContext{q, std::move(alphas), std::move(betas), CycloField(q)};
}

CycloElem xi(unsigned long n, const WaveContext& ctx, long rho_exponent) {
    if (ctx.q < 2) throw std::invalid_argument("xi: q must be >= 2");
    if (n < 1) throw std::invalid_argument("xi: n must be >= 1");
    long e = ((rho_exponent % ctx.q) + ctx.q) % ctx.q;
    if (std::gcd(e, ctx.q) != 1) throw std::invalid_argument("xi: rho exponent not coprime to q");
    const CycloField& F = ctx.field;
    CycloElem acc = F.zero();
    for (long b : ctx.betas) {
        CycloElem rmb = F.zeta_power(-e * b);  // rho^(-beta_j)
        CycloElem u = rmb * cyclo_inv(F.one() - rmb);
        if (n == 1) {
            acc = acc + F.from_rational(Rational(b)) * (F.one() + u + u);
        } else {
            CycloElem inner = F.zero();
            CycloElem upow = F.one();
            Int kfac = 1;  // (k-1)!
            for (unsigned long k = 1; k <= n; ++k) {
                upow = upow * u;
                if (k >= 2) kfac *= static_cast<long>(k - 1);
                inner = inner + F.from_rational(Rational(kfac * stirling2(n, k))) * upow;
            }
            Int bn, twon;
            mpz_pow_ui(bn.get_mpz_t(), Int(b).get_mpz_t(), n);
            mpz_ui_pow_ui(twon.get_mpz_t(), 2, n);
            acc = acc + F.from_rational(Rational(twon * bn)) * inner;
        }
    }
    return acc;
}

Rational tau_bar(unsigned long two_n, const Components& alphas) {
    if (two_n < 2 || two_n % 2 != 0)
        throw std::invalid_argument("tau_bar: index must be even and >= 2");
    int hi = static_cast<int>(two_n);
    LaurentSeries<Rational> prod = LaurentSeries<Rational>::constant(Rational(1), hi);
    for (long a : alphas) {
        // sinh(x)/x with x = a t/2: even coefficients x^(2k)/(2k+1)!.
        std::vector<Rational> g(two_n + 1);
        Rational x2 = Rational(a, 2) * Rational(a, 2), xp(1);
        g[0] = Rational(1);
        for (unsigned long k = 1; 2 * k <= two_n; ++k) {
            xp *= x2;
            g[2 * k] = xp / Rational(factorial(2 * k + 1));
        }
        prod = prod * LaurentSeries<Rational>(0, std::move(g), hi, Rational(0));
    }
    // [t^(2n)] log prod (x/sinh x) = (-1)^n taubar_(2n) / (2n); the series
    // here is the reciprocal product, so flip the sign once more.
    Rational c = coefficient(series_log(prod), hi);
    unsigned long n = two_n / 2;
    Rational t = Rational(static_cast<long>(two_n)) * c;
    return n % 2 == 0 ? -t : t;
}

CycloElem kappa(unsigned long n, const WaveContext& ctx, long rho_exponent) {
    if (n < 1) throw std::invalid_argument("kappa: n must be >= 1");
    const CycloField& F = ctx.field;
    CycloElem v = ctx.q >= 2 ? xi(n, ctx, rho_exponent) : F.zero();
    Int twon;
    mpz_ui_pow_ui(twon.get_mpz_t(), 2, n);
    Int den = twon * factorial(n - 1);
    v = F.from_rational(Rational(Int(1), den)) * v;
    if (n % 2 == 0) {
        Rational t = tau_bar(n, ctx.alphas);
        if ((n / 2) % 2 == 1) t = -t;
        v = v + F.from_rational(t);
    }
    return v;
}

std::vector<CycloElem> theta_sequence(const std::vector<CycloElem>& kappas, unsigned long count) {
    if (count == 0) throw std::invalid_argument("theta_sequence: count must be positive");
    if (kappas.empty())
        throw std::invalid_argument("theta_sequence: at least one kappa is needed for field context");
    if (count > kappas.size() + 1)
        throw std::invalid_argument("theta_sequence: count exceeds available kappas");
    const CycloElem& proto = kappas[0];
    int m = static_cast<int>(count) - 1;
    std::vector<CycloElem> coeffs;
    coeffs.reserve(static_cast<std::size_t>(m));
    for (int n = 1; n <= m; ++n)
        coeffs.push_back(proto.embed(Rational(n % 2 == 0 ? 1 : -1, n)) *
                         kappas[static_cast<std::size_t>(n - 1)]);
    LaurentSeries<CycloElem> arg(1, std::move(coeffs), m, proto.make_zero());
    LaurentSeries<CycloElem> f = series_exp(arg);
    std::vector<CycloElem> th;
    th.reserve(count);
    for (int r = 0; r < static_cast<int>(count); ++r) {
        CycloElem v = coefficient(f, r);
        th.push_back(r % 2 == 1 ? -v : v);
    }
    return th;
}

namespace {

CycloElem beta_product_inverse(const WaveContext& ctx) {
    const CycloField& F = ctx.field;
    CycloElem prod = F.one();
    for (long b : ctx.betas) prod = prod * (F.one() - F.zeta_power(-b));
    return cyclo_inv(prod);
}

Rational half_component_sum(const Components& c) {
    long s = 0;
    for (long d : c) s += d;
    return Rational(s, 2);
}

}  // namespace

Wave wave(long q, const Components& c) {
    WaveContext ctx = split_components(c, q);
    const CycloField& F = ctx.field;
    std::size_t a = ctx.alphas.size();
    std::vector<CycloElem> kappas;
    for (unsigned long n = 1; n + 1 <= a; ++n) kappas.push_back(kappa(n, ctx, 1));
    std::vector<CycloElem> th =
        a > 1 ? theta_sequence(kappas, static_cast<unsigned long>(a))
              : std::vector<CycloElem>{F.one()};
    CycloElem binv = beta_product_inverse(ctx);
    Int prod_alpha = 1;
    for (long x : ctx.alphas) prod_alpha *= x;
    std::vector<Polynomial> polys;
    polys.reserve(static_cast<std::size_t>(q));
    for (long r = 0; r < q; ++r) {
        CycloElem zr = F.zeta_power(r);
        std::vector<Rational> coeffs(a);
        for (std::size_t k = 0; k < a; ++k) {
            std::size_t m = a - 1 - k;
            Rational g = galois_sum(zr * th[k] * binv);
            Rational scale(Int(1), prod_alpha * factorial(static_cast<unsigned long>(m)));
            if (k % 2 == 1) scale = -scale;
            coeffs[m] = g * scale;
        }
        polys.push_back(Polynomial(std::move(coeffs)));
    }
    return Wave{q, std::move(polys), half_component_sum(c)};
}

Polynomial wave_series_oracle(long q, const Components& c, long residue) {
    WaveContext ctx = split_components(c, q);
    const CycloField& F = ctx.field;
    std::size_t a = ctx.alphas.size();
    int hi = static_cast<int>(c.size() + a) + 4;
    using S = LaurentSeries<CycloElem>;
    S den = S::constant(F.one(), hi);
    for (long ai : ctx.alphas) {
        S ep = exp_of_scalar_times_t(F.from_rational(Rational(ai, 2)), hi);
        S em = exp_of_scalar_times_t(F.from_rational(Rational(-ai, 2)), hi);
        den = den * (ep - em);  // 2 sinh(a_i t / 2)
    }
    for (long bj : ctx.betas) {
        S ep = exp_of_scalar_times_t(F.from_rational(Rational(bj, 2)), hi);
        S em = exp_of_scalar_times_t(F.from_rational(Rational(-bj, 2)), hi);
        den = den * (ep - S::constant(F.zeta_power(-bj), hi) * em);
    }
    S dinv = series_inv(den);
    CycloElem zr = F.zeta_power(residue);
    std::vector<Rational> coeffs(a);
    for (std::size_t n = 0; n < a; ++n)
        coeffs[n] = galois_sum(zr * coefficient(dinv, -1 - static_cast<int>(n))) /
                    Rational(factorial(static_cast<unsigned long>(n)));
    return Polynomial(std::move(coeffs));
}

QuasiPolynomial quasipolynomial(const Components& c) {
    std::vector<long> qs = component_divisors(c);
    std::vector<Wave> waves;
    waves.reserve(qs.size());
    long period = 1;
    for (long q : qs) {
        waves.push_back(wave(q, c));
        period = std::lcm(period, q);
    }
    return QuasiPolynomial{c, std::move(waves), period};
}

Rational evaluate(const Wave& w, long l) {
    long r = ((l % w.q) + w.q) % w.q;
    return w.residue_polys[static_cast<std::size_t>(r)].evaluate(Rational(l) + w.shift);
}

Rational evaluate(const QuasiPolynomial& qp, long l) {
    Rational acc(0);
    for (const Wave& w : qp.waves) acc += evaluate(w, l);
    return acc;
}

Rational fourier_dedekind(const DedekindSumSpec& spec) {
    if (spec.q < 2) throw std::invalid_argument("fourier_dedekind: q must be >= 2");
    for (long b : spec.betas) {
        if (b < 1) throw std::invalid_argument("fourier_dedekind: betas must be positive");
        if (std::gcd(b, spec.q) != 1)
            throw std::invalid_argument("fourier_dedekind: gcd(beta, q) must be 1");
    }
    CycloField F(spec.q);
    CycloElem acc = F.zero();
    for (long m = 1; m < spec.q; ++m) {
        CycloElem den = F.one();
        for (long b : spec.betas) den = den * (F.one() - F.zeta_power(m * b));
        acc = acc + F.zeta_power(m * spec.l) * cyclo_inv(den);
    }
    // the sum is Galois-stable by construction, hence rational
    return acc.as_rational() / Rational(spec.q);
}

ReciprocityReport reciprocity_check(const QuasiPolynomial& qp, long lo, long hi) {
    long sumd = 0;
    for (long d : qp.components) sumd += d;
    int sign = 0;
    for (long l = lo; l <= hi; ++l) {
        Rational dl = evaluate(qp, l);
        Rational refl = evaluate(qp, -l - sumd);
        if (dl.is_zero()) {
            if (!refl.is_zero()) return ReciprocityReport{false, sign, l};
            continue;
        }
        Rational ratio = refl / dl;
        int s;
        if (ratio == Rational(1))
            s = 1;
        else if (ratio == Rational(-1))
            s = -1;
        else
            return ReciprocityReport{false, sign, l};
        if (sign == 0)
            sign = s;
        else if (sign != s)
            return ReciprocityReport{false, sign, l};
    }
    return ReciprocityReport{true, sign, -1};
}

namespace {

nlohmann::ordered_json residues_json(const Wave& w) {
    nlohmann::ordered_json residues = nlohmann::ordered_json::array();
    for (const Polynomial& p : w.residue_polys) {
        nlohmann::ordered_json poly = nlohmann::ordered_json::array();
        for (const Rational& r : p.coeffs()) poly.push_back(r.to_string());
        residues.push_back(std::move(poly));
    }
    return residues;
}

}  // namespace

std::string quasipolynomial_to_json(const QuasiPolynomial& qp) {
    nlohmann::ordered_json j;
    j["components"] = qp.components;
    j["shift"] = half_component_sum(qp.components).to_string();
    nlohmann::ordered_json waves = nlohmann::ordered_json::array();
    for (const Wave& w : qp.waves) {
        nlohmann::ordered_json wj;
        wj["q"] = w.q;
        wj["residues"] = residues_json(w);
        waves.push_back(std::move(wj));
    }
    j["waves"] = std::move(waves);
    return j.dump();
}

QuasiPolynomial quasipolynomial_from_json(const std::string& text) {
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(text);
    QuasiPolynomial qp;
    qp.components = j.at("components").get<Components>();
    validate_components(qp.components);
    Rational shift = Rational::from_string(j.at("shift").get<std::string>());
    qp.period = 1;
    for (const auto& wj : j.at("waves")) {
        Wave w;
        w.q = wj.at("q").get<long>();
        if (w.q < 1) throw std::invalid_argument("wave period must be positive");
        w.shift = shift;
        for (const auto& pj : wj.at("residues")) {
            std::vector<Rational> coeffs;
            for (const auto& s : pj) coeffs.push_back(Rational::from_string(s.get<std::string>()));
            w.residue_polys.push_back(Polynomial(std::move(coeffs)));
        }
        if (w.residue_polys.size() != static_cast<std::size_t>(w.q))
            throw std::invalid_argument("wave must carry one residue polynomial per residue class");
        qp.period = std::lcm(qp.period, w.q);
        qp.waves.push_back(std::move(w));
    }
    return qp;
}

std::string wave_to_json(const Wave& w) {
    nlohmann::ordered_json j;
    j["q"] = w.q;
    j["shift"] = w.shift.to_string();
    j["residues"] = residues_json(w);
    return j.dump();
}

}  // namespace denum
