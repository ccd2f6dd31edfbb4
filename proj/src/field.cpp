#include "insdel/field.hpp"

#include <stdexcept>

namespace insdel {

bool is_prime(long long n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (long long f = 3; f * f <= n; f += 2)
        if (n % f == 0) return false;
    return true;
}

long long smallest_prime_geq(long long n) {
    long long p = n < 2 ? 2 : n;
    while (!is_prime(p)) ++p;
    return p;
}

PrimeField::PrimeField(long long p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("field modulus must be prime");
}

long long PrimeField::reduce(long long x) const {
    long long r = x % p_;
    return r < 0 ? r + p_ : r;
}

long long PrimeField::add(long long a, long long b) const { return reduce(a + b); }

long long PrimeField::sub(long long a, long long b) const { return reduce(a - b); }

long long PrimeField::neg(long long a) const { return reduce(-a); }

long long PrimeField::mul(long long a, long long b) const {
    return static_cast<long long>(static_cast<unsigned __int128>(reduce(a)) * reduce(b) % p_);
}

long long PrimeField::inv(long long a) const {
    if (reduce(a) == 0) throw std::domain_error("division by zero in prime field");
    return pow(a, p_ - 2);
}

long long PrimeField::pow(long long a, long long e) const {
    if (e < 0) throw std::invalid_argument("negative exponent");
    long long base = reduce(a), acc = 1;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

Polynomial::Polynomial(const PrimeField& field, std::vector<long long> coeffs) : coeffs_(std::move(coeffs)) {
    for (long long& c : coeffs_) c = field.reduce(c);
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

long long Polynomial::coeff(long long i) const {
    if (i < 0 || i >= static_cast<long long>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

Polynomial poly_add(const PrimeField& field, const Polynomial& a, const Polynomial& b) {
    std::vector<long long> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = field.add(a.coeff(static_cast<long long>(i)), b.coeff(static_cast<long long>(i)));
    return Polynomial(field, std::move(out));
}

Polynomial poly_sub(const PrimeField& field, const Polynomial& a, const Polynomial& b) {
    return poly_add(field, a, poly_scale(field, b, field.neg(1)));
}

Polynomial poly_mul(const PrimeField& field, const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<long long> out(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            out[i + j] = field.add(out[i + j], field.mul(a.coeffs()[i], b.coeffs()[j]));
    return Polynomial(field, std::move(out));
}

Polynomial poly_scale(const PrimeField& field, const Polynomial& a, long long c) {
    std::vector<long long> out = a.coeffs();
    for (long long& v : out) v = field.mul(v, c);
    return Polynomial(field, std::move(out));
}

long long poly_eval(const PrimeField& field, const Polynomial& a, long long x) {
    long long acc = 0;
    for (auto it = a.coeffs().rbegin(); it != a.coeffs().rend(); ++it)
        acc = field.add(field.mul(acc, x), *it);
    return acc;
}

Polynomial lagrange_interpolate(const PrimeField& field,
                                const std::vector<std::pair<long long, long long>>& points) {
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (field.reduce(points[i].first) == field.reduce(points[j].first))
                throw std::invalid_argument("interpolation nodes must be distinct");

    Polynomial result;
    for (std::size_t i = 0; i < points.size(); ++i) {
        Polynomial basis(field, {1});
        long long denom = 1;
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            basis = poly_mul(field, basis, Polynomial(field, {field.neg(points[j].first), 1}));
            denom = field.mul(denom, field.sub(points[i].first, points[j].first));
        }
        const long long scale = field.mul(points[i].second, field.inv(denom));
        result = poly_add(field, result, poly_scale(field, basis, scale));
    }
    return result;
}

}  // namespace insdel
