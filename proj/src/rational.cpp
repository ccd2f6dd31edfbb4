#include "insdel/rational.hpp"

#include <cctype>

namespace insdel {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto bad = [&] { throw std::invalid_argument("bad rational literal: '" + text + "'"); };

    std::string s = text;
    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
        negative = s[0] == '-';
        s.erase(0, 1);
        if (s.empty()) bad();
    }

    auto digits_only = [&](const std::string& part) {
        if (part.empty()) return false;
        for (char c : part)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };

    Rational r;
    auto slash = s.find('/');
    auto dot = s.find('.');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!digits_only(num) || !digits_only(den)) bad();
        Int d(den);
        if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
        r = Rational(Int(num), d);
    } else if (dot != std::string::npos) {
        std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
        if (whole.empty()) whole = "0";
        if (!digits_only(whole) || (!frac.empty() && !digits_only(frac))) bad();
        Int scale = 1;
        for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
        r = Rational(Int(whole) * scale + (frac.empty() ? Int(0) : Int(frac)), scale);
    } else {
        if (!digits_only(s)) bad();
        r = Rational(Int(s));
    }
    return negative ? -r : r;
}

std::string rat_string(const Rational& r) {
    Int n = rat_num(r), d = rat_den(r);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

Rational sqrt_upper(const Rational& x, unsigned max_den) {
    if (x < 0) throw std::domain_error("sqrt_upper of negative value");
    if (x == 0) return Rational(0);
    Int num = rat_num(x), den = rat_den(x);

    Int ns = isqrt(num), ds = isqrt(den);
    if (ns * ns == num && ds * ds == den) return Rational(ns, ds);

    // For each admissible denominator q the least valid numerator is the
    // smallest p with p^2*den >= num*q^2; keep the overall minimum.
    bool have = false;
    Rational best;
    for (Int q = 1; q <= max_den; ++q) {
        Int target = num * q * q;
        Int p = isqrt(target / den);
        while (p * p * den < target) ++p;
        Rational cand(p, q);
        if (!have || cand < best) {
            best = cand;
            have = true;
        }
    }
    return best;
}

}  // namespace insdel
