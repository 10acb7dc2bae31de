// rational.hpp
//
// Small helpers on GMP rationals shared across modules.

#ifndef EUPROD_RATIONAL_HPP
#define EUPROD_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace euprod {

inline mpq_class mpq_pow_ui(const mpq_class& b, unsigned long e) {
    mpq_class r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(b.get_mpq_t()), e);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(b.get_mpq_t()), e);
    return r;  // canonical since b was
}

inline mpz_class mpz_pow_ui_c(const mpz_class& b, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

/// 10^(-k) as an exact rational.
inline mpq_class pow10_neg(unsigned long k) {
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, k);
    return mpq_class(mpz_class(1), d);
}

inline mpq_class mpq_abs_v(const mpq_class& a) { return a >= 0 ? a : mpq_class(-a); }

inline bool mpq_is_integer(const mpq_class& a) { return a.get_den() == 1; }

/// Smallest integer >= a.
inline mpz_class mpq_ceil(const mpq_class& a) {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), a.get_num().get_mpz_t(), a.get_den().get_mpz_t());
    return r;
}

inline mpz_class mpq_floor(const mpq_class& a) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), a.get_num().get_mpz_t(), a.get_den().get_mpz_t());
    return r;
}

/// Parses "7", "-3/4" or decimal notation "2.5" into an exact rational.
inline mpq_class parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty number");
    auto dot = s.find('.');
    if (dot == std::string::npos) {
        mpq_class r;
        if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
            throw std::invalid_argument("cannot parse number: " + text);
        r.canonicalize();
        if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
        return r;
    }
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
        throw std::invalid_argument("cannot parse number: " + text);
    mpz_class num;
    if (mpz_set_str(num.get_mpz_t(), digits.c_str(), 10) != 0)
        throw std::invalid_argument("cannot parse number: " + text);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
    mpq_class r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace euprod

#endif  // EUPROD_RATIONAL_HPP
