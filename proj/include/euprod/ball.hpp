// ball.hpp
//
// Midpoint/radius real arithmetic on top of MPFR.  Every operation returns
// an enclosure of the exact mathematical result: the true value lies in
// [midpoint - radius, midpoint + radius].  Midpoints are computed with
// round-to-nearest at the value's working precision; radii live at a small
// fixed precision and are always rounded upward, so the enclosure property
// survives every intermediate rounding.

#ifndef EUPROD_BALL_HPP
#define EUPROD_BALL_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace euprod {

// Bits carried by radii.  Radii only need to be *upper bounds*, so a few
// digits suffice; 32 bits keeps the relative slack per operation at 2^-32.
inline constexpr mpfr_prec_t kRadiusPrec = 32;

class BallReal;

namespace detail {

// RAII wrapper for a raw mpfr_t.
struct MpfrTemp {
    mpfr_t x;
    explicit MpfrTemp(mpfr_prec_t prec) { mpfr_init2(x, prec); }
    MpfrTemp(const MpfrTemp&) = delete;
    MpfrTemp& operator=(const MpfrTemp&) = delete;
    ~MpfrTemp() { mpfr_clear(x); }
    operator mpfr_ptr() { return x; }
    operator mpfr_srcptr() const { return x; }
    // mpfr's macro entry points (mpfr_set, mpfr_sgn, ...) dereference their
    // argument directly, bypassing the conversion operators.
    mpfr_ptr operator->() { return x; }
    mpfr_srcptr operator->() const { return x; }
};

inline void check_finite(mpfr_srcptr x, const char* what) {
    if (!mpfr_number_p(x))
        throw std::overflow_error(std::string("ball arithmetic: non-finite midpoint in ") + what);
}

// Adds 2^(exp(mid) - prec - 1), an upper bound for the half-ulp error of a
// round-to-nearest operation, onto rad.  No-op when the rounding was exact.
inline void add_half_ulp(mpfr_ptr rad, mpfr_srcptr mid, mpfr_prec_t prec, int ternary) {
    if (ternary == 0) return;
    MpfrTemp u(kRadiusPrec);
    if (mpfr_zero_p(mid)) {
        // Rounded to zero although inexact: true value is below the smallest
        // representable magnitude.
        mpfr_set_ui_2exp(u, 1, mpfr_get_emin(), MPFR_RNDU);
    } else {
        mpfr_set_ui_2exp(u, 1, mpfr_get_exp(mid) - prec - 1, MPFR_RNDU);
    }
    mpfr_add(rad, rad, u, MPFR_RNDU);
}

// Upper bound of |x| at radius precision.
inline void abs_upper(mpfr_ptr out, mpfr_srcptr x) {
    mpfr_set(out, x, MPFR_RNDA);
    mpfr_abs(out, out, MPFR_RNDU);
}

// Lower bound of |x| at radius precision.
inline void abs_lower(mpfr_ptr out, mpfr_srcptr x) {
    mpfr_set(out, x, MPFR_RNDZ);
    mpfr_abs(out, out, MPFR_RNDD);
}

}  // namespace detail

/// Arbitrary-precision real enclosure: midpoint +/- radius.
class BallReal {
  public:
    explicit BallReal(mpfr_prec_t prec = 64) : prec_(clamp_prec(prec)) {
        mpfr_init2(mid_, prec_);
        mpfr_init2(rad_, kRadiusPrec);
        mpfr_set_zero(mid_, 1);
        mpfr_set_zero(rad_, 1);
    }

    BallReal(const BallReal& o) : prec_(o.prec_) {
        mpfr_init2(mid_, prec_);
        mpfr_init2(rad_, kRadiusPrec);
        mpfr_set(mid_, o.mid_, MPFR_RNDN);
        mpfr_set(rad_, o.rad_, MPFR_RNDU);
    }

    BallReal(BallReal&& o) noexcept : prec_(o.prec_) {
        mpfr_init2(mid_, 2);
        mpfr_init2(rad_, kRadiusPrec);
        mpfr_swap(mid_, o.mid_);
        mpfr_swap(rad_, o.rad_);
    }

    BallReal& operator=(const BallReal& o) {
        if (this != &o) {
            prec_ = o.prec_;
            mpfr_set_prec(mid_, prec_);
            mpfr_set(mid_, o.mid_, MPFR_RNDN);
            mpfr_set(rad_, o.rad_, MPFR_RNDU);
        }
        return *this;
    }

    BallReal& operator=(BallReal&& o) noexcept {
        if (this != &o) {
            prec_ = o.prec_;
            mpfr_swap(mid_, o.mid_);
            mpfr_swap(rad_, o.rad_);
        }
        return *this;
    }

    ~BallReal() {
        mpfr_clear(mid_);
        mpfr_clear(rad_);
    }

    // --- constructors for exact and rounded values ---

    static BallReal from_si(long v, mpfr_prec_t prec) {
        BallReal b(prec);
        int t = mpfr_set_si(b.mid_, v, MPFR_RNDN);
        detail::add_half_ulp(b.rad_, b.mid_, b.prec_, t);
        return b;
    }

    static BallReal from_ui(unsigned long v, mpfr_prec_t prec) {
        BallReal b(prec);
        int t = mpfr_set_ui(b.mid_, v, MPFR_RNDN);
        detail::add_half_ulp(b.rad_, b.mid_, b.prec_, t);
        return b;
    }

    static BallReal from_z(const mpz_class& v, mpfr_prec_t prec) {
        BallReal b(prec);
        int t = mpfr_set_z(b.mid_, v.get_mpz_t(), MPFR_RNDN);
        detail::add_half_ulp(b.rad_, b.mid_, b.prec_, t);
        return b;
    }

    static BallReal from_q(const mpq_class& v, mpfr_prec_t prec) {
        BallReal b(prec);
        int t = mpfr_set_q(b.mid_, v.get_mpq_t(), MPFR_RNDN);
        detail::add_half_ulp(b.rad_, b.mid_, b.prec_, t);
        return b;
    }

    /// Ball centred at zero whose radius is an upper bound of `bound`.
    static BallReal zero_with_radius(const mpq_class& bound, mpfr_prec_t prec) {
        BallReal b(prec);
        mpfr_set_q(b.rad_, bound.get_mpq_t(), MPFR_RNDU);
        return b;
    }

    // --- accessors ---

    mpfr_srcptr mid() const { return mid_; }
    mpfr_srcptr rad() const { return rad_; }
    mpfr_prec_t precision() const { return prec_; }

    bool is_exact() const { return mpfr_zero_p(rad_); }

    /// Exact rational value of the midpoint (every finite mpfr is dyadic).
    mpq_class mid_q() const { return mpfr_to_q(mid_); }
    /// Exact rational value of the radius.
    mpq_class rad_q() const { return mpfr_to_q(rad_); }

    /// True when the exact rational v lies inside the enclosure (exact test).
    bool contains(const mpq_class& v) const {
        mpq_class d = mid_q() - v;
        if (d < 0) d = -d;
        return d <= rad_q();
    }

    bool contains_zero() const { return contains(mpq_class(0)); }

    /// mid - rad > 0, i.e. every point of the ball is positive.
    bool is_positive() const {
        if (mpfr_sgn(mid_) <= 0) return false;
        detail::MpfrTemp lo(kRadiusPrec);
        mpfr_sub(lo, mid_, rad_, MPFR_RNDD);
        return mpfr_sgn(lo) > 0;
    }

    /// Two enclosures of the same quantity must intersect; exact test.
    bool overlaps(const BallReal& o) const {
        mpq_class d = mid_q() - o.mid_q();
        if (d < 0) d = -d;
        return d <= rad_q() + o.rad_q();
    }

    /// Exact test: radius <= bound.
    bool radius_at_most(const mpq_class& bound) const { return rad_q() <= bound; }

    /// Lower endpoint as an exact rational.
    mpq_class lower_q() const { return mid_q() - rad_q(); }
    /// Upper endpoint as an exact rational.
    mpq_class upper_q() const { return mid_q() + rad_q(); }

    double mid_d() const { return mpfr_get_d(mid_, MPFR_RNDN); }
    double rad_d() const { return mpfr_get_d(rad_, MPFR_RNDU); }

    // Mutators used by the arithmetic layer below; the public API treats
    // balls as immutable values.
    mpfr_ptr mid_mut() { return mid_; }
    mpfr_ptr rad_mut() { return rad_; }

    /// Widens the radius by an upper bound of `extra`.
    void inflate(const mpq_class& extra) {
        detail::MpfrTemp e(kRadiusPrec);
        mpfr_set_q(e, extra.get_mpq_t(), MPFR_RNDU);
        mpfr_add(rad_, rad_, e, MPFR_RNDU);
    }

    void inflate(mpfr_srcptr extra) { mpfr_add(rad_, rad_, extra, MPFR_RNDU); }

  private:
    static mpfr_prec_t clamp_prec(mpfr_prec_t p) { return std::max<mpfr_prec_t>(p, MPFR_PREC_MIN + 2); }

    static mpq_class mpfr_to_q(mpfr_srcptr x) {
        if (mpfr_zero_p(x)) return mpq_class(0);
        if (!mpfr_number_p(x)) throw std::overflow_error("ball arithmetic: non-finite value in exact conversion");
        mpz_class z;
        mpfr_exp_t e = mpfr_get_z_2exp(z.get_mpz_t(), x);
        mpq_class r(z);
        if (e >= 0) {
            mpz_mul_2exp(mpq_numref(r.get_mpq_t()), mpq_numref(r.get_mpq_t()), static_cast<mp_bitcnt_t>(e));
        } else {
            mpz_mul_2exp(mpq_denref(r.get_mpq_t()), mpq_denref(r.get_mpq_t()), static_cast<mp_bitcnt_t>(-e));
            r.canonicalize();
        }
        return r;
    }

    mpfr_t mid_;
    mpfr_t rad_;
    mpfr_prec_t prec_;
};

namespace detail {
inline mpfr_prec_t result_prec(const BallReal& a, const BallReal& b) {
    return std::max(a.precision(), b.precision());
}
}  // namespace detail

// --- basic arithmetic -------------------------------------------------------

inline BallReal neg(const BallReal& a) {
    BallReal r(a);
    mpfr_neg(r.mid_mut(), r.mid(), MPFR_RNDN);  // exact
    return r;
}

inline BallReal add(const BallReal& a, const BallReal& b) {
    BallReal r(detail::result_prec(a, b));
    int t = mpfr_add(r.mid_mut(), a.mid(), b.mid(), MPFR_RNDN);
    detail::check_finite(r.mid(), "add");
    mpfr_add(r.rad_mut(), a.rad(), b.rad(), MPFR_RNDU);
    detail::add_half_ulp(r.rad_mut(), r.mid(), r.precision(), t);
    return r;
}

inline BallReal sub(const BallReal& a, const BallReal& b) {
    BallReal r(detail::result_prec(a, b));
    int t = mpfr_sub(r.mid_mut(), a.mid(), b.mid(), MPFR_RNDN);
    detail::check_finite(r.mid(), "sub");
    mpfr_add(r.rad_mut(), a.rad(), b.rad(), MPFR_RNDU);
    detail::add_half_ulp(r.rad_mut(), r.mid(), r.precision(), t);
    return r;
}

inline BallReal mul(const BallReal& a, const BallReal& b) {
    BallReal r(detail::result_prec(a, b));
    int t = mpfr_mul(r.mid_mut(), a.mid(), b.mid(), MPFR_RNDN);
    detail::check_finite(r.mid(), "mul");
    // |ab - ma.mb| <= |ma| rb + |mb| ra + ra rb
    detail::MpfrTemp ua(kRadiusPrec), ub(kRadiusPrec), acc(kRadiusPrec), term(kRadiusPrec);
    detail::abs_upper(ua, a.mid());
    detail::abs_upper(ub, b.mid());
    mpfr_mul(acc, ua, b.rad(), MPFR_RNDU);
    mpfr_mul(term, ub, a.rad(), MPFR_RNDU);
    mpfr_add(acc, acc, term, MPFR_RNDU);
    mpfr_mul(term, a.rad(), b.rad(), MPFR_RNDU);
    mpfr_add(acc, acc, term, MPFR_RNDU);
    mpfr_set(r.rad_mut(), acc, MPFR_RNDU);
    detail::add_half_ulp(r.rad_mut(), r.mid(), r.precision(), t);
    return r;
}

inline BallReal div(const BallReal& a, const BallReal& b) {
    detail::MpfrTemp blow(kRadiusPrec), denom(kRadiusPrec);
    detail::abs_lower(blow, b.mid());
    mpfr_sub(denom, blow, b.rad(), MPFR_RNDD);
    if (mpfr_sgn(denom) <= 0)
        throw std::domain_error("ball division by an interval containing zero");
    BallReal r(detail::result_prec(a, b));
    int t = mpfr_div(r.mid_mut(), a.mid(), b.mid(), MPFR_RNDN);
    detail::check_finite(r.mid(), "div");
    // |a/b - ma/mb| <= (ra |mb| + rb |ma|) / (|b| |mb|),  |b| >= |mb| - rb
    detail::MpfrTemp ua(kRadiusPrec), ub(kRadiusPrec), num(kRadiusPrec), term(kRadiusPrec), den(kRadiusPrec);
    detail::abs_upper(ua, a.mid());
    detail::abs_upper(ub, b.mid());
    mpfr_mul(num, a.rad(), ub, MPFR_RNDU);
    mpfr_mul(term, b.rad(), ua, MPFR_RNDU);
    mpfr_add(num, num, term, MPFR_RNDU);
    mpfr_mul(den, denom, blow, MPFR_RNDD);
    mpfr_div(num, num, den, MPFR_RNDU);
    mpfr_set(r.rad_mut(), num, MPFR_RNDU);
    detail::add_half_ulp(r.rad_mut(), r.mid(), r.precision(), t);
    return r;
}

/// Multiplication by an exact rational.
inline BallReal mul_q(const BallReal& a, const mpq_class& q) {
    BallReal r(a.precision());
    int t = mpfr_mul_q(r.mid_mut(), a.mid(), q.get_mpq_t(), MPFR_RNDN);
    detail::check_finite(r.mid(), "mul_q");
    detail::MpfrTemp uq(kRadiusPrec);
    mpq_class aq = q >= 0 ? q : mpq_class(-q);
    mpfr_set_q(uq, aq.get_mpq_t(), MPFR_RNDU);
    mpfr_mul(r.rad_mut(), a.rad(), uq, MPFR_RNDU);
    detail::add_half_ulp(r.rad_mut(), r.mid(), r.precision(), t);
    return r;
}

inline BallReal add_q(const BallReal& a, const mpq_class& q) {
    BallReal r(a.precision());
    int t = mpfr_add_q(r.mid_mut(), a.mid(), q.get_mpq_t(), MPFR_RNDN);
    detail::check_finite(r.mid(), "add_q");
    mpfr_set(r.rad_mut(), a.rad(), MPFR_RNDU);
    detail::add_half_ulp(r.rad_mut(), r.mid(), r.precision(), t);
    return r;
}

// --- elementary functions ---------------------------------------------------

inline BallReal sqrt(const BallReal& a) {
    detail::MpfrTemp lo(kRadiusPrec);
    mpfr_sub(lo, a.mid(), a.rad(), MPFR_RNDD);
    if (mpfr_sgn(lo) <= 0) {
        detail::MpfrTemp hi(kRadiusPrec);
        mpfr_add(hi, a.mid(), a.rad(), MPFR_RNDU);
        if (mpfr_sgn(hi) < 0) throw std::domain_error("sqrt of a negative ball");
        // Interval clipped to [0, hi]: enclose by [0, sqrt(hi)].
        BallReal r(a.precision());
        detail::MpfrTemp u(a.precision());
        mpfr_sqrt(u, hi, MPFR_RNDU);
        mpfr_div_2ui(r.mid_mut(), u, 1, MPFR_RNDU);
        mpfr_set(r.rad_mut(), r.mid(), MPFR_RNDU);
        return r;
    }
    BallReal r(a.precision());
    int t = mpfr_sqrt(r.mid_mut(), a.mid(), MPFR_RNDN);
    // derivative bound 1/(2 sqrt(lo))
    detail::MpfrTemp s(kRadiusPrec);
    mpfr_sqrt(s, lo, MPFR_RNDD);
    mpfr_mul_2ui(s, s, 1, MPFR_RNDD);
    mpfr_div(s, a.rad(), s, MPFR_RNDU);
    mpfr_set(r.rad_mut(), s, MPFR_RNDU);
    detail::add_half_ulp(r.rad_mut(), r.mid(), r.precision(), t);
    return r;
}

/// exp with the derivative bound: radius_out <= exp(mid+rad) * rad.
inline BallReal exp(const BallReal& a) {
    BallReal r(a.precision());
    int t = mpfr_exp(r.mid_mut(), a.mid(), MPFR_RNDN);
    detail::check_finite(r.mid(), "exp");
    if (!mpfr_zero_p(a.rad())) {
        detail::MpfrTemp hi(kRadiusPrec), eb(kRadiusPrec);
        mpfr_add(hi, a.mid(), a.rad(), MPFR_RNDU);
        mpfr_exp(eb, hi, MPFR_RNDU);
        mpfr_mul(eb, eb, a.rad(), MPFR_RNDU);
        mpfr_set(r.rad_mut(), eb, MPFR_RNDU);
    }
    detail::add_half_ulp(r.rad_mut(), r.mid(), r.precision(), t);
    return r;
}

inline BallReal log(const BallReal& a) {
    detail::MpfrTemp lo(kRadiusPrec);
    mpfr_sub(lo, a.mid(), a.rad(), MPFR_RNDD);
    if (mpfr_sgn(lo) <= 0)
        throw std::domain_error("log of a ball touching (-inf, 0]");
    BallReal r(a.precision());
    int t = mpfr_log(r.mid_mut(), a.mid(), MPFR_RNDN);
    if (!mpfr_zero_p(a.rad())) {
        detail::MpfrTemp d(kRadiusPrec);
        mpfr_div(d, a.rad(), lo, MPFR_RNDU);  // derivative bound 1/lo
        mpfr_set(r.rad_mut(), d, MPFR_RNDU);
    }
    detail::add_half_ulp(r.rad_mut(), r.mid(), r.precision(), t);
    return r;
}

/// Integer power of a strictly positive ball.
inline BallReal pow_si(const BallReal& a, long n) {
    if (n == 0) return BallReal::from_si(1, a.precision());
    if (n == 1) return a;
    detail::MpfrTemp lo(kRadiusPrec);
    mpfr_sub(lo, a.mid(), a.rad(), MPFR_RNDD);
    if (mpfr_sgn(lo) <= 0)
        throw std::domain_error("pow_si of a ball touching (-inf, 0]");
    BallReal r(a.precision());
    int t = mpfr_pow_si(r.mid_mut(), a.mid(), n, MPFR_RNDN);
    detail::check_finite(r.mid(), "pow_si");
    if (!mpfr_zero_p(a.rad())) {
        // First-order propagation is valid (with slack factor 2) as long as
        // |n| * rad <= lo / 4; otherwise fall back to endpoint evaluation.
        detail::MpfrTemp guard(kRadiusPrec);
        unsigned long un = static_cast<unsigned long>(n > 0 ? n : -n);
        mpfr_mul_ui(guard, a.rad(), un, MPFR_RNDU);
        mpfr_mul_2ui(guard, guard, 2, MPFR_RNDU);
        if (mpfr_cmp(guard, lo) <= 0) {
            detail::MpfrTemp um(kRadiusPrec), d(kRadiusPrec);
            detail::abs_upper(um, r.mid());
            mpfr_mul(d, um, a.rad(), MPFR_RNDU);
            mpfr_mul_ui(d, d, 2 * un, MPFR_RNDU);
            mpfr_div(d, d, lo, MPFR_RNDU);
            mpfr_set(r.rad_mut(), d, MPFR_RNDU);
        } else {
            detail::MpfrTemp flo(a.precision()), fhi(a.precision()), pl(a.precision()), ph(a.precision());
            mpfr_sub(flo, a.mid(), a.rad(), MPFR_RNDD);
            mpfr_add(fhi, a.mid(), a.rad(), MPFR_RNDU);
            if (n > 0) {
                mpfr_pow_si(pl, flo, n, MPFR_RNDD);
                mpfr_pow_si(ph, fhi, n, MPFR_RNDU);
            } else {
                mpfr_pow_si(pl, fhi, n, MPFR_RNDD);
                mpfr_pow_si(ph, flo, n, MPFR_RNDU);
            }
            mpfr_add(r.mid_mut(), pl, ph, MPFR_RNDN);
            mpfr_div_2ui(r.mid_mut(), r.mid(), 1, MPFR_RNDN);
            detail::MpfrTemp d1(kRadiusPrec), d2(kRadiusPrec);
            mpfr_sub(d1, ph, r.mid(), MPFR_RNDU);
            mpfr_sub(d2, r.mid(), pl, MPFR_RNDU);
            mpfr_max(d1, d1, d2, MPFR_RNDU);
            mpfr_set(r.rad_mut(), d1, MPFR_RNDU);
            t = 1;
        }
    }
    detail::add_half_ulp(r.rad_mut(), r.mid(), r.precision(), t);
    return r;
}

/// General power of a strictly positive ball: a^e = exp(e log a).
inline BallReal pow(const BallReal& a, const BallReal& e) {
    if (e.is_exact() && mpfr_integer_p(e.mid()) && mpfr_fits_slong_p(e.mid(), MPFR_RNDN))
        return pow_si(a, mpfr_get_si(e.mid(), MPFR_RNDN));
    return exp(mul(e, log(a)));
}

inline BallReal pi(mpfr_prec_t prec) {
    BallReal r(prec);
    int t = mpfr_const_pi(r.mid_mut(), MPFR_RNDN);
    detail::add_half_ulp(r.rad_mut(), r.mid(), r.precision(), t);
    return r;
}

/// Gamma function on positive arguments.  Exact midpoints are evaluated to
/// half-ulp; fuzzy inputs use the endpoint hull, widened to the certified
/// global lower bound 0.885 when the interval may contain the minimum of
/// Gamma near x = 1.46163.
inline BallReal gamma(const BallReal& a) {
    if (a.is_exact()) {
        if (mpfr_sgn(a.mid()) <= 0) throw std::domain_error("gamma of a non-positive ball");
        BallReal r(a.precision());
        int t = mpfr_gamma(r.mid_mut(), a.mid(), MPFR_RNDN);
        detail::check_finite(r.mid(), "gamma");
        detail::add_half_ulp(r.rad_mut(), r.mid(), r.precision(), t);
        return r;
    }
    detail::MpfrTemp lo(a.precision()), hi(a.precision());
    mpfr_sub(lo, a.mid(), a.rad(), MPFR_RNDD);
    if (mpfr_sgn(lo) <= 0) throw std::domain_error("gamma of a ball touching (-inf, 0]");
    mpfr_add(hi, a.mid(), a.rad(), MPFR_RNDU);
    // Directed endpoint hull; Gamma is convex on (0, inf), so the maximum
    // sits at an endpoint and the minimum does too unless the stationary
    // point (~1.4616) lies inside, where Gamma still stays >= 0.885.
    detail::MpfrTemp mn(a.precision()), mx(a.precision()), t1(a.precision()), t2(a.precision());
    mpfr_gamma(t1, lo, MPFR_RNDD);
    mpfr_gamma(t2, hi, MPFR_RNDD);
    mpfr_min(mn, t1, t2, MPFR_RNDD);
    mpfr_gamma(t1, lo, MPFR_RNDU);
    mpfr_gamma(t2, hi, MPFR_RNDU);
    mpfr_max(mx, t1, t2, MPFR_RNDU);
    if (mpfr_cmp_d(lo, 1.4617) < 0 && mpfr_cmp_d(hi, 1.4616) > 0) {
        mpfr_set_d(t1, 0.885, MPFR_RNDD);
        mpfr_min(mn, mn, t1, MPFR_RNDD);
    }
    BallReal r(a.precision());
    mpfr_add(r.mid_mut(), mn, mx, MPFR_RNDN);
    mpfr_div_2ui(r.mid_mut(), r.mid(), 1, MPFR_RNDN);
    detail::MpfrTemp d1(kRadiusPrec), d2(kRadiusPrec);
    mpfr_sub(d1, mx, r.mid(), MPFR_RNDU);
    mpfr_sub(d2, r.mid(), mn, MPFR_RNDU);
    mpfr_max(d1, d1, d2, MPFR_RNDU);
    mpfr_set(r.rad_mut(), d1, MPFR_RNDU);
    detail::add_half_ulp(r.rad_mut(), r.mid(), r.precision(), 1);
    return r;
}

// --- operators --------------------------------------------------------------

inline BallReal operator+(const BallReal& a, const BallReal& b) { return add(a, b); }
inline BallReal operator-(const BallReal& a, const BallReal& b) { return sub(a, b); }
inline BallReal operator*(const BallReal& a, const BallReal& b) { return mul(a, b); }
inline BallReal operator/(const BallReal& a, const BallReal& b) { return div(a, b); }
inline BallReal operator-(const BallReal& a) { return neg(a); }
inline BallReal operator*(const BallReal& a, const mpq_class& q) { return mul_q(a, q); }
inline BallReal operator*(const mpq_class& q, const BallReal& a) { return mul_q(a, q); }

/// Working-precision policy: decimal target + guard digits -> binary bits.
struct PrecisionContext {
    long target_decimals;
    long guard_digits;
    mpfr_prec_t working_bits;

    PrecisionContext(long decimals, long guard)
        : target_decimals(decimals), guard_digits(guard), working_bits(bits_for(decimals, guard)) {
        if (decimals < 1) throw std::domain_error("PrecisionContext: target_decimals must be >= 1");
        if (guard < 0) throw std::domain_error("PrecisionContext: guard_digits must be >= 0");
    }

    /// Default guard policy: 10 digits plus the decimal length of the number
    /// of terms in the longest linear combination fed through the context.
    static PrecisionContext for_sum(long decimals, unsigned long n_terms) {
        long extra = 0;
        unsigned long t = std::max<unsigned long>(n_terms, 1);
        while (t > 1) {
            t = (t + 9) / 10;
            ++extra;
        }
        return PrecisionContext(decimals, 10 + extra);
    }

    static mpfr_prec_t bits_for(long decimals, long guard) {
        // ceil((D + g) * log2(10)) plus a little headroom
        long double b = (static_cast<long double>(decimals) + guard) * 3.3219280948873623L;
        return static_cast<mpfr_prec_t>(std::ceil(b)) + 16;
    }
};

}  // namespace euprod

#endif  // EUPROD_BALL_HPP
