#include "zetaverify/ball.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <utility>

namespace zv {

namespace {

// Radius arithmetic runs at a fixed small precision, always rounded upward,
// so every radius is a certified upper bound.
constexpr mpfr_prec_t kRadPrec = 64;

mpfr_prec_t prec_for_digits(int digits) {
    if (digits < 1)
        digits = 1;
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873626)) + 24;
}

struct Temp {
    mpfr_t v;
    explicit Temp(mpfr_prec_t p) { mpfr_init2(v, p); }
    ~Temp() { mpfr_clear(v); }
    Temp(const Temp&) = delete;
    Temp& operator=(const Temp&) = delete;
};

void ensure_finite(mpfr_srcptr x, const char* where) {
    if (mpfr_nan_p(x) || mpfr_inf_p(x))
        throw DomainError(std::string("ball arithmetic produced a non-finite midpoint in ") + where);
}

// One-ulp bound for the rounding error of the midpoint operation that
// reported ternary value `t`.
void add_ulp_bound(mpfr_ptr rad, mpfr_srcptr mid, int t) {
    if (t == 0)
        return;
    Temp u(kRadPrec);
    if (mpfr_zero_p(mid)) {
        // Underflow-to-zero; bound by the smallest representable magnitude.
        mpfr_set_ui_2exp(u.v, 1, mpfr_get_emin(), MPFR_RNDU);
    } else {
        mpfr_set_ui_2exp(u.v, 1, mpfr_get_exp(mid) - mpfr_get_prec(mid), MPFR_RNDU);
    }
    mpfr_add(rad, rad, u.v, MPFR_RNDU);
}

// "d.dddd...e±EE" with `sig` significant digits; empty-safe for zero.
std::string format_mpfr(mpfr_srcptr x, int sig, mpfr_rnd_t rnd) {
    if (mpfr_zero_p(x))
        return "0";
    if (mpfr_nan_p(x))
        return "nan";
    if (mpfr_inf_p(x))
        return mpfr_sgn(x) < 0 ? "-inf" : "inf";
    if (sig < 1)
        sig = 1;
    mpfr_exp_t e = 0;
    char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<std::size_t>(sig), x, rnd);
    std::string digits(raw);
    mpfr_free_str(raw);
    std::string out;
    if (!digits.empty() && digits[0] == '-') {
        out += '-';
        digits.erase(0, 1);
    }
    out += digits.substr(0, 1);
    if (digits.size() > 1) {
        out += '.';
        out += digits.substr(1);
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "e%+03ld", static_cast<long>(e - 1));
    out += buf;
    return out;
}

} // namespace

// Internal construction/access helper used by the friend operators below.
struct BallAccess {
    static PrecisionReal make(mpfr_prec_t prec, int digits) {
        PrecisionReal r;
        mpfr_set_prec(r.mid_, prec);
        mpfr_set_zero(r.mid_, 1);
        r.digits_ = digits;
        return r;
    }
    static PrecisionReal make_like(const PrecisionReal& a, const PrecisionReal& b) {
        return make(std::max(mpfr_get_prec(a.mid_), mpfr_get_prec(b.mid_)),
                    std::max(a.digits_, b.digits_));
    }
    static mpfr_ptr mid(PrecisionReal& x) { return x.mid_; }
    static mpfr_ptr rad(PrecisionReal& x) { return x.rad_; }
    static mpfr_srcptr mid(const PrecisionReal& x) { return x.mid_; }
    static mpfr_srcptr rad(const PrecisionReal& x) { return x.rad_; }
};

PrecisionReal::PrecisionReal() : digits_(kDefaultDigits) {
    mpfr_init2(mid_, prec_for_digits(kDefaultDigits));
    mpfr_set_zero(mid_, 1);
    mpfr_init2(rad_, kRadPrec);
    mpfr_set_zero(rad_, 1);
}

PrecisionReal::PrecisionReal(long value, int digits) : digits_(digits) {
    mpfr_init2(mid_, std::max<mpfr_prec_t>(prec_for_digits(digits), 64));
    mpfr_set_si(mid_, value, MPFR_RNDN);   // exact: prec >= 64
    mpfr_init2(rad_, kRadPrec);
    mpfr_set_zero(rad_, 1);
}

PrecisionReal::PrecisionReal(const PrecisionReal& o) : digits_(o.digits_) {
    mpfr_init2(mid_, mpfr_get_prec(o.mid_));
    mpfr_set(mid_, o.mid_, MPFR_RNDN);
    mpfr_init2(rad_, kRadPrec);
    mpfr_set(rad_, o.rad_, MPFR_RNDU);
}

PrecisionReal::PrecisionReal(PrecisionReal&& o) noexcept : digits_(o.digits_) {
    mpfr_init2(mid_, MPFR_PREC_MIN);
    mpfr_init2(rad_, MPFR_PREC_MIN);
    mpfr_swap(mid_, o.mid_);
    mpfr_swap(rad_, o.rad_);
}

PrecisionReal& PrecisionReal::operator=(const PrecisionReal& o) {
    if (this != &o) {
        mpfr_set_prec(mid_, mpfr_get_prec(o.mid_));
        mpfr_set(mid_, o.mid_, MPFR_RNDN);
        mpfr_set(rad_, o.rad_, MPFR_RNDU);
        digits_ = o.digits_;
    }
    return *this;
}

PrecisionReal& PrecisionReal::operator=(PrecisionReal&& o) noexcept {
    if (this != &o) {
        mpfr_swap(mid_, o.mid_);
        mpfr_swap(rad_, o.rad_);
        digits_ = o.digits_;
    }
    return *this;
}

PrecisionReal::~PrecisionReal() {
    mpfr_clear(mid_);
    mpfr_clear(rad_);
}

PrecisionReal PrecisionReal::exact(long value, int digits) {
    return PrecisionReal(value, digits);
}

PrecisionReal PrecisionReal::exact_pow2(long e, int digits) {
    PrecisionReal r = BallAccess::make(prec_for_digits(digits), digits);
    mpfr_set_ui_2exp(r.mid_, 1, e, MPFR_RNDN);
    return r;
}

PrecisionReal PrecisionReal::from_double_exact(double value, int digits) {
    if (!std::isfinite(value))
        throw DomainError("from_double_exact: non-finite input");
    PrecisionReal r = BallAccess::make(std::max<mpfr_prec_t>(prec_for_digits(digits), 64), digits);
    mpfr_set_d(r.mid_, value, MPFR_RNDN);  // exact: prec >= 64 > 53
    return r;
}

PrecisionReal PrecisionReal::from_rational(const BigRational& q, int digits) {
    PrecisionReal r = BallAccess::make(prec_for_digits(digits), digits);
    const int t = mpfr_set_q(r.mid_, q.raw().get_mpq_t(), MPFR_RNDN);
    add_ulp_bound(r.rad_, r.mid_, t);
    return r;
}

PrecisionReal PrecisionReal::from_decimal(const std::string& text, int digits) {
    PrecisionReal r = BallAccess::make(prec_for_digits(digits), digits);
    char* end = nullptr;
    const int t = mpfr_strtofr(r.mid_, text.c_str(), &end, 10, MPFR_RNDN);
    if (end == text.c_str() || end == nullptr || *end != '\0')
        throw DomainError("from_decimal: cannot parse '" + text + "'");
    add_ulp_bound(r.rad_, r.mid_, t);
    return r;
}

PrecisionReal PrecisionReal::pi(int digits) {
    PrecisionReal r = BallAccess::make(prec_for_digits(digits), digits);
    const int t = mpfr_const_pi(r.mid_, MPFR_RNDN);
    add_ulp_bound(r.rad_, r.mid_, t);
    return r;
}

PrecisionReal PrecisionReal::with_context_digits(int digits) const {
    PrecisionReal r(*this);
    r.digits_ = digits;
    return r;
}

bool PrecisionReal::is_exact() const {
    return mpfr_zero_p(rad_) != 0;
}

bool PrecisionReal::contains_zero() const {
    return mpfr_cmpabs(mid_, rad_) <= 0;
}

bool PrecisionReal::definitely_positive() const {
    return mpfr_sgn(mid_) > 0 && mpfr_cmpabs(mid_, rad_) > 0;
}

bool PrecisionReal::definitely_negative() const {
    return mpfr_sgn(mid_) < 0 && mpfr_cmpabs(mid_, rad_) > 0;
}

int PrecisionReal::midpoint_sign() const {
    return mpfr_sgn(mid_);
}

bool PrecisionReal::contains_midpoint_of(const PrecisionReal& o) const {
    // RNDA makes |d| an upper bound of the true midpoint distance.
    Temp d(std::max(mpfr_get_prec(mid_), mpfr_get_prec(o.mid_)) + 8);
    mpfr_sub(d.v, mid_, o.mid_, MPFR_RNDA);
    mpfr_abs(d.v, d.v, MPFR_RNDU);
    return mpfr_cmp(d.v, rad_) <= 0;
}

bool PrecisionReal::certainly_intersects(const PrecisionReal& o) const {
    Temp d(std::max(mpfr_get_prec(mid_), mpfr_get_prec(o.mid_)) + 8);
    mpfr_sub(d.v, mid_, o.mid_, MPFR_RNDA);
    mpfr_abs(d.v, d.v, MPFR_RNDU);
    Temp s(kRadPrec);
    mpfr_add(s.v, rad_, o.rad_, MPFR_RNDD);
    return mpfr_cmp(d.v, s.v) <= 0;
}

bool PrecisionReal::radius_at_most_pow10(long exponent10) const {
    Temp t(kRadPrec);
    if (exponent10 >= 0) {
        mpfr_ui_pow_ui(t.v, 10, static_cast<unsigned long>(exponent10), MPFR_RNDD);
    } else {
        mpfr_ui_pow_ui(t.v, 10, static_cast<unsigned long>(-exponent10), MPFR_RNDU);
        mpfr_ui_div(t.v, 1, t.v, MPFR_RNDD);
    }
    return mpfr_cmp(rad_, t.v) <= 0;
}

double PrecisionReal::midpoint_double() const {
    return mpfr_get_d(mid_, MPFR_RNDN);
}

double PrecisionReal::radius_double() const {
    return mpfr_get_d(rad_, MPFR_RNDU);
}

double PrecisionReal::abs_upper_double() const {
    Temp t(kRadPrec);
    mpfr_abs(t.v, mid_, MPFR_RNDU);
    mpfr_add(t.v, t.v, rad_, MPFR_RNDU);
    return mpfr_get_d(t.v, MPFR_RNDU);
}

std::string PrecisionReal::midpoint_string(int significant) const {
    if (significant <= 0) {
        // context digits are an absolute 10^-D resolution; convert to
        // significant digits via the value's decimal exponent.
        if (mpfr_zero_p(mid_)) {
            significant = 1;
        } else {
            mpfr_exp_t e10 = 0;
            char* probe = mpfr_get_str(nullptr, &e10, 10, 2, mid_, MPFR_RNDN);
            mpfr_free_str(probe);
            const long s = static_cast<long>(digits_) + static_cast<long>(e10);
            significant = static_cast<int>(std::clamp(s, 1L, 100000L));
        }
    }
    return format_mpfr(mid_, significant, MPFR_RNDN);
}

std::string PrecisionReal::radius_string() const {
    return format_mpfr(rad_, 3, MPFR_RNDU);
}

std::string PrecisionReal::to_string() const {
    return midpoint_string() + " ± " + radius_string();
}

PrecisionReal PrecisionReal::operator-() const {
    PrecisionReal r(*this);
    mpfr_neg(r.mid_, r.mid_, MPFR_RNDN);   // exact
    return r;
}

PrecisionReal operator+(const PrecisionReal& a, const PrecisionReal& b) {
    PrecisionReal r = BallAccess::make_like(a, b);
    const int t = mpfr_add(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
    ensure_finite(r.mid_, "add");
    mpfr_add(r.rad_, a.rad_, b.rad_, MPFR_RNDU);
    add_ulp_bound(r.rad_, r.mid_, t);
    return r;
}

PrecisionReal operator-(const PrecisionReal& a, const PrecisionReal& b) {
    PrecisionReal r = BallAccess::make_like(a, b);
    const int t = mpfr_sub(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
    ensure_finite(r.mid_, "sub");
    mpfr_add(r.rad_, a.rad_, b.rad_, MPFR_RNDU);
    add_ulp_bound(r.rad_, r.mid_, t);
    return r;
}

PrecisionReal operator*(const PrecisionReal& a, const PrecisionReal& b) {
    PrecisionReal r = BallAccess::make_like(a, b);
    const int t = mpfr_mul(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
    ensure_finite(r.mid_, "mul");
    // |a| rb + |b| ra + ra rb
    Temp t1(kRadPrec), t2(kRadPrec);
    mpfr_abs(t1.v, a.mid_, MPFR_RNDU);
    mpfr_mul(t1.v, t1.v, b.rad_, MPFR_RNDU);
    mpfr_abs(t2.v, b.mid_, MPFR_RNDU);
    mpfr_mul(t2.v, t2.v, a.rad_, MPFR_RNDU);
    mpfr_add(r.rad_, t1.v, t2.v, MPFR_RNDU);
    mpfr_mul(t1.v, a.rad_, b.rad_, MPFR_RNDU);
    mpfr_add(r.rad_, r.rad_, t1.v, MPFR_RNDU);
    add_ulp_bound(r.rad_, r.mid_, t);
    return r;
}

PrecisionReal operator/(const PrecisionReal& a, const PrecisionReal& b) {
    if (mpfr_zero_p(b.mid_) || mpfr_cmpabs(b.mid_, b.rad_) <= 0)
        throw DivisorStraddlesZero("ball division: divisor ball contains zero");
    PrecisionReal r = BallAccess::make_like(a, b);
    const int t = mpfr_div(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
    ensure_finite(r.mid_, "div");
    // (ra |b| + |a| rb) / ((|b| - rb) |b|), numerator up, denominator down
    Temp num(kRadPrec), den(kRadPrec), t1(kRadPrec);
    mpfr_abs(t1.v, b.mid_, MPFR_RNDU);
    mpfr_mul(num.v, a.rad_, t1.v, MPFR_RNDU);
    mpfr_abs(t1.v, a.mid_, MPFR_RNDU);
    mpfr_mul(t1.v, t1.v, b.rad_, MPFR_RNDU);
    mpfr_add(num.v, num.v, t1.v, MPFR_RNDU);
    mpfr_abs(den.v, b.mid_, MPFR_RNDD);
    mpfr_sub(den.v, den.v, b.rad_, MPFR_RNDD);
    if (mpfr_sgn(den.v) <= 0)
        throw DivisorStraddlesZero("ball division: divisor ball contains zero");
    mpfr_abs(t1.v, b.mid_, MPFR_RNDD);
    mpfr_mul(den.v, den.v, t1.v, MPFR_RNDD);
    mpfr_div(r.rad_, num.v, den.v, MPFR_RNDU);
    add_ulp_bound(r.rad_, r.mid_, t);
    return r;
}

PrecisionReal abs(const PrecisionReal& a) {
    PrecisionReal r(a);
    mpfr_abs(BallAccess::mid(r), BallAccess::mid(r), MPFR_RNDN);  // exact
    return r;
}

PrecisionReal sqrt(const PrecisionReal& a) {
    const mpfr_prec_t p = mpfr_get_prec(BallAccess::mid(a));
    Temp lo(p), hi(p);
    mpfr_sub(lo.v, BallAccess::mid(a), BallAccess::rad(a), MPFR_RNDD);
    if (mpfr_sgn(lo.v) < 0)
        throw DomainError("ball sqrt: ball extends below zero");
    mpfr_add(hi.v, BallAccess::mid(a), BallAccess::rad(a), MPFR_RNDU);

    PrecisionReal r = BallAccess::make(p, a.context_digits());
    const int t = mpfr_sqrt(BallAccess::mid(r), BallAccess::mid(a), MPFR_RNDN);
    ensure_finite(BallAccess::mid(r), "sqrt");

    // Endpoint roots at full precision; only the final differences drop to
    // radius precision.
    Temp slo(p), shi(p), d1(kRadPrec), d2(kRadPrec);
    mpfr_sqrt(slo.v, lo.v, MPFR_RNDD);
    mpfr_sqrt(shi.v, hi.v, MPFR_RNDU);
    mpfr_sub(d1.v, BallAccess::mid(r), slo.v, MPFR_RNDU);
    mpfr_sub(d2.v, shi.v, BallAccess::mid(r), MPFR_RNDU);
    if (mpfr_cmp(d1.v, d2.v) < 0)
        mpfr_set(d1.v, d2.v, MPFR_RNDU);
    if (mpfr_sgn(d1.v) < 0)
        mpfr_set_zero(d1.v, 1);
    mpfr_set(BallAccess::rad(r), d1.v, MPFR_RNDU);
    add_ulp_bound(BallAccess::rad(r), BallAccess::mid(r), t);
    return r;
}

PrecisionReal exp(const PrecisionReal& a) {
    const mpfr_prec_t p = mpfr_get_prec(BallAccess::mid(a));
    PrecisionReal r = BallAccess::make(p, a.context_digits());
    const int t = mpfr_exp(BallAccess::mid(r), BallAccess::mid(a), MPFR_RNDN);
    ensure_finite(BallAccess::mid(r), "exp");
    if (!mpfr_zero_p(BallAccess::rad(a))) {
        // |e^x - e^m| <= e^(m+r) * r over the ball
        Temp hi(p), f(kRadPrec);
        mpfr_add(hi.v, BallAccess::mid(a), BallAccess::rad(a), MPFR_RNDU);
        mpfr_exp(f.v, hi.v, MPFR_RNDU);
        mpfr_mul(f.v, f.v, BallAccess::rad(a), MPFR_RNDU);
        mpfr_set(BallAccess::rad(r), f.v, MPFR_RNDU);
    }
    add_ulp_bound(BallAccess::rad(r), BallAccess::mid(r), t);
    return r;
}

namespace {

// sin and cos are 1-Lipschitz: the input radius carries over unchanged.
PrecisionReal lipschitz1_unary(const PrecisionReal& a,
                               int (*op)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t),
                               const char* name) {
    const mpfr_prec_t p = mpfr_get_prec(BallAccess::mid(a));
    PrecisionReal r = BallAccess::make(p, a.context_digits());
    const int t = op(BallAccess::mid(r), BallAccess::mid(a), MPFR_RNDN);
    ensure_finite(BallAccess::mid(r), name);
    mpfr_set(BallAccess::rad(r), BallAccess::rad(a), MPFR_RNDU);
    add_ulp_bound(BallAccess::rad(r), BallAccess::mid(r), t);
    return r;
}

} // namespace

PrecisionReal sin(const PrecisionReal& a) {
    return lipschitz1_unary(a, mpfr_sin, "sin");
}

PrecisionReal cos(const PrecisionReal& a) {
    return lipschitz1_unary(a, mpfr_cos, "cos");
}

PrecisionReal hypot(const PrecisionReal& a, const PrecisionReal& b) {
    // 1-Lipschitz in each argument: the radii add.
    PrecisionReal r = BallAccess::make_like(a, b);
    const int t = mpfr_hypot(BallAccess::mid(r), BallAccess::mid(a), BallAccess::mid(b), MPFR_RNDN);
    ensure_finite(BallAccess::mid(r), "hypot");
    mpfr_add(BallAccess::rad(r), BallAccess::rad(a), BallAccess::rad(b), MPFR_RNDU);
    add_ulp_bound(BallAccess::rad(r), BallAccess::mid(r), t);
    return r;
}

PrecisionReal pow_int(const PrecisionReal& a, long k) {
    if (k < 0)
        return PrecisionReal::exact(1, a.context_digits()) / pow_int(a, -k);
    if (k == 0)
        return PrecisionReal::exact(1, a.context_digits());
    PrecisionReal result = PrecisionReal::exact(1, a.context_digits());
    PrecisionReal base(a);
    unsigned long e = static_cast<unsigned long>(k);
    while (true) {
        if (e & 1UL)
            result = result * base;
        e >>= 1;
        if (e == 0)
            break;
        base = base * base;
    }
    return result;
}

PrecisionReal PrecisionReal::inflate(double extra) const {
    if (!(extra >= 0.0))
        throw DomainError("inflate: negative radius increment");
    PrecisionReal r(*this);
    Temp t(kRadPrec);
    mpfr_set_d(t.v, extra, MPFR_RNDU);
    mpfr_add(r.rad_, r.rad_, t.v, MPFR_RNDU);
    return r;
}

PrecisionReal PrecisionReal::padded(const PrecisionReal& bound) const {
    PrecisionReal r(*this);
    Temp t(kRadPrec);
    mpfr_abs(t.v, bound.mid_, MPFR_RNDU);
    mpfr_add(t.v, t.v, bound.rad_, MPFR_RNDU);
    mpfr_add(r.rad_, r.rad_, t.v, MPFR_RNDU);
    return r;
}

} // namespace zv
