#include "relift/refmath.hpp"

#include <cmath>
#include <limits>

#include "relift/vocab.hpp"

namespace relift {

namespace {

constexpr double PI = 3.141592653589793238462643383279502884;
constexpr double LN2 = 0.693147180559945309417232121458176568;

double r_exp(double x) {
    if (std::isnan(x)) return x;
    if (x > 710.0) return std::numeric_limits<double>::infinity();
    if (x < -745.0) return 0.0;
    // x = k*ln2 + r with |r| <= ln2/2; exp(r) by Taylor with a fixed term count.
    double kd = x / LN2;
    double k = std::nearbyint(kd);
    double r = x - k * LN2;
    double sum = 1.0, term = 1.0;
    for (int i = 1; i <= 22; ++i) {
        term = term * r / i;
        sum += term;
    }
    return std::ldexp(sum, static_cast<int>(k));
}

double r_log(double x) {
    if (std::isnan(x) || x < 0.0) return std::numeric_limits<double>::quiet_NaN();
    if (x == 0.0) return -std::numeric_limits<double>::infinity();
    if (std::isinf(x)) return x;
    int e = 0;
    double m = std::frexp(x, &e);  // m in [0.5, 1)
    // ln(m) = 2*atanh((m-1)/(m+1)); |t| < 1/3 so 30 odd terms are plenty.
    double t = (m - 1.0) / (m + 1.0);
    double t2 = t * t;
    double sum = 0.0, p = t;
    for (int i = 0; i < 30; ++i) {
        sum += p / (2 * i + 1);
        p *= t2;
    }
    return 2.0 * sum + static_cast<double>(e) * LN2;
}

void r_sincos(double x, double* s, double* c) {
    if (!std::isfinite(x)) {
        *s = std::numeric_limits<double>::quiet_NaN();
        *c = *s;
        return;
    }
    double k = std::nearbyint(x / (2.0 * PI));
    double r = x - k * (2.0 * PI);  // r in roughly [-pi, pi]
    double r2 = r * r;
    double ssum = 0.0, sterm = r;
    for (int i = 0; i < 12; ++i) {
        ssum += sterm;
        sterm = -sterm * r2 / ((2 * i + 2) * (2 * i + 3));
    }
    double csum = 0.0, cterm = 1.0;
    for (int i = 0; i < 12; ++i) {
        csum += cterm;
        cterm = -cterm * r2 / ((2 * i + 1) * (2 * i + 2));
    }
    *s = ssum;
    *c = csum;
}

double r_atan(double x) {
    if (std::isnan(x)) return x;
    if (std::isinf(x)) return x > 0 ? PI / 2 : -PI / 2;
    bool neg = x < 0.0;
    double v = neg ? -x : x;
    bool invert = v > 1.0;
    if (invert) v = 1.0 / v;
    // Two half-angle reductions bring v under tan(pi/12) ~ 0.268.
    int halvings = 0;
    for (; halvings < 2; ++halvings) v = v / (1.0 + std::sqrt(1.0 + v * v));
    double v2 = v * v;
    double sum = 0.0, p = v;
    for (int i = 0; i < 14; ++i) {
        sum += (i % 2 == 0 ? p : -p) / (2 * i + 1);
        p *= v2;
    }
    double a = sum * 4.0;  // undo the two halvings
    if (invert) a = PI / 2 - a;
    return neg ? -a : a;
}

double r_atan2(double y, double x) {
    if (std::isnan(y) || std::isnan(x)) return std::numeric_limits<double>::quiet_NaN();
    if (x > 0.0) return r_atan(y / x);
    if (x < 0.0) {
        if (y >= 0.0) return r_atan(y / x) + PI;
        return r_atan(y / x) - PI;
    }
    if (y > 0.0) return PI / 2;
    if (y < 0.0) return -PI / 2;
    return 0.0;
}

double r_asin(double x) {
    if (std::isnan(x) || x > 1.0 || x < -1.0) return std::numeric_limits<double>::quiet_NaN();
    if (x == 1.0) return PI / 2;
    if (x == -1.0) return -PI / 2;
    return r_atan(x / std::sqrt(1.0 - x * x));
}

// Exact for integer exponents; saturates to inf/0 deterministically.
double r_pow(double base, std::int64_t e) {
    bool inv = e < 0;
    std::uint64_t n = inv ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
    double acc = 1.0, p = base;
    while (n) {
        if (n & 1) acc *= p;
        p *= p;
        n >>= 1;
        if (!std::isfinite(acc) && acc != 0.0) break;
    }
    return inv ? 1.0 / acc : acc;
}

}  // namespace

bool ref_math_known(const std::string& name) { return HlVocab::is_math_name(name); }

std::int64_t ref_math(const std::string& name, std::int64_t a, std::int64_t b, bool* overflow) {
    // Comparison names operate on the integer values directly.
    if (name == "isgreater") return a > b ? 1 : 0;
    if (name == "isgreaterequal") return a >= b ? 1 : 0;
    if (name == "isless") return a < b ? 1 : 0;
    if (name == "islessequal") return a <= b ? 1 : 0;

    double x = static_cast<double>(a);
    double y = static_cast<double>(b);
    double r = 0.0;
    if (name == "sin" || name == "cos") {
        double s, c;
        r_sincos(x, &s, &c);
        r = name == "sin" ? s : c;
    } else if (name == "tan") {
        double s, c;
        r_sincos(x, &s, &c);
        r = s / c;
    } else if (name == "asin") {
        r = r_asin(x);
    } else if (name == "acos") {
        r = PI / 2 - r_asin(x);
    } else if (name == "atan") {
        r = r_atan(x);
    } else if (name == "exp") {
        r = r_exp(x);
    } else if (name == "log") {
        r = r_log(x);
    } else if (name == "sqrt") {
        r = x < 0.0 ? std::numeric_limits<double>::quiet_NaN() : std::sqrt(x);
    } else if (name == "ceil") {
        r = x;  // integer inputs are already integral
    } else if (name == "floor") {
        r = x;
    } else if (name == "fabs") {
        r = x < 0.0 ? -x : x;
    } else if (name == "atan2") {
        r = r_atan2(x, y);
    } else if (name == "pow") {
        r = r_pow(x, b);
    } else if (name == "fmin") {
        r = x < y ? x : y;
    } else if (name == "fmax") {
        r = x > y ? x : y;
    } else {
        if (overflow) *overflow = true;
        return 0;
    }

    if (!std::isfinite(r) || r >= 9223372036854775808.0 || r < -9223372036854775808.0) {
        if (overflow) *overflow = true;
        return 0;
    }
    return static_cast<std::int64_t>(r);  // truncates toward zero
}

}  // namespace relift
