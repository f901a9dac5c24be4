#include "clustered/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "clustered/error.hpp"

namespace clustered {

namespace {

constexpr double kMaxBits = 1 << 20;

void require(bool ok, const char* what) {
    if (!ok)
        throw InvalidArgument(what);
}

BigInt power(BigInt base, std::uint64_t exponent) {
    BigInt result = 1;
    while (exponent) {
        if (exponent & 1)
            result *= base;
        exponent >>= 1;
        if (exponent)
            base *= base;
    }
    return result;
}

} // namespace

BigInt ej_bound(std::int64_t delta, std::int64_t g) {
    require(delta >= 1, "ej_bound: delta must be at least 1");
    require(g >= 0, "ej_bound: genus must be nonnegative");
    const std::uint64_t d = static_cast<std::uint64_t>(delta);
    const double bits = std::ldexp(1.0, static_cast<int>(std::min<std::int64_t>(g, 1000))) *
                        ((32.0 * d + 8.0) * std::log2(15.0 * d) + std::log2(5.0 * d));
    if (bits > kMaxBits)
        throw LimitExceeded("ej_bound: value for delta=" + std::to_string(delta) + ", g=" + std::to_string(g) +
                            " has about " + std::to_string(bits) + " bits, beyond the evaluation limit");
    const std::uint64_t two_g = std::uint64_t{1} << g;
    return power(BigInt(5 * d), two_g - 1) * power(BigInt(15 * d), (32 * d + 8) * two_g);
}

BigInt adov_bound(std::int64_t w, std::int64_t delta) {
    require(w >= 1 && delta >= 1, "adov_bound: w and delta must be at least 1");
    return BigInt(24) * w * delta;
}

BigInt necklace_bound(std::int64_t q) {
    require(q >= 1, "necklace_bound: q must be positive");
    return BigInt(std::max<std::int64_t>(q - 1, 2));
}

BigInt combine_bound(std::int64_t q, std::int64_t w) {
    require(q >= 3, "combine_bound: q must be at least 3");
    require(w >= 0, "combine_bound: w must be nonnegative");
    return BigInt(q) * (BigInt(w) + 1) - 1;
}

BigInt outgrowth_bound(const BigInt& d, std::int64_t w, std::int64_t delta) {
    require(d >= 1 && w >= 1 && delta >= 1, "outgrowth_bound: inputs must be positive");
    return 48 * power(d, 4) * w * power(BigInt(delta), 5);
}

BigInt recolor_budget(std::int64_t z, std::int64_t delta, std::int64_t k) {
    require(z >= 0 && delta >= 0 && k >= 0, "recolor_budget: inputs must be nonnegative");
    return BigInt(z) * (BigInt(delta) * k + 1);
}

MainConstants main_constants(std::int64_t rho, std::int64_t theta, std::int64_t delta, std::int64_t g) {
    return main_constants(rho, theta, delta, g, ConstantOverrides{});
}

MainConstants main_constants(std::int64_t rho, std::int64_t theta, std::int64_t delta, std::int64_t g,
                             const ConstantOverrides& overrides) {
    require(rho >= 0, "main_constants: rho must be nonnegative");
    require(theta >= 1, "main_constants: theta must be at least 1");
    require(delta >= 1, "main_constants: delta must be at least 1");
    require(g >= 0, "main_constants: genus must be nonnegative");
    MainConstants c;
    c.d = overrides.d ? *overrides.d : ej_bound(delta, g);
    c.m = overrides.m ? *overrides.m
                      : 48 * power(c.d, 4) * (2 * rho + 3) * power(BigInt(3 * delta + 2 * rho), 5);
    c.eta = 2000 * BigInt(rho) * power(BigInt(theta), 3) * c.m * power(BigInt(delta), 6);
    return c;
}

std::size_t digit_count(const BigInt& x) {
    const BigInt magnitude = x < 0 ? BigInt(-x) : x;
    std::string s = magnitude.str();
    return s.size();
}

} // namespace clustered
