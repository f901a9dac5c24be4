#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace clustered {

using BigInt = boost::multiprecision::cpp_int;

/// Parameters of the explicit bound formulas. xi and kappa are carried for
/// reference only; no formula here consumes them.
struct BoundParams {
    std::int64_t delta = 3;  // maximum degree
    std::int64_t g = 0;      // Euler genus
    std::int64_t w = 1;      // decomposition width
    std::int64_t q = 3;      // necklace clique cap
    std::int64_t rho = 0;    // vortex order
    std::int64_t theta = 1;  // tangle order parameter
    std::int64_t k = 1;      // component size bound of the base coloring
    std::int64_t z = 0;      // |Z|, number of recolored vertices
    std::optional<std::int64_t> xi;
    std::optional<std::int64_t> kappa;
};

/// (5Δ)^(2^g - 1) · (15Δ)^((32Δ+8)·2^g): component size bound for
/// 3-colorings of graphs of Euler genus g and maximum degree Δ.
/// Throws LimitExceeded when the value would exceed 2^20 bits.
BigInt ej_bound(std::int64_t delta, std::int64_t g);

/// 24wΔ: component size bound for 2-colorings given width w and degree Δ.
BigInt adov_bound(std::int64_t w, std::int64_t delta);

/// max(q-1, 2): necklace treewidth bound.
BigInt necklace_bound(std::int64_t q);

/// q(w+1) - 1: treewidth bound after gluing a necklace onto a width-w vortex.
/// Throws InvalidArgument when q < 3.
BigInt combine_bound(std::int64_t q, std::int64_t w);

/// 48·d⁴·w·Δ⁵.
BigInt outgrowth_bound(const BigInt& d, std::int64_t w, std::int64_t delta);

/// |Z|·(Δk + 1).
BigInt recolor_budget(std::int64_t z, std::int64_t delta, std::int64_t k);

struct MainConstants {
    BigInt d;
    BigInt m;
    BigInt eta;
};

/// d = ej_bound(Δ, g), M = 48·d⁴·(2ρ+3)·(3Δ+2ρ)⁵, η = 2000·ρ·θ³·M·Δ⁶.
MainConstants main_constants(std::int64_t rho, std::int64_t theta, std::int64_t delta, std::int64_t g);

/// Overrides for main_constants. Realistic d is astronomically large; these
/// let tests drive the downstream formulas with small injected values.
struct ConstantOverrides {
    std::optional<BigInt> d;
    std::optional<BigInt> m;
};

MainConstants main_constants(std::int64_t rho, std::int64_t theta, std::int64_t delta, std::int64_t g,
                             const ConstantOverrides& overrides);

/// Decimal digit count of |x| (1 for zero).
std::size_t digit_count(const BigInt& x);

} // namespace clustered
