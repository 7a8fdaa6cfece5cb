#pragma once

// Triple-sum resolvent R3(x) = ∏_{i<j<k} (x - (α_i + α_j + α_k)) of a monic
// degree-7 f, built from power sums only:
//   q_m(τ) = Σ_i exp(m α_i τ) = Σ_k p_k m^k τ^k / k!
//   Σ_{i<j<k} exp((α_i+α_j+α_k) τ) = (q_1^3 - 3 q_1 q_2 + 2 q_3) / 6
// so k!·[τ^k] of the right side is the k-th power sum of the triple sums.

#include <cstddef>
#include <vector>

#include "error.hpp"
#include "series.hpp"
#include "unipoly.hpp"

namespace quartic_forge {

inline constexpr std::size_t kResolventDegree = 35;
inline constexpr std::size_t kResolventSeriesOrder = kResolventDegree + 1;

namespace detail {

inline void require_separable_septic(const UniPoly& f) {
    if (f.degree() != 7) throw Error(ErrorCode::WrongDegree, "expected degree 7, got " + std::to_string(f.degree()));
    if (discriminant(f) == 0) throw Error(ErrorCode::Inseparable, "f has a repeated root");
}

/// q_m(τ) truncated at `order`, from p_1..p_{order-1} and p_0 = n.
inline Series exp_power_sum_series(const std::vector<Rat>& p, long n, long m, std::size_t order) {
    Series q(order);
    Rat factorial = 1;
    Rat scale = 1;
    q[0] = n;
    for (std::size_t k = 1; k < order; ++k) {
        factorial *= static_cast<long>(k);
        scale *= m;
        q[k] = p[k - 1] * scale / factorial;
    }
    return q;
}

}  // namespace detail

/// Power sums P_1..P_count of the C(n,3) sums of three distinct roots of a
/// monic f.
inline std::vector<Rat> triple_sum_power_sums(const UniPoly& f, std::size_t count) {
    const std::size_t order = count + 1;
    const auto p = power_sums(f, count);
    const long n = f.degree();
    const Series q1 = detail::exp_power_sum_series(p, n, 1, order);
    const Series q2 = detail::exp_power_sum_series(p, n, 2, order);
    const Series q3 = detail::exp_power_sum_series(p, n, 3, order);
    const Series e3 = Rat(1, 6) * (q1 * q1 * q1 - Rat(3) * (q1 * q2) + Rat(2) * q3);
    std::vector<Rat> out(count);
    Rat factorial = 1;
    for (std::size_t k = 1; k <= count; ++k) {
        factorial *= static_cast<long>(k);
        out[k - 1] = e3[k] * factorial;
    }
    return out;
}

inline UniPoly triple_sum_resolvent(const UniPoly& f) {
    detail::require_separable_septic(f);
    if (!f.is_monic()) throw Error(ErrorCode::InvalidArgument, "triple_sum_resolvent needs a monic polynomial");
    static_assert(kResolventSeriesOrder == 36);
    return poly_from_power_sums(triple_sum_power_sums(f, kResolventDegree));
}

/// R3(0) for the monic normalization of f; zero iff three roots sum to zero,
/// i.e. three points of the orbit (α^3 : α : 1) are collinear.
inline Rat triple_sum_resolvent_at_zero(const UniPoly& f) {
    return triple_sum_resolvent(f.monic())(Rat(0));
}

inline bool collinear_triple_exists(const UniPoly& f) { return triple_sum_resolvent_at_zero(f) == 0; }

/// Sum of all roots, -c6/c7.
inline Rat root_sum(const UniPoly& f) {
    if (f.degree() != 7) throw Error(ErrorCode::WrongDegree, "expected degree 7");
    return -f.coeff(6) / f.leading();
}

/// Six roots summing to zero forces the seventh root to equal the full root
/// sum, so the test is f(-c6/c7) = 0.
inline bool six_on_conic_exists(const UniPoly& f) { return f(root_sum(f)) == 0; }

}  // namespace quartic_forge
