#pragma once

// The Picard lattice of the blowup of P^2 at the seven points of B, its mod-2
// reduction, and the permutation module Q_B of zero-sum functions B → F_2.
//
// Lattice basis: l0 (pullback of a line) and l_b (exceptional curves), with
// l0·l0 = 1, l_b·l_b = -1, all cross terms 0. K = -3 l0 + Σ l_b.
// Mod-2 vectors pack l̄0 into bit 0 and l̄_{b_i} into bit i+1.
// Q_B uses the basis e_i = indicator{b_i, b_7}, i = 1..6; the coordinates of
// φ in that basis are just φ(b_1), ..., φ(b_6).

#include <array>
#include <bit>
#include <bitset>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <numeric>
#include <string>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "f2.hpp"

namespace quartic_forge {

inline constexpr std::size_t kOrbitSize = 7;
inline constexpr std::size_t kQbDim = kOrbitSize - 1;

struct PicClass {
    std::int64_t a0 = 0;
    std::array<std::int64_t, kOrbitSize> ab{};

    static PicClass line() { return {1, {}}; }
    static PicClass exceptional(std::size_t b) {
        PicClass c;
        c.ab.at(b) = 1;
        return c;
    }

    friend PicClass operator+(PicClass x, const PicClass& y) {
        x.a0 += y.a0;
        for (std::size_t i = 0; i < kOrbitSize; ++i) x.ab[i] += y.ab[i];
        return x;
    }
    friend PicClass operator-(PicClass x, const PicClass& y) {
        x.a0 -= y.a0;
        for (std::size_t i = 0; i < kOrbitSize; ++i) x.ab[i] -= y.ab[i];
        return x;
    }
    friend PicClass operator*(std::int64_t s, PicClass x) {
        x.a0 *= s;
        for (auto& a : x.ab) a *= s;
        return x;
    }
    friend bool operator==(const PicClass&, const PicClass&) = default;
};

inline std::int64_t intersect(const PicClass& x, const PicClass& y) {
    std::int64_t acc = x.a0 * y.a0;
    for (std::size_t i = 0; i < kOrbitSize; ++i) acc -= x.ab[i] * y.ab[i];
    return acc;
}

inline PicClass canonical_class() {
    PicClass k;
    k.a0 = -3;
    k.ab.fill(1);
    return k;
}

/// Membership in the orthogonal complement of K, decided by the pairing.
inline bool pic0_membership(const PicClass& x) { return intersect(x, canonical_class()) == 0; }

/// Z-basis of K^⊥: l_{b_i} - l_{b_{i+1}} (i = 1..6) and l0 - l_{b_1} - l_{b_2} - l_{b_3}.
inline std::vector<PicClass> pic0_basis() {
    std::vector<PicClass> basis;
    for (std::size_t i = 0; i + 1 < kOrbitSize; ++i) {
        basis.push_back(PicClass::exceptional(i) - PicClass::exceptional(i + 1));
    }
    basis.push_back(PicClass::line() - PicClass::exceptional(0) - PicClass::exceptional(1) - PicClass::exceptional(2));
    for (const auto& b : basis) {
        if (!pic0_membership(b)) throw Error(ErrorCode::InvalidArgument, "pic0 basis vector not orthogonal to K");
    }
    return basis;
}

inline nlohmann::json to_json(const PicClass& x) { return {{"a0", x.a0}, {"ab", x.ab}}; }

inline PicClass pic_class_from_json(const nlohmann::json& j) {
    PicClass x;
    x.a0 = j.at("a0").get<std::int64_t>();
    x.ab = j.at("ab").get<std::array<std::int64_t, kOrbitSize>>();
    return x;
}

// ---------------------------------------------------------------- mod 2

using PicMod2 = std::bitset<kOrbitSize + 1>;

inline PicMod2 reduce_mod2(const PicClass& x) {
    PicMod2 z;
    z[0] = (x.a0 & 1) != 0;
    for (std::size_t i = 0; i < kOrbitSize; ++i) z[i + 1] = (x.ab[i] & 1) != 0;
    return z;
}

inline PicClass lift(const PicMod2& z) {
    PicClass x;
    x.a0 = z[0] ? 1 : 0;
    for (std::size_t i = 0; i < kOrbitSize; ++i) x.ab[i] = z[i + 1] ? 1 : 0;
    return x;
}

/// Mod-2 reduction of the intersection pairing.
inline bool psi(const PicMod2& x, const PicMod2& y) {
    return (intersect(lift(x), lift(y)) & 1) != 0;
}

/// Pic0/2 sits inside Pic/2 as {a0 + Σ a_b = 0}.
inline bool in_pic0_mod2(const PicMod2& z) { return z.count() % 2 == 0; }

inline PicMod2 v0_bar() { return PicMod2().set(); }

inline std::vector<PicMod2> pic0_mod2_basis() {
    std::vector<PicMod2> out;
    for (const auto& b : pic0_basis()) out.push_back(reduce_mod2(b));
    return out;
}

/// All 2^7 elements of Pic0/2.
inline std::vector<PicMod2> pic0_mod2_elements() {
    std::vector<PicMod2> out;
    for (std::uint32_t bits = 0; bits < (1U << (kOrbitSize + 1)); ++bits) {
        PicMod2 z(bits);
        if (in_pic0_mod2(z)) out.push_back(z);
    }
    return out;
}

struct Subspace {
    std::vector<PicMod2> basis;
    std::vector<PicMod2> elements;
    [[nodiscard]] std::size_t dim() const noexcept { return basis.size(); }
};

/// Radical of ψ restricted to Pic0/2: kernel of the Gram matrix of ψ on the
/// basis of Pic0/2, by row reduction.
inline Subspace psi0_radical() {
    const auto basis = pic0_mod2_basis();
    const std::size_t n = basis.size();
    F2Mat gram(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) gram.set(i, j, psi(basis[i], basis[j]));
    }
    Subspace rad;
    for (auto coeffs : gram.nullspace()) {
        PicMod2 v;
        for (std::size_t i = 0; i < n; ++i) {
            if ((coeffs >> i) & 1U) v ^= basis[i];
        }
        rad.basis.push_back(v);
    }
    const std::size_t d = rad.basis.size();
    for (std::uint32_t mask = 0; mask < (1U << d); ++mask) {
        PicMod2 v;
        for (std::size_t i = 0; i < d; ++i) {
            if ((mask >> i) & 1U) v ^= rad.basis[i];
        }
        rad.elements.push_back(v);
    }
    return rad;
}

// ---------------------------------------------------------------- Q_B

/// A function B → F_2 with Σ φ(b) = 0.
class QBElem {
public:
    QBElem() = default;
    explicit QBElem(std::bitset<kOrbitSize> values) : values_(values) {
        if (values_.count() % 2 != 0) throw Error(ErrorCode::InvalidArgument, "Q_B element must have even support");
    }

    static QBElem indicator(std::initializer_list<std::size_t> points) {
        std::bitset<kOrbitSize> v;
        for (auto b : points) v.flip(b);
        return QBElem(v);
    }

    /// Coordinates in the basis e_i = indicator{b_i, b_7}.
    static QBElem from_coordinates(std::uint64_t coords) {
        std::bitset<kOrbitSize> v(coords & ((1U << kQbDim) - 1));
        v[kQbDim] = v.count() % 2 != 0;
        return QBElem(v);
    }

    [[nodiscard]] bool operator()(std::size_t b) const { return values_.test(b); }
    [[nodiscard]] const std::bitset<kOrbitSize>& values() const noexcept { return values_; }
    [[nodiscard]] std::uint64_t coordinates() const { return values_.to_ulong() & ((1U << kQbDim) - 1); }
    [[nodiscard]] bool is_zero() const noexcept { return values_.none(); }

    friend QBElem operator+(const QBElem& a, const QBElem& b) { return QBElem(a.values_ ^ b.values_); }
    friend bool operator==(const QBElem&, const QBElem&) = default;

private:
    std::bitset<kOrbitSize> values_;
};

/// κ(z) = (b ↦ a_b + a0) for z = a0 l̄0 + Σ a_b l̄_b in Pic0/2.
inline QBElem kappa(const PicMod2& z) {
    if (!in_pic0_mod2(z)) throw Error(ErrorCode::InvalidArgument, "kappa is defined on Pic0/2 only");
    std::bitset<kOrbitSize> v;
    for (std::size_t b = 0; b < kOrbitSize; ++b) v[b] = z[b + 1] != z[0];
    return QBElem(v);
}

/// (Z^B)^0 / 2 → Q_B: reduction mod 2 of an integer zero-sum function.
inline QBElem theta_iso(const std::array<std::int64_t, kOrbitSize>& phi) {
    if (std::accumulate(phi.begin(), phi.end(), std::int64_t{0}) != 0) {
        throw Error(ErrorCode::InvalidArgument, "theta_iso needs a zero-sum function");
    }
    std::bitset<kOrbitSize> v;
    for (std::size_t b = 0; b < kOrbitSize; ++b) v[b] = (phi[b] & 1) != 0;
    return QBElem(v);
}

// ---------------------------------------------------------------- Perm(B)

class Perm {
public:
    Perm() { std::iota(image_.begin(), image_.end(), 0); }
    explicit Perm(const std::array<int, kOrbitSize>& image) : image_(image) {
        std::array<bool, kOrbitSize> seen{};
        for (int x : image_) {
            if (x < 0 || x >= static_cast<int>(kOrbitSize) || seen[static_cast<std::size_t>(x)]) {
                throw Error(ErrorCode::InvalidArgument, "not a permutation of 7 points");
            }
            seen[static_cast<std::size_t>(x)] = true;
        }
    }

    /// Product of disjoint or overlapping cycles, applied right to left.
    static Perm cycles(std::initializer_list<std::initializer_list<int>> cs) {
        Perm result;
        for (auto it = std::rbegin(cs); it != std::rend(cs); ++it) {
            std::vector<int> c(*it);
            std::array<int, kOrbitSize> img;
            std::iota(img.begin(), img.end(), 0);
            for (std::size_t i = 0; i < c.size(); ++i) img[static_cast<std::size_t>(c[i])] = c[(i + 1) % c.size()];
            result = Perm(img) * result;
        }
        return result;
    }

    [[nodiscard]] std::size_t operator()(std::size_t b) const { return static_cast<std::size_t>(image_.at(b)); }
    [[nodiscard]] const std::array<int, kOrbitSize>& image() const noexcept { return image_; }

    [[nodiscard]] Perm inverse() const {
        std::array<int, kOrbitSize> inv{};
        for (std::size_t i = 0; i < kOrbitSize; ++i) inv[static_cast<std::size_t>(image_[i])] = static_cast<int>(i);
        return Perm(inv);
    }

    /// (σ * τ)(b) = σ(τ(b)).
    friend Perm operator*(const Perm& s, const Perm& t) {
        std::array<int, kOrbitSize> img{};
        for (std::size_t i = 0; i < kOrbitSize; ++i) img[i] = s.image_[static_cast<std::size_t>(t.image_[i])];
        return Perm(img);
    }
    friend bool operator==(const Perm&, const Perm&) = default;

private:
    std::array<int, kOrbitSize> image_{};
};

/// σ·l_b = l_{σ(b)}, l0 fixed.
inline PicMod2 act(const Perm& s, const PicMod2& z) {
    PicMod2 out;
    out[0] = z[0];
    for (std::size_t b = 0; b < kOrbitSize; ++b) out[s(b) + 1] = z[b + 1];
    return out;
}

/// (σ·φ)(b) = φ(σ⁻¹(b)).
inline QBElem act(const Perm& s, const QBElem& phi) {
    std::bitset<kOrbitSize> v;
    for (std::size_t b = 0; b < kOrbitSize; ++b) v[s(b)] = phi(b);
    return QBElem(v);
}

/// Matrix of φ ↦ φ∘σ⁻¹ in the basis e_i = indicator{b_i, b_7}.
inline F2Mat qb_action(const Perm& s) {
    F2Mat m(kQbDim, kQbDim);
    for (std::size_t i = 0; i < kQbDim; ++i) {
        const std::uint64_t col = act(s, QBElem::indicator({i, kQbDim})).coordinates();
        for (std::size_t r = 0; r < kQbDim; ++r) m.set(r, i, (col >> r) & 1U);
    }
    return m;
}

struct PermGenSet {
    std::string name;
    std::vector<Perm> gens;
};

inline PermGenSet s7_generators() {
    return {"S7", {Perm::cycles({{0, 1, 2, 3, 4, 5, 6}}), Perm::cycles({{0, 1}})}};
}
inline PermGenSet a7_generators() {
    return {"A7", {Perm::cycles({{0, 1, 2, 3, 4, 5, 6}}), Perm::cycles({{0, 1, 2}})}};
}
inline PermGenSet c7_generators() { return {"C7", {Perm::cycles({{0, 1, 2, 3, 4, 5, 6}})}}; }

inline std::vector<F2Mat> qb_matrices(const PermGenSet& g) {
    std::vector<F2Mat> out;
    for (const auto& s : g.gens) out.push_back(qb_action(s));
    return out;
}

// ---------------------------------------------------------------- module checks

namespace detail {

inline void check_generators(const std::vector<F2Mat>& gens) {
    if (gens.empty()) throw Error(ErrorCode::InvalidArgument, "no generators");
    const std::size_t n = gens.front().rows();
    if (n * n > 64) throw Error(ErrorCode::InvalidArgument, "module dimension too large");
    for (const auto& g : gens) {
        if (g.rows() != n || g.cols() != n) throw Error(ErrorCode::InvalidArgument, "generators must be square of equal size");
        if (g.rank() != n) throw Error(ErrorCode::SingularGenerator, "generator is not invertible");
    }
}

/// Echelon basis keyed by leading bit; returns false if v was already in the span.
inline bool insert_into_span(std::vector<std::uint64_t>& echelon, std::uint64_t v) {
    for (auto b : echelon) {
        const auto lead = std::uint64_t{1} << (63 - std::countl_zero(b));
        if (v & lead) v ^= b;
    }
    if (v == 0) return false;
    const auto lead = std::uint64_t{1} << (63 - std::countl_zero(v));
    for (auto& b : echelon) {
        if (b & lead) b ^= v;
    }
    echelon.push_back(v);
    return true;
}

}  // namespace detail

/// Dimension of the submodule generated by v under the given generators.
inline std::size_t spin_dimension(const std::vector<F2Mat>& gens, std::uint64_t v) {
    std::vector<std::uint64_t> echelon;
    std::vector<std::uint64_t> queue{v};
    detail::insert_into_span(echelon, v);
    for (std::size_t i = 0; i < queue.size(); ++i) {
        for (const auto& g : gens) {
            const std::uint64_t w = g.apply(queue[i]);
            if (detail::insert_into_span(echelon, w)) queue.push_back(w);
        }
    }
    return echelon.size();
}

/// Simple iff every nonzero vector spins up to the whole space. Exhaustive
/// over all 2^n - 1 starting vectors.
inline bool is_simple_module(const std::vector<F2Mat>& gens) {
    detail::check_generators(gens);
    const std::size_t n = gens.front().rows();
    for (std::uint64_t v = 1; v < (std::uint64_t{1} << n); ++v) {
        if (spin_dimension(gens, v) != n) return false;
    }
    return true;
}

/// dim over F_2 of {X : XM = MX for every generator M}.
inline std::size_t endomorphism_dim(const std::vector<F2Mat>& gens) {
    detail::check_generators(gens);
    const std::size_t n = gens.front().rows();
    F2Mat system(0, n * n);
    auto var = [n](std::size_t i, std::size_t j) { return std::uint64_t{1} << (i * n + j); };
    for (const auto& m : gens) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                std::uint64_t row = 0;
                for (std::size_t l = 0; l < n; ++l) {
                    if (m.get(l, j)) row ^= var(i, l);   // (XM)_ij
                    if (m.get(i, l)) row ^= var(l, j);   // (MX)_ij
                }
                system.append_row(row);
            }
        }
    }
    return n * n - system.rank();
}

struct ModuleCheck {
    std::string group;
    bool simple = false;
    std::size_t end_dim = 0;
};

inline ModuleCheck check_module(const PermGenSet& g) {
    const auto mats = qb_matrices(g);
    return {g.name, is_simple_module(mats), endomorphism_dim(mats)};
}

inline nlohmann::json to_json(const ModuleCheck& m) {
    return {{"group", m.group}, {"simple", m.simple}, {"end_dim", m.end_dim}};
}

// ---------------------------------------------------------------- lattice suite

struct LatticeSuite {
    std::int64_t k_dot_k = 0;
    std::size_t pic0_rank = 0;          // rank of the Z-basis of K^⊥
    std::size_t pic0_mod2_dim = 0;
    std::vector<PicMod2> radical;       // elements of the radical of ψ0
    bool radical_is_v0 = false;         // radical == {0, v̄0}
    std::size_t kappa_kernel_dim = 0;
    std::size_t kappa_image_dim = 0;
    bool kappa_equivariant = false;     // on all of Pic0/2, for the S7 generators
};

inline LatticeSuite run_lattice_suite() {
    LatticeSuite s;
    const PicClass k = canonical_class();
    s.k_dot_k = intersect(k, k);
    const auto basis = pic0_basis();
    s.pic0_rank = basis.size();
    std::vector<std::uint64_t> packed;
    for (const auto& b : pic0_mod2_basis()) packed.push_back(b.to_ulong());
    s.pic0_mod2_dim = span_dimension(packed, kOrbitSize + 1);

    const Subspace rad = psi0_radical();
    s.radical = rad.elements;
    s.radical_is_v0 = rad.dim() == 1 && rad.basis.front() == v0_bar();

    std::vector<std::uint64_t> kernel;
    std::vector<std::uint64_t> image;
    const auto elements = pic0_mod2_elements();
    for (const auto& z : elements) {
        const QBElem q = kappa(z);
        if (q.is_zero()) kernel.push_back(z.to_ulong());
        image.push_back(q.coordinates());
    }
    s.kappa_kernel_dim = span_dimension(kernel, kOrbitSize + 1);
    s.kappa_image_dim = span_dimension(image, kQbDim);

    s.kappa_equivariant = true;
    for (const auto& g : s7_generators().gens) {
        for (const auto& z : elements) s.kappa_equivariant = s.kappa_equivariant && kappa(act(g, z)) == act(g, kappa(z));
    }
    return s;
}

inline nlohmann::json to_json(const LatticeSuite& s) {
    nlohmann::json rad = nlohmann::json::array();
    for (const auto& v : s.radical) rad.push_back(v.to_string());
    return {
        {"K_dot_K", s.k_dot_k},
        {"pic0_rank", s.pic0_rank},
        {"pic0_mod2_dim", s.pic0_mod2_dim},
        {"psi0_radical", rad},
        {"radical_is_v0", s.radical_is_v0},
        {"kappa_kernel_dim", s.kappa_kernel_dim},
        {"kappa_image_dim", s.kappa_image_dim},
        {"kappa_equivariant", s.kappa_equivariant},
    };
}

inline bool passed(const LatticeSuite& s) {
    return s.k_dot_k == 2 && s.pic0_rank == 7 && s.pic0_mod2_dim == 7 && s.radical_is_v0 &&
           s.kappa_kernel_dim == 1 && s.kappa_image_dim == kQbDim && s.kappa_equivariant;
}

}  // namespace quartic_forge
