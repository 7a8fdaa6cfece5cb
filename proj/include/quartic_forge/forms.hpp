#pragma once

// Homogeneous forms in x, y, z over Q and the plane geometry attached to a
// septic f: the orbit B_f = {(α^3 : α : 1) : f(α) = 0}, the cubics u, v, w
// spanning the forms through B_f, and the branch sextic det ∂(u,v,w)/∂(x,y,z).
// Points of B_f are never materialized; vanishing on B_f is tested by
// substituting (t^3, t, 1) and reducing mod f.

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>

#include <json.hpp>

#include "error.hpp"
#include "number_field.hpp"
#include "rational.hpp"
#include "resolvent.hpp"
#include "unipoly.hpp"

namespace quartic_forge {

using Exponents = std::array<int, 3>;

/// Homogeneous trivariate form. Terms are kept in graded-lex order with
/// x > y > z (all terms share the total degree, so this is plain lex).
class TriForm {
public:
    using TermMap = std::map<Exponents, Rat, std::greater<>>;

    explicit TriForm(int degree) : degree_(degree) {
        if (degree < 0) throw Error(ErrorCode::InvalidArgument, "negative form degree");
    }

    static TriForm monomial(const Rat& c, int i, int j, int k) {
        TriForm f(i + j + k);
        f.add_term({i, j, k}, c);
        return f;
    }

    [[nodiscard]] int degree() const noexcept { return degree_; }
    [[nodiscard]] const TermMap& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] Rat coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add_term(const Exponents& e, const Rat& c) {
        if (e[0] < 0 || e[1] < 0 || e[2] < 0 || e[0] + e[1] + e[2] != degree_) {
            throw Error(ErrorCode::InvalidArgument, "term degree does not match form degree");
        }
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend TriForm operator+(TriForm a, const TriForm& b) {
        check_same_degree(a, b);
        for (const auto& [e, c] : b.terms_) a.add_term(e, c);
        return a;
    }
    friend TriForm operator-(TriForm a, const TriForm& b) {
        check_same_degree(a, b);
        for (const auto& [e, c] : b.terms_) a.add_term(e, -c);
        return a;
    }
    friend TriForm operator*(const Rat& s, const TriForm& a) {
        TriForm out(a.degree_);
        for (const auto& [e, c] : a.terms_) out.add_term(e, s * c);
        return out;
    }
    friend TriForm operator*(const TriForm& a, const TriForm& b) {
        TriForm out(a.degree_ + b.degree_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
        }
        return out;
    }
    friend bool operator==(const TriForm& a, const TriForm& b) {
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

    /// ∂/∂x (var 0), ∂/∂y (var 1), ∂/∂z (var 2). The derivative of a constant
    /// form is the zero form of degree 0.
    [[nodiscard]] TriForm partial(int var) const {
        if (var < 0 || var > 2) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
        TriForm out(degree_ > 0 ? degree_ - 1 : 0);
        for (const auto& [e, c] : terms_) {
            if (e[static_cast<std::size_t>(var)] == 0) continue;
            Exponents d = e;
            d[static_cast<std::size_t>(var)] -= 1;
            out.add_term(d, c * e[static_cast<std::size_t>(var)]);
        }
        return out;
    }

    /// Swaps two variables.
    [[nodiscard]] TriForm swapped(int a, int b) const {
        TriForm out(degree_);
        for (const auto& [e, c] : terms_) {
            Exponents s = e;
            std::swap(s[static_cast<std::size_t>(a)], s[static_cast<std::size_t>(b)]);
            out.add_term(s, c);
        }
        return out;
    }

    /// q(t^3, t, 1) as a univariate polynomial.
    [[nodiscard]] UniPoly on_twisted_cubic() const {
        UniPoly acc;
        for (const auto& [e, c] : terms_) acc += UniPoly::monomial(c, static_cast<std::size_t>(3 * e[0] + e[1]));
        return acc;
    }

    [[nodiscard]] Rat evaluate(const Rat& x, const Rat& y, const Rat& z) const {
        Rat acc = 0;
        for (const auto& [e, c] : terms_) {
            acc += c * rat_pow(x, static_cast<unsigned>(e[0])) * rat_pow(y, static_cast<unsigned>(e[1])) *
                   rat_pow(z, static_cast<unsigned>(e[2]));
        }
        return acc;
    }

    [[nodiscard]] std::string to_string() const {
        if (terms_.empty()) return "0";
        static constexpr std::array<char, 3> names{'x', 'y', 'z'};
        std::string out;
        for (const auto& [e, c] : terms_) {
            Rat mag = c < 0 ? Rat(-c) : c;
            if (out.empty()) {
                if (c < 0) out += "-";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            std::string mono;
            for (std::size_t v = 0; v < 3; ++v) {
                if (e[v] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += names[v];
                if (e[v] > 1) mono += "^" + std::to_string(e[v]);
            }
            if (mono.empty()) {
                out += to_display(mag);
            } else {
                if (mag != 1) out += to_display(mag) + "*";
                out += mono;
            }
        }
        return out;
    }

private:
    static void check_same_degree(const TriForm& a, const TriForm& b) {
        if (a.degree_ != b.degree_) throw Error(ErrorCode::InvalidArgument, "adding forms of different degrees");
    }

    int degree_;
    TermMap terms_;
};

inline nlohmann::json to_json(const TriForm& q) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : q.terms()) terms.push_back({{"exponents", e}, {"coefficient", to_canonical(c)}});
    return {{"degree", q.degree()}, {"terms", terms}};
}

inline TriForm triform_from_json(const nlohmann::json& j) {
    TriForm q(j.at("degree").get<int>());
    for (const auto& t : j.at("terms")) {
        q.add_term(t.at("exponents").get<Exponents>(), parse_rat(t.at("coefficient").get<std::string>()));
    }
    return q;
}

/// The orbit B_f of a separable septic. Keeps the raw coefficients (for the
/// v template) next to the monic normalization (for root-symmetric work).
class OrbitB {
public:
    explicit OrbitB(UniPoly f) : original_(std::move(f)) {
        if (original_.degree() != 7) throw Error(ErrorCode::WrongDegree, "orbit needs a degree-7 polynomial");
        if (discriminant(original_) == 0) throw Error(ErrorCode::Inseparable, "f has a repeated root");
        monic_ = std::make_shared<const UniPoly>(original_.monic());
    }

    [[nodiscard]] const UniPoly& original() const noexcept { return original_; }
    [[nodiscard]] const UniPoly& monic() const noexcept { return *monic_; }
    [[nodiscard]] const std::shared_ptr<const UniPoly>& modulus() const noexcept { return monic_; }

private:
    UniPoly original_;
    std::shared_ptr<const UniPoly> monic_;
};

struct GeneralPositionCert {
    bool no_three_collinear = false;
    Rat resolvent_at_zero;       // R3(0)
    bool no_six_on_conic = false;
    Rat root_sum;                // -c6/c7
    Rat f_at_root_sum;           // f(-c6/c7)

    [[nodiscard]] bool valid() const noexcept { return no_three_collinear && no_six_on_conic; }
};

inline GeneralPositionCert general_position_certificate(const OrbitB& b) {
    GeneralPositionCert cert;
    cert.resolvent_at_zero = triple_sum_resolvent_at_zero(b.monic());
    cert.no_three_collinear = cert.resolvent_at_zero != 0;
    cert.root_sum = root_sum(b.original());
    cert.f_at_root_sum = b.original()(cert.root_sum);
    cert.no_six_on_conic = cert.f_at_root_sum != 0;
    return cert;
}

inline nlohmann::json to_json(const GeneralPositionCert& c) {
    return {
        {"valid", c.valid()},
        {"no_three_collinear", c.no_three_collinear},
        {"resolvent_at_zero", to_display(c.resolvent_at_zero)},
        {"no_six_on_conic", c.no_six_on_conic},
        {"root_sum", to_display(c.root_sum)},
        {"f_at_root_sum", to_display(c.f_at_root_sum)},
    };
}

struct CubicBasis {
    TriForm u{3};
    TriForm v{3};
    TriForm w{3};
    UniPoly h;  // t^9 mod f
};

/// u = xz^2 - y^3, v = Σ c_i (monomial with value t^i on (t^3, t, 1)),
/// w = x^3 - Σ d_i (same monomials) where h = Σ d_i t^i = t^9 mod f.
inline CubicBasis cubic_basis(const UniPoly& f) {
    if (f.degree() != 7) throw Error(ErrorCode::WrongDegree, "cubic basis needs a degree-7 polynomial");
    // monomial of degree 3 evaluating to t^i on the twisted cubic, i = 0..7
    static constexpr std::array<Exponents, 8> kMono{{
        {0, 0, 3}, {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 1, 1}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
    }};
    CubicBasis basis;
    basis.u.add_term({1, 0, 2}, 1);
    basis.u.add_term({0, 3, 0}, -1);
    for (std::size_t i = 0; i <= 7; ++i) basis.v.add_term(kMono[i], f.coeff(i));
    basis.h = poly_rem(UniPoly::monomial(1, 9), f);
    basis.w.add_term({3, 0, 0}, 1);
    for (std::size_t i = 0; i <= 6; ++i) basis.w.add_term(kMono[i], -basis.h.coeff(i));
    return basis;
}

/// True iff q vanishes at every point of B_f: q(t^3, t, 1) ≡ 0 mod f.
inline bool verify_vanishing(const TriForm& q, const OrbitB& b) {
    return nf_reduce(q.on_twisted_cubic(), b.modulus()).is_zero();
}

inline TriForm jacobian_determinant(const TriForm& u, const TriForm& v, const TriForm& w) {
    std::array<std::array<TriForm, 3>, 3> m{{
        {u.partial(0), u.partial(1), u.partial(2)},
        {v.partial(0), v.partial(1), v.partial(2)},
        {w.partial(0), w.partial(1), w.partial(2)},
    }};
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

/// det of the 3x3 matrix of first partials of three cubics: a sextic. Over a
/// field of characteristic 3 this construction is not the branch curve; over
/// Q that never arises.
inline TriForm branch_sextic(const TriForm& u, const TriForm& v, const TriForm& w) {
    if (u.degree() != 3 || v.degree() != 3 || w.degree() != 3) {
        throw Error(ErrorCode::InvalidArgument, "branch sextic needs three cubic forms");
    }
    return jacobian_determinant(u, v, w);
}

}  // namespace quartic_forge
