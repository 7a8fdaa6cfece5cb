#pragma once

// Q[t]/(f) with canonical remainder representatives. Only ring operations:
// no pipeline step needs inverses.

#include <memory>
#include <utility>

#include "error.hpp"
#include "unipoly.hpp"

namespace quartic_forge {

class NfElem {
public:
    NfElem(UniPoly rep, std::shared_ptr<const UniPoly> modulus)
        : modulus_(std::move(modulus)) {
        if (!modulus_ || !modulus_->is_monic() || modulus_->degree() < 1) {
            throw Error(ErrorCode::InvalidArgument, "modulus must be monic of degree >= 1");
        }
        rep_ = poly_rem(rep, *modulus_);
    }

    [[nodiscard]] const UniPoly& rep() const noexcept { return rep_; }
    [[nodiscard]] const UniPoly& modulus() const noexcept { return *modulus_; }
    [[nodiscard]] bool is_zero() const noexcept { return rep_.is_zero(); }

    friend NfElem nf_add(const NfElem& a, const NfElem& b) {
        check_same(a, b);
        return NfElem(a.rep_ + b.rep_, a.modulus_);
    }
    friend NfElem nf_sub(const NfElem& a, const NfElem& b) {
        check_same(a, b);
        return NfElem(a.rep_ - b.rep_, a.modulus_);
    }
    friend NfElem nf_mul(const NfElem& a, const NfElem& b) {
        check_same(a, b);
        return NfElem(a.rep_ * b.rep_, a.modulus_);
    }

    friend NfElem operator+(const NfElem& a, const NfElem& b) { return nf_add(a, b); }
    friend NfElem operator-(const NfElem& a, const NfElem& b) { return nf_sub(a, b); }
    friend NfElem operator*(const NfElem& a, const NfElem& b) { return nf_mul(a, b); }
    friend bool operator==(const NfElem& a, const NfElem& b) {
        return same_modulus(a, b) && a.rep_ == b.rep_;
    }

private:
    static bool same_modulus(const NfElem& a, const NfElem& b) {
        return a.modulus_ == b.modulus_ || *a.modulus_ == *b.modulus_;
    }
    static void check_same(const NfElem& a, const NfElem& b) {
        if (!same_modulus(a, b)) throw Error(ErrorCode::ModulusMismatch, "quotient ring elements with different moduli");
    }

    UniPoly rep_;
    std::shared_ptr<const UniPoly> modulus_;
};

inline NfElem nf_reduce(const UniPoly& a, std::shared_ptr<const UniPoly> f) { return NfElem(a, std::move(f)); }

inline NfElem nf_reduce(const UniPoly& a, const UniPoly& f) {
    return NfElem(a, std::make_shared<const UniPoly>(f));
}

}  // namespace quartic_forge
