#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "swc/common.hpp"

namespace swc {

/* A small finite field F_q, q = p^k <= 16.  Elements are integers in [0,q)
 * whose base-p digits are the coefficients of the residue polynomial
 * (digit i = coefficient of x^i).  Multiplication goes through log/antilog
 * tables over a primitive element; addition is a precomputed table. */
struct FieldSpec {
    int p = 2;
    int k = 1;
    std::vector<int> modulus;  // monic, degree k, coefficient list c0..ck
};

class Field {
public:
    explicit Field(const FieldSpec& spec);
    static std::shared_ptr<const Field> make(int p, int k);  // default modulus

    int p() const { return spec_.p; }
    int k() const { return spec_.k; }
    int q() const { return q_; }
    const FieldSpec& spec() const { return spec_; }

    uint8_t add(uint8_t a, uint8_t b) const { return add_[a * q_ + b]; }
    uint8_t sub(uint8_t a, uint8_t b) const { return add_[a * q_ + neg_[b]]; }
    uint8_t neg(uint8_t a) const { return neg_[a]; }
    uint8_t mul(uint8_t a, uint8_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[(log_[a] + log_[b]) % (q_ - 1)];
    }
    uint8_t inv(uint8_t a) const;
    uint8_t generator() const { return exp_[1]; }

private:
    FieldSpec spec_;
    int q_;
    std::vector<uint8_t> add_;   // q*q addition table
    std::vector<uint8_t> neg_;   // additive inverses
    std::vector<int> log_;       // discrete log base generator, index 1..q-1
    std::vector<uint8_t> exp_;   // powers of the generator, length q-1
};

/* Default irreducible modulus for F_{p^k}, p^k <= 16. */
std::vector<int> default_modulus(int p, int k);

}  // namespace swc
