#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "agdec/errors.hpp"

namespace agdec {

class Field;

/// One element of a finite field, held as the canonical integer in [0, q).
///
/// The integer encodes the polynomial-basis coordinate vector in base p,
/// so the representation is the same across machines and serializations.
/// Elements keep a raw pointer to their field; the field object must
/// outlive every element drawn from it (fields are shared immutably).
class FieldElement {
  public:
    FieldElement() = default;  // detached null element; arithmetic rejects it
    FieldElement(const Field* field, uint32_t rep) : field_(field), rep_(rep) {}

    uint32_t rep() const { return rep_; }
    const Field* field() const { return field_; }
    bool is_zero() const { return rep_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inv() const;
    FieldElement pow(long long e) const;

    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    bool operator==(const FieldElement& o) const { return field_ == o.field_ && rep_ == o.rep_; }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

  private:
    const Field* field_ = nullptr;
    uint32_t rep_ = 0;
};

/// GF(p^m) with a verified irreducible modulus and, for q <= 2^16,
/// log/antilog tables over a fixed generator of the multiplicative group.
///
/// Immutable after construction; safe to share across threads.
class Field {
  public:
    /// Builds GF(p^m) from a monic modulus over GF(p), coefficients low-to-high
    /// (length m+1).  Throws NotPrime / ReducibleModulus / UnsupportedSize.
    static std::shared_ptr<const Field> make(uint32_t p, uint32_t m,
                                             const std::vector<uint32_t>& modulus);

    /// Prime field GF(p) with the trivial modulus t.
    static std::shared_ptr<const Field> prime(uint32_t p);

    /// Catalog field GF(q) for q in {2,3,4,5,7,8,9,16,64,...}: prime q uses the
    /// prime field, the listed prime powers use fixed Conway-style moduli.
    static std::shared_ptr<const Field> gf(uint32_t q);

    uint32_t characteristic() const { return p_; }
    uint32_t degree() const { return m_; }
    uint64_t order() const { return q_; }
    const std::vector<uint32_t>& modulus() const { return modulus_; }
    bool has_tables() const { return !exp_.empty(); }
    uint32_t generator_rep() const { return generator_; }

    FieldElement zero() const { return {this, 0}; }
    FieldElement one() const { return {this, 1}; }
    FieldElement element(uint64_t rep) const;
    FieldElement from_int(long long v) const;  // value reduced into the prime subfield

    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;
    uint32_t pow(uint32_t a, long long e) const;

    /// Polynomial multiply-and-reduce path, independent of the tables.
    /// Kept public so tests can cross-check the two multiplication routes.
    uint32_t mul_schoolbook(uint32_t a, uint32_t b) const;

    std::vector<FieldElement> all_elements() const;

  private:
    Field(uint32_t p, uint32_t m, std::vector<uint32_t> modulus);

    void build_tables();

    uint32_t p_, m_;
    uint64_t q_;
    std::vector<uint32_t> modulus_;
    uint32_t generator_ = 0;
    std::vector<uint32_t> exp_;  // exp_[i] = g^i, i in [0, q-1)
    std::vector<uint32_t> log_;  // log_[exp_[i]] = i; log_[0] unused
};

}  // namespace agdec
