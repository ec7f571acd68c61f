// field.hpp -- exact arithmetic in prime fields GF(q).
//
// FieldSpec carries q and performs modular arithmetic on canonical
// representatives in [0, q).  FieldElement wraps a value together with its
// field so mixed-field arithmetic is rejected instead of silently wrong.
// Both are immutable values; every operation is pure.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lrc {

// Arithmetic between elements of different fields.
struct FieldMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Inversion or division by the zero element.
struct DivisionByZeroError : std::domain_error {
    using std::domain_error::domain_error;
};

bool is_prime(std::uint64_t n);

// Smallest prime strictly greater than n.
std::uint32_t next_prime_after(std::uint32_t n);

class FieldSpec {
  public:
    // q must be prime (trial division); q <= 2^31 so products fit in 64 bits.
    explicit FieldSpec(std::uint32_t q);

    std::uint32_t q() const { return q_; }
    bool operator==(const FieldSpec&) const = default;

    // Raw operations on canonical values in [0, q).
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
    std::uint32_t inv(std::uint32_t a) const;  // throws DivisionByZeroError for a = 0

    // Canonical representative of an arbitrary signed integer.
    std::uint32_t reduce(std::int64_t v) const;

  private:
    std::uint32_t q_;
};

class FieldElement {
  public:
    FieldElement(FieldSpec spec, std::uint32_t value);

    std::uint32_t value() const { return value_; }
    const FieldSpec& spec() const { return spec_; }

    bool operator==(const FieldElement&) const = default;

    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement operator/(const FieldElement& rhs) const;  // rhs != 0
    FieldElement operator-() const;
    FieldElement pow(std::uint64_t e) const;
    FieldElement inv() const;

  private:
    void check_same_field(const FieldElement& rhs) const;

    FieldSpec spec_;
    std::uint32_t value_;
};

}  // namespace lrc
