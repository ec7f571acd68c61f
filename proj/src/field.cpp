#include "lrc/field.hpp"

namespace lrc {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t i = 5; i * i <= n; i += 6) {
        if (n % i == 0 || n % (i + 2) == 0) return false;
    }
    return true;
}

std::uint32_t next_prime_after(std::uint32_t n) {
    std::uint64_t c = static_cast<std::uint64_t>(n) + 1;
    while (!is_prime(c)) ++c;
    if (c > 0x7fffffffULL) throw std::invalid_argument("no prime in range above " + std::to_string(n));
    return static_cast<std::uint32_t>(c);
}

FieldSpec::FieldSpec(std::uint32_t q) : q_(q) {
    if (q > 0x80000000u || !is_prime(q)) {
        throw std::invalid_argument("field size must be a prime <= 2^31, got " + std::to_string(q));
    }
}

std::uint32_t FieldSpec::add(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t s = static_cast<std::uint64_t>(a) + b;
    if (s >= q_) s -= q_;
    return static_cast<std::uint32_t>(s);
}

std::uint32_t FieldSpec::sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : static_cast<std::uint32_t>(a + static_cast<std::uint64_t>(q_) - b);
}

std::uint32_t FieldSpec::mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % q_);
}

std::uint32_t FieldSpec::neg(std::uint32_t a) const {
    return a == 0 ? 0 : q_ - a;
}

std::uint32_t FieldSpec::pow(std::uint32_t a, std::uint64_t e) const {
    // square and multiply
    std::uint64_t base = a % q_, acc = 1 % q_;
    while (e > 0) {
        if (e & 1) acc = acc * base % q_;
        base = base * base % q_;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
}

std::uint32_t FieldSpec::inv(std::uint32_t a) const {
    if (a == 0) throw DivisionByZeroError("inverse of zero in GF(" + std::to_string(q_) + ")");
    // extended Euclid on (a, q); q prime so gcd = 1
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = q_, new_r = a % q_;
    while (new_r != 0) {
        std::int64_t quot = r / new_r;
        std::int64_t tmp = t - quot * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - quot * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += q_;
    return static_cast<std::uint32_t>(t);
}

std::uint32_t FieldSpec::reduce(std::int64_t v) const {
    std::int64_t m = v % static_cast<std::int64_t>(q_);
    if (m < 0) m += q_;
    return static_cast<std::uint32_t>(m);
}

FieldElement::FieldElement(FieldSpec spec, std::uint32_t value) : spec_(spec), value_(value) {
    if (value >= spec.q()) {
        throw std::invalid_argument("element value " + std::to_string(value) + " outside GF(" +
                                    std::to_string(spec.q()) + ")");
    }
}

void FieldElement::check_same_field(const FieldElement& rhs) const {
    if (!(spec_ == rhs.spec_)) {
        throw FieldMismatchError("mixed fields GF(" + std::to_string(spec_.q()) + ") and GF(" +
                                 std::to_string(rhs.spec_.q()) + ")");
    }
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    check_same_field(rhs);
    return {spec_, spec_.add(value_, rhs.value_)};
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
    check_same_field(rhs);
    return {spec_, spec_.sub(value_, rhs.value_)};
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    check_same_field(rhs);
    return {spec_, spec_.mul(value_, rhs.value_)};
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
    check_same_field(rhs);
    return {spec_, spec_.mul(value_, spec_.inv(rhs.value_))};
}

FieldElement FieldElement::operator-() const {
    return {spec_, spec_.neg(value_)};
}

FieldElement FieldElement::pow(std::uint64_t e) const {
    return {spec_, spec_.pow(value_, e)};
}

FieldElement FieldElement::inv() const {
    return {spec_, spec_.inv(value_)};
}

}  // namespace lrc
