#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace edgeideal {

/// Coefficient field: the rationals, or GF(p) for a prime p < 2^31.
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec{0}; }
    /// Throws DomainError unless p is a prime below 2^31.
    static FieldSpec prime(std::uint64_t p);
    /// Accepts "q"/"Q" for the rationals or a decimal prime.
    static FieldSpec parse(std::string_view text);

    bool is_rational() const { return characteristic_ == 0; }
    std::uint64_t characteristic() const { return characteristic_; }
    /// "Q" or "GF(p)".
    std::string name() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    explicit FieldSpec(std::uint64_t c) : characteristic_(c) {}
    std::uint64_t characteristic_ = 0;
};

bool is_prime(std::uint64_t n);

}  // namespace edgeideal
