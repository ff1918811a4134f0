#include "edgeideal/field.hpp"

#include <charconv>

#include "edgeideal/error.hpp"

namespace edgeideal {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    if (p >= (std::uint64_t{1} << 31)) throw DomainError("field characteristic must be below 2^31");
    return FieldSpec{p};
}

FieldSpec FieldSpec::parse(std::string_view text) {
    if (text == "q" || text == "Q") return rationals();
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw DomainError("field must be 'q' or a prime, got '" + std::string(text) + "'");
    }
    return prime(p);
}

std::string FieldSpec::name() const {
    return is_rational() ? "Q" : "GF(" + std::to_string(characteristic_) + ")";
}

}  // namespace edgeideal
