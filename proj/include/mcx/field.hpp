#ifndef MCX_FIELD_HPP
#define MCX_FIELD_HPP

#include <cstdint>
#include <string>

#include "mcx/error.hpp"

namespace mcx {

inline bool is_prime_u32(std::uint32_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

// Coefficient field selector: the rationals, or a prime field GF(p).
// Arithmetic is exact in both cases.
struct FieldSpec {
    enum class Kind { rationals, prime_field };

    Kind kind = Kind::rationals;
    std::uint32_t p = 0;

    static FieldSpec rationals() { return FieldSpec{}; }

    static FieldSpec gf(std::uint32_t p) {
        if (!is_prime_u32(p)) throw invalid_input("FieldSpec: " + std::to_string(p) + " is not prime");
        return FieldSpec{Kind::prime_field, p};
    }

    bool is_rationals() const { return kind == Kind::rationals; }

    bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    std::string to_string() const {
        return is_rationals() ? "q" : "gf:" + std::to_string(p);
    }

    // Accepts the CLI spellings: "q" or "gf:p".
    static FieldSpec parse(const std::string& s) {
        if (s == "q" || s == "Q") return rationals();
        if (s.rfind("gf:", 0) == 0) {
            try {
                unsigned long v = std::stoul(s.substr(3));
                if (v > 0xffffffffull) throw invalid_input("FieldSpec: characteristic too large");
                return gf(static_cast<std::uint32_t>(v));
            } catch (const invalid_input&) {
                throw;
            } catch (...) {
                throw invalid_input("FieldSpec: cannot parse '" + s + "'");
            }
        }
        throw invalid_input("FieldSpec: expected 'q' or 'gf:p', got '" + s + "'");
    }
};

} // namespace mcx

#endif // MCX_FIELD_HPP
