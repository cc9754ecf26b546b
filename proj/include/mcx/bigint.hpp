#ifndef MCX_BIGINT_HPP
#define MCX_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace mcx {

// Sign-magnitude arbitrary-precision integer.  Covers what exact
// elimination and independent-set counting need: ring arithmetic,
// comparison, exact division, decimal printing.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    bool operator==(const BigInt& o) const { return sign_ == o.sign_ && mag_ == o.mag_; }
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const;

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }

    // Truncated division; remainder has the dividend's sign.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

    // Division known to be exact; checked, so a nonzero remainder is a bug.
    BigInt div_exact(const BigInt& d) const;

    // |this| compared to |o|: -1, 0, +1.
    int cmp_abs(const BigInt& o) const;

    bool fits_int64(long long& out) const;
    std::string to_string() const;

    std::size_t limb_count() const { return mag_.size(); }

private:
    int sign_ = 0;                    // -1, 0, +1
    std::vector<std::uint64_t> mag_;  // little-endian, no leading zero limbs

    void trim();
    static std::vector<std::uint64_t> add_mag(const std::vector<std::uint64_t>& a,
                                              const std::vector<std::uint64_t>& b);
    // Requires |a| >= |b|.
    static std::vector<std::uint64_t> sub_mag(const std::vector<std::uint64_t>& a,
                                              const std::vector<std::uint64_t>& b);
    static std::vector<std::uint64_t> mul_mag(const std::vector<std::uint64_t>& a,
                                              const std::vector<std::uint64_t>& b);
    static int cmp_mag(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b);
};

} // namespace mcx

#endif // MCX_BIGINT_HPP
