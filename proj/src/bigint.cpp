#include "mcx/bigint.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace mcx {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v > 0 ? 1 : -1;
    u64 mag = v > 0 ? static_cast<u64>(v) : ~static_cast<u64>(v) + 1;
    mag_.push_back(mag);
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<u64>& a, const std::vector<u64>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

int BigInt::cmp_abs(const BigInt& o) const { return cmp_mag(mag_, o.mag_); }

bool BigInt::operator<(const BigInt& o) const {
    if (sign_ != o.sign_) return sign_ < o.sign_;
    int c = cmp_mag(mag_, o.mag_);
    return sign_ >= 0 ? c < 0 : c > 0;
}

std::vector<u64> BigInt::add_mag(const std::vector<u64>& a, const std::vector<u64>& b) {
    const std::vector<u64>& lo = a.size() >= b.size() ? a : b;
    const std::vector<u64>& hi = a.size() >= b.size() ? b : a;
    std::vector<u64> out(lo.size() + 1, 0);
    u64 carry = 0;
    for (std::size_t i = 0; i < lo.size(); ++i) {
        u128 s = static_cast<u128>(lo[i]) + (i < hi.size() ? hi[i] : 0) + carry;
        out[i] = static_cast<u64>(s);
        carry = static_cast<u64>(s >> 64);
    }
    out[lo.size()] = carry;
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<u64> BigInt::sub_mag(const std::vector<u64>& a, const std::vector<u64>& b) {
    std::vector<u64> out(a.size(), 0);
    u64 borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        u64 bi = i < b.size() ? b[i] : 0;
        u64 t = a[i] - bi;
        u64 borrow2 = a[i] < bi;
        out[i] = t - borrow;
        borrow = borrow2 | (t < borrow);
    }
    assert(borrow == 0);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<u64> BigInt::mul_mag(const std::vector<u64>& a, const std::vector<u64>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<u64> out(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        u64 carry = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            u128 cur = static_cast<u128>(a[i]) * b[j] + out[i + j] + carry;
            out[i + j] = static_cast<u64>(cur);
            carry = static_cast<u64>(cur >> 64);
        }
        out[i + b.size()] += carry;
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    if (sign_ == 0) return o;
    if (o.sign_ == 0) return *this;
    BigInt r;
    if (sign_ == o.sign_) {
        r.sign_ = sign_;
        r.mag_ = add_mag(mag_, o.mag_);
    } else {
        int c = cmp_mag(mag_, o.mag_);
        if (c == 0) return BigInt{};
        if (c > 0) {
            r.sign_ = sign_;
            r.mag_ = sub_mag(mag_, o.mag_);
        } else {
            r.sign_ = o.sign_;
            r.mag_ = sub_mag(o.mag_, mag_);
        }
    }
    r.trim();
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    BigInt r;
    if (sign_ == 0 || o.sign_ == 0) return r;
    r.sign_ = sign_ * o.sign_;
    r.mag_ = mul_mag(mag_, o.mag_);
    r.trim();
    return r;
}

// Knuth algorithm D on 64-bit limbs (magnitudes only).
static void divmod_mag(const std::vector<u64>& a, const std::vector<u64>& b,
                       std::vector<u64>& q, std::vector<u64>& r) {
    q.clear();
    r.clear();
    if (b.empty()) throw std::domain_error("BigInt: division by zero");
    if (a.empty()) return;
    if (b.size() == 1) {
        u64 d = b[0];
        q.assign(a.size(), 0);
        u128 rem = 0;
        for (std::size_t i = a.size(); i-- > 0;) {
            u128 cur = (rem << 64) | a[i];
            q[i] = static_cast<u64>(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        if (rem) r.push_back(static_cast<u64>(rem));
        return;
    }
    if (a.size() < b.size()) {
        r = a;
        return;
    }

    // Normalize so the divisor's top limb has its high bit set.
    int shift = std::countl_zero(b.back());
    std::size_t n = b.size(), m = a.size() - n;
    std::vector<u64> un(a.size() + 1, 0), vn(n, 0);
    if (shift) {
        for (std::size_t i = n; i-- > 1;) vn[i] = (b[i] << shift) | (b[i - 1] >> (64 - shift));
        vn[0] = b[0] << shift;
        un[a.size()] = a.back() >> (64 - shift);
        for (std::size_t i = a.size(); i-- > 1;) un[i] = (a[i] << shift) | (a[i - 1] >> (64 - shift));
        un[0] = a[0] << shift;
    } else {
        vn = b;
        for (std::size_t i = 0; i < a.size(); ++i) un[i] = a[i];
    }

    q.assign(m + 1, 0);
    for (std::size_t j = m + 1; j-- > 0;) {
        u128 top = (static_cast<u128>(un[j + n]) << 64) | un[j + n - 1];
        u128 qhat = top / vn[n - 1];
        u128 rhat = top % vn[n - 1];
        while (qhat >> 64 ||
               qhat * vn[n - 2] > ((rhat << 64) | un[j + n - 2])) {
            --qhat;
            rhat += vn[n - 1];
            if (rhat >> 64) break;
        }

        // Multiply-subtract qhat * vn from un[j..j+n].
        u128 borrow = 0, carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            u128 p = qhat * vn[i] + carry;
            carry = p >> 64;
            u64 sub = static_cast<u64>(p);
            u64 cur = un[i + j];
            u64 nxt = cur - sub;
            u128 b2 = (cur < sub) ? 1 : 0;
            u64 res = nxt - static_cast<u64>(borrow);
            b2 += (nxt < static_cast<u64>(borrow)) ? 1 : 0;
            un[i + j] = res;
            borrow = b2;
        }
        u128 fin = static_cast<u128>(un[j + n]) - carry - borrow;
        un[j + n] = static_cast<u64>(fin);
        if (fin >> 64) {
            // qhat was one too large: add the divisor back.
            --qhat;
            u128 c2 = 0;
            for (std::size_t i = 0; i < n; ++i) {
                u128 s = static_cast<u128>(un[i + j]) + vn[i] + c2;
                un[i + j] = static_cast<u64>(s);
                c2 = s >> 64;
            }
            un[j + n] += static_cast<u64>(c2);
        }
        q[j] = static_cast<u64>(qhat);
    }
    while (!q.empty() && q.back() == 0) q.pop_back();

    r.assign(n, 0);
    if (shift) {
        for (std::size_t i = 0; i < n - 1; ++i) r[i] = (un[i] >> shift) | (un[i + 1] << (64 - shift));
        r[n - 1] = un[n - 1] >> shift;
    } else {
        for (std::size_t i = 0; i < n; ++i) r[i] = un[i];
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    std::vector<u64> qm, rm;
    divmod_mag(a.mag_, b.mag_, qm, rm);
    q.mag_ = std::move(qm);
    r.mag_ = std::move(rm);
    q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
    r.sign_ = r.mag_.empty() ? 0 : a.sign_;
}

BigInt BigInt::div_exact(const BigInt& d) const {
    BigInt q, r;
    divmod(*this, d, q, r);
    if (!r.is_zero()) throw std::domain_error("BigInt: div_exact with nonzero remainder");
    return q;
}

bool BigInt::fits_int64(long long& out) const {
    if (mag_.empty()) {
        out = 0;
        return true;
    }
    if (mag_.size() > 1) return false;
    u64 m = mag_[0];
    if (sign_ > 0) {
        if (m > 0x7fffffffffffffffull) return false;
        out = static_cast<long long>(m);
        return true;
    }
    if (m > 0x8000000000000000ull) return false;
    out = -static_cast<long long>(m - 1) - 1;
    return true;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::vector<u64> cur = mag_;
    std::string digits;
    const u64 chunk = 10000000000000000000ull;  // 10^19
    while (!cur.empty()) {
        u128 rem = 0;
        for (std::size_t i = cur.size(); i-- > 0;) {
            u128 v = (rem << 64) | cur[i];
            cur[i] = static_cast<u64>(v / chunk);
            rem = v % chunk;
        }
        while (!cur.empty() && cur.back() == 0) cur.pop_back();
        u64 part = static_cast<u64>(rem);
        for (int k = 0; k < 19; ++k) {
            digits.push_back(static_cast<char>('0' + part % 10));
            part /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

} // namespace mcx
