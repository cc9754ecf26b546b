#ifndef MCX_BITSET_HPP
#define MCX_BITSET_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <cstddef>
#include <functional>
#include <vector>

namespace mcx {

// Fixed-width vertex set.  256 bits covers every ground set the library
// accepts (graph vertices, or graph edges viewed as line-graph vertices).
struct VSet {
    static constexpr std::uint32_t kCapacity = 256;

    std::array<std::uint64_t, 4> w{0, 0, 0, 0};

    static VSet singleton(std::uint32_t v) {
        VSet s;
        s.set(v);
        return s;
    }

    static VSet first_n(std::uint32_t n) {
        VSet s;
        for (std::uint32_t v = 0; v < n; ++v) s.set(v);
        return s;
    }

    bool test(std::uint32_t v) const { return (w[v >> 6] >> (v & 63)) & 1u; }
    void set(std::uint32_t v) { w[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset(std::uint32_t v) { w[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    bool empty() const { return (w[0] | w[1] | w[2] | w[3]) == 0; }
    bool any() const { return !empty(); }

    std::uint32_t count() const {
        return static_cast<std::uint32_t>(std::popcount(w[0]) + std::popcount(w[1]) +
                                          std::popcount(w[2]) + std::popcount(w[3]));
    }

    // Lowest element; caller guarantees the set is nonempty.
    std::uint32_t lowest() const {
        for (int i = 0; i < 4; ++i)
            if (w[i]) return static_cast<std::uint32_t>(64 * i + std::countr_zero(w[i]));
        return kCapacity;
    }

    VSet operator|(const VSet& o) const {
        return VSet{{w[0] | o.w[0], w[1] | o.w[1], w[2] | o.w[2], w[3] | o.w[3]}};
    }
    VSet operator&(const VSet& o) const {
        return VSet{{w[0] & o.w[0], w[1] & o.w[1], w[2] & o.w[2], w[3] & o.w[3]}};
    }
    // Set difference: elements of *this not in o.
    VSet minus(const VSet& o) const {
        return VSet{{w[0] & ~o.w[0], w[1] & ~o.w[1], w[2] & ~o.w[2], w[3] & ~o.w[3]}};
    }
    VSet& operator|=(const VSet& o) {
        for (int i = 0; i < 4; ++i) w[i] |= o.w[i];
        return *this;
    }
    VSet& operator&=(const VSet& o) {
        for (int i = 0; i < 4; ++i) w[i] &= o.w[i];
        return *this;
    }

    bool operator==(const VSet& o) const { return w == o.w; }
    bool operator!=(const VSet& o) const { return w != o.w; }

    bool is_subset_of(const VSet& o) const {
        return ((w[0] & ~o.w[0]) | (w[1] & ~o.w[1]) | (w[2] & ~o.w[2]) | (w[3] & ~o.w[3])) == 0;
    }
    bool intersects(const VSet& o) const {
        return ((w[0] & o.w[0]) | (w[1] & o.w[1]) | (w[2] & o.w[2]) | (w[3] & o.w[3])) != 0;
    }

    template <class F>
    void for_each(F&& f) const {
        for (int i = 0; i < 4; ++i) {
            std::uint64_t bits = w[i];
            while (bits) {
                f(static_cast<std::uint32_t>(64 * i + std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

    std::vector<std::uint32_t> elements() const {
        std::vector<std::uint32_t> out;
        out.reserve(count());
        for_each([&](std::uint32_t v) { out.push_back(v); });
        return out;
    }
};

// Orders sets as their ascending vertex lists compare lexicographically:
// {0,2} < {0,3} < {1} < {1,2}.  The smallest element where the sets differ
// decides; a proper prefix sorts first.
inline bool face_less(const VSet& a, const VSet& b) {
    for (int i = 0; i < 4; ++i) {
        std::uint64_t diff = a.w[i] ^ b.w[i];
        if (diff) {
            std::uint64_t low = diff & (~diff + 1);
            return (a.w[i] & low) != 0;
        }
    }
    return false;
}

struct VSetHash {
    std::size_t operator()(const VSet& s) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (std::uint64_t x : s.w) {
            x ^= x >> 30;
            x *= 0xbf58476d1ce4e5b9ull;
            x ^= x >> 27;
            h = (h ^ x) * 0x94d049bb133111ebull;
        }
        return static_cast<std::size_t>(h ^ (h >> 31));
    }
};

} // namespace mcx

#endif // MCX_BITSET_HPP
