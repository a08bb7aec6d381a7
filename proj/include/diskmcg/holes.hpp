#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "diskmcg/errors.hpp"

namespace diskmcg {

// Subset of the inner holes {1..n}, as a bitmask (bit i-1 = hole i).
struct HoleSet {
    uint32_t bits = 0;

    HoleSet() = default;
    explicit HoleSet(uint32_t b) : bits(b) {}
    HoleSet(std::initializer_list<int> holes) {
        for (int h : holes) add(h);
    }

    static HoleSet single(int i) { return HoleSet(1u << (i - 1)); }
    static HoleSet range(int a, int b) {
        HoleSet s;
        for (int i = a; i <= b; ++i) s.add(i);
        return s;
    }
    static HoleSet full(int n) { return range(1, n); }

    void add(int i) { bits |= 1u << (i - 1); }
    bool contains(int i) const { return bits >> (i - 1) & 1u; }
    bool empty() const { return bits == 0; }
    int size() const { return __builtin_popcount(bits); }
    int min() const { return __builtin_ctz(bits) + 1; }
    int max() const { return 32 - __builtin_clz(bits); }
    bool consecutive() const { return bits == ((1u << size()) - 1u) << (min() - 1); }
    bool subset_of(HoleSet o) const { return (bits & ~o.bits) == 0; }
    bool disjoint_from(HoleSet o) const { return (bits & o.bits) == 0; }
    HoleSet united(HoleSet o) const { return HoleSet(bits | o.bits); }

    std::vector<int> holes() const {
        std::vector<int> out;
        for (uint32_t b = bits; b; b &= b - 1) out.push_back(__builtin_ctz(b) + 1);
        return out;
    }

    bool operator==(const HoleSet&) const = default;
    std::strong_ordering operator<=>(const HoleSet&) const = default;
};

inline std::string to_string(HoleSet s) {
    std::string out = "{";
    bool first = true;
    for (int h : s.holes()) {
        if (!first) out += ',';
        out += std::to_string(h);
        first = false;
    }
    return out + "}";
}

}  // namespace diskmcg
