#pragma once

// Subsets of an ordered ground set whose elements are labelled 1..63.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mrt {

class ElementSet {
  public:
    static constexpr int kMaxElement = 63;

    constexpr ElementSet() = default;
    ElementSet(std::initializer_list<int> elems) {
        for (int e : elems) insert(e);
    }
    explicit ElementSet(const std::vector<int>& elems) {
        for (int e : elems) insert(e);
    }

    static constexpr ElementSet from_bits(std::uint64_t bits) {
        ElementSet s;
        s.bits_ = bits & ~std::uint64_t{1};
        return s;
    }
    /// {1, ..., n}
    static ElementSet range(int n) {
        check(n == 0 ? 1 : n);
        if (n == kMaxElement) return from_bits(~std::uint64_t{0});
        return from_bits(n == 0 ? 0 : ((std::uint64_t{1} << (n + 1)) - 2));
    }

    [[nodiscard]] constexpr std::uint64_t bits() const { return bits_; }
    [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
    [[nodiscard]] constexpr int size() const { return std::popcount(bits_); }
    [[nodiscard]] constexpr bool contains(int e) const {
        return e >= 1 && e <= kMaxElement && ((bits_ >> e) & 1U);
    }
    /// Smallest element; the set must be nonempty.
    [[nodiscard]] int min() const {
        if (empty()) throw std::logic_error("ElementSet::min of empty set");
        return std::countr_zero(bits_);
    }
    [[nodiscard]] int max() const {
        if (empty()) throw std::logic_error("ElementSet::max of empty set");
        return 63 - std::countl_zero(bits_);
    }

    void insert(int e) {
        check(e);
        bits_ |= std::uint64_t{1} << e;
    }
    void erase(int e) {
        check(e);
        bits_ &= ~(std::uint64_t{1} << e);
    }
    [[nodiscard]] ElementSet with(int e) const {
        ElementSet s = *this;
        s.insert(e);
        return s;
    }
    [[nodiscard]] ElementSet without(int e) const {
        ElementSet s = *this;
        s.erase(e);
        return s;
    }

    [[nodiscard]] constexpr bool subset_of(ElementSet o) const { return (bits_ & ~o.bits_) == 0; }
    [[nodiscard]] constexpr bool proper_subset_of(ElementSet o) const {
        return subset_of(o) && bits_ != o.bits_;
    }

    friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return from_bits(a.bits_ | b.bits_); }
    friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return from_bits(a.bits_ & b.bits_); }
    friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return from_bits(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(ElementSet a, ElementSet b) = default;

    /// Ascending element list.
    [[nodiscard]] std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

    /// Position of e among the ascending elements, or -1.
    [[nodiscard]] int index_of(int e) const {
        if (!contains(e)) return -1;
        return std::popcount(bits_ & ((std::uint64_t{1} << e) - 1));
    }

    /// "{1,2,3}"
    [[nodiscard]] std::string str() const {
        std::string s = "{";
        bool first = true;
        for (int e : elements()) {
            if (!first) s += ',';
            s += std::to_string(e);
            first = false;
        }
        return s + "}";
    }

    /// Canonical ordering: by size, then lexicographically on the ascending
    /// element sequences.
    struct SizeLexLess {
        bool operator()(ElementSet a, ElementSet b) const {
            if (a.size() != b.size()) return a.size() < b.size();
            return lex_less(a, b);
        }
    };
    /// Lexicographic order on ascending element sequences.
    static bool lex_less(ElementSet a, ElementSet b) {
        const auto ea = a.elements(), eb = b.elements();
        return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
    }

    friend std::ostream& operator<<(std::ostream& os, ElementSet s) { return os << s.str(); }

  private:
    static void check(int e) {
        if (e < 1 || e > kMaxElement)
            throw std::out_of_range("element label " + std::to_string(e) + " outside 1..63");
    }

    std::uint64_t bits_ = 0;
};

/// Invokes f on every subset of `s` (including the empty set and `s`).
template <typename F>
void for_each_subset(ElementSet s, F&& f) {
    const std::uint64_t full = s.bits();
    std::uint64_t sub = 0;
    for (;;) {
        f(ElementSet::from_bits(sub));
        if (sub == full) break;
        sub = (sub - full) & full;
    }
}

/// Invokes f on every k-element subset of `s`, in lexicographic order.
template <typename F>
void for_each_k_subset(ElementSet s, int k, F&& f) {
    const auto elems = s.elements();
    const int n = static_cast<int>(elems.size());
    if (k < 0 || k > n) return;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    for (;;) {
        ElementSet sub;
        for (int i : idx) sub.insert(elems[static_cast<std::size_t>(i)]);
        f(sub);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

}  // namespace mrt

template <>
struct std::hash<mrt::ElementSet> {
    std::size_t operator()(mrt::ElementSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};
