#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <cstring>
#include <functional>
#include <string>

namespace mouldlab {

// A variable symbol: one of u1..u99, the parameter t, the series variable x,
// or an internal scratch variable that never reaches the printer.
//
// Each variable owns a fixed slot in a monomial's exponent array; the slot
// order is also the lexicographic priority (u1 > u2 > ... > u99 > t > x).
class Var {
public:
    static constexpr int kMaxU = 99;
    static constexpr int kSlots = 104;

    static Var u(int index);
    static constexpr Var t() { return Var(kMaxU); }
    static constexpr Var x() { return Var(kMaxU + 1); }
    static constexpr Var aux() { return Var(kMaxU + 2); }
    static Var from_slot(int slot)
    {
        if (slot < 0 || slot >= kSlots)
            throw_bad_slot(slot);
        return Var(slot);
    }

    constexpr int slot() const { return slot_; }
    constexpr bool is_u() const { return slot_ < kMaxU; }
    constexpr int u_index() const { return slot_ + 1; }
    std::string name() const;

    constexpr auto operator<=>(const Var &) const = default;

private:
    [[noreturn]] static void throw_bad_slot(int slot);
    constexpr explicit Var(int slot) : slot_(static_cast<std::uint8_t>(slot)) {}
    std::uint8_t slot_;
};

// Dense exponent vector over all variable slots, compared in graded
// lexicographic order.
class Monomial {
public:
    Monomial() = default;
    static Monomial of(Var v, unsigned exponent = 1);

    unsigned exponent(Var v) const { return e_[v.slot()]; }
    unsigned exponent_at(int slot) const { return e_[slot]; }
    unsigned degree() const { return degree_; }
    // Degree counting only u-variables (t and x have weight zero).
    unsigned u_degree() const;
    bool is_one() const { return degree_ == 0; }
    int highest_slot() const; // -1 for the unit monomial

    Monomial operator*(const Monomial &o) const;
    bool divides(const Monomial &o) const;
    Monomial operator/(const Monomial &o) const;
    static Monomial gcd(const Monomial &a, const Monomial &b);
    Monomial without(Var v) const;
    Monomial with_exponent(Var v, unsigned exponent) const;

    std::strong_ordering operator<=>(const Monomial &o) const
    {
        if (degree_ != o.degree_)
            return degree_ <=> o.degree_;
        int c = std::memcmp(e_.data(), o.e_.data(), e_.size());
        return c <=> 0;
    }
    bool operator==(const Monomial &o) const
    {
        return degree_ == o.degree_ && std::memcmp(e_.data(), o.e_.data(), e_.size()) == 0;
    }

    std::size_t hash() const;
    std::string to_string() const;

    template <class F>
    void for_each(F &&f) const
    {
        if (degree_ == 0)
            return;
        for (int s = 0; s < Var::kSlots; ++s)
            if (e_[s] != 0)
                f(Var::from_slot(s), static_cast<unsigned>(e_[s]));
    }

private:
    std::array<std::uint8_t, Var::kSlots> e_{};
    std::uint16_t degree_ = 0;
};

} // namespace mouldlab

template <>
struct std::hash<mouldlab::Monomial> {
    std::size_t operator()(const mouldlab::Monomial &m) const noexcept { return m.hash(); }
};
