#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace ewh {

/// Exponents over the engine's base dimensions. Canonical base units are
/// kg, kWh, h, $ and m; every magnitude is stored in those.
struct Dimension {
    std::int8_t mass = 0;
    std::int8_t energy = 0;
    std::int8_t time = 0;
    std::int8_t money = 0;
    std::int8_t length = 0;

    constexpr bool operator==(const Dimension&) const = default;

    constexpr Dimension operator*(const Dimension& o) const
    {
        return {static_cast<std::int8_t>(mass + o.mass), static_cast<std::int8_t>(energy + o.energy),
                static_cast<std::int8_t>(time + o.time), static_cast<std::int8_t>(money + o.money),
                static_cast<std::int8_t>(length + o.length)};
    }
    constexpr Dimension operator/(const Dimension& o) const
    {
        return {static_cast<std::int8_t>(mass - o.mass), static_cast<std::int8_t>(energy - o.energy),
                static_cast<std::int8_t>(time - o.time), static_cast<std::int8_t>(money - o.money),
                static_cast<std::int8_t>(length - o.length)};
    }
    constexpr Dimension pow(int n) const
    {
        return {static_cast<std::int8_t>(mass * n), static_cast<std::int8_t>(energy * n),
                static_cast<std::int8_t>(time * n), static_cast<std::int8_t>(money * n),
                static_cast<std::int8_t>(length * n)};
    }
    constexpr bool dimensionless() const { return *this == Dimension{}; }

    /// Canonical unit expression, e.g. "$*h/kg" or "h^2/m^5". Parseable by Unit::parse.
    std::string canonical_unit() const;
};

namespace dims {
inline constexpr Dimension none{};
inline constexpr Dimension mass{1, 0, 0, 0, 0};
inline constexpr Dimension energy{0, 1, 0, 0, 0};
inline constexpr Dimension time{0, 0, 1, 0, 0};
inline constexpr Dimension money{0, 0, 0, 1, 0};
inline constexpr Dimension length{0, 0, 0, 0, 1};
inline constexpr Dimension volume = length.pow(3);
inline constexpr Dimension power = energy / time;
inline constexpr Dimension mass_flow = mass / time;
inline constexpr Dimension volume_flow = volume / time;
inline constexpr Dimension money_rate = money / time;
}  // namespace dims

class Quantity;

/// A scale factor to canonical units plus a dimension.
struct Unit {
    double factor = 1.0;
    Dimension dim{};

    constexpr Unit operator*(const Unit& o) const { return {factor * o.factor, dim * o.dim}; }
    constexpr Unit operator/(const Unit& o) const { return {factor / o.factor, dim / o.dim}; }

    /// Parses expressions such as "kWh/m3", "$/(m^3/h)", "h²/m⁵", "g/kWh".
    /// Throws DimensionError on unknown symbols or malformed syntax.
    static Unit parse(std::string_view text);
};

namespace units {
inline constexpr Unit one{1.0, dims::none};
inline constexpr Unit kg{1.0, dims::mass};
inline constexpr Unit g{1e-3, dims::mass};
inline constexpr Unit ton{1e3, dims::mass};
inline constexpr Unit kWh{1.0, dims::energy};
inline constexpr Unit h{1.0, dims::time};
inline constexpr Unit day{24.0, dims::time};
inline constexpr Unit usd{1.0, dims::money};
inline constexpr Unit musd{1e6, dims::money};
inline constexpr Unit m{1.0, dims::length};
inline constexpr Unit km{1e3, dims::length};
inline constexpr Unit m3{1.0, dims::volume};
inline constexpr Unit kW = kWh / h;
inline constexpr Unit W{1e-3, dims::power};
inline constexpr Unit MW{1e3, dims::power};
}  // namespace units

/// A finite magnitude in canonical units tagged with its dimension. Adding or
/// comparing quantities of different dimensions throws DimensionError.
class Quantity {
public:
    constexpr Quantity() = default;
    Quantity(double canonical, Dimension dim);
    Quantity(double magnitude, const Unit& unit) : Quantity(magnitude * unit.factor, unit.dim) {}

    /// "500 MW", "0.2 M$/(m3/h)", "0.05". A bare number is dimensionless.
    static Quantity parse(std::string_view text);

    double value() const noexcept { return value_; }
    Dimension dimension() const noexcept { return dim_; }

    double in(const Unit& unit) const;
    double in(std::string_view unit) const { return in(Unit::parse(unit)); }

    /// Throws DimensionError unless this quantity has dimension `expected`.
    const Quantity& require(Dimension expected, std::string_view what) const;

    Quantity operator-() const { return {-value_, dim_}; }
    Quantity operator+(const Quantity& o) const;
    Quantity operator-(const Quantity& o) const;
    Quantity operator*(const Quantity& o) const { return {value_ * o.value_, dim_ * o.dim_}; }
    Quantity operator/(const Quantity& o) const { return {value_ / o.value_, dim_ / o.dim_}; }
    Quantity operator*(double s) const { return {value_ * s, dim_}; }
    Quantity operator/(double s) const { return {value_ / s, dim_}; }
    friend Quantity operator*(double s, const Quantity& q) { return q * s; }

    Quantity& operator+=(const Quantity& o) { return *this = *this + o; }

    bool operator==(const Quantity& o) const;
    bool operator<(const Quantity& o) const;
    bool operator<=(const Quantity& o) const { return !(o < *this); }
    bool operator>(const Quantity& o) const { return o < *this; }
    bool operator>=(const Quantity& o) const { return !(*this < o); }

    /// "<magnitude> <unit>" with the shortest round-trip decimal representation.
    std::string format(std::string_view unit) const;

private:
    double value_ = 0.0;
    Dimension dim_{};
};

inline Quantity operator*(double magnitude, const Unit& unit) { return {magnitude, unit}; }

/// Shortest decimal string that parses back to exactly `v`; '.' separator
/// regardless of locale.
std::string format_double(double v);

}  // namespace ewh
