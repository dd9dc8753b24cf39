#include "ewh/quantity.hpp"

#include "ewh/error.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <system_error>

namespace ewh {

ConfigError::ConfigError(std::vector<std::string> issues)
    : Error([&] {
          std::string msg = "invalid configuration:";
          for (const auto& i : issues) {
              msg += "\n  " + i;
          }
          return msg;
      }()),
      issues_(std::move(issues))
{
}

namespace {

const std::map<std::string, Unit, std::less<>>& symbol_table()
{
    static const std::map<std::string, Unit, std::less<>> table = {
        {"kg", units::kg},
        {"g", units::g},
        {"t", units::ton},
        {"ton", units::ton},
        {"tonne", units::ton},
        {"kWh", units::kWh},
        {"Wh", {1e-3, dims::energy}},
        {"MWh", {1e3, dims::energy}},
        {"GWh", {1e6, dims::energy}},
        {"h", units::h},
        {"hr", units::h},
        {"hour", units::h},
        {"day", units::day},
        {"yr", {8760.0, dims::time}},
        {"kW", units::kW},
        {"W", units::W},
        {"MW", units::MW},
        {"GW", {1e6, dims::power}},
        {"$", units::usd},
        {"USD", units::usd},
        {"k$", {1e3, dims::money}},
        {"M$", units::musd},
        {"G$", {1e9, dims::money}},
        {"m", units::m},
        {"km", units::km},
        {"L", {1e-3, dims::volume}},
        {"%", {1e-2, dims::none}},
        {"dimensionless", units::one},
    };
    return table;
}

// Recursive-descent parser over a small unit grammar:
//   expr   := term (('*' | '·' | '/') term)*
//   term   := factor ['^' ['-'] digits]
//   factor := '(' expr ')' | '1' | symbol [digits | superscripts]
class UnitParser {
public:
    explicit UnitParser(std::string_view text) : text_(text) {}

    Unit parse()
    {
        skip_ws();
        if (pos_ == text_.size()) {
            return units::one;
        }
        Unit u = expr();
        skip_ws();
        if (pos_ != text_.size()) {
            fail("unexpected trailing input");
        }
        return u;
    }

private:
    [[noreturn]] void fail(const std::string& why) const
    {
        throw DimensionError("cannot parse unit '" + std::string(text_) + "': " + why);
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && text_[pos_] == ' ') {
            ++pos_;
        }
    }

    bool consume(std::string_view tok)
    {
        skip_ws();
        if (text_.substr(pos_, tok.size()) == tok) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    Unit expr()
    {
        Unit u = term();
        for (;;) {
            if (consume("*") || consume("\xC2\xB7")) {
                u = u * term();
            } else if (consume("/")) {
                u = u / term();
            } else {
                return u;
            }
        }
    }

    static Unit power(Unit u, int n)
    {
        Unit r = units::one;
        for (int i = 0; i < std::abs(n); ++i) {
            r = n > 0 ? r * u : r / u;
        }
        return r;
    }

    int read_int()
    {
        bool neg = consume("-");
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected exponent");
        }
        int n = std::stoi(std::string(text_.substr(start, pos_ - start)));
        return neg ? -n : n;
    }

    // Unicode superscript digits used in exponents such as m³ or h²/m⁵.
    bool superscript(int& digit)
    {
        static const std::pair<std::string_view, int> sups[] = {
            {"\xC2\xB2", 2}, {"\xC2\xB3", 3}, {"\xC2\xB9", 1}, {"\xE2\x81\xB4", 4},
            {"\xE2\x81\xB5", 5}, {"\xE2\x81\xB6", 6}, {"\xE2\x81\xB0", 0},
        };
        for (const auto& [s, d] : sups) {
            if (text_.substr(pos_, s.size()) == s) {
                pos_ += s.size();
                digit = d;
                return true;
            }
        }
        return false;
    }

    Unit term()
    {
        Unit u = factor();
        if (consume("^")) {
            u = power(u, read_int());
        }
        return u;
    }

    Unit factor()
    {
        skip_ws();
        if (consume("(")) {
            Unit u = expr();
            if (!consume(")")) {
                fail("missing ')'");
            }
            return u;
        }
        if (consume("1")) {
            return units::one;
        }
        std::size_t start = pos_;
        auto symbol_char = [](char c) {
            return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '$' || c == '%';
        };
        while (pos_ < text_.size() && symbol_char(text_[pos_])) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected a unit symbol");
        }
        std::string_view sym = text_.substr(start, pos_ - start);
        const auto& table = symbol_table();
        auto it = table.find(sym);
        if (it == table.end()) {
            fail("unknown symbol '" + std::string(sym) + "'");
        }
        Unit u = it->second;

        // Trailing exponent written without '^': "m3", "m³".
        int exponent = 0;
        bool has_exponent = false;
        int digit = 0;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c >= '0' && c <= '9') {
                digit = c - '0';
                ++pos_;
            } else if (!superscript(digit)) {
                break;
            }
            exponent = exponent * 10 + digit;
            has_exponent = true;
        }
        return has_exponent ? power(u, exponent) : u;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Unit Unit::parse(std::string_view text)
{
    return UnitParser(text).parse();
}

std::string Dimension::canonical_unit() const
{
    struct Base {
        int exp;
        const char* symbol;
    };
    const Base bases[] = {{money, "$"}, {mass, "kg"}, {energy, "kWh"}, {length, "m"}, {time, "h"}};
    std::string num;
    std::string den;
    auto append = [](std::string& s, const char* sym, int e) {
        if (!s.empty()) {
            s += "*";
        }
        s += sym;
        if (e != 1) {
            s += "^" + std::to_string(e);
        }
    };
    int den_terms = 0;
    for (const auto& b : bases) {
        if (b.exp > 0) {
            append(num, b.symbol, b.exp);
        } else if (b.exp < 0) {
            append(den, b.symbol, -b.exp);
            ++den_terms;
        }
    }
    if (num.empty() && den.empty()) {
        return "";
    }
    if (num.empty()) {
        num = "1";
    }
    if (den.empty()) {
        return num;
    }
    return num + "/" + (den_terms > 1 ? "(" + den + ")" : den);
}

Quantity::Quantity(double canonical, Dimension dim) : value_(canonical), dim_(dim)
{
    if (!std::isfinite(canonical)) {
        throw DomainError("non-finite quantity magnitude");
    }
}

Quantity Quantity::parse(std::string_view text)
{
    while (!text.empty() && text.front() == ' ') {
        text.remove_prefix(1);
    }
    double magnitude = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), magnitude);
    if (ec != std::errc{}) {
        throw DimensionError("cannot parse quantity '" + std::string(text) + "': expected '<number> <unit>'");
    }
    std::string_view rest = text.substr(static_cast<std::size_t>(ptr - text.data()));
    return Quantity(magnitude, Unit::parse(rest));
}

double Quantity::in(const Unit& unit) const
{
    if (unit.dim != dim_) {
        throw DimensionError("cannot convert " + dim_.canonical_unit() + " to " + unit.dim.canonical_unit());
    }
    return value_ / unit.factor;
}

const Quantity& Quantity::require(Dimension expected, std::string_view what) const
{
    if (dim_ != expected) {
        std::string got = dim_.canonical_unit();
        std::string want = expected.canonical_unit();
        throw DimensionError(std::string(what) + ": expected dimension [" + (want.empty() ? "1" : want) +
                             "], got [" + (got.empty() ? "1" : got) + "]");
    }
    return *this;
}

Quantity Quantity::operator+(const Quantity& o) const
{
    if (dim_ != o.dim_) {
        throw DimensionError("cannot add [" + dim_.canonical_unit() + "] and [" + o.dim_.canonical_unit() + "]");
    }
    return {value_ + o.value_, dim_};
}

Quantity Quantity::operator-(const Quantity& o) const
{
    if (dim_ != o.dim_) {
        throw DimensionError("cannot subtract [" + o.dim_.canonical_unit() + "] from [" + dim_.canonical_unit() +
                             "]");
    }
    return {value_ - o.value_, dim_};
}

bool Quantity::operator==(const Quantity& o) const
{
    if (dim_ != o.dim_) {
        throw DimensionError("cannot compare quantities of different dimensions");
    }
    return value_ == o.value_;
}

bool Quantity::operator<(const Quantity& o) const
{
    if (dim_ != o.dim_) {
        throw DimensionError("cannot compare quantities of different dimensions");
    }
    return value_ < o.value_;
}

std::string Quantity::format(std::string_view unit) const
{
    std::string s = format_double(in(unit));
    if (!unit.empty()) {
        s += " ";
        s += unit;
    }
    return s;
}

std::string format_double(double v)
{
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) {
        throw Error("number formatting failed");
    }
    return std::string(buf, ptr);
}

}  // namespace ewh
