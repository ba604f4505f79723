// field.hpp -- coefficient field selection: the rationals or GF(p).

#pragma once

#include <cstdint>
#include <string>

#include "core.hpp"

namespace facets {

class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(0); }

    static FieldSpec prime_field(std::uint32_t p) {
        if (p < 2 || !probe_prime(p))
            throw ParseError("GF(p) needs a prime modulus, got " + std::to_string(p));
        return FieldSpec(p);
    }

    // CLI syntax: "q" for the rationals, "fp:<p>" for GF(p)
    static FieldSpec parse(const std::string& text) {
        if (text == "q" || text == "Q")
            return rationals();
        if (text.rfind("fp:", 0) == 0) {
            try {
                unsigned long v = std::stoul(text.substr(3));
                if (v > 0x7fffffffUL)
                    throw ParseError("field modulus too large: " + text);
                return prime_field(static_cast<std::uint32_t>(v));
            } catch (const ParseError&) {
                throw;
            } catch (...) {
                throw ParseError("bad field spec '" + text + "'");
            }
        }
        throw ParseError("bad field spec '" + text + "' (use q or fp:<p>)");
    }

    bool is_rationals() const { return p_ == 0; }
    std::uint32_t prime() const { return p_; }

    std::string label() const {
        return is_rationals() ? "Q" : "GF(" + std::to_string(p_) + ")";
    }

    std::string flag() const { return is_rationals() ? "q" : "fp:" + std::to_string(p_); }

    bool operator==(const FieldSpec& o) const { return p_ == o.p_; }

private:
    explicit FieldSpec(std::uint32_t p) : p_(p) {}

    static bool probe_prime(std::uint32_t p) {
        if (p % 2 == 0)
            return p == 2;
        for (std::uint64_t d = 3; d * d <= p; d += 2)
            if (p % d == 0)
                return false;
        return true;
    }

    std::uint32_t p_;  // 0 encodes the rationals
};

}  // namespace facets
