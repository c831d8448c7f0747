#include "vknot/laurent.hpp"

#include <cctype>
#include <sstream>

#include "vknot/errors.hpp"

namespace vknot {

LaurentPoly LaurentPoly::term(long long exponent, BigInt coefficient) {
    LaurentPoly p;
    if (coefficient != 0) p.terms_[exponent] = std::move(coefficient);
    return p;
}

LaurentPoly LaurentPoly::loop_value() {
    LaurentPoly d;
    d.terms_[2] = -1;
    d.terms_[-2] = -1;
    return d;
}

LaurentPoly LaurentPoly::neg_a_cubed_pow(long long k) {
    BigInt c = (k % 2 == 0) ? 1 : -1;
    return term(3 * k, c);
}

BigInt LaurentPoly::coeff(long long exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPoly::add_term(long long exponent, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
}

LaurentPoly LaurentPoly::mirrored() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_[-e] = c;
    return out;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
    LaurentPoly out = one();
    for (unsigned i = 0; i < k; ++i) out *= *this;
    return out;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || e == 0) os << mag.str();
        if (e != 0) {
            os << "A";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
};

long long parse_ll(Cursor& c) {
    c.skip_ws();
    size_t start = c.i;
    if (c.i < c.s.size() && (c.s[c.i] == '+' || c.s[c.i] == '-')) ++c.i;
    size_t digits = 0;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
        ++c.i;
        ++digits;
    }
    if (digits == 0) throw ParseError("expected integer in polynomial at offset " +
                                      std::to_string(start));
    return std::stoll(c.s.substr(start, c.i - start));
}

} // namespace

LaurentPoly LaurentPoly::parse(const std::string& text) {
    LaurentPoly out;
    Cursor c{text};
    if (c.done()) throw ParseError("empty polynomial text");
    bool first = true;
    while (!c.done()) {
        int sign = 1;
        c.skip_ws();
        if (c.s[c.i] == '+' || c.s[c.i] == '-') {
            sign = c.s[c.i] == '-' ? -1 : 1;
            ++c.i;
            c.skip_ws();
            // tolerate "+ -3A^2"
            if (c.i < c.s.size() && c.s[c.i] == '-') {
                sign = -sign;
                ++c.i;
            }
        } else if (!first) {
            throw ParseError("expected '+' or '-' between polynomial terms");
        }
        c.skip_ws();
        BigInt coeff = 1;
        bool have_digits = c.i < c.s.size() &&
                           std::isdigit(static_cast<unsigned char>(c.s[c.i]));
        if (have_digits) {
            size_t start = c.i;
            while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
            coeff = BigInt(c.s.substr(start, c.i - start));
        }
        long long expo = 0;
        c.skip_ws();
        if (c.i < c.s.size() && (c.s[c.i] == 'A' || c.s[c.i] == 'a')) {
            ++c.i;
            expo = 1;
            if (c.i < c.s.size() && c.s[c.i] == '^') {
                ++c.i;
                expo = parse_ll(c);
            }
        } else if (!have_digits) {
            throw ParseError("expected coefficient or 'A' in polynomial term");
        }
        out.add_term(expo, sign < 0 ? BigInt(-coeff) : coeff);
        first = false;
    }
    return out;
}

} // namespace vknot
