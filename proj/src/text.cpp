#include "hybrid/text.hpp"

#include <cctype>

namespace hybrid {

std::string render_set(const HybridSet<std::string>& f) {
    std::string pos, neg;
    for (const auto& [x, m] : f.entries()) {
        std::string& side = m > 0 ? pos : neg;
        for (long long i = 0; i < (m > 0 ? m : -m); ++i) {
            if (!side.empty()) side += ",";
            side += x;
        }
    }
    return "{" + pos + "|" + neg + "}";
}

namespace {

// Splits "a,b,c" into trimmed atoms; empty text yields no atoms.
std::vector<std::string> split_atoms(const std::string& text, size_t base) {
    std::vector<std::string> out;
    if (text.empty()) return out;
    size_t start = 0;
    while (true) {
        size_t comma = text.find(',', start);
        std::string atom = text.substr(start, comma - start);
        size_t a = atom.find_first_not_of(" \t");
        size_t b = atom.find_last_not_of(" \t");
        if (a == std::string::npos)
            throw ParseError("empty element", base + start);
        out.push_back(atom.substr(a, b - a + 1));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace

HybridSet<std::string> parse_set(const std::string& text) {
    size_t a = text.find_first_not_of(" \t");
    size_t b = text.find_last_not_of(" \t");
    if (a == std::string::npos || text[a] != '{')
        throw ParseError("expected '{'", a == std::string::npos ? text.size() : a);
    if (text[b] != '}') throw ParseError("expected '}'", b);
    std::string body = text.substr(a + 1, b - a - 1);
    size_t bar = body.find('|');
    if (bar == std::string::npos) throw ParseError("expected '|'", b);
    if (body.find('|', bar + 1) != std::string::npos)
        throw ParseError("more than one '|'", a + 1 + body.find('|', bar + 1));

    HybridSet<std::string> out;
    for (const auto& atom : split_atoms(body.substr(0, bar), a + 1)) out.add(atom, 1);
    for (const auto& atom : split_atoms(body.substr(bar + 1), a + 2 + bar))
        out.add(atom, -1);
    return out;
}

nlohmann::json set_to_json(const HybridSet<std::string>& f) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [x, m] : f.entries()) j[x] = m;
    return j;
}

HybridSet<std::string> set_from_json(const nlohmann::json& j) {
    HybridSet<std::string> out;
    for (auto it = j.begin(); it != j.end(); ++it)
        out.add(it.key(), it.value().get<long long>());
    return out;
}

namespace {

struct Cursor {
    const std::string& text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos;
        return true;
    }
    void expect(char c, const char* what) {
        if (!accept(c)) throw ParseError(std::string("expected ") + what, pos);
    }

    // Signed rational literal: [+-]digits[/digits].
    Rational rational() {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
        size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == digits) throw ParseError("expected a rational literal", start);
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            size_t den = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                ++pos;
            if (pos == den) throw ParseError("expected a denominator", den);
        }
        return rat_from_string(text.substr(start, pos - start));
    }

    std::string identifier() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (pos == start) throw ParseError("expected an identifier", start);
        return text.substr(start, pos - start);
    }
};

// One "(x-c)" or "(x+c)" factor; returns the root c resp. -c.
Rational parse_factor(Cursor& cur) {
    cur.expect('(', "'('");
    cur.expect('x', "'x'");
    char op = cur.peek();
    if (op != '-' && op != '+') throw ParseError("expected '+' or '-'", cur.pos);
    ++cur.pos;
    Rational c = cur.rational();
    cur.expect(')', "')'");
    return op == '-' ? c : Rational(-c);
}

}  // namespace

MonicRationalFn parse_rational_fn(const std::string& text) {
    Cursor cur{text};
    MonicRationalFn f;
    // Optional "1" numerator.
    if (cur.accept('1')) {
        if (cur.at_end()) return f;
        cur.expect('/', "'/' after '1'");
        f.roots.add(LaurentPoly::constant(parse_factor(cur)), -1);
    }
    while (!cur.at_end()) {
        long long mult = cur.accept('/') ? -1 : 1;
        f.roots.add(LaurentPoly::constant(parse_factor(cur)), mult);
    }
    return f;
}

namespace {

std::string render_factor(const Rational& root) {
    return root < 0 ? "(x+" + rat_to_string(-root) + ")"
                    : "(x-" + rat_to_string(root) + ")";
}

}  // namespace

std::string render_rational_fn(const MonicRationalFn& f) {
    std::string num, den;
    for (const auto& [root, m] : f.roots.entries()) {
        if (!root.is_constant())
            throw std::domain_error("render_rational_fn: symbolic root");
        std::string factor = render_factor(root.constant_value());
        for (long long i = 0; i < (m > 0 ? m : -m); ++i) {
            if (m > 0)
                num += factor;
            else
                den += "/" + factor;
        }
    }
    if (num.empty()) num = "1";
    return num + den;
}

PersistantSequence parse_basis(const std::string& text) {
    Cursor cur{text};
    // Optional "b_i =" prefix.
    size_t mark = cur.pos;
    cur.skip_ws();
    if (text.compare(cur.pos, 3, "b_i") == 0) {
        cur.pos += 3;
        cur.expect('=', "'='");
    } else {
        cur.pos = mark;
    }

    // Geometric family: [c*]v^(i-1).
    if (text.find('^') != std::string::npos) {
        Rational c(1);
        bool negate = cur.accept('-');
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            c = cur.rational();
            cur.expect('*', "'*'");
        }
        if (negate) c = -c;
        std::string var = cur.identifier();
        cur.expect('^', "'^'");
        bool parens = cur.accept('(');
        cur.expect('i', "'i'");
        cur.expect('-', "'-'");
        cur.expect('1', "'1'");
        if (parens) cur.expect(')', "')'");
        if (!cur.at_end()) throw ParseError("trailing input", cur.pos);
        return {[c, var](long long i) {
            return LaurentPoly::monomial(c, {{var, 2 * (i - 1)}});
        }};
    }

    // Affine family: sum of terms r, r*i, i, -i.
    Rational u(0), v(0);
    bool first = true;
    while (!cur.at_end()) {
        Rational sign(1);
        char op = cur.peek();
        if (op == '+' || op == '-') {
            ++cur.pos;
            if (op == '-') sign = -1;
        } else if (!first) {
            throw ParseError("expected '+' or '-'", cur.pos);
        }
        Rational coeff(1);
        bool have_coeff = false;
        if (cur.peek() != 'i') {
            coeff = cur.rational();
            have_coeff = true;
        }
        if (cur.accept('*') || (!have_coeff && cur.peek() == 'i') ||
            (have_coeff && cur.peek() == 'i')) {
            cur.expect('i', "'i'");
            u += sign * coeff;
        } else {
            v += sign * coeff;
        }
        first = false;
    }
    if (first) throw ParseError("empty basis expression", cur.pos);
    return PersistantSequence::from_rational(
        [u, v](long long i) { return u * Rational(i) + v; });
}

std::string half_to_string(long long doubled) {
    if (doubled % 2 == 0) return std::to_string(doubled / 2);
    return std::to_string(doubled) + "/2";
}

}  // namespace hybrid
