#include "ellspec/parser.hpp"

#include <cctype>

namespace ellspec {

namespace {

struct Lexer {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(what + " at column " + std::to_string(i + 1) + " in '" + s + "'");
    }
    bool accept(char c) {
        if (peek() == c) { ++i; return true; }
        return false;
    }
    Integer integer() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) fail("expected integer");
        return Integer(s.substr(start, i - start));
    }
    bool at_ident() {
        char c = peek();
        return std::isalpha(static_cast<unsigned char>(c));
    }
    std::string ident() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
        return s.substr(start, i - start);
    }
};

// generic recursive descent over a field-like value type
template <typename V, typename Ops>
struct ExprParser {
    Lexer lx;
    Ops ops;

    V parse() {
        V v = expr();
        if (!lx.eof()) lx.fail("trailing input");
        return v;
    }
    V expr() {
        V v = term();
        while (true) {
            if (lx.accept('+')) v = ops.add(v, term());
            else if (lx.accept('-')) v = ops.sub(v, term());
            else return v;
        }
    }
    V term() {
        V v = factor();
        while (true) {
            if (lx.accept('*')) v = ops.mul(v, factor());
            else if (lx.accept('/')) v = ops.div(v, factor(), lx);
            else return v;
        }
    }
    V factor() {
        if (lx.accept('-')) return ops.neg(factor());
        if (lx.accept('+')) return factor();
        V v = atom();
        if (lx.accept('^')) {
            Integer e = lx.integer();
            if (e < 0 || e > 1000) lx.fail("exponent out of range");
            v = ops.pow(v, e.get_ui());
        }
        return v;
    }
    V atom() {
        char c = lx.peek();
        if (c == '(') {
            lx.accept('(');
            V v = expr();
            if (!lx.accept(')')) lx.fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return ops.constant(lx.integer());
        if (lx.at_ident()) {
            std::size_t pos = lx.i;
            std::string name = lx.ident();
            V v;
            if (!ops.variable(name, v)) {
                lx.i = pos;
                lx.fail("unknown symbol '" + name + "'");
            }
            return v;
        }
        lx.fail("unexpected character");
    }
};

struct RatFuncOps {
    std::string var;
    RatFunc add(const RatFunc& a, const RatFunc& b) const { return a + b; }
    RatFunc sub(const RatFunc& a, const RatFunc& b) const { return a - b; }
    RatFunc mul(const RatFunc& a, const RatFunc& b) const { return a * b; }
    RatFunc div(const RatFunc& a, const RatFunc& b, Lexer& lx) const {
        if (b.is_zero()) lx.fail("division by zero");
        return a / b;
    }
    RatFunc neg(const RatFunc& a) const { return -a; }
    RatFunc pow(const RatFunc& a, unsigned e) const {
        RatFunc r(Rational(1)), base = a;
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }
    RatFunc constant(const Integer& n) const { return RatFunc(Rational(n)); }
    bool variable(const std::string& name, RatFunc& out) const {
        if (name != var) return false;
        out = RatFunc::variable();
        return true;
    }
};

void bv_trim(BivarPoly& p) {
    for (auto it = p.begin(); it != p.end();) {
        if (it->second == 0) it = p.erase(it);
        else ++it;
    }
}

struct BivarOps {
    std::string v1, v2;
    BivarPoly add(BivarPoly a, const BivarPoly& b) const {
        for (const auto& [k, c] : b) a[k] += c;
        bv_trim(a);
        return a;
    }
    BivarPoly sub(BivarPoly a, const BivarPoly& b) const {
        for (const auto& [k, c] : b) a[k] -= c;
        bv_trim(a);
        return a;
    }
    BivarPoly mul(const BivarPoly& a, const BivarPoly& b) const {
        BivarPoly r;
        for (const auto& [ka, ca] : a)
            for (const auto& [kb, cb] : b)
                r[{ka.first + kb.first, ka.second + kb.second}] += ca * cb;
        bv_trim(r);
        return r;
    }
    BivarPoly div(const BivarPoly& a, const BivarPoly& b, Lexer& lx) const {
        if (b.empty()) lx.fail("division by zero");
        if (b.size() != 1 || b.begin()->first != std::make_pair(0, 0))
            lx.fail("division only by constants here");
        Rational c = b.begin()->second;
        BivarPoly r = a;
        for (auto& [k, v] : r) v /= c;
        return r;
    }
    BivarPoly neg(BivarPoly a) const {
        for (auto& [k, v] : a) v = -v;
        return a;
    }
    BivarPoly pow(const BivarPoly& a, unsigned e) const {
        BivarPoly r{{{0, 0}, Rational(1)}};
        BivarPoly base = a;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
    BivarPoly constant(const Integer& n) const {
        BivarPoly r;
        if (n != 0) r[{0, 0}] = Rational(n);
        return r;
    }
    bool variable(const std::string& name, BivarPoly& out) const {
        out.clear();
        if (name == v1) out[{1, 0}] = Rational(1);
        else if (name == v2) out[{0, 1}] = Rational(1);
        else return false;
        return true;
    }
};

} // namespace

RatFunc parse_ratfunc(const std::string& text, const std::string& var) {
    ExprParser<RatFunc, RatFuncOps> p{Lexer{text}, RatFuncOps{var}};
    return p.parse();
}

BivarPoly parse_bivar(const std::string& text, const std::string& v1, const std::string& v2) {
    ExprParser<BivarPoly, BivarOps> p{Lexer{text}, BivarOps{v1, v2}};
    return p.parse();
}

} // namespace ellspec
