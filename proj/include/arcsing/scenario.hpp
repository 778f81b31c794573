#pragma once

#include "arcsing/arc.hpp"
#include "arcsing/nash.hpp"
#include "arcsing/polynomial.hpp"
#include "arcsing/series.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace arcsing {

struct ParseError : std::runtime_error {
    int line;
    int col;
    ParseError(int line_, int col_, const std::string& msg)
        : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
                             std::to_string(col_) + ": " + msg),
          line(line_), col(col_) {}
};

struct NamedPolynomial {
    std::string name;
    Polynomial poly;
    int weight = 0;         // 0: default to order at origin
};

struct NamedArc {
    std::string name;
    Arc arc;
};

struct NamedFamily {
    std::string name;
    ArcFamily family;
};

struct Scenario {
    std::vector<std::string> variables;
    std::vector<NamedPolynomial> polynomials;
    std::vector<NamedArc> arcs;
    std::vector<NamedFamily> families;
    long long precision = kDefaultPrecision;
    int exponent_cap = 12;
    int max_steps = kDefaultMaxSteps;

    int var_index(const std::string& name) const {
        for (std::size_t i = 0; i < variables.size(); ++i)
            if (variables[i] == name) return static_cast<int>(i);
        return -1;
    }

    const NamedPolynomial* find_poly(const std::string& name) const {
        for (const auto& p : polynomials)
            if (p.name == name) return &p;
        return nullptr;
    }

    const NamedArc* find_arc(const std::string& name) const {
        for (const auto& a : arcs)
            if (a.name == name) return &a;
        return nullptr;
    }

    const NamedFamily* find_family(const std::string& name) const {
        for (const auto& f : families)
            if (f.name == name) return &f;
        return nullptr;
    }

    Variety variety() const {
        Variety v;
        v.variables = variables;
        for (const auto& p : polynomials) v.polynomials.push_back(p.poly);
        return v;
    }

    int weight_of(const NamedPolynomial& p) const {
        return p.weight > 0 ? p.weight : p.poly.order_at_origin_int();
    }

    bool operator==(const Scenario& o) const {
        if (variables != o.variables || precision != o.precision ||
            exponent_cap != o.exponent_cap || max_steps != o.max_steps)
            return false;
        if (polynomials.size() != o.polynomials.size() || arcs.size() != o.arcs.size() ||
            families.size() != o.families.size())
            return false;
        for (std::size_t i = 0; i < polynomials.size(); ++i)
            if (polynomials[i].name != o.polynomials[i].name ||
                !(polynomials[i].poly == o.polynomials[i].poly) ||
                polynomials[i].weight != o.polynomials[i].weight)
                return false;
        for (std::size_t i = 0; i < arcs.size(); ++i) {
            if (arcs[i].name != o.arcs[i].name) return false;
            if (arcs[i].arc.images.size() != o.arcs[i].arc.images.size()) return false;
            for (std::size_t j = 0; j < arcs[i].arc.images.size(); ++j)
                if (!(arcs[i].arc.images[j] == o.arcs[i].arc.images[j])) return false;
        }
        for (std::size_t i = 0; i < families.size(); ++i) {
            const auto& a = families[i];
            const auto& b = o.families[i];
            if (a.name != b.name || a.family.n_lo != b.family.n_lo ||
                a.family.n_hi != b.family.n_hi ||
                a.family.images.size() != b.family.images.size())
                return false;
            for (std::size_t j = 0; j < a.family.images.size(); ++j) {
                const auto& x = a.family.images[j];
                const auto& y = b.family.images[j];
                if (x.coeff != y.coeff || x.a != y.a || x.b != y.b) return false;
            }
        }
        return true;
    }
};

namespace detail {

struct Token {
    enum class Kind { Name, Int, Symbol, End };
    Kind kind = Kind::End;
    std::string text;
    int col = 0;
};

class LineLexer {
public:
    LineLexer(const std::string& line, int lineno) : line_(line), lineno_(lineno) { advance(); }

    const Token& peek() const { return tok_; }
    int lineno() const { return lineno_; }

    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

    bool at_end() const { return tok_.kind == Token::Kind::End; }

    [[noreturn]] void fail(const std::string& expected) const {
        std::string got = tok_.kind == Token::Kind::End ? "end of line" : "'" + tok_.text + "'";
        throw ParseError(lineno_, tok_.col + 1, "expected " + expected + ", got " + got);
    }

    Token expect_name(const std::string& what) {
        if (tok_.kind != Token::Kind::Name) fail(what);
        return next();
    }

    long long expect_int(const std::string& what) {
        if (tok_.kind != Token::Kind::Int) fail(what);
        return std::stoll(next().text);
    }

    bool accept_symbol(const std::string& s) {
        if (tok_.kind == Token::Kind::Symbol && tok_.text == s) {
            advance();
            return true;
        }
        return false;
    }

    void expect_symbol(const std::string& s) {
        if (!accept_symbol(s)) fail("'" + s + "'");
    }

private:
    void advance() {
        while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
        tok_.col = static_cast<int>(pos_);
        if (pos_ >= line_.size() || line_[pos_] == '#') {
            tok_ = {Token::Kind::End, "", static_cast<int>(pos_)};
            return;
        }
        char c = line_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t s = pos_;
            while (pos_ < line_.size() &&
                   (std::isalnum(static_cast<unsigned char>(line_[pos_])) || line_[pos_] == '_' ||
                    line_[pos_] == '\''))
                ++pos_;
            tok_ = {Token::Kind::Name, line_.substr(s, pos_ - s), static_cast<int>(s)};
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t s = pos_;
            while (pos_ < line_.size() && std::isdigit(static_cast<unsigned char>(line_[pos_]))) ++pos_;
            tok_ = {Token::Kind::Int, line_.substr(s, pos_ - s), static_cast<int>(s)};
            return;
        }
        // two-character symbols first
        if (line_.compare(pos_, 2, "->") == 0 || line_.compare(pos_, 2, "..") == 0) {
            tok_ = {Token::Kind::Symbol, line_.substr(pos_, 2), static_cast<int>(pos_)};
            pos_ += 2;
            return;
        }
        tok_ = {Token::Kind::Symbol, std::string(1, c), static_cast<int>(pos_)};
        ++pos_;
    }

    const std::string& line_;
    int lineno_;
    std::size_t pos_ = 0;
    Token tok_;
};

// expr := ['-'] term (('+'|'-') term)* ; term := factor ('*' factor)* ;
// factor := int ['/' int] | var ['^' int] | '(' expr ')'
class PolyParser {
public:
    PolyParser(LineLexer& lx, const std::vector<std::string>& vars) : lx_(lx), vars_(vars) {}

    Polynomial parse_expr() {
        bool neg = lx_.accept_symbol("-");
        Polynomial r = parse_term();
        if (neg) r = -r;
        while (true) {
            if (lx_.accept_symbol("+")) r += parse_term();
            else if (lx_.accept_symbol("-")) r -= parse_term();
            else break;
        }
        return r;
    }

private:
    Polynomial parse_term() {
        bool neg = lx_.accept_symbol("-");
        Polynomial r = parse_factor();
        while (lx_.accept_symbol("*")) r = r * parse_factor();
        return neg ? -r : r;
    }

    Polynomial parse_factor() {
        std::size_t n = vars_.size();
        if (lx_.peek().kind == Token::Kind::Int) {
            Rational c(Integer(lx_.next().text));
            if (lx_.accept_symbol("/")) {
                if (lx_.peek().kind != Token::Kind::Int) lx_.fail("denominator");
                c /= Rational(Integer(lx_.next().text));
            }
            return Polynomial::constant(n, c);
        }
        if (lx_.peek().kind == Token::Kind::Name) {
            Token t = lx_.next();
            int idx = -1;
            for (std::size_t i = 0; i < n; ++i)
                if (vars_[i] == t.text) idx = static_cast<int>(i);
            if (idx < 0)
                throw ParseError(lx_.lineno(), t.col + 1, "unknown variable '" + t.text + "'");
            int e = 1;
            if (lx_.accept_symbol("^")) e = static_cast<int>(lx_.expect_int("exponent"));
            Monomial m(n, 0);
            m[idx] = e;
            return Polynomial::term(n, m, 1);
        }
        if (lx_.accept_symbol("(")) {
            Polynomial r = parse_expr();
            lx_.expect_symbol(")");
            return r;
        }
        lx_.fail("a coefficient, variable, or '('");
    }

    LineLexer& lx_;
    const std::vector<std::string>& vars_;
};

inline Rational parse_coefficient(LineLexer& lx, bool neg) {
    Rational c(Integer(lx.next().text));
    if (lx.accept_symbol("/")) {
        if (lx.peek().kind != Token::Kind::Int) lx.fail("denominator");
        c /= Rational(Integer(lx.next().text));
    }
    return neg ? -c : c;
}

// series := sterm (('+'|'-') sterm)* ; sterm := ['-'] [c '*'] t['^'e] | c
inline FormalSeries parse_series(LineLexer& lx) {
    FormalSeries s;
    bool first = true;
    while (true) {
        bool neg = false;
        if (lx.accept_symbol("-")) neg = true;
        else if (!first) {
            if (!lx.accept_symbol("+")) break;
            if (lx.accept_symbol("-")) neg = true;
        }
        Rational c = 1;
        bool have_coeff = false;
        if (lx.peek().kind == Token::Kind::Int) {
            c = parse_coefficient(lx, neg);
            have_coeff = true;
        } else if (neg) {
            c = -1;
        }
        long long e = 0;
        bool have_t = false;
        if (have_coeff) {
            if (lx.accept_symbol("*")) {
                Token t = lx.expect_name("'t'");
                if (t.text != "t")
                    throw ParseError(lx.lineno(), t.col + 1, "expected 't'");
                have_t = true;
            }
        } else if (lx.peek().kind == Token::Kind::Name && lx.peek().text == "t") {
            lx.next();
            have_t = true;
        } else if (!have_coeff) {
            lx.fail("a series term");
        }
        if (have_t) {
            e = 1;
            if (lx.accept_symbol("^")) e = lx.expect_int("exponent");
        } else if (c != 0) {
            throw ParseError(lx.lineno(), lx.peek().col + 1,
                             "constant series term must be 0 (arcs pass through the origin)");
        }
        s = s + FormalSeries::term(c, e);
        first = false;
    }
    if (first) lx.fail("a series");
    return s;
}

// lin := linterm (('+'|'-') linterm)* ; linterm := int ['*' N] | N
inline void parse_linear_in_n(LineLexer& lx, long long& a, long long& b) {
    a = 0;
    b = 0;
    bool first = true;
    while (true) {
        bool neg = false;
        if (lx.accept_symbol("-")) neg = true;
        else if (!first && !lx.accept_symbol("+")) break;
        long long coeff = 1;
        bool have_coeff = false;
        if (lx.peek().kind == Token::Kind::Int) {
            coeff = lx.expect_int("integer");
            have_coeff = true;
        }
        if (neg) coeff = -coeff;
        bool is_n = false;
        if (have_coeff) {
            if (lx.accept_symbol("*")) {
                Token t = lx.expect_name("'N'");
                if (t.text != "N") throw ParseError(lx.lineno(), t.col + 1, "expected 'N'");
                is_n = true;
            }
        } else if (lx.peek().kind == Token::Kind::Name && lx.peek().text == "N") {
            lx.next();
            is_n = true;
        } else {
            lx.fail("an integer or 'N'");
        }
        if (is_n) a += coeff;
        else b += coeff;
        first = false;
    }
    if (first) lx.fail("a linear expression in N");
}

}  // namespace detail

inline Scenario parse_scenario(const std::string& text) {
    Scenario sc;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        detail::LineLexer lx(line, lineno);
        if (lx.at_end()) continue;
        detail::Token head = lx.expect_name("a directive (vars/poly/arc/family/set)");
        if (head.text == "vars") {
            if (!sc.variables.empty())
                throw ParseError(lineno, head.col + 1, "duplicate vars directive");
            while (!lx.at_end()) sc.variables.push_back(lx.expect_name("a variable name").text);
            if (sc.variables.empty()) lx.fail("at least one variable");
        } else if (head.text == "poly") {
            if (sc.variables.empty())
                throw ParseError(lineno, head.col + 1, "vars must come before poly");
            std::string name = lx.expect_name("a polynomial name").text;
            if (lx.accept_symbol(":")) {
                detail::Token kw = lx.expect_name("'weight'");
                if (kw.text != "weight") throw ParseError(lineno, kw.col + 1, "expected 'weight'");
                int w = static_cast<int>(lx.expect_int("a weight"));
                bool found = false;
                for (auto& p : sc.polynomials)
                    if (p.name == name) { p.weight = w; found = true; }
                if (!found)
                    throw ParseError(lineno, head.col + 1, "weight for undeclared polynomial '" + name + "'");
            } else {
                lx.expect_symbol("=");
                detail::PolyParser pp(lx, sc.variables);
                Polynomial p = pp.parse_expr();
                if (!lx.at_end()) lx.fail("end of line");
                sc.polynomials.push_back({name, std::move(p), 0});
            }
        } else if (head.text == "arc") {
            if (sc.variables.empty())
                throw ParseError(lineno, head.col + 1, "vars must come before arc");
            std::string name = lx.expect_name("an arc name").text;
            lx.expect_symbol(":");
            std::vector<FormalSeries> images(sc.variables.size());
            std::vector<bool> seen(sc.variables.size(), false);
            do {
                detail::Token v = lx.expect_name("a variable name");
                int idx = sc.var_index(v.text);
                if (idx < 0) throw ParseError(lineno, v.col + 1, "unknown variable '" + v.text + "'");
                if (seen[idx]) throw ParseError(lineno, v.col + 1, "duplicate image for '" + v.text + "'");
                lx.expect_symbol("->");
                images[idx] = detail::parse_series(lx);
                seen[idx] = true;
            } while (lx.accept_symbol(","));
            if (!lx.at_end()) lx.fail("',' or end of line");
            sc.arcs.push_back({name, Arc(std::move(images))});
        } else if (head.text == "family") {
            if (sc.variables.empty())
                throw ParseError(lineno, head.col + 1, "vars must come before family");
            std::string name = lx.expect_name("a family name").text;
            detail::Token kw = lx.expect_name("'over'");
            if (kw.text != "over") throw ParseError(lineno, kw.col + 1, "expected 'over'");
            kw = lx.expect_name("'N'");
            if (kw.text != "N") throw ParseError(lineno, kw.col + 1, "expected 'N'");
            kw = lx.expect_name("'in'");
            if (kw.text != "in") throw ParseError(lineno, kw.col + 1, "expected 'in'");
            ArcFamily fam;
            fam.n_lo = lx.expect_int("a lower bound");
            lx.expect_symbol("..");
            fam.n_hi = lx.expect_int("an upper bound");
            lx.expect_symbol(":");
            fam.images.assign(sc.variables.size(), FamilyImage{0, 0, 1});
            std::vector<bool> seen(sc.variables.size(), false);
            do {
                detail::Token v = lx.expect_name("a variable name");
                int idx = sc.var_index(v.text);
                if (idx < 0) throw ParseError(lineno, v.col + 1, "unknown variable '" + v.text + "'");
                if (seen[idx]) throw ParseError(lineno, v.col + 1, "duplicate image for '" + v.text + "'");
                lx.expect_symbol("->");
                FamilyImage img;
                img.coeff = 1;
                if (lx.peek().kind == detail::Token::Kind::Int) {
                    img.coeff = detail::parse_coefficient(lx, false);
                    lx.expect_symbol("*");
                }
                detail::Token t = lx.expect_name("'t'");
                if (t.text != "t") throw ParseError(lineno, t.col + 1, "expected 't'");
                if (lx.accept_symbol("^")) {
                    if (lx.accept_symbol("(")) {
                        detail::parse_linear_in_n(lx, img.a, img.b);
                        lx.expect_symbol(")");
                    } else {
                        img.a = 0;
                        img.b = lx.expect_int("an exponent");
                    }
                } else {
                    img.a = 0;
                    img.b = 1;
                }
                fam.images[idx] = img;
                seen[idx] = true;
            } while (lx.accept_symbol(","));
            if (!lx.at_end()) lx.fail("',' or end of line");
            for (std::size_t i = 0; i < seen.size(); ++i)
                if (!seen[i])
                    throw ParseError(lineno, head.col + 1,
                                     "family misses an image for '" + sc.variables[i] + "'");
            sc.families.push_back({name, std::move(fam)});
        } else if (head.text == "set") {
            detail::Token key = lx.expect_name("an option (prec/cap/max_steps)");
            long long v = lx.expect_int("an integer value");
            if (key.text == "prec") sc.precision = v;
            else if (key.text == "cap") sc.exponent_cap = static_cast<int>(v);
            else if (key.text == "max_steps") sc.max_steps = static_cast<int>(v);
            else throw ParseError(lineno, key.col + 1, "unknown option '" + key.text + "'");
            if (!lx.at_end()) lx.fail("end of line");
        } else {
            throw ParseError(lineno, head.col + 1, "unknown directive '" + head.text + "'");
        }
    }
    if (sc.variables.empty()) throw ParseError(lineno ? lineno : 1, 1, "missing vars directive");
    if (sc.polynomials.empty()) throw ParseError(lineno ? lineno : 1, 1, "missing poly directive");
    return sc;
}

inline std::string linear_in_n_str(long long a, long long b) {
    std::ostringstream os;
    if (a != 0) {
        os << a << "*N";
        if (b > 0) os << "+" << b;
        else if (b < 0) os << "-" << -b;
    } else {
        os << b;
    }
    return os.str();
}

// Canonical text form; parsing it back yields an equal Scenario.
inline std::string print_scenario(const Scenario& sc) {
    std::ostringstream os;
    os << "vars";
    for (const auto& v : sc.variables) os << " " << v;
    os << "\n";
    for (const auto& p : sc.polynomials) {
        os << "poly " << p.name << " = " << p.poly.str(sc.variables) << "\n";
        if (p.weight > 0) os << "poly " << p.name << " : weight " << p.weight << "\n";
    }
    for (const auto& a : sc.arcs) {
        os << "arc " << a.name << " :";
        for (std::size_t i = 0; i < a.arc.images.size(); ++i) {
            os << (i ? ", " : " ") << sc.variables[i] << " -> " << a.arc.images[i].str();
        }
        os << "\n";
    }
    for (const auto& f : sc.families) {
        os << "family " << f.name << " over N in " << f.family.n_lo << ".." << f.family.n_hi << " :";
        for (std::size_t i = 0; i < f.family.images.size(); ++i) {
            os << (i ? ", " : " ") << sc.variables[i] << " -> ";
            const auto& img = f.family.images[i];
            if (img.coeff != 1) os << to_string(img.coeff) << "*";
            os << "t^(" << linear_in_n_str(img.a, img.b) << ")";
        }
        os << "\n";
    }
    if (sc.precision != kDefaultPrecision) os << "set prec " << sc.precision << "\n";
    if (sc.exponent_cap != 12) os << "set cap " << sc.exponent_cap << "\n";
    if (sc.max_steps != kDefaultMaxSteps) os << "set max_steps " << sc.max_steps << "\n";
    return os.str();
}

}  // namespace arcsing
