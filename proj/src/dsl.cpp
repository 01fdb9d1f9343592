#include "arcline/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "arcline/errors.hpp"

namespace arcline {

namespace {

// keeps every literal well clear of the interval sentinels
constexpr coord_t kLiteralLimit = 1000000000000000LL;  // 1e15

enum class Tok {
    Ident,
    Int,
    NegInf,
    PosInf,
    LParen,
    RParen,
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Comma,
    Pipe,
    End
};

struct Token {
    Tok kind;
    std::string text;
    coord_t value = 0;
    int line = 1;
    int col = 1;
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto is_ident = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
    auto is_digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
    auto number = [&](int l, int c) {
        coord_t v = 0;
        std::string text;
        while (i < s.size() && is_digit(s[i])) {
            v = v * 10 + (s[i] - '0');
            if (v > kLiteralLimit) throw parse_error("integer constant too large", l, c);
            text += s[i++];
            ++col;
        }
        return std::pair{v, text};
    };
    while (i < s.size()) {
        char ch = s[i];
        if (ch == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (ch == ' ' || ch == '\t' || ch == '\r') {
            ++i;
            ++col;
            continue;
        }
        int l = line, c = col;
        if (is_ident(ch)) {
            std::string text;
            while (i < s.size() && (is_ident(s[i]) || is_digit(s[i]))) {
                text += s[i++];
                ++col;
            }
            out.push_back({Tok::Ident, std::move(text), 0, l, c});
            continue;
        }
        if (is_digit(ch)) {
            auto [v, text] = number(l, c);
            out.push_back({Tok::Int, std::move(text), v, l, c});
            continue;
        }
        if (ch == '-' || ch == '+') {
            if (s.compare(i + 1, 3, "inf") == 0 &&
                (i + 4 >= s.size() || (!is_ident(s[i + 4]) && !is_digit(s[i + 4])))) {
                out.push_back({ch == '-' ? Tok::NegInf : Tok::PosInf,
                               std::string(1, ch) + "inf", 0, l, c});
                i += 4;
                col += 4;
                continue;
            }
            if (ch == '-' && i + 1 < s.size() && is_digit(s[i + 1])) {
                ++i;
                ++col;
                auto [v, text] = number(l, c);
                out.push_back({Tok::Int, "-" + text, -v, l, c});
                continue;
            }
            throw parse_error(std::string("stray '") + ch + "'", l, c,
                              {"integer", ch == '-' ? "-inf" : "+inf"});
        }
        Tok k;
        switch (ch) {
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            case '{': k = Tok::LBrace; break;
            case '}': k = Tok::RBrace; break;
            case '[': k = Tok::LBracket; break;
            case ']': k = Tok::RBracket; break;
            case ',': k = Tok::Comma; break;
            case '|': k = Tok::Pipe; break;
            default:
                throw parse_error(std::string("unexpected character '") + ch + "'", l, c);
        }
        out.push_back({k, std::string(1, ch), 0, l, c});
        ++i;
        ++col;
    }
    out.push_back({Tok::End, "end of input", 0, line, col});
    return out;
}

struct Parser {
    std::vector<Token> ts;
    std::size_t i = 0;

    const Token& peek() const { return ts[i]; }
    Token take() { return ts[i + 1 < ts.size() ? i++ : i]; }

    [[noreturn]] void fail(const Token& at, const std::string& msg,
                           std::vector<std::string> expected = {}) const {
        throw parse_error(msg, at.line, at.col, std::move(expected));
    }

    Token expect(Tok k, const char* what) {
        if (peek().kind != k)
            fail(peek(), std::string("expected ") + what + ", found '" + peek().text + "'", {what});
        return take();
    }

    coord_t expect_int(const char* what = "integer") { return expect(Tok::Int, what).value; }

    IntInterval parse_range() {
        Token open = take();
        if (open.kind != Tok::LBracket && open.kind != Tok::LParen)
            fail(open, "expected a range, found '" + open.text + "'", {"[", "("});
        coord_t lo;
        if (peek().kind == Tok::NegInf) {
            take();
            lo = kNegInf;
        } else {
            lo = expect_int("integer or -inf");
            if (open.kind == Tok::LParen) ++lo;
        }
        expect(Tok::Comma, "','");
        coord_t hi;
        bool hi_inf = peek().kind == Tok::PosInf;
        if (hi_inf) {
            take();
            hi = kPosInf;
        } else {
            hi = expect_int("integer or +inf");
        }
        Token close = take();
        if (close.kind != Tok::RBracket && close.kind != Tok::RParen)
            fail(close, "expected ']' or ')', found '" + close.text + "'", {"]", ")"});
        if (!hi_inf && close.kind == Tok::RParen) --hi;
        if (lo > hi) fail(open, "range contains no integers");
        return {lo, hi};
    }

    Arc parse_arc() {
        Token open = expect(Tok::LParen, "'('");
        coord_t m = expect_int();
        expect(Tok::Comma, "','");
        coord_t n = expect_int();
        expect(Tok::RParen, "')'");
        try {
            return Arc(m, n);
        } catch (const std::invalid_argument& e) {
            fail(open, e.what());
        }
    }

    ArcRegion parse_term() {
        const Token t = take();
        if (t.kind == Tok::LParen) {
            ArcRegion r = parse_region();
            expect(Tok::RParen, "')'");
            return r;
        }
        if (t.kind != Tok::Ident)
            fail(t, "expected a region term, found '" + t.text + "'",
                 {"arcs", "box", "lower", "upper", "leftray", "rightray", "all", "empty", "shift",
                  "not", "("});
        if (t.text == "all") return ArcRegion::all();
        if (t.text == "empty") return ArcRegion::empty();
        if (t.text == "arcs") {
            expect(Tok::LBrace, "'{'");
            std::vector<Arc> arcs;
            if (peek().kind != Tok::RBrace) {
                arcs.push_back(parse_arc());
                while (peek().kind == Tok::Comma) {
                    take();
                    arcs.push_back(parse_arc());
                }
            }
            expect(Tok::RBrace, "'}'");
            return ArcRegion::of_arcs(arcs);
        }
        if (t.text == "box") {
            expect(Tok::LParen, "'('");
            IntInterval mi = parse_range();
            expect(Tok::Comma, "','");
            IntInterval ni = parse_range();
            coord_t dlo = 2, dhi = kPosInf;
            if (peek().kind == Tok::Comma) {
                take();
                Token d = expect(Tok::Ident, "'diag'");
                if (d.text != "diag") fail(d, "expected 'diag', found '" + d.text + "'", {"diag"});
                IntInterval band = parse_range();
                dlo = std::max<coord_t>(band.lo, 2);
                dhi = band.hi;
                if (dlo > dhi) fail(d, "band lies entirely below n - m >= 2");
            }
            expect(Tok::RParen, "')'");
            return ArcRegion::single(Trapezoid(mi, ni, dlo, dhi));
        }
        if (t.text == "lower" || t.text == "upper") {
            expect(Tok::LParen, "'('");
            coord_t v = expect_int();
            expect(Tok::RParen, "')'");
            return t.text == "lower" ? lower_region(v) : upper_region(v);
        }
        if (t.text == "leftray" || t.text == "rightray") {
            expect(Tok::LParen, "'('");
            coord_t e = expect_int();
            expect(Tok::Comma, "','");
            coord_t tip = expect_int();
            expect(Tok::RParen, "')'");
            return t.text == "leftray"
                       ? ArcRegion::single(Trapezoid(IntInterval::at_most(tip), IntInterval::at(e)))
                       : ArcRegion::single(Trapezoid(IntInterval::at(e), IntInterval::at_least(tip)));
        }
        if (t.text == "shift") {
            expect(Tok::LParen, "'('");
            coord_t k = expect_int();
            expect(Tok::Comma, "','");
            ArcRegion r = parse_region();
            expect(Tok::RParen, "')'");
            return shift_region(r, k);
        }
        if (t.text == "not") {
            expect(Tok::LParen, "'('");
            ArcRegion r = parse_region();
            expect(Tok::RParen, "')'");
            return complement(r);
        }
        fail(t, "unknown region term '" + t.text + "'",
             {"arcs", "box", "lower", "upper", "leftray", "rightray", "all", "empty", "shift",
              "not"});
    }

    ArcRegion parse_region() {
        ArcRegion r = parse_term();
        while (peek().kind == Tok::Pipe) {
            take();
            r = union_of(r, parse_term());
        }
        return r;
    }
};

std::string range_text(coord_t lo, coord_t hi) {
    std::string s = finite(lo) ? "[" + std::to_string(lo) : std::string("(-inf");
    s += ",";
    s += finite(hi) ? std::to_string(hi) + "]" : std::string("+inf)");
    return s;
}

std::optional<std::string> sugar_for(const Trapezoid& t) {
    bool default_band = t.dlo == 2 && t.dhi >= kPosInf;
    bool mi_point = finite(t.mi.lo) && t.mi.lo == t.mi.hi;
    bool ni_point = finite(t.ni.lo) && t.ni.lo == t.ni.hi;
    if (!default_band) return std::nullopt;
    if (t.mi.lo <= kNegInf && t.ni.lo <= kNegInf && finite(t.ni.hi) && t.mi.hi >= t.ni.hi - 2)
        return "lower(" + std::to_string(t.ni.hi) + ")";
    if (finite(t.mi.lo) && t.mi.hi >= kPosInf && t.ni.lo <= kNegInf && t.ni.hi >= kPosInf)
        return "upper(" + std::to_string(t.mi.lo) + ")";
    if (ni_point && t.mi.lo <= kNegInf && finite(t.mi.hi))
        return "leftray(" + std::to_string(t.ni.lo) + "," + std::to_string(t.mi.hi) + ")";
    if (mi_point && finite(t.ni.lo) && t.ni.hi >= kPosInf)
        return "rightray(" + std::to_string(t.mi.lo) + "," + std::to_string(t.ni.lo) + ")";
    if (mi_point && t.ni.lo <= kNegInf && t.ni.hi >= kPosInf)
        return "rightray(" + std::to_string(t.mi.lo) + "," + std::to_string(t.mi.lo + 2) + ")";
    return std::nullopt;
}

}  // namespace

ArcRegion parse_region(const std::string& text) {
    Parser p{lex(text)};
    ArcRegion r = p.parse_region();
    if (p.peek().kind != Tok::End)
        p.fail(p.peek(), "unexpected trailing input '" + p.peek().text + "'", {"|", "end of input"});
    return r;
}

std::string print_region(const ArcRegion& r) {
    ArcRegion n = normalize(r);
    if (n.parts().empty()) return "empty";
    if (n.parts().size() == 1) {
        const Trapezoid& t = n.parts().front();
        if (t.mi.is_all() && t.ni.is_all() && t.dlo == 2 && t.dhi >= kPosInf) return "all";
    }
    if (is_finite(n)) {
        // small finite regions read best as a plain list of arcs
        try {
            std::vector<Arc> arcs = enumerate_all(n, 16);
            std::string s = "arcs{";
            for (std::size_t i = 0; i < arcs.size(); ++i) {
                if (i) s += ",";
                s += to_string(arcs[i]);
            }
            return s + "}";
        } catch (const precondition_error&) {
            // more than a handful; fall through to the trapezoid spelling
        }
    }
    std::vector<Arc> singles;
    std::vector<std::string> terms;
    for (const auto& t : n.parts()) {
        if (finite(t.mi.lo) && t.mi.lo == t.mi.hi && finite(t.ni.lo) && t.ni.lo == t.ni.hi) {
            singles.emplace_back(t.mi.lo, t.ni.lo);
            continue;
        }
        if (auto sugar = sugar_for(t)) {
            terms.push_back(*sugar);
            continue;
        }
        std::string s = "box(" + range_text(t.mi.lo, t.mi.hi) + "," + range_text(t.ni.lo, t.ni.hi);
        if (!(t.dlo == 2 && t.dhi >= kPosInf)) s += ",diag " + range_text(t.dlo, t.dhi);
        terms.push_back(s + ")");
    }
    if (!singles.empty()) {
        std::sort(singles.begin(), singles.end());
        std::string s = "arcs{";
        for (std::size_t i = 0; i < singles.size(); ++i) {
            if (i) s += ",";
            s += to_string(singles[i]);
        }
        terms.insert(terms.begin(), s + "}");
    }
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) out += " | ";
        out += terms[i];
    }
    return out;
}

}  // namespace arcline
