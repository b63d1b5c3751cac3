// Tokenizer and recursive-descent parsers for the three expression languages
// and the rule-file format.
//
//   terms      <->  ->  |  +  &  !          (loosest to tightest; arrows
//   contact    <=>  =>  \/  /\  ~            right-associative, the rest left)
//   modal      <->  ->  ~>  |  +  &  ! [A] <E>   (~> does not associate)
//
// Contact atoms are `t << u` and `t == u`.  The one ambiguity of the contact
// grammar — after `(` we may be reading a parenthesized formula or a term
// atom such as `(a & b) << c` — is resolved by trying the atom first and
// backtracking.  `top`/`bot` are reserved words naming the lattice constants
// and may not be used as variables.
//
// Rule files are line oriented:
//
//   # run-length comment
//   rule NAME
//   xvars x1 x2
//   pvars p
//   F: <modal formula>
//   G: <modal formula>
//
// A line that starts with no keyword continues the preceding F:/G: text, so
// long premises may be wrapped.

#include "s2ic/syntax.hpp"

#include <cctype>
#include <sstream>

namespace s2ic {

ParseError::ParseError(std::string msg, int line_, int col_, std::vector<std::string> exp)
    : std::runtime_error(std::move(msg)), line(line_), col(col_), expected(std::move(exp)) {}

namespace {

enum class Tok : uint8_t {
    End, Ident, Zero, One, Top, Bot,
    LParen, RParen,
    Bang, Amp, Pipe, Plus, TArrow, TIff,       // term connectives
    Tilde, FAnd, FOr, FImp, FIff,              // contact connectives
    Sim, Box, Diam,                            // modal extras
    Prec, EqEq,                                // atoms << and ==
};

const char* tok_name(Tok t) {
    switch (t) {
        case Tok::End: return "end of input";
        case Tok::Ident: return "identifier";
        case Tok::Zero: return "'0'";
        case Tok::One: return "'1'";
        case Tok::Top: return "'top'";
        case Tok::Bot: return "'bot'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::Bang: return "'!'";
        case Tok::Amp: return "'&'";
        case Tok::Pipe: return "'|'";
        case Tok::Plus: return "'+'";
        case Tok::TArrow: return "'->'";
        case Tok::TIff: return "'<->'";
        case Tok::Tilde: return "'~'";
        case Tok::FAnd: return "'/\\'";
        case Tok::FOr: return "'\\/'";
        case Tok::FImp: return "'=>'";
        case Tok::FIff: return "'<=>'";
        case Tok::Sim: return "'~>'";
        case Tok::Box: return "'[A]'";
        case Tok::Diam: return "'<E>'";
        case Tok::Prec: return "'<<'";
        case Tok::EqEq: return "'=='";
    }
    return "?";
}

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

class Lexer {
  public:
    Lexer(const std::string& text, int base_line) : src_(text), line_(base_line) { scan_all(); }

    const Token& peek(size_t ahead = 0) const {
        size_t i = pos_ + ahead;
        return i < toks_.size() ? toks_[i] : toks_.back();
    }
    Token next() {
        Token t = peek();
        if (pos_ + 1 < toks_.size()) ++pos_;
        else pos_ = toks_.size() - 1;
        return t;
    }
    size_t mark() const { return pos_; }
    void rewind(size_t m) { pos_ = m; }

    [[noreturn]] void fail(std::vector<std::string> expected) const {
        const Token& t = peek();
        std::ostringstream msg;
        msg << "parse error at line " << t.line << ", column " << t.col << ": expected ";
        for (size_t i = 0; i < expected.size(); ++i)
            msg << (i ? (i + 1 == expected.size() ? " or " : ", ") : "") << expected[i];
        msg << ", found " << (t.kind == Tok::Ident ? "'" + t.text + "'" : tok_name(t.kind));
        throw ParseError(msg.str(), t.line, t.col, std::move(expected));
    }

    Token expect(Tok kind) {
        if (peek().kind != kind) fail({tok_name(kind)});
        return next();
    }

  private:
    void scan_all() {
        size_t i = 0;
        int col = 1;
        auto push = [&](Tok k, size_t len) {
            toks_.push_back({k, src_.substr(i, len), line_, col});
            i += len;
            col += static_cast<int>(len);
        };
        while (i < src_.size()) {
            char c = src_[i];
            if (c == '\n') { ++line_; col = 1; ++i; continue; }
            if (std::isspace(static_cast<unsigned char>(c))) { ++i; ++col; continue; }
            if (c == '#') {  // comment to end of line
                while (i < src_.size() && src_[i] != '\n') ++i;
                continue;
            }
            auto at = [&](const char* s) { return src_.compare(i, std::char_traits<char>::length(s), s) == 0; };
            if (at("<=>")) { push(Tok::FIff, 3); continue; }
            if (at("<->")) { push(Tok::TIff, 3); continue; }
            if (at("<E>")) { push(Tok::Diam, 3); continue; }
            if (at("[A]")) { push(Tok::Box, 3); continue; }
            if (at("<<")) { push(Tok::Prec, 2); continue; }
            if (at("->")) { push(Tok::TArrow, 2); continue; }
            if (at("~>")) { push(Tok::Sim, 2); continue; }
            if (at("=>")) { push(Tok::FImp, 2); continue; }
            if (at("==")) { push(Tok::EqEq, 2); continue; }
            if (at("/\\")) { push(Tok::FAnd, 2); continue; }
            if (at("\\/")) { push(Tok::FOr, 2); continue; }
            switch (c) {
                case '(': push(Tok::LParen, 1); continue;
                case ')': push(Tok::RParen, 1); continue;
                case '!': push(Tok::Bang, 1); continue;
                case '&': push(Tok::Amp, 1); continue;
                case '|': push(Tok::Pipe, 1); continue;
                case '+': push(Tok::Plus, 1); continue;
                case '~': push(Tok::Tilde, 1); continue;
                case '0': push(Tok::Zero, 1); continue;
                case '1': push(Tok::One, 1); continue;
                default: break;
            }
            if (c >= 'a' && c <= 'z') {
                size_t j = i + 1;
                while (j < src_.size() &&
                       (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_'))
                    ++j;
                std::string word = src_.substr(i, j - i);
                Tok k = word == "top" ? Tok::Top : word == "bot" ? Tok::Bot : Tok::Ident;
                toks_.push_back({k, word, line_, col});
                col += static_cast<int>(j - i);
                i = j;
                continue;
            }
            std::ostringstream msg;
            msg << "parse error at line " << line_ << ", column " << col
                << ": unexpected character '" << c << "'";
            throw ParseError(msg.str(), line_, col, {});
        }
        toks_.push_back({Tok::End, "", line_, col});
    }

    std::string src_;
    int line_;
    std::vector<Token> toks_;
    size_t pos_ = 0;
};

// ── term grammar ─────────────────────────────────────────────────────────────

TermPtr parse_term_iff(Lexer& lx);

TermPtr parse_term_unary(Lexer& lx) {
    switch (lx.peek().kind) {
        case Tok::Bang: lx.next(); return t_not(parse_term_unary(lx));
        case Tok::Zero: lx.next(); return t_zero();
        case Tok::One: lx.next(); return t_one();
        case Tok::Bot: lx.next(); return t_zero();
        case Tok::Top: lx.next(); return t_one();
        case Tok::Ident: return t_var(lx.next().text);
        case Tok::LParen: {
            lx.next();
            TermPtr t = parse_term_iff(lx);
            lx.expect(Tok::RParen);
            return t;
        }
        default: lx.fail({"a term"});
    }
}

TermPtr parse_term_and(Lexer& lx) {
    TermPtr t = parse_term_unary(lx);
    while (lx.peek().kind == Tok::Amp) { lx.next(); t = t_and(t, parse_term_unary(lx)); }
    return t;
}

TermPtr parse_term_xor(Lexer& lx) {
    TermPtr t = parse_term_and(lx);
    while (lx.peek().kind == Tok::Plus) { lx.next(); t = t_xor(t, parse_term_and(lx)); }
    return t;
}

TermPtr parse_term_or(Lexer& lx) {
    TermPtr t = parse_term_xor(lx);
    while (lx.peek().kind == Tok::Pipe) { lx.next(); t = t_or(t, parse_term_xor(lx)); }
    return t;
}

TermPtr parse_term_imp(Lexer& lx) {
    TermPtr t = parse_term_or(lx);
    if (lx.peek().kind == Tok::TArrow) { lx.next(); return t_imp(t, parse_term_imp(lx)); }
    return t;
}

TermPtr parse_term_iff(Lexer& lx) {
    TermPtr t = parse_term_imp(lx);
    if (lx.peek().kind == Tok::TIff) { lx.next(); return t_iff(t, parse_term_iff(lx)); }
    return t;
}

// ── contact-formula grammar ──────────────────────────────────────────────────

FormPtr parse_form_iff(Lexer& lx);

FormPtr parse_form_atom(Lexer& lx) {
    TermPtr t = parse_term_iff(lx);
    Tok k = lx.peek().kind;
    if (k == Tok::Prec) { lx.next(); return f_atom(t, parse_term_iff(lx)); }
    if (k == Tok::EqEq) { lx.next(); return f_equation(t, parse_term_iff(lx)); }
    lx.fail({"'<<'", "'=='"});
}

FormPtr parse_form_unary(Lexer& lx) {
    switch (lx.peek().kind) {
        case Tok::Tilde: lx.next(); return f_neg(parse_form_unary(lx));
        case Tok::Top: lx.next(); return f_top();
        case Tok::Bot: lx.next(); return f_bot();
        case Tok::Zero:
        case Tok::One:
        case Tok::Bang:
        case Tok::Ident:
            return parse_form_atom(lx);
        case Tok::LParen: {
            // Either a parenthesized formula or an atom whose left term is
            // parenthesized.  Try the atom reading first and fall back.
            size_t m = lx.mark();
            try {
                return parse_form_atom(lx);
            } catch (const ParseError&) {
                lx.rewind(m);
            }
            lx.next();
            FormPtr f = parse_form_iff(lx);
            lx.expect(Tok::RParen);
            return f;
        }
        default: lx.fail({"a formula"});
    }
}

FormPtr parse_form_and(Lexer& lx) {
    FormPtr f = parse_form_unary(lx);
    while (lx.peek().kind == Tok::FAnd) { lx.next(); f = f_conj(f, parse_form_unary(lx)); }
    return f;
}

FormPtr parse_form_or(Lexer& lx) {
    FormPtr f = parse_form_and(lx);
    while (lx.peek().kind == Tok::FOr) { lx.next(); f = f_disj(f, parse_form_and(lx)); }
    return f;
}

FormPtr parse_form_imp(Lexer& lx) {
    FormPtr f = parse_form_or(lx);
    if (lx.peek().kind == Tok::FImp) { lx.next(); return f_imp(f, parse_form_imp(lx)); }
    return f;
}

FormPtr parse_form_iff(Lexer& lx) {
    FormPtr f = parse_form_imp(lx);
    if (lx.peek().kind == Tok::FIff) { lx.next(); return f_iff(f, parse_form_iff(lx)); }
    return f;
}

// ── modal grammar ────────────────────────────────────────────────────────────

ModalPtr parse_modal_iff(Lexer& lx);

ModalPtr parse_modal_unary(Lexer& lx) {
    switch (lx.peek().kind) {
        case Tok::Bang: lx.next(); return m_not(parse_modal_unary(lx));
        case Tok::Box: lx.next(); return m_univ(parse_modal_unary(lx));
        case Tok::Diam: lx.next(); return m_diam(parse_modal_unary(lx));
        case Tok::Zero: lx.next(); return m_bot();
        case Tok::One: lx.next(); return m_top();
        case Tok::Bot: lx.next(); return m_bot();
        case Tok::Top: lx.next(); return m_top();
        case Tok::Ident: return m_var(lx.next().text);
        case Tok::LParen: {
            lx.next();
            ModalPtr m = parse_modal_iff(lx);
            lx.expect(Tok::RParen);
            return m;
        }
        default: lx.fail({"a modal formula"});
    }
}

ModalPtr parse_modal_and(Lexer& lx) {
    ModalPtr m = parse_modal_unary(lx);
    while (lx.peek().kind == Tok::Amp) { lx.next(); m = m_and(m, parse_modal_unary(lx)); }
    return m;
}

ModalPtr parse_modal_xor(Lexer& lx) {
    ModalPtr m = parse_modal_and(lx);
    while (lx.peek().kind == Tok::Plus) { lx.next(); m = m_xor(m, parse_modal_and(lx)); }
    return m;
}

ModalPtr parse_modal_or(Lexer& lx) {
    ModalPtr m = parse_modal_xor(lx);
    while (lx.peek().kind == Tok::Pipe) { lx.next(); m = m_or(m, parse_modal_xor(lx)); }
    return m;
}

ModalPtr parse_modal_sim(Lexer& lx) {
    ModalPtr m = parse_modal_or(lx);
    if (lx.peek().kind == Tok::Sim) {
        lx.next();
        ModalPtr rhs = parse_modal_or(lx);
        if (lx.peek().kind == Tok::Sim)
            lx.fail({"'~>' does not associate; parenthesize one side"});
        return m_sim(m, rhs);
    }
    return m;
}

ModalPtr parse_modal_imp(Lexer& lx) {
    ModalPtr m = parse_modal_sim(lx);
    if (lx.peek().kind == Tok::TArrow) { lx.next(); return m_imp(m, parse_modal_imp(lx)); }
    return m;
}

ModalPtr parse_modal_iff(Lexer& lx) {
    ModalPtr m = parse_modal_imp(lx);
    if (lx.peek().kind == Tok::TIff) { lx.next(); return m_iff(m, parse_modal_iff(lx)); }
    return m;
}

}  // namespace

// ── entry points ─────────────────────────────────────────────────────────────

TermPtr parse_term(const std::string& text) {
    Lexer lx(text, 1);
    TermPtr t = parse_term_iff(lx);
    if (lx.peek().kind != Tok::End) lx.fail({"end of input"});
    return t;
}

FormPtr parse_contact(const std::string& text) {
    Lexer lx(text, 1);
    FormPtr f = parse_form_iff(lx);
    if (lx.peek().kind != Tok::End) lx.fail({"end of input"});
    return f;
}

ModalPtr parse_modal(const std::string& text) {
    Lexer lx(text, 1);
    ModalPtr m = parse_modal_iff(lx);
    if (lx.peek().kind != Tok::End) lx.fail({"end of input"});
    return m;
}

// ── rule files ───────────────────────────────────────────────────────────────

namespace {

ModalPtr parse_modal_at(const std::string& text, int line) {
    Lexer lx(text, line);
    ModalPtr m = parse_modal_iff(lx);
    if (lx.peek().kind != Tok::End) lx.fail({"end of input"});
    return m;
}

std::vector<std::string> split_words(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

std::vector<Pi2Rule> parse_rules(const std::string& text) {
    std::vector<std::string> lines;
    {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) lines.push_back(strip_comment(line));
    }

    std::vector<Pi2Rule> rules;
    Pi2Rule cur;
    bool in_rule = false, have_f = false, have_g = false;
    std::string f_text, g_text;
    int f_line = 0, g_line = 0;
    enum { None, InF, InG } cont = None;

    auto finish = [&]() {
        if (!in_rule) return;
        if (!have_f || !have_g)
            throw ParseError("rule " + cur.name + ": missing " + (have_f ? "G:" : "F:") + " line",
                             0, 0, {});
        cur.F = parse_modal_at(f_text, f_line);
        cur.G = parse_modal_at(g_text, g_line);
        validate_rule(cur);
        rules.push_back(cur);
        cur = Pi2Rule{};
        have_f = have_g = false;
        f_text.clear();
        g_text.clear();
        cont = None;
    };

    for (size_t i = 0; i < lines.size(); ++i) {
        const std::string& raw = lines[i];
        int lineno = static_cast<int>(i) + 1;
        if (blank(raw)) continue;
        auto words = split_words(raw);
        const std::string& kw = words[0];
        if (kw == "rule") {
            finish();
            if (words.size() != 2)
                throw ParseError("line " + std::to_string(lineno) + ": expected 'rule NAME'",
                                 lineno, 1, {"rule NAME"});
            in_rule = true;
            cur.name = words[1];
            cont = None;
        } else if (kw == "xvars" || kw == "pvars") {
            if (!in_rule)
                throw ParseError("line " + std::to_string(lineno) + ": '" + kw +
                                 "' outside a rule block", lineno, 1, {"rule NAME"});
            auto& dst = kw == "xvars" ? cur.xvars : cur.pvars;
            dst.assign(words.begin() + 1, words.end());
            cont = None;
        } else if (kw.rfind("F:", 0) == 0) {
            if (!in_rule)
                throw ParseError("line " + std::to_string(lineno) + ": 'F:' outside a rule block",
                                 lineno, 1, {"rule NAME"});
            f_text = raw.substr(raw.find("F:") + 2);
            f_line = lineno;
            have_f = true;
            cont = InF;
        } else if (kw.rfind("G:", 0) == 0) {
            if (!in_rule)
                throw ParseError("line " + std::to_string(lineno) + ": 'G:' outside a rule block",
                                 lineno, 1, {"rule NAME"});
            g_text = raw.substr(raw.find("G:") + 2);
            g_line = lineno;
            have_g = true;
            cont = InG;
        } else if (cont == InF) {
            f_text += "\n" + raw;
        } else if (cont == InG) {
            g_text += "\n" + raw;
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": expected a rule keyword",
                             lineno, 1, {"rule", "xvars", "pvars", "F:", "G:"});
        }
    }
    finish();
    if (rules.empty()) throw ParseError("no rule block found", 0, 0, {"rule NAME"});
    return rules;
}

Pi2Rule parse_rule(const std::string& text) { return parse_rules(text).front(); }

}  // namespace s2ic
