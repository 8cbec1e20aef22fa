#include "exprlang.hpp"

#include "bases.hpp"
#include "characters.hpp"
#include "error.hpp"
#include "plethysm.hpp"
#include "propcalc.hpp"

#include <charconv>
#include <set>

namespace bisym::expr {

// ---------------------------------------------------------------------------
// Tokens

namespace {

enum class tok_type { ident, number, punct, end };

struct token {
    tok_type type;
    std::string text;
    int line;
    int col;
};

class lexer {
public:
    explicit lexer(std::string_view src) : src_(src) { advance(); }

    const token& peek() const { return cur_; }

    token take() {
        token t = cur_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t' ||
                                      src_[pos_] == '\n' || src_[pos_] == '\r')) {
            if (src_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
        cur_.line = line_;
        cur_.col = col_;
        if (pos_ >= src_.size()) {
            cur_ = token{tok_type::end, "", line_, col_};
            return;
        }
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
            // A '/' directly followed by a digit extends the token to a rational.
            if (pos_ + 1 < src_.size() && src_[pos_] == '/' &&
                std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
                ++pos_;
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    ++pos_;
            }
            cur_ = token{tok_type::number, std::string(src_.substr(start, pos_ - start)),
                         line_, col_};
            col_ += static_cast<int>(pos_ - start);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            cur_ = token{tok_type::ident, std::string(src_.substr(start, pos_ - start)),
                         line_, col_};
            col_ += static_cast<int>(pos_ - start);
            return;
        }
        static const std::string punct = "+-*^()[],;";
        if (punct.find(c) != std::string::npos) {
            cur_ = token{tok_type::punct, std::string(1, c), line_, col_};
            ++pos_;
            ++col_;
            return;
        }
        throw parse_error(std::string("unexpected character '") + c + "'", line_, col_);
    }

    std::string_view src_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    token cur_{tok_type::end, "", 1, 1};
};

// ---------------------------------------------------------------------------
// Parser

const std::set<std::string>& call_names() {
    static const std::set<std::string> names = {
        "pleth", "relpleth", "koike", "sat",     "box",  "cbox", "omega",
        "omega_x", "omega_y", "psi",  "exp1", "log1"};
    return names;
}

class parser {
public:
    explicit parser(std::string_view src) : lx_(src) {}

    node_ptr run() {
        node_ptr e = parse_expr();
        const token& t = lx_.peek();
        if (t.type != tok_type::end)
            throw parse_error("trailing input after expression", t.line, t.col);
        return e;
    }

private:
    [[noreturn]] void fail(const token& t, const std::string& what) {
        throw parse_error(what + (t.type == tok_type::end ? " at end of input"
                                                          : ", got '" + t.text + "'"),
                          t.line, t.col);
    }

    token expect_punct(const std::string& p, const std::string& what) {
        token t = lx_.take();
        if (t.type != tok_type::punct || t.text != p) fail(t, "expected '" + p + "' " + what);
        return t;
    }

    bool peek_punct(const std::string& p) {
        return lx_.peek().type == tok_type::punct && lx_.peek().text == p;
    }

    int expect_int(const std::string& what, bool allow_negative = false) {
        bool neg = false;
        if (allow_negative && peek_punct("-")) {
            lx_.take();
            neg = true;
        }
        token t = lx_.take();
        if (t.type != tok_type::number || t.text.find('/') != std::string::npos)
            fail(t, "expected an integer " + what);
        int v = 0;
        auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc() || p != t.text.data() + t.text.size())
            fail(t, "integer out of range");
        return neg ? -v : v;
    }

    node_ptr make(kind k, const token& at) {
        auto n = std::make_unique<node>();
        n->k = k;
        n->line = at.line;
        n->col = at.col;
        return n;
    }

    node_ptr parse_expr() {
        node_ptr left = parse_term();
        while (peek_punct("+") || peek_punct("-")) {
            token op = lx_.take();
            node_ptr n = make(op.text == "+" ? kind::add : kind::sub, op);
            n->args.push_back(std::move(left));
            n->args.push_back(parse_term());
            left = std::move(n);
        }
        return left;
    }

    node_ptr parse_term() {
        if (peek_punct("-")) {
            token op = lx_.take();
            node_ptr n = make(kind::neg, op);
            n->args.push_back(parse_term());
            return n;
        }
        node_ptr left = parse_factor();
        while (peek_punct("*")) {
            token op = lx_.take();
            node_ptr n = make(kind::mul, op);
            n->args.push_back(std::move(left));
            n->args.push_back(parse_factor());
            left = std::move(n);
        }
        return left;
    }

    node_ptr parse_factor() {
        node_ptr base = parse_primary();
        if (peek_punct("^")) {
            token op = lx_.take();
            node_ptr n = make(kind::pow, op);
            n->index = expect_int("exponent", /*allow_negative=*/true);
            n->args.push_back(std::move(base));
            return n;
        }
        return base;
    }

    alphabet parse_alpha() {
        expect_punct("(", "before the alphabet");
        token t = lx_.take();
        alphabet a;
        if (t.type == tok_type::ident && t.text == "x") a = alphabet::x;
        else if (t.type == tok_type::ident && t.text == "y") a = alphabet::y;
        else fail(t, "expected alphabet 'x' or 'y'");
        expect_punct(")", "after the alphabet");
        return a;
    }

    partition parse_partition() {
        std::vector<int> parts;
        if (!peek_punct("]")) {
            parts.push_back(expect_int("partition part"));
            while (peek_punct(",")) {
                lx_.take();
                parts.push_back(expect_int("partition part"));
            }
        }
        token t = lx_.peek();
        expect_punct("]", "closing the partition");
        try {
            return partition(std::move(parts));
        } catch (const domain_error& e) {
            throw parse_error(e.what(), t.line, t.col);
        }
    }

    node_ptr parse_primary() {
        token t = lx_.take();
        if (t.type == tok_type::number) {
            node_ptr n = make(kind::literal, t);
            if (!rat_from_string(t.text, n->lit))
                fail(t, "malformed rational literal");
            return n;
        }
        if (t.type == tok_type::punct && t.text == "(") {
            node_ptr inner = parse_expr();
            expect_punct(")", "closing the parenthesis");
            return inner;
        }
        if (t.type != tok_type::ident) fail(t, "expected an expression");

        if (t.text == "hbar") return make(kind::hbar, t);
        if (t.text == "E") return make(kind::series_E, t);
        if (t.text == "L") return make(kind::series_L, t);
        if (t.text == "R") {
            node_ptr n = make(kind::series_R, t);
            expect_punct("[", "after R");
            n->index = expect_int("index");
            expect_punct("]", "after the index");
            return n;
        }
        if (t.text == "p" || t.text == "h" || t.text == "e" || t.text == "s") {
            node_ptr n = make(kind::atom, t);
            n->fn = t.text;
            expect_punct("[", "after the basis letter");
            if (t.text == "s") {
                n->lam = parse_partition();
            } else {
                n->index = expect_int("index");
                expect_punct("]", "after the index");
            }
            n->alpha = parse_alpha();
            return n;
        }
        if (call_names().count(t.text)) {
            node_ptr n = make(kind::call, t);
            n->fn = t.text;
            expect_punct("(", "opening the argument list");
            n->args.push_back(parse_expr());
            if (t.text == "relpleth") {
                expect_punct(";", "between the relative-plethysm arguments");
                n->args.push_back(parse_expr());
                expect_punct(",", "between the substituted arguments");
                n->args.push_back(parse_expr());
            } else if (t.text == "pleth" || t.text == "koike" || t.text == "box" ||
                       t.text == "cbox") {
                expect_punct(",", "between the arguments");
                n->args.push_back(parse_expr());
            }
            expect_punct(")", "closing the argument list");
            return n;
        }
        fail(t, "unknown identifier '" + t.text + "'");
    }

    lexer lx_;
};

} // namespace

node_ptr parse(std::string_view text) { return parser(text).run(); }

// ---------------------------------------------------------------------------
// Printer

namespace {

int precedence(const node& e) {
    switch (e.k) {
    case kind::add:
    case kind::sub: return 0;
    case kind::neg: return 1;
    case kind::mul: return 2;
    case kind::pow: return 3;
    default: return 4;
    }
}

void print_into(const node& e, std::string& out);

void print_child(const node& child, int min_prec, std::string& out) {
    if (precedence(child) < min_prec) {
        out += "(";
        print_into(child, out);
        out += ")";
    } else {
        print_into(child, out);
    }
}

void print_into(const node& e, std::string& out) {
    switch (e.k) {
    case kind::literal:
        if (e.lit < 0) {
            out += "-";
            out += rat_to_string(rat(abs(e.lit)));
        } else {
            out += rat_to_string(e.lit);
        }
        return;
    case kind::atom:
        out += e.fn;
        out += "[";
        if (e.fn == "s") {
            const auto& parts = e.lam.parts();
            for (size_t i = 0; i < parts.size(); ++i) {
                if (i) out += ",";
                out += std::to_string(parts[i]);
            }
        } else {
            out += std::to_string(e.index);
        }
        out += "](";
        out += (e.alpha == alphabet::x ? "x" : "y");
        out += ")";
        return;
    case kind::hbar: out += "hbar"; return;
    case kind::series_E: out += "E"; return;
    case kind::series_L: out += "L"; return;
    case kind::series_R:
        out += "R[";
        out += std::to_string(e.index);
        out += "]";
        return;
    case kind::add:
        print_child(*e.args[0], 0, out);
        out += " + ";
        print_child(*e.args[1], 1, out);
        return;
    case kind::sub:
        print_child(*e.args[0], 0, out);
        out += " - ";
        print_child(*e.args[1], 1, out);
        return;
    case kind::neg:
        out += "-";
        print_child(*e.args[0], 1, out);
        return;
    case kind::mul:
        print_child(*e.args[0], 2, out);
        out += "*";
        print_child(*e.args[1], 2, out);
        return;
    case kind::pow:
        print_child(*e.args[0], 4, out);
        out += "^";
        out += std::to_string(e.index);
        return;
    case kind::call:
        out += e.fn;
        out += "(";
        for (size_t i = 0; i < e.args.size(); ++i) {
            if (i) out += (e.fn == "relpleth" && i == 1) ? "; " : ", ";
            print_into(*e.args[i], out);
        }
        out += ")";
        return;
    }
}

} // namespace

std::string print(const node& e) {
    std::string out;
    print_into(e, out);
    return out;
}

// ---------------------------------------------------------------------------
// Evaluator

namespace {

std::string span_of(const node& e) {
    return "at " + std::to_string(e.line) + ":" + std::to_string(e.col);
}

bool already_decorated(const char* what) {
    return what[0] == 'a' && what[1] == 't' && what[2] == ' ';
}

[[noreturn]] void decorate_and_throw(const node& e, const std::string& op) {
    std::string prefix = span_of(e) + " (" + op + "): ";
    try {
        throw;
    } catch (const window_error& err) {
        if (already_decorated(err.what())) throw;
        throw window_error(prefix + err.what());
    } catch (const domain_error& err) {
        if (already_decorated(err.what())) throw;
        throw domain_error(prefix + err.what());
    } catch (const error& err) {
        if (already_decorated(err.what())) throw;
        throw error(prefix + err.what());
    }
}

// Extract a one-alphabet series from an expression value; every key must
// live purely in x or purely in y (constants count as either).
sym_series demote(const bisym_series& f, const node& where, const char* role) {
    bool has_x = false, has_y = false;
    for (const auto& [k, c] : f.terms()) {
        if (!k.xp.empty()) has_x = true;
        if (!k.yp.empty()) has_y = true;
    }
    if (has_x && has_y)
        throw domain_error(span_of(where) + ": " + role +
                           " must be a one-alphabet expression");
    alphabet tag = has_y ? alphabet::y : alphabet::x;
    sym_series out(tag, f.trunc());
    if (f.dropped_keys()) out.mark_dropped();
    for (const auto& [k, c] : f.terms()) out.add_term(tag == alphabet::y ? k.yp : k.xp, c);
    return out;
}

bisym_series eval_node(const node& e, const truncation& tr);

bisym_series eval_call(const node& e, const truncation& tr) {
    const std::string& fn = e.fn;
    if (fn == "pleth") {
        sym_series f = demote(eval_node(*e.args[0], tr), *e.args[0], "the outer function");
        sym_series g = demote(eval_node(*e.args[1], tr), *e.args[1], "the substituted series");
        return embed(pleth(f, g));
    }
    if (fn == "relpleth") {
        bisym_series f = eval_node(*e.args[0], tr);
        bisym_series gbar = eval_node(*e.args[1], tr);
        sym_series g = demote(eval_node(*e.args[2], tr), *e.args[2], "the y-substituted series");
        return relpleth(f, gbar, g);
    }
    if (fn == "koike") return koike_pleth(eval_node(*e.args[0], tr), eval_node(*e.args[1], tr));
    if (fn == "sat") return saturate(eval_node(*e.args[0], tr));
    if (fn == "box") return box(eval_node(*e.args[0], tr), eval_node(*e.args[1], tr));
    if (fn == "cbox")
        return connected_box(eval_node(*e.args[0], tr), eval_node(*e.args[1], tr));
    if (fn == "omega") return omega_xy(eval_node(*e.args[0], tr));
    if (fn == "omega_x") return omega_x(eval_node(*e.args[0], tr));
    if (fn == "omega_y") return omega_y(eval_node(*e.args[0], tr));
    if (fn == "psi") return psi_regrade(eval_node(*e.args[0], tr));
    if (fn == "exp1") return exp1(eval_node(*e.args[0], tr));
    if (fn == "log1") return log1(eval_node(*e.args[0], tr));
    throw error(span_of(e) + ": unhandled call '" + fn + "'");
}

bisym_series eval_node(const node& e, const truncation& tr) {
    try {
        switch (e.k) {
        case kind::literal: return scale(unit(tr), e.lit);
        case kind::atom: {
            sym_series s = e.fn == "p"   ? p_basis(e.alpha, e.index, tr)
                           : e.fn == "h" ? h_to_p(e.index, e.alpha, tr)
                           : e.fn == "e" ? e_to_p(e.index, e.alpha, tr)
                                         : schur_to_p(e.lam, e.alpha, tr);
            return embed(s);
        }
        case kind::hbar: {
            bisym_series out(tr);
            out.add_term(bikey{partition{}, partition{}}, 1, rat(-1));
            return out;
        }
        case kind::series_E: return embed(ch_ucom(alphabet::x, tr));
        case kind::series_L: return embed(log_kernel(alphabet::x, tr));
        case kind::series_R: return regular_rep_char(e.index, tr);
        case kind::add: return add(eval_node(*e.args[0], tr), eval_node(*e.args[1], tr));
        case kind::sub: return sub(eval_node(*e.args[0], tr), eval_node(*e.args[1], tr));
        case kind::neg: return neg(eval_node(*e.args[0], tr));
        case kind::mul: return mul(eval_node(*e.args[0], tr), eval_node(*e.args[1], tr));
        case kind::pow: {
            bisym_series base = eval_node(*e.args[0], tr);
            int n = e.index;
            if (n < 0) {
                // Only Laurent monomials in t are invertible here.
                if (base.terms().size() != 1)
                    throw domain_error("negative exponent of a non-invertible series");
                const auto& [k, c] = *base.terms().begin();
                if (!k.xp.empty() || !k.yp.empty() || c.terms().size() != 1)
                    throw domain_error("negative exponent of a non-invertible series");
                const auto& [texp, v] = *c.terms().begin();
                bisym_series inv(tr);
                if (base.dropped_keys()) inv.mark_dropped();
                inv.add_term(k, -texp, rat(1) / v);
                base = inv;
                n = -n;
            }
            bisym_series acc = unit(tr);
            for (int i = 0; i < n; ++i) acc = mul(acc, base);
            return acc;
        }
        case kind::call: return eval_call(e, tr);
        }
        throw error("unhandled expression node");
    } catch (...) {
        decorate_and_throw(e, e.k == kind::call ? e.fn : "evaluate");
    }
}

} // namespace

bisym_series evaluate(const node& e, const truncation& tr) { return eval_node(e, tr); }

} // namespace bisym::expr
