#include "planekit/parse.hpp"

#include <cctype>
#include <map>

namespace planekit {

namespace {

Scalar scalar_from_digits(const std::string& digits, const FieldSpec& f) {
    mpz_class z(digits);
    if (f.is_rationals()) return Scalar::from_mpq(mpq_class(z));
    mpz_class m = z % static_cast<long>(f.p);
    return Scalar::residue(m.get_ui(), f);
}

class Cursor {
public:
    Cursor(const std::string& text, FieldSpec field) : s_(text), field_(field) {}

    std::size_t pos() const { return i_; }

    void skip_ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    char peek() {
        skip_ws();
        return i_ < s_.size() ? s_[i_] : '\0';
    }

    bool try_consume(char c) {
        if (peek() == c) {
            ++i_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!try_consume(c))
            throw ParseError(pos_after_ws(), std::string("expected '") + c + "' " + what);
    }

    std::size_t pos_after_ws() {
        skip_ws();
        return i_;
    }

    void expect_end() {
        skip_ws();
        if (i_ < s_.size())
            throw ParseError(i_, "unexpected trailing input");
    }

    // integer literal (digits only; sign handled by the expression grammar)
    std::string read_digits() {
        skip_ws();
        std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (i_ == start) throw ParseError(start, "expected digits");
        return s_.substr(start, i_ - start);
    }

    std::string read_ident() {
        skip_ws();
        std::size_t start = i_;
        while (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (i_ == start) throw ParseError(start, "expected identifier");
        return s_.substr(start, i_ - start);
    }

    const FieldSpec& field() const { return field_; }

private:
    const std::string& s_;
    FieldSpec field_;
    std::size_t i_ = 0;
};

// Polynomial expression over a named variable set. Returned as BiPoly; the
// univariate entry points convert afterwards.
class ExprParser {
public:
    ExprParser(Cursor& cur, std::map<std::string, BiPoly> vars) : cur_(cur), vars_(std::move(vars)) {}

    BiPoly parse() { return parse_sum(); }

private:
    BiPoly parse_sum() {
        BiPoly acc = parse_term();
        for (;;) {
            if (cur_.try_consume('+'))
                acc = acc + parse_term();
            else if (cur_.try_consume('-'))
                acc = acc - parse_term();
            else
                return acc;
        }
    }

    BiPoly parse_term() {
        BiPoly acc = parse_factor();
        for (;;) {
            if (cur_.try_consume('*')) {
                acc = acc * parse_factor();
            } else if (cur_.try_consume('/')) {
                const std::size_t at = cur_.pos_after_ws();
                BiPoly div = parse_factor();
                if (div.total_degree() > 0)
                    throw ParseError(at, "division only by constants");
                const Scalar c = div.coeff(0, 0);
                if (c.is_zero()) throw ParseError(at, "division by zero");
                acc = acc.scaled(c.inverse());
            } else {
                return acc;
            }
        }
    }

    BiPoly parse_factor() {
        if (cur_.try_consume('-')) return -parse_factor();
        if (cur_.try_consume('+')) return parse_factor();
        BiPoly base = parse_primary();
        if (cur_.try_consume('^')) {
            const std::size_t at = cur_.pos_after_ws();
            const std::string digits = cur_.read_digits();
            if (digits.size() > 6) throw ParseError(at, "exponent too large");
            base = base.pow(std::stoi(digits));
        }
        return base;
    }

    BiPoly parse_primary() {
        const char c = cur_.peek();
        const std::size_t at = cur_.pos_after_ws();
        if (c == '(') {
            cur_.expect('(', "to open a group");
            BiPoly inner = parse_sum();
            cur_.expect(')', "to close the group");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return BiPoly::constant(scalar_from_digits(cur_.read_digits(), cur_.field()));
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::string name = cur_.read_ident();
            auto it = vars_.find(name);
            if (it == vars_.end())
                throw ParseError(at, "unknown variable '" + name + "'");
            return it->second;
        }
        throw ParseError(at, "expected a number, variable or '('");
    }

    Cursor& cur_;
    std::map<std::string, BiPoly> vars_;
};

std::map<std::string, BiPoly> vars_xy(const FieldSpec& f) {
    return {{"x", BiPoly::x(f)}, {"y", BiPoly::y(f)}};
}

std::map<std::string, BiPoly> vars_t(const FieldSpec& f) {
    // t rides in the x slot of a BiPoly and is converted on the way out
    return {{"t", BiPoly::x(f)}};
}

UniPoly demote_to_t(const BiPoly& p, std::size_t at) {
    if (!p.depends_only_on_x()) throw ParseError(at, "expected a polynomial in t only");
    return p.to_unipoly_in_x();
}

BiPoly parse_expr_at(Cursor& cur, const std::map<std::string, BiPoly>& vars) {
    ExprParser ep(cur, vars);
    return ep.parse();
}

} // namespace

Scalar parse_scalar(const std::string& text, const FieldSpec& f) {
    Cursor cur(text, f);
    BiPoly p = parse_expr_at(cur, {});
    cur.expect_end();
    if (p.total_degree() > 0) throw ParseError(0, "expected a constant");
    return p.coeff(0, 0);
}

UniPoly parse_unipoly(const std::string& text, const FieldSpec& f) {
    Cursor cur(text, f);
    BiPoly p = parse_expr_at(cur, vars_t(f));
    cur.expect_end();
    return demote_to_t(p, 0);
}

BiPoly parse_bipoly(const std::string& text, const FieldSpec& f) {
    Cursor cur(text, f);
    BiPoly p = parse_expr_at(cur, vars_xy(f));
    cur.expect_end();
    return p;
}

namespace {

MatPoly2 parse_matpoly_at(Cursor& cur) {
    const FieldSpec f = cur.field();
    const auto vars = vars_t(f);
    cur.expect('[', "to open the matrix");
    UniPoly e[4] = {UniPoly::zero(f), UniPoly::zero(f), UniPoly::zero(f), UniPoly::zero(f)};
    for (int row = 0; row < 2; ++row) {
        cur.expect('[', "to open a row");
        for (int col = 0; col < 2; ++col) {
            const std::size_t at = cur.pos_after_ws();
            e[2 * row + col] = demote_to_t(parse_expr_at(cur, vars), at);
            if (col == 0) cur.expect(',', "between row entries");
        }
        cur.expect(']', "to close the row");
        if (row == 0) cur.expect(',', "between rows");
    }
    cur.expect(']', "to close the matrix");
    return MatPoly2(e[0], e[1], e[2], e[3]);
}

} // namespace

MatPoly2 parse_matpoly(const std::string& text, const FieldSpec& f) {
    Cursor cur(text, f);
    MatPoly2 m = parse_matpoly_at(cur);
    cur.expect_end();
    return m;
}

Mat2 parse_mat2(const std::string& text, const FieldSpec& f) {
    Cursor cur(text, f);
    MatPoly2 m = parse_matpoly_at(cur);
    cur.expect_end();
    if (m.degree() > 0) throw ParseError(0, "expected constant matrix entries");
    return m.eval0();
}

ProjPoint parse_projpoint(const std::string& text, const FieldSpec& f) {
    Cursor cur(text, f);
    cur.expect('(', "to open the point");
    const std::size_t at_a = cur.pos_after_ws();
    BiPoly a = parse_expr_at(cur, {});
    cur.expect(':', "between the coordinates");
    const std::size_t at_b = cur.pos_after_ws();
    BiPoly b = parse_expr_at(cur, {});
    cur.expect(')', "to close the point");
    cur.expect_end();
    if (a.total_degree() > 0) throw ParseError(at_a, "expected a constant");
    if (b.total_degree() > 0) throw ParseError(at_b, "expected a constant");
    return ProjPoint(a.coeff(0, 0), b.coeff(0, 0));
}

std::pair<BiPoly, BiPoly> parse_poly_pair(const std::string& text, const FieldSpec& f) {
    Cursor cur(text, f);
    const auto vars = vars_xy(f);
    cur.expect('(', "to open the pair");
    BiPoly fst = parse_expr_at(cur, vars);
    cur.expect(';', "between the components");
    BiPoly snd = parse_expr_at(cur, vars);
    cur.expect(')', "to close the pair");
    cur.expect_end();
    return {fst, snd};
}

} // namespace planekit
