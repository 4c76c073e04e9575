#include "brcalc/parse.hpp"

#include <cctype>
#include <nlohmann/json.hpp>

namespace brcalc {

namespace {

struct Cursor {
    std::string_view s;
    size_t pos = 0;

    bool eof() const { return pos >= s.size(); }
    char peek() const { return eof() ? '\0' : s[pos]; }
    char get() { return s[pos++]; }

    void skip_ws() {
        while (!eof() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\n' || s[pos] == '\r'))
            ++pos;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        size_t line = 1, col = 1;
        for (size_t i = 0; i < pos && i < s.size(); ++i) {
            if (s[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(msg, line, col);
    }

    long parse_uint() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
        long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (get() - '0');
            if (v > 1000000) fail("number too large");
        }
        return v;
    }
};

// Variable factor: returns the index, or -1 when the cursor is not at one.
int try_parse_var(Cursor& c, const Ring& ring) {
    char ch = c.peek();
    if (ring.dim() <= 3) {
        int idx = (ch == 'x') ? 0 : (ch == 'y') ? 1 : (ch == 'z') ? 2 : -1;
        if (idx < 0) return -1;
        if (idx >= ring.dim()) c.fail(std::string("variable '") + ch + "' outside a " +
                                      std::to_string(ring.dim()) + "-variable ring");
        c.get();
        return idx;
    }
    if (ch != 'x') return -1;
    c.get();
    long idx = c.parse_uint();
    if (idx < 1 || idx > ring.dim())
        c.fail("variable index must lie in 1.." + std::to_string(ring.dim()));
    return static_cast<int>(idx - 1);
}

bool at_delimiter(const Cursor& c) {
    char ch = c.peek();
    return ch == '\0' || ch == ',' || ch == '|' || ch == ']' || ch == ')';
}

// One signed term: [coefficient] [factors]. Returns false at a delimiter.
bool parse_term(Cursor& c, const RingPtr& ring, Poly& acc, bool first) {
    c.skip_ws();
    if (at_delimiter(c)) {
        if (first) c.fail("expected a term");
        return false;
    }
    Rat sign(1);
    if (c.peek() == '+' || c.peek() == '-') {
        if (c.get() == '-') sign = -1;
        c.skip_ws();
    } else if (!first) {
        c.fail("expected '+' or '-' between terms");
    }
    Rat coeff(1);
    bool have_any = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        long num = c.parse_uint();
        coeff = Rat(num);
        if (c.peek() == '/') {
            c.get();
            long den = c.parse_uint();
            if (den == 0) c.fail("zero denominator");
            coeff = Rat(num, den);
        }
        have_any = true;
    }
    std::vector<int> exps(static_cast<size_t>(ring->dim()), 0);
    while (true) {
        c.skip_ws();
        if (c.peek() == '*') {
            c.get();
            c.skip_ws();
        }
        size_t mark = c.pos;
        int var = try_parse_var(c, *ring);
        if (var < 0) {
            c.pos = mark;
            break;
        }
        long k = 1;
        if (c.peek() == '^') {
            c.get();
            k = c.parse_uint();
        }
        exps[static_cast<size_t>(var)] += static_cast<int>(k);
        have_any = true;
    }
    c.skip_ws();
    if (!have_any) c.fail("expected a coefficient or a variable");
    if (!at_delimiter(c) && c.peek() != '+' && c.peek() != '-')
        c.fail(std::string("unexpected character '") + c.peek() + "'");
    acc.add_term(Monomial(exps), sign * coeff);
    return true;
}

Poly parse_poly_cursor(Cursor& c, const RingPtr& ring) {
    Poly acc(ring);
    bool first = true;
    while (parse_term(c, ring, acc, first)) first = false;
    return acc;
}

std::string var_power_string(const Ring& ring, int var, int k) {
    std::string out = ring.var_name(var);
    if (k > 1) out += "^" + std::to_string(k);
    return out;
}

std::string coeff_string(const Rat& c) {
    std::string out = numerator(c).str();
    if (denominator(c) != 1) out += "/" + denominator(c).str();
    return out;
}

GeneratorMatrix matrix_from_rows(const RingPtr& ring,
                                 const std::vector<std::vector<Poly>>& rows) {
    if (rows.empty()) throw std::invalid_argument("matrix: no rows");
    size_t width = rows.front().size();
    for (const auto& row : rows)
        if (row.size() != width) throw std::invalid_argument("matrix: ragged rows");
    std::vector<std::vector<Poly>> cols(width, std::vector<Poly>(rows.size(), Poly::zero(ring)));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < width; ++j) cols[j][i] = rows[i][j];
    return GeneratorMatrix(ring, static_cast<int>(rows.size()), std::move(cols));
}

} // namespace

Poly parse_poly(std::string_view text, const RingPtr& ring) {
    Cursor c{text};
    Poly p = parse_poly_cursor(c, ring);
    c.skip_ws();
    if (!c.eof()) c.fail("trailing input after polynomial");
    return p;
}

MonomialIdeal parse_ideal(std::string_view text, const RingPtr& ring) {
    Cursor c{text};
    c.skip_ws();
    if (c.eof()) c.fail("empty generator list");
    std::vector<Monomial> gens;
    bool zero_seen = false;
    while (true) {
        Poly p = parse_poly_cursor(c, ring);
        if (p.is_zero()) {
            zero_seen = true;
        } else {
            if (p.terms().size() != 1)
                c.fail("ideal generators must be monomials");
            gens.push_back(p.terms().begin()->first);
        }
        c.skip_ws();
        if (c.peek() == ',') {
            c.get();
            continue;
        }
        break;
    }
    if (gens.empty() && !zero_seen) c.fail("empty generator list");
    c.skip_ws();
    if (!c.eof() && c.peek() != '|') c.fail("trailing input after ideal");
    return MonomialIdeal(ring, std::move(gens));
}

IdealTuple parse_tuple(std::string_view text, const RingPtr& ring) {
    std::vector<MonomialIdeal> ideals;
    size_t start = 0;
    while (true) {
        size_t bar = text.find('|', start);
        std::string_view chunk = text.substr(start, bar == std::string_view::npos
                                                        ? std::string_view::npos
                                                        : bar - start);
        ideals.push_back(parse_ideal(chunk, ring));
        if (bar == std::string_view::npos) break;
        start = bar + 1;
    }
    return IdealTuple(std::move(ideals));
}

GeneratorMatrix parse_matrix(std::string_view text, const RingPtr& ring) {
    Cursor c{text};
    c.skip_ws();
    if (c.peek() == '{') {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("matrix document: ") + e.what(), 1, 1);
        }
        if (!doc.contains("rank") || !doc.contains("entries"))
            throw ParseError("matrix document needs \"rank\" and \"entries\"", 1, 1);
        int rank = doc["rank"].get<int>();
        std::vector<std::vector<Poly>> rows;
        for (const auto& row : doc["entries"]) {
            std::vector<Poly> out;
            for (const auto& cell : row) out.push_back(parse_poly(cell.get<std::string>(), ring));
            rows.push_back(std::move(out));
        }
        if (static_cast<int>(rows.size()) != rank)
            throw ParseError("matrix document: entries row count differs from rank", 1, 1);
        return matrix_from_rows(ring, rows);
    }
    if (c.peek() != '[') c.fail("expected '[' or a JSON matrix document");
    c.get();
    std::vector<std::vector<Poly>> rows;
    while (true) {
        c.skip_ws();
        if (c.peek() != '[') c.fail("expected '[' to open a matrix row");
        c.get();
        std::vector<Poly> row;
        while (true) {
            row.push_back(parse_poly_cursor(c, ring));
            c.skip_ws();
            if (c.peek() == ',') {
                c.get();
                continue;
            }
            if (c.peek() == ']') {
                c.get();
                break;
            }
            c.fail("expected ',' or ']' in a matrix row");
        }
        rows.push_back(std::move(row));
        c.skip_ws();
        if (c.peek() == ',') {
            c.get();
            continue;
        }
        if (c.peek() == ']') {
            c.get();
            break;
        }
        c.fail("expected ',' or ']' after a matrix row");
    }
    c.skip_ws();
    if (!c.eof()) c.fail("trailing input after matrix");
    return matrix_from_rows(ring, rows);
}

std::string to_string(const Monomial& m, const Ring& ring) {
    if (m.is_one()) return "1";
    std::string out;
    for (int i = 0; i < m.dim(); ++i)
        if (m[i] > 0) out += var_power_string(ring, i, m[i]);
    return out;
}

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    const Ring& ring = *p.ring();
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        if (a != 1 || m.is_one()) out += coeff_string(a);
        if (!m.is_one()) out += to_string(m, ring);
        first = false;
    }
    return out;
}

std::string to_string(const MonomialIdeal& I) {
    if (I.is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i < I.gens().size(); ++i) {
        if (i) out += ", ";
        out += to_string(I.gens()[i], *I.ring());
    }
    return out;
}

std::string to_string(const IdealTuple& T) {
    std::string out;
    for (int i = 0; i < T.rank(); ++i) {
        if (i) out += " | ";
        out += to_string(T.ideal(i));
    }
    return out;
}

std::string to_string(const GeneratorMatrix& A) {
    std::string out = "[";
    for (int i = 0; i < A.rank(); ++i) {
        if (i) out += ",";
        out += "[";
        for (int j = 0; j < A.cols(); ++j) {
            if (j) out += ",";
            out += to_string(A.entry(i, j));
        }
        out += "]";
    }
    out += "]";
    return out;
}

} // namespace brcalc
