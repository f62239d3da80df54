#include "lp/expr.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace lp {

namespace {

std::string render_caret(const std::string& message, int column,
                         const std::string& input) {
    std::ostringstream os;
    os << "syntax error at column " << column << ": " << message;
    if (!input.empty() && input.find('\n') == std::string::npos &&
        input.size() < 200) {
        os << "\n  " << input << "\n  ";
        for (int i = 1; i < column; ++i) os << ' ';
        os << '^';
    }
    return os.str();
}

struct Parser {
    const std::string& s;
    int arity;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
        throw ParseError(msg, static_cast<int>(at) + 1, s);
    }

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= s.size();
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    /// Nonnegative integer literal; no sign, no leading ws handling here.
    Int read_uint(std::size_t& at) {
        at = pos;
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected a number", pos);
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        return Int(s.substr(start, pos - start));
    }

    LaurentPoly parse_atom() {
        skip_ws();
        if (pos >= s.size()) fail("expected a value", pos ? pos - 1 : 0);
        char c = s[pos];
        if (c == '(') {
            std::size_t open = pos;
            ++pos;
            LaurentPoly e = parse_expr();
            skip_ws();
            if (pos >= s.size() || s[pos] != ')')
                fail("unclosed '('", open);
            ++pos;
            return e;
        }
        if (c == 'x') {
            std::size_t xat = pos;
            ++pos;
            if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
                fail("variable index must follow 'x'", xat);
            std::size_t at;
            Int idx = read_uint(at);
            if (idx >= arity) {
                std::ostringstream os;
                os << "variable index " << idx << " >= arity " << arity;
                fail(os.str(), xat);
            }
            return LaurentPoly::variable(static_cast<int>(idx.get_si()));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t at;
            return LaurentPoly(read_uint(at));
        }
        fail("expected a number, variable or '('", pos);
    }

    LaurentPoly parse_factor() {
        LaurentPoly base = parse_atom();
        skip_ws();
        if (pos < s.size() && s[pos] == '^') {
            std::size_t caret = pos;
            ++pos;
            skip_ws();
            if (pos < s.size() && s[pos] == '-')
                fail("negative exponents are not accepted", pos);
            std::size_t at;
            Int e = read_uint(at);
            if (e > 1000) fail("exponent too large", at);
            base = base.pow(static_cast<unsigned>(e.get_ui()));
            (void)caret;
        }
        return base;
    }

    LaurentPoly parse_term() {
        skip_ws();
        bool neg = false;
        if (pos < s.size() && s[pos] == '-') {
            neg = true;
            ++pos;
        }
        LaurentPoly p = parse_factor();
        while (true) {
            skip_ws();
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                p = p * parse_factor();
                continue;
            }
            // explicit rejection of juxtaposition: "x1x2", "2x1", "3(...)"
            if (pos < s.size()) {
                char c = s[pos];
                if (c == 'x' || c == '(' ||
                    std::isdigit(static_cast<unsigned char>(c)))
                    fail("missing '*' (implicit multiplication is not accepted)",
                         pos);
            }
            break;
        }
        return neg ? -p : p;
    }

    LaurentPoly parse_expr() {
        LaurentPoly acc = parse_term();
        while (true) {
            skip_ws();
            if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
                char op = s[pos];
                ++pos;
                LaurentPoly t = parse_term();
                acc = (op == '+') ? acc + t : acc - t;
                continue;
            }
            break;
        }
        return acc;
    }

    LaurentPoly parse_all() {
        LaurentPoly p = parse_expr();
        skip_ws();
        if (pos < s.size()) fail("unexpected trailing input", pos);
        return p;
    }
};

void append_monomial(std::ostream& os, const Monomial& m, bool lead_star) {
    bool first = !lead_star;
    for (auto& [v, e] : m.entries()) {
        if (!first) os << '*';
        first = false;
        os << 'x' << v;
        if (e != 1) os << '^' << e;
    }
}

}  // namespace

ParseError::ParseError(std::string message, int column, const std::string& input)
    : std::runtime_error(render_caret(message, column, input)), column_(column) {}

LaurentPoly parse_poly(const std::string& text, int arity) {
    Parser p{text, arity};
    if (p.eof()) throw ParseError("empty input", 1, text);
    return p.parse_all();
}

std::string print_poly(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    if (!p.is_polynomial()) os << "laurent: ";
    bool first = true;
    for (auto& t : p.terms()) {
        Int c = t.coeff;
        if (first) {
            if (c < 0) {
                os << '-';
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (t.mono.is_unit()) {
            os << c;
        } else {
            bool wrote_coeff = false;
            if (c != 1) {
                os << c;
                wrote_coeff = true;
            }
            append_monomial(os, t.mono, wrote_coeff);
        }
    }
    return os.str();
}

std::string print_laurent_fraction(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    if (p.is_polynomial()) return print_poly(p);
    // denominator: product of x_v^{-min exponent} over negative minima
    Monomial::Storage den;
    for (int v : p.variables()) {
        int m = p.min_exponent_in(v);
        if (m < 0) den.emplace_back(v, -m);
    }
    Monomial d = Monomial::from_entries(std::move(den));
    LaurentPoly num = p * d;
    std::ostringstream os;
    os << '(' << print_poly(num) << ")/(";
    append_monomial(os, d, false);
    os << ')';
    return os.str();
}

LoadedSeed seed_from_json_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed seed JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("polys"))
        throw std::invalid_argument(
            "seed JSON must be an object with \"n\" and \"polys\"");
    if (!doc["n"].is_number_unsigned())
        throw std::invalid_argument("seed JSON: \"n\" must be a nonnegative integer");
    LoadedSeed out;
    out.seed.n = doc["n"].get<int>();
    if (!doc["polys"].is_array() ||
        static_cast<int>(doc["polys"].size()) != out.seed.n)
        throw std::invalid_argument("seed JSON: \"polys\" must list exactly n strings");
    for (auto& item : doc["polys"]) {
        if (!item.is_string())
            throw std::invalid_argument("seed JSON: polynomial entries must be strings");
        out.seed.polys.push_back(
            parse_poly(item.get<std::string>(), out.seed.n));
    }
    out.warnings = validate_seed(out.seed);
    return out;
}

LoadedSeed load_seed(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open seed file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return seed_from_json_text(buf.str());
}

std::string seed_to_json_text(const Seed& s) {
    nlohmann::ordered_json doc;
    doc["n"] = s.n;
    auto& arr = doc["polys"] = nlohmann::ordered_json::array();
    for (auto& p : s.polys) arr.push_back(print_poly(p));
    return doc.dump(2) + "\n";
}

void save_seed(const Seed& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open file for writing: " + path);
    out << seed_to_json_text(s);
}

}  // namespace lp
