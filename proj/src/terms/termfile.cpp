#include "difflin/termfile.hpp"

#include <fstream>
#include <sstream>

#include "difflin/errors.hpp"
#include "difflin/lexer.hpp"
#include "difflin/parser.hpp"

namespace difflin {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

// Splits at top-level occurrences of sep, ignoring separators nested in
// brackets or parentheses.
std::vector<std::string> split_top(std::string_view s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == sep && depth == 0) {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    out.push_back(trim(s.substr(start)));
    return out;
}

unsigned parse_unsigned(const std::string& s, const std::string& what) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw ConfigError(what + " expects a non-negative integer, got '" + s + "'");
    return static_cast<unsigned>(std::stoul(s));
}

}  // namespace

std::optional<Basis> parse_basis(const std::string& s) {
    if (s == "auto") return std::nullopt;
    if (s == "monomial") return Basis::Monomial;
    if (s == "divided") return Basis::Divided;
    throw ConfigError("unknown basis '" + s + "' (auto, monomial, divided)");
}

const char* basis_name(Basis b) { return b == Basis::Monomial ? "monomial" : "divided"; }

std::vector<LinEntry> parse_lin_entries(std::string_view body, Obj dom, Obj cod, const Signature& sig) {
    std::vector<LinEntry> out;
    std::string inner = trim(body);
    if (inner.size() < 2 || inner.front() != '{' || inner.back() != '}')
        throw SyntaxError("lin entries must be enclosed in braces", 0);
    inner = trim(std::string_view(inner).substr(1, inner.size() - 2));
    if (inner.empty()) return out;
    for (const auto& item : split_top(inner, ',')) {
        std::size_t arrow = item.find("->");
        std::size_t colon = item.rfind(':');
        if (arrow == std::string::npos || colon == std::string::npos || colon < arrow)
            throw SyntaxError("lin entry '" + item + "' is not of the form in->out: coef", 0);
        Elem in = parse_elem(trim(std::string_view(item).substr(0, arrow)), dom, sig);
        Elem outE = parse_elem(trim(std::string_view(item).substr(arrow + 2, colon - arrow - 2)), cod, sig);
        mpq_class c = parse_coef(trim(std::string_view(item).substr(colon + 1)));
        out.push_back(LinEntry{in, outE, c});
    }
    return out;
}

TermFile parse_term_file(std::string_view text) {
    TermFile tf;
    ParseEnv env;
    env.sig = &tf.sig;
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    TermPtr bare;
    auto where = [&] { return "line " + std::to_string(lineno) + ": "; };
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        std::istringstream words(line);
        std::string head;
        words >> head;
        try {
            if (head == "base") {
                std::string name, kw, d;
                words >> name >> kw >> d;
                if (kw != "dim") throw SyntaxError("expected 'base NAME dim N'", 0);
                unsigned n = parse_unsigned(d, "dim");
                if (n == 0) throw ConfigError("dimension of " + name + " must be at least 1");
                tf.sig.declare(name, n);
            } else if (head == "semiring") {
                std::string r;
                words >> r;
                tf.ring = parse_ring(r);
            } else if (head == "basis") {
                std::string b;
                words >> b;
                tf.basis = parse_basis(b);
            } else if (head == "size_cap") {
                std::string v;
                words >> v;
                tf.size_cap = parse_unsigned(v, "size_cap");
            } else if (head == "fallback_cap") {
                std::string v;
                words >> v;
                tf.fallback_cap = parse_unsigned(v, "fallback_cap");
            } else if (head == "lin") {
                std::size_t brace = line.find('{');
                if (brace == std::string::npos) throw SyntaxError("lin declaration needs an entry list", 0);
                Lexer lex(std::string_view(line).substr(3, brace - 3));
                std::string name = lex.expect_ident();
                lex.expect(':');
                Obj dom = parse_object(lex, &tf.sig);
                lex.expect_arrow();
                Obj cod = parse_object(lex, &tf.sig);
                if (lex.peek().kind != Tok::End) lex.fail("unexpected input in lin header");
                auto lin = std::make_shared<LinMap>();
                lin->name = name;
                lin->dom = dom;
                lin->cod = cod;
                lin->entries = parse_lin_entries(std::string_view(line).substr(brace), dom, cod, tf.sig);
                tf.lins[name] = lin;
                env.lins[name] = lin;
            } else if (head == "let") {
                std::size_t eq = line.find('=');
                if (eq == std::string::npos) throw SyntaxError("expected 'let NAME = term'", 0);
                std::string name = trim(std::string_view(line).substr(3, eq - 3));
                if (name.empty()) throw SyntaxError("missing name in let", 0);
                TermPtr t = parse_term(std::string_view(line).substr(eq + 1), &env);
                tf.lets.emplace_back(name, t);
                env.lets[name] = t;
            } else {
                if (bare) throw SyntaxError("more than one bare term line", 0);
                bare = parse_term(line, &env);
            }
        } catch (const SyntaxError& e) {
            throw SyntaxError(where() + e.detail(), e.position());
        } catch (const ConfigError& e) {
            throw ConfigError(where() + e.what());
        } catch (const TypeError& e) {
            throw TypeError(where() + e.what());
        }
    }
    if (bare) {
        tf.subject = bare;
    } else if (env.lets.count("main")) {
        tf.subject = env.lets["main"];
    } else if (!tf.lets.empty()) {
        tf.subject = tf.lets.back().second;
    }
    return tf;
}

TermFile load_term_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot read " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_term_file(ss.str());
}

}  // namespace difflin
