#include "difflin/parser.hpp"

#include "difflin/errors.hpp"
#include "difflin/lexer.hpp"

namespace difflin {

namespace {

class TermParser {
public:
    TermParser(Lexer& lex, const ParseEnv* env) : lex_(lex), env_(env) {}

    TermPtr sum() {
        std::vector<TermPtr> kids{comp()};
        while (lex_.accept('+')) kids.push_back(comp());
        return mk_sum(std::move(kids));
    }

private:
    const Signature* sig() const { return env_ ? env_->sig : nullptr; }

    TermPtr comp() {
        std::vector<TermPtr> kids{ten()};
        while (lex_.accept(';')) kids.push_back(ten());
        return mk_comp(std::move(kids));
    }

    TermPtr ten() {
        std::vector<TermPtr> kids{unary()};
        while (lex_.accept('*')) kids.push_back(unary());
        return mk_ten(std::move(kids));
    }

    TermPtr unary() {
        if (lex_.accept('-')) return mk_neg(unary());
        return primary();
    }

    std::vector<Obj> obj_params(unsigned n) {
        lex_.expect('{');
        std::vector<Obj> out;
        for (unsigned i = 0; i < n; ++i) {
            if (i) lex_.expect(',');
            out.push_back(parse_object(lex_, sig()));
        }
        lex_.expect('}');
        return out;
    }

    TermPtr primary() {
        const Token& t = lex_.peek();
        if (lex_.accept('(')) {
            TermPtr inner = sum();
            lex_.expect(')');
            return inner;
        }
        if (t.kind == Tok::Number) {
            if (t.text != "0") lex_.fail("only the literal 0 may appear as a term");
            lex_.next();
            lex_.expect(':');
            Obj dom = parse_object(lex_, sig());
            lex_.expect_arrow();
            Obj cod = parse_object(lex_, sig());
            return mk_zero(dom, cod);
        }
        if (t.kind != Tok::Ident) lex_.fail("expected a term");
        std::size_t at = t.pos;
        std::string name = lex_.next().text;
        if (name == "id") return mk_id(obj_params(1)[0]);
        if (name == "sigma") {
            auto ps = obj_params(2);
            return mk_sym(ps[0], ps[1]);
        }
        if (name == "bang") {
            lex_.expect('(');
            TermPtr inner = sum();
            lex_.expect(')');
            return mk_box(inner);
        }
        if (name == "lin") {
            std::size_t nat = lex_.pos();
            std::string lname = lex_.expect_ident();
            if (env_) {
                auto it = env_->lins.find(lname);
                if (it != env_->lins.end()) return mk_lin(it->second);
            }
            throw SyntaxError("unknown lin name " + lname, nat);
        }
        if (auto g = gen_from_name(name)) {
            unsigned n = gen_arity(*g);
            return mk_gen(*g, n ? obj_params(n) : std::vector<Obj>{});
        }
        if (env_) {
            auto it = env_->lets.find(name);
            if (it != env_->lets.end()) return it->second;
        }
        throw SyntaxError("unknown term name " + name, at);
    }

    Lexer& lex_;
    const ParseEnv* env_;
};

}  // namespace

TermPtr parse_term(std::string_view src, const ParseEnv* env) {
    Lexer lex(src);
    TermParser p(lex, env);
    TermPtr t = p.sum();
    if (lex.peek().kind != Tok::End) lex.fail("trailing input after term");
    return t;
}

}  // namespace difflin
