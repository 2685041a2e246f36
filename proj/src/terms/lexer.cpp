#include "difflin/lexer.hpp"

#include <cctype>

#include "difflin/errors.hpp"

namespace difflin {

void Lexer::advance() {
    while (at_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[at_]))) ++at_;
    cur_ = Token{};
    cur_.pos = at_;
    if (at_ >= src_.size()) return;
    char c = src_[at_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t b = at_;
        while (at_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[at_])) || src_[at_] == '_'))
            ++at_;
        cur_.kind = Tok::Ident;
        cur_.text = std::string(src_.substr(b, at_ - b));
        return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t b = at_;
        while (at_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[at_]))) ++at_;
        cur_.kind = Tok::Number;
        cur_.text = std::string(src_.substr(b, at_ - b));
        return;
    }
    if (c == '-' && at_ + 1 < src_.size() && src_[at_ + 1] == '>') {
        at_ += 2;
        cur_.kind = Tok::Arrow;
        cur_.text = "->";
        return;
    }
    static const std::string_view punct = ";*+-(){}[],:!/=";
    if (punct.find(c) == std::string_view::npos)
        throw SyntaxError(std::string("unexpected character '") + c + "'", at_);
    ++at_;
    cur_.kind = Tok::Punct;
    cur_.text = std::string(1, c);
}

Token Lexer::next() {
    Token t = cur_;
    advance();
    return t;
}

bool Lexer::accept(char c) {
    if (!is_punct(c)) return false;
    advance();
    return true;
}

void Lexer::expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
}

void Lexer::expect_arrow() {
    if (cur_.kind != Tok::Arrow) fail("expected '->'");
    advance();
}

std::string Lexer::expect_ident() {
    if (cur_.kind != Tok::Ident) fail("expected identifier");
    return next().text;
}

void Lexer::fail(const std::string& msg) const {
    std::string got = cur_.kind == Tok::End ? "end of input" : "'" + cur_.text + "'";
    throw SyntaxError(msg + ", got " + got, cur_.pos);
}

}  // namespace difflin
