#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace difflin {

enum class Tok { End, Ident, Number, Punct, Arrow };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    std::size_t pos = 0;
};

// Tokenizer shared by the object, term and literal parsers. Punctuation is
// one character; "->" is its own token.
class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return cur_; }
    Token next();
    bool is_punct(char c) const { return cur_.kind == Tok::Punct && cur_.text[0] == c; }
    bool is_ident(std::string_view s) const { return cur_.kind == Tok::Ident && cur_.text == s; }
    bool accept(char c);
    void expect(char c);
    void expect_arrow();
    std::string expect_ident();
    [[noreturn]] void fail(const std::string& msg) const;
    std::size_t pos() const { return cur_.pos; }
    std::string_view source() const { return src_; }

private:
    void advance();

    std::string_view src_;
    std::size_t at_ = 0;
    Token cur_;
};

}  // namespace difflin
