#include "optic/sexpr.hpp"

#include <cctype>
#include <charconv>

namespace optic {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n'; }
bool is_sym_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_sym_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  Val run() {
    skip_space();
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    Val v = parse_value();
    skip_space();
    if (!at_end()) throw ParseError("trailing garbage after expression", pos_);
    return v;
  }

private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_space() {
    while (!at_end() && is_space(peek())) ++pos_;
  }

  Val parse_value() {
    char c = peek();
    if (c == '(') return parse_list();
    if (c == ')') throw ParseError("unbalanced ')'", pos_);
    if (c == '"') return parse_string();
    if (c == '-' || is_digit(c)) return parse_integer();
    if (is_sym_start(c)) return parse_symbol();
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  Val parse_list() {
    std::size_t open = pos_;
    ++pos_;  // '('
    std::vector<Val> items;
    for (;;) {
      skip_space();
      if (at_end()) throw ParseError("unbalanced '(': missing ')'", open);
      if (peek() == ')') {
        ++pos_;
        return Val::list(std::move(items));
      }
      items.push_back(parse_value());
    }
  }

  Val parse_string() {
    std::size_t open = pos_;
    ++pos_;  // '"'
    std::string out;
    for (;;) {
      if (at_end()) throw ParseError("unterminated string", open);
      char c = text_[pos_];
      if (c == '"') {
        ++pos_;
        return Val::str(std::move(out));
      }
      if (c == '\\') {
        if (pos_ + 1 >= text_.size()) throw ParseError("unterminated string", open);
        char esc = text_[pos_ + 1];
        if (esc != '"' && esc != '\\') {
          throw ParseError(std::string("invalid escape '\\") + esc + "'", pos_);
        }
        out.push_back(esc);
        pos_ += 2;
        continue;
      }
      out.push_back(c);
      ++pos_;
    }
  }

  Val parse_integer() {
    std::size_t start = pos_;
    if (peek() == '-') ++pos_;
    if (at_end() || !is_digit(peek())) {
      throw ParseError("unexpected character '-'", start);
    }
    while (!at_end() && is_digit(peek())) ++pos_;
    std::int64_t value = 0;
    auto res = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (res.ec != std::errc()) {
      throw ParseError("integer literal out of 64-bit range", start);
    }
    return Val::integer(value);
  }

  Val parse_symbol() {
    std::size_t start = pos_;
    while (!at_end() && is_sym_char(peek())) ++pos_;
    return Val::sym(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void print_rec(const Val& v, std::string& out) {
  switch (v.kind()) {
    case Val::Kind::Sym: {
      const std::string& name = v.sym_name();
      if (name.empty() || !is_sym_start(name[0])) {
        throw std::logic_error("print_sexpr: invalid symbol " + v.to_text());
      }
      for (char c : name) {
        if (!is_sym_char(c)) throw std::logic_error("print_sexpr: invalid symbol " + v.to_text());
      }
      out += name;
      return;
    }
    case Val::Kind::Int:
      out += std::to_string(v.int_value());
      return;
    case Val::Kind::Str: {
      out += '"';
      for (char c : v.str_value()) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
      }
      out += '"';
      return;
    }
    case Val::Kind::List: {
      out += '(';
      const auto& items = v.items();
      for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ' ';
        print_rec(items[i], out);
      }
      out += ')';
      return;
    }
    default:
      throw std::logic_error("print_sexpr: not an s-expression value: " + v.to_text());
  }
}

}  // namespace

Val parse_sexpr(std::string_view text) { return Parser(text).run(); }

std::string print_sexpr(const Val& v) {
  std::string out;
  print_rec(v, out);
  return out;
}

bool is_sexpr_value(const Val& v) {
  switch (v.kind()) {
    case Val::Kind::Sym:
    case Val::Kind::Int:
    case Val::Kind::Str:
      return true;
    case Val::Kind::List: {
      for (const auto& it : v.items()) {
        if (!is_sexpr_value(it)) return false;
      }
      return true;
    }
    default:
      return false;
  }
}

}  // namespace optic
