#include "finmod/instance.hpp"

#include <cctype>
#include <vector>

namespace finmod {

namespace {

struct Token {
  std::string text;
  int line;
  int col;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (c == '\r' || std::isspace((unsigned char)c)) {
      ++col;
      ++i;
      continue;
    }
    if (c == '(' || c == ')') {
      out.push_back({std::string(1, c), line, col});
      ++col;
      ++i;
      continue;
    }
    int start_col = col;
    std::string word;
    while (i < text.size() && !std::isspace((unsigned char)text[i]) &&
           text[i] != '(' && text[i] != ')' && text[i] != '\r' &&
           text[i] != '\n') {
      word += text[i++];
      ++col;
    }
    out.push_back({word, line, start_col});
  }
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, int bound)
      : toks_(std::move(toks)), bound_(bound) {}

  ParsedInstance parse() {
    ParsedInstance out;
    const Token& t = peek();
    if (t.text == "ring") {
      auto [r, canon] = parse_ring();
      RingTable copy = r;
      copy.validate();
      out.ring = BaseRing::finite(std::move(copy));
      out.canonical = canon;
    } else if (t.text == "module") {
      auto [m, canon] = parse_module();
      m->validate();
      out.module = m;
      out.canonical = canon;
    } else {
      fail("expected 'ring' or 'module'", t);
    }
    if (pos_ < toks_.size()) fail("trailing input", peek());
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, const Token& t) {
    throw ParseError(msg + " at '" + t.text + "'", t.line, t.col);
  }
  [[noreturn]] void fail_eof(const std::string& msg) {
    int line = 1, col = 1;
    if (!toks_.empty()) {
      line = toks_.back().line;
      col = toks_.back().col + (int)toks_.back().text.size();
    }
    throw ParseError(msg + " at end of input", line, col);
  }

  const Token& peek() {
    if (pos_ >= toks_.size()) fail_eof("unexpected end");
    return toks_[pos_];
  }
  Token take() {
    if (pos_ >= toks_.size()) fail_eof("unexpected end");
    return toks_[pos_++];
  }
  Token expect(const std::string& s) {
    Token t = take();
    if (t.text != s) fail("expected '" + s + "'", t);
    return t;
  }
  int number() {
    Token t = take();
    for (char c : t.text)
      if (!std::isdigit((unsigned char)c)) fail("expected a number", t);
    if (t.text.empty() || t.text.size() > 9) fail("expected a number", t);
    return std::stoi(t.text);
  }

  std::pair<RingTable, std::string> parse_ring_expr() {
    if (peek().text == "(") {
      take();
      auto r = parse_ring();
      expect(")");
      return {r.first, "(" + r.second + ")"};
    }
    auto r = parse_ring();
    return {r.first, "(" + r.second + ")"};
  }

  std::pair<RingTable, std::string> parse_ring() {
    expect("ring");
    Token kind = take();
    if (kind.text == "zmod") {
      int n = number();
      return {make_zmod(n, bound_), "ring zmod " + std::to_string(n)};
    }
    if (kind.text == "gf4") return {make_gf4(), "ring gf4"};
    if (kind.text == "product") {
      auto a = parse_ring_expr();
      auto b = parse_ring_expr();
      return {make_product(a.first, b.first, bound_),
              "ring product " + a.second + " " + b.second};
    }
    if (kind.text == "matrix") {
      int k = number();
      auto a = parse_ring_expr();
      return {make_matrix_ring(a.first, k, bound_),
              "ring matrix " + std::to_string(k) + " " + a.second};
    }
    if (kind.text == "triangular") {
      Token shape = take();
      if (shape.text != "upper" && shape.text != "lower")
        fail("expected 'upper' or 'lower'", shape);
      int k = number();
      auto a = parse_ring_expr();
      return {make_triangular(a.first, k,
                              shape.text == "upper" ? TriangularShape::Upper
                                                    : TriangularShape::Lower,
                              bound_),
              "ring triangular " + shape.text + " " + std::to_string(k) + " " +
                  a.second};
    }
    if (kind.text == "opposite") {
      auto a = parse_ring_expr();
      return {opposite_ring(a.first), "ring opposite " + a.second};
    }
    fail("unknown ring constructor", kind);
  }

  std::pair<ModulePtr, std::string> parse_module_expr() {
    if (peek().text == "(") {
      take();
      auto m = parse_module();
      expect(")");
      return {m.first, "(" + m.second + ")"};
    }
    auto m = parse_module();
    return {m.first, "(" + m.second + ")"};
  }

  std::pair<ModulePtr, std::string> parse_module() {
    expect("module");
    Token kind = take();
    if (kind.text == "regular") {
      auto r = parse_ring_expr();
      return {regular_module(BaseRing::finite(r.first)),
              "module regular " + r.second};
    }
    if (kind.text == "zabelian") {
      std::vector<int> ds;
      std::string canon = "module zabelian";
      while (pos_ < toks_.size() && toks_[pos_].text != ")") {
        int d = number();
        ds.push_back(d);
        canon += " " + std::to_string(d);
      }
      return {zbackend_module(ds, bound_), canon};
    }
    if (kind.text == "sum") {
      auto a = parse_module_expr();
      auto b = parse_module_expr();
      return {direct_sum(a.first, b.first, bound_).sum,
              "module sum " + a.second + " " + b.second};
    }
    if (kind.text == "quotient" || kind.text == "sub") {
      auto a = parse_module_expr();
      expect("gens");
      std::vector<int> gens;
      std::string canon = "module " + kind.text + " " + a.second + " gens";
      while (pos_ < toks_.size() && toks_[pos_].text != ")") {
        Token t = peek();
        int e = number();
        if (e >= a.first->order) fail("generator index out of range", t);
        gens.push_back(e);
        canon += " " + std::to_string(e);
      }
      Bits s = submodule_generated(*a.first, gens);
      if (kind.text == "quotient")
        return {quotient_module(a.first, s).mod, canon};
      return {restrict_to_submodule(a.first, s).mod, canon};
    }
    fail("unknown module constructor", kind);
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
  int bound_;
};

}  // namespace

ParsedInstance parse_spec(const std::string& text, int order_bound) {
  return Parser(tokenize(text), order_bound).parse();
}

}  // namespace finmod
