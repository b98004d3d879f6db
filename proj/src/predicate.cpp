#include "advstore/predicate.hpp"

#include <cctype>

namespace advstore {

Predicate Predicate::eq(std::string column, Value v) {
  Predicate p;
  p.conjuncts.push_back(EqPred{std::move(column), std::move(v)});
  return p;
}

Predicate Predicate::in_list(std::string column, std::vector<Value> vs) {
  Predicate p;
  p.conjuncts.push_back(InListPred{std::move(column), std::move(vs)});
  return p;
}

Predicate Predicate::range(std::string column, Value lo, Value hi) {
  Predicate p;
  p.conjuncts.push_back(RangePred{std::move(column), std::move(lo), std::move(hi)});
  return p;
}

Predicate& Predicate::and_also(AtomPred atom) {
  conjuncts.push_back(std::move(atom));
  return *this;
}

namespace {

struct Token {
  enum Kind { Word, String, Symbol, End } kind = End;
  std::string text;  // unquoted payload for String
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ >= src_.size()) return {Token::End, ""};
    const char c = src_[pos_];
    if (c == '=' || c == '(' || c == ')' || c == ',') {
      ++pos_;
      return {Token::Symbol, std::string(1, c)};
    }
    if (c == '\'' || c == '"') {
      const char quote = c;
      ++pos_;
      std::string out;
      while (pos_ < src_.size() && src_[pos_] != quote) out.push_back(src_[pos_++]);
      if (pos_ >= src_.size())
        raise(ErrorCode::ParseError, "unterminated quoted string in predicate");
      ++pos_;
      return {Token::String, out};
    }
    size_t start = pos_;
    while (pos_ < src_.size()) {
      const char d = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(d)) || d == '=' || d == '(' || d == ')' ||
          d == ',')
        break;
      ++pos_;
    }
    return {Token::Word, std::string(src_.substr(start, pos_ - start))};
  }

 private:
  std::string_view src_;
  size_t pos_ = 0;
};

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (std::toupper(static_cast<unsigned char>(a[i])) !=
        std::toupper(static_cast<unsigned char>(b[i])))
      return false;
  return true;
}

Value typed_literal(const Token& tok, ColumnType type) {
  if (tok.kind != Token::Word && tok.kind != Token::String)
    raise(ErrorCode::ParseError, "expected a literal in predicate");
  return parse_value(tok.text, type);
}

}  // namespace

Predicate parse_predicate(std::string_view text, const Schema& schema) {
  Predicate pred;
  Lexer lex(text);
  Token tok = lex.next();
  if (tok.kind == Token::End) return pred;

  for (;;) {
    if (tok.kind != Token::Word)
      raise(ErrorCode::ParseError, "expected a column name in predicate");
    const std::string column = tok.text;
    const ColumnType type = schema.columns[schema.require(column)].type;

    tok = lex.next();
    if (tok.kind == Token::Symbol && tok.text == "=") {
      pred.conjuncts.push_back(EqPred{column, typed_literal(lex.next(), type)});
    } else if (tok.kind == Token::Word && iequals(tok.text, "IN")) {
      tok = lex.next();
      if (tok.kind != Token::Symbol || tok.text != "(")
        raise(ErrorCode::ParseError, "expected '(' after IN");
      std::vector<Value> values;
      for (;;) {
        values.push_back(typed_literal(lex.next(), type));
        tok = lex.next();
        if (tok.kind == Token::Symbol && tok.text == ",") continue;
        if (tok.kind == Token::Symbol && tok.text == ")") break;
        raise(ErrorCode::ParseError, "expected ',' or ')' in IN list");
      }
      pred.conjuncts.push_back(InListPred{column, std::move(values)});
    } else if (tok.kind == Token::Word && iequals(tok.text, "BETWEEN")) {
      Value lo = typed_literal(lex.next(), type);
      tok = lex.next();
      if (tok.kind != Token::Word || !iequals(tok.text, "AND"))
        raise(ErrorCode::ParseError, "expected AND between BETWEEN bounds");
      Value hi = typed_literal(lex.next(), type);
      pred.conjuncts.push_back(RangePred{column, std::move(lo), std::move(hi)});
    } else {
      raise(ErrorCode::ParseError, "expected '=', IN, or BETWEEN after column name");
    }

    tok = lex.next();
    if (tok.kind == Token::End) break;
    if (tok.kind == Token::Word && iequals(tok.text, "AND")) {
      tok = lex.next();
      continue;
    }
    raise(ErrorCode::ParseError, "expected AND or end of predicate");
  }
  return pred;
}

namespace {

std::string literal_text(const Value& v) {
  if (v.index() == 0) return "'" + std::get<std::string>(v) + "'";
  return value_to_text(v);
}

}  // namespace

std::string predicate_to_text(const Predicate& pred) {
  std::string out;
  for (const auto& atom : pred.conjuncts) {
    if (!out.empty()) out += " AND ";
    if (const auto* eq = std::get_if<EqPred>(&atom)) {
      out += eq->column + " = " + literal_text(eq->value);
    } else if (const auto* in = std::get_if<InListPred>(&atom)) {
      out += in->column + " IN (";
      for (size_t i = 0; i < in->values.size(); ++i) {
        if (i) out += ", ";
        out += literal_text(in->values[i]);
      }
      out += ")";
    } else if (const auto* rg = std::get_if<RangePred>(&atom)) {
      out += rg->column + " BETWEEN " + literal_text(rg->lo) + " AND " + literal_text(rg->hi);
    }
  }
  return out;
}

}  // namespace advstore
