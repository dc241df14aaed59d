#include "qinterp/dsl.hpp"

#include <cctype>

#include "json.hpp"

namespace qinterp {

namespace {

class Cursor {
 public:
  explicit Cursor(const std::string& text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eof() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool try_eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!try_eat(c)) err(std::string("expected '") + c + "'");
  }

  bool try_word(const std::string& w) {
    skip_ws();
    if (text_.compare(pos_, w.size(), w) == 0) {
      pos_ += w.size();
      return true;
    }
    return false;
  }

  [[noreturn]] void err(const std::string& why) {
    fail(ErrorKind::SyntaxError, why + " at position " + std::to_string(pos_));
  }

  // unsigned integer digits
  Int digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) err("expected digits");
    return Int(text_.substr(start, pos_ - start));
  }

  // [-]digits[/digits]
  Rat rational() {
    skip_ws();
    bool neg = try_eat('-');
    if (!neg) try_eat('+');
    Int num = digits();
    Int den = 1;
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      den = digits();
      if (den == 0) err("zero denominator");
    }
    Rat r(neg ? Int(-num) : num, den);
    r.canonicalize();
    return r;
  }

  ExtRat endpoint() {
    skip_ws();
    if (try_word("-inf")) return ExtRat::neg_inf();
    if (try_word("+inf") || try_word("inf")) return ExtRat::pos_inf();
    return ExtRat(rational());
  }

  // term := rat ['*'] ['x' ['/' digits]] | 'x' ['/' digits]
  // affine := ['-'] term (('+'|'-') term)*
  void affine_term(bool negate, Rat& slope, Rat& offset) {
    skip_ws();
    Rat coef(1);
    bool have_coef = false;
    if (peek() != 'x') {
      coef = rational();
      have_coef = true;
      try_eat('*');
    }
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == 'x') {
      ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        Int den = digits();
        if (den == 0) err("zero denominator");
        coef /= Rat(den);
      }
      slope += negate ? Rat(-coef) : coef;
    } else {
      if (!have_coef) err("expected term");
      offset += negate ? Rat(-coef) : coef;
    }
  }

  void affine(Rat& slope, Rat& offset) {
    slope = 0;
    offset = 0;
    bool neg = try_eat('-');
    affine_term(neg, slope, offset);
    while (true) {
      if (try_eat('+')) affine_term(false, slope, offset);
      else if (try_eat('-')) affine_term(true, slope, offset);
      else break;
    }
  }

  Piece piece() {
    skip_ws();
    bool lo_closed;
    if (try_eat('(')) lo_closed = false;
    else if (try_eat('[')) lo_closed = true;
    else err("expected '(' or '['");
    ExtRat lo = endpoint();
    expect(',');
    ExtRat hi = endpoint();
    bool hi_closed;
    if (try_eat(')')) hi_closed = false;
    else if (try_eat(']')) hi_closed = true;
    else err("expected ')' or ']'");
    expect(':');
    Rat slope, offset;
    affine(slope, offset);
    Interval dom(lo, hi, lo_closed, hi_closed);
    if (slope < 0) fail(ErrorKind::DomainError, "negative slope in piece " + interval_str(dom));
    return Piece{dom, slope, offset};
  }

  std::size_t pos_ = 0;
  const std::string& text_;
};

std::string affine_str(const Rat& slope, const Rat& offset) {
  if (slope == 0) return rat_str(offset);
  std::string s;
  if (slope == 1) s = "x";
  else s = rat_str(slope) + "x";
  if (offset > 0) s += "+" + rat_str(offset);
  else if (offset < 0) s += "-" + rat_str(Rat(-offset));
  return s;
}

}  // namespace

PLMap parse_map(const std::string& text) {
  Cursor c(text);
  if (!c.try_word("pl")) c.err("expected 'pl'");
  c.expect('{');
  std::vector<Piece> pieces;
  pieces.push_back(c.piece());
  while (c.try_eat(';')) pieces.push_back(c.piece());
  c.expect('}');
  if (!c.eof()) c.err("trailing input");
  return PLMap::from_pieces(std::move(pieces));
}

std::string pretty_map(const PLMap& f) {
  std::string out = "pl{ ";
  const auto& ps = f.pieces();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) out += "; ";
    out += interval_str(ps[i].dom);
    out += ": ";
    out += affine_str(ps[i].slope, ps[i].offset);
  }
  out += " }";
  return out;
}

std::string map_to_json(const PLMap& f) {
  nlohmann::json pieces = nlohmann::json::array();
  for (const Piece& p : f.pieces()) {
    pieces.push_back({
        {"lo", ext_str(p.dom.lo)},
        {"hi", ext_str(p.dom.hi)},
        {"lo_closed", p.dom.lo_closed},
        {"hi_closed", p.dom.hi_closed},
        {"slope", rat_str(p.slope)},
        {"offset", rat_str(p.offset)},
    });
  }
  nlohmann::json j{{"format", "qinterp.plmap"}, {"version", 1}, {"pieces", pieces}};
  return j.dump();
}

PLMap map_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::SyntaxError, std::string("bad json: ") + e.what());
  }
  if (j.value("format", "") != "qinterp.plmap")
    fail(ErrorKind::SyntaxError, "unknown serialization format");
  if (j.value("version", 0) != 1) fail(ErrorKind::SyntaxError, "unsupported version");
  auto endpoint = [](const std::string& s) {
    if (s == "-inf") return ExtRat::neg_inf();
    if (s == "inf" || s == "+inf") return ExtRat::pos_inf();
    return ExtRat(parse_rat(s));
  };
  std::vector<Piece> pieces;
  for (const auto& jp : j.at("pieces")) {
    Interval dom(endpoint(jp.at("lo").get<std::string>()),
                 endpoint(jp.at("hi").get<std::string>()), jp.at("lo_closed").get<bool>(),
                 jp.at("hi_closed").get<bool>());
    pieces.push_back(
        Piece{dom, parse_rat(jp.at("slope").get<std::string>()),
              parse_rat(jp.at("offset").get<std::string>())});
  }
  return PLMap::from_pieces(std::move(pieces));
}

}  // namespace qinterp
