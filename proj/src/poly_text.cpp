#include "sparsefac/poly_text.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "sparsefac/errors.hpp"

namespace sparsefac {

VarNames z_names(std::size_t n) {
  VarNames v;
  for (std::size_t i = 1; i <= n; ++i) v.push_back("z" + std::to_string(i));
  return v;
}

VarNames xz_names(std::size_t n) {
  VarNames v{"x"};
  for (std::size_t i = 1; i <= n; ++i) v.push_back("z" + std::to_string(i));
  return v;
}

VarNames xyt_names(std::size_t nvars) {
  VarNames v{"x", "y", "t"};
  v.resize(std::min<std::size_t>(nvars, 3));
  return v;
}

std::string render(const SparsePoly& f, const VarNames& names) {
  if (f.is_zero()) return "0";
  if (names.size() < f.nvars()) throw ArityError("not enough variable names to render");
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    Rational mag = abs(c);
    bool neg = c < 0;
    if (first) {
      if (neg) out << "-";
    } else {
      out << (neg ? " - " : " + ");
    }
    first = false;
    bool has_vars = monomial_degree(m) > 0;
    bool wrote = false;
    if (!has_vars || mag != 1) {
      out << to_string(mag);
      wrote = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (wrote) out << "*";
      out << names[i];
      if (m[i] > 1) out << "^" << m[i];
      wrote = true;
    }
  }
  return out.str();
}

std::string render(const SparsePoly& f) { return render(f, z_names(f.nvars())); }

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VarNames& names, bool products)
      : text_(text), products_(products), nvars_(names.size()) {
    for (std::size_t i = 0; i < names.size(); ++i) index_[names[i]] = i;
  }

  SparsePoly parse() {
    SparsePoly p = expression();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::string(text_.substr(start, pos_ - start));
  }

  unsigned exponent() {
    std::string d = digits();
    if (d.size() > 6) fail("exponent too large");
    return static_cast<unsigned>(std::stoul(d));
  }

  SparsePoly expression() {
    SparsePoly acc(nvars_);
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    SparsePoly t = term();
    acc += negate ? -t : t;
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else break;
    }
    return acc;
  }

  SparsePoly term() {
    SparsePoly acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  SparsePoly factor() {
    char c = peek();
    SparsePoly base(nvars_);
    if (c == '(') {
      if (!products_) fail("parentheses are not part of the sparse grammar (use --expand)");
      ++pos_;
      base = expression();
      if (!accept(')')) fail("expected ')'");
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num(digits(), 10);
      Integer den = 1;
      if (accept('/')) {
        den = Integer(digits(), 10);
        if (den == 0) fail("zero denominator");
      }
      Rational r(num, den);
      r.canonicalize();
      base = SparsePoly::constant(nvars_, r);
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto it = index_.find(name);
      if (it == index_.end()) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      base = SparsePoly::variable(nvars_, it->second);
    } else if (products_ && c == '-') {
      ++pos_;
      return -factor();
    } else {
      fail(c == '\0' ? "unexpected end of input" : "unexpected character '" + std::string(1, c) + "'");
    }
    if (accept('^')) base = pow(base, exponent());
    return base;
  }

  std::string_view text_;
  bool products_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
  std::map<std::string, std::size_t> index_;
};

}  // namespace

SparsePoly parse_poly(std::string_view text, const VarNames& names) {
  return Parser(text, names, false).parse();
}

SparsePoly parse_expression(std::string_view text, const VarNames& names) {
  return Parser(text, names, true).parse();
}

VarNames infer_layout(std::string_view text) {
  bool has[3] = {false, false, false};
  std::size_t max_z = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isalpha(static_cast<unsigned char>(text[i]))) {
      std::size_t start = i;
      while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
      std::string_view name = text.substr(start, i - start);
      if (name == "x") has[0] = true;
      else if (name == "y") has[1] = true;
      else if (name == "t") has[2] = true;
      else if (name.size() > 1 && name[0] == 'z' &&
               std::all_of(name.begin() + 1, name.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
        std::size_t k = std::stoul(std::string(name.substr(1)));
        if (k == 0) throw ParseError("variable index must start at 1", start);
        max_z = std::max(max_z, k);
      } else {
        throw ParseError("unknown variable '" + std::string(name) + "'", start);
      }
    } else {
      ++i;
    }
  }
  VarNames names;
  const char* reserved[3] = {"x", "y", "t"};
  for (int k = 0; k < 3; ++k)
    if (has[k]) names.emplace_back(reserved[k]);
  for (std::size_t k = 1; k <= max_z; ++k) names.push_back("z" + std::to_string(k));
  return names;
}

ParsedPoly parse_poly_auto(std::string_view text, bool allow_products) {
  VarNames names = infer_layout(text);
  SparsePoly p = allow_products ? parse_expression(text, names) : parse_poly(text, names);
  return {std::move(p), std::move(names)};
}

}  // namespace sparsefac
