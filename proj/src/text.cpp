#include "sphalg/text.hpp"

#include <cctype>

#include "sphalg/errors.hpp"

namespace sphalg {

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t dim) : text_(text), dim_(dim) {}

  Poly parse_all() {
    Poly p = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

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

  Poly parse_sum() {
    Poly sum(dim_);
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    while (true) {
      Poly t = parse_term();
      if (negate) {
        sum -= t;
      } else {
        sum += t;
      }
      if (accept('+')) {
        negate = false;
      } else if (accept('-')) {
        negate = true;
      } else {
        return sum;
      }
    }
  }

  Poly parse_term() {
    Poly t = parse_factor();
    while (accept('*')) t = t * parse_factor();
    return t;
  }

  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  unsigned small_integer(const char* what) {
    const std::size_t at = pos_;
    const std::string d = digits();
    if (d.size() > 6) throw ParseError(std::string(what) + " too large", at);
    return static_cast<unsigned>(std::stoul(d));
  }

  unsigned optional_exponent() {
    if (!accept('^')) return 1;
    return small_integer("exponent");
  }

  Poly parse_factor() {
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigInt num(digits());
      BigInt den = 1;
      if (accept('/')) {
        const std::size_t at = pos_;
        den = BigInt(digits());
        if (sgn(den) == 0) throw ParseError("zero denominator", at);
      }
      return Poly::constant(dim_, GaussianRational(make_rational(num, den)));
    }
    if (c == 'i') {
      ++pos_;
      return Poly::constant(dim_, GaussianRational::i());
    }
    if (c == 'x') {
      const std::size_t at = pos_;
      ++pos_;
      const unsigned k = small_integer("variable index");
      if (k < 1 || k > dim_) {
        throw ParseError("variable index out of range: x" + std::to_string(k) + " with N=" + std::to_string(dim_), at);
      }
      Monomial m(dim_);
      m[k - 1] = optional_exponent();
      return Poly::term(m, 1);
    }
    if (c == '(') {
      ++pos_;
      Poly inner = parse_sum();
      if (!accept(')')) fail("expected ')'");
      return pow(inner, optional_exponent());
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t dim_;
  std::size_t pos_ = 0;
};

void append_monomial(std::string& out, const Monomial& m) {
  bool first = true;
  for (std::size_t j = 0; j < m.dim(); ++j) {
    if (m[j] == 0) continue;
    if (!first) out += '*';
    first = false;
    out += 'x' + std::to_string(j + 1);
    if (m[j] != 1) out += '^' + std::to_string(m[j]);
  }
}

// One signed piece: a real rational (imag=false) or a rational multiple of i.
void append_piece(std::string& out, const BigRational& value, bool imag, const Monomial& m, bool first) {
  const bool negative = sgn(value) < 0;
  if (first) {
    if (negative) out += '-';
  } else {
    out += negative ? " - " : " + ";
  }
  const BigRational mag = abs(value);
  const bool unit = mag == 1;
  if (m.degree() == 0) {
    if (!imag) {
      out += mag.get_str();
    } else {
      out += unit ? "i" : mag.get_str() + "*i";
    }
    return;
  }
  if (!unit) out += mag.get_str() + '*';
  if (imag) out += "i*";
  append_monomial(out, m);
}

std::string big_str(const BigInt& v) { return v.get_str(); }

BigInt big_from(const nlohmann::json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<long long>()));
  throw PreconditionError("json: expected an integer or decimal string");
}

}  // namespace

Poly parse_poly(std::string_view text, std::size_t dim) { return Parser(text, dim).parse_all(); }

GaussianRational parse_scalar(const std::string& text) {
  const Poly p = parse_poly(text, 0);
  return p.constant_term();
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (sgn(c.re()) != 0) {
      append_piece(out, c.re(), false, m, first);
      first = false;
    }
    if (sgn(c.im()) != 0) {
      append_piece(out, c.im(), true, m, first);
      first = false;
    }
  }
  return out;
}

nlohmann::json to_json(const GaussianRational& z) {
  return {{"re_num", big_str(z.re().get_num())},
          {"re_den", big_str(z.re().get_den())},
          {"im_num", big_str(z.im().get_num())},
          {"im_den", big_str(z.im().get_den())}};
}

nlohmann::json to_json(const Poly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::json t = to_json(c);
    t["exponents"] = std::vector<unsigned>(m.exponents().begin(), m.exponents().end());
    terms.push_back(std::move(t));
  }
  return {{"dim", p.dim()}, {"terms", std::move(terms)}};
}

GaussianRational scalar_from_json(const nlohmann::json& j) {
  return {make_rational(big_from(j.at("re_num")), big_from(j.at("re_den"))),
          make_rational(big_from(j.at("im_num")), big_from(j.at("im_den")))};
}

Poly poly_from_json(const nlohmann::json& j) {
  const auto dim = j.at("dim").get<std::size_t>();
  Poly p(dim);
  for (const auto& t : j.at("terms")) {
    const auto exps = t.at("exponents").get<std::vector<Monomial::Exponent>>();
    if (exps.size() != dim) throw PreconditionError("json: exponent vector length does not match dim");
    p.add_term(Monomial(exps), scalar_from_json(t));
  }
  return p;
}

}  // namespace sphalg
