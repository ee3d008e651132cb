#include "spinphase/statespec.hpp"

#include <cctype>
#include <cmath>
#include <vector>

#include "spinphase/errors.hpp"

namespace spinphase {

namespace {

class ExprParser {
 public:
  explicit ExprParser(const std::string& text) : text_(text) {}

  Complex parse() {
    const Complex value = expression();
    skip_space();
    if (pos_ != text_.size()) {
      throw ParseError("trailing input in expression: '" + text_.substr(pos_) + "'");
    }
    return value;
  }

 private:
  Complex expression() {
    Complex value = term();
    while (true) {
      skip_space();
      if (consume('+')) {
        value += term();
      } else if (consume('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  Complex term() {
    Complex value = factor();
    while (true) {
      skip_space();
      if (consume('*')) {
        value *= factor();
      } else if (consume('/')) {
        const Complex denom = factor();
        if (denom == Complex(0.0)) throw ParseError("division by zero");
        value /= denom;
      } else {
        return value;
      }
    }
  }

  Complex factor() {
    skip_space();
    if (consume('-')) return -factor();
    if (consume('+')) return factor();
    return primary();
  }

  Complex primary() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      const Complex value = expression();
      expect(')');
      return value;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return name();
    throw ParseError(std::string("unexpected character '") + c + "'");
  }

  Complex number() {
    size_t len = 0;
    double value;
    try {
      value = std::stod(text_.substr(pos_), &len);
    } catch (const std::exception&) {
      throw ParseError("malformed number at '" + text_.substr(pos_) + "'");
    }
    pos_ += len;
    // Imaginary suffix: "0.8i".
    if (pos_ < text_.size() && text_[pos_] == 'i' &&
        (pos_ + 1 == text_.size() ||
         !std::isalnum(static_cast<unsigned char>(text_[pos_ + 1])))) {
      ++pos_;
      return Complex(0.0, value);
    }
    return Complex(value, 0.0);
  }

  Complex name() {
    const size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])))) {
      ++pos_;
    }
    const std::string id = text_.substr(start, pos_ - start);
    if (id == "i") return Complex(0.0, 1.0);
    if (id == "pi") return Complex(M_PI, 0.0);
    if (id == "sqrt2") return Complex(std::sqrt(2.0), 0.0);
    if (id == "sqrt3") return Complex(std::sqrt(3.0), 0.0);
    if (id == "sqrt5") return Complex(std::sqrt(5.0), 0.0);
    if (id == "sqrt") {
      skip_space();
      expect('(');
      const Complex arg = expression();
      expect(')');
      return std::sqrt(arg);
    }
    throw ParseError("unknown name '" + id + "'");
  }

  void expect(char c) {
    skip_space();
    if (!consume(c)) throw ParseError(std::string("expected '") + c + "'");
  }

  bool consume(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  const std::string& text_;
  size_t pos_ = 0;
};

// Split on commas outside parentheses.
std::vector<std::string> split_components(const std::string& text) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string current;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  return parts;
}

}  // namespace

Complex parse_complex_expr(const std::string& text) {
  return ExprParser(text).parse();
}

double parse_real_expr(const std::string& text) {
  const Complex value = parse_complex_expr(text);
  if (std::abs(value.imag()) > 1e-14 * std::max(1.0, std::abs(value.real()))) {
    throw ParseError("expected a real value: " + text);
  }
  return value.real();
}

SpinState parse_state_spec(const std::string& spec,
                           std::optional<HalfInt> expected_j,
                           bool allow_unnormalized) {
  std::string body = spec;
  // trim
  const auto first = body.find_first_not_of(" \t");
  const auto last = body.find_last_not_of(" \t");
  if (first == std::string::npos) throw ParseError("empty state spec");
  body = body.substr(first, last - first + 1);

  SpinState state = [&]() -> SpinState {
    if (body == "up" || body == "down") {
      if (expected_j && *expected_j != half()) {
        throw ParseError("'" + body + "' is a j=1/2 state");
      }
      Vector c(2);
      c << (body == "up" ? 1.0 : 0.0), (body == "up" ? 0.0 : 1.0);
      return SpinState(half(), std::move(c));
    }
    if (body.rfind("css:", 0) == 0) {
      const auto angles = split_components(body.substr(4));
      if (angles.size() != 2) throw ParseError("css spec needs 'css:theta,phi'");
      const HalfInt j = expected_j.value_or(half());
      return css_state(j, parse_real_expr(angles[0]), parse_real_expr(angles[1]));
    }
    const auto parts = split_components(body);
    if (parts.size() < 1) throw ParseError("state spec needs components");
    Vector c(parts.size());
    for (size_t k = 0; k < parts.size(); ++k) c(k) = parse_complex_expr(parts[k]);
    const HalfInt j = HalfInt::from_twice(static_cast<int>(parts.size()) - 1);
    if (expected_j && *expected_j != j) {
      throw ParseError("component count " + std::to_string(parts.size()) +
                       " does not match j=" + expected_j->str());
    }
    return SpinState(j, std::move(c));
  }();

  if (!allow_unnormalized && std::abs(state.norm() - 1.0) > 1e-9) {
    throw NotNormalized("state spec has norm " + std::to_string(state.norm()) +
                        "; pass normalized components or --no-normalize");
  }
  return state;
}

}  // namespace spinphase
