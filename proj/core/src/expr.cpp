#include "kul/expr.hpp"

#include <cctype>

#include "kul/error.hpp"
#include "kul/grr.hpp"
#include "kul/knum.hpp"

namespace kul {

namespace {

class Parser {
 public:
  Parser(const VarietyModel& model, std::string_view text) : model_(model), text_(text) {}

  GradedClass parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    GradedClass total = model_.zero();
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = take() == '-';
    while (true) {
      GradedClass t = term();
      total += negative ? -t : t;
      skip_space();
      if (at_end()) break;
      const char op = take();
      if (op != '+' && op != '-') fail(std::string("expected '+' or '-', found '") + op + "'");
      negative = op == '-';
    }
    return total;
  }

 private:
  GradedClass term() {
    skip_space();
    Integer coefficient = 1;
    bool has_coefficient = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coefficient = integer();
      has_coefficient = true;
      skip_space();
      if (peek() == '*') {
        take();
        skip_space();
      } else if (at_end() || peek() == '+' || peek() == '-') {
        // Only the zero class may be written as a bare integer.
        if (coefficient != 0) fail("a bare integer other than 0 is not a class");
        return model_.zero();
      }
    }
    if (at_end()) fail(has_coefficient ? "expected a generator after the coefficient" : "expected a term");
    GradedClass a = atom();
    skip_space();
    if (peek() == '[') {
      take();
      skip_space();
      bool neg = false;
      if (peek() == '-') neg = take() == '-';
      const Integer shift = integer();
      skip_space();
      expect(']');
      if ((neg ? -shift : shift) % 2 != 0) a = -a;
    }
    return Rational(coefficient) * a;
  }

  GradedClass atom() {
    const std::size_t start = pos_;
    std::string name;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '^')) name += take();
    if (name.empty()) fail("expected a generator");
    if (name == "O" || name == "O_X" || name == "O_S" || name == "O_Y" || name == "O_W") {
      skip_space();
      if (peek() != '(') return model_.unit();
      take();
      GradedClass d = divisor();
      expect(')');
      return ch_line_bundle(model_, d);
    }
    if (name == "O_x" || name == "O_pt") return model_.point();
    if (name == "I_x") return model_.unit() - model_.point();
    if (name == "O_H") return model_.unit() - ch_line_bundle(model_, -model_.hyperplane());
    if (name == "O_L") {
      const GradedClass l = generator("L");
      // ch(O_C) = C - C²/2 for a curve C on a surface.
      return l - make_rational(1, 2) * integrate(model_, multiply(model_, l, l)) * model_.point();
    }
    if (name == "U" || name == "Uv" || name == "U^v") {
      const GradedClass u = ch_tautological_dual(model_);
      return name == "U" ? dual_ch(model_, u) : u;
    }
    if (name == "mu" || name == "kappa" || name == "lambda") {
      skip_space();
      expect('(');
      IntVector coords{signed_integer()};
      skip_space();
      expect(',');
      coords.push_back(signed_integer());
      skip_space();
      expect(')');
      const KuBasis basis = name == "mu" ? mu_basis(model_) : name == "kappa" ? kappa_basis(model_) : lambda_basis(model_);
      return to_ch(basis, make_knum(basis, coords));
    }
    pos_ = start;
    fail("unknown generator '" + name + "'");
  }

  GradedClass divisor() {
    skip_space();
    GradedClass d = model_.zero();
    if (peek() == '0') {
      take();
      skip_space();
      return d;
    }
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = take() == '-';
    while (true) {
      skip_space();
      Integer k = 1;
      if (std::isdigit(static_cast<unsigned char>(peek()))) k = integer();
      skip_space();
      std::string name(1, at_end() ? '\0' : take());
      if (name != "H" && name != "L") fail("divisors are combinations of H and L");
      const GradedClass g = generator(name);
      d += Rational(negative ? -k : k) * g;
      skip_space();
      if (peek() != '+' && peek() != '-') break;
      negative = take() == '-';
    }
    return d;
  }

  GradedClass generator(const std::string& name) {
    if (!model_.has_class(name)) fail(std::string(model_.name()) + " has no class " + name);
    return model_.named(name);
  }

  Integer integer() {
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits += take();
    if (digits.empty()) fail("expected an integer");
    return Integer(digits);
  }

  Integer signed_integer() {
    skip_space();
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = take() == '-';
    skip_space();
    const Integer z = integer();
    return negative ? Integer(-z) : z;
  }

  void expect(char c) {
    skip_space();
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    take();
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char take() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& message) const {
    throw InputError("cannot parse '" + std::string(text_) + "' at column " + std::to_string(pos_ + 1) + ": " +
                     message);
  }

  const VarietyModel& model_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GradedClass parse_class(const VarietyModel& model, std::string_view text) { return Parser(model, text).parse(); }

}  // namespace kul
