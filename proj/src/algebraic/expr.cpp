#include "rotary/algebraic/expr.hpp"

#include <cctype>
#include <vector>

#include "rotary/error.hpp"

namespace rotary {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  AlgReal parse() {
    AlgReal v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::kParse, what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool accept_word(std::string_view w) {
    skip_ws();
    if (s_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }

  Integer integer() {
    skip_ws();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
      skip_ws();
    }
    const size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    Integer v(std::string(s_.substr(start, pos_ - start)));
    return neg ? Integer(-v) : v;
  }

  AlgReal expr() {
    AlgReal v = term();
    for (;;) {
      if (accept('+')) {
        v = v + term();
      } else if (accept('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

  AlgReal term() {
    AlgReal v = unary();
    for (;;) {
      if (accept('*')) {
        v = v * unary();
      } else if (accept('/')) {
        v = v / unary();
      } else {
        return v;
      }
    }
  }

  AlgReal unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return primary();
  }

  AlgReal primary() {
    skip_ws();
    if (accept('(')) {
      AlgReal v = expr();
      expect(')');
      return v;
    }
    if (accept_word("sqrt")) {
      expect('(');
      AlgReal v = expr();
      expect(')');
      return sqrt_nonneg(v);
    }
    if (accept_word("root")) {
      expect('(');
      std::vector<Integer> nums{integer()};
      while (accept(',')) nums.push_back(integer());
      expect(')');
      if (nums.size() < 2) fail("root needs coefficients and an index");
      const Integer idx = nums.back();
      nums.pop_back();
      IntPoly p(nums);
      if (p.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "root of the zero polynomial");
      auto roots = real_roots(p);
      if (idx < 0 || idx >= static_cast<long>(roots.size())) {
        throw Error(ErrorCode::kOutOfRange, "root index " + idx.get_str() + " out of range");
      }
      return roots[idx.get_ui()];
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) return AlgReal(Rational(integer()));
    fail("expected expression");
  }

  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace

AlgReal parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string format_expr(const AlgReal& a) {
  if (a.is_rational()) return format_rational(a.rational_value());
  const IntPoly m = a.min_poly();
  if (m.degree() == 2) {
    // a = u + v sqrt(r) with u = -B/(2A), v = +-s/(2A), B^2 - 4AC = s^2 r.
    const Integer& A = m[2];
    const Integer& B = m[1];
    const Integer& C = m[0];
    Integer disc = B * B - 4 * A * C;
    Integer outside = 1;
    for (unsigned long p = 2; p < 100000; ++p) {
      Integer pp = Integer(p) * Integer(p);
      if (pp > disc) break;
      while (mpz_divisible_p(disc.get_mpz_t(), pp.get_mpz_t())) {
        disc /= pp;
        outside *= p;
      }
    }
    Rational u(-B, 2 * A);
    u.canonicalize();
    Rational v(outside, 2 * A);
    v.canonicalize();
    if (compare(a, AlgReal(u)) < 0) v = -v;
    std::string root = "sqrt(" + disc.get_str() + ")";
    std::string vs;
    if (v == 1) {
      vs = root;
    } else if (v == -1) {
      vs = "-" + root;
    } else {
      vs = format_rational(v) + "*" + root;
    }
    if (u == 0) return vs;
    return format_rational(u) + (v > 0 ? "+" : "") + vs;
  }
  const Interval iv = a.isolating_interval();
  const int idx = SturmSequence(m).count_below(iv.lo);
  std::string s = "root(";
  for (int i = 0; i <= m.degree(); ++i) s += m[i].get_str() + ",";
  return s + std::to_string(idx) + ")";
}

std::ostream& operator<<(std::ostream& os, const AlgReal& a) { return os << format_expr(a); }

}  // namespace rotary
