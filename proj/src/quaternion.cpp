#include "qrefl/quaternion.hpp"

#include <atomic>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <ostream>

#include "qrefl/error.hpp"

namespace qrefl {

namespace {
std::atomic<double> g_tolerance{1e-9};
}

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroDivision: return "ZeroDivision";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::NotFiniteOrder: return "NotFiniteOrder";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotMonomialForm: return "NotMonomialForm";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::UnknownRow: return "UnknownRow";
    case ErrorKind::NotASystem: return "NotASystem";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

double tolerance() noexcept { return g_tolerance.load(std::memory_order_relaxed); }

void set_tolerance(double eps) {
  if (!(eps > 0.0)) throw Error(ErrorKind::BadParameter, "tolerance must be positive");
  g_tolerance.store(eps, std::memory_order_relaxed);
}

Quaternion Quaternion::inverse(double eps) const {
  const double n2 = norm2();
  if (std::sqrt(n2) <= eps) throw Error(ErrorKind::ZeroDivision, "inverse of " + format(*this));
  return conj() / n2;
}

Quaternion sign_normalize(const Quaternion& q, double eps) {
  if (std::abs(q.norm() - 1.0) > eps) return q;
  for (double x : q.coeffs()) {
    if (std::abs(x) > eps) return x < 0 ? -q : q;
  }
  return q;
}

Quaternion pow(const Quaternion& q, int m) {
  Quaternion base = m < 0 ? q.inverse() : q;
  Quaternion out{1.0};
  for (int e = m < 0 ? -m : m; e > 0; --e) out = out * base;
  return out;
}

namespace {

std::string coeff_string(double x) {
  if (std::abs(x) < 1e-13) x = 0.0;  // rounding dust and negative zero
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  std::string s(buf);
  return s == "-0" ? "0" : s;
}

}  // namespace

std::string format(const Quaternion& q) {
  std::string out = coeff_string(q.a);
  const double rest[3] = {q.b, q.c, q.d};
  const char units[3] = {'i', 'j', 'k'};
  for (int u = 0; u < 3; ++u) {
    std::string s = coeff_string(rest[u]);
    if (s.front() != '-') out += '+';
    out += s;
    out += units[u];
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) { return os << format(q); }

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Quaternion run() {
    Quaternion q = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return q;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::Parse, why + " at offset " + std::to_string(pos_) + " in \"" +
                                      std::string(s_) + "\"");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool starts_with(std::string_view tok) {
    skip_ws();
    return s_.substr(pos_, tok.size()) == tok;
  }

  Quaternion expr() {
    Quaternion acc = term();
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc += term();
      } else if (c == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  bool starts_primary() {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '(' || c == 'i' ||
           c == 'j' || c == 'k' || c == 'r' || c == 't' || c == 's' || c == 'w';
  }

  Quaternion term() {
    Quaternion acc = unary();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * unary();
      } else if (c == '/') {
        ++pos_;
        Quaternion den = unary();
        acc = acc * den.inverse(0.0);
      } else if (starts_primary()) {
        acc = acc * primary();
      } else {
        return acc;
      }
    }
  }

  Quaternion unary() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return primary();
  }

  Quaternion primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Quaternion q = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return q;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (starts_with("tau")) {
      pos_ += 3;
      return constants::tau;
    }
    if (starts_with("sigma")) {
      pos_ += 5;
      return constants::sigma;
    }
    if (starts_with("r2")) {
      pos_ += 2;
      return constants::sqrt2;
    }
    if (starts_with("r3")) {
      pos_ += 2;
      return constants::sqrt3;
    }
    if (starts_with("r5")) {
      pos_ += 2;
      return constants::sqrt5;
    }
    if (starts_with("w(")) {
      pos_ += 2;
      skip_ws();
      const char* begin = s_.data() + pos_;
      char* end = nullptr;
      long n = std::strtol(begin, &end, 10);
      if (end == begin || n == 0) fail("expected nonzero integer in w(n)");
      pos_ += static_cast<std::size_t>(end - begin);
      if (peek() != ')') fail("expected ')' after w(n");
      ++pos_;
      return omega_half(static_cast<int>(n));
    }
    if (c == 'i') { ++pos_; return Quaternion::i(); }
    if (c == 'j') { ++pos_; return Quaternion::j(); }
    if (c == 'k') { ++pos_; return Quaternion::k(); }
    fail("unexpected token");
  }

  Quaternion number() {
    // strtod needs a NUL-terminated buffer; numbers are short.
    std::size_t end = pos_;
    auto digit = [&](std::size_t p) {
      return p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]));
    };
    while (digit(end) || (end < s_.size() && s_[end] == '.')) ++end;
    if (end < s_.size() && (s_[end] == 'e' || s_[end] == 'E')) {
      std::size_t e = end + 1;
      if (e < s_.size() && (s_[e] == '+' || s_[e] == '-')) ++e;
      if (digit(e)) {
        end = e;
        while (digit(end)) ++end;
      }
    }
    std::string tok(s_.substr(pos_, end - pos_));
    char* stop = nullptr;
    double v = std::strtod(tok.c_str(), &stop);
    if (stop != tok.c_str() + tok.size()) fail("bad number '" + tok + "'");
    pos_ = end;
    return v;
  }
};

}  // namespace

Quaternion parse_quaternion(std::string_view text) { return Parser(text).run(); }

}  // namespace qrefl
