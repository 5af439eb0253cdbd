#include "pachner/ring.hpp"

namespace pachner {

std::string_view ring_name(Ring r) { return r == Ring::GF2 ? "GF2" : "Q"; }

Ring parse_ring(std::string_view s) {
  if (s == "GF2" || s == "gf2") return Ring::GF2;
  if (s == "Q" || s == "q") return Ring::Q;
  throw Error("unknown ring '" + std::string(s) + "'");
}

Rational reduce(Ring r, const Rational& x) {
  if (r == Ring::Q) return x;
  mpz_class num = x.get_num();
  mpz_class den = x.get_den();
  if (mpz_even_p(den.get_mpz_t()))
    throw Error("value " + to_string(x) + " has no image in GF2");
  return Rational(mpz_odd_p(num.get_mpz_t()) ? 1 : 0);
}

Rational add(Ring r, const Rational& a, const Rational& b) {
  if (r == Ring::GF2) return Rational((a != b) ? 1 : 0);
  return a + b;
}

Rational sub(Ring r, const Rational& a, const Rational& b) {
  if (r == Ring::GF2) return Rational((a != b) ? 1 : 0);
  return a - b;
}

Rational mul(Ring r, const Rational& a, const Rational& b) {
  if (r == Ring::GF2) return Rational((!is_zero(a) && !is_zero(b)) ? 1 : 0);
  return a * b;
}

Rational neg(Ring r, const Rational& a) {
  if (r == Ring::GF2) return a;
  return -a;
}

Rational inv(Ring r, const Rational& a) {
  if (is_zero(a)) throw Error("division by zero");
  if (r == Ring::GF2) return Rational(1);
  return 1 / a;
}

Rational sign_power(Ring r, long e) {
  if (r == Ring::GF2) return Rational(1);
  return Rational((e % 2 == 0) ? 1 : -1);
}

std::string to_string(const Rational& value) {
  Rational q = value;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view s) {
  std::string str(s);
  while (!str.empty() && str.front() == ' ') str.erase(str.begin());
  while (!str.empty() && str.back() == ' ') str.pop_back();
  if (str.empty()) throw Error("empty rational literal");
  Rational q;
  if (q.set_str(str, 10) != 0) throw Error("malformed rational literal '" + str + "'");
  if (q.get_den() == 0) throw Error("zero denominator in '" + str + "'");
  q.canonicalize();
  return q;
}

}  // namespace pachner
