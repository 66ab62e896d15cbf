#include "arakelov/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "arakelov/errors.hpp"

namespace arakelov {

std::vector<std::string> NormalizationNotes::messages() const {
  std::vector<std::string> out;
  if (content_removed != 1) out.push_back("content " + content_removed.get_str() + " divided out");
  if (sign_flipped) out.push_back("sign normalized to positive leading coefficient");
  return out;
}

namespace poly {

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly derivative(const IntPoly& p) {
  if (p.size() <= 1) return {};
  IntPoly d(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<unsigned long>(i);
  return d;
}

BigInt evaluate(const IntPoly& p, const BigInt& x) {
  BigInt acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigInt content(const IntPoly& p) {
  BigInt g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPoly taylor_shift(const IntPoly& p, const BigInt& a) {
  IntPoly c = p;
  const std::size_t n = c.size();
  if (n <= 1 || a == 0) return c;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j-- > i;) c[j] += a * c[j + 1];
  }
  return c;
}

std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& p, const IntPoly& monic) {
  const std::size_t m = monic.size();
  if (m == 0 || monic.back() != 1) throw DomainError("divmod_monic: divisor must be monic");
  IntPoly rem = p;
  trim(rem);
  if (rem.size() < m) return {IntPoly{}, rem};
  IntPoly quot(rem.size() - m + 1);
  for (std::size_t k = rem.size(); k-- >= m;) {
    const BigInt q = rem[k];
    quot[k - (m - 1)] = q;
    if (q != 0) {
      for (std::size_t j = 0; j < m; ++j) rem[k - (m - 1) + j] -= q * monic[j];
    }
    if (k == m - 1) break;
  }
  trim(rem);
  return {quot, rem};
}

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

BigInt resultant(const IntPoly& f_in, const IntPoly& g_in) {
  IntPoly f = f_in, g = g_in;
  trim(f);
  trim(g);
  if (f.empty() || g.empty()) return 0;
  const std::size_t m = f.size() - 1;
  const std::size_t n = g.size() - 1;
  const std::size_t size = m + n;
  if (size == 0) return 1;

  // Sylvester matrix, coefficients in descending order along each row.
  std::vector<std::vector<BigInt>> a(size, std::vector<BigInt>(size, BigInt(0)));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) a[r][r + k] = f[m - k];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) a[n + r][r + k] = g[n - k];

  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (a[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < size && a[piv][k] == 0) ++piv;
      if (piv == size) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        BigInt t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  BigInt det = a[size - 1][size - 1];
  return sign > 0 ? det : BigInt(-det);
}

}  // namespace poly

namespace {

// Discriminant of an integer polynomial of degree >= 1 (1 for degree 1).
BigInt raw_discriminant(const IntPoly& f) {
  const std::size_t d = f.size() - 1;
  if (d <= 1) return 1;
  BigInt res = poly::resultant(f, poly::derivative(f));
  BigInt disc;
  mpz_divexact(disc.get_mpz_t(), res.get_mpz_t(), f.back().get_mpz_t());
  if ((d * (d - 1) / 2) % 2 == 1) disc = -disc;
  return disc;
}

}  // namespace

PrimitivePolynomial PrimitivePolynomial::from_coefficients(std::vector<BigInt> coeffs,
                                                           NormalizationNotes* notes) {
  poly::trim(coeffs);
  if (coeffs.empty()) throw DomainError("zero polynomial");
  if (coeffs.size() == 1) throw DomainError("constant polynomial has no roots");

  NormalizationNotes local;
  local.content_removed = poly::content(coeffs);
  if (local.content_removed != 1)
    for (auto& c : coeffs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), local.content_removed.get_mpz_t());
  if (coeffs.back() < 0) {
    local.sign_flipped = true;
    for (auto& c : coeffs) c = -c;
  }
  if (coeffs.size() > 2 && raw_discriminant(coeffs) == 0)
    throw DomainError("polynomial has a repeated root (not squarefree)");
  if (notes) *notes = local;
  return PrimitivePolynomial(std::move(coeffs));
}

PrimitivePolynomial PrimitivePolynomial::from_coefficients(std::initializer_list<long> coeffs,
                                                           NormalizationNotes* notes) {
  std::vector<BigInt> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.emplace_back(c);
  return from_coefficients(std::move(v), notes);
}

std::string PrimitivePolynomial::to_string() const {
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (k == 0 || mag != 1) out += mag.get_str();
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

ParsedPolynomial parse_polynomial(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw ParseError("empty polynomial text");

  std::map<long, BigInt> terms;
  std::size_t i = 0;
  bool first = true;
  auto fail = [&](const std::string& what) {
    throw ParseError("polynomial syntax error at position " + std::to_string(i) + ": " + what);
  };
  auto read_digits = [&]() {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return s.substr(start, i - start);
  };

  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      fail("expected '+' or '-' between terms");
    }
    first = false;

    BigInt coef = 1;
    bool have_coef = false;
    std::string digits = read_digits();
    if (!digits.empty()) {
      coef = BigInt(digits);
      have_coef = true;
    }
    bool have_x = false;
    long exponent = 0;
    if (i < s.size() && s[i] == '*') {
      if (!have_coef) fail("'*' without a coefficient");
      ++i;
      if (i >= s.size() || s[i] != 'x') fail("expected 'x' after '*'");
    }
    if (i < s.size() && s[i] == 'x') {
      have_x = true;
      exponent = 1;
      ++i;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string e = read_digits();
        if (e.empty()) fail("expected exponent after '^'");
        if (e.size() > 6) fail("exponent too large");
        exponent = std::stol(e);
      }
    }
    if (!have_coef && !have_x) fail("empty term");
    terms[exponent] += sign * coef;
  }

  const long degree = terms.rbegin()->first;
  std::vector<BigInt> coeffs(static_cast<std::size_t>(degree) + 1, BigInt(0));
  for (const auto& [e, c] : terms) coeffs[static_cast<std::size_t>(e)] = c;
  poly::trim(coeffs);
  if (coeffs.empty()) throw ParseError("zero polynomial");
  if (coeffs.size() == 1) throw ParseError("degree-0 polynomial has no roots");

  NormalizationNotes notes;
  PrimitivePolynomial f = PrimitivePolynomial::from_coefficients(std::move(coeffs), &notes);
  return {std::move(f), notes};
}

BigInt discriminant(const PrimitivePolynomial& f) { return raw_discriminant(f.int_poly()); }

PrimitivePolynomial reverse(const PrimitivePolynomial& f) {
  if (f.constant_term() == 0)
    throw DomainError("reverse: a_0 = 0, the inverse of 0 is the point at infinity");
  IntPoly r(f.coeffs().rbegin(), f.coeffs().rend());
  return PrimitivePolynomial::from_coefficients(std::move(r));
}

PrimitivePolynomial negate_variable(const PrimitivePolynomial& f) {
  IntPoly g(f.coeffs().begin(), f.coeffs().end());
  for (std::size_t k = 1; k < g.size(); k += 2) g[k] = -g[k];
  return PrimitivePolynomial::from_coefficients(std::move(g));
}

AlgebraicPoint AlgebraicPoint::zero() { return AlgebraicPoint(PrimitivePolynomial::from_coefficients({0, 1})); }

AlgebraicPoint AlgebraicPoint::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(static_cast<char>(std::tolower(ch)));
  if (s == "inf" || s == "infinity") return infinity();

  // Rational literal a or a/b stands for the root of b*x - a.
  auto is_integer = [](const std::string& t) {
    std::size_t k = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    return k < t.size() && std::all_of(t.begin() + static_cast<long>(k), t.end(),
                                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  const auto slash = s.find('/');
  if (slash == std::string::npos ? is_integer(s)
                                 : (is_integer(s.substr(0, slash)) && is_integer(s.substr(slash + 1)))) {
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (num[0] == '+') num.erase(0, 1);
    if (den[0] == '+') den.erase(0, 1);
    BigInt b(den);
    if (b == 0) throw ParseError("point denominator is zero");
    return AlgebraicPoint(PrimitivePolynomial::from_coefficients({BigInt(-BigInt(num)), b}));
  }
  return AlgebraicPoint(parse_polynomial(s).poly);
}

}  // namespace arakelov
