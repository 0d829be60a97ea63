#pragma once

// Adomian polynomials A_n for the power nonlinearity N(u) = u^eta.
//
// A_n is the coefficient of lambda^n in (u_0 + u_1 lambda + u_2 lambda^2 + ...)^eta.
// Two independent constructions are provided: a direct multiset enumeration
// with multinomial coefficients (generate_adomian) and a truncated power of a
// symbolic lambda-series (generate_adomian_oracle).

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "adm/error.hpp"
#include "adm/numeric_kernel.hpp"

namespace adm {

/// u_index raised to power (power >= 1).
struct VarPower {
  std::size_t index = 0;
  unsigned power = 0;

  friend bool operator==(const VarPower&, const VarPower&) = default;
};

/// Sparse exponent map, sorted by ascending variable index, no zero powers.
using Exponents = std::vector<VarPower>;

inline unsigned total_degree(const Exponents& e) {
  unsigned d = 0;
  for (const auto& vp : e) d += vp.power;
  return d;
}

inline std::size_t weight(const Exponents& e) {
  std::size_t w = 0;
  for (const auto& vp : e) w += vp.index * vp.power;
  return w;
}

/// Lexicographic comparison of the dense exponent vectors (e_0, e_1, ...).
inline std::strong_ordering compare_exponents(const Exponents& a, const Exponents& b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    const std::size_t ka = i < a.size() ? a[i].index : static_cast<std::size_t>(-1);
    const std::size_t kb = j < b.size() ? b[j].index : static_cast<std::size_t>(-1);
    // At the smaller of the two current indices one side has a positive
    // exponent and the other has zero.
    if (ka < kb) return std::strong_ordering::greater;
    if (kb < ka) return std::strong_ordering::less;
    if (a[i].power != b[j].power) return a[i].power <=> b[j].power;
    ++i;
    ++j;
  }
  return std::strong_ordering::equal;
}

/// Product of two exponent maps (powers of shared variables add).
inline Exponents multiply_exponents(const Exponents& a, const Exponents& b) {
  Exponents out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].index < b[j].index)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].index < a[i].index) {
      out.push_back(b[j++]);
    } else {
      out.push_back({a[i].index, a[i].power + b[j].power});
      ++i;
      ++j;
    }
  }
  return out;
}

struct ExponentsLess {
  bool operator()(const Exponents& a, const Exponents& b) const { return compare_exponents(a, b) < 0; }
};

/// coefficient * prod_k u_k^{e_k}.
struct Monomial {
  Integer coefficient{1};
  Exponents exponents;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Plain text, e.g. "6*u0*u1*u2"; the empty product renders as the coefficient.
inline std::string render_plain(const Monomial& m) {
  std::string out;
  if (m.coefficient != 1 || m.exponents.empty()) out = m.coefficient.str();
  for (const auto& [k, e] : m.exponents) {
    if (!out.empty()) out += "*";
    out += "u" + std::to_string(k);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

inline std::string render_latex(const Monomial& m) {
  std::string out;
  if (m.coefficient != 1 || m.exponents.empty()) out = m.coefficient.str();
  for (const auto& [k, e] : m.exponents) {
    out += "u_{" + std::to_string(k) + "}";
    if (e != 1) out += "^{" + std::to_string(e) + "}";
  }
  return out;
}

/// A_n for N(u) = u^eta in canonical form.
///
/// Terms are distinct, have positive coefficients, total degree eta and
/// weight n, and are sorted by descending dense exponent vector. Instances
/// come from canonicalize() or the generators, so equality is structural.
class AdomianPolynomial {
 public:
  unsigned eta() const noexcept { return eta_; }
  std::size_t order() const noexcept { return order_; }
  std::span<const Monomial> terms() const& noexcept { return terms_; }
  std::vector<Monomial> terms() && { return std::move(terms_); }
  bool is_zero() const noexcept { return terms_.empty(); }

  friend bool operator==(const AdomianPolynomial&, const AdomianPolynomial&) = default;

 private:
  friend AdomianPolynomial canonicalize(std::vector<Monomial> terms, unsigned eta, std::size_t n);

  unsigned eta_ = 0;
  std::size_t order_ = 0;
  std::vector<Monomial> terms_;
};

/// Merges like terms, drops zero coefficients and sorts into canonical order.
/// Throws invalid_monomial for a term of the wrong degree or weight, or with
/// a negative coefficient.
inline AdomianPolynomial canonicalize(std::vector<Monomial> terms, unsigned eta, std::size_t n) {
  std::map<Exponents, Integer, ExponentsLess> merged;
  for (auto& m : terms) {
    for (std::size_t i = 0; i < m.exponents.size(); ++i) {
      const bool bad_power = m.exponents[i].power == 0;
      const bool unsorted = i > 0 && m.exponents[i - 1].index >= m.exponents[i].index;
      if (bad_power || unsorted)
        throw invalid_monomial("malformed exponent map in term " + render_plain(m));
    }
    if (total_degree(m.exponents) != eta || weight(m.exponents) != n)
      throw invalid_monomial("term " + render_plain(m) + " has degree " +
                             std::to_string(total_degree(m.exponents)) + " and weight " +
                             std::to_string(weight(m.exponents)) + ", expected degree " +
                             std::to_string(eta) + " and weight " + std::to_string(n));
    if (m.coefficient < 0) throw invalid_monomial("negative coefficient in term " + render_plain(m));
    merged[std::move(m.exponents)] += m.coefficient;
  }

  AdomianPolynomial out;
  out.eta_ = eta;
  out.order_ = n;
  // map order is ascending; canonical order is descending
  for (auto it = merged.rbegin(); it != merged.rend(); ++it)
    if (it->second != 0) out.terms_.push_back(Monomial{it->second, it->first});
  return out;
}

namespace detail {

inline Integer factorial(unsigned k) {
  Integer r(1);
  for (unsigned i = 2; i <= k; ++i) r *= i;
  return r;
}

// Emits every multiset k_1 <= ... <= k_slots with k_1 >= min_index and sum
// `remaining`, as runs of (index, multiplicity).
inline void enumerate_multisets(unsigned slots, std::size_t remaining, std::size_t min_index,
                                Exponents& current, const Integer& eta_factorial,
                                std::vector<Monomial>& out) {
  if (slots == 0) {
    if (remaining != 0) return;
    Integer denom(1);
    for (const auto& vp : current) denom *= factorial(vp.power);
    out.push_back(Monomial{eta_factorial / denom, current});
    return;
  }
  // the remaining slots all hold indices >= min_index
  for (std::size_t k = min_index; k * slots <= remaining; ++k) {
    for (unsigned m = slots; m >= 1; --m) {
      if (k * m > remaining) continue;
      // the next run starts strictly above k
      const std::size_t rest = remaining - k * m;
      const unsigned rest_slots = slots - m;
      if (rest_slots == 0 && rest != 0) continue;
      if (rest_slots > 0 && (k + 1) * rest_slots > rest) continue;
      current.push_back({k, m});
      enumerate_multisets(rest_slots, rest, k + 1, current, eta_factorial, out);
      current.pop_back();
    }
  }
}

}  // namespace detail

/// A_n for u^eta by direct construction: one term per multiset of eta
/// indices summing to n, with coefficient eta! / prod(multiplicity!).
inline AdomianPolynomial generate_adomian(unsigned eta, std::size_t n) {
  std::vector<Monomial> terms;
  Exponents current;
  detail::enumerate_multisets(eta, n, 0, current, detail::factorial(eta), terms);
  return canonicalize(std::move(terms), eta, n);
}

/// Formal power series in lambda whose coefficients are polynomials in u_k,
/// truncated after lambda^truncation.
class LambdaSeries {
 public:
  using Coefficient = std::map<Exponents, Integer, ExponentsLess>;

  /// u_0 + u_1 lambda + ... + u_N lambda^N.
  static LambdaSeries base(std::size_t truncation) {
    LambdaSeries s(truncation);
    for (std::size_t k = 0; k <= truncation; ++k) s.c_[k][Exponents{{k, 1}}] = 1;
    return s;
  }

  /// The constant series 1.
  static LambdaSeries one(std::size_t truncation) {
    LambdaSeries s(truncation);
    s.c_[0][Exponents{}] = 1;
    return s;
  }

  std::size_t truncation() const noexcept { return c_.size() - 1; }
  const Coefficient& operator[](std::size_t power) const { return c_.at(power); }

  /// Product truncated at the smaller truncation order.
  friend LambdaSeries operator*(const LambdaSeries& a, const LambdaSeries& b) {
    LambdaSeries out(std::min(a.truncation(), b.truncation()));
    const std::size_t n = out.truncation();
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = 0; i + j <= n; ++j)
        for (const auto& [ea, ca] : a.c_[i])
          for (const auto& [eb, cb] : b.c_[j]) out.c_[i + j][multiply_exponents(ea, eb)] += ca * cb;
    return out;
  }

 private:
  explicit LambdaSeries(std::size_t truncation) : c_(truncation + 1) {}

  std::vector<Coefficient> c_;
};

/// A_n from the defining generating function: the lambda^n coefficient of
/// (sum_{k<=n} u_k lambda^k)^eta, computed by repeated truncated products.
inline AdomianPolynomial generate_adomian_oracle(unsigned eta, std::size_t n) {
  const LambdaSeries base = LambdaSeries::base(n);
  LambdaSeries power = LambdaSeries::one(n);
  for (unsigned i = 0; i < eta; ++i) power = power * base;
  std::vector<Monomial> terms;
  for (const auto& [e, c] : power[n]) terms.push_back(Monomial{c, e});
  return canonicalize(std::move(terms), eta, n);
}

/// Value of A with every u_k := 1.
inline Integer coefficient_sum(const AdomianPolynomial& a) {
  Integer s(0);
  for (const auto& m : a.terms()) s += m.coefficient;
  return s;
}

/// Replaces u_k by components[k] and expands exactly.
inline TimePolynomial substitute(const AdomianPolynomial& a, std::span<const TimePolynomial> components) {
  if (components.size() < a.order() + 1)
    throw arity_error("A_" + std::to_string(a.order()) + " needs " + std::to_string(a.order() + 1) +
                      " components, got " + std::to_string(components.size()));
  TimePolynomial sum;
  for (const auto& m : a.terms()) {
    TimePolynomial prod = TimePolynomial::constant(Rational(m.coefficient));
    for (const auto& [k, e] : m.exponents) {
      for (unsigned i = 0; i < e && !prod.is_zero(); ++i) prod = prod * components[k];
    }
    sum += prod;
  }
  return sum;
}

/// Exact value with u_k := values[k].
inline Rational evaluate_at(const AdomianPolynomial& a, std::span<const Rational> values) {
  if (values.size() < a.order() + 1) throw arity_error("too few values for A_" + std::to_string(a.order()));
  Rational sum;
  for (const auto& m : a.terms()) {
    Rational prod(m.coefficient);
    for (const auto& [k, e] : m.exponents) prod *= pow(values[k], e);
    sum += prod;
  }
  return sum;
}

enum class PolyFormat { plain, latex, json };

inline nlohmann::ordered_json to_json(const AdomianPolynomial& a) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& m : a.terms()) {
    nlohmann::ordered_json exps = nlohmann::ordered_json::object();
    for (const auto& [k, e] : m.exponents) exps[std::to_string(k)] = e;
    terms.push_back({{"coeff", m.coefficient.str()}, {"exponents", std::move(exps)}});
  }
  nlohmann::ordered_json out;
  out["eta"] = a.eta();
  out["order"] = a.order();
  out["terms"] = std::move(terms);
  return out;
}

/// Inverse of to_json; the result is re-canonicalized and validated.
inline AdomianPolynomial adomian_from_json(const nlohmann::ordered_json& j) {
  const auto eta = j.at("eta").get<unsigned>();
  const auto order = j.at("order").get<std::size_t>();
  std::vector<Monomial> terms;
  for (const auto& t : j.at("terms")) {
    Monomial m;
    m.coefficient = detail::parse_integer(t.at("coeff").get<std::string>());
    for (const auto& [key, value] : t.at("exponents").items())
      m.exponents.push_back({static_cast<std::size_t>(detail::parse_integer(key).convert_to<unsigned long>()),
                             value.get<unsigned>()});
    std::sort(m.exponents.begin(), m.exponents.end(),
              [](const VarPower& x, const VarPower& y) { return x.index < y.index; });
    terms.push_back(std::move(m));
  }
  return canonicalize(std::move(terms), eta, order);
}

/// Deterministic text in canonical term order. Zero renders as "0".
inline std::string render(const AdomianPolynomial& a, PolyFormat format) {
  if (format == PolyFormat::json) return to_json(a).dump();
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& m : a.terms()) {
    if (!out.empty()) out += " + ";
    out += format == PolyFormat::plain ? render_plain(m) : render_latex(m);
  }
  return out;
}

}  // namespace adm
