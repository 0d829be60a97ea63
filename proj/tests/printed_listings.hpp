#pragma once

// Adomian polynomial listings for u^3 and u^4 transcribed as published,
// including their misprints, plus a parser for the plain "3*u0^2*u1" form.

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "adm/adomian.hpp"

namespace adm::testing {

// index n holds the published A_n
inline const std::array<std::string_view, 11> kPrintedCubic = {
    "u0^3",
    "3*u0^2*u1",
    "3*u0^2*u2 + 3*u0*u1^2",
    "3*u0^2*u3 + 6*u0*u1*u2 + u1^3",
    "3*u0^2*u4 + 6*u0*u1*u3 + 3*u0*u2^2 + 3*u1^2*u2",
    "3*u0^2*u5 + 6*u0*u1*u4 + 3*u0*u2*u3 + 3*u1^2*u3 + 3*u1*u2^2",
    "3*u0^2*u6 + 6*u0*u1*u5 + 6*u0*u2*u4 + 3*u1^2*u4 + 3*u0*u3^2 + 6*u1*u2*u3 + u2^3",
    "3*u0^2*u7 + 6*u0*u1*u6 + 6*u0*u2*u5 + 3*u1^2*u5 + 6*u0*u3*u4 + 6*u1*u2*u4 + 3*u1*u3^2 + 3*u2^2*u3",
    "3*u0^2*u8 + 6*u0*u1*u7 + 6*u0*u2*u6 + 3*u1^2*u6 + 6*u0*u3*u5 + 6*u1*u2*u5 + 3*u0*u4^2 + 6*u1*u3*u4 + "
    "3*u2^2*u4 + 3*u2*u3^2",
    "3*u0^2*u9 + 6*u0*u1*u8 + 6*u0*u2*u7 + 3*u1^2*u7 + 6*u0*u3*u6 + 6*u1*u2*u6 + 6*u0*u4*u5 + 6*u1*u3*u5 + "
    "3*u2^2*u5 + 3*u2^2*u4 + 6*u2*u3*u4 + u3^3",
    "3*u0^2*u10 + 6*u0*u1*u9 + 6*u0*u2*u8 + 3*u1^2*u8 + 6*u0*u3*u7 + 6*u1*u2*u7 + 6*u0*u4*u6 + 6*u1*u3*u6 + "
    "3*u2^2*u6 + 3*u2^2*u5 + 6*u1*u4*u5 + 6*u2*u3*u5 + 3*u4^2*u2 + 3*u3^2*u4",
};

inline const std::array<std::string_view, 11> kPrintedQuartic = {
    "u0^4",
    "4*u0^3*u1",
    "4*u0^3*u2 + 6*u0^2*u1^2",
    "4*u0^3*u3 + 12*u0^2*u1*u2 + 4*u0*u1^3",
    "4*u0^3*u4 + 12*u0^2*u1*u3 + 6*u0^2*u2^2 + 12*u0*u1^2*u2 + u1^4",
    "4*u0^3*u5 + 12*u0^2*u1*u4 + 12*u0^2*u2*u3 + 12*u0*u1^2*u3 + 12*u0*u1*u2^2 + 4*u2*u1^3",
    "4*u0^3*u6 + 12*u0^2*u1*u5 + 12*u0^2*u2*u4 + 12*u0*u1^2*u4 + 6*u0^2*u3^2 + 24*u0*u1*u2*u3 + 4*u1^3*u3 + "
    "4*u0*u2^3 + 6*u1^2*u2^2",
    "4*u0^3*u7 + 12*u1^2*u0*u5 + 12*u3^2*u0*u1 + 12*u0*u2^2*u3 + 12*u0*u1^2*u2 + 4*u2^3*u1 + 4*u1^3*u4 + "
    "12*u1*u0^2*u6 + 12*u2*u0^2*u5 + 12*u4*u0^2*u3 + 24*u0*u1*u2*u4",
    "4*u0^3*u8 + u2^4 + 12*u1^2*u0*u6 + 24*u0*u1*u2*u5 + 24*u0*u1*u3*u4 + 12*u2*u1^2*u4 + 12*u1*u0^2*u7 + "
    "4*u1^3*u5 + 6*u1^2*u3^2 + 12*u1*u2^2*u3 + 6*u0^2*u4^2 + 12*u0*u2^2*u4 + 12*u0*u3^2*u2 + 12*u3*u0^2*u5 + "
    "12*u2*u0^2*u6",
    "4*u0^3*u9 + 12*u0^2*u1*u8 + 12*u0^2*u2*u7 + 12*u0^2*u3*u6 + 24*u0*u1*u2*u6 + 12*u0^2*u4*u5 + "
    "24*u0*u1*u3*u5 + 24*u0*u2*u3*u4 + 12*u2^2*u1*u4 + 12*u1^2*u0*u7 + 12*u2^2*u0*u5 + 12*u4^2*u0*u1 + "
    "12*u1^2*u2*u5 + 12*u3^2*u1*u2 + 12*u1^2*u3*u4 + 4*u0*u3^3 + 4*u6*u1^3 + 4*u3*u2^3",
    "4*u0^3*u10 + 12*u0^2*u2*u8 + 12*u0^2*u3*u7 + 12*u0^2*u4*u6 + 24*u0*u2*u3*u5 + 12*u0^2*u1*u9 + "
    "24*u1*u2*u3*u4 + 24*u0*u1*u3*u6 + 12*u2^2*u1*u4 + 12*u1^2*u2*u6 + 12*u2^2*u1*u5 + 12*u1^2*u3*u5 + "
    "12*u1^2*u0*u8 + 12*u3^2*u0*u4 + 24*u0*u1*u2*u7 + 24*u0*u1*u4*u5 + 12*u2^2*u0*u6 + 12*u4^2*u0*u2 + "
    "4*u7*u1^3 + 4*u1*u3^3 + 4*u4*u2^3 + 6*u1^2*u4^2 + 6*u0^2*u5^2 + 6*u2^2*u3^2",
};

/// Parses "3*u0^2*u1" (factors in any order) into a Monomial with a sorted
/// exponent map. Repeated variables multiply.
inline Monomial parse_monomial(std::string_view text) {
  Monomial m;
  m.coefficient = 1;
  std::vector<unsigned> dense;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('*', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view factor = text.substr(pos, end - pos);
    while (!factor.empty() && factor.front() == ' ') factor.remove_prefix(1);
    while (!factor.empty() && factor.back() == ' ') factor.remove_suffix(1);
    if (!factor.empty() && factor.front() == 'u') {
      const auto caret = factor.find('^');
      const auto index = static_cast<std::size_t>(std::stoul(std::string(factor.substr(1, caret - 1))));
      const unsigned power =
          caret == std::string_view::npos ? 1U : static_cast<unsigned>(std::stoul(std::string(factor.substr(caret + 1))));
      if (dense.size() <= index) dense.resize(index + 1, 0);
      dense[index] += power;
    } else {
      m.coefficient *= Integer(std::string(factor));
    }
    pos = end + 1;
  }
  for (std::size_t k = 0; k < dense.size(); ++k)
    if (dense[k] != 0) m.exponents.push_back({k, dense[k]});
  return m;
}

/// Terms of "a + b + ..." in the order written.
inline std::vector<Monomial> parse_terms(std::string_view text) {
  std::vector<Monomial> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(" + ", pos);
    if (end == std::string_view::npos) end = text.size();
    out.push_back(parse_monomial(text.substr(pos, end - pos)));
    pos = end + 3;
  }
  return out;
}

inline bool degree_weight_ok(const Monomial& m, unsigned eta, std::size_t n) {
  return total_degree(m.exponents) == eta && weight(m.exponents) == n;
}

}  // namespace adm::testing
