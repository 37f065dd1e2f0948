#pragma once

// Exact arithmetic in Q[x_1, ..., x_k] / (x_i^{n_i} - c_i), a product of
// pure radical extensions.  When the degrees multiply to the degree of the
// field they generate, the monomials x^e with 0 <= e_i < n_i form a basis
// and an element is rational exactly when only the constant monomial
// survives.  Used to expand class polynomials from closed-form roots
// without any floating point.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

struct Radicals {
  std::vector<int> degree;          // n_i
  std::vector<mpq_class> radicand;  // c_i
};

class RadElem {
 public:
  using Exp = std::vector<int>;

  explicit RadElem(const Radicals* r, mpq_class c = 0) : r_(r) {
    if (c != 0) terms_[Exp(r->degree.size(), 0)] = c;
  }
  static RadElem gen(const Radicals* r, std::size_t k) {
    RadElem x(r);
    Exp e(r->degree.size(), 0);
    e[k] = 1;
    x.terms_[e] = 1;
    return x;
  }

  RadElem operator+(const RadElem& o) const {
    RadElem out = *this;
    for (const auto& [e, c] : o.terms_) out.add(e, c);
    return out;
  }
  RadElem operator-() const {
    RadElem out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
  }
  RadElem operator-(const RadElem& o) const { return *this + (-o); }
  RadElem operator*(const RadElem& o) const {
    RadElem out(r_);
    for (const auto& [e1, c1] : terms_) {
      for (const auto& [e2, c2] : o.terms_) {
        Exp e(e1.size());
        mpq_class c = c1 * c2;
        for (std::size_t i = 0; i < e.size(); ++i) {
          e[i] = e1[i] + e2[i];
          if (e[i] >= r_->degree[i]) {
            e[i] -= r_->degree[i];
            c *= r_->radicand[i];
          }
        }
        out.add(e, c);
      }
    }
    return out;
  }
  friend RadElem operator*(const mpq_class& k, const RadElem& x) { return RadElem(x.r_, k) * x; }

  std::optional<mpq_class> rational() const {
    if (terms_.empty()) return mpq_class(0);
    if (terms_.size() == 1 && terms_.begin()->first == Exp(r_->degree.size(), 0)) return terms_.begin()->second;
    return std::nullopt;
  }

 private:
  void add(const Exp& e, const mpq_class& c) {
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) it->second += c;
    if (it->second == 0) terms_.erase(it);
  }

  const Radicals* r_;
  std::map<Exp, mpq_class> terms_;
};

// Ascending coefficients of prod (X - root), when they are all integers.
inline std::optional<std::vector<mpz_class>> expand_roots(const Radicals* r, const std::vector<RadElem>& roots) {
  std::vector<RadElem> poly{RadElem(r, 1)};
  for (const auto& root : roots) {
    std::vector<RadElem> next(poly.size() + 1, RadElem(r));
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] = next[k + 1] + poly[k];
      next[k] = next[k] - root * poly[k];
    }
    poly = std::move(next);
  }
  std::vector<mpz_class> out;
  for (const auto& c : poly) {
    auto q = c.rational();
    if (!q || q->get_den() != 1) return std::nullopt;
    out.push_back(q->get_num());
  }
  return out;
}

}  // namespace oracle
