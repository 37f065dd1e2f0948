#pragma once

// Primitive positive definite binary quadratic forms a*x^2 + b*xy + c*y^2
// of negative discriminant, and the form class group.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "wj/error.hpp"
#include "wj/precision.hpp"

namespace wj {

class Form {
 public:
  // Throws InvalidForm unless a > 0, b^2 - 4ac < 0 and gcd(a, b, c) = 1.
  Form(BigInt a, BigInt b, BigInt c);

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  const BigInt& c() const { return c_; }
  BigInt discriminant() const { return b_ * b_ - 4 * a_ * c_; }

  // (a, -b, c), the inverse class.
  Form conj() const { return Form(a_, -b_, c_, unchecked{}); }

  friend bool operator==(const Form& x, const Form& y) { return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_; }
  friend bool operator<(const Form& x, const Form& y);

 private:
  struct unchecked {};
  Form(BigInt a, BigInt b, BigInt c, unchecked) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}
  friend Form reduce(const Form& f);
  friend Form compose(const Form& f, const Form& g);
  friend Form principal_form(const BigInt& D);

  BigInt a_, b_, c_;
};

// Throws InvalidDiscriminant unless D < 0 and D = 0, 1 mod 4.
void check_discriminant(const BigInt& D);

Form principal_form(const BigInt& D);
bool is_principal(const Form& f);

// -a < b <= a <= c, and b >= 0 when a = c.
bool is_reduced(const Form& f);
Form reduce(const Form& f);

// Reduced Gauss composition.  Throws DiscriminantMismatch.
Form compose(const Form& f, const Form& g);

// Reduced representative of f^k; negative k uses the conjugate form.
Form power(const Form& f, long k);
long element_order(const Form& f);

// Reduced primitive forms of discriminant D, sorted by (a, b, c).
std::vector<Form> enumerate_reduced(const BigInt& D);

class ClassGroup {
 public:
  explicit ClassGroup(const BigInt& D);

  const BigInt& discriminant() const { return D_; }
  std::size_t h() const { return elements_.size(); }
  const std::vector<Form>& elements() const { return elements_; }
  // Invariant factors d1 | d2 | ... with product h.
  const std::vector<long>& structure() const { return structure_; }

  // Position of a form's reduced class in elements().
  std::size_t index_of(const Form& f) const;
  std::size_t compose_index(std::size_t i, std::size_t j) const { return table_[i * h() + j]; }
  std::size_t identity_index() const { return 0; }
  long order_of(std::size_t i) const { return orders_[i]; }

 private:
  BigInt D_;
  std::vector<Form> elements_;
  std::vector<std::size_t> table_;
  std::vector<long> orders_;
  std::vector<long> structure_;
};

inline ClassGroup class_group(const BigInt& D) { return ClassGroup(D); }

// "a,b,c"
std::string to_string(const Form& f);
Form parse_form(std::string_view text);

}  // namespace wj
