#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "powerag/error.hpp"

namespace powerag {

// GF(p^m) with p in {2,3,5,...} prime and p^m <= 2^16. Elements are encoded
// as integers in [0, p^m): the base-p digits of the encoding are the
// coefficients of the residue polynomial, lowest degree first. The modulus is
// chosen deterministically as the irreducible monic of degree m with the
// smallest integer encoding, so two fields with equal (p, m) are identical.
class Field {
 public:
  static std::shared_ptr<const Field> make(int p, int m);

  int p() const { return p_; }
  int m() const { return m_; }
  std::uint32_t size() const { return q_; }
  // m+1 coefficients, lowest degree first; leading coefficient 1.
  const std::vector<std::uint16_t>& modulus() const { return modulus_; }
  // Fixed multiplicative generator (smallest encoding with order q-1).
  std::uint16_t generator() const { return generator_; }

  bool same(const Field& other) const {
    return p_ == other.p_ && m_ == other.m_;
  }

  std::uint16_t add(std::uint16_t a, std::uint16_t b) const {
    if (p_ == 2) return a ^ b;
    if (!add_table_.empty()) return add_table_[std::size_t(a) * q_ + b];
    return add_slow(a, b);
  }

  std::uint16_t neg(std::uint16_t a) const { return neg_table_[a]; }

  std::uint16_t sub(std::uint16_t a, std::uint16_t b) const {
    return add(a, neg(b));
  }

  std::uint16_t mul(std::uint16_t a, std::uint16_t b) const {
    if (!mul_table_.empty()) return mul_table_[std::size_t(a) * q_ + b];
    if (a == 0 || b == 0) return 0;
    return exp_[std::size_t(log_[a]) + log_[b]];
  }

  // Row of the multiplication table for a fixed factor, or nullptr when the
  // field is too large for dense tables. Used by the elimination hot loops.
  const std::uint16_t* mul_row(std::uint16_t a) const {
    return mul_table_.empty() ? nullptr : &mul_table_[std::size_t(a) * q_];
  }
  const std::uint16_t* add_row(std::uint16_t a) const {
    return add_table_.empty() ? nullptr : &add_table_[std::size_t(a) * q_];
  }

  std::uint16_t inv(std::uint16_t a) const;
  // pow(0, 0) == 1 by convention; e may be negative.
  std::uint16_t pow(std::uint16_t a, long long e) const;
  // Embeds an integer into the prime subfield (reduction mod p).
  std::uint16_t from_int(long long v) const;

  std::string modulus_string() const;  // e.g. "z^4+z+1"
  std::string name() const;            // e.g. "gf(2^4)"
  std::string describe() const;

 private:
  Field() = default;
  std::uint16_t add_slow(std::uint16_t a, std::uint16_t b) const;

  int p_ = 0;
  int m_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint16_t> modulus_;
  std::uint16_t generator_ = 0;
  std::vector<std::uint16_t> exp_;   // g^i for i in [0, 2(q-1))
  std::vector<std::uint16_t> log_;   // inverse of exp_ on [1, q)
  std::vector<std::uint16_t> neg_table_;
  std::vector<std::uint16_t> add_table_;  // dense q*q tables for small fields
  std::vector<std::uint16_t> mul_table_;
};

// Element bound to its field; arithmetic checks that both operands belong to
// the same field and throws Error otherwise.
struct FieldElement {
  const Field* field = nullptr;
  std::uint16_t rep = 0;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field->same(*b.field) && a.rep == b.rep;
  }
};

FieldElement element(const Field& f, std::uint16_t rep);
FieldElement operator+(const FieldElement& a, const FieldElement& b);
FieldElement operator-(const FieldElement& a, const FieldElement& b);
FieldElement operator*(const FieldElement& a, const FieldElement& b);
FieldElement operator/(const FieldElement& a, const FieldElement& b);
FieldElement inverse(const FieldElement& a);

}  // namespace powerag
