#pragma once

// Formal multiquadratic ring Q[e_1, ..., e_s] / (e_k^2 - l_k).
//
// Elements are sparse maps from generator subsets (bitmasks over the
// context's generator list) to nonzero rational coordinates. Radicands are
// only required to be distinct squarefree integers, so dependent radicands
// such as 2, 3, 6 give a ring with zero divisors; every identity used by
// the certificate pipeline is a formal ring identity and does not care.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ratsos/radicand.hpp"
#include "ratsos/rational.hpp"

namespace ratsos {

using Subset = std::uint32_t;
inline constexpr std::size_t kMaxGenerators = 32;

class GeneratorContext;
using ContextPtr = std::shared_ptr<const GeneratorContext>;

/// Ordered list of distinct radicands. Immutable once created.
class GeneratorContext {
 public:
  static ContextPtr make(std::vector<Radicand> generators = {});

  std::size_t size() const noexcept { return generators_.size(); }
  bool empty() const noexcept { return generators_.empty(); }
  const std::vector<Radicand>& generators() const noexcept { return generators_; }
  const Radicand& generator(std::size_t index) const;
  std::optional<std::size_t> index_of(const Integer& radicand) const;

  /// Product of the radicands whose bits are set in `s`.
  Integer subset_product(Subset s) const;

  ContextPtr with_appended(const Radicand& r) const;
  ContextPtr without(std::size_t index) const;

  friend bool operator==(const GeneratorContext& a, const GeneratorContext& b) {
    return a.generators_ == b.generators_;
  }

 private:
  explicit GeneratorContext(std::vector<Radicand> generators);

  std::vector<Radicand> generators_;
};

class MQElem {
 public:
  using Coords = std::map<Subset, Rat>;

  /// Zero; compatible with every context.
  MQElem() = default;
  /// Context-free rational element.
  MQElem(const Rat& r);
  MQElem(int r) : MQElem(Rat(r)) {}
  MQElem(ContextPtr context, const Rat& r);

  /// c * prod_{k in s} e_k.
  static MQElem monomial(ContextPtr context, Subset s, const Rat& c);
  static MQElem generator(ContextPtr context, std::size_t index);
  /// An element squaring to n, built from a subset whose radicand product
  /// has the same squarefree part as n. Throws UsageError if none exists.
  static MQElem radical(ContextPtr context, const Integer& n);

  const ContextPtr& context() const noexcept { return context_; }
  const Coords& coords() const noexcept { return coords_; }
  Rat coordinate(Subset s) const;

  bool is_zero() const noexcept { return coords_.empty(); }
  bool is_rational() const;
  /// The empty-subset coordinate.
  Rat rational_part() const { return coordinate(0); }

  /// Flips the sign of e_g. Ring automorphism and involution.
  MQElem conjugate(std::size_t g) const;
  /// x = a + b * e_g with a, b free of e_g.
  std::pair<MQElem, MQElem> split(std::size_t g) const;
  /// Rewrites the element in `target`, mapping each generator by radicand
  /// value. Throws UsageError when a used generator is missing from target.
  MQElem reembed(const ContextPtr& target) const;

  MQElem operator-() const;
  MQElem& operator+=(const MQElem& rhs);
  MQElem& operator-=(const MQElem& rhs);
  MQElem& operator*=(const MQElem& rhs);
  MQElem& operator*=(const Rat& rhs);

  friend MQElem operator+(MQElem a, const MQElem& b) { return a += b; }
  friend MQElem operator-(MQElem a, const MQElem& b) { return a -= b; }
  friend MQElem operator*(const MQElem& a, const MQElem& b);
  friend MQElem operator*(MQElem a, const Rat& b) { return a *= b; }
  friend MQElem operator*(const Rat& a, MQElem b) { return b *= a; }

  friend bool operator==(const MQElem& a, const MQElem& b);

  /// e.g. "3 - 5*sqrt(2) + 2*sqrt(3)"; each subset is shown through the
  /// squarefree part of its radicand product.
  std::string str() const;

 private:
  void check_index(std::size_t g) const;

  ContextPtr context_;
  Coords coords_;
};

MQElem conjugate(const MQElem& x, std::size_t g);
std::pair<MQElem, MQElem> split(const MQElem& x, std::size_t g);

/// Shared context of two operands; null stands for "any". Throws
/// UsageError when both are set and differ.
ContextPtr common_context(const ContextPtr& a, const ContextPtr& b);

}  // namespace ratsos
