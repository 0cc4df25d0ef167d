/**
 * @file sequence.hpp
 * @brief One-sided sequences over integer alphabets: a literal prefix plus a tail rule.
 *
 * A Sequence is an immutable value. Copies are cheap apart from the literal
 * prefix; schedule tails are shared between copies.
 */
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "omega/symbolic/decimal.hpp"

namespace omega::symbolic {

using Symbol = std::uint64_t;
using Index = std::uint64_t;
/// A finite word. Every symbol must belong to the owning sequence's alphabet.
using Word = std::vector<Symbol>;

/// "0110" -> {0,1,1,0}. Digits only; for tests and presets.
[[nodiscard]] Word parse_word(std::string_view digits);
[[nodiscard]] std::string format_word(std::span<const Symbol> word);

class Alphabet {
 public:
  /// {0, ..., size-1}; size must be at least 1.
  static Alphabet finite(std::uint64_t size);
  /// All non-negative integers.
  static Alphabet naturals() { return Alphabet(0); }
  static Alphabet binary() { return finite(2); }

  [[nodiscard]] bool is_finite() const noexcept { return size_ != 0; }
  /// Size of a finite alphabet; nullopt for the naturals.
  [[nodiscard]] std::optional<std::uint64_t> size() const noexcept;
  [[nodiscard]] bool contains(Symbol s) const noexcept { return size_ == 0 || s < size_; }
  /// Shift-space instances need at least two symbols.
  [[nodiscard]] bool supports_shift_space() const noexcept { return size_ == 0 || size_ >= 2; }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  explicit Alphabet(std::uint64_t size) : size_(size) {}
  std::uint64_t size_ = 2;  // 0 encodes the naturals
};

struct PeriodicTail {
  Word word;  // nonempty
};

/// Mechanical word n -> floor((n+1)a + r) - floor(n a + r), evaluated in
/// 128-bit fixed point truncated to the configured precision.
class SturmianTail {
 public:
  /// Throws Error{validation} for slopes outside (0,1), intercepts outside
  /// [0,1), and slopes whose continued fraction ends (or hits an
  /// astronomically large quotient) within 32 partial quotients.
  SturmianTail(Decimal slope, Decimal intercept, Index offset = 0);

  [[nodiscard]] Symbol at(Index n) const noexcept;

  [[nodiscard]] const Decimal& slope() const noexcept { return slope_; }
  [[nodiscard]] const Decimal& intercept() const noexcept { return intercept_; }
  [[nodiscard]] Index offset() const noexcept { return offset_; }
  [[nodiscard]] unsigned precision_bits() const noexcept { return bits_; }
  [[nodiscard]] SturmianTail advanced(Index k) const;

 private:
  Decimal slope_;
  Decimal intercept_;
  UInt128 slope_fx_ = 0;
  UInt128 intercept_fx_ = 0;
  unsigned bits_ = 64;
  Index offset_ = 0;
};

class SpecSchedule;

struct ScheduleTail {
  std::shared_ptr<const SpecSchedule> schedule;
  Index offset = 0;
};

using Tail = std::variant<PeriodicTail, SturmianTail, ScheduleTail>;

/// Number of continued-fraction terms a Sturmian slope must exhibit.
inline constexpr std::size_t kRationalityDepth = 32;

/// Fixed-point precision read once from OMEGA_SCRAMBLE_PRECISION_BITS
/// (default 64, clamped to [32, 128]).
[[nodiscard]] unsigned configured_precision_bits();

class Sequence {
 public:
  /// 0^omega over the binary alphabet.
  Sequence();
  Sequence(Alphabet alphabet, Word prefix, Tail tail);

  static Sequence periodic(Word word, Word prefix = {}, Alphabet alphabet = Alphabet::binary());
  static Sequence constant(Symbol s, Alphabet alphabet = Alphabet::binary());

  [[nodiscard]] Symbol at(Index n) const;
  /// out[i] = at(start + i).
  void fill(Index start, std::span<Symbol> out) const;
  [[nodiscard]] Word take(Index start, Index count) const;

  [[nodiscard]] Sequence shifted(Index k) const;
  [[nodiscard]] Sequence prepended(std::span<const Symbol> w) const;

  [[nodiscard]] const Alphabet& alphabet() const noexcept { return alphabet_; }
  [[nodiscard]] const Word& prefix() const noexcept { return prefix_; }
  [[nodiscard]] const Tail& tail() const noexcept { return tail_; }

  [[nodiscard]] bool eventually_periodic() const noexcept {
    return std::holds_alternative<PeriodicTail>(tail_);
  }

 private:
  Alphabet alphabet_;
  Word prefix_;
  Tail tail_;
};

[[nodiscard]] inline Symbol symbol_at(const Sequence& x, Index n) { return x.at(n); }
[[nodiscard]] inline Sequence shift(const Sequence& x, Index k) { return x.shifted(k); }
[[nodiscard]] inline Sequence prepend(std::span<const Symbol> w, const Sequence& x) { return x.prepended(w); }

}  // namespace omega::symbolic
