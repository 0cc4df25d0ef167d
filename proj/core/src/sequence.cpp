#include "omega/symbolic/sequence.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "omega/error.hpp"
#include "omega/symbolic/schedule.hpp"

namespace omega::symbolic {

Word parse_word(std::string_view digits) {
  Word out;
  out.reserve(digits.size());
  for (char ch : digits) {
    if (ch < '0' || ch > '9') throw Error(ErrorKind::parse, "word literal must be decimal digits");
    out.push_back(static_cast<Symbol>(ch - '0'));
  }
  return out;
}

std::string format_word(std::span<const Symbol> word) {
  std::string out;
  bool wide = std::any_of(word.begin(), word.end(), [](Symbol s) { return s > 9; });
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (wide && i > 0) out += ',';
    out += std::to_string(word[i]);
  }
  return out;
}

Alphabet Alphabet::finite(std::uint64_t size) {
  if (size == 0) throw Error(ErrorKind::invalid_argument, "finite alphabet must be nonempty");
  return Alphabet(size);
}

std::optional<std::uint64_t> Alphabet::size() const noexcept {
  if (size_ == 0) return std::nullopt;
  return size_;
}

unsigned configured_precision_bits() {
  static const unsigned bits = [] {
    const char* env = std::getenv("OMEGA_SCRAMBLE_PRECISION_BITS");
    if (env == nullptr || *env == '\0') return 64u;
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0') return 64u;
    return static_cast<unsigned>(std::clamp<unsigned long>(v, 32, 128));
  }();
  return bits;
}

namespace {

// floor(m * alpha + rho) with alpha, rho fractions in units of 2^-128.
std::uint64_t floor_affine(std::uint64_t m, UInt128 alpha, UInt128 rho) noexcept {
  const auto a_lo = static_cast<std::uint64_t>(alpha);
  const auto a_hi = static_cast<std::uint64_t>(alpha >> 64);
  const UInt128 p_lo = static_cast<UInt128>(m) * a_lo;
  const UInt128 p_hi = static_cast<UInt128>(m) * a_hi;
  const UInt128 mid = (p_lo >> 64) + static_cast<std::uint64_t>(p_hi);
  const UInt128 low = (mid << 64) | static_cast<std::uint64_t>(p_lo);
  const UInt128 high = (p_hi >> 64) + (mid >> 64);
  const UInt128 sum = low + rho;
  const UInt128 carry = sum < low ? 1 : 0;
  return static_cast<std::uint64_t>(high + carry);
}

}  // namespace

SturmianTail::SturmianTail(Decimal slope, Decimal intercept, Index offset)
    : slope_(std::move(slope)), intercept_(std::move(intercept)), offset_(offset) {
  if (slope_.value() <= 0 || slope_.value() >= 1) {
    throw Error(ErrorKind::validation, "Sturmian slope " + slope_.text() + " must lie strictly in (0,1)");
  }
  if (intercept_.value() < 0 || intercept_.value() >= 1) {
    throw Error(ErrorKind::validation, "Sturmian intercept " + intercept_.text() + " must lie in [0,1)");
  }
  const BigInt cap = BigInt(1) << 32;
  const auto probe = probe_continued_fraction(slope_.value(), kRationalityDepth, cap);
  if (probe.terminated || probe.huge_quotient) {
    throw Error(ErrorKind::validation,
                "Sturmian slope " + slope_.text() + " is rational to the represented precision (continued fraction " +
                    (probe.terminated ? "terminates" : "has a huge partial quotient") + " after " +
                    std::to_string(probe.terms) + " terms)");
  }
  bits_ = configured_precision_bits();
  slope_fx_ = slope_.fraction_bits(bits_);
  intercept_fx_ = intercept_.fraction_bits(bits_);
}

Symbol SturmianTail::at(Index n) const noexcept {
  const Index m = n + offset_;
  return floor_affine(m + 1, slope_fx_, intercept_fx_) - floor_affine(m, slope_fx_, intercept_fx_);
}

SturmianTail SturmianTail::advanced(Index k) const {
  SturmianTail out = *this;
  out.offset_ += k;
  return out;
}

Sequence::Sequence() : Sequence(Alphabet::binary(), {}, PeriodicTail{Word{0}}) {}

Sequence::Sequence(Alphabet alphabet, Word prefix, Tail tail)
    : alphabet_(alphabet), prefix_(std::move(prefix)), tail_(std::move(tail)) {
  for (Symbol s : prefix_) {
    if (!alphabet_.contains(s)) throw Error(ErrorKind::invalid_argument, "prefix symbol outside alphabet");
  }
  if (const auto* p = std::get_if<PeriodicTail>(&tail_)) {
    if (p->word.empty()) throw Error(ErrorKind::invalid_argument, "periodic tail word must be nonempty");
    for (Symbol s : p->word) {
      if (!alphabet_.contains(s)) throw Error(ErrorKind::invalid_argument, "periodic symbol outside alphabet");
    }
  } else if (std::holds_alternative<SturmianTail>(tail_)) {
    if (!alphabet_.contains(1)) throw Error(ErrorKind::invalid_argument, "Sturmian tail needs a binary alphabet");
  } else if (const auto* s = std::get_if<ScheduleTail>(&tail_)) {
    if (!s->schedule) throw Error(ErrorKind::invalid_argument, "schedule tail without schedule");
  }
}

Sequence Sequence::periodic(Word word, Word prefix, Alphabet alphabet) {
  return Sequence(alphabet, std::move(prefix), PeriodicTail{std::move(word)});
}

Sequence Sequence::constant(Symbol s, Alphabet alphabet) { return periodic(Word{s}, {}, alphabet); }

Symbol Sequence::at(Index n) const {
  if (n < prefix_.size()) return prefix_[n];
  const Index t = n - prefix_.size();
  return std::visit(
      [t](const auto& tail) -> Symbol {
        using T = std::decay_t<decltype(tail)>;
        if constexpr (std::is_same_v<T, PeriodicTail>) {
          return tail.word[t % tail.word.size()];
        } else if constexpr (std::is_same_v<T, SturmianTail>) {
          return tail.at(t);
        } else {
          return tail.schedule->symbol_at(t + tail.offset);
        }
      },
      tail_);
}

void Sequence::fill(Index start, std::span<Symbol> out) const {
  std::size_t i = 0;
  while (i < out.size() && start + i < prefix_.size()) {
    out[i] = prefix_[start + i];
    ++i;
  }
  if (i == out.size()) return;
  const Index t0 = start + i - prefix_.size();
  auto rest = out.subspan(i);
  std::visit(
      [&](const auto& tail) {
        using T = std::decay_t<decltype(tail)>;
        if constexpr (std::is_same_v<T, PeriodicTail>) {
          const std::size_t len = tail.word.size();
          std::size_t pos = t0 % len;
          for (auto& s : rest) {
            s = tail.word[pos];
            if (++pos == len) pos = 0;
          }
        } else if constexpr (std::is_same_v<T, SturmianTail>) {
          for (std::size_t k = 0; k < rest.size(); ++k) rest[k] = tail.at(t0 + k);
        } else {
          tail.schedule->fill(t0 + tail.offset, rest);
        }
      },
      tail_);
}

Word Sequence::take(Index start, Index count) const {
  Word out(count);
  fill(start, out);
  return out;
}

Sequence Sequence::shifted(Index k) const {
  if (k <= prefix_.size()) {
    return Sequence(alphabet_, Word(prefix_.begin() + static_cast<std::ptrdiff_t>(k), prefix_.end()), tail_);
  }
  const Index r = k - prefix_.size();
  Tail tail = std::visit(
      [r](const auto& t) -> Tail {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, PeriodicTail>) {
          const std::size_t rot = r % t.word.size();
          Word w(t.word.size());
          std::rotate_copy(t.word.begin(), t.word.begin() + static_cast<std::ptrdiff_t>(rot), t.word.end(),
                           w.begin());
          return PeriodicTail{std::move(w)};
        } else if constexpr (std::is_same_v<T, SturmianTail>) {
          return t.advanced(r);
        } else {
          return ScheduleTail{t.schedule, t.offset + r};
        }
      },
      tail_);
  return Sequence(alphabet_, {}, std::move(tail));
}

Sequence Sequence::prepended(std::span<const Symbol> w) const {
  Word prefix(w.begin(), w.end());
  prefix.insert(prefix.end(), prefix_.begin(), prefix_.end());
  return Sequence(alphabet_, std::move(prefix), tail_);
}

}  // namespace omega::symbolic
