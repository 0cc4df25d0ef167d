#include "omega/scramble/e_beta.hpp"

#include <memory>
#include <string>

#include "omega/error.hpp"
#include "omega/symbolic/metric.hpp"

namespace omega::scramble {

using symbolic::Symbol;
using symbolic::Word;

namespace {

Symbol beta_bit(const Sequence& beta, Index i) {
  const Symbol bit = beta.at(i);
  if (bit > 1) {
    throw Error(ErrorKind::invalid_argument, "beta must be binary; symbol " + std::to_string(bit) + " at index " +
                                                 std::to_string(i));
  }
  return bit;
}

}  // namespace

EBetaStream::EBetaStream(Sequence beta, Sequence t0, Sequence t1, Index N, Index P)
    : beta_(std::move(beta)), t0_(std::move(t0)), t1_(std::move(t1)), N_(N), P_(P) {}

std::optional<symbolic::Segment> EBetaStream::next() {
  const Index i = next_block_++;
  const Index a = i * (N_ + P_);
  return symbolic::Segment{beta_bit(beta_, i) == 0 ? t0_ : t1_, 0, a, a + P_};
}

Sequence e_beta_witness(const Sequence& beta, const Sequence& t0, const Sequence& t1, Index N, Index P) {
  if (P <= N) throw Error(ErrorKind::invalid_argument, "E_beta blocks need P > N");
  auto stream = std::make_unique<EBetaStream>(beta, t0, t1, N, P);
  auto schedule = std::make_shared<const symbolic::SpecSchedule>(std::move(stream), N, N,
                                                                 symbolic::Filler::constant(0));
  return Sequence(t0.alphabet(), {}, symbolic::ScheduleTail{std::move(schedule), 0});
}

Sequence e_beta_witness(const Sequence& beta, const SystemParams& params) {
  return e_beta_witness(beta, params.t0, params.t1, params.N, params.P);
}

EMembershipVerdict is_in_E(const Sequence& x, const Sequence& beta, const SystemParams& params, Index depth) {
  if (depth == 0) throw Error(ErrorKind::invalid_argument, "is_in_E needs depth >= 1");
  const Rational threshold = params.epsilon / 2;
  const Index terms = symbolic::terms_for_precision(params.epsilon / 20);
  const Rational tail = pow2_inv(terms - 1);

  const Word xs = x.take(0, params.b(depth - 1) + terms);
  const Word t0s = params.t0.take(0, params.P + terms);
  const Word t1s = params.t1.take(0, params.P + terms);

  EMembershipVerdict verdict;
  verdict.depth = depth;
  std::optional<Rational> margin;
  for (Index i = 0; i < depth; ++i) {
    const Word& ts = beta_bit(beta, i) == 0 ? t0s : t1s;
    bool block_ok = true;
    for (Index j = params.a(i); j <= params.b(i); ++j) {
      const Rational upper =
          symbolic::prefix_distance(std::span(xs).subspan(j, terms), std::span(ts).subspan(j - params.a(i), terms)) +
          tail;
      const Rational slack = threshold - upper;
      if (!margin || slack < *margin) margin = slack;
      if (upper > threshold) block_ok = false;
    }
    if (!block_ok) {
      verdict.first_failing_block = i;
      break;
    }
  }
  verdict.member = !verdict.first_failing_block.has_value();
  verdict.margin = *margin;
  return verdict;
}

}  // namespace omega::scramble
