#include "spinfold/spin_characters.hpp"

#include <algorithm>

#include "spinfold/errors.hpp"
#include "spinfold/shifted_tableaux.hpp"

namespace spinfold {

SpinLabel::SpinLabel(StrictPartition shape, Variant variant)
    : shape_(std::move(shape)), variant_(variant) {
  bool even = shape_.sigma() == Parity::even;
  if (even != (variant_ == Variant::selfassoc))
    raise(Errc::invalid_label, "variant does not match the sign of " + shape_.to_string());
}

SpinLabel SpinLabel::of(StrictPartition shape) {
  Variant v = shape.sigma() == Parity::even ? Variant::selfassoc : Variant::plain;
  return SpinLabel(std::move(shape), v);
}

SpinLabel SpinLabel::associate_of(StrictPartition shape) { return of(std::move(shape)).associate(); }

SpinLabel SpinLabel::associate() const {
  SpinLabel out = *this;
  if (variant_ == Variant::plain) out.variant_ = Variant::associate;
  else if (variant_ == Variant::associate) out.variant_ = Variant::plain;
  return out;
}

std::string SpinLabel::to_string(bool ascii) const {
  std::string open = ascii ? "<" : "⟨";
  std::string close = ascii ? ">" : "⟩";
  std::string out = open + shape_.to_string() + close;
  if (variant_ == Variant::associate) out += "a";
  return out;
}

bool SpinLabelCanonicalLess::operator()(const SpinLabel& a, const SpinLabel& b) const {
  if (a.shape() != b.shape()) return canonical_less(a.shape(), b.shape());
  auto rank = [](Variant v) { return v == Variant::associate ? 1 : 0; };
  return rank(a.variant()) < rank(b.variant());
}

void SpinCombination::add(const SpinLabel& label, long long mult) {
  if (mult == 0) return;
  if (mult < 0) raise(Errc::internal, "negative multiplicity");
  terms_[label] += mult;
}

void SpinCombination::add_unresolved(const StrictPartition& shape) {
  if (shape.sigma() != Parity::odd)
    raise(Errc::invalid_label, "unresolved constituents must have odd shape");
  if (!unresolved_.insert(shape).second)
    raise(Errc::internal, "duplicate unresolved constituent " + shape.to_string());
}

long long SpinCombination::multiplicity(const SpinLabel& label) const {
  auto it = terms_.find(label);
  return it == terms_.end() ? 0 : it->second;
}

BigInt SpinCombination::total_degree() const {
  BigInt total;
  for (const auto& [label, mult] : terms_) total += degree(label.shape()) * BigInt(mult);
  for (const auto& shape : unresolved_) total += degree(shape);
  return total;
}

std::map<StrictPartition, long long, PartitionCanonicalLess> SpinCombination::collapsed() const {
  std::map<StrictPartition, long long, PartitionCanonicalLess> out;
  for (const auto& [label, mult] : terms_) out[label.shape()] += mult;
  for (const auto& shape : unresolved_) out[shape] += 1;
  return out;
}

std::string SpinCombination::to_string(bool ascii) const {
  if (empty()) return "(none)";
  std::string out;
  auto unresolved_it = unresolved_.begin();
  auto flush_unresolved_before = [&](const StrictPartition* shape) {
    while (unresolved_it != unresolved_.end() &&
           (shape == nullptr || canonical_less(*unresolved_it, *shape))) {
      if (!out.empty()) out += " + ";
      out += SpinLabel::of(*unresolved_it).to_string(ascii) + " or " +
             SpinLabel::associate_of(*unresolved_it).to_string(ascii);
      ++unresolved_it;
    }
  };
  for (const auto& [label, mult] : terms_) {
    flush_unresolved_before(&label.shape());
    if (!out.empty()) out += " + ";
    if (mult != 1) out += std::to_string(mult) + "*";
    out += label.to_string(ascii);
  }
  flush_unresolved_before(nullptr);
  return out;
}

CliffordProductLabel::CliffordProductLabel(SpinLabel left, SpinLabel right)
    : left_(std::move(left)), right_(std::move(right)) {
  if (left_.shape().empty() || right_.shape().empty())
    raise(Errc::invalid_label, "Clifford product factors must be nonempty");
  if (left_.shape().sigma() == Parity::odd && right_.shape().sigma() == Parity::odd) {
    left_ = SpinLabel::of(left_.shape());
    right_ = SpinLabel::of(right_.shape());
  }
}

std::string CliffordProductLabel::to_string(bool ascii) const {
  return left_.to_string(ascii) + " (x)z " + right_.to_string(ascii);
}

AnSpinLabel::AnSpinLabel(StrictPartition shape, Half half) : shape_(std::move(shape)), half_(half) {
  bool even = shape_.sigma() == Parity::even;
  if (even == (half_ == Half::whole))
    raise(Errc::invalid_label,
          "restriction splits exactly for even shapes: " + shape_.to_string());
}

BigInt AnSpinLabel::degree() const {
  BigInt d = spinfold::degree(shape_);
  if (half_ == Half::whole) return d;
  if (d.is_odd()) raise(Errc::internal, "split degree is odd for " + shape_.to_string());
  return d.shr(1);
}

std::string AnSpinLabel::to_string(bool ascii) const {
  std::string base = SpinLabel::of(shape_).to_string(ascii);
  switch (half_) {
    case Half::whole: return base + (ascii ? "|An" : "↓");
    case Half::plus: return base + (ascii ? "|An+" : "↓+");
    case Half::minus: return base + (ascii ? "|An-" : "↓-");
  }
  return base;
}

namespace {

// Multiset of prime exponents for exact products of small factorials and
// integer factors; keeps the degree formula in integers the whole way.
class PrimeExponents {
public:
  void mul_integer(int v, int power = 1) {
    for (int p = 2; p * p <= v; ++p) {
      while (v % p == 0) {
        bump(p, power);
        v /= p;
      }
    }
    if (v > 1) bump(v, power);
  }

  void mul_factorial(int v, int power = 1) {
    for (int i = 2; i <= v; ++i) mul_integer(i, power);
  }

  BigInt value() const {
    BigInt out(1);
    for (const auto& [p, e] : exps_) {
      if (e < 0) raise(Errc::internal, "degree product is not integral");
      for (int i = 0; i < e; ++i) out *= BigInt(p);
    }
    return out;
  }

private:
  void bump(int p, int by) { exps_[p] += by; }
  std::map<int, int> exps_;
};

} // namespace

BigInt g_lambda(const StrictPartition& lambda) {
  if (lambda.empty()) return BigInt(1);
  const auto& parts = lambda.parts();
  PrimeExponents acc;
  acc.mul_factorial(lambda.n());
  for (int p : parts) acc.mul_factorial(p, -1);
  for (size_t i = 0; i < parts.size(); ++i)
    for (size_t j = i + 1; j < parts.size(); ++j) {
      acc.mul_integer(parts[i] - parts[j]);
      acc.mul_integer(parts[i] + parts[j], -1);
    }
  return acc.value();
}

BigInt degree(const StrictPartition& lambda) {
  if (lambda.empty()) return BigInt(1);
  unsigned e = static_cast<unsigned>(lambda.n() - lambda.length()) / 2;
  return g_lambda(lambda).shl(e);
}

BigInt degree(const SpinLabel& label) { return degree(label.shape()); }

SpinCombination branch_up(const SpinLabel& x) {
  SpinCombination out;
  const StrictPartition& lambda = x.shape();
  if (lambda.empty()) raise(Errc::unsupported_n, "cannot branch the empty label");
  if (lambda.parts().back() != 1) {
    // Adjoining a part keeps the sign, so the input variant carries over;
    // for an associate input this term is the associate.
    StrictPartition up = plus_one_part(lambda);
    out.add(x.variant() == Variant::associate ? SpinLabel::associate_of(up) : SpinLabel::of(up));
  }
  for (const StrictPartition& mu : neighbors(lambda)) {
    if (mu.sigma() == Parity::even) {
      out.add(SpinLabel::of(mu));
    } else {
      out.add(SpinLabel::of(mu));
      out.add(SpinLabel::associate_of(mu));
    }
  }
  return out;
}

SpinCombination branch_down(const SpinLabel& x) {
  SpinCombination out;
  const StrictPartition& lambda = x.shape();
  if (lambda.n() < 2) raise(Errc::unsupported_n, "nothing to restrict to below rank 1");
  const auto& parts = lambda.parts();
  if (parts.back() == 1) {
    // Inverse of the adjoined-part term; the variant carries over.
    StrictPartition down(std::vector<int>(parts.begin(), parts.end() - 1));
    out.add(x.variant() == Variant::associate ? SpinLabel::associate_of(down) : SpinLabel::of(down));
  }
  for (size_t i = 0; i < parts.size(); ++i) {
    // Inverse of the neighbor terms: remove a box, keeping parts positive
    // and strict. Both associates of an odd mu branch up to x.
    if (parts[i] == 1) continue;
    if (i + 1 < parts.size() && parts[i] - 1 == parts[i + 1]) continue;
    std::vector<int> next = parts;
    --next[i];
    StrictPartition mu(std::move(next));
    if (mu.sigma() == Parity::even) {
      out.add(SpinLabel::of(mu));
    } else {
      out.add(SpinLabel::of(mu));
      out.add(SpinLabel::associate_of(mu));
    }
  }
  return out;
}

BigInt clifford_degree(const StrictPartition& mu, const StrictPartition& nu) {
  if (mu.empty() || nu.empty()) raise(Errc::invalid_label, "Clifford factors must be nonempty");
  BigInt d = degree(mu) * degree(nu);
  if (mu.sigma() == Parity::odd && nu.sigma() == Parity::odd) d = d.shl(1);
  return d;
}

SpinCombination decompose_outer_product(const StrictPartition& mu, const StrictPartition& nu) {
  if (mu.empty() || nu.empty())
    raise(Errc::size_mismatch, "outer product factors must be nonempty");
  int n = mu.n() + nu.n();
  Partition mu_union_nu = union_parts(mu.as_partition(), nu.as_partition());
  long eps_halves = (mu_union_nu.sigma() == Parity::odd ? 1 : 0);

  SpinCombination out;
  for (const StrictPartition& lambda : strict_partitions(n)) {
    bool is_union = lambda.as_partition() == mu_union_nu;
    if (is_union && lambda.sigma() == Parity::odd) {
      // The rule does not apply here: exactly one of the two associates
      // occurs, with multiplicity one, and nothing decides which.
      out.add_unresolved(lambda);
      continue;
    }
    long long st = lr_filling_count(lambda, mu, nu);
    if (st == 0) continue;
    long lambda_eps = lambda.sigma() == Parity::odd ? 1 : 0;
    long shift = mu.length() + nu.length() - lambda.length() - lambda_eps - eps_halves;
    // (l(mu)+l(nu)-l(lambda)) and sigma(lambda)+sigma(mu u nu) always agree
    // mod 2, which is what makes the multiplicity below an integer.
    if (shift % 2 != 0)
      raise(Errc::internal, "length/sign parity identity violated at " + lambda.to_string());
    HalfPowerScalar coeff = HalfPowerScalar::from_integer(BigInt(st)).times_pow2_half(shift);
    if (!coeff.is_integral())
      raise(Errc::internal, "non-integral multiplicity at " + lambda.to_string());
    long long mult = coeff.to_integer().to_int64();
    if (lambda.sigma() == Parity::even) {
      out.add(SpinLabel::of(lambda), mult);
    } else {
      out.add(SpinLabel::of(lambda), mult);
      out.add(SpinLabel::associate_of(lambda), mult);
    }
  }

  BigInt expected = BigInt::binomial(static_cast<unsigned>(n), static_cast<unsigned>(mu.n())) *
                    clifford_degree(mu, nu);
  if (out.total_degree() != expected)
    raise(Errc::internal, "degree sum mismatch for " + mu.to_string() + " x " + nu.to_string() +
                              ": " + out.total_degree().to_string() + " vs " + expected.to_string());
  return out;
}

std::vector<AnSpinLabel> restrict_to_an(const SpinLabel& x) {
  if (x.shape().n() < 2) raise(Errc::unsupported_n, "restriction needs rank at least 2");
  if (x.shape().sigma() == Parity::even)
    return {AnSpinLabel(x.shape(), Half::plus), AnSpinLabel(x.shape(), Half::minus)};
  return {AnSpinLabel(x.shape(), Half::whole)};
}

SpinCombination induce_from_an(const AnSpinLabel& x) {
  SpinCombination out;
  if (x.half() == Half::whole) {
    out.add(SpinLabel::of(x.shape()));
    out.add(SpinLabel::associate_of(x.shape()));
  } else {
    out.add(SpinLabel::of(x.shape()));
  }
  return out;
}

} // namespace spinfold
