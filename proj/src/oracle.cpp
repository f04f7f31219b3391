#include "spinfold/oracle.hpp"

#include <algorithm>
#include <unordered_map>

#include "spinfold/errors.hpp"

namespace spinfold {

namespace {

int bits_for_degree(int degree) {
  int bits = 1;
  while ((1 << bits) <= degree) ++bits;
  return bits;
}

} // namespace

SparsePolynomial::SparsePolynomial(int variables, int total_degree)
    : k_(variables), degree_(total_degree), bits_(bits_for_degree(std::max(total_degree, 1))) {
  if (k_ < 0) raise(Errc::too_few_variables, "negative variable count");
  if (k_ > 0 && k_ * bits_ > 64)
    raise(Errc::overflow, "monomial packing needs " + std::to_string(k_ * bits_) + " bits");
}

uint64_t SparsePolynomial::pack(const std::vector<int>& exponents) const {
  if (static_cast<int>(exponents.size()) > k_)
    raise(Errc::too_few_variables, "exponent vector longer than variable count");
  uint64_t key = 0;
  for (int i = 0; i < k_; ++i) {
    int e = i < static_cast<int>(exponents.size()) ? exponents[i] : 0;
    key = (key << bits_) | static_cast<uint64_t>(e);
  }
  return key;
}

std::vector<int> SparsePolynomial::unpack(uint64_t key) const {
  std::vector<int> out(k_, 0);
  uint64_t mask = (bits_ == 64) ? ~0ull : ((1ull << bits_) - 1);
  for (int i = k_; i-- > 0;) {
    out[i] = static_cast<int>(key & mask);
    key >>= bits_;
  }
  return out;
}

void SparsePolynomial::normalize(std::vector<std::pair<uint64_t, BigInt>>& raw) {
  std::sort(raw.begin(), raw.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<std::pair<uint64_t, BigInt>> out;
  out.reserve(raw.size());
  for (auto& term : raw) {
    if (!out.empty() && out.back().first == term.first) {
      out.back().second += term.second;
    } else {
      out.push_back(std::move(term));
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const auto& t) { return t.second.is_zero(); }),
            out.end());
  terms_ = std::move(out);
}

void SparsePolynomial::add_term(const std::vector<int>& exponents, const BigInt& coeff) {
  if (coeff.is_zero()) return;
  uint64_t key = pack(exponents);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const auto& t, uint64_t k) { return t.first > k; });
  if (it != terms_.end() && it->first == key) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, {key, coeff});
  }
}

BigInt SparsePolynomial::coefficient(const std::vector<int>& exponents) const {
  uint64_t key = pack(exponents);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const auto& t, uint64_t k) { return t.first > k; });
  if (it != terms_.end() && it->first == key) return it->second;
  return BigInt();
}

void SparsePolynomial::add_scaled(const SparsePolynomial& p, const BigInt& c) {
  if (c.is_zero() || p.is_zero()) return;
  if (p.k_ != k_ || p.degree_ != degree_)
    raise(Errc::internal, "add_scaled requires identical packing");
  std::vector<std::pair<uint64_t, BigInt>> merged;
  merged.reserve(terms_.size() + p.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < p.terms_.size()) {
    if (j == p.terms_.size() || (i < terms_.size() && terms_[i].first > p.terms_[j].first)) {
      merged.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || p.terms_[j].first > terms_[i].first) {
      merged.emplace_back(p.terms_[j].first, p.terms_[j].second * c);
      ++j;
    } else {
      BigInt sum = terms_[i].second + p.terms_[j].second * c;
      if (!sum.is_zero()) merged.emplace_back(terms_[i].first, std::move(sum));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
}

SparsePolynomial SparsePolynomial::multiply(const SparsePolynomial& a, const SparsePolynomial& b) {
  if (a.k_ != b.k_) raise(Errc::internal, "multiply requires matching variable counts");
  SparsePolynomial out(a.k_, a.degree_ + b.degree_);
  // Repack both factors into the wider result layout so packed keys add.
  auto repack = [&out](const SparsePolynomial& p) {
    std::vector<std::pair<uint64_t, BigInt>> terms;
    terms.reserve(p.terms_.size());
    for (const auto& [key, coeff] : p.terms_) terms.emplace_back(out.pack(p.unpack(key)), coeff);
    return terms;
  };
  auto ta = repack(a);
  auto tb = repack(b);
  std::vector<std::pair<uint64_t, BigInt>> raw;
  raw.reserve(ta.size() * tb.size());
  for (const auto& [ka, ca] : ta)
    for (const auto& [kb, cb] : tb) raw.emplace_back(ka + kb, ca * cb);
  out.normalize(raw);
  return out;
}

void SparsePolynomial::for_each_term(
    const std::function<void(const std::vector<int>&, const BigInt&)>& fn) const {
  for (const auto& [key, coeff] : terms_) fn(unpack(key), coeff);
}

std::string SparsePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for_each_term([&](const std::vector<int>& exps, const BigInt& coeff) {
    if (!out.empty()) out += " + ";
    out += coeff.to_string();
    for (int i = 0; i < k_; ++i) {
      if (exps[i] == 0) continue;
      out += " x" + std::to_string(i + 1);
      if (exps[i] > 1) out += "^" + std::to_string(exps[i]);
    }
  });
  return out;
}

namespace {

// Enumerates every filling of a straight shifted shape that satisfies the
// four tableau rules with letters 1..k, tallying contents as packed keys.
// Same cell logic as the skew search in shifted_tableaux.cpp, minus the
// content cap and the word conditions; keeping the word conditions out of
// this path is what makes the oracle independent.
class QEnumerator {
public:
  QEnumerator(const StrictPartition& shape, int k, int bits) : shape_(shape), k_(k), bits_(bits) {
    for (int i = 1; i <= shape.length(); ++i)
      for (int j = i; j <= shape.parts()[i - 1] + i - 1; ++j) cells_.push_back({i, j});
    grid_.assign(static_cast<size_t>(shape.length() + 1) * (shape.n() + 2), 0);
    content_.assign(k, 0);
  }

  const std::unordered_map<uint64_t, long long>& run() {
    fill(0);
    return tally_;
  }

private:
  struct Pos {
    int row, col;
  };

  int& at(int row, int col) { return grid_[static_cast<size_t>(row) * (shape_.n() + 2) + col]; }

  void fill(size_t idx) {
    if (idx == cells_.size()) {
      uint64_t key = 0;
      for (int i = 0; i < k_; ++i) key = (key << bits_) | static_cast<uint64_t>(content_[i]);
      ++tally_[key];
      return;
    }
    Pos c = cells_[idx];
    int left = c.col - 1 >= c.row ? at(c.row, c.col - 1) : 0;
    int up = c.row >= 2 ? at(c.row - 1, c.col) : 0;
    int lo = std::max({left, up, 2});
    int hi = 2 * k_ + 1;
    for (int rank = lo; rank <= hi; ++rank) {
      bool marked = (rank & 1) == 0;
      if (rank == left && marked) continue;  // marked repeat in row
      if (rank == up && !marked) continue;   // unmarked repeat in column
      ++content_[rank / 2 - 1];
      at(c.row, c.col) = rank;
      fill(idx + 1);
      at(c.row, c.col) = 0;
      --content_[rank / 2 - 1];
    }
  }

  const StrictPartition& shape_;
  int k_;
  int bits_;
  std::vector<Pos> cells_;
  std::vector<int> grid_;
  std::vector<int> content_;
  std::unordered_map<uint64_t, long long> tally_;
};

} // namespace

const SparsePolynomial& QFunctionOracle::q_function(const StrictPartition& lambda, int k) {
  if (k < lambda.length())
    raise(Errc::too_few_variables, "need at least " + std::to_string(lambda.length()) +
                                       " variables for " + lambda.to_string());
  auto key = std::make_pair(lambda.parts(), k);
  auto it = q_cache_.find(key);
  if (it != q_cache_.end()) return it->second;

  SparsePolynomial poly(k, lambda.n());
  if (lambda.empty()) {
    poly.add_term({}, BigInt(1));
  } else {
    QEnumerator en(lambda, k, poly.bits_);
    std::vector<std::pair<uint64_t, BigInt>> raw;
    const auto& tally = en.run();
    raw.reserve(tally.size());
    for (const auto& [packed, count] : tally) raw.emplace_back(packed, BigInt(count));
    poly.normalize(raw);
  }
  auto [pos, inserted] = q_cache_.emplace(std::move(key), std::move(poly));
  return pos->second;
}

std::map<StrictPartition, long long, PartitionCanonicalLess> QFunctionOracle::structure_constants(
    const StrictPartition& mu, const StrictPartition& nu) {
  if (mu.empty() || nu.empty())
    raise(Errc::size_mismatch, "structure constants need nonempty factors");
  int n = mu.n() + nu.n();
  int k = n; // smallest variable count keeping degree-n symmetric functions faithful
  const SparsePolynomial& qmu = q_function(mu, k);
  const SparsePolynomial& qnu = q_function(nu, k);
  SparsePolynomial product = SparsePolynomial::multiply(qmu, qnu);

  // Greedy triangular elimination: the leading monomial of Q_lambda is
  // x^lambda with coefficient 2^length(lambda), and a monomial x^lambda can
  // only occur in Q_kappa when kappa is lexicographically at least lambda,
  // so scanning D_n in canonical order leaves f(lambda) * 2^(l(mu)+l(nu)) at
  // x^lambda when its turn comes.
  std::map<StrictPartition, long long, PartitionCanonicalLess> out;
  unsigned weight = static_cast<unsigned>(mu.length() + nu.length());
  for (const StrictPartition& lambda : strict_partitions(n)) {
    BigInt c = product.coefficient(lambda.parts());
    if (c.is_zero()) continue;
    if (c.signum() < 0 || c.trailing_zero_bits() < weight)
      raise(Errc::extraction_residue,
            "coefficient at " + lambda.to_string() + " is not divisible by 2^" + std::to_string(weight));
    BigInt f = c.shr(weight);
    int scale = mu.length() + nu.length() - lambda.length();
    if (scale < 0)
      raise(Errc::extraction_residue,
            "nonzero coefficient at " + lambda.to_string() + " with excess length");
    product.add_scaled(q_function(lambda, k), -(f.shl(static_cast<unsigned>(scale))));
    out[lambda] = f.to_int64();
  }
  if (!product.is_zero())
    raise(Errc::extraction_residue, "expansion left a residue: " + product.to_string());
  return out;
}

BigInt QFunctionOracle::standard_shifted_count(const StrictPartition& lambda) {
  if (lambda.empty()) return BigInt(1);
  auto it = standard_cache_.find(lambda.parts());
  if (it != standard_cache_.end()) return it->second;
  BigInt total;
  const auto& parts = lambda.parts();
  int len = lambda.length();
  for (int i = 0; i < len; ++i) {
    std::vector<int> next = parts;
    if (i == len - 1 && parts[i] == 1) {
      next.pop_back();
    } else if (i == len - 1 || parts[i] - 1 > parts[i + 1]) {
      --next[i];
    } else {
      continue;
    }
    total += standard_shifted_count(StrictPartition(std::move(next)));
  }
  standard_cache_.emplace(parts, total);
  return total;
}

SparsePolynomial q_function(const StrictPartition& lambda, int k) {
  QFunctionOracle oracle;
  return oracle.q_function(lambda, k);
}

std::map<StrictPartition, long long, PartitionCanonicalLess> oracle_structure_constants(
    const StrictPartition& mu, const StrictPartition& nu) {
  QFunctionOracle oracle;
  return oracle.structure_constants(mu, nu);
}

BigInt standard_shifted_count(const StrictPartition& lambda) {
  QFunctionOracle oracle;
  return oracle.standard_shifted_count(lambda);
}

} // namespace spinfold
