#include "spinfold/classification.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "spinfold/errors.hpp"

namespace spinfold {

namespace {

bool is_single_box(const StrictPartition& p) { return p.parts() == std::vector<int>{1}; }

bool in_d_plus(const Partition& p) { return p.is_strict() && p.sigma() == Parity::even; }
bool in_d_minus(const Partition& p) { return p.is_strict() && p.sigma() == Parity::odd; }

// (m+1, m-1, m-2, ..., 1), the shape of an irreducibly induced staircase.
StrictPartition bumped_staircase(int m) {
  std::vector<int> parts{m + 1};
  for (int i = m - 1; i >= 1; --i) parts.push_back(i);
  return StrictPartition(std::move(parts));
}

// m with n = m(m+1)/2, if any.
std::optional<int> triangular_root(int n) {
  int m = static_cast<int>((std::sqrt(8.0 * n + 1.0) - 1.0) / 2.0);
  for (int c = std::max(0, m - 1); c <= m + 1; ++c)
    if (c * (c + 1) / 2 == n) return c;
  return std::nullopt;
}

bool is_bumped_staircase(const StrictPartition& p, int* m_out) {
  int m = p.length();
  const auto& parts = p.parts();
  if (parts.empty() || parts[0] != m + 1) return false;
  for (int i = 1; i < m; ++i)
    if (parts[i] != m - i) return false;
  if (m_out) *m_out = m;
  return true;
}

Stabilizer an_cover_stab(int n) {
  return Stabilizer{Stabilizer::Kind::an_cover, "A~" + std::to_string(n), BigInt(2)};
}
Stabilizer sn_minus_one_stab(int n) {
  return Stabilizer{Stabilizer::Kind::sn_cover_minus_one, "S~" + std::to_string(n - 1), BigInt(n)};
}
Stabilizer an_minus_one_stab(int n) {
  return Stabilizer{Stabilizer::Kind::an_cover_minus_one, "A~" + std::to_string(n - 1), BigInt(n)};
}
Stabilizer exceptional_stab(const std::string& name, long long index) {
  return Stabilizer{Stabilizer::Kind::exceptional, name, BigInt(index)};
}

} // namespace

bool TwistedCliffordLabel::names_same_character_as(const CliffordProductLabel& other) const {
  if (!(label == other)) return false;
  if (!associate) return true;
  // Label equality after the swap forces mu = nu, and the diagonal products
  // are self-associate, so the sign twist is absorbed.
  return label.left().shape() == label.right().shape();
}

std::string to_string(const CharacterRef& ref, bool ascii) {
  if (const auto* s = std::get_if<SpinLabel>(&ref)) return s->to_string(ascii);
  if (const auto* a = std::get_if<AnSpinLabel>(&ref)) return a->to_string(ascii);
  if (const auto* e = std::get_if<EitherHalf>(&ref)) {
    std::string base = SpinLabel::of(e->shape).to_string(ascii);
    return "either constituent of " + base + (ascii ? "|An" : "↓");
  }
  return std::get<NamedCharacter>(ref).description;
}

std::optional<BigInt> character_degree(const CharacterRef& ref) {
  if (const auto* s = std::get_if<SpinLabel>(&ref)) return degree(*s);
  if (const auto* a = std::get_if<AnSpinLabel>(&ref)) return a->degree();
  if (const auto* e = std::get_if<EitherHalf>(&ref)) {
    if (e->shape.sigma() == Parity::even) return AnSpinLabel(e->shape, Half::plus).degree();
    return degree(e->shape);
  }
  const auto& named = std::get<NamedCharacter>(ref);
  if (named.degree > 0) return BigInt(named.degree);
  return std::nullopt;
}

std::string to_string(MultFreeCase c) {
  switch (c) {
    case MultFreeCase::single_box: return "(i) single box";
    case MultFreeCase::hook_staircase_21: return "(ii) even hook staircase x <2,1>";
    case MultFreeCase::staircase_row: return "(iii) staircase x <m>";
    case MultFreeCase::staircase_near_row: return "(iv) staircase x <m-1,1>, opposite signs";
    case MultFreeCase::staircase_double_row: return "(v) even staircase x <m+1,m>";
    case MultFreeCase::fat_staircase_row: return "(vi) fat staircase x <m>, opposite signs";
  }
  return "?";
}

std::optional<MultFreeCase> is_mult_free(const StrictPartition& mu, const StrictPartition& nu) {
  if (mu.empty() || nu.empty()) raise(Errc::size_mismatch, "factors must be nonempty");

  if (is_single_box(mu) || is_single_box(nu)) return MultFreeCase::single_box;

  auto case_ii = [](const StrictPartition& a, const StrictPartition& b) {
    return b.parts() == std::vector<int>{2, 1} && a.sigma() == Parity::even && is_hook_staircase(a);
  };
  if (case_ii(mu, nu) || case_ii(nu, mu)) return MultFreeCase::hook_staircase_21;

  auto case_iii = [](const StrictPartition& a, const StrictPartition& b) {
    return b.length() == 1 && is_staircase(a);
  };
  if (case_iii(mu, nu) || case_iii(nu, mu)) return MultFreeCase::staircase_row;

  auto case_iv = [](const StrictPartition& a, const StrictPartition& b) {
    return b.length() == 2 && b.parts()[1] == 1 && b.parts()[0] >= 3 && is_staircase(a) &&
           a.sigma() != b.sigma();
  };
  if (case_iv(mu, nu) || case_iv(nu, mu)) return MultFreeCase::staircase_near_row;

  auto case_v = [](const StrictPartition& a, const StrictPartition& b) {
    return b.length() == 2 && b.parts()[0] == b.parts()[1] + 1 && is_staircase(a) &&
           a.sigma() == Parity::even;
  };
  if (case_v(mu, nu) || case_v(nu, mu)) return MultFreeCase::staircase_double_row;

  auto case_vi = [](const StrictPartition& a, const StrictPartition& b) {
    return b.length() == 1 && b.parts()[0] > 1 && is_fat_staircase(a) && a.sigma() != b.sigma();
  };
  if (case_vi(mu, nu) || case_vi(nu, mu)) return MultFreeCase::fat_staircase_row;

  return std::nullopt;
}

std::optional<StrictPartition> irreducible_outer(const StrictPartition& mu, const StrictPartition& nu) {
  auto check = [](const StrictPartition& big, const StrictPartition& box) -> std::optional<StrictPartition> {
    if (!is_single_box(box) || !is_staircase(big)) return std::nullopt;
    int m = big.length();
    if (m % 4 != 2 && m % 4 != 3) return std::nullopt;
    return bumped_staircase(m);
  };
  if (auto r = check(mu, nu)) return r;
  if (auto r = check(nu, mu)) return r;
  return std::nullopt;
}

bool splits(const Partition& pi, const Partition& mu) {
  if (pi.n() != mu.n()) raise(Errc::size_mismatch, "class parameters must partition the same m");
  if (pi.all_parts_odd() && mu.all_parts_odd()) return true;
  if (in_d_minus(pi) && in_d_plus(mu)) return true;
  if (in_d_plus(pi) && in_d_minus(mu)) return true;
  return false;
}

long long splitting_class_count(int m) {
  long long count = 0;
  auto parts = all_partitions(m);
  for (const Partition& pi : parts)
    for (const Partition& mu : parts)
      if (splits(pi, mu)) ++count;
  return count;
}

ClassParam tau_on_class(const ClassParam& c, int m) {
  if (c.pi.n() != m || c.mu.n() != m) raise(Errc::size_mismatch, "class parameter is not of weight m");
  bool split = splits(c.pi, c.mu);
  if (c.index != SplitIndex::none && !split)
    raise(Errc::invalid_label, "split index on a non-splitting class");
  ClassParam out{c.mu, c.pi, c.index};
  if (c.index == SplitIndex::none || m % 2 == 0) return out;
  bool mixed = (in_d_minus(c.pi) && in_d_plus(c.mu)) || (in_d_plus(c.pi) && in_d_minus(c.mu));
  if (mixed) out.index = c.index == SplitIndex::one ? SplitIndex::two : SplitIndex::one;
  return out;
}

TwistedCliffordLabel tau_on_character(const CliffordProductLabel& x, int m) {
  if (x.left().shape().n() != m || x.right().shape().n() != m)
    raise(Errc::size_mismatch, "both factors must have weight m");
  return TwistedCliffordLabel{CliffordProductLabel(x.right(), x.left()), m % 2 == 1};
}

bool is_tau_invariant(const StrictPartition& mu, const StrictPartition& nu) {
  if (mu.n() != nu.n()) raise(Errc::size_mismatch, "factors must have equal weight");
  return mu == nu;
}

std::optional<std::vector<CharacterRef>> wreath_irreducible(const StrictPartition& mu, Group group) {
  if (mu.empty()) raise(Errc::size_mismatch, "factor must be nonempty");
  SpinCombination square = decompose_outer_product(mu, mu);
  // Irreducible extensions exist exactly when the outer square is twice a
  // single self-associate character.
  if (!square.unresolved().empty() || square.terms().size() != 1) return std::nullopt;
  const auto& [label, mult] = *square.terms().begin();
  if (mult != 2 || !label.self_associate()) return std::nullopt;
  if (group == Group::sn) return std::vector<CharacterRef>{label};
  return std::vector<CharacterRef>{AnSpinLabel(label.shape(), Half::plus),
                                   AnSpinLabel(label.shape(), Half::minus)};
}

bool index_square_reducible(const BigInt& order_g, const BigInt& order_h) {
  if (order_h.signum() <= 0 || order_g.signum() <= 0)
    raise(Errc::non_divisor, "group orders must be positive");
  BigInt q, r;
  BigInt::divmod(order_g, order_h, q, r);
  if (!r.is_zero())
    raise(Errc::non_divisor, order_h.to_string() + " does not divide " + order_g.to_string());
  return q * q > order_g;
}

std::vector<MinimalTriple> minimal_triples(Group group, int n) {
  if (n < 4) raise(Errc::unsupported_n, "covers are only considered for n >= 4");
  std::vector<MinimalTriple> out;

  if (group == Group::sn) {
    for (const StrictPartition& lambda : strict_partitions(n, Parity::even)) {
      if (n == 6 && lambda.parts() == std::vector<int>{4, 2}) continue;
      if (n == 9 && lambda.parts() == std::vector<int>{6, 2, 1}) continue;
      out.push_back(MinimalTriple{group, n, an_cover_stab(n), EitherHalf{lambda},
                                  SpinLabel::of(lambda)});
    }
    if (auto m = triangular_root(n - 1); m && (*m % 4 == 2 || *m % 4 == 3)) {
      out.push_back(MinimalTriple{group, n, sn_minus_one_stab(n), SpinLabel::of(staircase(*m)),
                                  SpinLabel::of(bumped_staircase(*m))});
    }
    if (n == 6) {
      out.push_back(MinimalTriple{
          group, n, exceptional_stab("3^2:8", 20),
          NamedCharacter{"extension of a linear character of order four of 3^2:4", 1},
          SpinLabel::of(StrictPartition({4, 2}))});
    }
    if (n == 9) {
      out.push_back(MinimalTriple{group, n, exceptional_stab("2xL2(8):3", 240),
                                  NamedCharacter{"linear character of order six", 1},
                                  SpinLabel::of(StrictPartition({6, 2, 1}))});
    }
    return out;
  }

  if (auto m = triangular_root(n - 1); m && (*m % 4 == 0 || *m % 4 == 1) && *m >= 2) {
    out.push_back(MinimalTriple{group, n, an_minus_one_stab(n), EitherHalf{staircase(*m)},
                                AnSpinLabel(bumped_staircase(*m), Half::whole)});
  }
  if (n == 6) {
    out.push_back(MinimalTriple{
        group, n, exceptional_stab("3^2:8", 10),
        NamedCharacter{"extension of a linear character of order four of 3^2:4", 1},
        EitherHalf{StrictPartition({4, 2})}});
  }
  if (n == 9) {
    out.push_back(MinimalTriple{group, n, exceptional_stab("2xL2(8):3", 120),
                                NamedCharacter{"linear character of order six", 1},
                                EitherHalf{StrictPartition({6, 2, 1})}});
  }
  return out;
}

std::vector<Stabilizer> block_stabilizers(Group group, const SpinLabel& chi) {
  if (group != Group::sn)
    raise(Errc::invalid_label, "labels of the symmetric cover belong to group sn");
  std::vector<Stabilizer> out;
  int n = chi.shape().n();
  if (chi.shape().sigma() != Parity::even) return out;
  out.push_back(an_cover_stab(n));
  if (int m = 0; is_bumped_staircase(chi.shape(), &m) && (m % 4 == 2 || m % 4 == 3))
    out.push_back(sn_minus_one_stab(n));
  if (n == 6 && chi.shape().parts() == std::vector<int>{4, 2})
    out.push_back(exceptional_stab("3^2:Q8:2", 10));
  if (n == 9 && chi.shape().parts() == std::vector<int>{6, 2, 1})
    out.push_back(exceptional_stab("2xL2(8):3", 240));
  return out;
}

std::vector<Stabilizer> block_stabilizers(Group group, const AnSpinLabel& chi) {
  if (group != Group::an)
    raise(Errc::invalid_label, "labels of the alternating cover belong to group an");
  std::vector<Stabilizer> out;
  int n = chi.shape().n();
  if (chi.half() == Half::whole) {
    if (int m = 0; is_bumped_staircase(chi.shape(), &m) && (m % 4 == 0 || m % 4 == 1))
      out.push_back(an_minus_one_stab(n));
    return out;
  }
  if (n == 6 && chi.shape().parts() == std::vector<int>{4, 2})
    out.push_back(exceptional_stab("3^2:8", 10));
  if (n == 9 && chi.shape().parts() == std::vector<int>{6, 2, 1})
    out.push_back(exceptional_stab("2xL2(8):3", 120));
  return out;
}

std::vector<std::pair<int, CharacterRef>> monomial_imprimitive(Group group, int n_max) {
  if (n_max < 4) raise(Errc::unsupported_n, "covers are only considered for n >= 4");
  std::vector<std::pair<int, CharacterRef>> out;
  if (group == Group::sn) {
    if (n_max >= 4) out.emplace_back(4, SpinLabel::of(StrictPartition({3, 1})));
    if (n_max >= 6) out.emplace_back(6, SpinLabel::of(StrictPartition({4, 2})));
    if (n_max >= 9) out.emplace_back(9, SpinLabel::of(StrictPartition({6, 2, 1})));
  } else {
    if (n_max >= 6) out.emplace_back(6, EitherHalf{StrictPartition({4, 2})});
    if (n_max >= 9) out.emplace_back(9, EitherHalf{StrictPartition({6, 2, 1})});
  }
  return out;
}

std::vector<ExceptionalRecord> exceptional_records() {
  return {
      {"3.A6", "3xA~5", "nontrivial linear character", "chi16 or chi16bar"},
      {"3.A6", "3xS4", "linear character of order six", "chi18 or chi18bar"},
      {"3.A7", "3.A6", "chi14 or chi15, the faithful characters of degree three",
       "chi21; the conjugate pair induces to chi21bar"},
      {"3.A7", "3xS5", "linear character of order six", "chi20 or chi20bar"},
      {"3.A7", "3xL2(7)", "nontrivial linear character", "chi19 or chi19bar"},
      {"6.A6", "3xA~5", "faithful character of degree two",
       "chi21 or chi22 or one of their complex conjugates"},
  };
}

namespace {

std::string normalize_group_name(const std::string& name) {
  std::string out;
  for (char c : name) {
    if (std::isalnum(static_cast<unsigned char>(c)))
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

} // namespace

std::vector<ExceptionalRecord> exceptional_records(const std::string& group) {
  std::string want = normalize_group_name(group);
  if (want != "3a6" && want != "3a7" && want != "6a6" && want != "6a7")
    raise(Errc::parse_error, "unknown exceptional cover: " + group);
  std::vector<ExceptionalRecord> out;
  for (const auto& rec : exceptional_records())
    if (normalize_group_name(rec.group) == want) out.push_back(rec);
  return out;
}

} // namespace spinfold
