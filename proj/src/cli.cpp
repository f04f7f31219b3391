#include "spinfold/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "spinfold/classification.hpp"
#include "spinfold/errors.hpp"
#include "spinfold/oracle.hpp"
#include "spinfold/shifted_tableaux.hpp"
#include "spinfold/spin_characters.hpp"

namespace spinfold::cli {

namespace {

using nlohmann::json;

constexpr const char* kSchema = "spinfold/1";

json bigint_json(const BigInt& v) {
  // Numbers up to 2^53 stay numeric; anything larger is emitted as a string.
  static const BigInt kMaxExact = BigInt(1).shl(53);
  if (v >= -kMaxExact && v <= kMaxExact) return json(v.to_int64());
  return json(v.to_string());
}

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::selfassoc: return "self";
    case Variant::plain: return "plain";
    case Variant::associate: return "associate";
  }
  return "?";
}

json label_json(const SpinLabel& label) {
  return json{{"lambda", label.shape().parts()}, {"variant", variant_name(label.variant())}};
}

json character_ref_json(const CharacterRef& ref) {
  if (const auto* s = std::get_if<SpinLabel>(&ref)) return label_json(*s);
  if (const auto* a = std::get_if<AnSpinLabel>(&ref)) {
    const char* half = a->half() == Half::whole ? "whole" : (a->half() == Half::plus ? "plus" : "minus");
    return json{{"lambda", a->shape().parts()}, {"constituent", half}};
  }
  if (const auto* e = std::get_if<EitherHalf>(&ref))
    return json{{"lambda", e->shape.parts()}, {"constituent", "either"}};
  const auto& named = std::get<NamedCharacter>(ref);
  json out{{"description", named.description}};
  if (named.degree > 0) out["degree"] = named.degree;
  return out;
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

struct CombinationRows {
  struct Row {
    std::vector<int> lambda;
    std::string variant;
    long long mult;
    std::string text_label;
  };
  std::vector<Row> rows;
};

CombinationRows combination_rows(const SpinCombination& c, bool ascii) {
  CombinationRows out;
  auto unresolved_it = c.unresolved().begin();
  auto emit_unresolved_before = [&](const StrictPartition* shape) {
    while (unresolved_it != c.unresolved().end() &&
           (shape == nullptr || canonical_less(*unresolved_it, *shape))) {
      std::string label = SpinLabel::of(*unresolved_it).to_string(ascii) + " or " +
                          SpinLabel::associate_of(*unresolved_it).to_string(ascii);
      out.rows.push_back({unresolved_it->parts(), "unresolved", 1, label});
      ++unresolved_it;
    }
  };
  for (const auto& [label, mult] : c.terms()) {
    emit_unresolved_before(&label.shape());
    out.rows.push_back(
        {label.shape().parts(), variant_name(label.variant()), mult, label.to_string(ascii)});
  }
  emit_unresolved_before(nullptr);
  return out;
}

void render_combination(const SpinCombination& c, const std::string& format, bool ascii,
                        json header, std::ostream& out) {
  CombinationRows rows = combination_rows(c, ascii);
  if (format == "json") {
    json constituents = json::array();
    for (const auto& row : rows.rows)
      constituents.push_back(json{{"lambda", row.lambda},
                                  {"variant", row.variant},
                                  {"mult", row.mult}});
    header["schema"] = kSchema;
    header["constituents"] = std::move(constituents);
    out << header.dump() << "\n";
    return;
  }
  if (format == "csv") {
    out << "lambda,variant,mult\n";
    for (const auto& row : rows.rows) {
      Partition p(row.lambda);
      out << csv_quote(p.to_string()) << "," << row.variant << "," << row.mult << "\n";
    }
    return;
  }
  if (rows.rows.empty()) {
    out << "(none)\n";
    return;
  }
  for (const auto& row : rows.rows) out << row.text_label << "  x" << row.mult << "\n";
}

StrictPartition parse_strict_arg(const std::string& text, const char* what) {
  try {
    return parse_strict_partition(text);
  } catch (const Error& e) {
    raise(e.code(), std::string(what) + ": " + e.what());
  }
}

SpinLabel build_label(const StrictPartition& shape, const std::string& variant) {
  // Even shapes are self-associate, so every variant spelling names the one
  // character; for odd shapes "self" is the only rejected spelling.
  if (variant.empty() || variant == "plain" || variant == "self") {
    if (variant == "self" && shape.sigma() == Parity::odd)
      raise(Errc::invalid_label, shape.to_string() + " is odd; pick plain or associate");
    return SpinLabel::of(shape);
  }
  if (variant == "a" || variant == "assoc" || variant == "associate")
    return SpinLabel::associate_of(shape);
  raise(Errc::parse_error, "unknown variant '" + variant + "'");
}

const char* group_name(Group g) { return g == Group::sn ? "Sn" : "An"; }

Group parse_group(const std::string& s) {
  std::string low;
  for (char c : s) low.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (low == "sn" || low == "s") return Group::sn;
  if (low == "an" || low == "a") return Group::an;
  raise(Errc::parse_error, "unknown group '" + s + "' (expected sn or an)");
}

void print_table(const std::vector<std::vector<std::string>>& rows, std::ostream& out) {
  if (rows.empty()) {
    out << "(none)\n";
    return;
  }
  std::vector<size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
  }
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      out << row[i];
      if (i + 1 < row.size()) out << std::string(widths[i] - row[i].size() + 2, ' ');
    }
    out << "\n";
  }
}

// ---- verify ----

struct VerifySuite {
  std::string name;
  long long checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& detail) {
    ++checks;
    if (!ok && failures.size() < 10) failures.push_back(detail);
    if (!ok && failures.size() == 10) failures.push_back("...");
  }
};

void verify_oracle_vs_count(QFunctionOracle& oracle, int max_weight, VerifySuite& suite) {
  for (int n = 2; n <= max_weight; ++n) {
    for (int l = 1; l < n; ++l) {
      for (const StrictPartition& mu : strict_partitions(l)) {
        for (const StrictPartition& nu : strict_partitions(n - l)) {
          auto constants = oracle.structure_constants(mu, nu);
          Partition uni = union_parts(mu.as_partition(), nu.as_partition());
          for (const StrictPartition& lambda : strict_partitions(n)) {
            if (lambda.as_partition() == uni && lambda.sigma() == Parity::odd) continue;
            auto it = constants.find(lambda);
            long long f = it == constants.end() ? 0 : it->second;
            long long st = lr_filling_count(lambda, mu, nu);
            suite.expect(f == st, "st(" + lambda.to_string() + "; " + mu.to_string() + ", " +
                                      nu.to_string() + ") = " + std::to_string(st) +
                                      " but the Q-expansion gives " + std::to_string(f));
          }
        }
      }
    }
  }
}

void verify_standard_counts(QFunctionOracle& oracle, int max_n, VerifySuite& suite) {
  for (int n = 1; n <= max_n; ++n)
    for (const StrictPartition& lambda : strict_partitions(n))
      suite.expect(oracle.standard_shifted_count(lambda) == g_lambda(lambda),
                   "standard tableau count disagrees with the product formula at " + lambda.to_string());
}

void verify_branch_consistency(int max_n, VerifySuite& suite) {
  StrictPartition box({1});
  for (int n = 1; n <= max_n - 1; ++n) {
    for (const StrictPartition& mu : strict_partitions(n)) {
      auto via_product = decompose_outer_product(mu, box).collapsed();
      auto via_branch = branch_up(SpinLabel::of(mu)).collapsed();
      suite.expect(via_product == via_branch,
                   "branching and the outer product by a box disagree at " + mu.to_string());
    }
  }
}

void verify_reciprocity(int max_n, VerifySuite& suite) {
  for (int n = 2; n <= max_n; ++n) {
    std::vector<SpinLabel> upper, lower;
    for (const StrictPartition& p : strict_partitions(n)) {
      upper.push_back(SpinLabel::of(p));
      if (p.sigma() == Parity::odd) upper.push_back(SpinLabel::associate_of(p));
    }
    for (const StrictPartition& p : strict_partitions(n - 1)) {
      lower.push_back(SpinLabel::of(p));
      if (p.sigma() == Parity::odd) lower.push_back(SpinLabel::associate_of(p));
    }
    for (const SpinLabel& x : upper) {
      SpinCombination down = branch_down(x);
      for (const SpinLabel& y : lower) {
        long long up_mult = branch_up(y).multiplicity(x);
        suite.expect(up_mult == down.multiplicity(y),
                     "reciprocity fails between " + x.to_string(true) + " and " + y.to_string(true));
      }
    }
  }
}

void verify_splitting(int max_m, VerifySuite& suite) {
  for (int m = 1; m <= max_m; ++m)
    suite.expect(splitting_class_count(m) == [&] {
      long long d = static_cast<long long>(strict_partitions(m).size());
      long long dp = static_cast<long long>(strict_partitions(m, Parity::even).size());
      long long dm = static_cast<long long>(strict_partitions(m, Parity::odd).size());
      return d * d + 2 * dp * dm;
    }(), "splitting class count is off at m = " + std::to_string(m));
}

void verify_mult_free(int max_weight, VerifySuite& suite) {
  for (int n = 2; n <= max_weight; ++n) {
    for (int l = 1; l <= n / 2; ++l) {
      for (const StrictPartition& mu : strict_partitions(l)) {
        for (const StrictPartition& nu : strict_partitions(n - l)) {
          bool brute = true;
          SpinCombination c = decompose_outer_product(mu, nu);
          for (const auto& [label, mult] : c.terms())
            if (mult != 1) brute = false;
          bool classified = is_mult_free(mu, nu).has_value();
          suite.expect(brute == classified,
                       "multiplicity-free classification disagrees with the decomposition at (" +
                           mu.to_string() + ") x (" + nu.to_string() + ")");
        }
      }
    }
  }
}

void verify_irreducible_outer(int max_n, VerifySuite& suite) {
  StrictPartition box({1});
  for (int n = 4; n <= max_n; ++n) {
    for (const StrictPartition& mu : strict_partitions(n - 1)) {
      auto predicted = irreducible_outer(mu, box);
      auto collapsed = decompose_outer_product(mu, box).collapsed();
      bool irreducible = collapsed.size() == 1 && collapsed.begin()->second == 1 &&
                         collapsed.begin()->first.sigma() == Parity::even;
      suite.expect(predicted.has_value() == irreducible,
                   "irreducibility prediction disagrees at " + mu.to_string());
      if (predicted && irreducible)
        suite.expect(*predicted == collapsed.begin()->first,
                     "irreducible induction lands on the wrong shape at " + mu.to_string());
    }
  }
}

void verify_tau(int max_m, VerifySuite& suite) {
  for (int m = 1; m <= max_m; ++m) {
    auto parts = all_partitions(m);
    for (const Partition& pi : parts) {
      for (const Partition& mu : parts) {
        if (!splits(pi, mu)) continue;
        for (SplitIndex idx : {SplitIndex::one, SplitIndex::two}) {
          ClassParam c{pi, mu, idx};
          ClassParam twice = tau_on_class(tau_on_class(c, m), m);
          suite.expect(twice == c, "the swap action is not an involution on a class of m = " +
                                       std::to_string(m));
        }
      }
    }
    for (const StrictPartition& mu : strict_partitions(m)) {
      for (const StrictPartition& nu : strict_partitions(m)) {
        CliffordProductLabel x(SpinLabel::of(mu), SpinLabel::of(nu));
        bool fixed = tau_on_character(x, m).names_same_character_as(x);
        suite.expect(fixed == (mu == nu),
                     "swap fixed points should be the diagonal; fails at (" + mu.to_string() +
                         ") x (" + nu.to_string() + ")");
        suite.expect(is_tau_invariant(mu, nu) == (mu == nu), "invariance predicate is off");
      }
    }
  }
}

int run_verify(int max_weight, std::ostream& out) {
  if (max_weight < 2 || max_weight > 14)
    raise(Errc::unsupported_n, "--max-weight must be between 2 and 14");
  QFunctionOracle oracle;
  std::vector<VerifySuite> suites;
  suites.reserve(8);
  auto add_suite = [&suites](const char* name) -> VerifySuite& {
    suites.emplace_back();
    suites.back().name = name;
    return suites.back();
  };

  verify_oracle_vs_count(oracle, max_weight, add_suite("st vs Q-function expansion"));
  verify_standard_counts(oracle, std::min(max_weight + 4, 16),
                         add_suite("standard counts vs product formula"));
  verify_branch_consistency(max_weight, add_suite("branching vs outer product by a box"));
  verify_reciprocity(std::min(max_weight, 10), add_suite("branch reciprocity"));
  verify_splitting(std::min(max_weight, 10), add_suite("splitting class counts"));
  verify_mult_free(max_weight, add_suite("multiplicity-free classification"));
  verify_irreducible_outer(std::min(max_weight + 1, 13), add_suite("irreducible inductions"));
  verify_tau(std::min(max_weight, 8), add_suite("wreath swap action"));

  long long total = 0;
  bool ok = true;
  for (const auto& suite : suites) {
    total += suite.checks;
    if (suite.failures.empty()) {
      out << "ok    " << suite.name << " (" << suite.checks << " checks)\n";
    } else {
      ok = false;
      out << "FAIL  " << suite.name << " (" << suite.checks << " checks)\n";
      for (const auto& f : suite.failures) out << "      " << f << "\n";
    }
  }
  if (!ok) {
    out << "FAIL: verification found discrepancies\n";
    return 1;
  }
  out << "OK: " << total << " identities checked\n";
  return 0;
}

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"spin character combinatorics of the double covers of the symmetric and alternating groups"};
  app.name("spinfold");
  app.require_subcommand(0, 1);

  std::string format = "text";
  bool ascii = false;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_flag("--ascii", ascii, "render labels in plain ASCII");

  struct {
    std::string mu, nu;
  } dec;
  auto* cmd_decompose = app.add_subcommand("decompose", "decompose a projective outer product");
  cmd_decompose->fallthrough();
  cmd_decompose->add_option("--mu", dec.mu, "strict partition")->required();
  cmd_decompose->add_option("--nu", dec.nu, "strict partition")->required();

  struct {
    std::string lambda, variant;
    bool down = false;
  } br;
  auto* cmd_branch = app.add_subcommand("branch", "branch a spin character up or down one rank");
  cmd_branch->fallthrough();
  cmd_branch->add_option("--lambda", br.lambda, "strict partition")->required();
  cmd_branch->add_option("--variant", br.variant, "plain|a|self");
  cmd_branch->add_flag("--down", br.down, "restrict instead of induce");

  struct {
    std::string lambda, mu, nu;
    bool show = false;
  } st;
  auto* cmd_st = app.add_subcommand("stcoeff", "count the tableaux behind one LR coefficient");
  cmd_st->fallthrough();
  cmd_st->add_option("--lambda", st.lambda)->required();
  cmd_st->add_option("--mu", st.mu)->required();
  cmd_st->add_option("--nu", st.nu)->required();
  cmd_st->add_flag("--print-tableaux", st.show, "print the counted tableaux");

  struct {
    std::string lambda;
  } deg;
  auto* cmd_degree = app.add_subcommand("degree", "degree of a spin character");
  cmd_degree->fallthrough();
  cmd_degree->add_option("--lambda", deg.lambda)->required();

  struct {
    std::string mu, nu, lambda;
  } cls;
  auto* cmd_classify = app.add_subcommand(
      "classify", "multiplicity-freeness of a product, or the shape class of one partition");
  cmd_classify->fallthrough();
  cmd_classify->add_option("--mu", cls.mu);
  cmd_classify->add_option("--nu", cls.nu);
  cmd_classify->add_option("--lambda", cls.lambda);

  struct {
    std::string group;
    int n = 0;
  } tri;
  auto* cmd_triples = app.add_subcommand("triples", "minimal triples (H, phi, chi)");
  cmd_triples->fallthrough();
  cmd_triples->add_option("--group", tri.group, "sn|an")->required();
  cmd_triples->add_option("--n", tri.n)->required();

  struct {
    std::string group, lambda, variant;
  } stab;
  auto* cmd_stab = app.add_subcommand("stabilizers", "block stabilizers of a spin character");
  cmd_stab->fallthrough();
  cmd_stab->add_option("--group", stab.group, "sn|an")->required();
  cmd_stab->add_option("--lambda", stab.lambda)->required();
  cmd_stab->add_option("--variant", stab.variant, "plain|a|self");

  struct {
    std::string group;
    int n_max = 0;
  } mono;
  auto* cmd_mono = app.add_subcommand("monomial", "imprimitive monomial spin characters");
  cmd_mono->fallthrough();
  cmd_mono->add_option("--group", mono.group, "sn|an")->required();
  cmd_mono->add_option("--max-n", mono.n_max)->required();

  struct {
    std::string group;
  } exc;
  auto* cmd_exc = app.add_subcommand("exceptional", "minimal triples of the exceptional covers");
  cmd_exc->fallthrough();
  cmd_exc->add_option("--group", exc.group, "3.A6|3.A7|6.A6|6.A7");

  struct {
    int max_weight = 8;
  } ver;
  auto* cmd_verify = app.add_subcommand("verify", "run the oracle and property suites");
  cmd_verify->fallthrough();
  cmd_verify->add_option("--max-weight", ver.max_weight, "largest |mu|+|nu| to scan (default 8)");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.get_subcommands().empty()) {
      out << app.help();
      return 0;
    }

    if (cmd_decompose->parsed()) {
      StrictPartition mu = parse_strict_arg(dec.mu, "--mu");
      StrictPartition nu = parse_strict_arg(dec.nu, "--nu");
      SpinCombination c = decompose_outer_product(mu, nu);
      render_combination(c, format, ascii, json{{"mu", mu.parts()}, {"nu", nu.parts()}}, out);
      return 0;
    }

    if (cmd_branch->parsed()) {
      StrictPartition lambda = parse_strict_arg(br.lambda, "--lambda");
      SpinLabel label = build_label(lambda, br.variant);
      SpinCombination c = br.down ? branch_down(label) : branch_up(label);
      render_combination(c, format, ascii,
                         json{{"lambda", lambda.parts()},
                              {"variant", variant_name(label.variant())},
                              {"direction", br.down ? "down" : "up"}},
                         out);
      return 0;
    }

    if (cmd_st->parsed()) {
      StrictPartition lambda = parse_strict_arg(st.lambda, "--lambda");
      StrictPartition mu = parse_strict_arg(st.mu, "--mu");
      StrictPartition nu = parse_strict_arg(st.nu, "--nu");
      long long count = lr_filling_count(lambda, mu, nu);
      if (format == "json") {
        out << json{{"schema", kSchema},
                    {"lambda", lambda.parts()},
                    {"mu", mu.parts()},
                    {"nu", nu.parts()},
                    {"count", count}}
                   .dump()
            << "\n";
      } else if (format == "csv") {
        out << "lambda,mu,nu,count\n"
            << csv_quote(lambda.to_string()) << "," << csv_quote(mu.to_string()) << ","
            << csv_quote(nu.to_string()) << "," << count << "\n";
      } else {
        out << count << "\n";
        if (st.show)
          for (const auto& t : lr_fillings(lambda, mu, nu)) out << t.to_string() << "\n";
      }
      return 0;
    }

    if (cmd_degree->parsed()) {
      StrictPartition lambda = parse_strict_arg(deg.lambda, "--lambda");
      BigInt d = degree(lambda);
      if (format == "json") {
        out << json{{"schema", kSchema}, {"lambda", lambda.parts()}, {"degree", bigint_json(d)}}.dump()
            << "\n";
      } else if (format == "csv") {
        out << "lambda,degree\n" << csv_quote(lambda.to_string()) << "," << d.to_string() << "\n";
      } else {
        out << d.to_string() << "\n";
      }
      return 0;
    }

    if (cmd_classify->parsed()) {
      bool pair_query = !cls.mu.empty() || !cls.nu.empty();
      if (pair_query == !cls.lambda.empty())
        raise(Errc::parse_error, "classify takes either --mu and --nu, or --lambda");
      if (pair_query) {
        if (cls.mu.empty() || cls.nu.empty())
          raise(Errc::parse_error, "classify needs both --mu and --nu");
        StrictPartition mu = parse_strict_arg(cls.mu, "--mu");
        StrictPartition nu = parse_strict_arg(cls.nu, "--nu");
        auto result = is_mult_free(mu, nu);
        if (format == "json") {
          json j{{"schema", kSchema},
                 {"mu", mu.parts()},
                 {"nu", nu.parts()},
                 {"multiplicity_free", result.has_value()}};
          if (result) j["case"] = to_string(*result);
          out << j.dump() << "\n";
        } else {
          out << (result ? "multiplicity-free: yes, case " + to_string(*result)
                         : std::string("multiplicity-free: no"))
              << "\n";
        }
        return 0;
      }
      StrictPartition lambda = parse_strict_arg(cls.lambda, "--lambda");
      ShapeClass sc = classify_shape(lambda);
      std::string text;
      switch (sc.tag) {
        case ShapeClass::Tag::staircase: text = "staircase(k=" + std::to_string(sc.k) + ")"; break;
        case ShapeClass::Tag::fat_staircase:
          text = "fat_staircase(k=" + std::to_string(sc.k) + ", r=" + std::to_string(sc.r) + ")";
          break;
        case ShapeClass::Tag::hook_staircase:
          text = "hook_staircase(fat=(" + sc.fat_part.to_string() + "), stair=(" +
                 sc.stair_part.to_string() + "))";
          break;
        case ShapeClass::Tag::other: text = "other"; break;
      }
      if (format == "json") {
        json j{{"schema", kSchema}, {"lambda", lambda.parts()}, {"class", text}};
        out << j.dump() << "\n";
      } else {
        out << text << "\n";
      }
      return 0;
    }

    if (cmd_triples->parsed()) {
      Group group = parse_group(tri.group);
      auto triples = minimal_triples(group, tri.n);
      if (format == "json") {
        json arr = json::array();
        for (const auto& t : triples)
          arr.push_back(json{{"group", group_name(t.group)},
                             {"n", t.n},
                             {"stabilizer", t.stabilizer.name},
                             {"phi", to_string(t.inducing, true)},
                             {"chi", character_ref_json(t.induced)}});
        out << json{{"schema", kSchema}, {"triples", arr}}.dump() << "\n";
      } else if (format == "csv") {
        out << "stabilizer,phi,chi\n";
        for (const auto& t : triples)
          out << csv_quote(t.stabilizer.name) << "," << csv_quote(to_string(t.inducing, true)) << ","
              << csv_quote(to_string(t.induced, true)) << "\n";
      } else {
        std::vector<std::vector<std::string>> rows{{"stabilizer", "phi", "chi"}};
        for (const auto& t : triples)
          rows.push_back({t.stabilizer.name, to_string(t.inducing, ascii), to_string(t.induced, ascii)});
        if (triples.empty()) out << "(none)\n";
        else print_table(rows, out);
      }
      return 0;
    }

    if (cmd_stab->parsed()) {
      Group group = parse_group(stab.group);
      StrictPartition lambda = parse_strict_arg(stab.lambda, "--lambda");
      std::vector<Stabilizer> result;
      if (group == Group::sn) {
        result = block_stabilizers(group, build_label(lambda, stab.variant));
      } else {
        // The two halves of an even shape share their stabilizers, so one
        // representative suffices.
        AnSpinLabel label = lambda.sigma() == Parity::even ? AnSpinLabel(lambda, Half::plus)
                                                           : AnSpinLabel(lambda, Half::whole);
        result = block_stabilizers(group, label);
      }
      if (format == "json") {
        json arr = json::array();
        for (const auto& s : result) {
          json j{{"name", s.name}};
          if (s.index) j["index"] = bigint_json(*s.index);
          arr.push_back(std::move(j));
        }
        out << json{{"schema", kSchema}, {"stabilizers", arr}}.dump() << "\n";
      } else if (result.empty()) {
        out << "(none)\n";
      } else {
        for (const auto& s : result) {
          out << s.name;
          if (s.index) out << "  (index " << s.index->to_string() << ")";
          out << "\n";
        }
      }
      return 0;
    }

    if (cmd_mono->parsed()) {
      Group group = parse_group(mono.group);
      auto list = monomial_imprimitive(group, mono.n_max);
      if (format == "json") {
        json arr = json::array();
        for (const auto& [n, chi] : list)
          arr.push_back(json{{"n", n}, {"chi", character_ref_json(chi)}});
        out << json{{"schema", kSchema}, {"monomial", arr}}.dump() << "\n";
      } else if (list.empty()) {
        out << "(none)\n";
      } else {
        for (const auto& [n, chi] : list) out << "n=" << n << ": " << to_string(chi, ascii) << "\n";
      }
      return 0;
    }

    if (cmd_exc->parsed()) {
      auto records = exc.group.empty() ? exceptional_records() : exceptional_records(exc.group);
      if (format == "json") {
        json arr = json::array();
        for (const auto& r : records)
          arr.push_back(json{{"group", r.group},
                             {"stabilizer", r.stabilizer},
                             {"phi", r.phi},
                             {"chi", r.chi}});
        out << json{{"schema", kSchema}, {"exceptional", arr}}.dump() << "\n";
      } else {
        std::vector<std::vector<std::string>> rows{{"group", "stabilizer", "phi", "chi"}};
        for (const auto& r : records) rows.push_back({r.group, r.stabilizer, r.phi, r.chi});
        if (records.empty()) out << "(none)\n";
        else print_table(rows, out);
      }
      return 0;
    }

    if (cmd_verify->parsed()) return run_verify(ver.max_weight, out);

    out << app.help();
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

} // namespace spinfold::cli
