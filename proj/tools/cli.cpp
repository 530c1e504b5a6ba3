#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "skewmorph/census.hpp"
#include "skewmorph/census_checks.hpp"
#include "skewmorph/census_io.hpp"
#include "skewmorph/error.hpp"
#include "skewmorph/numth.hpp"
#include "skewmorph/oracle.hpp"
#include "skewmorph/reduce.hpp"

namespace skewmorph::cli {

namespace {

std::string join(const std::set<int>& values) {
  std::string out = "{";
  for (auto it = values.begin(); it != values.end(); ++it) {
    if (it != values.begin()) out += ',';
    out += std::to_string(*it);
  }
  return out + "}";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Census obtain(const std::string& census_dir, int max_n) {
  if (!census_dir.empty()) return load_census(census_dir);
  return Census::generate(max_n);
}

int run_verify(const Census& census, int upto, std::ostream& out) {
  int mismatches = 0;
  for (int n = 1; n <= std::min(upto, census.max_n()); ++n) {
    const VerifyReport r = verify(census, n);
    if (r.equal()) {
      out << "verify n=" << n << ": ok (" << r.census_count << ")\n";
      continue;
    }
    ++mismatches;
    out << "verify n=" << n << ": MISMATCH census=" << r.census_count
        << " oracle=" << r.oracle_count << '\n';
    for (const SkewMorphism& phi : r.missing) out << "  missing " << phi.to_string() << '\n';
    for (const SkewMorphism& phi : r.extra) out << "  extra " << phi.to_string() << '\n';
  }
  return mismatches;
}

void print_info(const SkewMorphism& phi, std::ostream& out) {
  const ComplexityProfile profile = complexity(phi);
  const SkewMorphism::Kernel kernel = phi.kernel();
  out << "n: " << phi.modulus() << '\n'
      << "images: " << phi.to_string() << '\n'
      << "order: " << phi.order() << '\n'
      << "powers: " << format_images(phi.powers()) << '\n'
      << "kernel: <" << kernel.generator << "> of size " << kernel.size << '\n'
      << "automorphism: " << yes_no(phi.is_automorphism()) << '\n'
      << "complexity: " << profile.complexity << '\n'
      << "auto-order: " << profile.auto_order << '\n'
      << "chain: " << format_images(profile.chain) << '\n';
  if (phi.modulus() > 1) out << "derived: " << derived(phi).to_string() << '\n';
  if (profile.complexity < 2) {
    out << "reduction: none (not proper)\n";
    return;
  }
  const ReductionTriple t = reduction(phi);
  out << "reduction: " << (t.parity == Parity::kEven ? "even" : "odd") << " complexity, h=" << t.h
      << ", alpha=" << t.alpha.to_string() << " on Z_" << t.alpha.modulus()
      << ", beta=" << t.beta.to_string() << " on Z_" << t.beta.modulus() << " ("
      << (t.parity == Parity::kEven ? "restriction to <" + std::to_string(t.auto_order) + ">"
                                    : "power " + std::to_string(t.auto_order))
      << ")\n";
}

// n = 16 p_1 ... p_i with distinct odd primes and i >= 1.
std::optional<std::vector<int>> order4_primes(int n) {
  if (n % 16 != 0) return std::nullopt;
  const int rest = n / 16;
  if (rest == 1 || rest % 2 == 0 || !numth::is_square_free(rest)) return std::nullopt;
  std::vector<int> primes;
  for (std::int64_t p : numth::prime_factors(rest)) primes.push_back(static_cast<int>(p));
  return primes;
}

// e >= 2 with n = p^e for an odd prime p.
std::optional<std::pair<int, int>> odd_prime_power(int n) {
  const auto primes = numth::prime_factors(n);
  if (primes.size() != 1 || primes[0] == 2) return std::nullopt;
  int e = 0;
  for (int k = n; k > 1; k /= static_cast<int>(primes[0])) ++e;
  if (e < 2) return std::nullopt;
  return std::pair<int, int>{static_cast<int>(primes[0]), e};
}

int run_theorem_checks(const Census& census, std::ostream& out) {
  int mismatches = 0;
  const auto report = [&](bool ok, const std::string& line) {
    out << line << (ok ? "" : "  MISMATCH") << '\n';
    if (!ok) ++mismatches;
  };
  const int max_n = census.max_n();

  out << "# proper skew morphisms of prime order p: observed/predicted\n";
  for (int n = 1; n <= max_n; ++n)
    for (std::int64_t p : numth::prime_factors(n)) {
      const CountCheck c = check_prime_order_count(census, static_cast<int>(p), n);
      report(c.matches(), "prime-order (p=" + std::to_string(p) + ",n=" + std::to_string(n) +
                              "): " + std::to_string(c.observed) + "/" + std::to_string(c.predicted));
    }
  for (int p = 2; p <= max_n; ++p) {
    if (!numth::is_prime(p)) continue;
    const std::int64_t bound = static_cast<std::int64_t>(p) * p - 3 * p + 2;
    std::int64_t best = 0;
    bool exact = true;
    for (int n = p; n <= max_n; n += p) {
      const std::int64_t observed = check_prime_order_count(census, p, n).observed;
      best = std::max(best, observed);
      if ((observed == bound) != (n % (p * (p - 1)) == 0)) exact = false;
    }
    report(best <= bound && exact,
           "prime-order maximum (p=" + std::to_string(p) + "): " + std::to_string(best) +
               " <= " + std::to_string(bound) + ", attained exactly when p(p-1) | n: " + yes_no(exact));
  }

  out << "# proper skew morphisms of order 4 at n = 16 p_1...p_i: observed/predicted\n";
  for (int n = 1; n <= max_n; ++n) {
    const auto primes = order4_primes(n);
    if (!primes) continue;
    const CountCheck c = check_order4_count(census, *primes);
    report(c.matches(), "order-4 @" + std::to_string(n) + ": " + std::to_string(c.observed) + "/" +
                            std::to_string(c.predicted));
  }

  out << "# complexities of odd prime powers\n";
  for (int n = 1; n <= max_n; ++n) {
    const auto pe = odd_prime_power(n);
    if (!pe) continue;
    const std::set<int> comps = comp_set(census, n);
    if (pe->second == 2)
      report(comps == std::set<int>{0, 1, 3}, "Comp(Z_" + std::to_string(n) + ") = " + join(comps));
    const int expected = 2 * pe->second - 1;
    const int top = comps.empty() ? 0 : *comps.rbegin();
    report(top == expected, "max complexity @" + std::to_string(n) + " = " + std::to_string(top) +
                                " (expected " + std::to_string(expected) + ")");
  }

  out << "# structure criteria: observed/expected\n";
  for (int n = 1; n <= max_n; ++n) {
    const StructureReport r = check_structure_criteria(census, n);
    std::string line = "structure @" + std::to_string(n) + ": proper " + yes_no(r.has_proper) +
                       "/" + yes_no(r.expect_proper) + ", complexity<=2 " +
                       yes_no(r.all_at_most_two) + "/" + yes_no(r.expect_at_most_two);
    if (r.odd_cube) line += ", odd cube with complexity>=4 " + yes_no(r.has_four_or_more);
    report(r.ok(), line);
  }

  out << (mismatches == 0 ? "all checks passed\n"
                          : std::to_string(mismatches) + " check(s) failed\n");
  return mismatches;
}

void print_closure(const Census& census, int bound, std::ostream& out) {
  out << "# derived-closure: is rho the derived skew morphism of some phi in the census\n";
  std::size_t realized = 0;
  const std::vector<ClosureRow> rows = derived_closure(census, bound);
  for (const ClosureRow& row : rows) {
    out << "Z_" << row.modulus << " " << row.rho.to_string() << ": ";
    if (row.host) {
      ++realized;
      out << "realized, smallest host n=" << *row.host << '\n';
    } else {
      out << "not realized up to n=" << census.max_n() << '\n';
    }
  }
  out << "realized " << realized << " of " << rows.size() << '\n';
  out << "# automorphisms of Z_p of order p-1: smallest host versus p(p-1)\n";
  for (int p = 3; p * (p - 1) <= census.max_n(); ++p) {
    if (!numth::is_prime(p)) continue;
    for (std::int64_t u : numth::units(p)) {
      if (numth::multiplicative_order(u, p) != p - 1) continue;
      const auto host = smallest_host(census, SkewMorphism::from_automorphism(p, u));
      out << "p=" << p << " u=" << u << ": "
          << (host ? "smallest host n=" + std::to_string(*host) : std::string("not realized"))
          << " (p(p-1)=" << p * (p - 1) << ")" << (host == p * (p - 1) ? "" : "  differs") << '\n';
    }
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Skew morphisms of cyclic groups", "skewmorph"};
  app.require_subcommand(1);

  int max_n = 0;
  int n = 0;
  int verify_upto = 0;
  int threads = 1;
  int upto = 0;
  int bound = 12;
  std::optional<int> order;
  std::optional<int> complexity_filter;
  std::string out_dir;
  std::string census_dir;
  std::string perm;
  std::string format = "csv";

  auto* census_cmd = app.add_subcommand("census", "Generate the census and write it to a directory");
  census_cmd->add_option("--max-n", max_n, "Largest modulus")->required()->check(CLI::PositiveNumber);
  census_cmd->add_option("--out", out_dir, "Output directory")->required();
  census_cmd->add_option("--verify-upto", verify_upto, "Compare with exhaustive search up to this n");
  census_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  auto* brute_cmd = app.add_subcommand("brute", "Exhaustive search for one modulus");
  brute_cmd->add_option("--n", n, "Modulus")->required()->check(CLI::PositiveNumber);

  auto* verify_cmd = app.add_subcommand("verify", "Compare a stored census with exhaustive search");
  verify_cmd->add_option("--census", census_dir, "Census directory")->required();
  verify_cmd->add_option("--upto", upto, "Largest modulus to compare (default: oracle limit)");

  auto* show_cmd = app.add_subcommand("show", "List the skew morphisms of Z_n");
  show_cmd->add_option("--n", n, "Modulus")->required()->check(CLI::PositiveNumber);
  show_cmd->add_option("--order", order, "Only this order");
  show_cmd->add_option("--complexity", complexity_filter, "Only this complexity");
  show_cmd->add_option("--census", census_dir, "Census directory (default: generate)");

  auto* info_cmd = app.add_subcommand("info", "Analyse one permutation");
  info_cmd->add_option("--n", n, "Modulus")->required()->check(CLI::PositiveNumber);
  info_cmd->add_option("--perm", perm, "Comma-separated images")->required();

  auto* stats_cmd = app.add_subcommand("stats", "Counts per modulus");
  auto* stats_census = stats_cmd->add_option("--census", census_dir, "Census directory");
  auto* stats_max = stats_cmd->add_option("--max-n", max_n, "Generate up to this modulus")
                        ->check(CLI::PositiveNumber);
  stats_census->excludes(stats_max);
  stats_cmd->add_option("--format", format, "csv or table")->check(CLI::IsMember({"csv", "table"}));

  auto* theorems_cmd = app.add_subcommand("check-theorems", "Check the counting theorems on a census");
  theorems_cmd->add_option("census_dir", census_dir, "Census directory")->required();

  auto* closure_cmd = app.add_subcommand("derived-closure", "Which skew morphisms are derived ones");
  auto* closure_census = closure_cmd->add_option("--census", census_dir, "Census directory");
  auto* closure_max = closure_cmd->add_option("--max-n", max_n, "Generate up to this modulus")
                          ->check(CLI::PositiveNumber);
  closure_census->excludes(closure_max);
  closure_cmd->add_option("--bound", bound, "Largest modulus of rho")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageOrIo;
  }

  try {
    if (census_cmd->parsed()) {
      const Census census = Census::generate(max_n, {.threads = threads});
      save_census(census, out_dir);
      out << "wrote " << census.max_n() << " files to " << out_dir << " (" << census.size()
          << " skew morphisms)\n";
      if (verify_upto > 0 && run_verify(census, verify_upto, out) > 0) return kMismatch;
      return kOk;
    }
    if (brute_cmd->parsed()) {
      for (const SkewMorphism& phi : oracle::enumerate_all(n)) out << phi.to_string() << '\n';
      return kOk;
    }
    if (verify_cmd->parsed()) {
      const Census census = load_census(census_dir);
      const int limit = upto > 0 ? upto : oracle::default_limit();
      return run_verify(census, limit, out) > 0 ? kMismatch : kOk;
    }
    if (show_cmd->parsed()) {
      const Census census = obtain(census_dir, n);
      for (const CensusEntry& e : census.stratum(n).entries()) {
        if (order && e.phi.order() != *order) continue;
        if (complexity_filter && e.complexity != *complexity_filter) continue;
        out << e.phi.to_string() << '\n';
      }
      return kOk;
    }
    if (info_cmd->parsed()) {
      const std::vector<int> images = parse_images(perm);
      if (images.size() != static_cast<std::size_t>(n)) {
        err << "error: expected " << n << " images, got " << images.size() << '\n';
        return kUsageOrIo;
      }
      std::optional<SkewMorphism> phi;
      try {
        phi = SkewMorphism::validate(n, images);
      } catch (const Error& e) {
        out << "not a skew morphism: " << e.what() << '\n';
        return kNotSkew;
      }
      print_info(*phi, out);
      return kOk;
    }
    if (stats_cmd->parsed()) {
      if (census_dir.empty() && max_n == 0) {
        err << "error: stats needs --census or --max-n\n";
        return kUsageOrIo;
      }
      const std::vector<StatsRow> rows = stats(obtain(census_dir, max_n));
      out << (format == "table" ? stats_table(rows) : stats_csv(rows));
      return kOk;
    }
    if (theorems_cmd->parsed()) {
      const Census census = load_census(census_dir);
      return run_theorem_checks(census, out) > 0 ? kMismatch : kOk;
    }
    if (closure_cmd->parsed()) {
      if (census_dir.empty() && max_n == 0) {
        err << "error: derived-closure needs --census or --max-n\n";
        return kUsageOrIo;
      }
      print_closure(obtain(census_dir, max_n), bound, out);
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageOrIo;
  }
  return kUsageOrIo;
}

}  // namespace skewmorph::cli
