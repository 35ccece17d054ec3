// Command-line front end for the specht library.
//
// Exit codes: 0 success, 1 verification mismatch under the conjecture
// hypothesis, 2 invalid input, 3 internal limit.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "specht/io.hpp"
#include "specht/specht.hpp"

namespace {

using namespace specht;

constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitLimit = 3;

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string chain_text(const AChain& chain) {
  std::string out;
  for (const auto& el : chain.elements) {
    if (!out.empty()) out += " > ";
    out += to_string(el);
  }
  return out;
}

std::string record_text(const VerificationRecord& r) {
  auto dim = [](const std::optional<BigInt>& v) { return v ? v->str() : std::string("-"); };
  std::string status;
  if (r.error) {
    status = "error";
  } else {
    status = r.match ? "match" : "MISMATCH";
  }
  std::string regime = r.in_regime ? (r.conjecture_hypothesis ? "decisive" : "in-regime") : "out(" + r.note + ")";
  std::string line = "mu=" + to_string(r.mu) + " p=" + std::to_string(r.p) + " n=" + std::to_string(r.n) +
                     " m=" + std::to_string(r.m) + " formula=" + dim(r.formula_dim) + " oracle=" + dim(r.oracle_dim) +
                     " " + status + " " + regime;
  if (r.error) line += " [" + *r.error + "]";
  return line;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Low-degree modular irreducibles of symmetric groups: rim-hook chains, dimension formulas, Gram-rank oracle"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  int size_cap = 16;
  app.add_flag("--json", as_json, "Emit JSON instead of text");
  app.add_option("--size-cap", size_cap, "Largest n accepted by the Gram oracle")
      ->envname("SPECHT_SIZE_CAP")
      ->check(CLI::Range(1, kMaxPackedSize));

  std::string lambda_text, mu_text, coeff_text;
  int m = 0, k = 0;
  std::uint64_t p = 0;

  auto* dim_specht = app.add_subcommand("dim-specht", "Dimension of the Specht module S^lambda");
  dim_specht->add_option("lambda", lambda_text, "Partition, e.g. [5,2]")->required();

  auto* dim_poly = app.add_subcommand("dim-poly", "dim S^(n-|mu|,mu) as a polynomial in n");
  dim_poly->add_option("mu", mu_text, "Tail partition, e.g. [2]")->required();

  auto* a_set_cmd = app.add_subcommand("a-set", "The chain A(lambda, m)");
  a_set_cmd->add_option("lambda", lambda_text)->required();
  a_set_cmd->add_option("m", m)->required()->check(CLI::NonNegativeNumber);

  auto* dec_irr = app.add_subcommand("decompose-irr", "[D^lambda] in Specht classes for n = m mod p");
  dec_irr->add_option("lambda", lambda_text)->required();
  dec_irr->add_option("m", m)->required()->check(CLI::NonNegativeNumber);

  auto* dec_std = app.add_subcommand("decompose-std", "[S^lambda] in irreducible classes");
  dec_std->add_option("lambda", lambda_text)->required();
  dec_std->add_option("m", m)->required()->check(CLI::NonNegativeNumber);
  dec_std->add_option("k", k, "Family bound: partitions nu with n - nu_1 <= k")->required()->check(CLI::NonNegativeNumber);

  int max_residue = -1;
  auto* dim_table = app.add_subcommand("dim-table", "dim D^(n-|mu|,mu) case by case in n mod p");
  dim_table->add_option("mu", mu_text)->required();
  dim_table->add_option("--max-residue", max_residue, "Largest residue examined (default 2(|mu|+1))")
      ->check(CLI::NonNegativeNumber);

  std::string dump_path;
  auto* gram_rank = app.add_subcommand("gram-rank", "Rank of the Gram matrix of S^lambda over F_p");
  gram_rank->add_option("lambda", lambda_text)->required();
  gram_rank->add_option("p", p)->required();
  gram_rank->add_option("--dump", dump_path, "Write the Gram matrix mod p to this file");

  std::vector<std::string> mu_list;
  std::vector<std::uint64_t> p_list;
  int n_min = 0, n_max = 0;
  unsigned threads = 0;
  auto* verify = app.add_subcommand("verify", "Compare dimension formulas against the Gram-rank oracle");
  // One partition per --mu; expected(1) keeps CLI11 from splitting "[2,1]" into a list.
  verify->add_option("--mu", mu_list, "Tail partition (repeatable)")
      ->expected(1)
      ->allow_extra_args(false)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)
      ->required();
  verify->add_option("--p", p_list, "Primes (repeatable)")->required();
  verify->add_option("--n-min", n_min)->required();
  verify->add_option("--n-max", n_max)->required();
  verify->add_option("--threads", threads, "Worker threads (0 = all cores)");

  std::size_t count = 0;
  std::string p_min_text = "2";
  auto* prime_seq = app.add_subcommand("prime-seq", "Pairs (t, p) with p | q(t) and p increasing");
  prime_seq->add_option("coeffs", coeff_text, "Coefficients, constant term first, e.g. 1,0,1")->required();
  prime_seq->add_option("count", count)->required()->check(CLI::PositiveNumber);
  prime_seq->add_option("--p-min", p_min_text, "Only primes above this value");
  ParameterSearch search;
  prime_seq->add_option("--max-t", search.max_t, "Give up after this many values of t")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  OracleOptions oracle;
  oracle.size_cap = size_cap;

  try {
    if (*dim_specht) {
      const auto dim = specht_dimension(parse_partition(lambda_text));
      if (as_json) {
        print({{"partition", lambda_text}, {"dimension", bigint_to_json(dim)}});
      } else {
        std::cout << dim << '\n';
      }
    } else if (*dim_poly) {
      const PaddedShape shape(parse_partition(mu_text));
      const auto poly = specht_dimension_polynomial(shape);
      if (as_json) {
        json j = to_json(poly);
        j["mu"] = partition_to_json(shape.tail());
        j["threshold"] = shape.threshold();
        print(j);
      } else {
        std::cout << to_string(poly) << '\n';
      }
    } else if (*a_set_cmd) {
      const auto chain = a_set(parse_partition(lambda_text), m);
      if (as_json) {
        print(to_json(chain));
      } else {
        std::cout << chain_text(chain) << '\n';
      }
    } else if (*dec_irr) {
      const auto v = decompose_irreducible(parse_partition(lambda_text), m);
      if (as_json) {
        print(to_json(v));
      } else {
        std::cout << to_string(v) << '\n';
      }
    } else if (*dec_std) {
      const auto v = decompose_standard(parse_partition(lambda_text), m, k);
      if (as_json) {
        print(to_json(v));
      } else {
        std::cout << to_string(v) << '\n';
      }
    } else if (*dim_table) {
      const PaddedShape shape(parse_partition(mu_text));
      const auto table = max_residue < 0 ? irreducible_dimension_table(shape)
                                         : irreducible_dimension_table(shape, max_residue);
      if (as_json) {
        json j = to_json(table);
        j["mu"] = partition_to_json(shape.tail());
        print(j);
      } else {
        std::cout << to_string(table);
        if (!table.beyond_range_generic) {
          std::cerr << "warning: residue " << table.max_residue + 1 << " is not generic; raise --max-residue\n";
        }
      }
    } else if (*gram_rank) {
      const Partition lambda = parse_partition(lambda_text);
      require_prime(p);
      const auto rank = gram_rank_mod_p(lambda, p, oracle);
      if (!dump_path.empty()) {
        std::ofstream out(dump_path);
        if (!out) throw Error(ErrorKind::InvalidInput, "cannot write '" + dump_path + "'");
        write_matrix_dump(out, gram_matrix(lambda, oracle), p);
      }
      if (as_json) {
        print({{"partition", partition_to_json(lambda)}, {"p", p}, {"rank", rank}});
      } else {
        std::cout << rank << '\n';
      }
    } else if (*verify) {
      std::vector<Partition> mus;
      for (const auto& text : mu_list) mus.push_back(parse_partition(text));
      for (auto q : p_list) require_prime(q);
      if (n_max > oracle.size_cap) {
        throw Error(ErrorKind::TooLarge, "--n-max " + std::to_string(n_max) + " exceeds the oracle size cap " +
                                             std::to_string(oracle.size_cap));
      }
      VerificationOptions vopts;
      vopts.oracle = oracle;
      vopts.threads = threads;
      const auto report = run_verification(mus, p_list, n_min, n_max, vopts);
      if (as_json) {
        print(to_json(report));
      } else {
        for (const auto& r : report.grid) std::cout << record_text(r) << '\n';
        const auto& s = report.summary;
        std::cout << "records " << s.records << ", in regime " << s.in_regime << ", matches " << s.matches
                  << ", mismatches " << s.mismatches << ", decisive " << s.conjecture_records
                  << ", decisive mismatches " << s.conjecture_mismatches << ", errors " << s.errors << '\n';
      }
      if (report.conjecture_violated()) return kExitMismatch;
    } else if (*prime_seq) {
      const auto q = parse_integer_polynomial(coeff_text);
      if (p_min_text.empty() || p_min_text.find_first_not_of("0123456789") != std::string::npos) {
        throw Error(ErrorKind::InvalidInput, "--p-min must be a nonnegative integer");
      }
      const auto pairs = prime_parameter_sequence(q, count, BigInt(p_min_text), search);
      if (as_json) {
        print(to_json(pairs));
      } else {
        std::string line;
        for (const auto& pr : pairs) {
          if (!line.empty()) line += ' ';
          line += "(" + pr.t.str() + "," + pr.p.str() + ")";
        }
        std::cout << line << '\n';
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_limit(e.kind()) ? kExitLimit : kExitInvalid;
  }
  return 0;
}
