#pragma once

// Exhaustive cross-module checks, shared by the CLI `verify` command and the
// acceptance tests.

#include <cstdint>
#include <string>
#include <vector>

namespace glcaps {

struct SuiteReport {
  std::string name;
  long long checked = 0;
  long long failed = 0;
  std::vector<std::string> failures;  // first few only
  double seconds = 0;

  bool passed() const { return failed == 0; }
};

struct VerifyOptions {
  std::vector<int> primes;  // characteristics to scan
  std::vector<int> ranks;   // values of n to scan
  int max_size = 8;         // bound on |lambda1| + |lambda2| where relevant
  int s_max = 3;            // bound on s1, s2 (s for the dagger scan)
  int max_rs = 7;           // bound on r + s
  int triples = 1000;       // random associativity triples
  std::uint64_t seed = 1;
};

// Full and reduced JSF agree for lambda1, lambda2 both p-cores.
SuiteReport verify_jsf_reduced(const VerifyOptions& opt);
// Support of the reduced JSF = weights reached by one arrow-pair reversal.
SuiteReport verify_arrow_pairs(const VerifyOptions& opt);
// preceq = preceq_oracle on all pairs in Lambda(s1, s2).
SuiteReport verify_preceq(const VerifyOptions& opt);
// Unitriangular 0/1 decomposition matrices, dagger duality and
// irreducible <=> capless <=> empty reduced JSF.
SuiteReport verify_structural(const VerifyOptions& opt);
// Identity (*) for ch V^{r,s} and the psi recursion.
SuiteReport verify_characters(const VerifyOptions& opt);
// Walled Brauer diagram counts, cellular and dimension identities,
// associativity and n-independence of decomposition numbers.
SuiteReport verify_brauer(const VerifyOptions& opt);

std::vector<std::string> suite_names();
// Throws std::invalid_argument for an unknown name.
SuiteReport run_suite(const std::string& name, const VerifyOptions& opt);

// Defaults matching the documented scan ranges of each suite.
VerifyOptions default_options(const std::string& suite);

}  // namespace glcaps
