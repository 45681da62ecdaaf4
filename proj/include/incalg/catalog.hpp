#pragma once

#include <optional>
#include <string>
#include <vector>

#include "incalg/lattice.hpp"
#include "incalg/poset_io.hpp"

namespace incalg {

/// pentagon, b2, m3, hex6, p8, ul5 and an:<k> (the k-chain).
std::vector<std::string> example_names();
/// Throws Error for unknown names.
NamedPoset named_example(const std::string& name);

/// Lattices with 1..max_n elements, by size then canonical order.
std::vector<Lattice> lattices_up_to(std::size_t max_n);

/// Number of n-element lattice classes found by adding a bottom and a top to
/// every (n-2)-element poset and keeping those that become lattices.
std::size_t count_lattices_by_extension(std::size_t n);
/// Unlabeled rooted forests on n nodes (Euler transform of rooted trees).
std::size_t count_rooted_forests(std::size_t n);

struct SuiteResult {
  std::string suite;
  bool pass = true;
  std::size_t scanned = 0;
  std::string unit;  // what `scanned` counts
  std::optional<std::string> counterexample;
  std::string detail;
};

std::vector<std::string> suite_names();
/// Suite size at which the corresponding acceptance sweep runs.
std::size_t default_max_n(const std::string& suite);
/// Throws Error for unknown suites and SizeCapExceeded above the caps.
SuiteResult run_suite(const std::string& suite, std::size_t max_n, std::size_t workers = 1);
std::string format_suite(const SuiteResult& r);

}  // namespace incalg
