#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tracelet/library.hpp"
#include "tracelet/simplicial.hpp"

namespace tracelet {

struct CheckBounds {
  int size = 6;            // vertices+edges per object
  int degree = 3;          // tracelet length / filtration degree
  int host_vertices = 3;   // concurrency hosts
  int host_edges = 2;
  int samples = 200;       // random spans
  std::uint64_t seed = 1;
};

struct CheckLine {
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string first_failure;  // empty when none
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckLine> lines;
  bool passed() const;
};

SuiteReport check_pushouts(const CheckBounds& b);
SuiteReport check_concurrency(const std::vector<NamedRule>& lib, const CheckBounds& b);
/// `d` replaces the face map in the identity checks (negative controls).
SuiteReport check_simplicial(const std::vector<NamedRule>& lib, const CheckBounds& b, const FaceMap& d = face);
SuiteReport check_normal_forms(const std::vector<NamedRule>& lib, const CheckBounds& b);
SuiteReport check_hopf(const std::vector<NamedRule>& lib, const CheckBounds& b);

/// Suites by name: pushouts, concurrency, simplicial, normalform, hopf, all.
std::vector<SuiteReport> run_suite(const std::string& name, const std::vector<NamedRule>& lib, const CheckBounds& b,
                                   const FaceMap& d = face);

/// Non-trivial rules of a named library.
std::vector<LinearRule> rules_of(const std::vector<NamedRule>& lib);
/// Multisets of at most `degree` length-one primitives T(r), r in `rules`.
std::vector<NormalForm> library_basis(const std::vector<LinearRule>& rules, int degree);

std::string to_text(const SuiteReport& r);

}  // namespace tracelet
