#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "trilinear/tensor_io.hpp"

namespace trilinear {

struct AnalyzeOptions {
  std::uint32_t scan_prime = 101;
  std::set<std::string> skip;
};

/// Check names in dependency order. Every check needs main_assumption; the
/// smooth-cubic checks (base_points, schur, double_six, degeneracy_locus) also need
/// cubic_rank_gate to find no rank-1 slice; double_six needs schur and
/// degeneracy_locus needs cohomology.
const std::vector<std::string>& check_names();

struct AnalysisResult {
  Json report;
  int exit_code = 0;
};

/// Throws InputError for tensors that are not (3,3,4) or unknown skip names.
AnalysisResult analyze(const TriTensor& t, const AnalyzeOptions& options);

/// "35 - 16 = 19": projective tensors minus GL(U)×GL(W) modulo scalars.
Json moduli_count();

}  // namespace trilinear
