#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "cantor/radix.hpp"

namespace cantor::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Exit status: 0 on
/// success or PASS, 1 when a check fails, 2 on usage or input errors.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

struct StaircaseRow {
  BigRational psi;
  BigRational phi;
};

inline constexpr std::uint64_t kMaxStaircasePoints = 1'000'000;

/// (ψ(p), φ(p)) for every p ∈ C_level in lex order.
std::vector<StaircaseRow> emit_staircase(const RadixSystem& sys, std::size_t level);

/// CSV with header "psi,phi,psi_approx,phi_approx".
void write_staircase_csv(std::span<const StaircaseRow> rows, std::ostream& out);

}  // namespace cantor::cli
