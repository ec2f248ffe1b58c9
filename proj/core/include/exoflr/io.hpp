#pragma once

#include <string>
#include <vector>

#include "exoflr/montecarlo.hpp"
#include "exoflr/spectra.hpp"

namespace exoflr {

/// Dataset CSV layout:
///   line 1: `p,n`                   (literal column names)
///   line 2: `<p>,<n>`               (grid order, sample count)
///   n lines of p+1 comma-separated X values
///   n lines of p+1 comma-separated W values
///   1 line of n comma-separated Y values
/// Values are written with 17 significant digits, so a write/read round
/// trip is lossless.
Dataset read_dataset(const std::string& path);
void write_dataset(const Dataset& data, const std::string& path);

/// Sweep configuration: line-oriented `key = value` with one `[cell]` block
/// per cell; assignments before the first block set defaults. Keys: beta, n,
/// p, rho, nu_instr, sigma, h, alpha, nu_sobolev, gamma, test
/// (asymptotic|bootstrap), scheme (efron|mammen|rademacher|normal), B, reps,
/// seed. Unknown keys and malformed lines raise ParseError with the line
/// number.
std::vector<SweepCell> parse_sweep_config(const std::string& path);

}  // namespace exoflr
