#pragma once

#include "config.hpp"

namespace emlab::cli {

// Each scenario validates its configuration fully before touching the output
// directory, runs, and writes CSV files with the provenance header. Throws
// std::invalid_argument for validation problems (exit 1) and anything else
// for runtime failures (exit 2).
void run_propagate(const Config& cfg);
void run_majorana(const Config& cfg);
void run_dual(const Config& cfg);
void run_brackets(const Config& cfg);
void run_fock(const Config& cfg);
void run_clebsch(const Config& cfg);
void run_diag(const Config& cfg);

}  // namespace emlab::cli
