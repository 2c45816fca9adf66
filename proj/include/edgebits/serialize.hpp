#pragma once

#include <string>

#include "edgebits/choi.hpp"
#include "edgebits/mps.hpp"

namespace edgebits {

// Binary MPS snapshot: versioned header, per-tensor shape plus row-major
// values, log-norm and canonical center.  Used to cache ground states
// between sweep runs.
void save_mps(const MatrixProductState& state, const std::string& path);
MatrixProductState load_mps(const std::string& path);

// ChoiState snapshots reuse the MPS format with the provenance text and
// purity bookkeeping prepended.
void save_choi(const ChoiState& rho, const std::string& path);
ChoiState load_choi(const std::string& path);

}  // namespace edgebits
