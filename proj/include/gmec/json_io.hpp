#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "gmec/state.hpp"

namespace gmec {

// State file schema: density matrices as
//   {"dims":[...],"matrix_re":[[...]],"matrix_im":[[...]]}
// (row-major, real and imaginary parts as rectangular arrays) and pure
// states as {"dims":[...],"amp_re":[...],"amp_im":[...]}.

nlohmann::json to_json(const DensityMatrix& rho);
nlohmann::json to_json(const PureState& psi);

// Either representation, validated on load.
struct LoadedState {
  std::optional<PureState> pure;
  std::optional<DensityMatrix> density;

  // the density view, forming |psi><psi| when the file held a pure state
  DensityMatrix as_density() const;
};

LoadedState state_from_json(const nlohmann::json& j);

LoadedState load_state(const std::string& path);
void save_state(const std::string& path, const DensityMatrix& rho);
void save_state(const std::string& path, const PureState& psi);

// 64-bit FNV-1a digest of a file's bytes, as fixed-width hex.
std::string file_digest(const std::string& path);

}  // namespace gmec
