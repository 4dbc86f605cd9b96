#include "gmec/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace gmec {

namespace {

std::vector<int> dims_from_json(const nlohmann::json& j) {
  if (!j.contains("dims") || !j["dims"].is_array())
    fail(Error::Kind::Parse, "state file is missing the dims array");
  return j["dims"].get<std::vector<int>>();
}

}  // namespace

nlohmann::json to_json(const DensityMatrix& rho) {
  const long d = rho.mat.rows();
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (long i = 0; i < d; ++i) {
    nlohmann::json row_re = nlohmann::json::array();
    nlohmann::json row_im = nlohmann::json::array();
    for (long j = 0; j < d; ++j) {
      row_re.push_back(rho.mat(i, j).real());
      row_im.push_back(rho.mat(i, j).imag());
    }
    re.push_back(std::move(row_re));
    im.push_back(std::move(row_im));
  }
  return {{"dims", rho.dims}, {"matrix_re", std::move(re)}, {"matrix_im", std::move(im)}};
}

nlohmann::json to_json(const PureState& psi) {
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (long i = 0; i < psi.amps.size(); ++i) {
    re.push_back(psi.amps(i).real());
    im.push_back(psi.amps(i).imag());
  }
  return {{"dims", psi.dims}, {"amp_re", std::move(re)}, {"amp_im", std::move(im)}};
}

DensityMatrix LoadedState::as_density() const {
  if (density) return *density;
  if (pure) return pure_to_density(*pure);
  fail(Error::Kind::Parse, "empty loaded state");
}

LoadedState state_from_json(const nlohmann::json& j) {
  const std::vector<int> dims = dims_from_json(j);
  const long d = total_dim(dims);
  LoadedState out;

  if (j.contains("amp_re")) {
    const auto re = j["amp_re"].get<std::vector<double>>();
    const auto im = j.value("amp_im", std::vector<double>(re.size(), 0.0));
    if (re.size() != im.size() || static_cast<long>(re.size()) != d)
      fail(Error::Kind::Parse, "amplitude arrays do not match dims");
    Vec amps(d);
    for (long i = 0; i < d; ++i) amps(i) = cplx(re[i], im[i]);
    out.pure = make_pure_state(dims, std::move(amps));
    return out;
  }

  if (j.contains("matrix_re")) {
    const auto re = j["matrix_re"].get<std::vector<std::vector<double>>>();
    auto im = re;
    if (j.contains("matrix_im")) im = j["matrix_im"].get<std::vector<std::vector<double>>>();
    else for (auto& row : im) row.assign(row.size(), 0.0);
    if (static_cast<long>(re.size()) != d || static_cast<long>(im.size()) != d)
      fail(Error::Kind::Parse, "matrix arrays do not match dims");
    Mat m(d, d);
    for (long i = 0; i < d; ++i) {
      if (static_cast<long>(re[i].size()) != d || static_cast<long>(im[i].size()) != d)
        fail(Error::Kind::Parse, "matrix rows do not match dims");
      for (long k = 0; k < d; ++k) m(i, k) = cplx(re[i][k], im[i][k]);
    }
    out.density = validate_density_matrix(m, dims);
    return out;
  }

  fail(Error::Kind::Parse, "state file holds neither amplitudes nor a matrix");
}

LoadedState load_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Error::Kind::Io, "cannot open state file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(Error::Kind::Parse, "invalid JSON in " + path + ": " + e.what());
  }
  return state_from_json(j);
}

namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) fail(Error::Kind::Io, "cannot write file: " + path);
  out << content;
  if (!out) fail(Error::Kind::Io, "write failed: " + path);
}

}  // namespace

void save_state(const std::string& path, const DensityMatrix& rho) {
  write_file(path, to_json(rho).dump() + "\n");
}

void save_state(const std::string& path, const PureState& psi) {
  write_file(path, to_json(psi).dump() + "\n");
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Error::Kind::Io, "cannot open file for digest: " + path);
  std::uint64_t h = 0xcbf29ce484222325ull;
  char c;
  while (in.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace gmec
