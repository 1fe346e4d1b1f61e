#include "linfx/json_io.hpp"

#include <fstream>

namespace linfx {

namespace {

[[noreturn]] void parse_fail(const std::string& why, ordered_json witness = {}) {
  throw Error("parse", why, std::move(witness));
}

}  // namespace

ordered_json to_json(const Instance& inst) {
  ordered_json j;
  j["kind"] = inst.kind;
  j["n"] = static_cast<int>(inst.rows.rows());
  j["N"] = static_cast<int>(inst.rows.cols());
  j["gamma"] = inst.gamma;
  ordered_json rows = ordered_json::array();
  for (Eigen::Index i = 0; i < inst.rows.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index k = 0; k < inst.rows.cols(); ++k) row.push_back(inst.rows(i, k));
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  if (inst.kind == "basis") j["sigma_prime"] = inst.sigma_prime;
  return j;
}

Instance instance_from_json(const ordered_json& j) {
  if (!j.is_object()) parse_fail("not-an-object");
  for (const char* key : {"kind", "n", "N", "rows"})
    if (!j.contains(key)) parse_fail("missing-field", {{"field", key}});

  Instance inst;
  inst.kind = j.at("kind").get<std::string>();
  if (inst.kind != "prop1" && inst.kind != "basis")
    parse_fail("unknown-kind", {{"kind", inst.kind}});

  const int n = j.at("n").get<int>();
  const int N = j.at("N").get<int>();
  if (n < 1 || N < 1) parse_fail("bad-shape", {{"n", n}, {"N", N}});
  inst.gamma = j.value("gamma", 0.0);

  const auto& rows = j.at("rows");
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    parse_fail("rows-shape-mismatch", {{"n", n}, {"rows", rows.size()}});
  inst.rows.resize(n, N);
  for (int i = 0; i < n; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || static_cast<int>(row.size()) != N)
      parse_fail("row-length-mismatch", {{"row", i}});
    for (int k = 0; k < N; ++k) {
      if (!row[k].is_number()) parse_fail("non-numeric-entry", {{"row", i}, {"col", k}});
      inst.rows(i, k) = row[k].get<double>();
    }
  }
  if (!inst.rows.allFinite()) parse_fail("nonfinite-entry");
  if (inst.kind == "prop1" && (inst.rows.array() < 0.0).any())
    parse_fail("negative-entry-in-prop1");

  if (j.contains("sigma_prime")) {
    for (const auto& v : j.at("sigma_prime")) {
      const int i = v.get<int>();
      if (i < 0 || i >= n) parse_fail("sigma-prime-out-of-range", {{"row", i}});
      inst.sigma_prime.push_back(i);
    }
  }
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot-open", {{"path", path}});
  ordered_json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    parse_fail("malformed-json", {{"path", path}, {"what", e.what()}});
  }
  return instance_from_json(j);
}

void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("io", "cannot-write", {{"path", path}});
  out << to_json(inst).dump(2) << '\n';
}

FrameMatrix to_frame(const Instance& inst) {
  if (inst.kind != "prop1")
    throw Error("parse", "kind-mismatch", {{"expected", "prop1"}, {"got", inst.kind}});
  return FrameMatrix(inst.rows, inst.gamma);
}

SignedBasisMatrix to_basis(const Instance& inst) {
  if (inst.kind != "basis")
    throw Error("parse", "kind-mismatch", {{"expected", "basis"}, {"got", inst.kind}});
  return SignedBasisMatrix(inst.rows, inst.sigma_prime, inst.gamma);
}

Instance from_frame(const FrameMatrix& frame) {
  Instance inst;
  inst.kind = "prop1";
  inst.gamma = frame.gamma;
  inst.rows = frame.a;
  return inst;
}

Instance from_basis(const SignedBasisMatrix& basis) {
  Instance inst;
  inst.kind = "basis";
  inst.gamma = basis.gamma;
  inst.rows = basis.a;
  inst.sigma_prime = basis.sigma_prime;
  return inst;
}

}  // namespace linfx
