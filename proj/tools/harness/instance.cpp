// Copyright 2026 The qasym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "qasym/harness/instance.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "qasym/errors.hpp"
#include "qasym/random.hpp"

namespace qasym::harness {

namespace {

[[noreturn]] void schema_error(const std::string& pointer, const std::string& what) {
  throw InputError("at " + (pointer.empty() ? std::string("/") : pointer) + ": " + what);
}

void reject_unknown_keys(const Json& j, const std::set<std::string>& allowed) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!allowed.contains(it.key())) schema_error("/" + it.key(), "unknown field");
  }
}

Operator square_operator(const Json& j, const std::string& pointer, Index dim) {
  Matrix m = matrix_from_json(j, pointer);
  if (m.rows() != m.cols()) {
    schema_error(pointer, "matrix must be square, got " + std::to_string(m.rows()) + "x" +
                              std::to_string(m.cols()));
  }
  if (m.rows() != dim) {
    throw DimensionMismatch("at " + pointer + ": matrix is " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + " but dim is " + std::to_string(dim));
  }
  return Operator(std::move(m));
}

std::vector<Operator> operator_list(const Json& j, const std::string& pointer, Index dim) {
  if (!j.is_array()) schema_error(pointer, "expected an array of matrices");
  std::vector<Operator> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(square_operator(j[i], pointer + "/" + std::to_string(i), dim));
  }
  return out;
}

Index read_dim(const Json& j) {
  const long long d = require_integer(require_field(j, "dim", ""), "/dim");
  if (d < 1 || d > 64) schema_error("/dim", "dim must lie in 1..64");
  return static_cast<Index>(d);
}

std::string picture_name(Picture p) {
  return p == Picture::heisenberg ? "heisenberg" : "schrodinger";
}

}  // namespace

std::string to_string(InstanceKind k) {
  switch (k) {
    case InstanceKind::channel:
      return "channel";
    case InstanceKind::generator:
      return "generator";
    case InstanceKind::pukanszky:
      return "pukanszky";
  }
  return "unknown";
}

void InstanceSpec::validate() const {
  switch (kind) {
    case InstanceKind::channel:
      if (dim < 1) throw InputError("channel: dim must be positive");
      if (kraus.empty() == !superoperator.has_value()) {
        throw InputError("channel: exactly one of kraus or superoperator must be given");
      }
      for (const auto& k : kraus) require_same_dim(dim, k.dim(), "channel kraus operator");
      if (superoperator) require_same_dim(dim, superoperator->dim(), "channel superoperator");
      break;
    case InstanceKind::generator:
      if (dim < 1) throw InputError("generator: dim must be positive");
      require_same_dim(dim, hamiltonian.dim(), "generator hamiltonian");
      for (const auto& l : jumps) require_same_dim(dim, l.dim(), "generator jump");
      generator_of(*this).validate();
      break;
    case InstanceKind::pukanszky:
      truncation.validate();
      require_same_dim(dim, truncation.dim(), "pukanszky dim");
      break;
  }
}

puk::TruncationConfig truncation_from_weights(int n, double lambda, const std::string& weights) {
  const std::string prefix = "geometric:";
  if (weights.rfind(prefix, 0) != 0) {
    throw InputError("weights must have the form geometric:<ratio>, got \"" + weights + "\"");
  }
  double ratio = 0.0;
  try {
    std::size_t used = 0;
    ratio = std::stod(weights.substr(prefix.size()), &used);
    if (used != weights.size() - prefix.size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw InputError("weights: cannot parse ratio in \"" + weights + "\"");
  }
  if (!(ratio > 0.0) || !std::isfinite(ratio)) throw InputError("weights: ratio must be positive");
  auto c = puk::TruncationConfig::geometric(n, lambda, ratio);
  c.validate();
  return c;
}

InstanceSpec instance_from_json(const Json& j) {
  if (!j.is_object()) schema_error("", "instance must be a JSON object");
  InstanceSpec s;
  const std::string kind = require_string(require_field(j, "kind", ""), "/kind");
  if (j.contains("seed")) s.seed = require_unsigned(j["seed"], "/seed");

  if (kind == "channel") {
    reject_unknown_keys(j, {"kind", "dim", "picture", "kraus", "superoperator", "seed"});
    s.kind = InstanceKind::channel;
    s.dim = read_dim(j);
    if (j.contains("picture")) {
      const std::string p = require_string(j["picture"], "/picture");
      if (p == "heisenberg") {
        s.picture = Picture::heisenberg;
      } else if (p == "schrodinger") {
        s.picture = Picture::schrodinger;
      } else {
        schema_error("/picture", "expected \"heisenberg\" or \"schrodinger\"");
      }
    }
    const bool has_kraus = j.contains("kraus");
    const bool has_super = j.contains("superoperator");
    if (has_kraus == has_super) {
      schema_error("", "channel needs exactly one of \"kraus\" or \"superoperator\"");
    }
    if (has_kraus) {
      s.kraus = operator_list(j["kraus"], "/kraus", s.dim);
      if (s.kraus.empty()) schema_error("/kraus", "at least one Kraus operator is required");
    } else {
      s.superoperator = Superoperator(
          square_operator(j["superoperator"], "/superoperator", s.dim * s.dim).matrix());
    }
  } else if (kind == "generator") {
    reject_unknown_keys(j, {"kind", "dim", "hamiltonian", "jumps", "seed"});
    s.kind = InstanceKind::generator;
    s.dim = read_dim(j);
    s.hamiltonian = square_operator(require_field(j, "hamiltonian", ""), "/hamiltonian", s.dim);
    if (j.contains("jumps")) s.jumps = operator_list(j["jumps"], "/jumps", s.dim);
  } else if (kind == "pukanszky") {
    reject_unknown_keys(j, {"kind", "dim", "n", "lambda", "weights", "seed"});
    s.kind = InstanceKind::pukanszky;
    const long long n = require_integer(require_field(j, "n", ""), "/n");
    if (n < 1 || n > 4) schema_error("/n", "n must lie in 1..4");
    const double lambda = number_from_json(require_field(j, "lambda", ""), "/lambda");
    if (!(lambda > 0.0) || !(lambda <= 0.5)) schema_error("/lambda", "lambda must lie in (0, 1/2]");
    if (!j.contains("weights") || j["weights"].is_string()) {
      if (j.contains("weights")) s.weights = j["weights"].get<std::string>();
      try {
        s.truncation = truncation_from_weights(static_cast<int>(n), lambda, s.weights);
      } catch (const InputError& e) {
        schema_error("/weights", e.what());
      }
    } else {
      const Json& w = j["weights"];
      s.weights = "explicit";
      s.truncation.n = static_cast<int>(n);
      s.truncation.lambda = lambda;
      for (const char* key : {"m", "n"}) {
        const std::string p = std::string("/weights/") + key;
        const Json& arr = require_field(w, key, "/weights");
        if (!arr.is_array()) schema_error(p, "expected an array of weights");
        auto& dst = std::string(key) == "m" ? s.truncation.m_weights : s.truncation.n_weights;
        for (std::size_t i = 0; i < arr.size(); ++i) {
          dst.push_back(number_from_json(arr[i], p + "/" + std::to_string(i)));
        }
      }
      try {
        s.truncation.validate();
      } catch (const InputError& e) {
        schema_error("/weights", e.what());
      }
    }
    s.dim = s.truncation.dim();
    if (j.contains("dim") && require_integer(j["dim"], "/dim") != s.dim) {
      throw DimensionMismatch("at /dim: pukanszky dim must equal 4^n = " + std::to_string(s.dim));
    }
  } else {
    schema_error("/kind", "expected \"channel\", \"generator\" or \"pukanszky\"");
  }
  s.validate();
  return s;
}

InstanceSpec parse_instance_text(std::string_view text, std::string_view origin) {
  const Json j = parse_json_text(text, origin);
  try {
    return instance_from_json(j);
  } catch (const DimensionMismatch& e) {
    throw DimensionMismatch(std::string(origin) + ": " + e.what());
  } catch (const InputError& e) {
    throw InputError(std::string(origin) + ": " + e.what());
  }
}

InstanceSpec parse_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path.string() + ": cannot open instance file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance_text(buf.str(), path.string());
}

Json instance_to_json(const InstanceSpec& s) {
  Json j;
  j["kind"] = to_string(s.kind);
  j["dim"] = s.dim;
  switch (s.kind) {
    case InstanceKind::channel:
      j["picture"] = picture_name(s.picture);
      if (s.superoperator) {
        j["superoperator"] = matrix_to_json(s.superoperator->matrix());
      } else {
        Json arr = Json::array();
        for (const auto& k : s.kraus) arr.push_back(matrix_to_json(k.matrix()));
        j["kraus"] = std::move(arr);
      }
      break;
    case InstanceKind::generator: {
      j["hamiltonian"] = matrix_to_json(s.hamiltonian.matrix());
      Json arr = Json::array();
      for (const auto& l : s.jumps) arr.push_back(matrix_to_json(l.matrix()));
      j["jumps"] = std::move(arr);
      break;
    }
    case InstanceKind::pukanszky:
      j["n"] = s.truncation.n;
      j["lambda"] = s.truncation.lambda;
      if (s.weights == "explicit") {
        Json w;
        w["m"] = s.truncation.m_weights;
        w["n"] = s.truncation.n_weights;
        j["weights"] = std::move(w);
      } else {
        j["weights"] = s.weights;
      }
      break;
  }
  if (s.seed) j["seed"] = *s.seed;
  return j;
}

Superoperator channel_superop(const InstanceSpec& s) {
  if (s.kind != InstanceKind::channel) throw InputError("instance is not a channel");
  if (s.superoperator) {
    return s.picture == Picture::heisenberg ? *s.superoperator : hs_adjoint(*s.superoperator);
  }
  // Heisenberg X -> sum K^* X K is the dual of rho -> sum K rho K^*, so either picture
  // names the same Kraus family.
  return superop_from_kraus(s.kraus, Picture::heisenberg);
}

GKLSGenerator generator_of(const InstanceSpec& s) {
  if (s.kind != InstanceKind::generator) throw InputError("instance is not a generator");
  return GKLSGenerator{s.hamiltonian, s.jumps};
}

InstanceSpec random_unital_channel(Index d, Index k, std::uint64_t seed) {
  if (d < 2 || k < 1) throw InputError("random_unital_channel: need d >= 2 and k >= 1");
  InstanceSpec s;
  s.kind = InstanceKind::channel;
  s.dim = d;
  s.kraus = random_unital_kraus(d, k, seed);
  s.seed = seed;
  return s;
}

InstanceSpec random_ucp(Index d, Index env, std::uint64_t seed) {
  if (d < 1 || env < 1) throw InputError("random_ucp: need d >= 1 and env >= 1");
  InstanceSpec s;
  s.kind = InstanceKind::channel;
  s.dim = d;
  s.kraus = random_stinespring_kraus(d, env, seed);
  s.seed = seed;
  return s;
}

InstanceSpec random_gkls_instance(Index d, Index jumps, std::uint64_t seed) {
  if (d < 1 || jumps < 0) throw InputError("random_gkls: need d >= 1 and jumps >= 0");
  const GKLSGenerator g = random_gkls(d, jumps, seed);
  InstanceSpec s;
  s.kind = InstanceKind::generator;
  s.dim = d;
  s.hamiltonian = g.hamiltonian;
  s.jumps = g.jumps;
  s.seed = seed;
  return s;
}

}  // namespace qasym::harness
