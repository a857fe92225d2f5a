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


#ifndef QASYM_HARNESS_INSTANCE_HPP
#define QASYM_HARNESS_INSTANCE_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qasym/harness/json_io.hpp"
#include "qasym/markov.hpp"
#include "qasym/operator.hpp"
#include "qasym/pukanszky.hpp"

namespace qasym::harness {

enum class InstanceKind { channel, generator, pukanszky };

std::string to_string(InstanceKind k);

/// One analysis input. Channels carry either Kraus operators or a superoperator matrix;
/// generators carry H and the jumps; Pukanszky instances carry the truncation config.
struct InstanceSpec {
  InstanceKind kind = InstanceKind::channel;
  Index dim = 0;
  Picture picture = Picture::heisenberg;
  std::vector<Operator> kraus;
  std::optional<Superoperator> superoperator;
  Operator hamiltonian;
  std::vector<Operator> jumps;
  puk::TruncationConfig truncation;
  /// Textual weights form, "geometric:<ratio>" or "explicit".
  std::string weights = "geometric:0.5";
  std::optional<std::uint64_t> seed;

  /// Throws InputError / DimensionMismatch.
  void validate() const;
};

InstanceSpec parse_instance(const std::filesystem::path& path);
InstanceSpec parse_instance_text(std::string_view text, std::string_view origin = "<input>");
InstanceSpec instance_from_json(const Json& j);
Json instance_to_json(const InstanceSpec& s);

/// Heisenberg-picture superoperator of a channel instance.
Superoperator channel_superop(const InstanceSpec& s);
GKLSGenerator generator_of(const InstanceSpec& s);

/// "geometric:<ratio>" -> m_k = n_k = ratio^k.
puk::TruncationConfig truncation_from_weights(int n, double lambda, const std::string& weights);

/// X -> sum_i p_i U_i^* X U_i with Haar U_i.
InstanceSpec random_unital_channel(Index d, Index k, std::uint64_t seed);
/// Induced by a Haar isometry C^d -> C^d (x) C^env.
InstanceSpec random_ucp(Index d, Index env, std::uint64_t seed);
InstanceSpec random_gkls_instance(Index d, Index jumps, std::uint64_t seed);

}  // namespace qasym::harness

#endif  // QASYM_HARNESS_INSTANCE_HPP
