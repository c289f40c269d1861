// Copyright 2026 The reesse1plus Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Text file formats: a header line followed by name=value lines. Every parse
// error is reported as Errc::kMalformed.

#ifndef REESSE_TOOLS_KEYFILE_HPP_
#define REESSE_TOOLS_KEYFILE_HPP_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "reesse/attacks.hpp"
#include "reesse/cipher.hpp"
#include "reesse/keygen.hpp"
#include "reesse/sigver.hpp"

namespace reesse::cli {

inline constexpr std::string_view kPublicHeader = "REESSE1PLUS PUBLIC KEY v1";
inline constexpr std::string_view kPrivateHeader = "REESSE1PLUS PRIVATE KEY v1";
inline constexpr std::string_view kSlackHeader = "REESSE1PLUS SLACK KEY v1";

class KeyValueFile {
 public:
  explicit KeyValueFile(std::string header) : header_(std::move(header)) {}

  // Rejects a wrong header, lines without '=', empty names and duplicates.
  static KeyValueFile parse(std::string_view text);

  const std::string& header() const { return header_; }
  void set(std::string name, std::string value);
  bool has(std::string_view name) const;
  // Throws kMalformed when the field is absent.
  const std::string& get(std::string_view name) const;
  // Throws kMalformed for any field not in `allowed`.
  void require_only(std::initializer_list<std::string_view> allowed) const;

  std::string emit() const;

 private:
  std::string header_;
  std::vector<std::pair<std::string, std::string>> entries_;
};

struct LoadedPrivate {
  SystemParams params;
  KeyPair keys;
};

std::string emit_public(const PublicKey& pub, Profile profile);
PublicKey parse_public(std::string_view text);

std::string emit_private(const KeyPair& keys, const SystemParams& params);
// Rebuilds the parameters and private caches and rejects keys that fail
// validate_params or validate_keypair.
LoadedPrivate parse_private(std::string_view text);

// Ground-truth lines (A, L, W) are written only when `with_truth` is set.
std::string emit_slack(const SlackKey& key, bool with_truth);
// Accepts a slack key file or a public key file (its C and M).
SlackPublic parse_slack_public(std::string_view text);

std::string emit_ciphertext(const Ciphertext& ct);
Ciphertext parse_ciphertext(std::string_view text);

std::string emit_signature(const Signature& sig);
Signature parse_signature(std::string_view text);

}  // namespace reesse::cli

#endif  // REESSE_TOOLS_KEYFILE_HPP_
