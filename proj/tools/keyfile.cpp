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

#include "keyfile.hpp"

#include <algorithm>
#include <limits>

#include "reesse/numtheory.hpp"

namespace reesse::cli {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(Errc::kMalformed, what); }

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

std::vector<std::string_view> split_lines(std::string_view text) {
  auto lines = split(text, '\n');
  for (auto& l : lines) {
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

BigInt parse_big(std::string_view text) { return parse_decimal(text); }

std::uint64_t parse_u64(std::string_view text) {
  const BigInt v = parse_decimal(text);
  if (v > BigInt(static_cast<unsigned long>(std::numeric_limits<std::uint64_t>::max()))) malformed("value too large");
  return v.get_ui();
}

unsigned parse_unsigned(std::string_view text) {
  const std::uint64_t v = parse_u64(text);
  if (v > std::numeric_limits<unsigned>::max()) malformed("value too large");
  return static_cast<unsigned>(v);
}

template <typename T, typename F>
std::string join(const std::vector<T>& values, F&& format) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += format(values[i]);
  }
  return out;
}

std::string join_big(const std::vector<BigInt>& values) { return join(values, to_decimal); }

std::string join_u64(const std::vector<std::uint64_t>& values) {
  return join(values, [](std::uint64_t v) { return std::to_string(v); });
}

std::vector<BigInt> parse_big_list(std::string_view text) {
  std::vector<BigInt> out;
  for (auto part : split(text, ',')) out.push_back(parse_big(part));
  return out;
}

std::vector<std::uint64_t> parse_u64_list(std::string_view text) {
  std::vector<std::uint64_t> out;
  for (auto part : split(text, ',')) out.push_back(parse_u64(part));
  return out;
}

std::pair<std::string_view, std::string_view> split_power(std::string_view item) {
  const auto pos = item.find('^');
  if (pos == std::string_view::npos) malformed("expected p^e, got '" + std::string(item) + "'");
  return {item.substr(0, pos), item.substr(pos + 1)};
}

std::vector<PrimePower> parse_factors(std::string_view text) {
  std::vector<PrimePower> out;
  for (auto item : split(text, ',')) {
    auto [p, e] = split_power(item);
    out.push_back({parse_big(p), parse_unsigned(e)});
  }
  return out;
}

std::vector<SmoothFactor> parse_smooth(std::string_view text) {
  std::vector<SmoothFactor> out;
  if (text.empty()) return out;
  for (auto item : split(text, ',')) {
    auto [p, e] = split_power(item);
    out.push_back({parse_u64(p), parse_unsigned(e)});
  }
  return out;
}

Profile parse_profile_field(std::string_view text) {
  try {
    return parse_profile(text);
  } catch (const Error&) {
    malformed("unknown profile '" + std::string(text) + "'");
  }
}

void put_public_fields(KeyValueFile& f, const PublicKey& pub, Profile profile) {
  f.set("n", std::to_string(pub.n));
  f.set("profile", std::string(to_string(profile)));
  f.set("M", to_decimal(pub.M));
  f.set("S", to_decimal(pub.S));
  f.set("T", to_decimal(pub.T));
  f.set("alpha", to_decimal(pub.alpha));
  f.set("beta", to_decimal(pub.beta));
  f.set("C", join_big(pub.C));
  f.set("hash", std::string(kDigestHashName));
}

PublicKey read_public_fields(const KeyValueFile& f) {
  PublicKey pub;
  pub.n = parse_unsigned(f.get("n"));
  pub.M = parse_big(f.get("M"));
  pub.S = parse_big(f.get("S"));
  pub.T = parse_big(f.get("T"));
  pub.alpha = parse_big(f.get("alpha"));
  pub.beta = parse_big(f.get("beta"));
  pub.C = parse_big_list(f.get("C"));
  if (f.get("hash") != kDigestHashName) malformed("unsupported hash '" + f.get("hash") + "'");
  if (pub.n < 2 || pub.C.size() != pub.n) malformed("C must hold n values");
  if (pub.M < 3) malformed("M too small");
  for (const auto& c : pub.C) {
    if (c <= 0 || c >= pub.M) malformed("C values must lie in (0, M)");
  }
  if (pub.alpha <= 0 || pub.alpha >= pub.M || pub.beta <= 0 || pub.beta >= pub.M) malformed("alpha/beta out of range");
  return pub;
}

}  // namespace

KeyValueFile KeyValueFile::parse(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) malformed("empty file");
  KeyValueFile f{std::string(lines[0])};
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto line = lines[i];
    const auto eq = line.find('=');
    if (eq == std::string_view::npos || eq == 0) malformed("line " + std::to_string(i + 1) + ": expected name=value");
    std::string name(line.substr(0, eq));
    if (f.has(name)) malformed("duplicate field '" + name + "'");
    f.entries_.emplace_back(std::move(name), std::string(line.substr(eq + 1)));
  }
  return f;
}

void KeyValueFile::set(std::string name, std::string value) {
  for (auto& [k, v] : entries_) {
    if (k == name) {
      v = std::move(value);
      return;
    }
  }
  entries_.emplace_back(std::move(name), std::move(value));
}

bool KeyValueFile::has(std::string_view name) const {
  return std::any_of(entries_.begin(), entries_.end(), [&](const auto& e) { return e.first == name; });
}

const std::string& KeyValueFile::get(std::string_view name) const {
  for (const auto& [k, v] : entries_) {
    if (k == name) return v;
  }
  malformed("missing field '" + std::string(name) + "'");
}

void KeyValueFile::require_only(std::initializer_list<std::string_view> allowed) const {
  for (const auto& [k, v] : entries_) {
    if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) malformed("unexpected field '" + k + "'");
  }
}

std::string KeyValueFile::emit() const {
  std::string out = header_ + "\n";
  for (const auto& [k, v] : entries_) out += k + "=" + v + "\n";
  return out;
}

std::string emit_public(const PublicKey& pub, Profile profile) {
  KeyValueFile f{std::string(kPublicHeader)};
  put_public_fields(f, pub, profile);
  return f.emit();
}

PublicKey parse_public(std::string_view text) {
  const auto f = KeyValueFile::parse(text);
  if (f.header() != kPublicHeader) malformed("not a public key file");
  f.require_only({"n", "profile", "M", "S", "T", "alpha", "beta", "C", "hash"});
  parse_profile_field(f.get("profile"));
  return read_public_fields(f);
}

std::string emit_private(const KeyPair& keys, const SystemParams& params) {
  KeyValueFile f{std::string(kPrivateHeader)};
  put_public_fields(f, keys.pub, params.profile);
  const auto& priv = keys.priv;
  f.set("pool", std::to_string(params.pool_ceiling));
  f.set("A", join_u64(priv.A));
  f.set("L", join_u64(priv.lever.values));
  f.set("W", to_decimal(priv.W));
  f.set("delta", to_decimal(priv.delta));
  f.set("Dbar", to_decimal(priv.Dbar));
  f.set("dbar", to_decimal(priv.dbar));
  f.set("hbar", to_decimal(priv.hbar));
  f.set("mbar_factors", join(params.mbar.factors(), [](const PrimePower& pp) {
          return to_decimal(pp.prime) + "^" + std::to_string(pp.exponent);
        }));
  f.set("smooth", join(params.smooth_part, [](const SmoothFactor& sf) {
          return std::to_string(sf.prime) + "^" + std::to_string(sf.exponent);
        }));
  return f.emit();
}

LoadedPrivate parse_private(std::string_view text) {
  const auto f = KeyValueFile::parse(text);
  if (f.header() != kPrivateHeader) malformed("not a private key file");
  f.require_only({"n", "profile", "M", "S", "T", "alpha", "beta", "C", "hash", "pool", "A", "L", "W", "delta", "Dbar",
                  "dbar", "hbar", "mbar_factors", "smooth"});
  LoadedPrivate out;
  out.keys.pub = read_public_fields(f);
  const PublicKey& pub = out.keys.pub;

  SystemParams& params = out.params;
  params.n = pub.n;
  params.M = pub.M;
  params.S = pub.S;
  params.T = pub.T;
  params.dbar = parse_big(f.get("dbar"));
  params.Dbar = parse_big(f.get("Dbar"));
  params.profile = parse_profile_field(f.get("profile"));
  params.pool_ceiling = parse_u64(f.get("pool"));
  params.smooth_part = parse_smooth(f.get("smooth"));
  try {
    params.mbar = FactoredInteger::from_factors(parse_factors(f.get("mbar_factors")));
  } catch (const Error& e) {
    if (e.code() == Errc::kMalformed) throw;
    malformed(std::string("mbar_factors: ") + e.what());
  }

  PrivateKey& priv = out.keys.priv;
  priv.A = parse_u64_list(f.get("A"));
  priv.lever.values = parse_u64_list(f.get("L"));
  priv.W = parse_big(f.get("W"));
  priv.delta = parse_big(f.get("delta"));
  priv.Dbar = params.Dbar;
  priv.dbar = params.dbar;
  priv.hbar = parse_big(f.get("hbar"));
  if (priv.A.size() != pub.n || priv.lever.size() != pub.n) malformed("A and L must hold n values");

  try {
    if (auto r = validate_params(params); !r) malformed("parameters fail check: " + r.failed_check);
    complete_private_key(priv, params);
    if (auto r = validate_keypair(pub, priv, params); !r) malformed("key pair fails check: " + r.failed_check);
  } catch (const Error& e) {
    if (e.code() == Errc::kMalformed) throw;
    malformed(std::string("inconsistent private key: ") + e.what());
  }
  return out;
}

std::string emit_slack(const SlackKey& key, bool with_truth) {
  KeyValueFile f{std::string(kSlackHeader)};
  f.set("n", std::to_string(key.pub.n()));
  f.set("M", to_decimal(key.pub.M));
  f.set("pool", std::to_string(key.pub.pool_ceiling));
  f.set("C", join_big(key.pub.C));
  if (with_truth) {
    f.set("A", join_u64(key.A));
    f.set("L", join_u64(key.lever));
    f.set("W", to_decimal(key.W));
  }
  return f.emit();
}

SlackPublic parse_slack_public(std::string_view text) {
  const auto f = KeyValueFile::parse(text);
  SlackPublic out;
  if (f.header() == kPublicHeader) {
    const PublicKey pub = parse_public(text);
    out.C = pub.C;
    out.M = pub.M;
    return out;
  }
  if (f.header() != kSlackHeader) malformed("not a slack or public key file");
  f.require_only({"n", "M", "pool", "C", "A", "L", "W"});
  const unsigned n = parse_unsigned(f.get("n"));
  out.M = parse_big(f.get("M"));
  out.pool_ceiling = parse_u64(f.get("pool"));
  out.C = parse_big_list(f.get("C"));
  if (n < 2 || out.C.size() != n) malformed("C must hold n >= 2 values");
  if (out.M < 3 || !is_probable_prime(out.M)) malformed("M must be prime");
  if (out.pool_ceiling < 2) malformed("pool ceiling must be at least 2");
  for (const auto& c : out.C) {
    if (c <= 0 || c >= out.M) malformed("C values must lie in (0, M)");
  }
  return out;
}

std::string emit_ciphertext(const Ciphertext& ct) { return to_decimal(ct.gbar) + "\n"; }

Ciphertext parse_ciphertext(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.size() != 1) malformed("ciphertext must be a single decimal line");
  return Ciphertext{parse_big(lines[0])};
}

std::string emit_signature(const Signature& sig) { return to_decimal(sig.Q) + "\n" + to_decimal(sig.U) + "\n"; }

Signature parse_signature(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.size() != 2) malformed("signature must be two decimal lines");
  return Signature{parse_big(lines[0]), parse_big(lines[1])};
}

}  // namespace reesse::cli
