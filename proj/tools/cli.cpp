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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>

#include "keyfile.hpp"
#include "reesse/attacks.hpp"
#include "reesse/cipher.hpp"
#include "reesse/keygen.hpp"
#include "reesse/lever.hpp"
#include "reesse/sigver.hpp"

namespace reesse::cli {

namespace {

// Bad command-line values that pass CLI11's own checks.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kMalformed, "cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << content)) throw Error(Errc::kMalformed, "cannot write " + path);
}

std::string bits_to_string(const BitString& bits) {
  std::string s;
  s.reserve(bits.size());
  for (auto b : bits) s += b ? '1' : '0';
  return s;
}

// An explicit 0/1 string of length n, else the first n bits of a file.
BitString read_plaintext(const std::string& arg, unsigned n) {
  if (arg.size() == n && std::all_of(arg.begin(), arg.end(), [](char c) { return c == '0' || c == '1'; })) {
    BitString bits(n);
    for (unsigned i = 0; i < n; ++i) bits[i] = arg[i] == '1';
    return bits;
  }
  if (!std::filesystem::is_regular_file(arg)) {
    throw UsageError("--in must be a " + std::to_string(n) + "-bit string of 0/1 or a readable file");
  }
  const std::string data = read_file(arg);
  if (data.size() * 8 < n) throw Error(Errc::kBadLength, "input file holds fewer than " + std::to_string(n) + " bits");
  BitString bits(n);
  for (unsigned i = 0; i < n; ++i) bits[i] = (static_cast<unsigned char>(data[i / 8]) >> (7 - i % 8)) & 1;
  return bits;
}

template <typename T>
std::string join_spaced(const std::vector<T>& values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? " " : "") << values[i];
  return os.str();
}

std::vector<std::size_t> to_zero_based(const std::vector<std::size_t>& idx, const char* what) {
  std::vector<std::size_t> out;
  for (auto i : idx) {
    if (i == 0) throw UsageError(std::string(what) + " indices are 1-based");
    out.push_back(i - 1);
  }
  return out;
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::kMalformed:
      return kExitMalformed;
    case Errc::kNoDecode:
    case Errc::kSearchExhausted:
    case Errc::kPoolExhausted:
    case Errc::kNotCoprime:
    case Errc::kNotAUnit:
    case Errc::kNotResidue:
    case Errc::kIncompatible:
      return kExitFailure;
    default:
      return kExitUsage;
  }
}

struct Options {
  unsigned n = 0;
  std::string profile = "desk";
  std::uint64_t seed = 0;
  std::uint64_t pool = kDefaultPoolCeiling;
  std::string pub, priv, in, out, msg, sig;
  std::string kind = "simple";
  std::string mode = "constant";
  std::vector<std::size_t> x, y;
  std::uint64_t ceiling = 0;
  bool with_truth = false;
  bool example1 = false;
  std::size_t trials = 10, m = 2, h = 1;
  std::uint64_t logm = 0;
  std::uint64_t p = 0, tlp_y = 0;
};

int cmd_keygen(const Options& o, std::ostream& /*out*/, std::ostream& err) {
  Rng rng(o.seed);
  ParamOptions popts;
  popts.pool_ceiling = o.pool;
  const SystemParams params = generate_params(o.n, parse_profile(o.profile), rng, popts);
  const KeyPair keys = generate_keypair(params, rng);
  write_file(o.pub, emit_public(keys.pub, params.profile));
  write_file(o.priv, emit_private(keys, params));
  err << "keygen: n=" << params.n << " profile=" << to_string(params.profile)
      << " log2(M)=" << mpz_sizeinbase(params.M.get_mpz_t(), 2) << "\n";
  return kExitOk;
}

int cmd_encrypt(const Options& o, std::ostream& out, std::ostream& /*err*/) {
  const PublicKey pub = parse_public(read_file(o.pub));
  const Ciphertext ct = encrypt(pub, read_plaintext(o.in, pub.n));
  if (o.out.empty()) {
    out << emit_ciphertext(ct);
  } else {
    write_file(o.out, emit_ciphertext(ct));
  }
  return kExitOk;
}

int cmd_decrypt(const Options& o, std::ostream& out, std::ostream& /*err*/) {
  const LoadedPrivate key = parse_private(read_file(o.priv));
  const Ciphertext ct = parse_ciphertext(read_file(o.in));
  out << bits_to_string(decrypt(key.keys.priv, key.params, ct)) << "\n";
  return kExitOk;
}

int cmd_sign(const Options& o, std::ostream& out, std::ostream& /*err*/) {
  const LoadedPrivate key = parse_private(read_file(o.priv));
  const std::string msg = read_file(o.msg);
  Rng rng(o.seed);
  const Signature sig = sign(key.keys.priv, key.params, as_bytes(msg), rng);
  if (o.out.empty()) {
    out << emit_signature(sig);
  } else {
    write_file(o.out, emit_signature(sig));
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& /*err*/) {
  const PublicKey pub = parse_public(read_file(o.pub));
  const std::string msg = read_file(o.msg);
  const Signature sig = parse_signature(read_file(o.sig));
  const bool ok = verify(pub, as_bytes(msg), sig);
  out << (ok ? "accept" : "reject") << "\n";
  return ok ? kExitOk : kExitReject;
}

int cmd_omega(const Options& o, std::ostream& out, std::ostream& /*err*/) {
  const OmegaSet omega = o.kind == "simple" ? omega_simple(o.n) : omega_sumfree(o.n);
  for (auto e : omega.elements) out << e << "\n";
  return kExitOk;
}

int cmd_cf_constant(const Options& o, std::ostream& out, std::ostream& err) {
  const SlackPublic pub = parse_slack_public(read_file(o.pub));
  const ConstantLeverResult r = cf_attack_constant_lever(pub);
  if (!r.recovered) {
    err << "cf-constant: no consistent A_n candidate (" << r.candidates_tried << " tried)\n";
    for (std::size_t x = 0; x < r.denominators.size(); ++x) {
      err << "  x=" << x + 1 << " denominators:";
      for (const auto& d : r.denominators[x]) err << " " << d;
      err << "\n";
    }
    return kExitFailure;
  }
  out << "A=" << join_spaced(r.A) << "\n";
  out << "Wk=" << r.wk << "\n";
  return kExitOk;
}

int cmd_cf_probe(const Options& o, std::ostream& out, std::ostream& err) {
  const SlackPublic pub = parse_slack_public(read_file(o.pub));
  const auto x = to_zero_based(o.x, "--x");
  const auto y = to_zero_based(o.y, "--y");
  const std::uint64_t ceiling = o.ceiling ? o.ceiling : pub.pool_ceiling;
  const CFProbeResult r = cf_probe(pub, x, y, ceiling);
  err << "gz=" << r.gz << "\n";
  for (const auto& c : r.candidates) out << c.L << "\t" << c.Ay << "\t" << bound_label(c.bounds) << "\n";
  return kExitOk;
}

int cmd_slack_key(const Options& o, std::ostream& /*out*/, std::ostream& /*err*/) {
  SlackKey key;
  if (o.example1) {
    key = example1_slack_key();
  } else {
    if (o.n < 2) throw UsageError("--n must be at least 2");
    Rng rng(o.seed);
    key = make_slack_key(o.n, parse_lever_mode(o.mode), rng, o.pool);
  }
  write_file(o.pub, emit_slack(key, o.with_truth));
  return kExitOk;
}

int cmd_probe_stats(const Options& o, std::ostream& out, std::ostream& /*err*/) {
  Rng rng(o.seed);
  const ProbeStatistics s = probe_statistics(o.n, o.trials, o.m, o.h, rng, o.pool);
  out << "trials\t" << s.trials << "\n"
      << "probes\t" << s.probes << "\n"
      << "equal_sum_skipped\t" << s.equal_sum_skipped << "\n"
      << "hits4\t" << s.hits4 << "\n"
      << "hits4p\t" << s.hits4p << "\n"
      << "hits4pp\t" << s.hits4pp << "\n"
      << "true_hits\t" << s.true_hits << "\n";
  return kExitOk;
}

// Two decimals, truncated toward zero.
int cmd_density(const Options& o, std::ostream& out, std::ostream& /*err*/) {
  const mpq_class d = assp_density(o.n, o.logm);
  BigInt hundredths;
  mpz_tdiv_q(hundredths.get_mpz_t(), BigInt(d.get_num() * 100).get_mpz_t(), d.get_den().get_mpz_t());
  const BigInt whole = hundredths / 100;
  const BigInt frac = hundredths % 100;
  out << whole << "." << (frac < 10 ? "0" : "") << frac << "\n";
  return kExitOk;
}

int cmd_tlp_image(const Options& o, std::ostream& out, std::ostream& /*err*/) {
  out << join_spaced(tlp_image(o.p)) << "\n";
  return kExitOk;
}

int cmd_tlp_solve(const Options& o, std::ostream& out, std::ostream& /*err*/) {
  out << join_spaced(tlp_brute(o.tlp_y, o.p)) << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"REESSE1+ public-key toolkit", "reesse"};
  app.require_subcommand(1);

  auto* keygen = app.add_subcommand("keygen", "Generate a key pair");
  keygen->add_option("--n", o.n, "Block length (even)")->required();
  keygen->add_option("--profile", o.profile, "Parameter profile")->check(CLI::IsMember({"strict", "desk"}));
  keygen->add_option("--seed", o.seed, "RNG seed")->required();
  keygen->add_option("--pool", o.pool, "Largest admissible A_i");
  keygen->add_option("--out-pub", o.pub, "Public key path")->required();
  keygen->add_option("--out-priv", o.priv, "Private key path")->required();

  auto* enc = app.add_subcommand("encrypt", "Encrypt one n-bit block");
  enc->add_option("--pub", o.pub)->required();
  enc->add_option("--in", o.in, "Bit string or file")->required();
  enc->add_option("--out", o.out, "Ciphertext path (stdout if omitted)");

  auto* dec = app.add_subcommand("decrypt", "Decrypt a ciphertext file");
  dec->add_option("--priv", o.priv)->required();
  dec->add_option("--in", o.in)->required();

  auto* sgn = app.add_subcommand("sign", "Sign a message file");
  sgn->add_option("--priv", o.priv)->required();
  sgn->add_option("--msg", o.msg)->required();
  sgn->add_option("--seed", o.seed)->required();
  sgn->add_option("--out", o.out, "Signature path (stdout if omitted)");

  auto* ver = app.add_subcommand("verify", "Verify a signature (exit 0 accept, 1 reject)");
  ver->add_option("--pub", o.pub)->required();
  ver->add_option("--msg", o.msg)->required();
  ver->add_option("--sig", o.sig)->required();

  auto* omega = app.add_subcommand("omega", "Print a lever codomain, one value per line");
  omega->add_option("--n", o.n)->required();
  omega->add_option("--kind", o.kind)->check(CLI::IsMember({"simple", "sumfree"}));

  auto* attack = app.add_subcommand("attack", "Cryptanalysis workbench");
  attack->require_subcommand(1);
  auto* cfc = attack->add_subcommand("cf-constant", "Constant-lever continued-fraction recovery");
  cfc->add_option("--pub", o.pub)->required();
  auto* cfp = attack->add_subcommand("cf-probe", "Continued-fraction probe; rows L<TAB>Ay<TAB>bounds");
  cfp->add_option("--pub", o.pub)->required();
  cfp->add_option("--x", o.x, "1-based indices, comma-separated")->required()->delimiter(',');
  cfp->add_option("--y", o.y, "1-based indices, comma-separated")->required()->delimiter(',');
  cfp->add_option("--ceiling", o.ceiling, "Pool ceiling (defaults to the key's)");
  auto* slack = attack->add_subcommand("slack-key", "Write a slack-transform key");
  slack->add_option("--n", o.n);
  slack->add_option("--mode", o.mode)->check(CLI::IsMember({"constant", "injective"}));
  slack->add_option("--seed", o.seed);
  slack->add_option("--pool", o.pool);
  slack->add_option("--out-pub", o.pub)->required();
  slack->add_flag("--with-truth", o.with_truth, "Also write A, L and W");
  slack->add_flag("--example1", o.example1, "Write the six-element worked example");
  auto* stats = attack->add_subcommand("probe-stats", "Monte-Carlo frequency of probe candidates");
  stats->add_option("--n", o.n)->required();
  stats->add_option("--trials", o.trials);
  stats->add_option("--x-count", o.m, "Size m of the x tuple");
  stats->add_option("--y-count", o.h, "Size h of the y tuple");
  stats->add_option("--seed", o.seed);
  stats->add_option("--pool", o.pool);

  auto* density = app.add_subcommand("density", "Compact-sequence density n^2 / log M");
  density->add_option("--n", o.n)->required();
  density->add_option("--logm", o.logm)->required()->check(CLI::PositiveNumber);

  auto* tlp = app.add_subcommand("tlp", "Transcendental logarithm tables");
  tlp->require_subcommand(1);
  auto* image = tlp->add_subcommand("image", "Image of x -> x^x mod p");
  image->add_option("--p", o.p)->required();
  auto* solve = tlp->add_subcommand("solve", "All x with x^x = y mod p");
  solve->add_option("--y", o.tlp_y)->required();
  solve->add_option("--p", o.p)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (keygen->parsed()) return cmd_keygen(o, out, err);
    if (enc->parsed()) return cmd_encrypt(o, out, err);
    if (dec->parsed()) return cmd_decrypt(o, out, err);
    if (sgn->parsed()) return cmd_sign(o, out, err);
    if (ver->parsed()) return cmd_verify(o, out, err);
    if (omega->parsed()) return cmd_omega(o, out, err);
    if (cfc->parsed()) return cmd_cf_constant(o, out, err);
    if (cfp->parsed()) return cmd_cf_probe(o, out, err);
    if (slack->parsed()) return cmd_slack_key(o, out, err);
    if (stats->parsed()) return cmd_probe_stats(o, out, err);
    if (density->parsed()) return cmd_density(o, out, err);
    if (image->parsed()) return cmd_tlp_image(o, out, err);
    if (solve->parsed()) return cmd_tlp_solve(o, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace reesse::cli
