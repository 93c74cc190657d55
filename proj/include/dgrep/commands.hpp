#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dgrep/ext.hpp"
#include "dgrep/halo.hpp"
#include "dgrep/representation.hpp"

namespace dgrep {

/// C2 = {1, s} acting trivially on E = {e0, e1}; V = K^2 with rho = chi(g) I and
/// lambda_(g,e_i) = chi(g) P_i, P0 = [[1,0],[0,0]], P1 = [[1,0],[1,0]], chi(s) = -1.
Representation nonsplit_example(Field f = {});
/// span{v2}, the stable line of nonsplit_example.
std::vector<Vector> nonsplit_example_w_basis(Field f = {});

/// Ext^1(Q, W) three ways: cocycles, derivations over A_D, invariant Ext^1 over B_E.
struct OracleComparison {
  Ext1Result cocycles;
  std::size_t derivation_dim = 0;
  CollapseReport collapse;
  bool agree = false;
};
OracleComparison compare_oracles(const Representation& q, const Representation& w);

struct Options {
  std::optional<Field> field;
  bool json = false;
  bool validate = true;
};

// Exit codes: 0 pass, 1 axiom failure or oracle disagreement, 2 unreadable input.
int cmd_check(const std::string& path, const Options& opt, std::ostream& out, std::ostream& err);
int cmd_ext1(const std::string& q_path, const std::string& w_path, const Options& opt, std::ostream& out,
             std::ostream& err);
int cmd_split(const std::string& ses_path, const Options& opt, std::ostream& out, std::ostream& err);
int cmd_collapse(const std::string& q_path, const std::string& w_path, const Options& opt, std::ostream& out,
                 std::ostream& err);
int cmd_probe(const std::vector<std::string>& paths, const Options& opt, std::ostream& out, std::ostream& err);
/// Writes digroup.json, V.json, W.json, Q.json and ses.json into out_dir.
int cmd_example(const std::string& name, const std::string& out_dir, const Options& opt, std::ostream& out,
                std::ostream& err);

struct GenerateSpec {
  std::uint64_t seed = 0;
  std::size_t group_order = 2;
  std::size_t halo_size = 2;
  std::size_t dim = 2;
  std::size_t count = 1;
  /// Empty: print a single representation to `out`. Otherwise a directory receiving
  /// digroup.json and rep0.json, rep1.json, ...
  std::string out_dir;
};

constexpr std::size_t kMaxGroupOrder = 6;
constexpr std::size_t kMaxHaloSize = 3;
constexpr std::size_t kMaxDim = 4;

int cmd_generate(const GenerateSpec& spec, const Options& opt, std::ostream& out, std::ostream& err);

}  // namespace dgrep
