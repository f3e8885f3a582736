#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "firmchain/digest.hpp"
#include "firmchain/keys.hpp"
#include "firmchain/ledger.hpp"

#include <nlohmann/json_fwd.hpp>

namespace firmchain {

/// Inclusion proof: sibling hashes from leaf to root. `sibling_on_left`
/// records which side the sibling occupies at that level. Levels where the
/// node is promoted unpaired contribute no path element.
struct MerkleProof {
  struct Node {
    Digest sibling;
    bool sibling_on_left = false;
  };
  std::size_t leaf_index = 0;
  std::size_t leaf_count = 0;
  std::vector<Node> path;

  nlohmann::ordered_json to_json() const;
  static MerkleProof from_json(const nlohmann::json& j);
};

/// Binary hash tree over an ordered digest list. Parent = SHA-256(left ||
/// right); an odd node is promoted unchanged to the next level; a
/// single-leaf tree's root is the leaf itself.
class MerkleTree {
 public:
  static MerkleTree build(std::vector<Digest> leaves);  // throws ArgError on empty

  const Digest& root() const { return levels_.back().front(); }
  std::size_t leaf_count() const { return levels_.front().size(); }
  const std::vector<Digest>& leaves() const { return levels_.front(); }

  MerkleProof prove(std::size_t index) const;  // throws ArgError out of range

 private:
  MerkleTree() = default;
  std::vector<std::vector<Digest>> levels_;  // levels_[0] = leaves
};

/// True iff folding `leaf` along the proof path reproduces `root` bitwise.
bool verify_proof(const Digest& leaf, const MerkleProof& proof, const Digest& root);

/// Leaf-list persistence: one hex digest per line; the file is named by the
/// hex digest of its own contents (content addressing). Returns the path.
std::filesystem::path write_leaf_file(const std::vector<Digest>& leaves,
                                      const std::filesystem::path& dir);
std::vector<Digest> read_leaf_file(const std::filesystem::path& path);

/// Reserved registry id under which batch roots are anchored on chain.
inline constexpr const char* kAnchorFirmwareId = "merkle-root";

/// Anchors `root` via a registerVersioned transaction from `owner`, driving
/// the ledger (block production, finality) until the receipt is available.
Receipt anchor_root(Ledger& ledger, const Account& owner, const Address& contract,
                    const Digest& root);

}  // namespace firmchain
