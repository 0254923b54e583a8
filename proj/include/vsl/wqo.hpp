#pragma once

// The embedding order on runs and constructive pumping.

#include "vsl/core.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace vsl {

enum class Anchor { TargetAnchored, SourceAnchored };

/// Step j of the smaller run is matched to step indices[j] of the larger one
/// (0-based). TargetAnchored: the last step of the smaller run sits on the last
/// step of the larger run. SourceAnchored: the first sits on the first.
struct RunEmbedding {
  std::vector<std::size_t> indices;
  Anchor anchor = Anchor::TargetAnchored;

  friend bool operator==(const RunEmbedding&, const RunEmbedding&) = default;
};

/// Same state and componentwise <=.
bool config_leq(const Configuration& a, const Configuration& b);

/// The lexicographically least embedding of small into large, or nullopt. The
/// empty run embeds iff its target (TargetAnchored) or source (SourceAnchored)
/// is dominated by that of large.
std::optional<RunEmbedding> find_embedding(const Run& small, const Run& large, Anchor anchor);

/// Checks an embedding against the definition.
bool is_embedding(const Run& small, const Run& large, const RunEmbedding& emb);

/// First pair (i, j), i < j, ordered by j then i, with runs[i] embedding into
/// runs[j]. Throws PrerequisiteViolated unless all sources (TargetAnchored) or
/// all targets (SourceAnchored) agree.
std::optional<std::pair<std::size_t, std::size_t>> find_domination(const std::vector<Run>& runs,
                                                                   Anchor anchor);

struct Amalgam {
  Run run;
  RunEmbedding embedding;  // base embeds into run
};

/// A run from src(base) ending at trg(base) + d1 + d2 where di = trg(ri) - trg(base),
/// built by splicing the unmatched blocks of r1 and r2 around the matched steps.
/// Both embeddings must be TargetAnchored. The result is replayed and checked.
Amalgam amalgamate(const Vass& vass, const Run& base, const Run& r1, const Run& r2,
                   const RunEmbedding& e1, const RunEmbedding& e2);

/// A run from src(base) ending at trg(base) + n (trg(larger) - trg(base)).
Run pump_run(const Vass& vass, const Run& base, const Run& larger, const RunEmbedding& emb,
             std::size_t n);

}  // namespace vsl
