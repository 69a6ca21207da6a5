#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "shelf/homology.hpp"
#include "shelf/regular_embedding.hpp"
#include "shelf/search.hpp"

namespace shelf::cli {

/// Exit status contract shared by all subcommands.
enum ExitCode : int {
  kOk = 0,          // success, or a certificate
  kWitness = 1,     // mathematical falsification, with a witness
  kPartial = 2,     // budget exhausted, result incomplete
  kInputError = 3,  // malformed input, unknown subcommand or fixture
};

/// Runs the command line `args` (args[0] is the program name). Documents go
/// to `out` unless a path is given; diagnostics go to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

// Report renderings, deterministic for equal inputs. Timing is only
// included on request since it varies run to run.

std::string search_report(const SearchReport &r, bool with_timing = false);

std::string homology_report(const ChainSpec &spec, const std::vector<HomologyGroup> &groups);

struct EmbeddingChecks {
  bool distributive_checked = true;
  bool distributive = false;
  bool homomorphism = false;
  bool injective = false;
  bool inverse_images = false;

  bool all() const {
    return (!distributive_checked || distributive) && homomorphism && injective && inverse_images;
  }
};

EmbeddingChecks check_embedding(const RegularEmbedding &e, bool check_distributive = true);

std::string embedding_manifest(const RegularEmbedding &e, const EmbeddingChecks &checks,
                               const std::vector<std::string> &files);

} // namespace shelf::cli
