#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "sqp/braid.hpp"

namespace sqp {

struct CorpusEntry {
    std::string name;
    BandWord word{1};
};

// Lines "name strands b(i,j) ...". Blank lines and '#' comments are skipped.
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& file);

// Directory holding corpus.txt and expected/<name>.json, fixed at build time.
std::filesystem::path default_corpus_dir();

}  // namespace sqp
