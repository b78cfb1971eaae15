#include "sqp/corpus.hpp"

#include <fstream>
#include <sstream>

#include "sqp/errors.hpp"

namespace sqp {

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw InputError("cannot open corpus file " + file.string());
    std::vector<CorpusEntry> entries;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string name;
        if (!(fields >> name) || name.front() == '#') continue;
        int strands = 0;
        if (!(fields >> strands)) throw InputError(file.string() + ":" + std::to_string(line_no) + ": missing strand count");
        std::string rest;
        std::getline(fields, rest);
        try {
            entries.push_back({name, parse_band_word(rest, strands)});
        } catch (const InputError& e) {
            throw InputError(file.string() + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    return entries;
}

std::filesystem::path default_corpus_dir() {
#ifdef SQP_CORPUS_DIR
    return SQP_CORPUS_DIR;
#else
    return "data/corpus";
#endif
}

}  // namespace sqp
