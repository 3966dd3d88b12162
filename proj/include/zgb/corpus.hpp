#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "zgb/io.hpp"

namespace zgb {

struct CorpusEntry {
    std::string name;
    std::string source;                 // ideal file text
    std::vector<std::string> expected;  // golden basis, may be empty
    std::string note;                   // transcription notes
};

std::span<const CorpusEntry> corpus();
const CorpusEntry* corpus_find(const std::string& name);

// Parsed view; throws if the name is unknown.
IdealSource corpus_load(const std::string& name);

// FNV-1a over every entry's name and source text; pinned by a test.
uint64_t corpus_checksum();

}  // namespace zgb
