#ifndef INSDEL_IO_HPP
#define INSDEL_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "insdel/word.hpp"

namespace insdel {

// Word-list text files: header line "q=<q> n=<n>", then one word per line
// (base-q digits for q <= 10, comma-separated symbols otherwise).  All words
// in one file share the header's length n.

struct WordFile {
    int q = 2;
    std::vector<Word> words;
};

WordFile read_word_file(std::istream& in);
void write_word_file(std::ostream& out, const std::vector<Word>& words, int q);

// Convenience wrappers: a single-word file and a codebook (>= 2 words).
Word read_single_word(std::istream& in);
CodeBook read_codebook(std::istream& in);
void write_codebook(std::ostream& out, const CodeBook& code);

// Whole-file helpers used by the CLI.
std::string slurp_file(const std::string& path);
void spill_file(const std::string& path, const std::string& content);

}  // namespace insdel

#endif
