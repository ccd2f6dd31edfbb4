#include "insdel/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace insdel {

WordFile read_word_file(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw std::invalid_argument("missing word-file header");
    int q = 0;
    long long n = -1;
    if (std::sscanf(header.c_str(), "q=%d n=%lld", &q, &n) != 2)
        throw std::invalid_argument("malformed header (want: q=<q> n=<n>)");
    WordFile file;
    file.q = q;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        Word w = Word::parse(line, q);
        if (static_cast<long long>(w.size()) != n)
            throw std::invalid_argument("word length disagrees with header n");
        file.words.push_back(std::move(w));
    }
    return file;
}

void write_word_file(std::ostream& out, const std::vector<Word>& words, int q) {
    if (words.empty()) throw std::invalid_argument("refusing to write an empty word file");
    out << "q=" << q << " n=" << words.front().size() << '\n';
    for (const Word& w : words) {
        if (w.size() != words.front().size())
            throw std::invalid_argument("word file requires uniform lengths");
        out << w.str() << '\n';
    }
}

Word read_single_word(std::istream& in) {
    WordFile file = read_word_file(in);
    if (file.words.size() != 1) throw std::invalid_argument("expected exactly one word in file");
    return file.words.front();
}

CodeBook read_codebook(std::istream& in) {
    WordFile file = read_word_file(in);
    return CodeBook(std::move(file.words));
}

void write_codebook(std::ostream& out, const CodeBook& code) {
    write_word_file(out, code.words(), code.q());
}

std::string slurp_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spill_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
    if (!out) throw std::runtime_error("write to " + path + " failed");
}

}  // namespace insdel
