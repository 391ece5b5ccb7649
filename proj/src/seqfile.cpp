#include "eulerbt/seqfile.hpp"

#include <cctype>
#include <fstream>
#include <stdexcept>

namespace eulerbt {

std::vector<Rat> parse_sequence(std::istream& in) {
    std::vector<Rat> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::size_t begin = 0, end = line.size();
        while (begin < end && std::isspace(static_cast<unsigned char>(line[begin]))) ++begin;
        while (end > begin && std::isspace(static_cast<unsigned char>(line[end - 1]))) --end;
        if (begin == end) continue;
        try {
            out.push_back(Rat::parse(std::string_view(line).substr(begin, end - begin)));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("sequence line " + std::to_string(lineno) + ": " +
                                        e.what());
        }
    }
    return out;
}

std::vector<Rat> read_sequence_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open sequence file: " + path);
    return parse_sequence(in);
}

}  // namespace eulerbt
