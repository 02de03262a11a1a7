#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

namespace qadic {

// QSEQ text format:
//   line 1: "QSEQ 1 <alphabet> <period>"   (alphabet 2 or 4)
//   line 2: <period> digits, no separators, newline-terminated
struct QseqData {
    unsigned alphabet = 0;
    std::vector<std::uint8_t> digits;
};

QseqData read_qseq(std::istream& in, const std::string& name);
QseqData read_qseq_file(const std::filesystem::path& path);

void write_qseq(std::ostream& out, unsigned alphabet, const std::vector<std::uint8_t>& digits);
void write_qseq_file(const std::filesystem::path& path, unsigned alphabet,
                     const std::vector<std::uint8_t>& digits);

} // namespace qadic
