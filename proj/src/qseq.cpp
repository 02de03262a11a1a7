#include "qadic/qseq.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "qadic/errors.hpp"

namespace qadic {

QseqData read_qseq(std::istream& in, const std::string& name) {
    std::string header;
    if (!std::getline(in, header)) throw IoError(name + ": missing QSEQ header");
    std::istringstream hs(header);
    std::string magic;
    unsigned version = 0, alphabet = 0;
    std::size_t period = 0;
    if (!(hs >> magic >> version >> alphabet >> period) || magic != "QSEQ")
        throw IoError(name + ": malformed header \"" + header + "\"");
    std::string trailing;
    if (hs >> trailing) throw IoError(name + ": trailing tokens in header");
    if (version != 1) throw IoError(name + ": unsupported QSEQ version");
    if (alphabet != 2 && alphabet != 4) throw IoError(name + ": alphabet must be 2 or 4");
    if (period == 0) throw IoError(name + ": zero period");

    std::string body;
    if (!std::getline(in, body)) throw IoError(name + ": missing digit line");
    if (body.size() != period)
        throw IoError(name + ": expected " + std::to_string(period) + " digits, got " +
                      std::to_string(body.size()));

    QseqData data;
    data.alphabet = alphabet;
    data.digits.reserve(period);
    for (char ch : body) {
        if (ch < '0' || ch >= static_cast<char>('0' + alphabet))
            throw IoError(name + ": digit '" + std::string(1, ch) + "' outside alphabet " +
                          std::to_string(alphabet));
        data.digits.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    return data;
}

QseqData read_qseq_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError(path.string() + ": cannot open for reading");
    return read_qseq(in, path.string());
}

void write_qseq(std::ostream& out, unsigned alphabet, const std::vector<std::uint8_t>& digits) {
    out << "QSEQ 1 " << alphabet << ' ' << digits.size() << '\n';
    for (auto d : digits) out << static_cast<char>('0' + d);
    out << '\n';
}

void write_qseq_file(const std::filesystem::path& path, unsigned alphabet,
                     const std::vector<std::uint8_t>& digits) {
    std::ofstream out(path);
    if (!out) throw IoError(path.string() + ": cannot open for writing");
    write_qseq(out, alphabet, digits);
    out.flush();
    if (!out) throw IoError(path.string() + ": write failed");
}

} // namespace qadic
