#include "degpat/degree_pattern.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace degpat {

void DegreePattern::add(const BigInt& degree, std::uint64_t multiplicity) {
    if (degree < 1)
        throw std::invalid_argument("degrees must be >= 1");
    if (multiplicity < 1)
        throw std::invalid_argument("multiplicities must be >= 1");
    entries_[degree] += multiplicity;
    order_ += degree * degree * multiplicity;
    classes_ += multiplicity;
}

std::uint64_t DegreePattern::multiplicity_of(const BigInt& degree) const {
    auto it = entries_.find(degree);
    return it == entries_.end() ? 0 : it->second;
}

bool DegreePattern::contains_degree(const BigInt& degree) const {
    return entries_.count(degree) != 0;
}

std::vector<BigInt> DegreePattern::distinct_degrees() const {
    std::vector<BigInt> degrees;
    degrees.reserve(entries_.size());
    for (const auto& [d, m] : entries_)
        degrees.push_back(d);
    return degrees;
}

std::size_t DegreePattern::nontrivial_degree_count() const {
    std::size_t count = entries_.size();
    if (!entries_.empty() && entries_.begin()->first == 1)
        --count;
    return count;
}

const BigInt& DegreePattern::nth_smallest_nontrivial(std::size_t i) const {
    if (i == 0)
        throw std::out_of_range("nontrivial degree indices start at 1");
    auto it = entries_.begin();
    if (it != entries_.end() && it->first == 1)
        ++it;
    for (std::size_t seen = 1; it != entries_.end(); ++it, ++seen)
        if (seen == i)
            return it->first;
    std::ostringstream msg;
    msg << "pattern has only " << nontrivial_degree_count()
        << " nontrivial degrees, index " << i << " requested";
    throw std::out_of_range(msg.str());
}

void write_pattern(std::ostream& out, const DegreePattern& pattern,
                   const std::string& comment) {
    if (!comment.empty())
        out << "# " << comment << '\n';
    for (const auto& [degree, mult] : pattern.entries())
        out << degree << ' ' << mult << '\n';
}

DegreePattern read_pattern(std::istream& in) {
    DegreePattern pattern;
    BigInt previous = 0;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::string degree_text;
        if (!(fields >> degree_text))
            continue; // blank or comment-only line
        BigInt degree;
        std::uint64_t mult = 0;
        try {
            degree = BigInt(degree_text);
        } catch (const std::exception&) {
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": malformed degree '" + degree_text + "'");
        }
        if (!(fields >> mult))
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": missing multiplicity");
        std::string extra;
        if (fields >> extra)
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": trailing content '" + extra + "'");
        if (degree < 1)
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": degrees must be positive");
        if (mult < 1)
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": multiplicities must be positive");
        if (degree <= previous)
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": degrees must be strictly increasing");
        pattern.add(degree, mult);
        previous = degree;
    }
    return pattern;
}

void write_pattern_file(const std::string& path, const DegreePattern& pattern,
                        const std::string& comment) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out)
            throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        write_pattern(out, pattern, comment);
        if (!out)
            throw std::runtime_error("write failed for " + tmp.string());
    }
    fs::rename(tmp, target);
}

DegreePattern read_pattern_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return read_pattern(in);
}

} // namespace degpat
