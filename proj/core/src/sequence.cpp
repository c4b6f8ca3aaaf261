#include "delta/sequence.hpp"

#include <fstream>
#include <random>

#include "delta/errors.hpp"

namespace delta {

FiniteSequence::FiniteSequence(std::vector<Int> elems, std::string src)
    : elements(std::move(elems)), source(std::move(src)) {
    if (elements.empty()) throw MalformedInput("sequence must be nonempty");
    for (size_t i = 0; i + 1 < elements.size(); ++i)
        if (elements[i] >= elements[i + 1])
            throw MalformedInput("sequence must be strictly increasing");
}

FiniteSequence load_sequence_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open sequence file: " + path);
    std::vector<Int> elems;
    std::string line;
    while (std::getline(in, line)) {
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos || line[a] == '#') continue;
        size_t b = line.find_last_not_of(" \t\r");
        elems.emplace_back(line.substr(a, b - a + 1), 10);
    }
    return FiniteSequence(std::move(elems), path);
}

FiniteSequence generate_test_sequence(const std::string& kind, size_t length,
                                      unsigned long seed) {
    if (length < 1) throw MalformedQuery("length must be >= 1");
    std::mt19937_64 rng(seed);
    std::vector<Int> elems;
    Int cur(1 + long(rng() % 20));
    for (size_t k = 0; k < length; ++k) {
        elems.push_back(cur);
        if (kind == "lacunary") {
            cur = cur * Int(3) + Int(long(rng() % 7));
        } else if (kind == "poly") {
            cur += Int(long((k + 1) * (k + 1))) + Int(long(rng() % (10 * (k + 1))));
        } else if (kind == "mixed") {
            if (rng() % 2)
                cur = cur * Int(3) + Int(long(rng() % 5));
            else
                cur += Int(long((k + 2) * (k + 2))) + Int(long(rng() % 50));
        } else {
            throw MalformedQuery("unknown sequence kind '" + kind + "'");
        }
    }
    return FiniteSequence(std::move(elems),
                          kind + " seed=" + std::to_string(seed));
}

void save_sequence_file(const FiniteSequence& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw MalformedInput("cannot write sequence file: " + path);
    if (!s.source.empty()) out << "# " << s.source << "\n";
    for (const Int& n : s.elements) out << n.get_str() << "\n";
}

}  // namespace delta
