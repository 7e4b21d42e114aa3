#include "littlewood/set_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace littlewood::setcore {

IntegerSet read_set(std::istream& in) {
    // Peek past whitespace to sniff the format.
    int c;
    while ((c = in.peek()) != EOF && std::isspace(c)) in.get();
    if (c == EOF) throw std::domain_error("read_set: empty input");

    std::vector<std::int64_t> values;
    if (c == '[') {
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw std::domain_error(std::string("read_set: bad JSON: ") + e.what());
        }
        if (!j.is_array()) throw std::domain_error("read_set: JSON input must be an array");
        for (const auto& v : j) {
            if (!v.is_number_integer()) {
                throw std::domain_error("read_set: JSON array must contain integers only");
            }
            values.push_back(v.get<std::int64_t>());
        }
    } else {
        std::string line;
        while (std::getline(in, line)) {
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            std::size_t pos = 0;
            const std::string token = line.substr(first);
            std::int64_t v;
            try {
                v = std::stoll(token, &pos);
            } catch (const std::exception&) {
                throw std::domain_error("read_set: not an integer: '" + token + "'");
            }
            const auto rest = token.find_first_not_of(" \t\r", pos);
            if (rest != std::string::npos) {
                throw std::domain_error("read_set: trailing junk on line: '" + token + "'");
            }
            values.push_back(v);
        }
    }
    if (values.empty()) throw std::domain_error("read_set: no integers found");
    return IntegerSet::from_values(std::move(values));
}

IntegerSet read_set_path(const std::string& path) {
    if (path == "-") return read_set(std::cin);
    std::ifstream in(path);
    if (!in) throw std::domain_error("read_set: cannot open '" + path + "'");
    return read_set(in);
}

void write_set(std::ostream& out, const IntegerSet& A) {
    for (const auto v : A) out << v << '\n';
}

}  // namespace littlewood::setcore
