#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "adem/simplex.hpp"

namespace adem {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// On-disk complex description: a name line followed by one line per maximal
// simplex, each a strictly increasing list of vertex ids.
//
//   complex <name>
//   simplex 0 1 2
//   simplex 1 2 3
struct ComplexFile {
    std::string name;
    std::vector<std::vector<int>> maximal_simplices;

    friend bool operator==(const ComplexFile&, const ComplexFile&) = default;
};

ComplexFile parse_complex_file(std::istream& in);
ComplexFile load_complex_file(const std::string& path);
std::string serialize_complex_file(const ComplexFile& file);
void save_complex_file(const ComplexFile& file, const std::string& path);

SimplicialSet to_complex(const ComplexFile& file);
ComplexFile to_file(const SimplicialSet& K);

}  // namespace adem
