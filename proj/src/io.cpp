#include "adem/io.hpp"

#include <fstream>
#include <sstream>

namespace adem {

ComplexFile parse_complex_file(std::istream& in) {
    ComplexFile file;
    std::string line;
    bool have_header = false;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag.empty()) continue;
        if (!have_header) {
            if (tag != "complex")
                throw ParseError("line " + std::to_string(lineno) +
                                 ": expected 'complex <name>'");
            std::string name;
            ls >> std::ws;
            std::getline(ls, name);
            if (name.empty())
                throw ParseError("line " + std::to_string(lineno) +
                                 ": complex name missing");
            file.name = name;
            have_header = true;
            continue;
        }
        if (tag != "simplex")
            throw ParseError("line " + std::to_string(lineno) +
                             ": expected 'simplex <v0> <v1> ...'");
        std::vector<int> verts;
        int v;
        while (ls >> v) verts.push_back(v);
        if (!ls.eof())
            throw ParseError("line " + std::to_string(lineno) +
                             ": vertex ids must be integers");
        if (verts.empty())
            throw ParseError("line " + std::to_string(lineno) + ": empty simplex");
        for (std::size_t k = 0; k < verts.size(); ++k) {
            if (verts[k] < 0)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": negative vertex id");
            if (k > 0 && verts[k - 1] >= verts[k])
                throw ParseError("line " + std::to_string(lineno) +
                                 ": vertices must be strictly increasing");
        }
        file.maximal_simplices.push_back(std::move(verts));
    }
    if (!have_header) throw ParseError("missing 'complex <name>' header");
    if (file.maximal_simplices.empty())
        throw ParseError("complex has no simplices");
    return file;
}

ComplexFile load_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    return parse_complex_file(in);
}

std::string serialize_complex_file(const ComplexFile& file) {
    std::ostringstream out;
    out << "complex " << file.name << "\n";
    for (const auto& s : file.maximal_simplices) {
        out << "simplex";
        for (int v : s) out << " " << v;
        out << "\n";
    }
    return out.str();
}

void save_complex_file(const ComplexFile& file, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open file for writing: " + path);
    out << serialize_complex_file(file);
}

SimplicialSet to_complex(const ComplexFile& file) {
    return SimplicialSet(file.name, file.maximal_simplices);
}

ComplexFile to_file(const SimplicialSet& K) {
    return ComplexFile{K.name(), K.maximal_simplices()};
}

}  // namespace adem
