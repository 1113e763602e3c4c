#include "hampath/family_file.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hampath {

namespace {

HamPath parse_order(std::vector<int> order, int n) {
    if (static_cast<int>(order.size()) != n) throw FamilyFormatError("path has wrong vertex count");
    std::vector<int> given = order;
    HamPath p{std::move(order)};
    if (p.order() != given) throw FamilyFormatError("path is not in canonical orientation");
    return p;
}

FamilyFile read_lines(std::istream& in) {
    FamilyFile f;
    std::string line;
    if (!std::getline(in, line)) throw FamilyFormatError("empty input");
    std::istringstream header(line);
    long m = 0;
    if (!(header >> f.n >> m) || f.n < 1 || m < 0) throw FamilyFormatError("bad header line");
    std::string trailing;
    if (header >> trailing) throw FamilyFormatError("bad header line");

    for (long i = 0; i < m; ++i) {
        if (!std::getline(in, line)) throw FamilyFormatError("fewer paths than the header promises");
        std::istringstream row(line);
        std::vector<int> order;
        int v;
        while (row >> v) order.push_back(v);
        try {
            f.paths.push_back(parse_order(std::move(order), f.n));
        } catch (const std::invalid_argument& e) {
            throw FamilyFormatError(std::string("bad path line: ") + e.what());
        }
    }
    while (std::getline(in, line))
        if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos)
            throw FamilyFormatError("more paths than the header promises");
    return f;
}

FamilyFile read_doc(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw FamilyFormatError(std::string("bad json document: ") + e.what());
    }
    FamilyFile f;
    try {
        f.n = j.at("n").get<int>();
        for (const auto& row : j.at("paths")) {
            std::vector<int> order = row.get<std::vector<int>>();
            f.paths.push_back(parse_order(std::move(order), f.n));
        }
        if (j.contains("metadata")) {
            const auto& meta = j["metadata"];
            f.predicate = meta.value("predicate", "");
            f.generator_version = meta.value("generator_version", "");
            f.construction = meta.value("construction", "");
        }
        if (j.contains("count") && j["count"].get<std::size_t>() != f.paths.size())
            throw FamilyFormatError("count field disagrees with the path list");
    } catch (const nlohmann::json::exception& e) {
        throw FamilyFormatError(std::string("bad json document: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw FamilyFormatError(std::string("bad path entry: ") + e.what());
    }
    return f;
}

}  // namespace

FamilyFile FamilyFile::read(std::istream& in) {
    // Sniff: a JSON document starts with '{'.
    int c = in.peek();
    while (c == ' ' || c == '\n' || c == '\t' || c == '\r') {
        in.get();
        c = in.peek();
    }
    if (c == '{') return read_doc(in);
    return read_lines(in);
}

FamilyFile FamilyFile::read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FamilyFormatError("cannot open " + path);
    return read(in);
}

void FamilyFile::write_lines(std::ostream& out) const {
    out << n << ' ' << paths.size() << '\n';
    for (const auto& p : paths) {
        for (int i = 0; i < p.n(); ++i) {
            if (i) out << ' ';
            out << p.order()[i];
        }
        out << '\n';
    }
}

void FamilyFile::write_doc(std::ostream& out) const {
    nlohmann::json j;
    j["n"] = n;
    j["count"] = paths.size();
    j["paths"] = nlohmann::json::array();
    for (const auto& p : paths) j["paths"].push_back(p.order());
    nlohmann::json meta = nlohmann::json::object();
    if (!predicate.empty()) meta["predicate"] = predicate;
    if (!generator_version.empty()) meta["generator_version"] = generator_version;
    if (!construction.empty()) meta["construction"] = construction;
    if (!meta.empty()) j["metadata"] = meta;
    out << j.dump(2) << '\n';
}

void FamilyFile::write_file(const std::string& path, const std::string& format) const {
    std::ofstream out(path);
    if (!out) throw FamilyFormatError("cannot open " + path + " for writing");
    if (format == "doc")
        write_doc(out);
    else if (format == "lines")
        write_lines(out);
    else
        throw FamilyFormatError("unknown format " + format);
}

}  // namespace hampath
