#include "vcmax/io.hpp"

#include <fstream>
#include <sstream>

#include "vcmax/errors.hpp"

namespace vcmax {

namespace {

std::string trim(const std::string& s) {
    const std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInputError("cannot open file '" + path + "'");
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InvalidInputError("cannot write file '" + path + "'");
    return out;
}

}  // namespace

std::vector<Point> read_points(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::size_t k = 0;
    bool have_header = false;
    std::vector<Point> points;

    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (!have_header) {
            if (t.rfind("k=", 0) != 0) {
                throw ParseError("points file line " + std::to_string(line_no) +
                                 ": expected header 'k=<k>'");
            }
            try {
                k = std::stoul(t.substr(2));
            } catch (const std::logic_error&) {
                throw ParseError("points file: bad dimension in header");
            }
            if (k == 0) throw ParseError("points file: dimension must be at least 1");
            have_header = true;
            continue;
        }
        Point p;
        std::stringstream ss(t);
        std::string item;
        while (std::getline(ss, item, ',')) {
            const std::string v = trim(item);
            try {
                p.push_back(Rational::parse(v));
            } catch (const ParseError& e) {
                throw ParseError("points file line " + std::to_string(line_no) + ": " + e.what());
            }
        }
        if (p.size() != k) {
            throw ParseError("points file line " + std::to_string(line_no) + ": expected " +
                             std::to_string(k) + " coordinates, got " + std::to_string(p.size()));
        }
        points.push_back(std::move(p));
    }
    if (!have_header) throw ParseError("points file is missing the 'k=<k>' header");
    if (points.empty()) throw ParseError("points file contains no points");
    return points;
}

void write_points(std::ostream& out, const std::vector<Point>& points) {
    if (points.empty()) throw InvalidInputError("no points to write");
    out << "k=" << points[0].size() << "\n";
    for (const Point& p : points) {
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (j) out << ", ";
            out << p[j].str();
        }
        out << "\n";
    }
}

std::vector<Point> read_points_file(const std::string& path) {
    std::ifstream in = open_input(path);
    return read_points(in);
}

void write_points_file(const std::string& path, const std::vector<Point>& points) {
    std::ofstream out = open_output(path);
    write_points(out, points);
}

FunctionBasis read_basis_path(const std::string& path) {
    std::ifstream in = open_input(path);
    return read_basis_file(in, "file:" + path);
}

SetSystem read_set_system_file(const std::string& path) {
    std::ifstream in = open_input(path);
    return SetSystem::read(in);
}

void write_set_system_file(const std::string& path, const SetSystem& s) {
    std::ofstream out = open_output(path);
    s.write(out);
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out = open_output(path);
    out << content;
}

}  // namespace vcmax
