#include "graph_input.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace triquad::cli {

namespace {

std::vector<std::string> read_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

}  // namespace

std::vector<std::string> read_input_lines(const std::string& input) {
    if (input == "-") return read_lines(std::cin);
    std::error_code ec;
    if (std::filesystem::is_regular_file(input, ec)) {
        std::ifstream file(input);
        if (!file) throw std::runtime_error("cannot open input file: " + input);
        return read_lines(file);
    }
    return {input};
}

}  // namespace triquad::cli
