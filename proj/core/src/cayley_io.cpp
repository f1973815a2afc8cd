#include "crlen/cayley_io.hpp"

#include <fstream>
#include <sstream>

namespace crlen {

namespace {

std::string next_content_line(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;  // skip blank lines
    if (line[start] == '#') continue;          // skip comments
    return line;
  }
  return {};
}

std::vector<int> parse_ints(const std::string& line) {
  std::istringstream iss(line);
  std::vector<int> out;
  int v;
  while (iss >> v) out.push_back(v);
  return out;
}

}  // namespace

Semigroup read_cayley(std::istream& in, bool validate_associativity) {
  std::string header = next_content_line(in);
  if (header.empty()) fail(ErrorCode::parse_error, "missing order line");
  std::istringstream hs(header);
  int n = -1;
  if (!(hs >> n) || n < 0) {
    fail(ErrorCode::parse_error, "bad order line: '" + header + "'");
  }

  std::vector<std::vector<Elem>> rows;
  rows.reserve(n);
  for (int i = 0; i < n; ++i) {
    std::string line = next_content_line(in);
    if (line.empty()) {
      fail(ErrorCode::parse_error,
           "expected " + std::to_string(n) + " table rows, got " +
               std::to_string(i));
    }
    rows.push_back(parse_ints(line));
  }

  std::vector<std::string> labels;
  std::string tail = next_content_line(in);
  if (!tail.empty()) {
    // strip trailing whitespace for the keyword check
    size_t end = tail.find_last_not_of(" \t\r");
    if (tail.substr(0, end + 1) != "labels:") {
      fail(ErrorCode::parse_error, "unexpected trailing line: '" + tail + "'");
    }
    std::string label;
    while (std::getline(in, label)) {
      if (!label.empty() && label.back() == '\r') label.pop_back();
      labels.push_back(label);
      if (static_cast<int>(labels.size()) == n) break;
    }
    if (static_cast<int>(labels.size()) != n) {
      fail(ErrorCode::parse_error, "labels block has " +
                                       std::to_string(labels.size()) +
                                       " entries, expected " +
                                       std::to_string(n));
    }
  }
  return build_from_cayley(rows, std::move(labels), validate_associativity);
}

Semigroup read_cayley_file(const std::string& path,
                           bool validate_associativity) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::parse_error, "cannot open '" + path + "'");
  return read_cayley(in, validate_associativity);
}

void write_cayley(std::ostream& out, const Semigroup& s) {
  const int n = s.size();
  out << n << "\n";
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (b) out << ' ';
      out << s.product(a, b);
    }
    out << "\n";
  }
  out << "labels:\n";
  for (Elem a = 0; a < n; ++a) out << s.label(a) << "\n";
}

void write_cayley_file(const std::string& path, const Semigroup& s) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::parse_error, "cannot open '" + path + "'");
  write_cayley(out, s);
}

std::vector<Transformation> read_transformations(std::istream& in) {
  std::string header = next_content_line(in);
  if (header.empty()) fail(ErrorCode::parse_error, "missing degree line");
  std::istringstream hs(header);
  int m = -1;
  if (!(hs >> m) || m <= 0) {
    fail(ErrorCode::parse_error, "bad degree line: '" + header + "'");
  }
  std::vector<Transformation> gens;
  for (std::string line = next_content_line(in); !line.empty();
       line = next_content_line(in)) {
    std::vector<int> images = parse_ints(line);
    if (images.size() != static_cast<size_t>(m)) {
      fail(ErrorCode::parse_error,
           "generator line has " + std::to_string(images.size()) +
               " images, expected " + std::to_string(m));
    }
    gens.push_back(Transformation{std::move(images)});
  }
  if (gens.empty()) fail(ErrorCode::empty_generator_set, "no generator lines");
  return gens;
}

std::vector<Transformation> read_transformations_file(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::parse_error, "cannot open '" + path + "'");
  return read_transformations(in);
}

Semigroup load_semigroup_file(const std::string& path,
                              bool validate_associativity) {
  auto ends_with = [&](const std::string& suffix) {
    return path.size() >= suffix.size() &&
           path.compare(path.size() - suffix.size(), suffix.size(), suffix) ==
               0;
  };
  if (ends_with(".gens") || ends_with(".trans")) {
    return closure_from_transformations(read_transformations_file(path));
  }
  return read_cayley_file(path, validate_associativity);
}

}  // namespace crlen
