#include "bifnet/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

namespace bifnet {

namespace {

[[noreturn]] void fail(const std::string& name, long line, const std::string& message) {
  throw std::runtime_error(name + ":" + std::to_string(line) + ": " + message);
}

bool parse_long(const std::string& token, long long& out) {
  const char* begin = token.data();
  const char* end = begin + token.size();
  const auto r = std::from_chars(begin, end, out);
  return r.ec == std::errc() && r.ptr == end;
}

bool parse_double(const std::string& token, double& out) {
  const char* begin = token.data();
  const char* end = begin + token.size();
  const auto r = std::from_chars(begin, end, out);
  return r.ec == std::errc() && r.ptr == end;
}

// Expects "key=<integer>", returns the integer.
bool parse_header_field(const std::string& token, const std::string& key, long long& out) {
  const std::string prefix = key + "=";
  if (token.rfind(prefix, 0) != 0) return false;
  return parse_long(token.substr(prefix.size()), out);
}

}  // namespace

TemporalSequence read_temporal(std::istream& in, const std::string& name) {
  std::string line;
  long line_no = 0;

  long long n = 0;
  long long steps = 0;
  bool have_header = false;
  std::vector<Matrix> weights;
  std::set<std::tuple<long long, int, int>> seen;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line);
    std::string token;
    std::vector<std::string> tokens;
    while (ss >> token) tokens.push_back(token);
    if (tokens.empty()) continue;

    if (tokens[0][0] == '#') {
      if (have_header) continue;  // later comment lines are ignored
      if (tokens.size() == 3 && tokens[0] == "#" &&
          parse_header_field(tokens[1], "nodes", n) &&
          parse_header_field(tokens[2], "steps", steps)) {
        if (n < 1) fail(name, line_no, "header: nodes must be >= 1");
        if (steps < 1) fail(name, line_no, "header: steps must be >= 1");
        have_header = true;
        weights.assign(static_cast<std::size_t>(steps),
                       Matrix::Zero(static_cast<Index>(n), static_cast<Index>(n)));
        continue;
      }
      fail(name, line_no, "malformed header, expected `# nodes=N steps=T`");
    }

    if (!have_header) fail(name, line_no, "missing `# nodes=N steps=T` header");
    if (tokens.size() < 3 || tokens.size() > 4) {
      fail(name, line_no, "expected `t u v [w]`");
    }
    long long t = 0;
    long long u = 0;
    long long v = 0;
    double w = 1.0;
    if (!parse_long(tokens[0], t)) fail(name, line_no, "time step is not an integer");
    if (!parse_long(tokens[1], u) || !parse_long(tokens[2], v)) {
      fail(name, line_no, "node index is not an integer");
    }
    if (tokens.size() == 4 && !parse_double(tokens[3], w)) {
      fail(name, line_no, "weight is not a number");
    }
    if (t < 0 || t >= steps) fail(name, line_no, "time step out of range [0, steps)");
    if (u < 0 || u >= n || v < 0 || v >= n) {
      fail(name, line_no, "node index out of range [0, nodes)");
    }
    if (u == v) fail(name, line_no, "self-loop rejected");
    if (!(w > 0.0)) fail(name, line_no, "weight must be positive");

    const int a = static_cast<int>(std::min(u, v));
    const int b = static_cast<int>(std::max(u, v));
    if (!seen.emplace(t, a, b).second) {
      fail(name, line_no, "duplicate record for (t, u, v)");
    }
    Matrix& m = weights[static_cast<std::size_t>(t)];
    m(a, b) = w;
    m(b, a) = w;
  }
  if (!have_header) fail(name, std::max(line_no, 1L), "missing `# nodes=N steps=T` header");

  std::vector<Graph> graphs;
  std::vector<long> timestamps;
  graphs.reserve(weights.size());
  for (std::size_t k = 0; k < weights.size(); ++k) {
    graphs.emplace_back(static_cast<Index>(n), std::move(weights[k]));
    timestamps.push_back(static_cast<long>(k));
  }
  return TemporalSequence(std::move(graphs), std::move(timestamps));
}

TemporalSequence read_temporal(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open for reading");
  return read_temporal(in, path);
}

void write_temporal(const TemporalSequence& seq, const std::string& path) {
  for (std::size_t k = 0; k < seq.length(); ++k) {
    if (seq.timestamp(k) != static_cast<long>(k)) {
      throw std::invalid_argument("write_temporal: timestamps must be 0..steps-1");
    }
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  out << "# nodes=" << seq.node_count() << " steps=" << seq.length() << "\n";
  for (std::size_t k = 0; k < seq.length(); ++k) {
    const Graph& g = seq.at(k);
    for (const auto& [u, v] : g.edges()) {
      out << seq.timestamp(k) << ' ' << u << ' ' << v << ' '
          << format_double(g.weight(u, v)) << "\n";
    }
  }
  if (!out) throw std::runtime_error(path + ": write failed");
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  for (std::size_t j = 0; j < header.size(); ++j) {
    out << (j ? "," : "") << header[j];
  }
  out << "\n";
  for (const auto& row : rows) {
    if (row.size() != header.size()) {
      throw std::invalid_argument("write_csv: row width does not match header");
    }
    for (std::size_t j = 0; j < row.size(); ++j) {
      out << (j ? "," : "") << format_double(row[j]);
    }
    out << "\n";
  }
  if (!out) throw std::runtime_error(path + ": write failed");
}

void write_text(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  out << content;
  if (!out) throw std::runtime_error(path + ": write failed");
}

}  // namespace bifnet
