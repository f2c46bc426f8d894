#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ffactor/graph.hpp"

namespace ffactor {

/// A graph together with its degree function.
struct Instance {
  Graph graph;
  DegreeSpec f;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Text format:
//   p ffactor <n> <m>
//   e <u> <v>            (0-based, m lines)
//   f <v> <value>        (optional per vertex)
//   default-f <value>    (fallback for vertices without an f line)
// Lines starting with 'c' and blank lines are ignored.
inline Instance parse_instance(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  std::optional<int> n;
  long declared_m = 0;
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::optional<int>> f_values;
  std::optional<int> default_f;

  auto read_int = [&](std::istringstream& fields, const char* what) {
    long long value = 0;
    if (!(fields >> value)) throw ParseError(line_no, std::string("expected integer ") + what);
    if (value < INT32_MIN || value > INT32_MAX) throw ParseError(line_no, std::string(what) + " out of range");
    return static_cast<int>(value);
  };
  auto check_vertex = [&](int v) {
    if (v < 0 || v >= *n) {
      throw ParseError(line_no, "vertex " + std::to_string(v) + " out of range for n = " + std::to_string(*n));
    }
  };

  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::istringstream fields(raw);
    std::string tag;
    if (!(fields >> tag) || tag[0] == 'c') continue;
    if (tag == "p") {
      if (n) throw ParseError(line_no, "duplicate header");
      std::string kind;
      if (!(fields >> kind) || kind != "ffactor") throw ParseError(line_no, "header must read 'p ffactor <n> <m>'");
      const int nn = read_int(fields, "n");
      declared_m = read_int(fields, "m");
      if (nn < 0 || declared_m < 0) throw ParseError(line_no, "negative size in header");
      n = nn;
      f_values.assign(static_cast<std::size_t>(nn), std::nullopt);
    } else if (!n) {
      throw ParseError(line_no, "'" + tag + "' line before the header");
    } else if (tag == "e") {
      const int u = read_int(fields, "u");
      const int v = read_int(fields, "v");
      check_vertex(u);
      check_vertex(v);
      if (u == v) throw ParseError(line_no, "loop edge at vertex " + std::to_string(u));
      pairs.emplace_back(u, v);
    } else if (tag == "f") {
      const int v = read_int(fields, "vertex");
      const int value = read_int(fields, "value");
      check_vertex(v);
      if (value < 0) throw ParseError(line_no, "negative f value");
      auto& slot = f_values[static_cast<std::size_t>(v)];
      if (slot) throw ParseError(line_no, "duplicate f assignment for vertex " + std::to_string(v));
      slot = value;
    } else if (tag == "default-f") {
      const int value = read_int(fields, "value");
      if (value < 0) throw ParseError(line_no, "negative default-f value");
      if (default_f) throw ParseError(line_no, "duplicate default-f line");
      default_f = value;
    } else {
      throw ParseError(line_no, "unknown line type '" + tag + "'");
    }
    std::string extra;
    if (fields >> extra) throw ParseError(line_no, "trailing text '" + extra + "'");
  }

  if (!n) throw ParseError(line_no, "missing 'p ffactor' header");
  if (static_cast<long>(pairs.size()) != declared_m) {
    throw ParseError(line_no, "header declares " + std::to_string(declared_m) + " edges but " +
                                  std::to_string(pairs.size()) + " were given");
  }
  std::vector<int> values(static_cast<std::size_t>(*n));
  for (int v = 0; v < *n; ++v) {
    const auto& slot = f_values[static_cast<std::size_t>(v)];
    if (!slot && !default_f) throw ParseError(line_no, "no f value for vertex " + std::to_string(v) + " and no default-f");
    values[static_cast<std::size_t>(v)] = slot ? *slot : *default_f;
  }
  return {Graph::from_edges(*n, std::span<const std::pair<int, int>>(pairs)), DegreeSpec(std::move(values))};
}

/// Normal form: header, sorted edges, then one f line per vertex.
inline std::string serialize_instance(const Graph& g, const DegreeSpec& f) {
  f.check_against(g);
  std::ostringstream out;
  out << "p ffactor " << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
  for (int v = 0; v < g.order(); ++v) out << "f " << v << ' ' << f[v] << '\n';
  return out.str();
}

inline std::string serialize_instance(const Instance& inst) { return serialize_instance(inst.graph, inst.f); }

}  // namespace ffactor
